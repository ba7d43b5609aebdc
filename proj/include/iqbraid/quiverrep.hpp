#pragma once

#include "iqbraid/exactnum.hpp"
#include "iqbraid/fp.hpp"

#include <functional>
#include <string>
#include <vector>

namespace iqbraid {

struct Arrow {
    int src = 0;
    int tgt = 0;
};

// Quiver with involution. Arrows between a given ordered pair of vertices are
// numbered in list order; tau sends the k-th arrow s->t to the k-th arrow
// tau(s)->tau(t).
struct IQuiver {
    int n = 0;
    std::vector<Arrow> arrows;
    std::vector<int> tau;
    std::vector<int> tauArrow;
    std::vector<std::string> names;

    // c_ij of the symmetric Cartan matrix read off from the arrows.
    int cartan(int i, int j) const;
    bool isSink(int v) const;
    bool isSource(int v) const;
    std::string describe() const;
};

// Builds an IQuiver, filling tauArrow; throws std::invalid_argument naming
// the violated condition.
IQuiver makeIQuiver(int n, const std::vector<Arrow>& arrows, const std::vector<int>& tau,
                    std::vector<std::string> names = {});

// Standard small ıquivers. Vertex 0 is i; for quasi-split shapes vertex 1 is
// tau(i). `iSink` selects the orientation with i a sink (arrows j -> i).
IQuiver splitRank1();
IQuiver quasiSplitRank1();
IQuiver splitRank2(int a, bool iSink = true);
// vertices i, tau i, j, tau j; a arrows j->i and tau j->tau i; b arrows
// j->tau i and tau j->i (orientation reversed when !iSink)
IQuiver quasiSplitRank2(int a, int b, bool iSink = true);
// vertices i, tau i, j with tau j = j; a arrows j->i and j->tau i
IQuiver quasiSplitRank2Fixed(int a, bool iSink = true);

// Arrows of Qbar are the arrows of Q followed by eps_v : v -> tau v.
struct PathTerm {
    int coef = 1;
    std::vector<int> arrows;  // applied first to last
};
struct Relation {
    int src = 0, tgt = 0;
    std::vector<PathTerm> terms;
};

struct BarQuiver {
    IQuiver base;
    std::vector<Arrow> arrows;
    std::vector<Relation> rels;

    int n() const { return base.n; }
    int numArrows() const { return int(arrows.size()); }
    int numBase() const { return int(base.arrows.size()); }
    int eps(int v) const { return numBase() + v; }
    bool isEps(int a) const { return a >= numBase(); }
};

BarQuiver buildBarQuiver(const IQuiver& iq);

// Reverses all arrows incident to vertices in `verts`; tau is kept.
IQuiver reflectQuiver(const IQuiver& q, const std::vector<int>& verts);

using DimVec = std::vector<int>;

struct Rep {
    int q = 2;
    DimVec dim;
    std::vector<Mat> mats;  // one per Qbar arrow, dim[tgt] x dim[src]

    int total() const;
};

Rep zeroRep(const BarQuiver& bq, int q, const DimVec& d);
Rep simpleRep(const BarQuiver& bq, int q, int v);
// K_v: k[eps]/(eps^2) when v = tau v, the eps-string v -> tau v otherwise.
Rep genSimpleRep(const BarQuiver& bq, int q, int v);
enum class Special { Simple, GenSimple };
Rep specialModule(const BarQuiver& bq, int q, Special which, int v);

Rep directSum(const Rep& a, const Rep& b);
Rep directPower(const BarQuiver& bq, const Rep& a, int k);
bool satisfiesRelations(const BarQuiver& bq, const Rep& m);
bool isNilpotent(const BarQuiver& bq, const Rep& m);
bool isKQModule(const BarQuiver& bq, const Rep& m);
// Drops the eps-action (restriction to kQ).
Rep restrictToKQ(const BarQuiver& bq, const Rep& m);
Mat pathMatrix(const Rep& m, const std::vector<int>& path, int srcDim);

// Hom as a list of tuples (one matrix per vertex).
using Morphism = std::vector<Mat>;
std::vector<Morphism> homBasis(const BarQuiver& bq, const Rep& m, const Rep& n, bool kqOnly = false);
int homDim(const BarQuiver& bq, const Rep& m, const Rep& n, bool kqOnly = false);

// Ext^1(m, n): extensions 0 -> n -> L -> m -> 0 with L_a = [[n_a, X_a], [0, m_a]].
struct ExtSpace {
    int zDim = 0;
    int bDim = 0;
    // Representatives of a basis of Z/B, each a list of X_a (one per arrow).
    std::vector<std::vector<Mat>> basis;
    int dim() const { return int(basis.size()); }
};
ExtSpace extSpace(const BarQuiver& bq, const Rep& m, const Rep& n, bool kqOnly = false);
int extDim(const BarQuiver& bq, const Rep& m, const Rep& n, bool kqOnly = false);
Rep middleTerm(const Rep& m, const Rep& n, const std::vector<Mat>& x);
// Calls f(L) for every element of Ext^1(m, n), one representative per class.
void forEachExtension(const BarQuiver& bq, const Rep& m, const Rep& n, bool kqOnly,
                      const std::function<void(const Rep&)>& f);

Int glOrder(int n, int q);
Int glOrder(const DimVec& d, int q);
Int autOrder(const BarQuiver& bq, const Rep& m, bool kqOnly = false);

// Cheap isomorphism invariants used to bucket candidates.
std::vector<int> invariantProfile(const BarQuiver& bq, const Rep& m, bool kqOnly = false);
bool isIsomorphic(const BarQuiver& bq, const Rep& m, const Rep& n, bool kqOnly = false);

// Euler form of Q on dimension vectors.
int eulerQ(const IQuiver& q, const DimVec& x, const DimVec& y);
// (x, y)_Q = <x,y>_Q + <y,x>_Q
int symEulerQ(const IQuiver& q, const DimVec& x, const DimVec& y);
// <K_i, M> = <S_i, res M>_Q and <M, K_i> = <res M, S_{tau i}>_Q
int eulerKM(const IQuiver& q, int i, const DimVec& m);
int eulerMK(const IQuiver& q, const DimVec& m, int i);
DimVec unitVec(int n, int v);
// res of K_alpha: alpha + tau(alpha)
DimVec resK(const IQuiver& q, const DimVec& alpha);
DimVec tauVec(const IQuiver& q, const DimVec& alpha);

// Hall number: submodules U of L with U ~ n and L/U ~ m.
long hallNumber(const BarQuiver& bq, const Rep& l, const Rep& m, const Rep& n, bool kqOnly = false);
// |Ext^1(m, n)_L| / |Hom(m, n)|
Rat extMiddleCount(const BarQuiver& bq, const Rep& m, const Rep& n, const Rep& l, bool kqOnly = false);
// Calls f(U) for every subrepresentation U of l with dimension vector d, as a
// list of column-basis matrices per vertex.
void forEachSubrep(const BarQuiver& bq, const Rep& l, const DimVec& d,
                   const std::function<void(const std::vector<Mat>&)>& f);
Rep subRep(const BarQuiver& bq, const Rep& l, const std::vector<Mat>& basis);
Rep quotientRep(const BarQuiver& bq, const Rep& l, const std::vector<Mat>& basis);

// Weyl-group action: s_i(x) = x - (sum_j c_ij x_j) alpha_i, and the bold
// reflection s_i or s_i s_{tau i}.
DimVec reflectDim(const IQuiver& q, int i, const DimVec& x);
DimVec boldReflectDim(const IQuiver& q, int i, const DimVec& x);

// Reflection functors at ell (with tau ell). plus: ell a sink of bq.base,
// result over the reflected bar quiver; minus: ell a source.
Rep reflectPlus(const BarQuiver& bq, const BarQuiver& target, int ell, const Rep& m);
Rep reflectMinus(const BarQuiver& bq, const BarQuiver& target, int ell, const Rep& m);
enum class ReflectDir { Plus, Minus };
Rep reflect(const BarQuiver& bq, const BarQuiver& target, int ell, ReflectDir dir, const Rep& m);

// Homology of the eps-complex: H_v = ker(eps_v) / im(eps_{tau v}), a kQ-module,
// and a_v = rank(eps_v).
struct EpsHomology {
    Rep h;
    DimVec rankEps;
};
EpsHomology epsHomology(const BarQuiver& bq, const Rep& l);

// Multiplicity of S_v as a direct summand.
int simpleSummandMultiplicity(const BarQuiver& bq, const Rep& m, int v, bool kqOnly = false);

}  // namespace iqbraid
