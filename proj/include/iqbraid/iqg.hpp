#pragma once

#include "iqbraid/exactnum.hpp"
#include "iqbraid/quiverrep.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace iqbraid {

struct CartanData {
    int n = 0;
    std::vector<std::vector<int>> c;
    std::vector<int> tau;
    // p_i for tau-fixed i; ignored elsewhere
    std::vector<int> parity;
    // orbit representatives (I_tau); default: the smaller index of each orbit
    std::vector<bool> rep;

    int cij(int i, int j) const { return c[i][j]; }
    // c_{i,tau i} in {0, 2}
    bool finiteType(int i) const;
    // throws std::invalid_argument naming the violated condition
    void validate() const;
};

CartanData makeCartan(std::vector<std::vector<int>> c, std::vector<int> tau, std::vector<int> parity = {});
CartanData cartanFromQuiver(const IQuiver& q, std::vector<int> parity = {});

struct IqgKey {
    std::vector<int> word;
    std::vector<int> k;
    auto operator<=>(const IqgKey&) const = default;
};

// Normal-ordered element of the universal ıquantum group: sum of
// coeff * B_{w1}...B_{wn} k^{k}.
class IqgExpr {
public:
    using Map = std::map<IqgKey, RatFunc>;

    IqgExpr() = default;
    static IqgExpr term(std::vector<int> word, std::vector<int> k, const RatFunc& c);
    static IqgExpr scalar(int n, const RatFunc& c);
    static IqgExpr B(int n, int i);
    static IqgExpr K(int n, int i, int power = 1);
    static IqgExpr torus(const std::vector<int>& k, const RatFunc& c = RatFunc(1));

    const Map& terms() const { return t_; }
    bool isZero() const { return t_.empty(); }
    RatFunc coeff(const IqgKey& key) const;
    void add(const IqgKey& key, const RatFunc& c);
    int maxLength() const;

    IqgExpr& operator+=(const IqgExpr& o);
    IqgExpr& operator-=(const IqgExpr& o);
    IqgExpr scaled(const RatFunc& c) const;

    friend bool operator==(const IqgExpr& a, const IqgExpr& b) { return a.t_ == b.t_; }

    // "B3 B1 k{1:-1,2:2}" per term, coefficient in front
    std::string str() const;

private:
    Map t_;
};

IqgExpr operator+(IqgExpr a, const IqgExpr& b);
IqgExpr operator-(IqgExpr a, const IqgExpr& b);

// exponent e with k^{k} B_w = v^e B_w k^{k}
long torusPassExp(const CartanData& cd, const std::vector<int>& k, const std::vector<int>& word);

IqgExpr mulNormalOrder(const CartanData& cd, const IqgExpr& x, const IqgExpr& y);
IqgExpr mulNormalOrder(const CartanData& cd, const std::vector<IqgExpr>& factors);
IqgExpr power(const CartanData& cd, const IqgExpr& x, int m);

// A word in the raw generators, for the confluence test: B_idx or k_idx^pow.
struct Letter {
    bool isK = false;
    int idx = 0;
    int pow = 1;
};
// Normal-orders a letter sequence by adjacent swaps (k B -> v^. B k) taken in
// a pseudo-random order from `seed`.
IqgExpr normalOrderLetters(const CartanData& cd, std::vector<Letter> letters, const RatFunc& c, std::uint64_t seed);

// Balanced: factors B_i^2 - v k_i [x]^2 (psi-invariant, matches the Hall
// side). Literal: B_i^2 - k_i [x]^2.
enum class IDivConvention { Balanced, Literal };
// parity < 0 uses cd.parity[i]; the plain divided power when i != tau i
IqgExpr dividedPower(const CartanData& cd, int i, int m, int parity = -1,
                     IDivConvention conv = IDivConvention::Balanced);

// bar involution: v -> v^{-1}, k_i -> v^{c_{i,tau i}} k_{tau i}, B fixed
IqgExpr applyPsi(const CartanData& cd, const IqgExpr& x);
// anti-involution: reverses words, k_i -> k_{tau i}
IqgExpr applySigma(const CartanData& cd, const IqgExpr& x);

struct TorusMono {
    RatFunc coeff{1};
    std::vector<int> k;
};

// Algebra endomorphism given on generators.
struct GenMap {
    std::string name;
    std::vector<IqgExpr> b;
    std::vector<TorusMono> k;
};

enum class BraidVariant { Primed, DoublePrimed };

GenMap identityMap(const CartanData& cd);
// T'_{i,e} or T''_{i,e}; throws std::invalid_argument unless c_{i,tau i} is 0 or 2
GenMap braidMap(const CartanData& cd, int i, int e, BraidVariant variant,
                IDivConvention conv = IDivConvention::Balanced);
IqgExpr applyGenMap(const CartanData& cd, const GenMap& g, const IqgExpr& x);
// x -> g(h(x))
GenMap composeMaps(const CartanData& cd, const GenMap& g, const GenMap& h);

enum class SerreKind { TorusCommute, TorusB, Commute, TauPair, Serre, ISerre };
std::string serreKindName(SerreKind k);
bool serreApplies(const CartanData& cd, SerreKind kind, int i, int j);
// Left side minus right side, normal-ordered. Both torus kinds normal-order
// to zero; they are checked letter by letter on the Hall side.
IqgExpr serreExpr(const CartanData& cd, SerreKind kind, int i, int j,
                  IDivConvention conv = IDivConvention::Balanced);

struct SerreInstance {
    SerreKind kind;
    int i = 0, j = 0;
    IqgExpr expr;
};
std::vector<SerreInstance> serreRelations(const CartanData& cd, IDivConvention conv = IDivConvention::Balanced);

struct ConjugationCheck {
    std::string identity;
    std::string generator;
    bool holds = false;
    IqgExpr lhs, rhs;
};
// psi T''_{i,e} psi = T''_{i,-e} and T'_{i,e} = sigma T''_{i,-e} sigma on
// every generator B_j, k_j.
std::vector<ConjugationCheck> checkConjugations(const CartanData& cd, int i, int e,
                                                IDivConvention conv = IDivConvention::Balanced);

}  // namespace iqbraid
