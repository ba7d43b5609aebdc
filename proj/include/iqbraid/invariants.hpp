#pragma once

#include "iqbraid/catalog.hpp"

#include <string>

namespace iqbraid {

struct InvariantOutcome {
    long checked = 0;
    long failed = 0;
    std::string firstFailure;
    bool ok() const { return failed == 0; }
    void fail(const std::string& what);
};

// Mass formula on every dimension vector of total <= cap.
InvariantOutcome checkMassCertificates(Catalog& cat, int cap);

// For all classes M, N with |M| + |N| <= cap and every class L of dimension
// dim M + dim N: |Ext^1(M,N)_L| = F^L_{MN} |Aut M| |Aut N| |Hom(M,N)| / |Aut L|,
// with the left side counted by enumerating Ext^1 and F by subrepresentations.
InvariantOutcome checkRiedtmannPeng(Catalog& cat, int cap);

// ell a sink of q: homDim(F^-(M), N) = homDim(M, F^+(N)) over all pairs of
// Λ^ı-module classes with |M| + |N| <= cap.
InvariantOutcome checkAdjunction(const IQuiver& q, int ell, int p, int cap);

// ell a sink of q: every indecomposable kQ-module X with |X| <= cap, X not
// S_ell or S_{tau ell}, has dim F^+(X) = s_ell(dim X) (bold reflection).
InvariantOutcome checkDimensionLaw(const IQuiver& q, int ell, int p, int cap);

// q with i, tau i sources and c_{i,tau i} = 0, j a third vertex. For all
// m1, n1, m2, n2 <= mmax, d, e and M (kQ-module with sub S_j and semisimple
// top at i, tau i): the count of extension classes of S_i^{m1}+S_ti^{n1} by
// S_j+S_i^{m2}+S_ti^{n2} whose middle term is an extension of K_i^d+K_ti^e by M
// factors as the product of the two restricted counts. "Extension of X by M"
// means equality of reduced classes [L] = [M + X].
InvariantOutcome checkExtFactorization(const IQuiver& q, int i, int j, int p, int mmax);

// |Ext^1(S_i^{m1}, S_ti^{n2})_{K_i^d + S_i^{m1-d} + S_ti^{n2-d}}| in the
// quasi-split rank-1 ıquiver, by enumeration and in closed form.
Int rankCountBrute(int p, int m1, int n2, int d);
Int rankCountClosed(int p, int m1, int n2, int d);

// Restriction to the full subquiver on `keep` (other vertices set to 0).
Rep restrictToVertices(const BarQuiver& bq, const Rep& m, const std::vector<int>& keep);

}  // namespace iqbraid
