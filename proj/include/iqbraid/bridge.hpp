#pragma once

#include "iqbraid/ihall.hpp"
#include "iqbraid/iqg.hpp"

#include <map>
#include <vector>

namespace iqbraid {

// The homomorphism from the universal ıquantum group to the ıHall algebra at
// v = sqrt(q):
//   B_i -> -1/(q-1) [S_i] (i a representative), v/(q-1) [S_i] otherwise;
//   k_j -> -q^{-1} [K_j] (j = tau j), v^{-c_{j,tau j}/2} [K_j] otherwise.
// Word images are cached by prefix.
class PsiTilde {
public:
    PsiTilde(HallCtx& ctx, CartanData cd);

    HallCtx& ctx() { return ctx_; }
    const CartanData& cartan() const { return cd_; }

    IHallElem gen(int i);
    // scalar with k^alpha -> scalar * [K]^alpha
    QSqrt torusScalar(const std::vector<int>& alpha) const;
    IHallElem torus(const std::vector<int>& alpha) const;
    const IHallElem& word(const std::vector<int>& w);
    IHallElem eval(const IqgExpr& e);
    void clearCache() { prefix_.clear(); }

private:
    HallCtx& ctx_;
    CartanData cd_;
    std::map<std::vector<int>, IHallElem> prefix_;
};

IHallElem psiTildeEval(const IqgExpr& e, HallCtx& ctx, const CartanData& cd);

// Letter-by-letter check of k_i^{pow} B_l = v^{pow (c_{tau i,l} - c_{il})} B_l k_i^{pow}
// on the Hall side (pow = 1 or -1), and of the torus commuting.
bool hallTorusBRelation(PsiTilde& psi, int i, int l, int pow);
bool hallTorusCommute(PsiTilde& psi, int i, int j);

}  // namespace iqbraid
