#include "iqbraid/bridge.hpp"

#include <stdexcept>

namespace iqbraid {

PsiTilde::PsiTilde(HallCtx& ctx, CartanData cd) : ctx_(ctx), cd_(std::move(cd))
{
    const IQuiver& q = ctx_.base();
    if (q.n != cd_.n)
        throw std::invalid_argument("PsiTilde: rank mismatch between quiver and Cartan data");
    for (int i = 0; i < q.n; ++i) {
        if (q.tau[i] != cd_.tau[i])
            throw std::invalid_argument("PsiTilde: involution mismatch");
        for (int j = 0; j < q.n; ++j)
            if (q.cartan(i, j) != cd_.c[i][j])
                throw std::invalid_argument("PsiTilde: Cartan matrix mismatch");
    }
}

IHallElem PsiTilde::gen(int i)
{
    QSqrt qm1 = ctx_.scalar(ctx_.q() - 1);
    QSqrt c = cd_.rep[i] ? ctx_.scalar(-1) / qm1 : ctx_.vpow(1) / qm1;
    return ctx_.simple(i).scaled(c);
}

QSqrt PsiTilde::torusScalar(const std::vector<int>& alpha) const
{
    QSqrt r = ctx_.scalar(1);
    for (int j = 0; j < cd_.n; ++j) {
        if (!alpha[j])
            continue;
        QSqrt f = cd_.tau[j] == j ? ctx_.scalar(Rat(-1, ctx_.q())) : ctx_.vpow(-cd_.c[j][cd_.tau[j]] / 2);
        if (alpha[j] < 0)
            f = f.inverse();
        for (int t = 0; t < std::abs(alpha[j]); ++t)
            r *= f;
    }
    return r;
}

IHallElem PsiTilde::torus(const std::vector<int>& alpha) const
{
    return ctx_.kpow(alpha).scaled(torusScalar(alpha));
}

const IHallElem& PsiTilde::word(const std::vector<int>& w)
{
    auto it = prefix_.find(w);
    if (it != prefix_.end())
        return it->second;
    IHallElem val;
    if (w.empty()) {
        val = ctx_.one();
    } else {
        std::vector<int> head(w.begin(), w.end() - 1);
        IHallElem h = word(head);
        val = ctx_.mul(h, gen(w.back()));
    }
    return prefix_.emplace(w, std::move(val)).first->second;
}

IHallElem PsiTilde::eval(const IqgExpr& e)
{
    IHallElem r;
    for (auto& [key, c] : e.terms()) {
        QSqrt coef = ctx_.eval(c) * torusScalar(key.k);
        r += word(key.word).shiftedK(key.k).scaled(coef);
    }
    return r;
}

IHallElem psiTildeEval(const IqgExpr& e, HallCtx& ctx, const CartanData& cd)
{
    PsiTilde p(ctx, cd);
    return p.eval(e);
}

bool hallTorusBRelation(PsiTilde& psi, int i, int l, int pow)
{
    HallCtx& ctx = psi.ctx();
    const CartanData& cd = psi.cartan();
    std::vector<int> a(cd.n, 0);
    a[i] = pow;
    IHallElem k = psi.torus(a);
    IHallElem b = psi.gen(l);
    IHallElem lhs = ctx.mul(k, b);
    IHallElem rhs = ctx.mul(b, k).scaled(ctx.vpow(long(pow) * (cd.c[cd.tau[i]][l] - cd.c[i][l])));
    return lhs == rhs;
}

bool hallTorusCommute(PsiTilde& psi, int i, int j)
{
    HallCtx& ctx = psi.ctx();
    std::vector<int> a(psi.cartan().n, 0), b(psi.cartan().n, 0);
    a[i] = 1;
    b[j] = 1;
    IHallElem x = psi.torus(a), y = psi.torus(b);
    return ctx.mul(x, y) == ctx.mul(y, x);
}

}  // namespace iqbraid
