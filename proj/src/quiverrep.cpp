#include "iqbraid/quiverrep.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace iqbraid {

int IQuiver::cartan(int i, int j) const
{
    if (i == j)
        return 2;
    int c = 0;
    for (auto& a : arrows)
        if ((a.src == i && a.tgt == j) || (a.src == j && a.tgt == i))
            --c;
    return c;
}

bool IQuiver::isSink(int v) const
{
    for (auto& a : arrows)
        if (a.src == v)
            return false;
    return true;
}

bool IQuiver::isSource(int v) const
{
    for (auto& a : arrows)
        if (a.tgt == v)
            return false;
    return true;
}

std::string IQuiver::describe() const
{
    std::ostringstream os;
    os << "n=" << n << " tau=";
    for (int v = 0; v < n; ++v)
        os << (v ? "," : "") << tau[v];
    os << " arrows=";
    for (size_t k = 0; k < arrows.size(); ++k)
        os << (k ? "," : "") << arrows[k].src << ">" << arrows[k].tgt;
    return os.str();
}

namespace {

bool hasCycle(int n, const std::vector<Arrow>& arrows, const std::vector<int>& tau)
{
    // cycles of Q other than 2-cycles between i and tau i
    std::vector<std::vector<int>> adj(n);
    for (auto& a : arrows)
        if (!(a.tgt == tau[a.src] && a.src != a.tgt))
            adj[a.src].push_back(a.tgt);
    std::vector<int> state(n, 0);
    std::function<bool(int)> dfs = [&](int v) {
        state[v] = 1;
        for (int w : adj[v]) {
            if (state[w] == 1)
                return true;
            if (state[w] == 0 && dfs(w))
                return true;
        }
        state[v] = 2;
        return false;
    };
    for (int v = 0; v < n; ++v)
        if (state[v] == 0 && dfs(v))
            return true;
    return false;
}

}  // namespace

IQuiver makeIQuiver(int n, const std::vector<Arrow>& arrows, const std::vector<int>& tau,
                    std::vector<std::string> names)
{
    if (n <= 0)
        throw std::invalid_argument("ıquiver: no vertices");
    if (int(tau.size()) != n)
        throw std::invalid_argument("ıquiver: tau has wrong length");
    for (int v = 0; v < n; ++v)
        if (tau[v] < 0 || tau[v] >= n || tau[tau[v]] != v)
            throw std::invalid_argument("ıquiver: tau is not an involution");
    for (auto& a : arrows) {
        if (a.src < 0 || a.src >= n || a.tgt < 0 || a.tgt >= n)
            throw std::invalid_argument("ıquiver: arrow endpoint out of range");
        if (a.src == a.tgt)
            throw std::invalid_argument("ıquiver: loops are not allowed (A1)");
    }
    IQuiver q;
    q.n = n;
    q.arrows = arrows;
    q.tau = tau;
    q.tauArrow.assign(arrows.size(), -1);
    // k-th arrow s->t pairs with k-th arrow tau s -> tau t
    std::map<std::pair<int, int>, std::vector<int>> byPair;
    for (size_t k = 0; k < arrows.size(); ++k)
        byPair[{arrows[k].src, arrows[k].tgt}].push_back(int(k));
    for (auto& [st, ids] : byPair) {
        auto it = byPair.find({tau[st.first], tau[st.second]});
        if (it == byPair.end() || it->second.size() != ids.size())
            throw std::invalid_argument("ıquiver: tau does not preserve arrow multiplicities");
        for (size_t k = 0; k < ids.size(); ++k)
            q.tauArrow[ids[k]] = it->second[k];
    }
    if (hasCycle(n, arrows, tau))
        throw std::invalid_argument("ıquiver: oriented cycle not of the form i -> tau i -> i (A2)");
    for (int v = 0; v < n; ++v)
        if (tau[v] != v && q.cartan(v, tau[v]) % 2 != 0)
            throw std::invalid_argument("ıquiver: c_{i,tau i} must be even");
    if (names.empty())
        for (int v = 0; v < n; ++v)
            names.push_back(std::to_string(v));
    q.names = std::move(names);
    return q;
}

IQuiver splitRank1() { return makeIQuiver(1, {}, {0}, {"i"}); }

IQuiver quasiSplitRank1() { return makeIQuiver(2, {}, {1, 0}, {"i", "ti"}); }

IQuiver splitRank2(int a, bool iSink)
{
    std::vector<Arrow> arr;
    for (int k = 0; k < a; ++k)
        arr.push_back(iSink ? Arrow{1, 0} : Arrow{0, 1});
    return makeIQuiver(2, arr, {0, 1}, {"i", "j"});
}

IQuiver quasiSplitRank2(int a, int b, bool iSink)
{
    std::vector<Arrow> arr;
    auto add = [&](int s, int t) { arr.push_back(iSink ? Arrow{s, t} : Arrow{t, s}); };
    for (int k = 0; k < a; ++k) {
        add(2, 0);
        add(3, 1);
    }
    for (int k = 0; k < b; ++k) {
        add(2, 1);
        add(3, 0);
    }
    return makeIQuiver(4, arr, {1, 0, 3, 2}, {"i", "ti", "j", "tj"});
}

IQuiver quasiSplitRank2Fixed(int a, bool iSink)
{
    std::vector<Arrow> arr;
    for (int k = 0; k < a; ++k) {
        arr.push_back(iSink ? Arrow{2, 0} : Arrow{0, 2});
        arr.push_back(iSink ? Arrow{2, 1} : Arrow{1, 2});
    }
    return makeIQuiver(3, arr, {1, 0, 2}, {"i", "ti", "j"});
}

BarQuiver buildBarQuiver(const IQuiver& iq)
{
    BarQuiver bq;
    bq.base = iq;
    bq.arrows = iq.arrows;
    for (int v = 0; v < iq.n; ++v)
        bq.arrows.push_back({v, iq.tau[v]});
    for (int v = 0; v < iq.n; ++v) {
        // eps_v eps_{tau v}: tau v -> tau v
        Relation r;
        r.src = iq.tau[v];
        r.tgt = iq.tau[v];
        r.terms.push_back({1, {bq.eps(iq.tau[v]), bq.eps(v)}});
        bq.rels.push_back(r);
    }
    for (size_t k = 0; k < iq.arrows.size(); ++k) {
        // alpha: j -> i gives eps_i alpha - tau(alpha) eps_j : j -> tau i
        const Arrow& a = iq.arrows[k];
        Relation r;
        r.src = a.src;
        r.tgt = iq.tau[a.tgt];
        r.terms.push_back({1, {int(k), bq.eps(a.tgt)}});
        r.terms.push_back({-1, {bq.eps(a.src), iq.tauArrow[k]}});
        bq.rels.push_back(r);
    }
    return bq;
}

IQuiver reflectQuiver(const IQuiver& q, const std::vector<int>& verts)
{
    std::vector<Arrow> arr = q.arrows;
    for (auto& a : arr) {
        bool hit = std::find(verts.begin(), verts.end(), a.src) != verts.end() ||
                   std::find(verts.begin(), verts.end(), a.tgt) != verts.end();
        if (hit)
            std::swap(a.src, a.tgt);
    }
    IQuiver r = makeIQuiver(q.n, arr, q.tau, q.names);
    // keep the pairing of the original quiver so arrow indices stay aligned
    r.tauArrow = q.tauArrow;
    return r;
}

int Rep::total() const
{
    int s = 0;
    for (int d : dim)
        s += d;
    return s;
}

Rep zeroRep(const BarQuiver& bq, int q, const DimVec& d)
{
    Rep r;
    r.q = q;
    r.dim = d;
    for (auto& a : bq.arrows)
        r.mats.emplace_back(d[a.tgt], d[a.src]);
    return r;
}

Rep simpleRep(const BarQuiver& bq, int q, int v) { return zeroRep(bq, q, unitVec(bq.n(), v)); }

Rep genSimpleRep(const BarQuiver& bq, int q, int v)
{
    int tv = bq.base.tau[v];
    DimVec d(bq.n(), 0);
    if (tv == v) {
        d[v] = 2;
        Rep r = zeroRep(bq, q, d);
        r.mats[bq.eps(v)].at(1, 0) = 1;
        return r;
    }
    d[v] = d[tv] = 1;
    Rep r = zeroRep(bq, q, d);
    r.mats[bq.eps(v)].at(0, 0) = 1;
    return r;
}

Rep specialModule(const BarQuiver& bq, int q, Special which, int v)
{
    if (v < 0 || v >= bq.n())
        throw std::invalid_argument("specialModule: vertex out of range");
    return which == Special::Simple ? simpleRep(bq, q, v) : genSimpleRep(bq, q, v);
}

Rep directSum(const Rep& a, const Rep& b)
{
    if (a.q != b.q || a.dim.size() != b.dim.size() || a.mats.size() != b.mats.size())
        throw std::invalid_argument("directSum: incompatible representations");
    Rep r;
    r.q = a.q;
    r.dim.resize(a.dim.size());
    for (size_t v = 0; v < a.dim.size(); ++v)
        r.dim[v] = a.dim[v] + b.dim[v];
    for (size_t k = 0; k < a.mats.size(); ++k)
        r.mats.push_back(blockUpper(a.mats[k], Mat(a.mats[k].rows(), b.mats[k].cols()), b.mats[k]));
    return r;
}

Rep directPower(const BarQuiver& bq, const Rep& a, int k)
{
    Rep r = zeroRep(bq, a.q, DimVec(bq.n(), 0));
    for (int i = 0; i < k; ++i)
        r = directSum(r, a);
    return r;
}

Mat pathMatrix(const Rep& m, const std::vector<int>& path, int srcDim)
{
    Mat x = Mat::identity(srcDim);
    for (int a : path)
        x = mul(m.mats[a], x, m.q);
    return x;
}

bool satisfiesRelations(const BarQuiver& bq, const Rep& m)
{
    for (auto& r : bq.rels) {
        Mat acc(m.dim[r.tgt], m.dim[r.src]);
        for (auto& t : r.terms)
            acc = add(acc, scale(pathMatrix(m, t.arrows, m.dim[r.src]), t.coef, m.q), m.q);
        if (!acc.isZero())
            return false;
    }
    return true;
}

namespace {

std::vector<int> offsets(const DimVec& d)
{
    std::vector<int> off(d.size() + 1, 0);
    for (size_t v = 0; v < d.size(); ++v)
        off[v + 1] = off[v] + d[v];
    return off;
}

}  // namespace

bool isNilpotent(const BarQuiver& bq, const Rep& m)
{
    auto off = offsets(m.dim);
    int n = off.back();
    Mat big(n, n);
    for (int k = 0; k < bq.numArrows(); ++k) {
        const Arrow& a = bq.arrows[k];
        for (int i = 0; i < m.dim[a.tgt]; ++i)
            for (int j = 0; j < m.dim[a.src]; ++j)
                big.at(off[a.tgt] + i, off[a.src] + j) = (big.at(off[a.tgt] + i, off[a.src] + j) + m.mats[k].at(i, j)) % m.q;
    }
    Mat p = Mat::identity(n);
    for (int k = 0; k < n; ++k)
        p = mul(p, big, m.q);
    return p.isZero();
}

bool isKQModule(const BarQuiver& bq, const Rep& m)
{
    for (int v = 0; v < bq.n(); ++v)
        if (!m.mats[bq.eps(v)].isZero())
            return false;
    return true;
}

Rep restrictToKQ(const BarQuiver& bq, const Rep& m)
{
    Rep r = m;
    for (int v = 0; v < bq.n(); ++v)
        r.mats[bq.eps(v)] = Mat(m.mats[bq.eps(v)].rows(), m.mats[bq.eps(v)].cols());
    return r;
}

namespace {

int activeArrows(const BarQuiver& bq, bool kqOnly) { return kqOnly ? bq.numBase() : bq.numArrows(); }

// Linear system for Hom(m, n): unknowns f_v (n_v x m_v) row-major.
Mat homSystem(const BarQuiver& bq, const Rep& m, const Rep& n, bool kqOnly, std::vector<int>& off)
{
    int nv = bq.n();
    off.assign(nv + 1, 0);
    for (int v = 0; v < nv; ++v)
        off[v + 1] = off[v] + n.dim[v] * m.dim[v];
    int rows = 0;
    int na = activeArrows(bq, kqOnly);
    for (int k = 0; k < na; ++k)
        rows += n.dim[bq.arrows[k].tgt] * m.dim[bq.arrows[k].src];
    Mat sys(rows, off[nv]);
    int p = m.q;
    int row = 0;
    for (int k = 0; k < na; ++k) {
        int s = bq.arrows[k].src, t = bq.arrows[k].tgt;
        const Mat& na_ = n.mats[k];
        const Mat& ma = m.mats[k];
        for (int r = 0; r < n.dim[t]; ++r)
            for (int c = 0; c < m.dim[s]; ++c, ++row) {
                // (n_a f_s)(r,c) - (f_t m_a)(r,c)
                for (int x = 0; x < n.dim[s]; ++x)
                    if (na_.at(r, x))
                        sys.at(row, off[s] + x * m.dim[s] + c) = modp(sys.at(row, off[s] + x * m.dim[s] + c) + na_.at(r, x), p);
                for (int x = 0; x < m.dim[t]; ++x)
                    if (ma.at(x, c))
                        sys.at(row, off[t] + r * m.dim[t] + x) = modp(sys.at(row, off[t] + r * m.dim[t] + x) - ma.at(x, c), p);
            }
    }
    return sys;
}

Morphism unpackMorphism(const std::vector<int>& vec, const std::vector<int>& off, const Rep& m, const Rep& n)
{
    Morphism f;
    for (size_t v = 0; v < m.dim.size(); ++v) {
        Mat x(n.dim[v], m.dim[v]);
        for (int r = 0; r < n.dim[v]; ++r)
            for (int c = 0; c < m.dim[v]; ++c)
                x.at(r, c) = vec[off[v] + r * m.dim[v] + c];
        f.push_back(x);
    }
    return f;
}

}  // namespace

std::vector<Morphism> homBasis(const BarQuiver& bq, const Rep& m, const Rep& n, bool kqOnly)
{
    std::vector<int> off;
    Mat sys = homSystem(bq, m, n, kqOnly, off);
    std::vector<Morphism> out;
    for (auto& v : nullspace(sys, m.q))
        out.push_back(unpackMorphism(v, off, m, n));
    return out;
}

int homDim(const BarQuiver& bq, const Rep& m, const Rep& n, bool kqOnly)
{
    std::vector<int> off;
    Mat sys = homSystem(bq, m, n, kqOnly, off);
    return sys.cols() - rank(sys, m.q);
}

ExtSpace extSpace(const BarQuiver& bq, const Rep& m, const Rep& n, bool kqOnly)
{
    int p = m.q;
    int na = activeArrows(bq, kqOnly);
    // unknowns X_a (n_t x m_s) row-major
    std::vector<int> xoff(na + 1, 0);
    for (int k = 0; k < na; ++k)
        xoff[k + 1] = xoff[k] + n.dim[bq.arrows[k].tgt] * m.dim[bq.arrows[k].src];
    int nx = xoff[na];

    // cocycle system: off-diagonal blocks of every relation vanish
    std::vector<std::vector<int>> zBasis;
    if (!kqOnly && !bq.rels.empty()) {
        int rows = 0;
        for (auto& r : bq.rels)
            rows += n.dim[r.tgt] * m.dim[r.src];
        Mat sys(rows, nx);
        int row0 = 0;
        for (auto& rel : bq.rels) {
            int R = n.dim[rel.tgt], C = m.dim[rel.src];
            for (auto& term : rel.terms) {
                const auto& path = term.arrows;
                for (size_t pos = 0; pos < path.size(); ++pos) {
                    int a = path[pos];
                    int as = bq.arrows[a].src, at = bq.arrows[a].tgt;
                    // P = n-path after a (n_at -> n_tgt), Qm = m-path before a (m_src -> m_as)
                    std::vector<int> after(path.begin() + pos + 1, path.end());
                    std::vector<int> before(path.begin(), path.begin() + pos);
                    Mat P = pathMatrix(n, after, n.dim[at]);
                    Mat Qm = pathMatrix(m, before, m.dim[rel.src]);
                    int xc = m.dim[as];
                    for (int r = 0; r < R; ++r)
                        for (int x = 0; x < n.dim[at]; ++x) {
                            int pv = P.at(r, x);
                            if (!pv)
                                continue;
                            for (int y = 0; y < m.dim[as]; ++y)
                                for (int c = 0; c < C; ++c) {
                                    int qv = Qm.at(y, c);
                                    if (!qv)
                                        continue;
                                    int& e = sys.at(row0 + r * C + c, xoff[a] + x * xc + y);
                                    e = modp(e + long(term.coef) * pv * qv, p);
                                }
                        }
                }
            }
            row0 += R * C;
        }
        zBasis = nullspace(sys, p);
    } else {
        for (int k = 0; k < nx; ++k) {
            std::vector<int> e(nx, 0);
            e[k] = 1;
            zBasis.push_back(e);
        }
    }

    // coboundaries: X_a = n_a h_s - h_t m_a
    int nv = bq.n();
    std::vector<int> hoff(nv + 1, 0);
    for (int v = 0; v < nv; ++v)
        hoff[v + 1] = hoff[v] + n.dim[v] * m.dim[v];
    Mat cob(nx, hoff[nv]);
    for (int k = 0; k < na; ++k) {
        int s = bq.arrows[k].src, t = bq.arrows[k].tgt;
        const Mat& nak = n.mats[k];
        const Mat& mak = m.mats[k];
        for (int r = 0; r < n.dim[t]; ++r)
            for (int c = 0; c < m.dim[s]; ++c) {
                int row = xoff[k] + r * m.dim[s] + c;
                for (int x = 0; x < n.dim[s]; ++x)
                    if (nak.at(r, x))
                        cob.at(row, hoff[s] + x * m.dim[s] + c) = modp(cob.at(row, hoff[s] + x * m.dim[s] + c) + nak.at(r, x), p);
                for (int x = 0; x < m.dim[t]; ++x)
                    if (mak.at(x, c))
                        cob.at(row, hoff[t] + r * m.dim[t] + x) = modp(cob.at(row, hoff[t] + r * m.dim[t] + x) - mak.at(x, c), p);
            }
    }
    Mat bBasis = cob.cols() ? columnBasis(cob, p) : Mat(nx, 0);

    ExtSpace es;
    es.zDim = int(zBasis.size());
    es.bDim = bBasis.cols();
    Mat cur = bBasis;
    int rk = cur.cols();
    for (auto& z : zBasis) {
        Mat col(nx, 1);
        for (int i = 0; i < nx; ++i)
            col.at(i, 0) = z[i];
        Mat trial = hcat(cur, col);
        if (rank(trial, p) == rk + 1) {
            cur = trial;
            ++rk;
            std::vector<Mat> xs;
            for (int k = 0; k < bq.numArrows(); ++k) {
                int s = bq.arrows[k].src, t = bq.arrows[k].tgt;
                Mat x(n.dim[t], m.dim[s]);
                if (k < na)
                    for (int r = 0; r < n.dim[t]; ++r)
                        for (int c = 0; c < m.dim[s]; ++c)
                            x.at(r, c) = z[xoff[k] + r * m.dim[s] + c];
                xs.push_back(x);
            }
            es.basis.push_back(std::move(xs));
        }
    }
    if (es.dim() != es.zDim - es.bDim)
        throw std::logic_error("extSpace: Z/B dimension mismatch");
    return es;
}

int extDim(const BarQuiver& bq, const Rep& m, const Rep& n, bool kqOnly) { return extSpace(bq, m, n, kqOnly).dim(); }

Rep middleTerm(const Rep& m, const Rep& n, const std::vector<Mat>& x)
{
    Rep l;
    l.q = m.q;
    l.dim.resize(m.dim.size());
    for (size_t v = 0; v < m.dim.size(); ++v)
        l.dim[v] = n.dim[v] + m.dim[v];
    for (size_t k = 0; k < m.mats.size(); ++k)
        l.mats.push_back(blockUpper(n.mats[k], x[k], m.mats[k]));
    return l;
}

void forEachExtension(const BarQuiver& bq, const Rep& m, const Rep& n, bool kqOnly,
                      const std::function<void(const Rep&)>& f)
{
    ExtSpace es = extSpace(bq, m, n, kqOnly);
    int d = es.dim(), p = m.q;
    std::vector<int> c(d, 0);
    while (true) {
        std::vector<Mat> x;
        for (int k = 0; k < bq.numArrows(); ++k) {
            int s = bq.arrows[k].src, t = bq.arrows[k].tgt;
            Mat acc(n.dim[t], m.dim[s]);
            for (int b = 0; b < d; ++b)
                if (c[b])
                    acc = add(acc, scale(es.basis[b][k], c[b], p), p);
            x.push_back(acc);
        }
        f(middleTerm(m, n, x));
        int i = 0;
        while (i < d && ++c[i] == p)
            c[i++] = 0;
        if (i == d)
            break;
    }
}

Int glOrder(int n, int q)
{
    Int qn = 1, r = 1;
    for (int i = 0; i < n; ++i)
        qn *= q;
    Int qi = 1;
    for (int i = 0; i < n; ++i) {
        r *= qn - qi;
        qi *= q;
    }
    return r;
}

Int glOrder(const DimVec& d, int q)
{
    Int r = 1;
    for (int x : d)
        r *= glOrder(x, q);
    return r;
}

int eulerQ(const IQuiver& q, const DimVec& x, const DimVec& y)
{
    int s = 0;
    for (int v = 0; v < q.n; ++v)
        s += x[v] * y[v];
    for (auto& a : q.arrows)
        s -= x[a.src] * y[a.tgt];
    return s;
}

int symEulerQ(const IQuiver& q, const DimVec& x, const DimVec& y) { return eulerQ(q, x, y) + eulerQ(q, y, x); }

DimVec unitVec(int n, int v)
{
    DimVec d(n, 0);
    d[v] = 1;
    return d;
}

DimVec tauVec(const IQuiver& q, const DimVec& alpha)
{
    DimVec r(q.n, 0);
    for (int v = 0; v < q.n; ++v)
        r[q.tau[v]] += alpha[v];
    return r;
}

DimVec resK(const IQuiver& q, const DimVec& alpha)
{
    DimVec t = tauVec(q, alpha);
    for (int v = 0; v < q.n; ++v)
        t[v] += alpha[v];
    return t;
}

int eulerKM(const IQuiver& q, int i, const DimVec& m) { return eulerQ(q, unitVec(q.n, i), m); }

int eulerMK(const IQuiver& q, const DimVec& m, int i) { return eulerQ(q, m, unitVec(q.n, q.tau[i])); }

namespace {

// All k-dimensional subspaces of F_p^n as n x k column-basis matrices (RREF of
// the transpose), in a fixed order.
void forEachSubspace(int n, int k, int p, const std::function<void(const Mat&)>& f)
{
    if (k == 0) {
        f(Mat(n, 0));
        return;
    }
    std::vector<int> piv(k);
    std::function<void(int, int)> choose = [&](int idx, int start) {
        if (idx == k) {
            // free positions: (row b, col c) with c > piv[b], c not a pivot
            std::vector<std::pair<int, int>> freePos;
            std::vector<char> isPiv(n, 0);
            for (int b : piv)
                isPiv[b] = 1;
            for (int b = 0; b < k; ++b)
                for (int c = piv[b] + 1; c < n; ++c)
                    if (!isPiv[c])
                        freePos.push_back({b, c});
            std::vector<int> vals(freePos.size(), 0);
            while (true) {
                Mat m(n, k);
                for (int b = 0; b < k; ++b)
                    m.at(piv[b], b) = 1;
                for (size_t t = 0; t < freePos.size(); ++t)
                    m.at(freePos[t].second, freePos[t].first) = vals[t];
                f(m);
                size_t t = 0;
                while (t < vals.size() && ++vals[t] == p)
                    vals[t++] = 0;
                if (t == vals.size())
                    break;
            }
            return;
        }
        for (int c = start; c <= n - (k - idx); ++c) {
            piv[idx] = c;
            choose(idx + 1, c + 1);
        }
    };
    choose(0, 0);
}

bool stableUnder(const Mat& a, const Mat& us, const Mat& ut, int p)
{
    if (us.cols() == 0)
        return true;
    Mat img = mul(a, us, p);
    if (ut.cols() == 0)
        return img.isZero();
    return rank(hcat(ut, img), p) == ut.cols();
}

}  // namespace

void forEachSubrep(const BarQuiver& bq, const Rep& l, const DimVec& d,
                   const std::function<void(const std::vector<Mat>&)>& f)
{
    int nv = bq.n();
    for (int v = 0; v < nv; ++v)
        if (d[v] < 0 || d[v] > l.dim[v])
            return;
    std::vector<Mat> cur(nv);
    std::function<void(int)> rec = [&](int v) {
        if (v == nv) {
            f(cur);
            return;
        }
        forEachSubspace(l.dim[v], d[v], l.q, [&](const Mat& u) {
            cur[v] = u;
            for (int k = 0; k < bq.numArrows(); ++k) {
                int s = bq.arrows[k].src, t = bq.arrows[k].tgt;
                if (s <= v && t <= v && (s == v || t == v))
                    if (!stableUnder(l.mats[k], cur[s], cur[t], l.q))
                        return;
            }
            rec(v + 1);
        });
    };
    rec(0);
}

Rep subRep(const BarQuiver& bq, const Rep& l, const std::vector<Mat>& basis)
{
    Rep r;
    r.q = l.q;
    for (int v = 0; v < bq.n(); ++v)
        r.dim.push_back(basis[v].cols());
    for (int k = 0; k < bq.numArrows(); ++k) {
        int s = bq.arrows[k].src, t = bq.arrows[k].tgt;
        if (r.dim[s] == 0 || r.dim[t] == 0) {
            r.mats.emplace_back(r.dim[t], r.dim[s]);
            continue;
        }
        r.mats.push_back(solveLeft(basis[t], mul(l.mats[k], basis[s], l.q), l.q));
    }
    return r;
}

Rep quotientRep(const BarQuiver& bq, const Rep& l, const std::vector<Mat>& basis)
{
    int p = l.q;
    std::vector<Mat> full, fullInv;
    std::vector<int> k(bq.n());
    Rep r;
    r.q = p;
    for (int v = 0; v < bq.n(); ++v) {
        Mat c = complementColumns(basis[v], l.dim[v], p);
        Mat pm = hcat(basis[v], c);
        full.push_back(pm);
        fullInv.push_back(l.dim[v] ? inverse(pm, p) : Mat(0, 0));
        k[v] = basis[v].cols();
        r.dim.push_back(l.dim[v] - k[v]);
    }
    for (int a = 0; a < bq.numArrows(); ++a) {
        int s = bq.arrows[a].src, t = bq.arrows[a].tgt;
        if (r.dim[s] == 0 || r.dim[t] == 0) {
            r.mats.emplace_back(r.dim[t], r.dim[s]);
            continue;
        }
        Mat conj = mul(fullInv[t], mul(l.mats[a], full[s], p), p);
        r.mats.push_back(submatrix(conj, k[t], k[s], r.dim[t], r.dim[s]));
    }
    return r;
}

DimVec reflectDim(const IQuiver& q, int i, const DimVec& x)
{
    DimVec r = x;
    int s = 0;
    for (int j = 0; j < q.n; ++j)
        s += q.cartan(i, j) * x[j];
    r[i] -= s;
    return r;
}

DimVec boldReflectDim(const IQuiver& q, int i, const DimVec& x)
{
    if (q.tau[i] == i)
        return reflectDim(q, i, x);
    return reflectDim(q, i, reflectDim(q, q.tau[i], x));
}

EpsHomology epsHomology(const BarQuiver& bq, const Rep& l)
{
    int p = l.q;
    int nv = bq.n();
    EpsHomology eh;
    eh.rankEps.assign(nv, 0);
    std::vector<Mat> kerB(nv), full(nv);
    std::vector<int> imDim(nv);
    DimVec hd(nv);
    for (int v = 0; v < nv; ++v) {
        const Mat& ev = l.mats[bq.eps(v)];
        const Mat& etv = l.mats[bq.eps(bq.base.tau[v])];  // tau v -> v
        eh.rankEps[v] = rank(ev, p);
        Mat ker = l.dim[v] ? kernelMatrix(ev, p) : Mat(0, 0);
        Mat im = l.dim[v] && etv.cols() ? columnBasis(etv, p) : Mat(l.dim[v], 0);
        // basis of ker adapted to im subset ker: im columns then complement within ker
        Mat cur = im;
        for (int c = 0; c < ker.cols(); ++c) {
            Mat col = submatrix(ker, 0, c, ker.rows(), 1);
            Mat trial = hcat(cur, col);
            if (rank(trial, p) > cur.cols())
                cur = trial;
        }
        full[v] = cur;
        imDim[v] = im.cols();
        hd[v] = cur.cols() - im.cols();
    }
    Rep h;
    h.q = p;
    h.dim = hd;
    for (int a = 0; a < bq.numArrows(); ++a) {
        int s = bq.arrows[a].src, t = bq.arrows[a].tgt;
        Mat m(hd[t], hd[s]);
        if (a < bq.numBase() && hd[s] && hd[t]) {
            Mat src = submatrix(full[s], 0, imDim[s], full[s].rows(), hd[s]);
            Mat img = mul(l.mats[a], src, p);
            Mat coords = solveLeft(full[t], img, p);
            m = submatrix(coords, imDim[t], 0, hd[t], hd[s]);
        }
        h.mats.push_back(m);
    }
    eh.h = h;
    return eh;
}

}  // namespace iqbraid
