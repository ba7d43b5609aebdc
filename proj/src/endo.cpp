#include "iqbraid/modclass.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace iqbraid {

namespace {

std::vector<int> offsets(const DimVec& d)
{
    std::vector<int> off(d.size() + 1, 0);
    for (size_t v = 0; v < d.size(); ++v)
        off[v + 1] = off[v] + d[v];
    return off;
}

Mat bigMat(const Morphism& f, const std::vector<int>& off)
{
    int n = off.back();
    Mat m(n, n);
    for (size_t v = 0; v < f.size(); ++v)
        for (int i = 0; i < f[v].rows(); ++i)
            for (int j = 0; j < f[v].cols(); ++j)
                m.at(off[v] + i, off[v] + j) = f[v].at(i, j);
    return m;
}

std::vector<int> flat(const Mat& m) { return m.data(); }

Mat unflat(const std::vector<int>& v, int n)
{
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.at(i, j) = v[size_t(i) * n + j];
    return m;
}

Mat matPow(Mat x, long e, int p)
{
    Mat r = Mat::identity(x.rows());
    while (e > 0) {
        if (e & 1)
            r = mul(r, x, p);
        x = mul(x, x, p);
        e >>= 1;
    }
    return r;
}

// Nilpotent part of x in its Jordan-Chevalley decomposition over F_p.
Mat nilpotentPart(const Mat& x, int p)
{
    int n = x.rows();
    Mat y = x;
    for (int k = 0; k < n; ++k)
        y = matPow(y, p, p);
    // y is semisimple; find the order of Frobenius on F_p[y]
    Mat z = matPow(y, p, p);
    int r = 1;
    while (!(z == y)) {
        z = matPow(z, p, p);
        if (++r > 100000)
            throw std::logic_error("nilpotentPart: Frobenius order too large");
    }
    int steps = ((r - n % r) % r);
    Mat s = y;
    for (int k = 0; k < steps; ++k)
        s = matPow(s, p, p);
    return sub(x, s, p);
}

bool isSplitting(const Mat& x, int p)
{
    int n = x.rows();
    if (rank(x, p) == n)
        return false;
    return !matPow(x, n, p).isZero();
}

}  // namespace

EndAnalysis analyzeEnd(const BarQuiver& bq, const Rep& x)
{
    EndAnalysis ea;
    int p = x.q;
    auto off = offsets(x.dim);
    int n = off.back();
    if (n == 0)
        return ea;
    std::vector<Mat> e;
    for (auto& f : homBasis(bq, x, x))
        e.push_back(bigMat(f, off));
    int d = int(e.size());
    ea.endDim = d;
    int len = n * n;

    // I = ideal generated by nilpotent parts and commutators; I = J when E is local
    RowSpace ideal(len, p);
    std::vector<Mat> work;
    auto push = [&](const Mat& m) {
        if (ideal.insert(flat(m)))
            work.push_back(m);
    };
    for (auto& b : e)
        push(nilpotentPart(b, p));
    for (int k = 0; k < d; ++k)
        for (int l = k + 1; l < d; ++l)
            push(sub(mul(e[k], e[l], p), mul(e[l], e[k], p), p));
    while (!work.empty()) {
        Mat m = work.back();
        work.pop_back();
        for (auto& b : e) {
            push(mul(b, m, p));
            push(mul(m, b, p));
        }
    }
    std::vector<Mat> igen;
    for (auto& v : ideal.generators())
        igen.push_back(unflat(v, n));

    bool nilpotent = true;
    {
        std::vector<Mat> pw = igen;
        for (int step = 0; step < n && !pw.empty(); ++step) {
            RowSpace next(len, p);
            std::vector<Mat> nx;
            for (auto& a : pw)
                for (auto& b : igen) {
                    Mat c = mul(a, b, p);
                    if (next.insert(flat(c)))
                        nx.push_back(c);
                }
            pw = nx;
        }
        nilpotent = pw.empty();
    }

    RowSpace all = ideal;
    std::vector<Mat> comp;
    for (auto& b : e)
        if (all.insert(flat(b)))
            comp.push_back(b);
    int f = int(comp.size());

    int fixedDim = 0;
    Mat phi;
    if (f > 0) {
        // coordinates in the basis [I | comp]
        Mat basis(len, d);
        int col = 0;
        for (auto& m : igen) {
            for (int i = 0; i < len; ++i)
                basis.at(i, col) = m.data()[i];
            ++col;
        }
        for (auto& m : comp) {
            for (int i = 0; i < len; ++i)
                basis.at(i, col) = m.data()[i];
            ++col;
        }
        Mat rhs(len, f);
        for (int j = 0; j < f; ++j) {
            Mat w = sub(matPow(comp[j], p, p), comp[j], p);
            for (int i = 0; i < len; ++i)
                rhs.at(i, j) = w.data()[i];
        }
        Mat coords = solveLeft(basis, rhs, p);
        phi = submatrix(coords, int(igen.size()), 0, f, f);
        fixedDim = f - rank(phi, p);
    }

    ea.local = nilpotent && f >= 1 && fixedDim == 1;
    if (ea.local) {
        ea.f = f;
        ea.radical = ideal.generators();
        return ea;
    }

    // search for an endomorphism that is neither nilpotent nor invertible
    Mat one = Mat::identity(n);
    auto tryCand = [&](const Mat& c) {
        for (int s = 0; s < p; ++s) {
            Mat y = sub(c, scale(one, s, p), p);
            if (isSplitting(y, p)) {
                ea.splitter = y;
                return true;
            }
        }
        return false;
    };
    if (nilpotent && f >= 1 && fixedDim > 1) {
        for (auto& v : nullspace(phi, p)) {
            Mat y(n, n);
            for (int j = 0; j < f; ++j)
                y = add(y, scale(comp[j], v[j], p), p);
            if (tryCand(y))
                return ea;
        }
    }
    for (auto& b : e)
        if (tryCand(b))
            return ea;
    for (auto& b : igen)
        if (tryCand(b))
            return ea;
    std::mt19937 rng(0x5eed + n * 131 + d);
    std::uniform_int_distribution<int> coef(0, p - 1);
    for (int t = 0; t < 20000; ++t) {
        Mat y(n, n);
        for (auto& b : e)
            y = add(y, scale(b, coef(rng), p), p);
        if (isSplitting(y, p)) {
            ea.splitter = y;
            return ea;
        }
    }
    throw std::runtime_error("analyzeEnd: endomorphism algebra is not local but no splitting element was found");
}

std::vector<Rep> decompose(const BarQuiver& bq, const Rep& m)
{
    auto off = offsets(m.dim);
    int n = off.back();
    if (n == 0)
        return {};
    bool zero = true;
    for (auto& a : m.mats)
        if (!a.isZero())
            zero = false;
    if (zero) {
        std::vector<Rep> out;
        for (int v = 0; v < bq.n(); ++v)
            for (int k = 0; k < m.dim[v]; ++k)
                out.push_back(simpleRep(bq, m.q, v));
        return out;
    }
    EndAnalysis ea = analyzeEnd(bq, m);
    if (ea.local)
        return {m};
    int p = m.q;
    Mat y = matPow(ea.splitter, n, p);
    std::vector<Mat> kb, ib;
    for (int v = 0; v < bq.n(); ++v) {
        int dv = m.dim[v];
        if (dv == 0) {
            kb.emplace_back(0, 0);
            ib.emplace_back(0, 0);
            continue;
        }
        Mat yv = submatrix(y, off[v], off[v], dv, dv);
        kb.push_back(kernelMatrix(yv, p));
        ib.push_back(columnBasis(yv, p));
    }
    std::vector<Rep> out = decompose(bq, subRep(bq, m, kb));
    for (auto& r : decompose(bq, subRep(bq, m, ib)))
        out.push_back(r);
    return out;
}

std::string repFingerprint(const Rep& m)
{
    std::ostringstream os;
    os << m.q << ':';
    for (int d : m.dim)
        os << d << ',';
    for (auto& a : m.mats) {
        os << '|';
        for (int x : a.data())
            os << char('0' + x);
    }
    return os.str();
}

bool ModRegistry::sameIndec(const IndecInfo& a, const Rep& y)
{
    if (a.rep.dim != y.dim)
        return false;
    auto fs = homBasis(bq_, a.rep, y);
    if (int(fs.size()) != a.endDim)
        return false;
    auto gs = homBasis(bq_, y, a.rep);
    if (int(gs.size()) != a.endDim)
        return false;
    auto off = offsets(y.dim);
    int n = off.back();
    RowSpace rad(n * n, q_);
    for (auto& v : a.radical)
        rad.insert(v);
    for (auto& f : fs)
        for (auto& g : gs) {
            Morphism c;
            for (size_t v = 0; v < f.size(); ++v)
                c.push_back(f[v].rows() ? mul(g[v], f[v], q_) : Mat(g[v].rows(), f[v].cols()));
            if (!rad.contains(flat(bigMat(c, off))))
                return true;
        }
    return false;
}

int ModRegistry::indecId(const Rep& x)
{
    std::lock_guard<std::recursive_mutex> lock(mu_);
    EndAnalysis ea = analyzeEnd(bq_, x);
    if (!ea.local)
        throw std::logic_error("indecId: module is decomposable");
    auto& cands = byDim_[x.dim];
    for (int id : cands) {
        const IndecInfo& c = indecs_[id];
        if (c.endDim == ea.endDim && c.f == ea.f && sameIndec(c, x))
            return id;
    }
    IndecInfo info;
    info.rep = x;
    info.endDim = ea.endDim;
    info.f = ea.f;
    info.radical = ea.radical;
    indecs_.push_back(std::move(info));
    int id = int(indecs_.size()) - 1;
    cands.push_back(id);
    return id;
}

ClassKey ModRegistry::classify(const Rep& m)
{
    std::lock_guard<std::recursive_mutex> lock(mu_);
    std::string fp = repFingerprint(m);
    auto it = cache_.find(fp);
    if (it != cache_.end())
        return it->second;
    std::map<int, int> mult;
    for (auto& x : decompose(bq_, m))
        ++mult[indecId(x)];
    ClassKey k(mult.begin(), mult.end());
    cache_[fp] = k;
    return k;
}

DimVec ModRegistry::dimOf(const ClassKey& k) const
{
    std::lock_guard<std::recursive_mutex> lock(mu_);
    DimVec d(bq_.n(), 0);
    for (auto& [id, m] : k)
        for (int v = 0; v < bq_.n(); ++v)
            d[v] += m * indecs_[id].rep.dim[v];
    return d;
}

Rep ModRegistry::representative(const ClassKey& k) const
{
    std::lock_guard<std::recursive_mutex> lock(mu_);
    Rep r = zeroRep(bq_, q_, DimVec(bq_.n(), 0));
    for (auto& [id, m] : k)
        for (int t = 0; t < m; ++t)
            r = directSum(r, indecs_[id].rep);
    return r;
}

Int ModRegistry::autOrder(const ClassKey& k)
{
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto it = autCache_.find(k);
    if (it != autCache_.end())
        return it->second;
    Rep r = representative(k);
    int endDim = homDim(bq_, r, r);
    int top = 0;
    Int units = 1;
    for (auto& [id, m] : k) {
        int f = indecs_[id].f;
        top += m * m * f;
        int qf = 1;
        for (int i = 0; i < f; ++i)
            qf *= q_;
        units *= glOrder(m, qf);
    }
    Int rad;
    mpz_ui_pow_ui(rad.get_mpz_t(), q_, endDim - top);
    Int res = rad * units;
    autCache_[k] = res;
    return res;
}

std::string ModRegistry::keyString(const ClassKey& k) const
{
    std::ostringstream os;
    if (k.empty())
        return "0";
    for (size_t t = 0; t < k.size(); ++t) {
        if (t)
            os << '+';
        os << 'M' << k[t].first;
        if (k[t].second > 1)
            os << '^' << k[t].second;
    }
    return os.str();
}

Int autOrder(const BarQuiver& bq, const Rep& m, bool kqOnly)
{
    ModRegistry reg(bq, m.q);
    return reg.autOrder(reg.classify(kqOnly ? restrictToKQ(bq, m) : m));
}

bool isIsomorphic(const BarQuiver& bq, const Rep& m, const Rep& n, bool kqOnly)
{
    if (m.dim != n.dim)
        return false;
    ModRegistry reg(bq, m.q);
    if (kqOnly)
        return reg.classify(restrictToKQ(bq, m)) == reg.classify(restrictToKQ(bq, n));
    return reg.classify(m) == reg.classify(n);
}

std::vector<int> invariantProfile(const BarQuiver& bq, const Rep& m, bool kqOnly)
{
    std::vector<int> prof = m.dim;
    prof.push_back(homDim(bq, m, m, kqOnly));
    for (int v = 0; v < bq.n(); ++v) {
        Rep s = simpleRep(bq, m.q, v);
        prof.push_back(homDim(bq, m, s, kqOnly));
        prof.push_back(homDim(bq, s, m, kqOnly));
    }
    return prof;
}

long hallNumber(const BarQuiver& bq, const Rep& l, const Rep& m, const Rep& n, bool kqOnly)
{
    for (size_t v = 0; v < l.dim.size(); ++v)
        if (l.dim[v] != m.dim[v] + n.dim[v])
            throw std::invalid_argument("hallNumber: dimension mismatch");
    ModRegistry reg(bq, l.q);
    auto prep = [&](const Rep& r) { return kqOnly ? restrictToKQ(bq, r) : r; };
    Rep L = prep(l);
    ClassKey km = reg.classify(prep(m)), kn = reg.classify(prep(n));
    long count = 0;
    forEachSubrep(bq, L, n.dim, [&](const std::vector<Mat>& basis) {
        if (reg.classify(subRep(bq, L, basis)) == kn && reg.classify(quotientRep(bq, L, basis)) == km)
            ++count;
    });
    return count;
}

Rat extMiddleCount(const BarQuiver& bq, const Rep& m, const Rep& n, const Rep& l, bool kqOnly)
{
    for (size_t v = 0; v < l.dim.size(); ++v)
        if (l.dim[v] != m.dim[v] + n.dim[v])
            throw std::invalid_argument("extMiddleCount: dimension mismatch");
    ModRegistry reg(bq, l.q);
    ClassKey kl = reg.classify(l);
    long count = 0;
    forEachExtension(bq, m, n, kqOnly, [&](const Rep& x) {
        if (reg.classify(x) == kl)
            ++count;
    });
    Int h;
    mpz_ui_pow_ui(h.get_mpz_t(), l.q, homDim(bq, m, n, kqOnly));
    return Rat(count) / Rat(h);
}

int simpleSummandMultiplicity(const BarQuiver& bq, const Rep& m, int v, bool kqOnly)
{
    int c = 0;
    for (auto& x : decompose(bq, kqOnly ? restrictToKQ(bq, m) : m))
        if (x.total() == 1 && x.dim[v] == 1)
            ++c;
    return c;
}

}  // namespace iqbraid
