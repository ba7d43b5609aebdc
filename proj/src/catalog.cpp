#include "iqbraid/catalog.hpp"

#include "json.hpp"

#include <fstream>
#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace iqbraid {

Catalog::Catalog(const BarQuiver& bq, int q, bool kqOnly, int dimCap)
    : reg_(std::make_shared<ModRegistry>(bq, q)), kqOnly_(kqOnly), cap_(dimCap)
{
    if (q != 2 && q != 3 && q != 5)
        throw std::invalid_argument("Catalog: q must be 2, 3 or 5");
}

Catalog::Catalog(std::shared_ptr<ModRegistry> reg, bool kqOnly, int dimCap)
    : reg_(std::move(reg)), kqOnly_(kqOnly), cap_(dimCap)
{
}

RepClass Catalog::classOf(const Rep& m)
{
    RepClass c;
    c.key = reg_->classify(m);
    c.rep = reg_->representative(c.key);
    c.aut = reg_->autOrder(c.key);
    c.dim = m.dim;
    std::ostringstream os;
    for (size_t v = 0; v < m.dim.size(); ++v)
        os << (v ? "," : "(") << m.dim[v];
    os << ")" << reg_->keyString(c.key);
    c.keyStr = os.str();
    return c;
}

const std::vector<RepClass>& Catalog::enumerate(const DimVec& d)
{
    auto it = byDim_.find(d);
    if (it != byDim_.end())
        return it->second;
    int total = 0;
    for (int x : d)
        total += x;
    if (total > cap_)
        throw std::out_of_range("Catalog: dimension bound exceeded");
    const BarQuiver& bq = quiver();
    std::vector<RepClass> out;
    if (total == 0) {
        out.push_back(classOf(zeroRep(bq, q(), d)));
    } else {
        std::map<ClassKey, size_t> seen;
        for (int v = 0; v < bq.n(); ++v) {
            if (d[v] == 0)
                continue;
            DimVec e = d;
            --e[v];
            Rep s = simpleRep(bq, q(), v);
            // copy: enumerate may rehash byDim_
            std::vector<RepClass> smaller = enumerate(e);
            for (auto& x : smaller)
                forEachExtension(bq, x.rep, s, kqOnly_, [&](const Rep& l) {
                    ClassKey k = reg_->classify(l);
                    if (!seen.count(k)) {
                        seen[k] = out.size();
                        out.push_back(classOf(l));
                    }
                });
        }
        std::sort(out.begin(), out.end(), [](const RepClass& a, const RepClass& b) { return a.key < b.key; });
    }
    return byDim_[d] = std::move(out);
}

namespace {

Int qpow(int q, int e)
{
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), q, e);
    return r;
}

Int gaussBinom(int n, int k, int q)
{
    if (k < 0 || k > n)
        return 0;
    Int num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= qpow(q, n - i) - 1;
        den *= qpow(q, i + 1) - 1;
    }
    return num / den;
}

// rank-r matrices of shape m x n
Int rankCount(int m, int n, int r, int q)
{
    Int num = 1, den = 1;
    for (int i = 0; i < r; ++i) {
        num *= (qpow(q, m) - qpow(q, i)) * (qpow(q, n) - qpow(q, i));
        den *= qpow(q, r) - qpow(q, i);
    }
    return num / den;
}

}  // namespace

Int rawTupleCount(const BarQuiver& bq, int q, const DimVec& d, bool kqOnly)
{
    const IQuiver& Q = bq.base;
    if (kqOnly) {
        long e = 0;
        for (auto& a : Q.arrows)
            e += long(d[a.src]) * d[a.tgt];
        Int r;
        mpz_ui_pow_ui(r.get_mpz_t(), q, e);
        return r;
    }
    // eps configurations per tau-orbit, then the linear system in the Q-arrows
    std::vector<int> orbitRep;
    for (int v = 0; v < Q.n; ++v)
        if (Q.tau[v] >= v)
            orbitRep.push_back(v);
    Rep cur = zeroRep(bq, q, d);
    Int total = 0;
    Int weight = 1;
    // unknowns: Q-arrow entries; equations: commutative relations
    std::vector<int> off(Q.arrows.size() + 1, 0);
    for (size_t k = 0; k < Q.arrows.size(); ++k)
        off[k + 1] = off[k] + d[Q.arrows[k].src] * d[Q.arrows[k].tgt];
    int nx = off.back();
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == orbitRep.size()) {
            // eps_i alpha - tau(alpha) eps_j = 0 for alpha: j -> i
            int rows = 0;
            for (auto& a : Q.arrows)
                rows += d[Q.tau[a.tgt]] * d[a.src];
            Mat sys(rows, nx);
            int row0 = 0;
            for (size_t k = 0; k < Q.arrows.size(); ++k) {
                int j = Q.arrows[k].src, i = Q.arrows[k].tgt, ti = Q.tau[i];
                int tk = Q.tauArrow[k];
                const Mat& ei = cur.mats[bq.eps(i)];  // ti x i
                const Mat& ej = cur.mats[bq.eps(j)];  // tj x j
                int tj = Q.tau[j];
                for (int r = 0; r < d[ti]; ++r)
                    for (int c = 0; c < d[j]; ++c) {
                        int row = row0 + r * d[j] + c;
                        // (ei * A_k)(r,c) = sum_x ei(r,x) A_k(x,c)
                        for (int x = 0; x < d[i]; ++x)
                            if (ei.at(r, x)) {
                                int& e = sys.at(row, off[k] + x * d[j] + c);
                                e = modp(e + ei.at(r, x), q);
                            }
                        // (A_tk * ej)(r,c) = sum_y A_tk(r,y) ej(y,c)
                        for (int y = 0; y < d[tj]; ++y)
                            if (ej.at(y, c)) {
                                int& e = sys.at(row, off[tk] + r * d[tj] + y);
                                e = modp(e - ej.at(y, c), q);
                            }
                    }
                row0 += d[ti] * d[j];
            }
            Int r;
            mpz_ui_pow_ui(r.get_mpz_t(), q, nx - (rows ? rank(sys, q) : 0));
            total += weight * r;
            return;
        }
        int v = orbitRep[idx], tv = Q.tau[v];
        // eps configurations of one tau-orbit form GL-orbits indexed by ranks;
        // the solution count in the Q-arrows is constant on each orbit
        if (tv == v) {
            int n = d[v];
            for (int r = 0; 2 * r <= n; ++r) {
                Mat e(n, n);
                for (int t = 0; t < r; ++t)
                    e.at(r + t, t) = 1;
                cur.mats[bq.eps(v)] = e;
                Int save = weight;
                weight *= gaussBinom(n, r, q) * gaussBinom(n - r, r, q) * glOrder(r, q);
                rec(idx + 1);
                weight = save;
            }
        } else {
            int a = d[v], b = d[tv];
            for (int r1 = 0; r1 <= std::min(a, b); ++r1)
                for (int r2 = 0; r2 <= std::min(a - r1, b - r1); ++r2) {
                    Mat e1(b, a), e2(a, b);
                    for (int t = 0; t < r1; ++t)
                        e1.at(t, t) = 1;
                    for (int t = 0; t < r2; ++t)
                        e2.at(r1 + t, r1 + t) = 1;
                    cur.mats[bq.eps(v)] = e1;
                    cur.mats[bq.eps(tv)] = e2;
                    Int save = weight;
                    weight *= rankCount(b, a, r1, q) * rankCount(a - r1, b - r1, r2, q);
                    rec(idx + 1);
                    weight = save;
                }
        }
    };
    rec(0);
    return total;
}

MassCertificate Catalog::certify(const DimVec& d)
{
    MassCertificate mc;
    mc.dim = d;
    Int gl = glOrder(d, q());
    mc.mass = 0;
    for (auto& c : enumerate(d))
        mc.mass += Rat(gl) / Rat(c.aut);
    mc.rawCount = rawTupleCount(quiver(), q(), d, kqOnly_);
    mc.ok = mc.mass == Rat(mc.rawCount);
    return mc;
}

std::vector<DimVec> Catalog::allDims(int cap) const
{
    int n = quiver().n();
    std::vector<DimVec> out;
    DimVec d(n, 0);
    std::function<void(int, int)> rec = [&](int v, int left) {
        if (v == n) {
            out.push_back(d);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            d[v] = x;
            rec(v + 1, left - x);
        }
        d[v] = 0;
    };
    rec(0, cap);
    std::sort(out.begin(), out.end(), [](const DimVec& a, const DimVec& b) {
        int sa = 0, sb = 0;
        for (int x : a)
            sa += x;
        for (int x : b)
            sb += x;
        return sa != sb ? sa < sb : a < b;
    });
    return out;
}

std::string cacheFileName(const BarQuiver& bq, int q, bool kqOnly)
{
    std::string desc = bq.base.describe();
    // FNV-1a, stable across platforms
    unsigned long long h = 1469598103934665603ULL;
    for (unsigned char ch : desc)
        h = (h ^ ch) * 1099511628211ULL;
    std::ostringstream os;
    os << "catalog-" << std::hex << (h & 0xffffffffffULL) << std::dec << "-q" << q << (kqOnly ? "-kq" : "") << ".json";
    return os.str();
}

namespace {

constexpr int kCacheVersion = 1;

}  // namespace

void saveCatalog(Catalog& cat, const std::string& path)
{
    nlohmann::ordered_json j;
    j["version"] = kCacheVersion;
    j["quiver"] = cat.quiver().base.describe();
    j["q"] = cat.q();
    j["kq_only"] = cat.kqOnly();
    nlohmann::ordered_json classes = nlohmann::ordered_json::array();
    for (auto& [d, cls] : cat.built()) {
        nlohmann::ordered_json entry;
        entry["dim"] = d;
        nlohmann::ordered_json list = nlohmann::ordered_json::array();
        for (auto& c : cls) {
            nlohmann::ordered_json rc;
            rc["aut"] = c.aut.get_str();
            nlohmann::ordered_json mats = nlohmann::ordered_json::array();
            for (auto& m : c.rep.mats)
                mats.push_back(m.data());
            rc["mats"] = mats;
            list.push_back(rc);
        }
        entry["classes"] = list;
        classes.push_back(entry);
    }
    j["catalog"] = classes;
    std::ofstream f(path);
    if (!f)
        throw std::runtime_error("saveCatalog: cannot write " + path);
    f << j.dump(1) << "\n";
}

void loadCatalog(Catalog& cat, const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw std::runtime_error("loadCatalog: cannot read " + path);
    nlohmann::json j;
    try {
        f >> j;
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("loadCatalog: corrupt file: ") + e.what());
    }
    if (j.value("version", 0) != kCacheVersion)
        throw std::runtime_error("loadCatalog: version mismatch");
    if (j.value("quiver", std::string()) != cat.quiver().base.describe() || j.value("q", 0) != cat.q() ||
        j.value("kq_only", false) != cat.kqOnly())
        throw std::runtime_error("loadCatalog: file belongs to a different quiver or field");
    const BarQuiver& bq = cat.quiver();
    for (auto& entry : j.at("catalog")) {
        DimVec d = entry.at("dim").get<DimVec>();
        std::vector<RepClass> cls;
        for (auto& rc : entry.at("classes")) {
            Rep r = zeroRep(bq, cat.q(), d);
            auto mats = rc.at("mats");
            if (mats.size() != r.mats.size())
                throw std::runtime_error("loadCatalog: wrong number of matrices");
            for (size_t k = 0; k < mats.size(); ++k) {
                auto vals = mats[k].get<std::vector<int>>();
                Mat& m = r.mats[k];
                if (int(vals.size()) != m.rows() * m.cols())
                    throw std::runtime_error("loadCatalog: matrix shape mismatch");
                for (int t = 0; t < int(vals.size()); ++t) {
                    if (vals[t] < 0 || vals[t] >= cat.q())
                        throw std::runtime_error("loadCatalog: entry out of range");
                    m.at(t / m.cols(), t % m.cols()) = vals[t];
                }
            }
            if (!satisfiesRelations(bq, r) || (cat.kqOnly() && !isKQModule(bq, r)))
                throw std::runtime_error("loadCatalog: stored module violates relations");
            RepClass c = cat.classOf(r);
            if (c.aut.get_str() != rc.at("aut").get<std::string>())
                throw std::runtime_error("loadCatalog: stored |Aut| does not match");
            for (auto& o : cls)
                if (o.key == c.key)
                    throw std::runtime_error("loadCatalog: duplicate class");
            cls.push_back(c);
        }
        std::sort(cls.begin(), cls.end(), [](const RepClass& a, const RepClass& b) { return a.key < b.key; });
        cat.setClasses(d, std::move(cls));
        if (!cat.certify(d).ok)
            throw std::runtime_error("loadCatalog: mass certificate failed");
    }
}

bool inTorsionClass(const BarQuiver& bq, int ell, const Rep& m)
{
    return homDim(bq, m, simpleRep(bq, m.q, ell)) == 0 &&
           homDim(bq, m, simpleRep(bq, m.q, bq.base.tau[ell])) == 0;
}

}  // namespace iqbraid
