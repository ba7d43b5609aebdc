#include "iqbraid/iqg.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace iqbraid {

namespace {

RatFunc vp(long e) { return RatFunc::vpow(e); }

RatFunc sgn(long e) { return RatFunc(e % 2 ? -1 : 1); }

std::vector<int> zeros(int n) { return std::vector<int>(n, 0); }

std::vector<int> addK(std::vector<int> a, const std::vector<int>& b, int scale = 1)
{
    for (size_t t = 0; t < a.size(); ++t)
        a[t] += scale * b[t];
    return a;
}

}  // namespace

// ---------------------------------------------------------------- Cartan data

bool CartanData::finiteType(int i) const
{
    int x = c[i][tau[i]];
    return x == 0 || x == 2;
}

void CartanData::validate() const
{
    if (int(c.size()) != n || int(tau.size()) != n || int(parity.size()) != n || int(rep.size()) != n)
        throw std::invalid_argument("CartanData: size mismatch");
    for (int i = 0; i < n; ++i) {
        if (int(c[i].size()) != n)
            throw std::invalid_argument("CartanData: matrix is not square");
        if (c[i][i] != 2)
            throw std::invalid_argument("CartanData: diagonal entry is not 2");
        if (tau[i] < 0 || tau[i] >= n || tau[tau[i]] != i)
            throw std::invalid_argument("CartanData: tau is not an involution");
        if (c[i][tau[i]] % 2 != 0)
            throw std::invalid_argument("CartanData: c_{i,tau i} is odd");
        if (rep[i] == rep[tau[i]] && tau[i] != i)
            throw std::invalid_argument("CartanData: representatives must pick one vertex per orbit");
        if (tau[i] == i && !rep[i])
            throw std::invalid_argument("CartanData: tau-fixed vertex is not a representative");
        for (int j = 0; j < n; ++j) {
            if (c[i][j] != c[j][i])
                throw std::invalid_argument("CartanData: matrix is not symmetric");
            if (i != j && c[i][j] > 0)
                throw std::invalid_argument("CartanData: positive off-diagonal entry");
            if (c[i][j] != c[tau[i]][tau[j]])
                throw std::invalid_argument("CartanData: matrix is not tau-invariant");
        }
    }
}

CartanData makeCartan(std::vector<std::vector<int>> c, std::vector<int> tau, std::vector<int> parity)
{
    CartanData cd;
    cd.n = int(c.size());
    cd.c = std::move(c);
    cd.tau = std::move(tau);
    cd.parity = parity.empty() ? zeros(cd.n) : std::move(parity);
    cd.rep.assign(cd.n, false);
    for (int i = 0; i < cd.n; ++i)
        cd.rep[i] = i <= cd.tau[i];
    cd.validate();
    return cd;
}

CartanData cartanFromQuiver(const IQuiver& q, std::vector<int> parity)
{
    std::vector<std::vector<int>> c(q.n, std::vector<int>(q.n));
    for (int i = 0; i < q.n; ++i)
        for (int j = 0; j < q.n; ++j)
            c[i][j] = q.cartan(i, j);
    return makeCartan(std::move(c), q.tau, std::move(parity));
}

// ---------------------------------------------------------------- expressions

IqgExpr IqgExpr::term(std::vector<int> word, std::vector<int> k, const RatFunc& c)
{
    IqgExpr e;
    e.add({std::move(word), std::move(k)}, c);
    return e;
}

IqgExpr IqgExpr::scalar(int n, const RatFunc& c) { return term({}, zeros(n), c); }

IqgExpr IqgExpr::B(int n, int i) { return term({i}, zeros(n), RatFunc(1)); }

IqgExpr IqgExpr::K(int n, int i, int power)
{
    std::vector<int> k = zeros(n);
    k[i] = power;
    return term({}, k, RatFunc(1));
}

IqgExpr IqgExpr::torus(const std::vector<int>& k, const RatFunc& c) { return term({}, k, c); }

RatFunc IqgExpr::coeff(const IqgKey& key) const
{
    auto it = t_.find(key);
    return it == t_.end() ? RatFunc() : it->second;
}

void IqgExpr::add(const IqgKey& key, const RatFunc& c)
{
    if (c.isZero())
        return;
    auto [it, fresh] = t_.emplace(key, c);
    if (fresh)
        return;
    it->second += c;
    if (it->second.isZero())
        t_.erase(it);
}

int IqgExpr::maxLength() const
{
    int m = 0;
    for (auto& [k, c] : t_)
        m = std::max(m, int(k.word.size()));
    return m;
}

IqgExpr& IqgExpr::operator+=(const IqgExpr& o)
{
    for (auto& [k, c] : o.t_)
        add(k, c);
    return *this;
}

IqgExpr& IqgExpr::operator-=(const IqgExpr& o)
{
    for (auto& [k, c] : o.t_)
        add(k, -c);
    return *this;
}

IqgExpr IqgExpr::scaled(const RatFunc& c) const
{
    IqgExpr r;
    if (c.isZero())
        return r;
    for (auto& [k, x] : t_)
        r.t_.emplace(k, x * c);
    return r;
}

std::string IqgExpr::str() const
{
    if (t_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [key, c] : t_) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (int w : key.word)
            os << " B" << w;
        bool any = false;
        for (int x : key.k)
            any = any || x != 0;
        if (any) {
            os << " k{";
            bool f2 = true;
            for (size_t t = 0; t < key.k.size(); ++t) {
                if (!key.k[t])
                    continue;
                if (!f2)
                    os << ",";
                f2 = false;
                os << t << ":" << key.k[t];
            }
            os << "}";
        }
    }
    return os.str();
}

IqgExpr operator+(IqgExpr a, const IqgExpr& b) { return a += b; }
IqgExpr operator-(IqgExpr a, const IqgExpr& b) { return a -= b; }

// ---------------------------------------------------------------- products

long torusPassExp(const CartanData& cd, const std::vector<int>& k, const std::vector<int>& word)
{
    long e = 0;
    for (int i = 0; i < cd.n; ++i) {
        if (!k[i])
            continue;
        for (int l : word)
            e += long(k[i]) * (cd.c[cd.tau[i]][l] - cd.c[i][l]);
    }
    return e;
}

IqgExpr mulNormalOrder(const CartanData& cd, const IqgExpr& x, const IqgExpr& y)
{
    IqgExpr r;
    for (auto& [kx, cx] : x.terms()) {
        for (auto& [ky, cy] : y.terms()) {
            std::vector<int> w = kx.word;
            w.insert(w.end(), ky.word.begin(), ky.word.end());
            r.add({std::move(w), addK(kx.k, ky.k)}, cx * cy * vp(torusPassExp(cd, kx.k, ky.word)));
        }
    }
    return r;
}

IqgExpr mulNormalOrder(const CartanData& cd, const std::vector<IqgExpr>& factors)
{
    IqgExpr r = IqgExpr::scalar(cd.n, RatFunc(1));
    for (auto& f : factors)
        r = mulNormalOrder(cd, r, f);
    return r;
}

IqgExpr power(const CartanData& cd, const IqgExpr& x, int m)
{
    IqgExpr r = IqgExpr::scalar(cd.n, RatFunc(1));
    for (int t = 0; t < m; ++t)
        r = mulNormalOrder(cd, r, x);
    return r;
}

IqgExpr normalOrderLetters(const CartanData& cd, std::vector<Letter> letters, const RatFunc& c, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    long e = 0;
    for (;;) {
        std::vector<size_t> spots;
        for (size_t p = 0; p + 1 < letters.size(); ++p)
            if (letters[p].isK && !letters[p + 1].isK)
                spots.push_back(p);
        if (spots.empty())
            break;
        size_t p = spots[rng() % spots.size()];
        const Letter& kl = letters[p];
        int l = letters[p + 1].idx;
        e += long(kl.pow) * (cd.c[cd.tau[kl.idx]][l] - cd.c[kl.idx][l]);
        std::swap(letters[p], letters[p + 1]);
    }
    std::vector<int> word, k = zeros(cd.n);
    for (auto& L : letters) {
        if (L.isK)
            k[L.idx] += L.pow;
        else
            word.push_back(L.idx);
    }
    return IqgExpr::term(word, k, c * vp(e));
}

IqgExpr dividedPower(const CartanData& cd, int i, int m, int parity, IDivConvention conv)
{
    if (m < 0)
        throw std::invalid_argument("dividedPower: negative exponent");
    RatFunc inv = RatFunc(1) / RatFunc(qfact(m));
    IqgExpr b = IqgExpr::B(cd.n, i);
    if (cd.tau[i] != i)
        return power(cd, b, m).scaled(inv);
    int p = (parity < 0 ? cd.parity[i] : parity) % 2;
    IqgExpr b2 = mulNormalOrder(cd, b, b);
    IqgExpr r = (m % 2) ? b : IqgExpr::scalar(cd.n, RatFunc(1));
    RatFunc kc = conv == IDivConvention::Balanced ? vp(1) : RatFunc(1);
    for (int j = 1; 2 * j <= m; ++j) {
        long br;
        if (p)
            br = 2 * j - 1;
        else
            br = (m % 2) ? 2 * j : 2 * j - 2;
        RatFunc x = RatFunc(qint(br));
        r = mulNormalOrder(cd, r, b2 - IqgExpr::K(cd.n, i).scaled(kc * x * x));
    }
    return r.scaled(inv);
}

// ---------------------------------------------------------------- involutions

IqgExpr applyPsi(const CartanData& cd, const IqgExpr& x)
{
    IqgExpr r;
    for (auto& [key, c] : x.terms()) {
        std::vector<int> k = zeros(cd.n);
        long e = 0;
        for (int i = 0; i < cd.n; ++i) {
            k[cd.tau[i]] += key.k[i];
            e += long(key.k[i]) * cd.c[i][cd.tau[i]];
        }
        r.add({key.word, k}, c.bar() * vp(e));
    }
    return r;
}

IqgExpr applySigma(const CartanData& cd, const IqgExpr& x)
{
    IqgExpr r;
    for (auto& [key, c] : x.terms()) {
        std::vector<int> k = zeros(cd.n);
        for (int i = 0; i < cd.n; ++i)
            k[cd.tau[i]] += key.k[i];
        std::vector<int> w(key.word.rbegin(), key.word.rend());
        r += mulNormalOrder(cd, IqgExpr::torus(k, c), IqgExpr::term(w, zeros(cd.n), RatFunc(1)));
    }
    return r;
}

// ---------------------------------------------------------------- maps

GenMap identityMap(const CartanData& cd)
{
    GenMap g;
    g.name = "id";
    for (int i = 0; i < cd.n; ++i) {
        g.b.push_back(IqgExpr::B(cd.n, i));
        std::vector<int> k = zeros(cd.n);
        k[i] = 1;
        g.k.push_back({RatFunc(1), k});
    }
    return g;
}

namespace {

IqgExpr torusExpr(const CartanData& cd, const GenMap& g, const std::vector<int>& k)
{
    RatFunc c(1);
    std::vector<int> out = zeros(cd.n);
    for (int j = 0; j < cd.n; ++j) {
        if (!k[j])
            continue;
        c *= pow(g.k[j].coeff, k[j]);
        out = addK(out, g.k[j].k, k[j]);
    }
    return IqgExpr::torus(out, c);
}

IqgExpr kMono(int n, const std::vector<std::pair<int, int>>& parts, const RatFunc& c = RatFunc(1))
{
    std::vector<int> k = zeros(n);
    for (auto& [v, p] : parts)
        k[v] += p;
    return IqgExpr::torus(k, c);
}

GenMap splitBraid(const CartanData& cd, int i, int e, BraidVariant variant, IDivConvention conv)
{
    int n = cd.n;
    int p = cd.parity[i] % 2;
    bool dbl = variant == BraidVariant::DoublePrimed;
    // T'' uses -v^{1+e}, T' uses -v^{1-e}
    long base = dbl ? 1 + e : 1 - e;
    GenMap g;
    g.name = std::string(dbl ? "T''" : "T'") + "_{" + std::to_string(i) + "," + std::to_string(e) + "}";
    for (int j = 0; j < n; ++j) {
        int a = -cd.c[i][j];
        std::vector<int> k = zeros(n);
        k[j] += 1;
        k[i] += a;
        g.k.push_back({pow(RatFunc(-1) * vp(base), a), k});
    }
    for (int j = 0; j < n; ++j) {
        if (j == i) {
            g.b.push_back(mulNormalOrder(cd, kMono(n, {{i, -1}}, RatFunc(-1) * vp(-base)), IqgExpr::B(n, i)));
            continue;
        }
        int a = -cd.c[i][j];
        int ps = (a + p) % 2;
        IqgExpr bj = IqgExpr::B(n, j);
        IqgExpr img;
        auto piece = [&](int r, int s) {
            // T'': B^{(r)}_p B_j B^{(s)}_{c+p}; T': B^{(s)}_{c+p} B_j B^{(r)}_p
            IqgExpr dr = dividedPower(cd, i, r, p, conv);
            IqgExpr ds = dividedPower(cd, i, s, ps, conv);
            return dbl ? mulNormalOrder(cd, {dr, bj, ds}) : mulNormalOrder(cd, {ds, bj, dr});
        };
        long sg = dbl ? e : -e;
        for (int r = 0; r <= a; ++r)
            img += piece(r, a - r).scaled(sgn(r) * vp(sg * r));
        for (int u = 1; 2 * u <= a; ++u) {
            IqgExpr vk = power(cd, kMono(n, {{i, 1}}, vp(1)), u);
            for (int r = 0; r + 2 * u <= a; ++r) {
                if (r % 2 != p)
                    continue;
                int s = a - 2 * u - r;
                img += mulNormalOrder(cd, piece(r, s), vk).scaled(sgn(r + u) * vp(sg * (r + u)));
            }
        }
        g.b.push_back(img);
    }
    return g;
}

GenMap quasiSplitBraid(const CartanData& cd, int i, int e, BraidVariant variant, IDivConvention conv)
{
    int n = cd.n;
    int ti = cd.tau[i];
    bool dbl = variant == BraidVariant::DoublePrimed;
    GenMap g;
    g.name = std::string(dbl ? "T''" : "T'") + "_{" + std::to_string(i) + "," + std::to_string(e) + "}";
    for (int j = 0; j < n; ++j) {
        std::vector<int> k = zeros(n);
        k[j] += 1;
        k[i] -= cd.c[i][j];
        k[ti] -= cd.c[ti][j];
        g.k.push_back({RatFunc(1), k});
    }
    IqgExpr bi = IqgExpr::B(n, i), bti = IqgExpr::B(n, ti);
    IqgExpr minus = IqgExpr::scalar(n, RatFunc(-1));
    for (int j = 0; j < n; ++j) {
        if (j == i || j == ti) {
            // images of B_i (w = tau i) and B_{tau i} (w = i) swap the two letters
            bool isI = j == i;
            IqgExpr other = isI ? bti : bi;
            IqgExpr img;
            if (dbl) {
                // T''_{i,1}: B_i -> -k_i^{-1} B_ti, B_ti -> -B_i k_ti^{-1}; e = -1 swaps the k's
                int kv = (e == 1) == isI ? i : ti;
                if (isI)
                    img = mulNormalOrder(cd, {minus, kMono(n, {{kv, -1}}), other});
                else
                    img = mulNormalOrder(cd, {minus, other, kMono(n, {{kv, -1}})});
            } else {
                // T'_{i,-1}: B_i -> -B_ti k_ti^{-1}, B_ti -> -k_i^{-1} B_i; e = 1 swaps the k's
                int kv = (e == -1) == isI ? ti : i;
                if (isI)
                    img = mulNormalOrder(cd, {minus, other, kMono(n, {{kv, -1}})});
                else
                    img = mulNormalOrder(cd, {minus, kMono(n, {{kv, -1}}), other});
            }
            g.b.push_back(img);
            continue;
        }
        int cij = cd.c[i][j], ctij = cd.c[ti][j];
        IqgExpr bj = IqgExpr::B(n, j);
        IqgExpr img;
        int umax = -std::max(cij, ctij);
        for (int u = 0; u <= umax; ++u) {
            for (int r = 0; r <= -cij - u; ++r) {
                for (int s = 0; s <= -ctij - u; ++s) {
                    long ex = r - s + long(-cij - r - s - u) * u;
                    IqgExpr t;
                    if (dbl) {
                        // e = 1: k_ti^u on the right; e = -1: k_i^u, exponent negated
                        t = mulNormalOrder(cd, {dividedPower(cd, i, r), dividedPower(cd, ti, -ctij - u - s), bj,
                                                dividedPower(cd, ti, s), dividedPower(cd, i, -cij - r - u),
                                                kMono(n, {{e == 1 ? ti : i, u}})});
                        ex = e == 1 ? ex : -ex;
                    } else {
                        // e = -1: k_i^u on the left; e = 1: k_ti^u, exponent negated
                        t = mulNormalOrder(cd, {kMono(n, {{e == -1 ? i : ti, u}}), dividedPower(cd, i, -cij - r - u),
                                                dividedPower(cd, ti, s), bj, dividedPower(cd, ti, -ctij - u - s),
                                                dividedPower(cd, i, r)});
                        ex = e == -1 ? ex : -ex;
                    }
                    img += t.scaled(sgn(r + s) * vp(ex));
                }
            }
        }
        g.b.push_back(img);
    }
    (void)conv;
    return g;
}

}  // namespace

GenMap braidMap(const CartanData& cd, int i, int e, BraidVariant variant, IDivConvention conv)
{
    if (i < 0 || i >= cd.n)
        throw std::invalid_argument("braidMap: vertex out of range");
    if (e != 1 && e != -1)
        throw std::invalid_argument("braidMap: e must be 1 or -1");
    if (!cd.finiteType(i))
        throw std::invalid_argument("braidMap: c_{i,tau i} is not 0 or 2 at vertex " + std::to_string(i));
    if (cd.tau[i] == i)
        return splitBraid(cd, i, e, variant, conv);
    return quasiSplitBraid(cd, i, e, variant, conv);
}

IqgExpr applyGenMap(const CartanData& cd, const GenMap& g, const IqgExpr& x)
{
    IqgExpr r;
    std::map<std::vector<int>, IqgExpr> prefix;
    prefix[{}] = IqgExpr::scalar(cd.n, RatFunc(1));
    auto wordImage = [&](const std::vector<int>& w) -> const IqgExpr& {
        size_t have = 0;
        for (size_t l = w.size(); l > 0; --l) {
            if (prefix.count(std::vector<int>(w.begin(), w.begin() + l))) {
                have = l;
                break;
            }
        }
        std::vector<int> cur(w.begin(), w.begin() + have);
        for (size_t l = have; l < w.size(); ++l) {
            IqgExpr next = mulNormalOrder(cd, prefix[cur], g.b[w[l]]);
            cur.push_back(w[l]);
            prefix[cur] = std::move(next);
        }
        return prefix[w];
    };
    for (auto& [key, c] : x.terms())
        r += mulNormalOrder(cd, wordImage(key.word), torusExpr(cd, g, key.k)).scaled(c);
    return r;
}

GenMap composeMaps(const CartanData& cd, const GenMap& g, const GenMap& h)
{
    GenMap out;
    out.name = g.name + " o " + h.name;
    for (int i = 0; i < cd.n; ++i)
        out.b.push_back(applyGenMap(cd, g, h.b[i]));
    for (int i = 0; i < cd.n; ++i) {
        IqgExpr t = applyGenMap(cd, g, IqgExpr::torus(h.k[i].k, h.k[i].coeff));
        auto& [key, c] = *t.terms().begin();
        out.k.push_back({c, key.k});
    }
    return out;
}

// ---------------------------------------------------------------- relations

std::string serreKindName(SerreKind k)
{
    switch (k) {
    case SerreKind::TorusCommute:
        return "torus-commute";
    case SerreKind::TorusB:
        return "torus-b";
    case SerreKind::Commute:
        return "commute";
    case SerreKind::TauPair:
        return "tau-pair";
    case SerreKind::Serre:
        return "serre";
    case SerreKind::ISerre:
        return "iserre";
    }
    return "?";
}

bool serreApplies(const CartanData& cd, SerreKind kind, int i, int j)
{
    if (i < 0 || j < 0 || i >= cd.n || j >= cd.n)
        return false;
    switch (kind) {
    case SerreKind::TorusCommute:
    case SerreKind::TorusB:
        return true;
    case SerreKind::Commute:
        return i != j && cd.c[i][j] == 0 && cd.tau[i] != j;
    case SerreKind::TauPair:
        return cd.tau[i] != i && j == cd.tau[i];
    case SerreKind::Serre:
        return cd.tau[i] != i && j != i && j != cd.tau[i];
    case SerreKind::ISerre:
        return cd.tau[i] == i && j != i;
    }
    return false;
}

namespace {

// (x; x)_m = prod_{l=1}^m (1 - x^l), x = v^{2 sign}
RatFunc qPochhammer(int sign, int m)
{
    RatFunc r(1);
    for (int l = 1; l <= m; ++l)
        r *= RatFunc(1) - vp(2L * sign * l);
    return r;
}

}  // namespace

IqgExpr serreExpr(const CartanData& cd, SerreKind kind, int i, int j, IDivConvention conv)
{
    if (!serreApplies(cd, kind, i, j))
        throw std::invalid_argument("serreExpr: relation " + serreKindName(kind) + " does not apply to (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
    int n = cd.n;
    IqgExpr bi = IqgExpr::B(n, i), bj = IqgExpr::B(n, j);
    switch (kind) {
    case SerreKind::TorusCommute:
        return mulNormalOrder(cd, IqgExpr::K(n, i), IqgExpr::K(n, j)) -
               mulNormalOrder(cd, IqgExpr::K(n, j), IqgExpr::K(n, i));
    case SerreKind::TorusB:
        return mulNormalOrder(cd, IqgExpr::K(n, i), bj) -
               mulNormalOrder(cd, bj, IqgExpr::K(n, i)).scaled(vp(cd.c[cd.tau[i]][j] - cd.c[i][j]));
    case SerreKind::Commute:
        return mulNormalOrder(cd, bi, bj) - mulNormalOrder(cd, bj, bi);
    case SerreKind::TauPair: {
        int c = cd.c[i][j];
        IqgExpr lhs;
        for (int m = 0; m <= 1 - c; ++m)
            lhs += mulNormalOrder(cd, {dividedPower(cd, i, m), bj, dividedPower(cd, i, 1 - c - m)}).scaled(sgn(m + c));
        IqgExpr d = dividedPower(cd, i, -c);
        IqgExpr rhs = mulNormalOrder(cd, d, IqgExpr::K(n, i)).scaled(vp(c) * qPochhammer(-1, -c)) -
                      mulNormalOrder(cd, d, IqgExpr::K(n, j)).scaled(qPochhammer(1, -c));
        return lhs - rhs.scaled(RatFunc(1) / (vp(1) - vp(-1)));
    }
    case SerreKind::Serre: {
        int c = cd.c[i][j];
        IqgExpr r;
        for (int m = 0; m <= 1 - c; ++m)
            r += mulNormalOrder(cd, {dividedPower(cd, i, m), bj, dividedPower(cd, i, 1 - c - m)}).scaled(sgn(m));
        return r;
    }
    case SerreKind::ISerre: {
        int c = cd.c[i][j];
        int p = cd.parity[i] % 2;
        int p2 = ((c % 2 + 2) + p) % 2;
        IqgExpr r;
        for (int m = 0; m <= 1 - c; ++m)
            r += mulNormalOrder(cd, {dividedPower(cd, i, m, p, conv), bj, dividedPower(cd, i, 1 - c - m, p2, conv)})
                     .scaled(sgn(m));
        return r;
    }
    }
    return {};
}

std::vector<SerreInstance> serreRelations(const CartanData& cd, IDivConvention conv)
{
    std::vector<SerreInstance> out;
    for (SerreKind kind : {SerreKind::TorusCommute, SerreKind::TorusB, SerreKind::Commute, SerreKind::TauPair,
                           SerreKind::Serre, SerreKind::ISerre})
        for (int i = 0; i < cd.n; ++i)
            for (int j = 0; j < cd.n; ++j)
                if (serreApplies(cd, kind, i, j))
                    out.push_back({kind, i, j, serreExpr(cd, kind, i, j, conv)});
    return out;
}

// ---------------------------------------------------------------- conjugation identities

std::vector<ConjugationCheck> checkConjugations(const CartanData& cd, int i, int e, IDivConvention conv)
{
    GenMap tE = braidMap(cd, i, e, BraidVariant::DoublePrimed, conv);
    GenMap tMinus = braidMap(cd, i, -e, BraidVariant::DoublePrimed, conv);
    GenMap tPrime = braidMap(cd, i, e, BraidVariant::Primed, conv);
    std::vector<ConjugationCheck> out;
    std::vector<std::pair<std::string, IqgExpr>> gens;
    for (int j = 0; j < cd.n; ++j)
        gens.push_back({"B" + std::to_string(j), IqgExpr::B(cd.n, j)});
    for (int j = 0; j < cd.n; ++j)
        gens.push_back({"k" + std::to_string(j), IqgExpr::K(cd.n, j)});
    for (auto& [name, x] : gens) {
        ConjugationCheck a;
        a.identity = "psi T''(i,e) psi = T''(i,-e)";
        a.generator = name;
        a.lhs = applyPsi(cd, applyGenMap(cd, tE, applyPsi(cd, x)));
        a.rhs = applyGenMap(cd, tMinus, x);
        a.holds = a.lhs == a.rhs;
        out.push_back(std::move(a));
        ConjugationCheck b;
        b.identity = "T'(i,e) = sigma T''(i,-e) sigma";
        b.generator = name;
        b.lhs = applyGenMap(cd, tPrime, x);
        b.rhs = applySigma(cd, applyGenMap(cd, tMinus, applySigma(cd, x)));
        b.holds = b.lhs == b.rhs;
        out.push_back(std::move(b));
    }
    return out;
}

}  // namespace iqbraid
