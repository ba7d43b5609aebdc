#include "iqbraid/suites.hpp"

#include "iqbraid/bridge.hpp"
#include "iqbraid/catalog.hpp"
#include "iqbraid/identities.hpp"
#include "iqbraid/ihall.hpp"
#include "iqbraid/invariants.hpp"
#include "iqbraid/iqg.hpp"

#include <atomic>
#include <chrono>
#include <filesystem>
#include <random>
#include <stdexcept>
#include <thread>

namespace iqbraid {

using json = nlohmann::ordered_json;

namespace {

using Clock = std::chrono::steady_clock;

double msSince(Clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Runs f, stamping the elapsed time; exceptions become failing records.
CheckRecord timed(const std::string& suite, const std::string& name, const json& params,
                  const std::function<CheckRecord()>& f)
{
    auto t0 = Clock::now();
    CheckRecord r;
    try {
        r = f();
    } catch (const std::exception& e) {
        r = makeRecord(suite, name, params, false, json{{"error", e.what()}});
        r.reason = e.what();
    }
    r.ms = msSince(t0);
    return r;
}

json identityWitness(const IdentityReport& r)
{
    return json{{"lhs", r.lhs.str()}, {"rhs", r.rhs.str()}, {"difference", (r.lhs - r.rhs).str()}};
}

CheckRecord identityRecord(const std::string& suite, const json& params, const std::function<IdentityReport()>& f)
{
    return timed(suite, "identity", params, [&] {
        IdentityReport r = f();
        return makeRecord(suite, r.name, params, r.holds, identityWitness(r));
    });
}

CheckRecord vanishRecord(const std::string& name, const json& params, const RatFunc& value, const RatFunc& expected)
{
    return makeRecord("identities", name, params, value == expected,
                      json{{"value", value.str()}, {"expected", expected.str()}});
}

json outcomeWitness(const InvariantOutcome& o)
{
    return json{{"failed", o.failed}, {"first_failure", o.firstFailure}};
}

CheckRecord invariantRecord(const std::string& name, json params, const std::function<InvariantOutcome()>& f)
{
    return timed("modules", name, params, [&] {
        InvariantOutcome o = f();
        json p = params;
        p["cases"] = o.checked;
        return makeRecord("modules", name, p, o.ok() && o.checked > 0, outcomeWitness(o));
    });
}

json hallPair(HallCtx& ctx, const IHallElem& lhs, const IHallElem& rhs)
{
    return json{{"lhs", ctx.toJson(lhs)}, {"rhs", ctx.toJson(rhs)}};
}

std::vector<int> uniformParity(int n, int p) { return std::vector<int>(n, p); }

// Vertices fixed by the reflection at 0.
std::vector<int> orbitOf0(const IQuiver& q)
{
    std::vector<int> vs{0};
    if (q.tau[0] != 0)
        vs.push_back(q.tau[0]);
    return vs;
}

std::vector<NamedQuiver> rank1Family()
{
    return {{"r1s", splitRank1()}, {"r1q", quasiSplitRank1()}};
}

template <class T>
void append(std::vector<T>& a, std::vector<T> b)
{
    a.insert(a.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
}

}  // namespace

std::vector<NamedQuiver> splitFamily(int aMax, bool iSink)
{
    std::vector<NamedQuiver> out;
    for (int a = 1; a <= aMax; ++a)
        out.push_back({"s" + std::to_string(a), splitRank2(a, iSink)});
    return out;
}

std::vector<NamedQuiver> quasiSplitFamily(int aMax, int bMax, bool iSink, bool withFixed)
{
    std::vector<NamedQuiver> out;
    for (int a = 0; a <= aMax; ++a)
        for (int b = 0; b <= bMax; ++b)
            if (a + b > 0)
                out.push_back({"q" + std::to_string(a) + std::to_string(b), quasiSplitRank2(a, b, iSink)});
    if (withFixed)
        for (int a = 1; a <= aMax; ++a)
            out.push_back({"f" + std::to_string(a), quasiSplitRank2Fixed(a, iSink)});
    return out;
}

std::vector<CheckRecord> runTasks(const std::vector<Task>& tasks, int jobs)
{
    std::vector<std::vector<CheckRecord>> results(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t k = next++; k < tasks.size(); k = next++)
            results[k] = tasks[k]();
    };
    int n = std::max(1, std::min<int>(jobs, int(tasks.size())));
    if (n == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < n; ++t)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }
    std::vector<CheckRecord> out;
    for (auto& r : results)
        append(out, std::move(r));
    return out;
}

std::vector<Task> identityTasks(int dmax)
{
    std::vector<Task> t;
    t.push_back([dmax] {
        std::vector<CheckRecord> out;
        for (long d = 0; d <= dmax; ++d)
            out.push_back(identityRecord("identities", {{"d", d}}, [d] { return checkStdBinomial(d); }));
        for (long p = 0; p <= dmax; ++p)
            out.push_back(identityRecord("identities", {{"p", p}}, [p] { return checkKm1(p); }));
        for (long d = 1; d <= dmax; ++d)
            out.push_back(identityRecord("identities", {{"d", d}}, [d] { return checkKmrd(d); }));
        return out;
    });
    t.push_back([dmax] {
        std::vector<CheckRecord> out;
        for (long d = 1; d <= dmax; ++d) {
            out.push_back(identityRecord("identities", {{"d", d}}, [d] { return checkDC(d); }));
            out.push_back(identityRecord("identities", {{"d", d}}, [d] { return checkDCSum(d); }));
            out.push_back(identityRecord("identities", {{"d", d}}, [d] { return checkDDiff(d); }));
        }
        return out;
    });
    t.push_back([dmax] {
        std::vector<CheckRecord> out;
        for (long d = 1; d <= std::min(dmax, 6); ++d)
            for (long k = 0; k <= d; ++k)
                out.push_back(
                    identityRecord("identities", {{"d", d}, {"k", k}}, [d, k] { return checkPartialProduct(d, k); }));
        return out;
    });
    t.push_back([dmax] {
        std::vector<CheckRecord> out;
        for (long d = 1; d <= dmax; ++d)
            out.push_back(identityRecord("identities", {{"d", d}}, [d] { return checkCoeff(d); }));
        return out;
    });
    return t;
}

std::vector<Task> vanishingTasks(int aMax, int tMax)
{
    std::vector<Task> t;
    for (long a = 0; a <= aMax; ++a)
        t.push_back([a] {
            std::vector<CheckRecord> out;
            for (long d = 0; 2 * d <= a; ++d)
                for (long u = 0; u <= a - 2 * d; ++u) {
                    if (!admissibleA(a, d, u))
                        continue;
                    json p{{"a", a}, {"d", d}, {"u", u}};
                    out.push_back(timed("identities", "A-vanishes", p,
                                        [&] { return vanishRecord("A-vanishes", p, computeA(a, d, u), RatFunc(0)); }));
                    out.push_back(timed("identities", "A'-vanishes", p, [&] {
                        return vanishRecord("A'-vanishes", p, computeAprime(a, d, u), RatFunc(0));
                    }));
                }
            return out;
        });
    for (long a = 0; a <= tMax; ++a)
        t.push_back([a, tMax] {
            std::vector<CheckRecord> out;
            for (long b = 0; b <= tMax; ++b) {
                long mn = std::min(a, b);
                for (long f = 0; f <= mn; ++f)
                    for (long g = 0; g <= mn; ++g)
                        for (long t1 = 0; t1 <= a - f - g; ++t1)
                            for (long t3 = 0; t3 <= b - f - g; ++t3) {
                                json p{{"a", a}, {"b", b}, {"f", f}, {"g", g}, {"t1", t1}, {"t3", t3}};
                                bool origin = !(f || g || t1 || t3);
                                std::string name = origin ? "T-unit" : "T-vanishes";
                                out.push_back(timed("identities", name, p, [&] {
                                    return vanishRecord(name, p, computeT(a, b, f, g, t1, t3), RatFunc(origin ? 1 : 0));
                                }));
                            }
            }
            return out;
        });
    return t;
}

std::vector<Task> fastPathTasks(const std::vector<int>& primes, int aMax, int bMax, int sssDimCap)
{
    std::vector<Task> t;
    for (int p : primes)
        for (auto& nq : splitFamily(aMax, false))
            t.push_back([p, nq, sssDimCap] {
                std::vector<CheckRecord> out;
                HallCtx c(nq.q, p);
                const BarQuiver& bq = c.quiver();
                Rep si = simpleRep(bq, p, 0), sj = simpleRep(bq, p, 1);
                for (int s = 0; s <= 2; ++s)
                    for (int u = 0; u <= 2; ++u) {
                        json par{{"quiver", nq.name}, {"q", p}, {"s", s}, {"t", u}};
                        if (s + u + 1 > sssDimCap) {
                            out.push_back(skippedRecord("hall", "closed-sss", par, "total dimension above cap"));
                            continue;
                        }
                        out.push_back(timed("hall", "closed-sss", par, [&] {
                            IHallElem lhs = c.mul(c.mul(c.modulePower(si, s), c.module(sj)), c.modulePower(si, u));
                            IHallElem rhs = closedSSS(c, 0, 1, s, u);
                            return makeRecord("hall", "closed-sss", par, lhs == rhs, hallPair(c, lhs, rhs));
                        }));
                    }
                return out;
            });
    for (int p : primes)
        for (auto& nq : quasiSplitFamily(aMax, bMax, false, false))
            t.push_back([p, nq] {
                std::vector<CheckRecord> out;
                HallCtx c(nq.q, p);
                const BarQuiver& bq = c.quiver();
                Rep si = simpleRep(bq, p, 0), sti = simpleRep(bq, p, 1), sj = simpleRep(bq, p, 2);
                for (int m1 = 0; m1 <= 1; ++m1)
                    for (int n1 = 0; n1 <= 1; ++n1)
                        for (int m2 = 0; m2 <= 1; ++m2)
                            for (int n2 = 0; n2 <= 1; ++n2) {
                                json par{{"quiver", nq.name}, {"q", p}, {"m1", m1}, {"n1", n1}, {"m2", m2}, {"n2", n2}};
                                out.push_back(timed("hall", "closed-build-block", par, [&] {
                                    Rep l = directSum(directPower(bq, si, m1), directPower(bq, sti, n1));
                                    Rep r = directSum(directPower(bq, si, m2), directPower(bq, sti, n2));
                                    IHallElem lhs = c.mul(c.mul(c.module(l), c.module(sj)), c.module(r));
                                    IHallElem rhs = closedBuildBlock(c, 0, 2, m1, n1, m2, n2);
                                    return makeRecord("hall", "closed-build-block", par, lhs == rhs,
                                                      hallPair(c, lhs, rhs));
                                }));
                            }
                for (int s = 0; s <= 2; ++s)
                    for (int r = 0; r <= 2; ++r) {
                        json par{{"quiver", nq.name}, {"q", p}, {"s", s}, {"r", r}};
                        out.push_back(timed("hall", "closed-mixed-semisimple", par, [&] {
                            IHallElem lhs = c.mul(c.modulePower(sti, s), c.modulePower(si, r));
                            IHallElem rhs = closedMixedSemisimple(c, 0, s, r);
                            return makeRecord("hall", "closed-mixed-semisimple", par, lhs == rhs, hallPair(c, lhs, rhs));
                        }));
                    }
                return out;
            });
    return t;
}

namespace {

CheckRecord braidRecord(const std::string& name, const json& par, HallCtx& c2, const BraidCheck& r)
{
    CheckRecord rec = makeRecord("braid", name, par, r.holds);
    // both sides are always reported for braid checks
    rec.witness = hallPair(c2, r.lhs, r.rhs);
    return rec;
}

}  // namespace

std::vector<Task> braidSplitTasks(const std::vector<int>& primes, int aMax, const std::vector<int>& parities)
{
    std::vector<Task> t;
    for (int p : primes)
        for (auto& nq : splitFamily(aMax, true))
            t.push_back([p, nq, parities] {
                std::vector<CheckRecord> out;
                HallCtx c(nq.q, p), c2(reflectQuiver(nq.q, {0}), p);
                for (int par : parities) {
                    json params{{"quiver", nq.name}, {"q", p}, {"parity", par}};
                    out.push_back(timed("braid", "braid-split", params, [&] {
                        return braidRecord("braid-split", params, c2, verifyBraidSplit(c, c2, 0, 1, par));
                    }));
                }
                return out;
            });
    return t;
}

std::vector<Task> braidQuasiSplitTasks(const std::vector<int>& primes, int aMax, int bMax, bool withFixed)
{
    std::vector<Task> t;
    for (int p : primes)
        for (auto& nq : quasiSplitFamily(aMax, bMax, true, withFixed))
            t.push_back([p, nq] {
                HallCtx c(nq.q, p), c2(reflectQuiver(nq.q, {0, 1}), p);
                json params{{"quiver", nq.name}, {"q", p}};
                return std::vector<CheckRecord>{timed("braid", "braid-quasi-split", params, [&] {
                    return braidRecord("braid-quasi-split", params, c2, verifyBraidQuasiSplit(c, c2, 0, 2));
                })};
            });
    return t;
}

std::vector<Task> inverseTasks(const std::vector<int>& primes, const std::vector<NamedQuiver>& quivers)
{
    std::vector<Task> t;
    for (auto& nq : quivers)
        for (int pi = 0; pi < int(primes.size()); ++pi)
            t.push_back([nq, p = primes[pi], first = pi == 0] {
                std::vector<CheckRecord> out;
                std::vector<int> parities = nq.q.tau[0] == 0 ? std::vector<int>{0, 1} : std::vector<int>{0};
                HallCtx ctx(nq.q, p);
                for (int par : parities) {
                    CartanData cd = cartanFromQuiver(nq.q, uniformParity(nq.q.n, par));
                    PsiTilde psi(ctx, cd);
                    GenMap comp = composeMaps(cd, braidMap(cd, 0, -1, BraidVariant::Primed),
                                              braidMap(cd, 0, 1, BraidVariant::DoublePrimed));
                    for (int j = 0; j < cd.n; ++j) {
                        json params{{"quiver", nq.name}, {"q", p}, {"parity", par}, {"j", j}};
                        out.push_back(timed("inverse", "inverse-fixes-B", params, [&] {
                            IqgExpr diff = comp.b[j] - IqgExpr::B(cd.n, j);
                            IHallElem img = psi.eval(diff);
                            return makeRecord("inverse", "inverse-fixes-B", params, img.isZero(),
                                              json{{"difference", ctx.toJson(img)}});
                        }));
                    }
                    if (!first)
                        continue;
                    for (int j = 0; j < cd.n; ++j) {
                        json params{{"quiver", nq.name}, {"parity", par}, {"j", j}};
                        out.push_back(timed("inverse", "inverse-fixes-k", params, [&] {
                            std::vector<int> e(cd.n, 0);
                            e[j] = 1;
                            bool ok = comp.k[j].coeff == RatFunc(1) && comp.k[j].k == e;
                            return makeRecord("inverse", "inverse-fixes-k", params, ok,
                                              json{{"image", IqgExpr::torus(comp.k[j].k, comp.k[j].coeff).str()}});
                        }));
                    }
                }
                return out;
            });
    return t;
}

std::vector<Task> serreTasks(const std::vector<int>& primes, const std::vector<NamedQuiver>& quivers,
                             const std::vector<int>& parities)
{
    std::vector<Task> t;
    for (int p : primes)
        for (auto& nq : quivers)
            t.push_back([p, nq, parities] {
                std::vector<CheckRecord> out;
                HallCtx ctx(nq.q, p);
                for (int par : parities) {
                    CartanData cd = cartanFromQuiver(nq.q, uniformParity(nq.q.n, par));
                    PsiTilde psi(ctx, cd);
                    for (auto& s : serreRelations(cd)) {
                        std::string name = "relation/" + serreKindName(s.kind);
                        json params{{"quiver", nq.name}, {"q", p}, {"parity", par}, {"i", s.i}, {"j", s.j}};
                        out.push_back(timed("hall", name, params, [&] {
                            if (s.kind == SerreKind::TorusB) {
                                bool ok = hallTorusBRelation(psi, s.i, s.j, 1) && hallTorusBRelation(psi, s.i, s.j, -1);
                                return makeRecord("hall", name, params, ok);
                            }
                            if (s.kind == SerreKind::TorusCommute)
                                return makeRecord("hall", name, params, hallTorusCommute(psi, s.i, s.j));
                            IHallElem img = psi.eval(s.expr);
                            return makeRecord("hall", name, params, img.isZero(),
                                              json{{"relation", s.expr.str()}, {"image", ctx.toJson(img)}});
                        }));
                    }
                }
                return out;
            });
    return t;
}

std::vector<Task> conjugationTasks(const std::vector<NamedQuiver>& quivers, const std::vector<int>& parities)
{
    std::vector<Task> t;
    for (auto& nq : quivers)
        t.push_back([nq, parities] {
            std::vector<CheckRecord> out;
            for (int par : parities) {
                CartanData cd = cartanFromQuiver(nq.q, uniformParity(nq.q.n, par));
                for (int i = 0; i < cd.n; ++i) {
                    if (!cd.finiteType(i))
                        continue;
                    for (int e : {1, -1}) {
                        json params{{"quiver", nq.name}, {"parity", par}, {"i", i}, {"e", e}};
                        auto t0 = Clock::now();
                        std::vector<ConjugationCheck> cs;
                        try {
                            cs = checkConjugations(cd, i, e);
                        } catch (const std::exception& ex) {
                            CheckRecord r = makeRecord("braid", "conjugation", params, false, json{{"error", ex.what()}});
                            r.ms = msSince(t0);
                            out.push_back(r);
                            continue;
                        }
                        double each = cs.empty() ? 0 : msSince(t0) / cs.size();
                        for (auto& c : cs) {
                            json p = params;
                            p["generator"] = c.generator;
                            CheckRecord r = makeRecord("braid", c.identity, p, c.holds,
                                                       json{{"lhs", c.lhs.str()}, {"rhs", c.rhs.str()}});
                            r.ms = each;
                            out.push_back(r);
                        }
                    }
                }
            }
            return out;
        });
    return t;
}

namespace {

IqgExpr randomExpr(const CartanData& cd, std::mt19937& rng)
{
    IqgExpr x;
    int terms = 1 + int(rng() % 3);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> word(rng() % 4);
        for (auto& w : word)
            w = int(rng() % cd.n);
        std::vector<int> k(cd.n);
        for (auto& e : k)
            e = int(rng() % 5) - 2;
        RatFunc c = RatFunc::vpow(long(rng() % 7) - 3) * RatFunc(long(rng() % 5) + 1);
        if (rng() % 3 == 0)
            c = c / (RatFunc(1) - RatFunc::vpow(2));
        x += IqgExpr::term(word, k, c);
    }
    return x;
}

std::vector<std::pair<std::string, CartanData>> propertyCartans()
{
    return {{"s1", cartanFromQuiver(splitRank2(1), {1, 0})},
            {"s2", cartanFromQuiver(splitRank2(2), {0, 1})},
            {"r1q", cartanFromQuiver(quasiSplitRank1())},
            {"q11", cartanFromQuiver(quasiSplitRank2(1, 1))},
            {"q21", cartanFromQuiver(quasiSplitRank2(2, 1))},
            {"f1", cartanFromQuiver(quasiSplitRank2Fixed(1), {0, 0, 1})}};
}

}  // namespace

std::vector<Task> involutionTasks(int samples, unsigned seed)
{
    std::vector<Task> t;
    for (auto& [name, cd] : propertyCartans())
        t.push_back([name, cd, samples, seed] {
            std::vector<CheckRecord> out;
            std::mt19937 rng(seed);
            json params{{"cartan", name}, {"samples", samples}, {"seed", seed}};
            struct Prop {
                std::string name;
                std::function<bool(const IqgExpr&)> holds;
            };
            std::vector<Prop> props{
                {"psi-squared", [&](const IqgExpr& x) { return applyPsi(cd, applyPsi(cd, x)) == x; }},
                {"sigma-squared", [&](const IqgExpr& x) { return applySigma(cd, applySigma(cd, x)) == x; }},
                {"sigma-psi-commute",
                 [&](const IqgExpr& x) { return applySigma(cd, applyPsi(cd, x)) == applyPsi(cd, applySigma(cd, x)); }},
            };
            std::vector<IqgExpr> xs;
            for (int s = 0; s < samples; ++s)
                xs.push_back(randomExpr(cd, rng));
            for (auto& pr : props)
                out.push_back(timed("braid", pr.name, params, [&] {
                    for (auto& x : xs)
                        if (!pr.holds(x))
                            return makeRecord("braid", pr.name, params, false, json{{"expression", x.str()}});
                    return makeRecord("braid", pr.name, params, true);
                }));
            out.push_back(timed("braid", "normal-order-confluence", params, [&] {
                for (int s = 0; s < samples; ++s) {
                    std::vector<Letter> letters(2 + rng() % 5);
                    for (auto& l : letters) {
                        l.isK = rng() % 2;
                        l.idx = int(rng() % cd.n);
                        l.pow = l.isK ? (rng() % 2 ? 1 : -1) : 1;
                    }
                    IqgExpr a = normalOrderLetters(cd, letters, RatFunc(1), rng());
                    IqgExpr b = normalOrderLetters(cd, letters, RatFunc(1), rng());
                    if (!(a == b))
                        return makeRecord("braid", "normal-order-confluence", params, false,
                                          json{{"first", a.str()}, {"second", b.str()}});
                }
                return makeRecord("braid", "normal-order-confluence", params, true);
            }));
            for (int i = 0; i < cd.n; ++i) {
                if (!cd.finiteType(i))
                    continue;
                for (int e : {1, -1}) {
                    json p{{"cartan", name}, {"i", i}, {"e", e}};
                    out.push_back(timed("braid", "torus-images-invertible", p, [&] {
                        GenMap g = braidMap(cd, i, e, BraidVariant::DoublePrimed);
                        bool ok = true;
                        for (int j = 0; j < cd.n && ok; ++j) {
                            IqgExpr kj = IqgExpr::torus(g.k[j].k, g.k[j].coeff);
                            std::vector<int> neg(cd.n);
                            for (int l = 0; l < cd.n; ++l)
                                neg[l] = -g.k[j].k[l];
                            IqgExpr inv = IqgExpr::torus(neg, g.k[j].coeff.inverse());
                            ok = !g.k[j].coeff.isZero() && mulNormalOrder(cd, kj, inv) == IqgExpr::scalar(cd.n, 1);
                            for (int l = 0; l < cd.n && ok; ++l) {
                                IqgExpr kl = IqgExpr::torus(g.k[l].k, g.k[l].coeff);
                                ok = mulNormalOrder(cd, kj, kl) == mulNormalOrder(cd, kl, kj);
                            }
                        }
                        return makeRecord("braid", "torus-images-invertible", p, ok);
                    }));
                    for (int j = 0; j < cd.n; ++j) {
                        if (j == i || j == cd.tau[i] || cd.c[i][j] != 0 || cd.c[cd.tau[i]][j] != 0)
                            continue;
                        json pj = p;
                        pj["j"] = j;
                        out.push_back(timed("braid", "orthogonal-B-fixed", pj, [&] {
                            GenMap g = braidMap(cd, i, e, BraidVariant::DoublePrimed);
                            return makeRecord("braid", "orthogonal-B-fixed", pj, g.b[j] == IqgExpr::B(cd.n, j),
                                              json{{"image", g.b[j].str()}});
                        }));
                    }
                }
            }
            return out;
        });
    return t;
}

namespace {

struct ModuleQuiver {
    std::string name;
    IQuiver q;
};

std::vector<ModuleQuiver> moduleQuivers()
{
    return {{"r1s", splitRank1()},          {"r1q", quasiSplitRank1()},
            {"s1", splitRank2(1)},          {"s2", splitRank2(2)},
            {"q11", quasiSplitRank2(1, 1)}, {"f1", quasiSplitRank2Fixed(1)}};
}

// Catalog of nq over F_p, filled from the cache directory when a file for it
// exists (the loader re-identifies every class and re-checks the mass formula).
std::unique_ptr<Catalog> openCatalog(const IQuiver& q, int p, bool kqOnly, int cap, const std::string& cacheDir)
{
    auto cat = std::make_unique<Catalog>(buildBarQuiver(q), p, kqOnly, cap);
    if (!cacheDir.empty()) {
        auto path = std::filesystem::path(cacheDir) / cacheFileName(cat->quiver(), p, kqOnly);
        if (std::filesystem::exists(path))
            loadCatalog(*cat, path.string());
    }
    return cat;
}

}  // namespace

std::vector<Task> moduleTasks(const std::vector<int>& primes, int dimCap, const std::string& cacheDir)
{
    std::vector<Task> t;
    for (int p : primes) {
        for (auto& mq : moduleQuivers())
            t.push_back([p, mq, dimCap, cacheDir] {
                std::vector<CheckRecord> out;
                // the four-vertex quiver gets one dimension less
                int cap = mq.q.n >= 4 ? std::min(dimCap, 4) : dimCap;
                json params{{"quiver", mq.name}, {"q", p}, {"dim_cap", cap}};
                std::unique_ptr<Catalog> cat;
                out.push_back(invariantRecord("mass-certificate", params, [&] {
                    cat = openCatalog(mq.q, p, false, cap, cacheDir);
                    return checkMassCertificates(*cat, cap);
                }));
                int rpCap = std::min(cap, 5);
                json rp{{"quiver", mq.name}, {"q", p}, {"dim_cap", rpCap}};
                out.push_back(invariantRecord("riedtmann-peng", rp, [&] {
                    if (!cat)
                        cat = openCatalog(mq.q, p, false, cap, cacheDir);
                    return checkRiedtmannPeng(*cat, rpCap);
                }));
                return out;
            });
        t.push_back([p, dimCap] {
            std::vector<CheckRecord> out;
            std::vector<ModuleQuiver> qs{{"r1s", splitRank1()},
                                         {"r1q", quasiSplitRank1()},
                                         {"s1", splitRank2(1, true)},
                                         {"s2", splitRank2(2, true)},
                                         {"q11", quasiSplitRank2(1, 1, true)},
                                         {"f1", quasiSplitRank2Fixed(1, true)}};
            for (auto& mq : qs) {
                int adjCap = std::min(dimCap, mq.q.n >= 3 ? 4 : 5);
                out.push_back(invariantRecord("adjunction", {{"quiver", mq.name}, {"q", p}, {"ell", 0}, {"dim_cap", adjCap}},
                                              [&] { return checkAdjunction(mq.q, 0, p, adjCap); }));
            }
            for (auto& mq : qs) {
                if (mq.q.n == 1 || (mq.q.n == 2 && mq.q.tau[0] == 1))
                    continue;
                int cap = mq.q.n >= 4 ? std::min(dimCap, 4) : dimCap;
                out.push_back(invariantRecord("dimension-law", {{"quiver", mq.name}, {"q", p}, {"ell", 0}, {"dim_cap", cap}},
                                              [&] { return checkDimensionLaw(mq.q, 0, p, cap); }));
            }
            return out;
        });
        t.push_back([p] {
            std::vector<CheckRecord> out;
            for (auto& nq : quasiSplitFamily(2, 2, false, false)) {
                out.push_back(invariantRecord("ext-factorization", {{"quiver", nq.name}, {"q", p}, {"mmax", 1}},
                                              [&] { return checkExtFactorization(nq.q, 0, 2, p, 1); }));
            }
            for (int m1 = 0; m1 <= 2; ++m1)
                for (int n2 = 0; n2 <= 2; ++n2)
                    for (int d = 0; d <= std::min(m1, n2); ++d) {
                        json par{{"q", p}, {"m1", m1}, {"n2", n2}, {"d", d}};
                        out.push_back(timed("modules", "rank-count", par, [&] {
                            Int b = rankCountBrute(p, m1, n2, d), c = rankCountClosed(p, m1, n2, d);
                            return makeRecord("modules", "rank-count", par, b == c,
                                              json{{"enumerated", b.get_str()}, {"closed", c.get_str()}});
                        }));
                    }
            return out;
        });
    }
    return t;
}

namespace {

std::vector<HallBasis> samplePool(HallCtx& c, int dim, bool torsionOnly)
{
    Catalog cat(c.registryPtr(), true, dim);
    std::vector<HallBasis> pool;
    int n = c.base().n;
    for (auto& d : cat.allDims(dim))
        for (auto& rc : cat.enumerate(d)) {
            if (rc.rep.total() == 0)
                continue;
            if (torsionOnly && !inTorsionClass(c.quiver(), 0, rc.rep))
                continue;
            pool.push_back({rc.key, DimVec(n, 0)});
        }
    for (int v = 0; v < n; ++v)
        pool.push_back({ClassKey{}, unitVec(n, v)});
    return pool;
}

}  // namespace

std::vector<Task> hallStructureTasks(const std::vector<int>& primes, int aMax, int bMax, int samples)
{
    std::vector<Task> t;
    std::vector<NamedQuiver> qs = rank1Family();
    append(qs, splitFamily(aMax, true));
    append(qs, quasiSplitFamily(std::min(aMax, 1), std::min(bMax, 1), true, true));
    for (int p : primes)
        for (auto& nq : qs)
            t.push_back([p, nq, samples] {
                std::vector<CheckRecord> out;
                HallCtx c(nq.q, p);
                json base{{"quiver", nq.name}, {"q", p}};
                json pa = base;
                pa["samples"] = samples;
                out.push_back(timed("hall", "associativity", pa, [&] {
                    auto pool = samplePool(c, 2, false);
                    std::mt19937 rng(7);
                    for (int s = 0; s < samples; ++s) {
                        HallBasis a = pool[rng() % pool.size()], b = pool[rng() % pool.size()],
                                  d = pool[rng() % pool.size()];
                        IHallElem x = IHallElem::term(a, c.scalar(1)), y = IHallElem::term(b, c.scalar(1)),
                                  z = IHallElem::term(d, c.scalar(1));
                        IHallElem l = c.mul(c.mul(x, y), z), r = c.mul(x, c.mul(y, z));
                        if (!(l == r))
                            return makeRecord("hall", "associativity", pa, false,
                                              json{{"x", c.basisString(a)},
                                                   {"y", c.basisString(b)},
                                                   {"z", c.basisString(d)},
                                                   {"lhs", c.toJson(l)},
                                                   {"rhs", c.toJson(r)}});
                    }
                    return makeRecord("hall", "associativity", pa, true);
                }));
                out.push_back(timed("hall", "k-commute-table", base, [&] {
                    Catalog cat(c.registryPtr(), true, 2);
                    for (auto& d : cat.allDims(2))
                        for (auto& rc : cat.enumerate(d))
                            for (int v = 0; v < nq.q.n; ++v) {
                                int brute = c.kCommuteExpBrute(v, rc.rep);
                                int formula = c.kCommuteExp(unitVec(nq.q.n, v), rc.rep.dim);
                                if (brute != formula)
                                    return makeRecord("hall", "k-commute-table", base, false,
                                                      json{{"module", rc.keyStr}, {"v", v}, {"derived", brute},
                                                           {"euler", formula}});
                            }
                    return makeRecord("hall", "k-commute-table", base, true);
                }));
                for (int i = 0; i < nq.q.n; ++i) {
                    if (nq.q.tau[i] != i)
                        continue;
                    for (int par : {0, 1}) {
                        CartanData cd = cartanFromQuiver(nq.q, uniformParity(nq.q.n, par));
                        PsiTilde psi(c, cd);
                        for (int m = 1; m <= 4; ++m) {
                            json pd = base;
                            pd["i"] = i;
                            pd["parity"] = par;
                            pd["m"] = m;
                            out.push_back(timed("hall", "divided-power-expansion", pd, [&] {
                                IHallElem a = dividedPowerHall(c, i, m, par), b = dividedPowerExpansion(c, i, m, par);
                                return makeRecord("hall", "divided-power-expansion", pd, a == b, hallPair(c, a, b));
                            }));
                            out.push_back(timed("hall", "divided-power-image", pd, [&] {
                                IHallElem a = psi.eval(dividedPower(cd, i, m, par));
                                QSqrt scale = c.scalar(1);
                                for (int s = 0; s < m; ++s)
                                    scale *= c.scalar(1 - c.q());
                                IHallElem b = dividedPowerHall(c, i, m, par).scaled(scale.inverse());
                                return makeRecord("hall", "divided-power-image", pd, a == b, hallPair(c, a, b));
                            }));
                        }
                    }
                }
                if (!nq.q.isSink(0))
                    return out;
                HallCtx c2(reflectQuiver(nq.q, orbitOf0(nq.q)), p);
                // Gamma(x*y) = Gamma(x)*Gamma(y). For two modules the left side is
                // assembled from the unreduced middle terms, each sent through F+
                // (every middle term lies in the torsion class, while the
                // homology of one need not).
                out.push_back(timed("hall", "gamma-morphism", pa, [&] {
                    auto pool = samplePool(c, 2, true);
                    const BarQuiver& bq = c.quiver();
                    const BarQuiver& bq2 = c2.quiver();
                    std::mt19937 rng(11);
                    for (int s = 0; s < samples; ++s) {
                        HallBasis a = pool[rng() % pool.size()], b = pool[rng() % pool.size()];
                        IHallElem x = IHallElem::term(a, c.scalar(1)), y = IHallElem::term(b, c.scalar(1));
                        IHallElem l;
                        if (!a.mod.empty() && !b.mod.empty()) {
                            Rep m = c.registry().representative(a.mod), n = c.registry().representative(b.mod);
                            forEachExtension(bq, m, n, false,
                                             [&](const Rep& mid) { l += c2.reduceClass(reflectPlus(bq, bq2, 0, mid)); });
                            l = l.scaled(c2.vpow(eulerQ(nq.q, m.dim, n.dim) - 2 * homDim(bq, m, n)));
                        } else {
                            l = gammaApply(c, c2, 0, c.mul(x, y));
                        }
                        IHallElem r = c2.mul(gammaApply(c, c2, 0, x), gammaApply(c, c2, 0, y));
                        if (!(l == r))
                            return makeRecord("hall", "gamma-morphism", pa, false,
                                              json{{"x", c.basisString(a)}, {"y", c.basisString(b)},
                                                   {"lhs", c2.toJson(l)}, {"rhs", c2.toJson(r)}});
                    }
                    return makeRecord("hall", "gamma-morphism", pa, true);
                }));
                if (nq.q.n < 2)
                    return out;
                std::vector<int> parities = nq.q.tau[0] == 0 ? std::vector<int>{0, 1} : std::vector<int>{0};
                for (int par : parities) {
                    CartanData cd = cartanFromQuiver(nq.q, uniformParity(nq.q.n, par));
                    CartanData cd2 = cartanFromQuiver(c2.base(), uniformParity(nq.q.n, par));
                    PsiTilde p1(c, cd), p2(c2, cd2);
                    GenMap tmap = braidMap(cd, 0, 1, BraidVariant::DoublePrimed);
                    for (int j = 0; j < cd.n; ++j) {
                        json pj = base;
                        pj["parity"] = par;
                        pj["j"] = j;
                        out.push_back(timed("hall", "gamma-intertwines-B", pj, [&] {
                            IHallElem l = gammaApply(c, c2, 0, p1.gen(j)), r = p2.eval(tmap.b[j]);
                            return makeRecord("hall", "gamma-intertwines-B", pj, l == r, hallPair(c2, l, r));
                        }));
                        out.push_back(timed("hall", "gamma-intertwines-k", pj, [&] {
                            IHallElem l = gammaApply(c, c2, 0, p1.torus(unitVec(cd.n, j)));
                            IHallElem r = p2.eval(IqgExpr::torus(tmap.k[j].k, tmap.k[j].coeff));
                            return makeRecord("hall", "gamma-intertwines-k", pj, l == r, hallPair(c2, l, r));
                        }));
                    }
                }
                return out;
            });
    return t;
}

std::vector<Task> homomorphismTasks(const std::vector<int>& primes, const std::vector<NamedQuiver>& quivers,
                                    int wordCap)
{
    std::vector<Task> t;
    for (int p : primes)
        for (auto& nq : quivers)
            t.push_back([p, nq, wordCap] {
                std::vector<CheckRecord> out;
                HallCtx ctx(nq.q, p);
                CartanData cd = cartanFromQuiver(nq.q);
                PsiTilde psi(ctx, cd);
                GenMap tmap = braidMap(cd, 0, 1, BraidVariant::DoublePrimed);
                for (auto& s : serreRelations(cd)) {
                    if (s.kind == SerreKind::TorusB || s.kind == SerreKind::TorusCommute)
                        continue;
                    std::string name = "symmetry-preserves/" + serreKindName(s.kind);
                    json params{{"quiver", nq.name}, {"q", p}, {"i", s.i}, {"j", s.j}};
                    auto t0 = Clock::now();
                    IqgExpr img = applyGenMap(cd, tmap, s.expr);
                    if (img.maxLength() > wordCap) {
                        CheckRecord r = skippedRecord("braid", name, params,
                                                      "bound: image word length " + std::to_string(img.maxLength()) +
                                                          " exceeds word cap " + std::to_string(wordCap));
                        r.ms = msSince(t0);
                        out.push_back(r);
                        continue;
                    }
                    out.push_back(timed("braid", name, params, [&] {
                        IHallElem h = psi.eval(img);
                        return makeRecord("braid", name, params, h.isZero(), json{{"image", ctx.toJson(h)}});
                    }));
                }
                return out;
            });
    return t;
}

namespace {

std::vector<NamedQuiver> hallQuivers(int a, int b, bool iSink)
{
    std::vector<NamedQuiver> qs = rank1Family();
    append(qs, splitFamily(a, iSink));
    append(qs, quasiSplitFamily(a, b, iSink, true));
    return qs;
}

std::vector<NamedQuiver> rank2Quivers(int a, int b)
{
    std::vector<NamedQuiver> qs = splitFamily(a, true);
    append(qs, quasiSplitFamily(a, b, true, true));
    return qs;
}

}  // namespace

Report runSuite(const RunConfig& cfg)
{
    cfg.validate();
    const std::string& s = cfg.suite;
    bool all = s == "all";
    std::vector<Task> tasks;
    if (all || s == "identities") {
        append(tasks, identityTasks(cfg.dmax));
        append(tasks, vanishingTasks(std::min(cfg.dmax, 6), std::min(cfg.dmax, 4)));
    }
    if (all || s == "modules")
        append(tasks, moduleTasks(cfg.primes, cfg.dimCap, cfg.cacheDir));
    if (all || s == "hall") {
        append(tasks, fastPathTasks(cfg.primes, cfg.a, cfg.b));
        append(tasks, hallStructureTasks(cfg.primes, cfg.a, cfg.b, 50));
        append(tasks, serreTasks(cfg.primes, hallQuivers(cfg.a, cfg.b, true), cfg.parities));
    }
    if (all || s == "braid") {
        append(tasks, braidSplitTasks(cfg.primes, cfg.a, cfg.parities));
        append(tasks, braidQuasiSplitTasks(cfg.primes, cfg.a, cfg.b, true));
        // the symbolic checks are cheap and run one step past the Hall bounds
        append(tasks, conjugationTasks(rank2Quivers(cfg.a + 1, cfg.b + 1), cfg.parities));
        append(tasks, involutionTasks(100, 1));
        append(tasks, homomorphismTasks(cfg.primes, rank2Quivers(cfg.a, cfg.b), cfg.wordCap));
    }
    if (all || s == "inverse")
        append(tasks, inverseTasks(cfg.primes, rank2Quivers(cfg.a, cfg.b)));
    Report r;
    r.config = configJson(cfg);
    r.records = runTasks(tasks, cfg.jobs);
    return r;
}

namespace {

std::vector<std::pair<std::string, std::unique_ptr<Catalog>>> cacheTargets(const RunConfig& cfg)
{
    std::vector<std::pair<std::string, std::unique_ptr<Catalog>>> out;
    for (int p : cfg.primes)
        for (auto& mq : moduleQuivers()) {
            int cap = mq.q.n >= 4 ? std::min(cfg.dimCap, 4) : cfg.dimCap;
            out.emplace_back(mq.name, std::make_unique<Catalog>(buildBarQuiver(mq.q), p, false, cap));
        }
    return out;
}

void requireDir(const RunConfig& cfg)
{
    if (cfg.cacheDir.empty())
        throw std::invalid_argument("--cache-dir is required for cache operations");
}

}  // namespace

CacheStatus cacheBuild(const RunConfig& cfg)
{
    requireDir(cfg);
    std::filesystem::create_directories(cfg.cacheDir);
    CacheStatus st;
    for (auto& [name, cat] : cacheTargets(cfg)) {
        InvariantOutcome o = checkMassCertificates(*cat, cat->dimCap());
        auto path = std::filesystem::path(cfg.cacheDir) / cacheFileName(cat->quiver(), cat->q(), cat->kqOnly());
        if (!o.ok()) {
            st.ok = false;
            st.lines.push_back("FAIL " + name + " q=" + std::to_string(cat->q()) + ": " + o.firstFailure);
            continue;
        }
        saveCatalog(*cat, path.string());
        st.lines.push_back("built " + path.string() + " (" + name + ", q=" + std::to_string(cat->q()) + ", " +
                           std::to_string(o.checked) + " dimension vectors certified)");
    }
    return st;
}

CacheStatus cacheVerify(const RunConfig& cfg)
{
    requireDir(cfg);
    CacheStatus st;
    for (auto& [name, cat] : cacheTargets(cfg)) {
        auto path = std::filesystem::path(cfg.cacheDir) / cacheFileName(cat->quiver(), cat->q(), cat->kqOnly());
        if (!std::filesystem::exists(path)) {
            st.ok = false;
            st.lines.push_back("missing " + path.string());
            continue;
        }
        try {
            loadCatalog(*cat, path.string());
            st.lines.push_back("verified " + path.string());
        } catch (const std::exception& e) {
            st.ok = false;
            st.lines.push_back("FAIL " + path.string() + ": " + e.what());
        }
    }
    return st;
}

CacheStatus cachePurge(const RunConfig& cfg)
{
    requireDir(cfg);
    CacheStatus st;
    if (!std::filesystem::exists(cfg.cacheDir))
        return st;
    for (auto& e : std::filesystem::directory_iterator(cfg.cacheDir)) {
        std::string f = e.path().filename().string();
        if (e.is_regular_file() && f.rfind("catalog-", 0) == 0 && e.path().extension() == ".json") {
            std::filesystem::remove(e.path());
            st.lines.push_back("removed " + e.path().string());
        }
    }
    return st;
}

}  // namespace iqbraid
