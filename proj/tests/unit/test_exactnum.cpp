#include "doctest.h"

#include "iqbraid/exactnum.hpp"

#include <random>

using namespace iqbraid;

namespace {

LaurentPoly v(long e) { return LaurentPoly::vpow(e); }

// Gaussian binomial in t = v^2 by the standard recurrence, then the symmetric
// normalization v^{-r(m-r)}. Independent of qint and of exact division.
LaurentPoly gaussOracle(long m, long r)
{
    if (r < 0 || r > m)
        return LaurentPoly();
    if (r == 0 || r == m)
        return LaurentPoly(1);
    // G(m,r) = G(m-1,r-1) + t^r G(m-1,r), computed in v with t = v^2 and the
    // symmetric shift applied at the end.
    std::vector<std::vector<LaurentPoly>> g(m + 1, std::vector<LaurentPoly>(m + 1));
    for (long n = 0; n <= m; ++n) {
        g[n][0] = LaurentPoly(1);
        for (long k = 1; k <= n; ++k)
            g[n][k] = g[n - 1][k - 1] + (k <= n - 1 ? v(2 * k) * g[n - 1][k] : LaurentPoly());
    }
    return v(-r * (m - r)) * g[m][r];
}

}  // namespace

TEST_CASE("qint small values")
{
    CHECK(qint(1) == LaurentPoly(1));
    CHECK(qint(2) == v(1) + v(-1));
    CHECK(qint(-2) == -(v(1) + v(-1)));
    CHECK(qint(0).isZero());
}

TEST_CASE("qint matches the defining quotient")
{
    for (long m = -12; m <= 12; ++m) {
        RatFunc q(v(m) - v(-m), v(1) - v(-1));
        CHECK(q == RatFunc(qint(m)));
    }
}

TEST_CASE("qint antisymmetry")
{
    for (long m = 0; m <= 50; ++m)
        CHECK(qint(-m) == -qint(m));
}

TEST_CASE("factorials")
{
    CHECK(qfactorial(FactKind::Plain, 0) == LaurentPoly(1));
    CHECK(qfactorial(FactKind::Plain, 2) == v(1) + v(-1));
    CHECK(qfactorial(FactKind::Double, 0) == LaurentPoly(1));
    LaurentPoly four = v(3) + v(1) + v(-1) + v(-3);
    CHECK(qfactorial(FactKind::Double, 2) == (v(1) + v(-1)) * four);
}

TEST_CASE("qbinom examples and oracle")
{
    CHECK(qbinom(2, 1) == RatFunc(v(1) + v(-1)));
    CHECK(qbinom(-1, 1) == RatFunc(-1));
    CHECK(qbinom(3, 2) == RatFunc(v(2) + LaurentPoly(1) + v(-2)));
    CHECK(qbinom(2, 3).isZero());
    CHECK(qbinom(5, -1).isZero());
    for (long m = 0; m <= 10; ++m)
        for (long r = 0; r <= 10; ++r)
            CHECK(qbinomPoly(m, r) == gaussOracle(m, r));
}

TEST_CASE("qbinom negative top via upper negation")
{
    // [-m, r] = (-1)^r [m+r-1, r]
    for (long m = 1; m <= 8; ++m)
        for (long r = 0; r <= 6; ++r) {
            LaurentPoly s = gaussOracle(m + r - 1, r);
            CHECK(qbinomPoly(-m, r) == (r % 2 ? -s : s));
        }
}

TEST_CASE("qbinom Pascal recurrence")
{
    for (long m = -10; m <= 10; ++m)
        for (long r = 1; r <= 10; ++r) {
            RatFunc lhs = qbinom(m, r);
            RatFunc rhs = RatFunc(v(r)) * qbinom(m - 1, r) + RatFunc(v(r - m)) * qbinom(m - 1, r - 1);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("ratfunc arithmetic and canonical form")
{
    RatFunc one(1);
    CHECK(RatFunc(v(1)) * RatFunc(v(-1)) == one);
    CHECK(RatFunc(v(1) - v(-1)) * RatFunc(qint(2)) == RatFunc(v(2) - v(-2)));
    RatFunc x = one / RatFunc(v(1) - v(-1));
    // 1/(v - v^{-1}) = v/(v^2 - 1)
    CHECK(x.num() == v(1));
    CHECK(x.den() == v(2) - LaurentPoly(1));
    CHECK(x.normalized() == x);
    CHECK(x * RatFunc(v(1) - v(-1)) == one);
    CHECK_THROWS_AS(one / RatFunc(), std::domain_error);

    // den keeps leading coefficient 1 and lowest exponent 0
    RatFunc y(LaurentPoly(3), LaurentPoly::monomial(-2, 6) + LaurentPoly::monomial(1, 2));
    CHECK(y.den().leading() == 1);
    CHECK(y.den().minExp() == 0);
    CHECK(y.normalized() == y);
    CHECK(y + y - y == y);
    CHECK(rfOps(y, y, RfOp::Div) == one);
}

TEST_CASE("ratfunc normalization is idempotent on random inputs")
{
    std::mt19937 rng(7);
    auto rp = [&] {
        LaurentPoly p;
        for (int k = 0; k < 4; ++k)
            p.addTerm(long(rng() % 9) - 4, long(rng() % 7) - 3);
        return p.isZero() ? LaurentPoly(1) : p;
    };
    for (int t = 0; t < 100; ++t) {
        LaurentPoly a = rp(), b = rp(), c = rp();
        RatFunc f(a * c, b * c);
        CHECK(f == RatFunc(a, b));
        CHECK(f.normalized() == f);
    }
}

TEST_CASE("evalSqrtQ")
{
    CHECK(evalSqrtQ(v(2), 3) == QSqrt(3, 0, 3));
    CHECK(evalSqrtQ(v(1), 2) == QSqrt(0, 1, 2));
    QSqrt x = evalSqrtQ(v(1) + v(-1), 2);
    CHECK(x == QSqrt(0, Rat(3, 2), 2));
    // (sqrt2 + 1/sqrt2)^2 = 9/2
    CHECK(x * x == QSqrt(Rat(9, 2), 0, 2));
    CHECK(evalSqrtQ(v(-3), 2) == QSqrt(0, Rat(1, 4), 2));
}

TEST_CASE("evalSqrtQ is multiplicative")
{
    std::mt19937 rng(11);
    auto rp = [&] {
        LaurentPoly p;
        for (int k = 0; k < 5; ++k) {
            long e = long(rng() % 13) - 6;
            Rat c(long(rng() % 11) - 5, long(rng() % 3) + 1);
            c.canonicalize();
            p.addTerm(e, c);
        }
        return p;
    };
    for (long q : {2L, 3L, 5L})
        for (int t = 0; t < 100; ++t) {
            LaurentPoly a = rp(), b = rp();
            CHECK(evalSqrtQ(a * b, q) == evalSqrtQ(a, q) * evalSqrtQ(b, q));
        }
}

TEST_CASE("qsqrt inverse")
{
    QSqrt x(2, 3, 5);
    CHECK(x * x.inverse() == QSqrt(1, 0, 5));
}

TEST_CASE("serialize laurent poly")
{
    auto s = serialize(v(-1) + LaurentPoly::monomial(2, Rat(-3, 4)));
    REQUIRE(s.size() == 2);
    CHECK(std::get<0>(s[0]) == -1);
    CHECK(std::get<1>(s[1]) == "-3");
    CHECK(std::get<2>(s[1]) == "4");
}
