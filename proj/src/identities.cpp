#include "iqbraid/identities.hpp"

#include <map>

namespace iqbraid {

namespace {

LaurentPoly v(long e) { return LaurentPoly::vpow(e); }

const LaurentPoly& vMinusInv()
{
    static const LaurentPoly x = v(1) - v(-1);
    return x;
}

// v^l + v^{-l}
LaurentPoly vPlus(long l) { return v(l) + v(-l); }

LaurentPoly vPlusProd(long lo, long hi)
{
    LaurentPoly p(1);
    for (long l = lo; l <= hi; ++l)
        p *= vPlus(l);
    return p;
}

// Sums terms num/den, grouping by denominator so that most additions stay
// polynomial.
class Accum {
public:
    // sign * v^e * (v - v^{-1})^t * num / den
    void add(long sign, long e, long t, LaurentPoly num, LaurentPoly den)
    {
        num *= v(e);
        if (sign < 0)
            num = -num;
        if (t >= 0)
            num *= pow(vMinusInv(), unsigned(t));
        else
            den *= pow(vMinusInv(), unsigned(-t));
        groups_[den] += num;
    }
    RatFunc total() const
    {
        RatFunc r;
        for (auto& [den, num] : groups_)
            if (!num.isZero())
                r += RatFunc(num, den);
        return r;
    }

private:
    std::map<LaurentPoly, LaurentPoly> groups_;
};

}  // namespace

IdentityReport makeReport(std::string name, std::vector<long> params, RatFunc lhs, RatFunc rhs)
{
    IdentityReport r;
    r.name = std::move(name);
    r.params = std::move(params);
    r.holds = lhs == rhs;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    return r;
}

long pExp(long a, long r, long s, long t, long uM)
{
    return -s * (a + t) + 2 * r * a + (uM - t + 2 * s - r) * (t - r) + (s - r) * (s - r) + choose(s - r, 2)
        + (t - r) * (t - r) + choose(t - r, 2) + r * (s + t) - choose(r + 1, 2) + 1;
}

long zExp(long a, long r, long s, long k, long m, long n, long uM)
{
    return k * (k - 1) + m * (m - 1) - choose(r - 2 * k, 2) - choose(s - 2 * m, 2)
        + pExp(a, n, r - 2 * k, s - 2 * m, uM);
}

long pPrimeExp(long t, long d, long m, long n)
{
    return (m - d) * (m - d) + choose(m - d, 2) + (n - d) * (n - d) + choose(n - d, 2) + d * (m + n - d)
        + choose(d, 2) + (t - (n - d)) * (n - d);
}

long wExp(long cij, long ctij, long m1, long m2, long n1, long n2, long d, long e, long t1, long t3)
{
    return cij * (m1 - 2 * d) + ctij * (n1 - 2 * e) - m1 * m2 - n1 * n2 + 2 * (n1 - e) * (n2 - d)
        + (e - d) * (m1 + m2 - n1 - n2) + 2 * (m1 - d) * (m2 - e) + pPrimeExp(t3, d, m1, n2)
        + pPrimeExp(t1, e, n1, m2) + 1;
}

IdentityReport checkStdBinomial(long d)
{
    BiLaurent lhs;
    for (long n = 0; n <= d; ++n) {
        BiLaurent term = BiLaurent::fromV(qbinomPoly(d, n) * v(n * (d - 1)), n);
        lhs += term;
    }
    BiLaurent rhs = BiLaurent::monomial(0, 0);
    for (long j = 0; j < d; ++j) {
        BiLaurent f = BiLaurent::monomial(0, 0);
        f.addTerm(2 * j, 1, 1);
        rhs = rhs * f;
    }
    IdentityReport r;
    r.name = "std-binomial";
    r.params = {d};
    r.holds = lhs == rhs;
    // The v-part of each side at z = 1 is recorded for reporting.
    LaurentPoly l1, r1;
    for (auto& [k, c] : lhs.terms())
        l1.addTerm(k.first, c);
    for (auto& [k, c] : rhs.terms())
        r1.addTerm(k.first, c);
    r.lhs = RatFunc(l1);
    r.rhs = RatFunc(r1);
    return r;
}

IdentityReport checkKm1(long p)
{
    Accum acc;
    for (long k = 0; k <= p; ++k) {
        long m = p - k;
        acc.add(1, -2 * k * m + 2 * m, 0, qfact(p), qdfact(k) * qdfact(m));
    }
    // p(3-p)/2 is always an integer
    return makeReport("km1", {p}, acc.total(), RatFunc(v(p * (3 - p) / 2)));
}

IdentityReport checkKmrd(long d)
{
    Accum acc;
    for (long k = 0; k <= d; ++k)
        for (long m = 0; k + m <= d; ++m) {
            long r = d - k - m;
            acc.add(r % 2 ? -1 : 1, choose(r + 1, 2) - 2 * (k - 1) * m, 0, LaurentPoly(1),
                    qfact(r) * qdfact(k) * qdfact(m));
        }
    return makeReport("kmrd", {d}, acc.total(), RatFunc());
}

IdentityReport checkKmPair(long p, long d)
{
    IdentityReport a = checkKm1(p), b = checkKmrd(d);
    a.name = "km1-kmrd";
    a.params = {p, d};
    a.holds = a.holds && b.holds;
    return a;
}

DC computeDC(long d)
{
    Accum d0, d1, c0, c1;
    for (long t = 0; t <= d; ++t)
        for (long k = 0; t + k <= d; ++k)
            for (long m = 0; t + k + m <= d; ++m) {
                long n = d - t - k - m;
                long e = t * t - 2 * d * t + t + 2 * n * t + choose(n + 1, 2) - 2 * k * m - 2 * m;
                (n % 2 ? d1 : d0).add(1, e, t, LaurentPoly(1), qfact(n) * qdfact(k) * qdfact(m));
            }
    for (long k = 0; k <= d; ++k)
        for (long m = 0; k + m <= d; ++m) {
            long n = d - k - m;
            long e = choose(n + 1, 2) - 2 * k * m + 2 * k;
            (n % 2 ? c0 : c1).add(1, e, 0, LaurentPoly(1), qfact(n) * qdfact(k) * qdfact(m));
        }
    return {d0.total(), d1.total(), c0.total(), c1.total()};
}

RatFunc dcCommonValue(long d)
{
    return RatFunc(v(d) * vPlusProd(1, d - 1), qfact(d));
}

IdentityReport checkDC(long d)
{
    DC x = computeDC(d);
    RatFunc c = dcCommonValue(d);
    IdentityReport r = makeReport("dc-common-value", {d}, x.D0, c);
    r.holds = x.D0 == c && x.D1 == c && x.C0 == c && x.C1 == c;
    return r;
}

IdentityReport checkDCSum(long d)
{
    DC x = computeDC(d);
    RatFunc two = RatFunc(2) * dcCommonValue(d);
    IdentityReport r = makeReport("dc-sum-closed-form", {d}, x.C0 + x.C1, two);
    r.holds = r.holds && x.D0 + x.D1 == two;
    return r;
}

IdentityReport checkDDiff(long d)
{
    DC x = computeDC(d);
    return makeReport("d0-minus-d1", {d}, x.D0 - x.D1, RatFunc());
}

IdentityReport checkPartialProduct(long d, long k)
{
    if (d < 1 || k < 0 || k > d)
        throw std::invalid_argument("checkPartialProduct requires 0 <= k <= d, d >= 1");
    Accum acc;
    for (long s = 0; s <= k; ++s)
        acc.add(1, (1 - d) * (d - s), d - s, vPlusProd(d - s + 1, d), qfact(s));
    Accum rhs;
    rhs.add(1, d * (k + 1 - d), d - k, vPlusProd(d - k, d - 1), qfact(k));
    return makeReport("partial-product", {d, k}, acc.total(), rhs.total());
}

bool admissibleA(long a, long d, long u)
{
    return a >= 0 && d >= 0 && 2 * d <= a && u >= 0 && u <= a - 2 * d && !(d == 0 && u == 0);
}

namespace {

// One half of A or A': rOdd selects the parity of r; withT includes the
// t >= 1 tail; extra adds 2k + 2m to the exponent.
void addAHalf(Accum& acc, long sign, long a, long d, long u, bool rOdd, bool withT, bool extra)
{
    for (long t = 0; withT ? 2 * t <= a : t == 0; ++t)
        for (long r = rOdd ? 1 : 0; r <= a - 2 * t; r += 2)
            for (long k = 0; 2 * k <= r; ++k)
                for (long m = 0; m <= (a - r) / 2 - t; ++m) {
                    long n = d - t - k - m;
                    if (n < 0 || n > r - 2 * k)
                        continue;
                    long s = a - 2 * t - r;
                    long e = r + zExp(a, r, s, k, m, n, u) - a + 2 * t + (extra ? 2 * k + 2 * m : 0);
                    LaurentPoly b = qbinomPoly(u, s - 2 * m - n);
                    if (b.isZero())
                        continue;
                    acc.add(sign, e, -k - m - n + 1, b, qfact(n) * qdfact(k) * qdfact(m));
                }
}

}  // namespace

RatFunc computeA(long a, long d, long u)
{
    if (!admissibleA(a, d, u))
        throw std::invalid_argument("computeA: parameters outside the constraint region");
    Accum acc;
    addAHalf(acc, 1, a, d, u, false, true, false);
    addAHalf(acc, -1, a, d, u, true, false, true);
    return acc.total();
}

RatFunc computeAprime(long a, long d, long u)
{
    if (!admissibleA(a, d, u))
        throw std::invalid_argument("computeAprime: parameters outside the constraint region");
    Accum acc;
    addAHalf(acc, 1, a, d, u, true, true, false);
    addAHalf(acc, -1, a, d, u, false, false, true);
    return acc.total();
}

bool admissibleT(long a, long b, long f, long g, long t1, long t3)
{
    long mn = std::min(a, b);
    return a >= 0 && b >= 0 && f >= 0 && g >= 0 && t1 >= 0 && t3 >= 0 && f <= mn && g <= mn
        && t1 <= a - f - g && t3 <= b - f - g;
}

RatFunc computeT(long a, long b, long f, long g, long t1, long t3)
{
    if (!admissibleT(a, b, f, g, t1, t3))
        throw std::invalid_argument("computeT: parameters outside the constraint region");
    Accum acc;
    for (long u = 0; u <= std::min(a, b); ++u) {
        // 1/[f-u]! vanishes for u > f
        if (u > f)
            continue;
        for (long r = 0; r <= a - u; ++r)
            for (long s = 0; s <= b - u; ++s)
                for (long y = 0; y <= std::min(a - u - r, b - u - s); ++y)
                    for (long x = 0; x <= std::min(r, s); ++x) {
                        LaurentPoly c = qbinomPoly(t3, s - x - g + y) * qbinomPoly(t1, r - f + u)
                            * qbinomPoly(g, y) * qbinomPoly(f - u, x);
                        if (c.isZero())
                            continue;
                        long e = 2 * (f * r + g * s) - u * (u + 1) / 2 + u * (f - x + t1) - x * (2 * g + f + t3)
                            + y * (g + t3) + t3 * s - s + t1 * r - r;
                        acc.add((r + s) % 2 ? -1 : 1, e, u, c, qfact(g) * qfact(f - u));
                    }
    }
    return acc.total();
}

IdentityReport checkCoeff(long d)
{
    // w even pairs D over even n with C over odd n; w odd swaps both.
    Accum even, odd;
    for (long t = 0; t <= d; ++t)
        for (long k = 0; t + k <= d; ++k)
            for (long m = 0; t + k + m <= d; ++m) {
                long n = d - t - k - m;
                long e = t * t - 2 * d * t + t + 2 * n * t + choose(n + 1, 2) - 2 * k * m - 2 * m;
                (n % 2 ? odd : even).add(1, e, t, LaurentPoly(1), qfact(n) * qdfact(k) * qdfact(m));
            }
    for (long k = 0; k <= d; ++k)
        for (long m = 0; k + m <= d; ++m) {
            long n = d - k - m;
            long e = choose(n + 1, 2) - 2 * k * m + 2 * k;
            (n % 2 ? even : odd).add(-1, e, 0, LaurentPoly(1), qfact(n) * qdfact(k) * qdfact(m));
        }
    RatFunc w0 = even.total(), w1 = odd.total();
    IdentityReport r = makeReport("coeff", {d}, w0, RatFunc());
    r.holds = w0.isZero() && w1.isZero();
    return r;
}

}  // namespace iqbraid
