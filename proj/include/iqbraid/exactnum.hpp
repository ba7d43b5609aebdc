#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace iqbraid {

using Rat = mpq_class;
using Int = mpz_class;

// Laurent polynomial in v with rational coefficients. Zero coefficients are
// never stored.
class LaurentPoly {
public:
    using Map = std::map<long, Rat>;

    LaurentPoly() = default;
    LaurentPoly(const Rat& c);
    LaurentPoly(long c) : LaurentPoly(Rat(c)) {}

    static LaurentPoly monomial(long e, const Rat& c = 1);
    static LaurentPoly vpow(long e) { return monomial(e); }

    const Map& terms() const { return t_; }
    bool isZero() const { return t_.empty(); }
    bool isConstant() const;
    long minExp() const;
    long maxExp() const;
    Rat coeff(long e) const;
    Rat leading() const { return t_.rbegin()->second; }

    void addTerm(long e, const Rat& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly operator-() const;

    // v -> v^{-1}
    LaurentPoly bar() const;
    LaurentPoly shifted(long k) const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.t_ == b.t_; }
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) { return a.t_ < b.t_; }

    std::string str() const;

private:
    Map t_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly pow(const LaurentPoly& a, unsigned n);

// Exact division; throws std::domain_error if b does not divide a.
LaurentPoly divExact(const LaurentPoly& a, const LaurentPoly& b);

// Laurent polynomial in (v, z). Only used for the two-variable binomial check.
class BiLaurent {
public:
    using Key = std::pair<long, long>;  // (v-exponent, z-exponent)
    using Map = std::map<Key, Rat>;

    BiLaurent() = default;
    static BiLaurent monomial(long ev, long ez, const Rat& c = 1);
    static BiLaurent fromV(const LaurentPoly& p, long ez = 0);

    const Map& terms() const { return t_; }
    void addTerm(long ev, long ez, const Rat& c);

    BiLaurent& operator+=(const BiLaurent& o);
    friend BiLaurent operator*(const BiLaurent& a, const BiLaurent& b);
    friend bool operator==(const BiLaurent& a, const BiLaurent& b) { return a.t_ == b.t_; }
    std::string str() const;

private:
    Map t_;
};

// Rational function num/den in v, kept in canonical form: gcd removed, den a
// polynomial with nonzero constant term and leading coefficient 1.
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(const LaurentPoly& p) : num_(p), den_(1) {}
    RatFunc(const Rat& c) : num_(c), den_(1) {}
    RatFunc(long c) : num_(c), den_(1) {}
    RatFunc(const LaurentPoly& n, const LaurentPoly& d);

    static RatFunc vpow(long e) { return RatFunc(LaurentPoly::vpow(e)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool isZero() const { return num_.isZero(); }
    bool isPoly() const { return den_ == LaurentPoly(1); }

    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    RatFunc operator-() const;
    RatFunc inverse() const;
    RatFunc bar() const;

    // Re-applies the canonical rule; a no-op on any constructed value.
    RatFunc normalized() const { return RatFunc(num_, den_); }

    friend bool operator==(const RatFunc& a, const RatFunc& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const RatFunc& a, const RatFunc& b)
    {
        return a.num_ == b.num_ ? a.den_ < b.den_ : a.num_ < b.num_;
    }

    std::string str() const;

private:
    struct Raw {};
    RatFunc(Raw, LaurentPoly n, LaurentPoly d) : num_(std::move(n)), den_(std::move(d)) {}
    LaurentPoly num_;
    LaurentPoly den_;
};

RatFunc operator+(RatFunc a, const RatFunc& b);
RatFunc operator-(RatFunc a, const RatFunc& b);
RatFunc operator*(RatFunc a, const RatFunc& b);
RatFunc operator/(RatFunc a, const RatFunc& b);
RatFunc pow(const RatFunc& a, long n);

enum class RfOp { Add, Sub, Mul, Div };
RatFunc rfOps(const RatFunc& x, const RatFunc& y, RfOp op);

// a + b*sqrt(q).
class QSqrt {
public:
    QSqrt() : a_(0), b_(0), q_(0) {}
    QSqrt(const Rat& a, const Rat& b, long q) : a_(a), b_(b), q_(q) {}
    static QSqrt rational(const Rat& a, long q) { return QSqrt(a, 0, q); }
    // sqrt(q)^e
    static QSqrt vpow(long e, long q);

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    long q() const { return q_; }
    bool isZero() const { return a_ == 0 && b_ == 0; }

    QSqrt& operator+=(const QSqrt& o);
    QSqrt& operator-=(const QSqrt& o);
    QSqrt& operator*=(const QSqrt& o);
    QSqrt operator-() const { return QSqrt(-a_, -b_, q_); }
    QSqrt inverse() const;

    friend bool operator==(const QSqrt& x, const QSqrt& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    std::string str() const;

private:
    Rat a_, b_;
    long q_;
};

QSqrt operator+(QSqrt x, const QSqrt& y);
QSqrt operator-(QSqrt x, const QSqrt& y);
QSqrt operator*(QSqrt x, const QSqrt& y);
QSqrt operator/(const QSqrt& x, const QSqrt& y);

// q-combinatorics
LaurentPoly qint(long m);
enum class FactKind { Plain, Double };
LaurentPoly qfactorial(FactKind kind, long r);
inline LaurentPoly qfact(long r) { return qfactorial(FactKind::Plain, r); }
inline LaurentPoly qdfact(long r) { return qfactorial(FactKind::Double, r); }
// [m][m-1]...[m-r+1]/[r]!, m any integer; zero for r < 0.
LaurentPoly qbinomPoly(long m, long r);
RatFunc qbinom(long m, long r);

// integer binomial x(x-1).../k! for any integer x, k >= 0
long choose(long x, long k);

QSqrt evalSqrtQ(const LaurentPoly& p, long q);
QSqrt evalSqrtQ(const RatFunc& f, long q);

// (exponent, numerator, denominator) triples in increasing exponent order.
std::vector<std::tuple<long, std::string, std::string>> serialize(const LaurentPoly& p);

}  // namespace iqbraid
