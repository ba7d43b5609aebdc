#include "iqbraid/exactnum.hpp"

#include <sstream>

namespace iqbraid {

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(const Rat& c)
{
    if (c != 0)
        t_.emplace(0, c);
}

LaurentPoly LaurentPoly::monomial(long e, const Rat& c)
{
    LaurentPoly p;
    if (c != 0)
        p.t_.emplace(e, c);
    return p;
}

bool LaurentPoly::isConstant() const
{
    return t_.empty() || (t_.size() == 1 && t_.begin()->first == 0);
}

long LaurentPoly::minExp() const
{
    if (t_.empty())
        throw std::domain_error("minExp of zero polynomial");
    return t_.begin()->first;
}

long LaurentPoly::maxExp() const
{
    if (t_.empty())
        throw std::domain_error("maxExp of zero polynomial");
    return t_.rbegin()->first;
}

Rat LaurentPoly::coeff(long e) const
{
    auto it = t_.find(e);
    return it == t_.end() ? Rat(0) : it->second;
}

void LaurentPoly::addTerm(long e, const Rat& c)
{
    if (c == 0)
        return;
    auto [it, fresh] = t_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            t_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
    for (auto& [e, c] : o.t_)
        addTerm(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
    for (auto& [e, c] : o.t_)
        addTerm(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o)
{
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r;
    for (auto& [e, c] : t_)
        r.t_.emplace_hint(r.t_.end(), e, -c);
    return r;
}

LaurentPoly LaurentPoly::bar() const
{
    LaurentPoly r;
    for (auto& [e, c] : t_)
        r.t_.emplace(-e, c);
    return r;
}

LaurentPoly LaurentPoly::shifted(long k) const
{
    LaurentPoly r;
    for (auto& [e, c] : t_)
        r.t_.emplace_hint(r.t_.end(), e + k, c);
    return r;
}

std::string LaurentPoly::str() const
{
    if (t_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        Rat c = it->second;
        long e = it->first;
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        first = false;
        Rat ac = abs(c);
        bool unit = ac == 1;
        if (!unit || e == 0)
            os << ac.get_str();
        if (e != 0) {
            if (!unit)
                os << "*";
            os << "v";
            if (e != 1)
                os << "^" << e;
        }
    }
    return os.str();
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    LaurentPoly r;
    if (a.isZero() || b.isZero())
        return r;
    long lo = a.minExp() + b.minExp(), hi = a.maxExp() + b.maxExp();
    std::vector<Rat> acc(hi - lo + 1);
    for (auto& [ea, ca] : a.terms())
        for (auto& [eb, cb] : b.terms())
            acc[ea + eb - lo] += ca * cb;
    for (long k = 0; k <= hi - lo; ++k)
        r.addTerm(lo + k, acc[k]);
    return r;
}

LaurentPoly pow(const LaurentPoly& a, unsigned n)
{
    LaurentPoly r(1), b = a;
    while (n) {
        if (n & 1)
            r *= b;
        n >>= 1;
        if (n)
            b *= b;
    }
    return r;
}

// Dense polynomial helpers (index = degree) used for division and gcd.
namespace {

using Dense = std::vector<Rat>;

void trim(Dense& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

// a = v^{shift} * dense
Dense toDense(const LaurentPoly& a, long& shift)
{
    shift = a.minExp();
    Dense d(a.maxExp() - shift + 1);
    for (auto& [e, c] : a.terms())
        d[e - shift] = c;
    return d;
}

LaurentPoly fromDense(const Dense& d, long shift)
{
    LaurentPoly r;
    for (size_t k = 0; k < d.size(); ++k)
        r.addTerm(long(k) + shift, d[k]);
    return r;
}

// Returns quotient; a becomes the remainder.
Dense divmod(Dense& a, const Dense& b)
{
    trim(a);
    if (a.size() < b.size())
        return {};
    Dense q(a.size() - b.size() + 1);
    Rat lb = b.back();
    for (long k = long(a.size()) - long(b.size()); k >= 0; --k) {
        Rat c = a[k + b.size() - 1] / lb;
        q[k] = c;
        if (c == 0)
            continue;
        for (size_t j = 0; j < b.size(); ++j)
            a[k + j] -= c * b[j];
    }
    a.resize(b.size() - 1);
    trim(a);
    return q;
}

void makeMonic(Dense& p)
{
    Rat l = p.back();
    if (l != 1)
        for (auto& c : p)
            c /= l;
}

Dense gcd(Dense a, Dense b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        divmod(a, b);
        std::swap(a, b);
        if (!b.empty())
            makeMonic(b);
    }
    makeMonic(a);
    return a;
}

}  // namespace

LaurentPoly divExact(const LaurentPoly& a, const LaurentPoly& b)
{
    if (b.isZero())
        throw std::domain_error("division by zero polynomial");
    if (a.isZero())
        return a;
    long sa, sb;
    Dense da = toDense(a, sa), db = toDense(b, sb);
    Dense q = divmod(da, db);
    if (!da.empty())
        throw std::domain_error("inexact polynomial division");
    return fromDense(q, sa - sb);
}

// ---------------------------------------------------------------- BiLaurent

BiLaurent BiLaurent::monomial(long ev, long ez, const Rat& c)
{
    BiLaurent p;
    p.addTerm(ev, ez, c);
    return p;
}

BiLaurent BiLaurent::fromV(const LaurentPoly& p, long ez)
{
    BiLaurent r;
    for (auto& [e, c] : p.terms())
        r.addTerm(e, ez, c);
    return r;
}

void BiLaurent::addTerm(long ev, long ez, const Rat& c)
{
    if (c == 0)
        return;
    auto [it, fresh] = t_.try_emplace({ev, ez}, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            t_.erase(it);
    }
}

BiLaurent& BiLaurent::operator+=(const BiLaurent& o)
{
    for (auto& [k, c] : o.t_)
        addTerm(k.first, k.second, c);
    return *this;
}

BiLaurent operator*(const BiLaurent& a, const BiLaurent& b)
{
    BiLaurent r;
    for (auto& [ka, ca] : a.t_)
        for (auto& [kb, cb] : b.t_)
            r.addTerm(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

std::string BiLaurent::str() const
{
    if (t_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : t_) {
        if (!first)
            os << " + ";
        first = false;
        os << c.get_str() << "*v^" << k.first << "*z^" << k.second;
    }
    return os.str();
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(const LaurentPoly& n, const LaurentPoly& d)
{
    if (d.isZero())
        throw std::domain_error("RatFunc with zero denominator");
    if (n.isZero()) {
        num_ = LaurentPoly();
        den_ = LaurentPoly(1);
        return;
    }
    long sn, sd;
    Dense dn = toDense(n, sn), dd = toDense(d, sd);
    if (dd.size() > 1) {
        Dense g = gcd(dn, dd);
        if (g.size() > 1) {
            Dense r1 = dn, r2 = dd;
            dn = divmod(r1, g);
            dd = divmod(r2, g);
        }
    }
    Rat l = dd.back();
    if (l != 1) {
        for (auto& c : dn)
            c /= l;
        for (auto& c : dd)
            c /= l;
    }
    num_ = fromDense(dn, sn - sd);
    den_ = fromDense(dd, 0);
}

RatFunc& RatFunc::operator+=(const RatFunc& o)
{
    if (isPoly() && o.isPoly()) {
        num_ += o.num_;
        return *this;
    }
    if (den_ == o.den_) {
        *this = RatFunc(num_ + o.num_, den_);
        return *this;
    }
    *this = RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o)
{
    if (isPoly() && o.isPoly()) {
        num_ *= o.num_;
        return *this;
    }
    *this = RatFunc(num_ * o.num_, den_ * o.den_);
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o)
{
    if (o.isZero())
        throw std::domain_error("RatFunc division by zero");
    *this = RatFunc(num_ * o.den_, den_ * o.num_);
    return *this;
}

RatFunc RatFunc::operator-() const { return RatFunc(Raw{}, -num_, den_); }

RatFunc RatFunc::inverse() const { return RatFunc(1) / *this; }

RatFunc RatFunc::bar() const { return RatFunc(num_.bar(), den_.bar()); }

std::string RatFunc::str() const
{
    if (isPoly())
        return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

RatFunc pow(const RatFunc& a, long n)
{
    if (n < 0)
        return pow(a.inverse(), -n);
    return RatFunc(pow(a.num(), unsigned(n)), pow(a.den(), unsigned(n)));
}

RatFunc rfOps(const RatFunc& x, const RatFunc& y, RfOp op)
{
    switch (op) {
    case RfOp::Add:
        return x + y;
    case RfOp::Sub:
        return x - y;
    case RfOp::Mul:
        return x * y;
    case RfOp::Div:
        return x / y;
    }
    throw std::logic_error("bad op");
}

// ---------------------------------------------------------------- QSqrt

QSqrt QSqrt::vpow(long e, long q)
{
    long k = e >= 0 ? e / 2 : -((-e + 1) / 2);  // floor(e/2)
    Rat c = 1;
    Int qq = q;
    Int m;
    mpz_pow_ui(m.get_mpz_t(), qq.get_mpz_t(), std::abs(k));
    c = k >= 0 ? Rat(m) : Rat(1) / Rat(m);
    if (e - 2 * k == 0)
        return QSqrt(c, 0, q);
    return QSqrt(0, c, q);
}

QSqrt& QSqrt::operator+=(const QSqrt& o)
{
    a_ += o.a_;
    b_ += o.b_;
    if (!q_)
        q_ = o.q_;
    return *this;
}

QSqrt& QSqrt::operator-=(const QSqrt& o)
{
    a_ -= o.a_;
    b_ -= o.b_;
    if (!q_)
        q_ = o.q_;
    return *this;
}

QSqrt& QSqrt::operator*=(const QSqrt& o)
{
    long q = q_ ? q_ : o.q_;
    Rat a = a_ * o.a_ + b_ * o.b_ * q;
    Rat b = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    b_ = b;
    q_ = q;
    return *this;
}

QSqrt QSqrt::inverse() const
{
    Rat n = a_ * a_ - b_ * b_ * q_;
    if (n == 0)
        throw std::domain_error("QSqrt inverse of zero");
    return QSqrt(a_ / n, -b_ / n, q_);
}

std::string QSqrt::str() const
{
    if (b_ == 0)
        return a_.get_str();
    std::string s = b_.get_str() + "*sqrt(" + std::to_string(q_) + ")";
    return a_ == 0 ? s : a_.get_str() + " + " + s;
}

QSqrt operator+(QSqrt x, const QSqrt& y) { return x += y; }
QSqrt operator-(QSqrt x, const QSqrt& y) { return x -= y; }
QSqrt operator*(QSqrt x, const QSqrt& y) { return x *= y; }
QSqrt operator/(const QSqrt& x, const QSqrt& y) { return x * y.inverse(); }

// ---------------------------------------------------------------- q-combinatorics

LaurentPoly qint(long m)
{
    LaurentPoly r;
    long n = std::abs(m);
    for (long k = 0; k < n; ++k)
        r.addTerm(n - 1 - 2 * k, m > 0 ? 1 : -1);
    return r;
}

LaurentPoly qfactorial(FactKind kind, long r)
{
    if (r < 0)
        throw std::domain_error("negative factorial");
    LaurentPoly p(1);
    for (long i = 1; i <= r; ++i)
        p *= qint(kind == FactKind::Plain ? i : 2 * i);
    return p;
}

LaurentPoly qbinomPoly(long m, long r)
{
    if (r < 0)
        return LaurentPoly();
    if (m >= 0 && m < r)
        return LaurentPoly();
    LaurentPoly n(1);
    for (long i = 0; i < r; ++i)
        n *= qint(m - i);
    return divExact(n, qfact(r));
}

RatFunc qbinom(long m, long r) { return RatFunc(qbinomPoly(m, r)); }

long choose(long x, long k)
{
    if (k < 0)
        return 0;
    Int n = 1, d = 1;
    for (long i = 0; i < k; ++i) {
        n *= x - i;
        d *= i + 1;
    }
    Int r = n / d;
    return r.get_si();
}

QSqrt evalSqrtQ(const LaurentPoly& p, long q)
{
    QSqrt r(0, 0, q);
    for (auto& [e, c] : p.terms())
        r += QSqrt::vpow(e, q) * QSqrt(c, 0, q);
    return r;
}

QSqrt evalSqrtQ(const RatFunc& f, long q)
{
    QSqrt d = evalSqrtQ(f.den(), q);
    if (d.isZero())
        throw std::domain_error("denominator vanishes at sqrt(q)");
    return evalSqrtQ(f.num(), q) / d;
}

std::vector<std::tuple<long, std::string, std::string>> serialize(const LaurentPoly& p)
{
    std::vector<std::tuple<long, std::string, std::string>> out;
    for (auto& [e, c] : p.terms())
        out.emplace_back(e, c.get_num().get_str(), c.get_den().get_str());
    return out;
}

}  // namespace iqbraid
