#ifndef ALGLEG_EXACT_HPP
#define ALGLEG_EXACT_HPP

#include <gmpxx.h>

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace algleg {

using Rational = mpq_class;

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

inline Rational rat(long p, long q = 1)
{
    Rational r(p, q);
    r.canonicalize();
    return r;
}

inline Rational parse_rational(const std::string& s)
{
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (s.find_first_of(".eE") != std::string::npos) {
            Rational r(std::stod(s));
            return r;
        }
        return Rational(mpz_class(s));
    }
    Rational r(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
    if (r.get_den() == 0)
        throw DomainError("zero denominator in " + s);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r)
{
    return r.get_str();
}

// Dense polynomial, coeffs[k] multiplies u^k.
class Poly {
public:
    Poly() = default;
    Poly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }
    Poly(const Rational& c0) : c_{c0} { trim(); }
    Poly(std::initializer_list<long> c)
    {
        for (long v : c)
            c_.emplace_back(v);
        trim();
    }

    static Poly monomial(int k, const Rational& c = 1)
    {
        std::vector<Rational> v(k + 1);
        v[k] = c;
        return Poly(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational operator[](int k) const
    {
        return (k >= 0 && k <= degree()) ? c_[k] : Rational(0);
    }
    Rational lead() const { return is_zero() ? Rational(0) : c_.back(); }

    Rational operator()(const Rational& x) const
    {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    double operator()(double x) const
    {
        double acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + it->get_d();
        return acc;
    }

    // u^deg p(1/u)
    Poly reversed(int deg) const
    {
        if (deg < degree())
            throw ConsistencyError("reversal degree below polynomial degree");
        std::vector<Rational> v(deg + 1);
        for (int k = 0; k <= degree(); ++k)
            v[deg - k] = c_[k];
        return Poly(std::move(v));
    }

    Poly derivative() const
    {
        std::vector<Rational> v;
        for (int k = 1; k <= degree(); ++k)
            v.push_back(c_[k] * k);
        return Poly(std::move(v));
    }

    Poly& operator+=(const Poly& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size());
        for (size_t k = 0; k < o.c_.size(); ++k)
            c_[k] += o.c_[k];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size());
        for (size_t k = 0; k < o.c_.size(); ++k)
            c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    Poly& operator*=(const Rational& s)
    {
        for (auto& v : c_)
            v *= s;
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a)
    {
        a *= Rational(-1);
        return a;
    }
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b)
    {
        if (a.is_zero() || b.is_zero())
            return Poly();
        std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0)
                continue;
            for (size_t j = 0; j < b.c_.size(); ++j)
                v[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(v));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(int e) const
    {
        Poly r(Rational(1)), base = *this;
        while (e > 0) {
            if (e & 1)
                r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    // quotient and remainder
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b)
    {
        if (b.is_zero())
            throw DomainError("polynomial division by zero");
        std::vector<Rational> r = a.c_;
        int db = b.degree();
        int dq = a.degree() - db;
        if (dq < 0)
            return {Poly(), a};
        std::vector<Rational> q(dq + 1);
        Rational lb = b.lead();
        for (int k = dq; k >= 0; --k) {
            Rational t = r[k + db] / lb;
            q[k] = t;
            if (t == 0)
                continue;
            for (int j = 0; j <= db; ++j)
                r[k + j] -= t * b.c_[j];
        }
        r.resize(db);
        return {Poly(std::move(q)), Poly(std::move(r))};
    }

    Poly exact_div(const Poly& b) const
    {
        auto [q, r] = divmod(*this, b);
        if (!r.is_zero())
            throw ConsistencyError("inexact polynomial division");
        return q;
    }

    Poly monic() const
    {
        if (is_zero())
            return *this;
        return *this * (Rational(1) / lead());
    }

    static Poly gcd(Poly a, Poly b)
    {
        while (!b.is_zero()) {
            Poly r = divmod(a, b).second;
            a = std::move(b);
            b = r.monic();
        }
        return a.monic();
    }

    std::string str(const std::string& var = "u") const
    {
        if (is_zero())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (int k = 0; k <= degree(); ++k) {
            const Rational& v = c_[k];
            if (v == 0)
                continue;
            Rational a = abs(v);
            if (first)
                os << (v < 0 ? "-" : "");
            else
                os << (v < 0 ? " - " : " + ");
            first = false;
            bool unit = (a == 1);
            bool integral = (a.get_den() == 1);
            if (k == 0)
                os << (integral ? a.get_str() : "(" + a.get_str() + ")");
            else {
                if (!unit)
                    os << (integral ? a.get_str() : "(" + a.get_str() + ")");
                os << var;
                if (k > 1)
                    os << "^" << k;
            }
        }
        return os.str();
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }
    std::vector<Rational> c_;
};

// num/den with gcd(num, den) = 1 and den monic.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Rational(1)) {}
    RationalFunction(Poly n) : num_(std::move(n)), den_(Rational(1)) {}
    RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}
    RationalFunction(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    Rational operator()(const Rational& x) const
    {
        Rational d = den_(x);
        if (d == 0)
            throw DomainError("pole of rational function");
        return num_(x) / d;
    }
    double operator()(double x) const { return num_(x) / den_(x); }

    RationalFunction derivative() const
    {
        return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
    {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b)
    {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
    {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b)
    {
        if (b.is_zero())
            throw DomainError("division by zero rational function");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    void normalize()
    {
        if (den_.is_zero())
            throw DomainError("zero denominator");
        if (num_.is_zero()) {
            den_ = Poly(Rational(1));
            return;
        }
        Poly g = Poly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.exact_div(g);
            den_ = den_.exact_div(g);
        }
        Rational l = den_.lead();
        num_ *= Rational(1) / l;
        den_ *= Rational(1) / l;
    }
    Poly num_, den_;
};

inline Rational pochhammer(const Rational& d, long k)
{
    Rational r = 1;
    if (k >= 0) {
        for (long j = 0; j < k; ++j)
            r *= d + j;
        return r;
    }
    for (long j = 1; j <= -k; ++j) {
        if (d - j == 0)
            throw DomainError("pochhammer pole");
        r *= d - j;
    }
    return Rational(1) / r;
}

inline double pochhammer(double d, long k)
{
    double r = 1;
    if (k >= 0) {
        for (long j = 0; j < k; ++j)
            r *= d + j;
        return r;
    }
    for (long j = 1; j <= -k; ++j)
        r *= d - j;
    return 1 / r;
}

struct InvariantPolys {
    Poly pv, pe, pf;
};

inline const InvariantPolys& invariant_polys()
{
    static const InvariantPolys p{
        Poly{0, 1, -4, 6, -4, 1},
        Poly{1, -33, -33, 1},
        Poly{1, 14, 1},
    };
    return p;
}

inline Rational map_R(const Rational& u)
{
    const auto& p = invariant_polys();
    Rational e = p.pe(u);
    if (e == 0)
        throw DomainError("R has a pole at a zero of p_e");
    return Rational(-108) * p.pv(u) / (e * e);
}

inline double map_R(double u)
{
    const auto& p = invariant_polys();
    double e = p.pe(u);
    if (e == 0)
        throw DomainError("R has a pole at a zero of p_e");
    return -108 * p.pv(u) / (e * e);
}

inline Rational map_T(const Rational& u)
{
    if (u == -1)
        throw DomainError("T has a pole at u = -1");
    return Rational(-12) * u / ((1 + u) * (1 + u));
}

inline double map_T(double u)
{
    if (u == -1)
        throw DomainError("T has a pole at u = -1");
    return -12 * u / ((1 + u) * (1 + u));
}

template <class T>
T map_S(const T& t)
{
    T a = 1 + 3 * t * t;
    T b = 1 + 6 * t - 3 * t * t;
    if (b == 0)
        throw DomainError("S has a pole");
    return 36 * t * a * a / (b * b * b);
}

} // namespace algleg

#endif
