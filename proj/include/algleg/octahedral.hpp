#ifndef ALGLEG_OCTAHEDRAL_HPP
#define ALGLEG_OCTAHEDRAL_HPP

#include "exact.hpp"

#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>

namespace algleg {

struct OctIndex {
    int n = 0;
    int m = 0;
    friend auto operator<=>(const OctIndex&, const OctIndex&) = default;
};

struct OctStructure {
    int a, b, degree;
};

// Shape of r_n^m: numerator degree and the exponents of (1-u) and p_f in the denominator.
inline OctStructure expected_structure(OctIndex idx)
{
    int n = idx.n, m = idx.m;
    if (n >= 0 && m >= 0)
        return {0, 0, 3 * n + 2 * m};
    if (n >= 0) {
        int mp = -m - 1;
        return {3 + 4 * mp, 0, 1 + 3 * n + 2 * mp};
    }
    int np = -n - 1;
    if (m >= 0)
        return {0, 2 + 3 * np, 1 + 3 * np + 2 * m};
    int mp = -m - 1;
    return {3 + 4 * mp, 2 + 3 * np, 2 + 3 * np + 2 * mp};
}

inline Rational d_coeff(OctIndex idx)
{
    int n = idx.n, m = idx.m;
    Rational r = ((m + n) % 2 == 0) ? 1 : -1;
    mpz_class p3;
    mpz_ui_pow_ui(p3.get_mpz_t(), 3, 3 * std::abs(m));
    r *= (m >= 0) ? Rational(p3) : Rational(1) / Rational(p3);
    r *= pochhammer(rat(5, 12), m - n);
    r *= pochhammer(rat(13, 12), m + n);
    r /= pochhammer(rat(1, 4), m);
    r /= pochhammer(rat(5, 4), m);
    return r;
}

inline RationalFunction rf_pow(const Poly& p, int e)
{
    if (e >= 0)
        return RationalFunction(p.pow(e));
    return RationalFunction(Poly(Rational(1)), p.pow(-e));
}

// u^k f(1/u)
inline RationalFunction reciprocal_argument(const RationalFunction& f, int k)
{
    int dn = f.num().degree(), dd = f.den().degree();
    Poly num = f.num().reversed(dn), den = f.den().reversed(dd);
    int shift = k + dd - dn;
    if (shift >= 0)
        return RationalFunction(num * Poly::monomial(shift), den);
    return RationalFunction(num, den * Poly::monomial(-shift));
}

class OctahedralFunction {
public:
    OctahedralFunction() = default;
    OctahedralFunction(OctIndex idx, Poly numer, int a, int b)
        : idx_(idx), numer_(std::move(numer)), a_(a), b_(b)
    {
    }

    // Recover the structured form of r_n^m from a rational function, enforcing the quadrant shape.
    static OctahedralFunction from_rational_function(OctIndex idx, const RationalFunction& f)
    {
        auto s = expected_structure(idx);
        const auto& p = invariant_polys();
        Poly one_minus{1, -1};
        Poly scaled = f.num() * one_minus.pow(s.a) * p.pf.pow(s.b);
        auto [q, r] = Poly::divmod(scaled, f.den());
        if (!r.is_zero())
            throw ConsistencyError("r_n^m denominator outside the quadrant form");
        OctahedralFunction out(idx, q, s.a, s.b);
        out.check_structure();
        return out;
    }

    OctIndex index() const { return idx_; }
    const Poly& numer() const { return numer_; }
    int pow_one_minus_u() const { return a_; }
    int pow_pf() const { return b_; }
    int k() const { return 3 * idx_.n + 2 * idx_.m; }

    void check_structure() const
    {
        auto s = expected_structure(idx_);
        if (s.a != a_ || s.b != b_)
            throw ConsistencyError("denominator exponents disagree with quadrant");
        if (numer_.degree() != s.degree)
            throw ConsistencyError("numerator degree disagrees with quadrant");
        if (numer_[0] != 1)
            throw ConsistencyError("trailing coefficient is not 1");
        Rational lead = numer_.lead();
        if (a_ % 2)
            lead = -lead;
        if (lead != d_coeff(idx_))
            throw ConsistencyError("leading coefficient differs from d_n^m");
    }

    RationalFunction rational_function() const
    {
        const auto& p = invariant_polys();
        Poly one_minus{1, -1};
        return RationalFunction(numer_, one_minus.pow(a_) * p.pf.pow(b_));
    }

    Rational operator()(const Rational& u) const
    {
        Rational den = 1;
        Rational om = 1 - u, pf = invariant_polys().pf(u);
        for (int i = 0; i < a_; ++i)
            den *= om;
        for (int i = 0; i < b_; ++i)
            den *= pf;
        if (den == 0)
            throw DomainError("pole of r_n^m");
        return numer_(u) / den;
    }

    double operator()(double u) const
    {
        if (std::abs(u) > 1)
            return d_.get_d() * std::pow(u, k()) * conj_eval(1 / u);
        return numer_(u) * std::pow(1 - u, -a_) * std::pow(invariant_polys().pf(u), -b_);
    }

    // r_n^m / d_n^m
    double hat(double u) const
    {
        if (std::abs(u) > 1)
            return std::pow(u, k()) * conj_eval(1 / u);
        return (*this)(u) / d_.get_d();
    }

    const Rational& d() const { return d_; }
    const RationalFunction& conjugate() const { return conj_; }

    void finalize()
    {
        d_ = d_coeff(idx_);
        conj_ = reciprocal_argument(rational_function(), k()) * RationalFunction(Rational(1) / d_);
        cn_.clear();
        cd_.clear();
        for (auto& c : conj_.num().coeffs())
            cn_.push_back(c.get_d());
        for (auto& c : conj_.den().coeffs())
            cd_.push_back(c.get_d());
    }

    friend bool operator==(const OctahedralFunction& x, const OctahedralFunction& y)
    {
        return x.idx_ == y.idx_ && x.a_ == y.a_ && x.b_ == y.b_ && x.numer_ == y.numer_;
    }

    std::string str() const
    {
        std::string s;
        if (a_ > 0)
            s += "(1-u)^(-" + std::to_string(a_) + ")";
        if (b_ > 0)
            s += "(1 + 14u + u^2)^(-" + std::to_string(b_) + ")";
        if (s.empty())
            return numer_.str();
        return s + "(" + numer_.str() + ")";
    }

    // conjugate rational function at w, so that r(u) = d u^k conj_eval(1/u)
    double conj_eval(double w) const
    {
        double p = 0, q = 0;
        for (auto it = cn_.rbegin(); it != cn_.rend(); ++it)
            p = p * w + *it;
        for (auto it = cd_.rbegin(); it != cd_.rend(); ++it)
            q = q * w + *it;
        return p / q;
    }

private:
    OctIndex idx_;
    Poly numer_;
    int a_ = 0, b_ = 0;
    Rational d_ = 1;
    RationalFunction conj_;
    std::vector<double> cn_, cd_;
};

inline OctahedralFunction make_oct(OctIndex idx, Poly numer, int a = 0, int b = 0)
{
    OctahedralFunction f(idx, std::move(numer), a, b);
    f.check_structure();
    f.finalize();
    return f;
}

inline std::map<OctIndex, OctahedralFunction> seed_functions()
{
    std::map<OctIndex, OctahedralFunction> s;
    s[{0, 0}] = make_oct({0, 0}, Poly{1});
    s[{0, 1}] = make_oct({0, 1}, Poly{1, -26, -39});
    s[{1, 0}] = make_oct({1, 0}, Poly({Rational(1), Rational(-39), rat(-195, 7), rat(13, 7)}));
    s[{1, 1}] = make_oct({1, 1}, Poly{1, 175, -150, 3550, 325, 195});
    return s;
}

namespace detail {

// Solve the m-recurrence for r_n^M from the two neighbours on the far side.
inline RationalFunction m_step(OctIndex target, const RationalFunction& near, const RationalFunction& far)
{
    const auto& p = invariant_polys();
    int n = target.n;
    if (target.m >= 2) {
        long m = target.m - 1;
        Rational c = Rational(3 * (12 * m - 12 * n - 7) * (12 * m + 12 * n + 1)) /
                     Rational((4 * m - 3) * (4 * m + 1));
        return RationalFunction(p.pe) * near + RationalFunction(p.pv * c) * far;
    }
    long m = target.m + 1;
    Rational c = Rational((4 * m - 3) * (4 * m + 1)) /
                 Rational(3 * (12 * m - 12 * n - 7) * (12 * m + 12 * n + 1));
    return (far - RationalFunction(p.pe) * near) * RationalFunction(Poly(c), p.pv);
}

inline RationalFunction n_step(OctIndex target, const RationalFunction& near, const RationalFunction& far)
{
    const auto& p = invariant_polys();
    int m = target.m;
    if (target.n >= 2) {
        long n = target.n - 1;
        RationalFunction t = RationalFunction(p.pe * Rational(8 * (3 * n + 1))) * near -
                             RationalFunction(p.pf.pow(3) * Rational(12 * n + 12 * m + 1)) * far;
        return t * RationalFunction(Rational(1) / Rational(12 * n - 12 * m + 7));
    }
    long n = target.n + 1;
    RationalFunction t = RationalFunction(p.pe * Rational(8 * (3 * n + 1))) * near -
                         RationalFunction(Rational(12 * n - 12 * m + 7)) * far;
    return t * RationalFunction(Poly(Rational(1) / Rational(12 * n + 12 * m + 1)), p.pf.pow(3));
}

class OctCache {
public:
    static OctCache& instance()
    {
        static OctCache c;
        return c;
    }

    const OctahedralFunction& get(OctIndex idx)
    {
        {
            std::shared_lock lk(mu_);
            auto it = cache_.find(idx);
            if (it != cache_.end())
                return it->second;
        }
        OctahedralFunction f = compute(idx);
        std::unique_lock lk(mu_);
        return cache_.emplace(idx, std::move(f)).first->second;
    }

private:
    OctCache() : cache_(seed_functions()) {}

    OctahedralFunction compute(OctIndex idx)
    {
        RationalFunction r;
        if (idx.n == 0 || idx.n == 1) {
            int s = idx.m >= 2 ? -1 : 1;
            r = m_step(idx, get({idx.n, idx.m + s}).rational_function(),
                       get({idx.n, idx.m + 2 * s}).rational_function());
        }
        else {
            int s = idx.n >= 2 ? -1 : 1;
            r = n_step(idx, get({idx.n + s, idx.m}).rational_function(),
                       get({idx.n + 2 * s, idx.m}).rational_function());
        }
        auto f = OctahedralFunction::from_rational_function(idx, r);
        f.finalize();
        return f;
    }

    std::shared_mutex mu_;
    std::map<OctIndex, OctahedralFunction> cache_;
};

} // namespace detail

inline const OctahedralFunction& generate(OctIndex idx)
{
    return detail::OctCache::instance().get(idx);
}

inline RationalFunction conjugate(OctIndex idx)
{
    return generate(idx).conjugate();
}

// u^k f(1/u) scaled to take the value 1 at u = 0
inline RationalFunction reflect(const RationalFunction& f, int k)
{
    RationalFunction g = reciprocal_argument(f, k);
    return g * RationalFunction(Rational(1) / g(Rational(0)));
}

// Maclaurin coefficients of r_n^m (n, m >= 0) from the Heun-type coefficient recurrences.
inline std::vector<Rational> coeffs_via_recurrence(OctIndex idx, bool use_heun = false)
{
    long n = idx.n, m = idx.m;
    if (n < 0 || m < 0)
        throw DomainError("coefficient recurrences need n, m >= 0");
    if (use_heun && m != 0)
        throw DomainError("the Heun recurrence covers m = 0 only");
    long deg = 3 * n + 2 * m;
    std::vector<Rational> a(deg + 1);
    a[0] = 1;
    auto at = [&](long k) { return k < 0 ? Rational(0) : a[k]; };
    for (long k = 0; k < deg; ++k) {
        Rational s;
        Rational piv;
        if (use_heun) {
            piv = (k + 1) * (4 * k + 3);
            s = Rational(14 * k * (4 * k - 12 * n - 1) + 9 * n * (12 * n + 1)) * at(k) +
                Rational((k - 3 * n - 1) * (4 * k - 12 * n - 5)) * at(k - 1);
        }
        else {
            piv = (k + 1) * (4 * k - 4 * m + 3);
            s = Rational(k * (52 * k - 36 * m - 168 * n - 13) - (2 * m - 9 * n) * (12 * m + 12 * n + 1)) * at(k) -
                Rational((k - 1) * (52 * k - 276 * m - 144 * n - 65) + 2 * (14 * m + 3 * n) * (12 * m + 12 * n + 1)) *
                    at(k - 1) -
                Rational((k - 2 * m - 3 * n - 2) * (4 * k - 12 * m - 12 * n - 9)) * at(k - 2);
        }
        a[k + 1] = -s / piv;
    }
    return a;
}

// r_0^m from the terminating Gauss series (Euler-transformed for m < 0).
inline OctahedralFunction hypergeometric_row(int m)
{
    Rational a, b, c;
    long deg;
    int pa = 0;
    if (m >= 0) {
        a = -2 * m;
        b = rat(-1, 4) - 3 * m;
        c = rat(3, 4) - m;
        deg = 2 * m;
    }
    else {
        long mp = -m - 1;
        a = -1 - 2 * mp;
        b = rat(-1, 4) - mp;
        c = rat(7, 4) + mp;
        deg = 1 + 2 * mp;
        pa = static_cast<int>(3 + 4 * mp);
    }
    std::vector<Rational> coef(deg + 1);
    Rational t = 1;
    for (long k = 0; k <= deg; ++k) {
        coef[k] = t;
        t *= (a + k) * (b + k) / ((c + k) * (k + 1));
    }
    auto f = make_oct({0, m}, Poly(std::move(coef)), pa, 0);
    return f;
}

struct DiffRow {
    int dn, dm;
};

inline const std::array<DiffRow, 8>& diff_rows()
{
    static const std::array<DiffRow, 8> rows{
        {{0, 1}, {0, -1}, {1, 0}, {-1, 0}, {1, 1}, {-1, -1}, {-1, 1}, {1, -1}}};
    return rows;
}

// K r_{n+dn}^{m+dm} = p_v^{(-sv+ev)/4} p_e^{-se+ee} p_f^{-sf+ef} (4u^{3/4}) d/du[p_v^{sv/4} p_e^{se} p_f^{sf} r_n^m]
inline OctahedralFunction apply_diff_recurrence(OctIndex idx, int dn, int dm)
{
    Rational n = idx.n, m = idx.m;
    Rational sv, se, sf, K;
    int ev, ee, ef;
    if (dn == 0 && dm == 1) {
        sv = -1 - 4 * m; se = 0; sf = rat(5, 8) + rat(3, 2) * m - rat(3, 2) * n;
        ev = 1; ee = 0; ef = 1; K = -(1 + 4 * m);
    }
    else if (dn == 0 && dm == -1) {
        sv = 0; se = 0; sf = rat(-1, 8) - rat(3, 2) * m - rat(3, 2) * n;
        ev = -3; ee = 0; ef = 1; K = 3 * (1 + 12 * m + 12 * n) * (7 - 12 * m + 12 * n) / (4 * m - 3);
    }
    else if (dn == 1 && dm == 0) {
        sv = rat(7, 6) - 2 * m + 2 * n; se = 0; sf = -1 - 3 * n;
        ev = 1; ee = 0; ef = 1; K = (7 - 12 * m + 12 * n) / 6;
    }
    else if (dn == -1 && dm == 0) {
        sv = rat(-1, 6) - 2 * m - 2 * n; se = 0; sf = 0;
        ev = 1; ee = 0; ef = -2; K = -(1 + 12 * m + 12 * n) / 6;
    }
    else if (dn == 1 && dm == 1) {
        sv = -1 - 4 * m; se = rat(13, 12) + m + n; sf = -1 - 3 * n;
        ev = 1; ee = 1; ef = 1; K = -(1 + 4 * m);
    }
    else if (dn == -1 && dm == -1) {
        sv = 0; se = rat(-1, 12) - m - n; sf = 0;
        ev = -3; ee = 1; ef = -2; K = 3 * (1 + 12 * m + 12 * n) * (-11 + 12 * m + 12 * n) / (4 * m - 3);
    }
    else if (dn == -1 && dm == 1) {
        sv = -1 - 4 * m; se = rat(5, 12) + m - n; sf = 0;
        ev = 1; ee = 1; ef = -2; K = -(1 + 4 * m);
    }
    else if (dn == 1 && dm == -1) {
        sv = 0; se = rat(7, 12) - m + n; sf = -1 - 3 * n;
        ev = -3; ee = 1; ef = 1; K = 3 * (-7 + 12 * m - 12 * n) * (-19 + 12 * m - 12 * n) / (4 * m - 3);
    }
    else
        throw DomainError("step is not a root vector");

    if ((3 + ev) % 4 != 0)
        throw ConsistencyError("fractional power of u does not cancel");
    const auto& p = invariant_polys();
    RationalFunction r = generate(idx).rational_function();
    RationalFunction rp = r.derivative();
    RationalFunction inner = rp;
    if (sv != 0)
        inner = inner + RationalFunction(p.pv.derivative() * (sv / 4), p.pv) * r;
    if (se != 0)
        inner = inner + RationalFunction(p.pe.derivative() * se, p.pe) * r;
    if (sf != 0)
        inner = inner + RationalFunction(p.pf.derivative() * sf, p.pf) * r;
    Poly one_minus{1, -1};
    RationalFunction pref = RationalFunction(Poly::monomial((3 + ev) / 4, Rational(4) / K)) *
                            rf_pow(one_minus, ev) * rf_pow(p.pe, ee) * rf_pow(p.pf, ef);
    OctIndex target{idx.n + dn, idx.m + dm};
    auto f = OctahedralFunction::from_rational_function(target, pref * inner);
    f.finalize();
    return f;
}

} // namespace algleg

#endif
