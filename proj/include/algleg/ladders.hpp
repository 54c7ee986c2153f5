#ifndef ALGLEG_LADDERS_HPP
#define ALGLEG_LADDERS_HPP

#include "families.hpp"

#include <array>
#include <optional>

namespace algleg {

// Value of the chosen kind at (nu, mu); z = cos(theta) for Ferrers, z > 1 for Legendre
inline double ladder_value(Kind kind, double nu, double mu, double z)
{
    switch (kind) {
    case Kind::ferrers_P:
        return ferrers_P(nu, mu, z);
    case Kind::ferrers_Q:
        return ferrers_Q(nu, mu, z);
    case Kind::legendre_P:
        return legendre_P(nu, mu, z);
    case Kind::legendre_Qhat:
        return legendre_Qhat(nu, mu, z);
    }
    throw DomainError("unknown kind");
}

inline bool is_ferrers(Kind k)
{
    return k == Kind::ferrers_P || k == Kind::ferrers_Q;
}

namespace detail {

// Sign attached to a term of order mu + delta whose coefficient carries [sqrt(1-z^2)]^alpha.
// Legendre terms pick up i^(alpha - delta); Qhat = e^(-mu pi i) Q adds (-1)^delta.
inline double term_sign(Kind kind, int alpha, int delta)
{
    if (is_ferrers(kind))
        return 1;
    int e = ((alpha - delta) % 4 + 4) % 4;
    if (e % 2 != 0)
        throw ConsistencyError("imaginary sign factor in a real recurrence");
    double s = e == 0 ? 1 : -1;
    if (kind == Kind::legendre_Qhat && delta % 2 != 0)
        s = -s;
    return s;
}

// sqrt(1 - z^2) or sqrt(z^2 - 1)
inline double root(Kind kind, double z)
{
    return is_ferrers(kind) ? std::sqrt(1 - z * z) : std::sqrt(z * z - 1);
}

// 1 - z^2 for both kinds, the form that survives the sign rule in the diagonal recurrences
inline double one_minus_z2(double z)
{
    return 1 - z * z;
}

inline double residual(std::initializer_list<double> terms)
{
    double sum = 0, big = 0;
    for (double t : terms) {
        sum += t;
        big = std::max(big, std::abs(t));
    }
    return big == 0 ? 0 : std::abs(sum) / big;
}

} // namespace detail

enum class ThreeTerm { order, degree, diag_plus, diag_minus };

// Relative residual of a three-term recurrence, normalized by the largest term
inline double three_term_check(Kind kind, double nu, double mu, double z, ThreeTerm which)
{
    using detail::term_sign;
    auto F = [&](double n, double m) { return ladder_value(kind, n, m, z); };
    double s = detail::root(kind, z);
    switch (which) {
    case ThreeTerm::order:
        return detail::residual({term_sign(kind, 1, 1) * s * F(nu, mu + 1), 2 * mu * z * F(nu, mu),
                                 term_sign(kind, 1, -1) * (nu + mu) * (nu - mu + 1) * s * F(nu, mu - 1)});
    case ThreeTerm::degree:
        return detail::residual(
            {(nu - mu + 1) * F(nu + 1, mu), -(2 * nu + 1) * z * F(nu, mu), (nu + mu) * F(nu - 1, mu)});
    case ThreeTerm::diag_plus:
    case ThreeTerm::diag_minus: {
        double pm = which == ThreeTerm::diag_plus ? 1 : -1;
        double c = ((nu + 0.5) + pm * (mu - 0.5)) * ((nu + 0.5) + pm * (mu - 1.5));
        return detail::residual({term_sign(kind, 1, 1) * s * F(nu + pm, mu + 1),
                                 (pm * (2 * nu + 1) * detail::one_minus_z2(z) + 2 * mu) * F(nu, mu),
                                 term_sign(kind, 1, -1) * c * s * F(nu - pm, mu - 1)});
    }
    }
    throw DomainError("unknown recurrence");
}

struct LadderStep {
    int dn, dm;
    int sign;
    int eps0, eps1;
    double sigma0(double nu, double mu) const
    {
        if (dn == 0 || dm == 0)
            return 0;
        if (dm * dn > 0)
            return 0.5 + sign * (nu + 0.5) + sign * mu;
        return 0.5 + sign * (nu + 0.5) - sign * mu;
    }
    // overall sign in front of the operator; the (1,-1) rows carry +- instead of -+
    int outer() const { return dn * dm < 0 ? sign : -sign; }
    double sigma1(double nu, double mu) const
    {
        if (dn == 0)
            return -sign * mu;
        if (dm == 0)
            return 0.5 + sign * (nu + 0.5);
        if (dm * dn > 0)
            return -sign * mu;
        return sign * mu;
    }
    double alpha(double nu, double mu) const
    {
        bool plus = sign > 0;
        if (dn == 0)
            return plus ? 1 : (nu + mu) * (nu - mu + 1);
        if (dm == 0)
            return plus ? nu - mu + 1 : nu + mu;
        if (dm * dn > 0)
            return plus ? 1 : (nu + mu) * (nu + mu - 1);
        return plus ? (nu - mu + 1) * (nu - mu + 2) : 1;
    }
};

// The eight rows: +-(0,1), +-(1,0), +-(1,1), +-(1,-1)
inline const std::array<LadderStep, 8>& ladder_steps()
{
    static const std::array<LadderStep, 8> rows{{{0, 1, 1, 0, 1},
                                                 {0, -1, -1, 0, 1},
                                                 {1, 0, 1, 0, 2},
                                                 {-1, 0, -1, 0, 2},
                                                 {1, 1, 1, 1, 1},
                                                 {-1, -1, -1, 1, 1},
                                                 {1, -1, 1, 1, 1},
                                                 {-1, 1, -1, 1, 1}}};
    return rows;
}

// Residual of alpha P_{nu+dn}^{mu+dm} = -+ z^eps0 w^(eps1/2) [P' + sigma0 P/z + (sigma1/2)(w'/w) P],
// w = 1 - z^2 (Ferrers, v = theta) or z^2 - 1 (Legendre, v = xi); P' by central differences.
inline double diff_recurrence_check(Kind kind, double nu, double mu, double v, const LadderStep& st,
                                    double h = 1e-5)
{
    bool fer = is_ferrers(kind);
    auto zof = [&](double t) { return fer ? std::cos(t) : std::cosh(t); };
    auto F = [&](double n, double m, double t) { return ladder_value(kind, n, m, zof(t)); };
    double z = zof(v);
    double dzdv = fer ? -std::sin(v) : std::sinh(v);
    double P = F(nu, mu, v);
    double dP = (F(nu, mu, v + h) - F(nu, mu, v - h)) / (2 * h) / dzdv;
    double w = fer ? 1 - z * z : z * z - 1;
    double wp = fer ? -2 * z : 2 * z;
    double s0 = st.sigma0(nu, mu), s1 = st.sigma1(nu, mu);
    double bracket = dP + (s0 != 0 ? s0 * P / z : 0) + s1 / 2 * wp / w * P;
    double rhs = st.outer() * std::pow(z, st.eps0) * std::pow(w, st.eps1 / 2.0) * bracket;
    if (!fer) {
        int e = ((st.eps1 + st.dm) % 4 + 4) % 4;
        rhs *= e == 0 ? 1 : -1;
        if (kind == Kind::legendre_Qhat && st.dm % 2 != 0)
            rhs = -rhs;
    }
    double lhs = st.alpha(nu, mu) * F(nu + st.dn, mu + st.dm, v);
    double big = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    return std::abs(lhs - rhs) / big;
}

struct LadderTable {
    int n_lo, n_hi, m_lo, m_hi;
    std::vector<std::optional<double>> cells;

    std::optional<double>& at(int n, int m) { return cells[(n - n_lo) * (m_hi - m_lo + 1) + (m - m_lo)]; }
    const std::optional<double>& at(int n, int m) const
    {
        return cells[(n - n_lo) * (m_hi - m_lo + 1) + (m - m_lo)];
    }
};

// Fills P_{nu0+n}^{mu0+m} over the window from the seeds at (0,0) and (0,1).
// The seed row is extended in the order, the next row comes from the mixed lift, later rows from the
// degree recurrence (order recurrence as fallback); entries behind a vanishing pivot stay empty.
inline LadderTable propagate(Kind kind, double nu0, double mu0, double z, int n_lo, int n_hi, int m_lo, int m_hi)
{
    if (n_lo > 0 || n_hi < 0 || m_lo > 0 || m_hi < 0)
        throw DomainError("window must contain the seed offset (0,0)");
    using detail::term_sign;
    const int pad = 2 + (n_hi - n_lo);
    int M_lo = m_lo - pad, M_hi = m_hi + pad;
    LadderTable t{n_lo, n_hi, M_lo, M_hi, {}};
    t.cells.resize((n_hi - n_lo + 1) * (M_hi - M_lo + 1));
    double s = detail::root(kind, z);
    const double tiny = 1e-13;
    auto ok = [](const std::optional<double>& a) { return a.has_value() && std::isfinite(*a); };
    auto put = [&](int n, int m, double v) {
        if (std::isfinite(v))
            t.at(n, m) = v;
    };
    t.at(0, 0) = ladder_value(kind, nu0, mu0, z);
    t.at(0, 1) = ladder_value(kind, nu0, mu0 + 1, z);
    // seed row, order recurrence: a P^{mu+1} + 2 mu z P^mu + b P^{mu-1} = 0
    auto order_a = [&](double) { return term_sign(kind, 1, 1) * s; };
    auto order_b = [&](double nu, double mu) { return term_sign(kind, 1, -1) * (nu + mu) * (nu - mu + 1) * s; };
    auto fill_row_order = [&](int n, int from_lo, int from_hi) {
        double nu = nu0 + n;
        for (int m = from_hi; m < M_hi; ++m) {
            double mu = mu0 + m;
            if (ok(t.at(n, m)) && ok(t.at(n, m - 1)) && !ok(t.at(n, m + 1)) && std::abs(order_a(mu)) > tiny)
                put(n, m + 1, -(2 * mu * z * *t.at(n, m) + order_b(nu, mu) * *t.at(n, m - 1)) / order_a(mu));
        }
        for (int m = from_lo; m > M_lo; --m) {
            double mu = mu0 + m;
            double b = order_b(nu, mu);
            if (ok(t.at(n, m)) && ok(t.at(n, m + 1)) && !ok(t.at(n, m - 1)) && std::abs(b) > tiny)
                put(n, m - 1, -(order_a(mu) * *t.at(n, m + 1) + 2 * mu * z * *t.at(n, m)) / b);
        }
    };
    fill_row_order(0, 0, 1);
    // mixed lift: (nu-mu+1) P_{nu+1}^mu = c1 sqrt P_nu^{mu+1} + (nu+mu+1) z P_nu^mu
    auto lift = [&](int n, int m) {
        double nu = nu0 + n, mu = mu0 + m;
        double piv = nu - mu + 1;
        if (std::abs(piv) > tiny && ok(t.at(n, m)) && ok(t.at(n, m + 1)))
            put(n + 1, m, (term_sign(kind, 1, 1) * s * *t.at(n, m + 1) + (nu + mu + 1) * z * *t.at(n, m)) / piv);
    };
    auto complete_row = [&](int n) {
        int lo = M_hi, hi = M_lo;
        for (int m = M_lo; m <= M_hi; ++m)
            if (ok(t.at(n, m))) {
                lo = std::min(lo, m);
                hi = std::max(hi, m);
            }
        if (lo < hi)
            fill_row_order(n, lo, hi);
        else if (lo == hi && lo < M_hi && ok(t.at(n, lo)))
            return;
        for (int m = M_lo + 1; m < M_hi; ++m)
            if (!ok(t.at(n, m)) && ok(t.at(n, m - 1)) && ok(t.at(n, m + 1))) {
                double nu = nu0 + n, mu = mu0 + m;
                if (std::abs(mu) > tiny)
                    put(n, m, -(order_a(mu) * *t.at(n, m + 1) + order_b(nu, mu) * *t.at(n, m - 1)) / (2 * mu * z));
            }
    };
    if (n_hi >= 1) {
        for (int m = M_lo; m < M_hi; ++m)
            lift(0, m);
        complete_row(1);
    }
    for (int n = 1; n < n_hi; ++n) {
        double nu = nu0 + n;
        for (int m = M_lo; m <= M_hi; ++m) {
            double mu = mu0 + m, piv = nu - mu + 1;
            if (std::abs(piv) > tiny && ok(t.at(n, m)) && ok(t.at(n - 1, m)))
                put(n + 1, m, ((2 * nu + 1) * z * *t.at(n, m) - (nu + mu) * *t.at(n - 1, m)) / piv);
        }
        complete_row(n + 1);
    }
    for (int n = 0; n > n_lo; --n) {
        double nu = nu0 + n;
        for (int m = M_lo; m <= M_hi; ++m) {
            double mu = mu0 + m, piv = nu + mu;
            std::optional<double> up = n + 1 <= n_hi ? t.at(n + 1, m) : std::nullopt;
            if (n + 1 > n_hi) {
                double p2 = nu - mu + 1;
                if (m < M_hi && std::abs(p2) > tiny && ok(t.at(n, m)) && ok(t.at(n, m + 1)))
                    up = (term_sign(kind, 1, 1) * s * *t.at(n, m + 1) + (nu + mu + 1) * z * *t.at(n, m)) / p2;
            }
            if (std::abs(piv) > tiny && ok(t.at(n, m)) && ok(up))
                put(n - 1, m, ((2 * nu + 1) * z * *t.at(n, m) - (nu - mu + 1) * *up) / piv);
        }
        complete_row(n - 1);
    }
    LadderTable out{n_lo, n_hi, m_lo, m_hi, {}};
    out.cells.resize((n_hi - n_lo + 1) * (m_hi - m_lo + 1));
    for (int n = n_lo; n <= n_hi; ++n)
        for (int m = m_lo; m <= m_hi; ++m)
            out.at(n, m) = t.at(n, m);
    return out;
}

} // namespace algleg

#endif
