#ifndef ALGLEG_EXPANSIONS_HPP
#define ALGLEG_EXPANSIONS_HPP

#include "families.hpp"

#include <algorithm>
#include <functional>

namespace algleg {

struct QuadResult {
    double value = 0;
    double err_estimate = 0;
    long evaluations = 0;
};

// Abscissa with accurate distances to both endpoints
struct QuadPoint {
    double x, da, db;
};

struct EndpointExponents {
    double p = 0, q = 0;
};

struct QuadOptions {
    double rel_tol = 1e-13;
    double abs_tol = 1e-300;
    int max_level = 9;
    long max_evaluations = 8192;
};

// Tanh-sinh quadrature of f over (a,b); the integrand may behave like (x-a)^p (b-x)^q at the ends.
inline QuadResult singular_quad(const std::function<double(const QuadPoint&)>& f, double a, double b,
                                EndpointExponents ex = {}, QuadOptions opt = {})
{
    if (ex.p <= -1 || ex.q <= -1)
        throw DomainError("integrand is not integrable at an endpoint");
    if (!(b > a))
        throw DomainError("empty integration interval");
    const double tmax = 6.0, len = b - a, half = len / 2;
    QuadResult res;
    auto node = [&](double t) {
        double s = pi / 2 * std::sinh(t);
        double e1 = std::exp(-2 * s), e2 = std::exp(2 * s);
        double da = len / (1 + e1), db = len / (1 + e2);
        double ch = std::cosh(s);
        double w = half * pi / 2 * std::cosh(t) / (ch * ch);
        double x = t < 0 ? a + da : b - db;
        double v = f({x, da, db});
        ++res.evaluations;
        if (!std::isfinite(v))
            throw DomainError("integrand is not finite at a quadrature node");
        return w * v;
    };
    double h = 1.0;
    double sum = node(0.0);
    for (double t = h; t <= tmax; t += h)
        sum += node(t) + node(-t);
    double prev = sum * h;
    for (int level = 1; level <= opt.max_level; ++level) {
        h /= 2;
        long count = static_cast<long>(tmax / h);
        if (res.evaluations + count > opt.max_evaluations)
            break;
        for (long j = 1; j * h <= tmax; j += 2)
            sum += node(j * h) + node(-j * h);
        double cur = sum * h;
        res.value = cur;
        res.err_estimate = std::abs(cur - prev);
        if (level >= 3 && res.err_estimate <= std::max(opt.abs_tol, opt.rel_tol * std::abs(cur)))
            return res;
        prev = cur;
    }
    res.value = prev;
    return res;
}

// Direct quadrature of the Mehler-Dirichlet integral
inline QuadResult mehler_quadrature(int n, int m, double v, Variable kind)
{
    double nu = 1.0 / 3 + n, e = m - 0.25;
    if (kind == Variable::circular) {
        auto f = [&](const QuadPoint& p) {
            double d = 2 * std::sin((v + p.x) / 2) * std::sin(p.db / 2);
            return std::cos(nu * p.x) * std::pow(d, e);
        };
        return singular_quad(f, 0, v, {0, e});
    }
    auto f = [&](const QuadPoint& p) {
        double d = 2 * std::sinh((v + p.x) / 2) * std::sinh(p.db / 2);
        return std::cosh(nu * p.x) * std::pow(d, e);
    };
    return singular_quad(f, 0, v, {0, e});
}

// sin of the abscissa, accurate near both ends of (0, pi)
inline double sin_near(const QuadPoint& p)
{
    return std::sin(std::min(p.x, p.db));
}

// cos(x) kept strictly inside (-1, 1)
inline double open_cos(double x)
{
    double z = std::cos(x);
    if (std::abs(z) >= 1)
        z = std::copysign(std::nextafter(1.0, 0.0), z);
    return z;
}

namespace detail {

inline bool half_odd(double nu)
{
    return is_integer(nu + 0.5);
}

} // namespace detail

// Integral over (-1,1) of P_nu^mu(z) P_nu'^-mu(-z), computed in theta
inline QuadResult love_hunter_inner(double nu, double nup, double mu)
{
    if (!(mu > -1 && mu < 1))
        throw DomainError("Love-Hunter integrals need mu in (-1, 1)");
    if (detail::half_odd(nu) || detail::half_odd(nup))
        throw DomainError("Love-Hunter integrals need degrees that are not half-odd integers");
    auto f = [&](const QuadPoint& p) {
        return ferrers_P_split(nu, mu, p.x, p.db) * ferrers_P_split(nup, -mu, p.db, p.x) * sin_near(p);
    };
    double ex = 1 - std::abs(mu);
    return singular_quad(f, 0, pi, {ex, ex});
}

// Integral of |P_nu^mu(z) P_nu'^-mu(-z)|, the scale used for relative biorthogonality checks
inline double love_hunter_scale(double nu, double nup, double mu)
{
    auto f = [&](const QuadPoint& p) {
        return std::abs(ferrers_P_split(nu, mu, p.x, p.db) * ferrers_P_split(nup, -mu, p.db, p.x)) * sin_near(p);
    };
    double ex = 1 - std::abs(mu);
    return singular_quad(f, 0, pi, {ex, ex}).value;
}

namespace detail {

// Lifted octahedral function in double precision, numerator padded to degree k + a + 2b
struct LiftedOct {
    std::vector<double> c;
    int a, b;

    explicit LiftedOct(const OctahedralFunction& r) : a(r.pow_one_minus_u()), b(r.pow_pf())
    {
        c.assign(r.k() + a + 2 * b + 1, 0.0);
        const auto& co = r.numer().coeffs();
        for (size_t j = 0; j < co.size(); ++j)
            c[j] = co[j].get_d();
    }

    double numer(double u) const
    {
        double p = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it)
            p = p * u + *it;
        return p;
    }

    // numerator of r at ((1+s)/(1-s))^4, times (1-s)^(4 deg)
    double numer_rotated(double s, double t) const
    {
        double p4 = std::pow(1 + s, 4), t4 = std::pow(t, 4), sum = 0;
        int D = static_cast<int>(c.size()) - 1;
        for (int j = 0; j <= D; ++j)
            sum += c[j] * std::pow(p4, j) * std::pow(t4, D - j);
        return sum;
    }
};

inline double qf(double s)
{
    double u = std::pow(s, 4);
    return 1 + 14 * u + u * u;
}

// Integrand of the s-interval inner product, with s = x and t = 1 - s supplied separately.
// The powers of s and t are collected analytically: s^(2-4m-a'), t^(3-a).
inline double biorthog_integrand(const LiftedOct& r, const LiftedOct& rp, int n, int np, int m, double s, double t)
{
    double u = std::pow(s, 4), g = (1 + s) * (1 + s * s);
    double pf = 1 + 14 * u + u * u;
    double pfr = std::pow(t, 8) + 14 * std::pow(1 + s, 4) * std::pow(t, 4) + std::pow(1 + s, 8);
    double rest = std::pow(g, 2 - 4 * m - r.a) * std::pow(qf(s), -1.5 * (n + np) - 2) * r.numer(u) *
                  std::pow(pf, -r.b) * rp.numer_rotated(s, t) * std::pow(-8 * (1 + s * s), -rp.a) *
                  std::pow(pfr, -rp.b);
    return std::pow(s, 2 - 4 * m - rp.a) * std::pow(t, 3 - r.a) * rest;
}

inline QuadResult biorthog_quad(int n, int np, int m, bool absolute)
{
    if (m != 0 && m != -1)
        throw DomainError("the s-interval integral diverges unless m is 0 or -1");
    LiftedOct r(generate({n, m})), rp(generate({np, m}));
    auto f = [&](const QuadPoint& p) {
        double v = biorthog_integrand(r, rp, n, np, m, p.x, p.db);
        return absolute ? std::abs(v) : v;
    };
    return singular_quad(f, 0, 1, {2.0 - 4 * m - rp.a, 3.0 - r.a});
}

} // namespace detail

// s-interval inner product of lifted octahedral functions with m in {0,-1}
inline QuadResult octahedral_biorthog(int n, int np, int m)
{
    return detail::biorthog_quad(n, np, m, false);
}

inline double octahedral_biorthog_scale(int n, int np, int m)
{
    return detail::biorthog_quad(n, np, m, true).value;
}

struct ExpansionSpec {
    double nu0, mu;
    int N;
    std::function<double(double)> f;
};

// c_n for |n| <= N, index n + N
inline std::vector<double> lh_coefficients(const ExpansionSpec& spec)
{
    if (!(spec.mu > -1 && spec.mu < 1))
        throw DomainError("expansion order must lie in (-1, 1)");
    std::vector<double> c;
    double ex = 1 - std::abs(spec.mu);
    for (int n = -spec.N; n <= spec.N; ++n) {
        double nu = spec.nu0 + 2 * n;
        if (detail::half_odd(nu))
            throw DomainError("expansion degree is a half-odd integer");
        auto num = singular_quad(
            [&](const QuadPoint& p) {
                return ferrers_P_split(nu, -spec.mu, p.db, p.x) * spec.f(open_cos(p.x)) * sin_near(p);
            },
            0, pi, {ex, ex});
        auto den = love_hunter_inner(nu, nu, spec.mu);
        if (std::abs(den.value) < 1e-14)
            throw DomainError("degenerate Love-Hunter denominator");
        c.push_back(num.value / den.value);
    }
    return c;
}

inline double lh_partial_sum(const ExpansionSpec& spec, const std::vector<double>& c, double z)
{
    double s = 0, theta = std::acos(z);
    for (int n = -spec.N; n <= spec.N; ++n)
        s += c[n + spec.N] * ferrers_P_theta(spec.nu0 + 2 * n, spec.mu, theta);
    return s;
}

// sin((j+1/2)theta)/sin(theta/2), with the limits at theta = 0 and pi
inline double chebyshev_w_theta(int j, double theta)
{
    if (j < 0)
        throw DomainError("Chebyshev index must be non-negative");
    if (theta == 0)
        return 2 * j + 1;
    return std::sin((j + 0.5) * theta) / std::sin(theta / 2);
}

inline double chebyshev_w(int j, double z)
{
    if (!(z >= -1 && z <= 1))
        throw DomainError("Chebyshev argument outside [-1, 1]");
    return chebyshev_w_theta(j, std::acos(z));
}

struct PinskyPair {
    double psi, chi;
};

inline PinskyPair pinsky_basis(int n, double alpha, double theta)
{
    if (!(theta >= 0 && theta <= pi))
        throw DomainError("theta must lie in [0, pi]");
    double k = 2 * n + alpha;
    if (theta == 0) {
        double c = std::cos(k * pi);
        if (std::abs(c) < 1e-15)
            return {2 * k, 2 * k * std::sin(k * pi)};
        return {2 * k, std::copysign(HUGE_VAL, c)};
    }
    double s = std::sin(theta / 2);
    return {std::sin(k * theta) / s, std::cos(k * (pi - theta)) / s};
}

// Unhatted pair sin(k theta)/sqrt(sin theta), cos(k(pi-theta))/sqrt(sin theta)
inline PinskyPair love_hunter_dihedral_basis(int n, double alpha, double theta)
{
    double k = 2 * n + alpha, r = std::sqrt(std::sin(theta));
    return {std::sin(k * theta) / r, std::cos(k * (pi - theta)) / r};
}

inline double pinsky_denominator(int n, double alpha)
{
    auto f = [&](const QuadPoint& p) {
        auto b = pinsky_basis(n, alpha, p.x);
        double s = std::sin(p.x / 2);
        return b.psi * b.chi * s * s;
    };
    return singular_quad(f, 0, pi).value;
}

inline double love_hunter_dihedral_denominator(int n, double alpha)
{
    auto f = [&](const QuadPoint& p) {
        auto b = love_hunter_dihedral_basis(n, alpha, p.x);
        return b.psi * b.chi * sin_near(p);
    };
    return singular_quad(f, 0, pi).value;
}

struct WExpansion {
    int N;
    std::vector<double> coeffs;

    double operator()(double z) const
    {
        double theta = std::acos(std::clamp(z, -1.0, 1.0));
        double s = 0;
        for (int n = -N; n <= N; ++n)
            s += coeffs[n + N] * pinsky_basis(n, 0.5, theta).psi;
        return s;
    }
};

// Symmetric alpha = 1/2 expansion; breaks lists z-points where f may jump or kink.
inline WExpansion w_expansion(const std::function<double(double)>& f, int N, std::vector<double> breaks = {})
{
    if (N < 0)
        throw DomainError("truncation must be non-negative");
    std::vector<double> cuts{0.0, pi};
    for (double z : breaks)
        cuts.push_back(std::acos(std::clamp(z, -1.0, 1.0)));
    std::sort(cuts.begin(), cuts.end());
    // composite 8-point Gauss-Legendre on panels within each smooth piece
    static const double gx[4] = {0.1834346424956498, 0.5255324099163290, 0.7966664774136267, 0.9602898564975363};
    static const double gw[4] = {0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};
    int panels = std::max(64, 16 * N);
    std::vector<double> th, wt;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        double a = cuts[i], b = cuts[i + 1];
        if (b - a <= 0)
            continue;
        int np = std::max(1, static_cast<int>(std::ceil(panels * (b - a) / pi)));
        double hw = (b - a) / np / 2;
        for (int p = 0; p < np; ++p) {
            double mid = a + (2 * p + 1) * hw;
            for (int k = 0; k < 4; ++k)
                for (double sgn : {-1.0, 1.0}) {
                    th.push_back(mid + sgn * hw * gx[k]);
                    wt.push_back(hw * gw[k]);
                }
        }
    }
    std::vector<double> g(th.size());
    for (size_t i = 0; i < th.size(); ++i) {
        double s = std::sin(th[i] / 2);
        g[i] = wt[i] * f(std::cos(th[i])) * s * s;
    }
    const double den = pi / 2;
    WExpansion e{N, {}};
    for (int n = -N; n <= N; ++n) {
        double sum = 0;
        for (size_t i = 0; i < th.size(); ++i)
            sum += g[i] * pinsky_basis(n, 0.5, th[i]).chi;
        e.coeffs.push_back(sum / den);
    }
    return e;
}

} // namespace algleg

#endif
