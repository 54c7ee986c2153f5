#ifndef ALGLEG_ORACLE_HPP
#define ALGLEG_ORACLE_HPP

#include "exact.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace algleg {

struct UndefinedFunction : DomainError {
    using DomainError::DomainError;
};

constexpr double pi = std::numbers::pi;

inline bool is_integer(double x, double tol = 1e-12)
{
    return std::abs(x - std::round(x)) < tol;
}

inline bool is_nonpos_integer(double x)
{
    return is_integer(x) && std::round(x) <= 0;
}

inline double gamma_fn(double x)
{
    if (is_nonpos_integer(x))
        throw DomainError("gamma pole");
    return std::tgamma(x);
}

// 1/Gamma(x), vanishing at the poles
inline double rgamma(double x)
{
    if (is_nonpos_integer(x))
        return 0.0;
    return 1.0 / std::tgamma(x);
}

struct Hyp2F1Params {
    double a, b, c, x;
};

namespace detail {

inline double series_2f1(double a, double b, double c, double x, long k0, double t0)
{
    double sum = 0, t = t0, big = 0;
    int small = 0;
    auto finish = [&] {
        if (big > 1e8 * std::max(std::abs(sum), 1.0))
            throw DomainError("2F1 series lost more than 8 digits to cancellation");
        return sum;
    };
    for (long k = k0; k < 1000000; ++k) {
        sum += t;
        big = std::max(big, std::abs(t));
        if (t == 0)
            return finish();
        if (std::abs(t) <= 1e-17 * std::abs(sum)) {
            if (++small == 2)
                return finish();
        }
        else
            small = 0;
        t *= (a + k) * (b + k) / ((c + k) * (k + 1)) * x;
    }
    throw DomainError("2F1 series did not converge in 1e6 terms");
}

inline bool terminates(double a, double b)
{
    return is_nonpos_integer(a) || is_nonpos_integer(b);
}

inline void guard(double a, double b, double x)
{
    if (!terminates(a, b) && std::abs(x) > 0.8)
        throw DomainError("2F1 argument outside the series guard |x| <= 0.8");
}

} // namespace detail

inline double gauss_2f1(const Hyp2F1Params& p)
{
    detail::guard(p.a, p.b, p.x);
    if (is_nonpos_integer(p.c)) {
        double j = -std::round(p.c);
        double stop = std::min(is_nonpos_integer(p.a) ? -std::round(p.a) : HUGE_VAL,
                               is_nonpos_integer(p.b) ? -std::round(p.b) : HUGE_VAL);
        if (!(stop <= j))
            throw DomainError("2F1 denominator parameter is a non-positive integer");
    }
    return detail::series_2f1(p.a, p.b, p.c, p.x, 0, 1.0);
}

inline double gauss_2f1(double a, double b, double c, double x)
{
    return gauss_2f1({a, b, c, x});
}

// 2F1(a,b;c;x)/Gamma(c), continuous in c
inline double gauss_2f1_reg(double a, double b, double c, double x)
{
    detail::guard(a, b, x);
    if (!is_nonpos_integer(c))
        return detail::series_2f1(a, b, c, x, 0, 1.0) * rgamma(c);
    long k0 = 1 - std::lround(c);
    double t0 = 1;
    for (long k = 0; k < k0; ++k)
        t0 *= (a + k) * (b + k) / (k + 1) * x;
    return detail::series_2f1(a, b, c, x, k0, t0);
}

// Ferrers P on (-1,1), parametrized by z = cos(theta) for accuracy near the ends.
inline double ferrers_P_theta(double nu, double mu, double theta);

namespace detail {

inline double ferrers_P_direct(double nu, double mu, double theta)
{
    double s = std::sin(theta / 2);
    double ct = std::cos(theta / 2) / s;
    return std::pow(ct, mu) * gauss_2f1_reg(-nu, nu + 1, 1 - mu, s * s);
}

// Same series with the half-angle functions taken from the complementary angle
inline double ferrers_P_direct_comp(double nu, double mu, double comp)
{
    double s = std::cos(comp / 2);
    double ct = std::sin(comp / 2) / s;
    return std::pow(ct, mu) * gauss_2f1_reg(-nu, nu + 1, 1 - mu, s * s);
}

} // namespace detail

inline double ferrers_Q_theta(double nu, double mu, double theta)
{
    if (is_integer(mu))
        throw DomainError("integer-order Ferrers Q is outside scope");
    if (is_nonpos_integer(nu + mu + 1))
        throw UndefinedFunction("Ferrers Q undefined: nu + mu is a negative integer");
    double ratio = gamma_fn(nu + mu + 1) * rgamma(nu - mu + 1);
    double pp = ferrers_P_theta(nu, mu, theta);
    double pm = ferrers_P_theta(nu, -mu, theta);
    double q2pi = std::cos(mu * pi) / std::sin(mu * pi) * pp - ratio / std::sin(mu * pi) * pm;
    return q2pi * pi / 2;
}

// Ferrers P at cos(theta), with comp = pi - theta supplied to full relative accuracy
inline double ferrers_P_split(double nu, double mu, double theta, double comp)
{
    if (!(theta > 0 && comp > 0))
        throw DomainError("Ferrers argument outside (-1,1)");
    if (theta <= pi / 2)
        return detail::ferrers_P_direct(nu, mu, theta);
    double s = std::cos(comp / 2);
    if (s * s <= 0.8 || detail::terminates(-nu, nu + 1))
        return detail::ferrers_P_direct_comp(nu, mu, comp);
    double c = std::cos((nu + mu) * pi), sn = std::sin((nu + mu) * pi);
    double p = detail::ferrers_P_direct(nu, mu, comp);
    if (std::abs(sn) < 1e-15)
        return c * p;
    return c * p - 2 / pi * sn * ferrers_Q_theta(nu, mu, comp);
}

inline double ferrers_P_theta(double nu, double mu, double theta)
{
    if (!(theta > 0 && theta < pi))
        throw DomainError("Ferrers argument outside (-1,1)");
    return ferrers_P_split(nu, mu, theta, pi - theta);
}

inline double ferrers_P(double nu, double mu, double z)
{
    if (!(z > -1 && z < 1))
        throw DomainError("Ferrers argument outside (-1,1)");
    return ferrers_P_theta(nu, mu, std::acos(z));
}

inline double ferrers_Q(double nu, double mu, double z)
{
    if (!(z > -1 && z < 1))
        throw DomainError("Ferrers argument outside (-1,1)");
    return ferrers_Q_theta(nu, mu, std::acos(z));
}

inline double legendre_P(double nu, double mu, double z);

inline bool qhat_defined(double nu, double mu)
{
    return !is_nonpos_integer(nu + mu + 1);
}

inline double legendre_Qhat(double nu, double mu, double z)
{
    if (!(z > 1))
        throw DomainError("Legendre argument must exceed 1");
    if (!qhat_defined(nu, mu))
        throw UndefinedFunction("Qhat undefined: nu + mu is a negative integer");
    double x = 1 / (z * z);
    if (x <= 0.8) {
        double pref = std::sqrt(pi) / std::pow(2.0, nu + 1) * gamma_fn(nu + mu + 1) *
                      std::pow(z * z - 1, mu / 2) / std::pow(z, nu + mu + 1);
        return pref * gauss_2f1_reg(nu / 2 + mu / 2 + 0.5, nu / 2 + mu / 2 + 1, nu + 1.5, x);
    }
    if (is_integer(mu))
        throw DomainError("Qhat near z = 1 needs non-integer order");
    double ratio = gamma_fn(nu + mu + 1) * rgamma(nu - mu + 1);
    double csc = 1 / std::sin(mu * pi);
    return pi / 2 * (csc * legendre_P(nu, mu, z) - csc * ratio * legendre_P(nu, -mu, z));
}

inline double legendre_P(double nu, double mu, double z)
{
    if (!(z > 1))
        throw DomainError("Legendre argument must exceed 1");
    double x = (1 - z) / 2;
    if (x >= -0.8 || detail::terminates(-nu, nu + 1))
        return std::pow((z + 1) / (z - 1), mu / 2) * gauss_2f1_reg(-nu, nu + 1, 1 - mu, x);
    double c = std::cos(nu * pi);
    if (std::abs(c) < 1e-12)
        throw DomainError("Legendre P beyond the series guard at half-odd degree");
    double g = rgamma(nu - mu + 1) * rgamma(-mu - nu);
    if (g == 0)
        throw DomainError("Legendre P beyond the series guard needs a limit");
    return g / c * (legendre_Qhat(-nu - 1, -mu, z) - legendre_Qhat(nu, -mu, z));
}

template <class T>
T jacobi_P(int n, T alpha, T beta, T z)
{
    if (n < 0)
        throw DomainError("Jacobi degree must be non-negative");
    T sum = 0;
    T w = (z - T(1)) / T(2);
    T wk = 1;
    for (int l = 0; l <= n; ++l) {
        T c = 1;
        for (int j = 0; j < l; ++j)
            c *= T(n + 1 + j) + alpha + beta;
        for (int j = 0; j < n - l; ++j)
            c *= alpha + T(l + 1 + j);
        double f = std::tgamma(l + 1.0) * std::tgamma(n - l + 1.0);
        sum += c / T(f) * wk;
        wk *= w;
    }
    return sum;
}

// Q^mu_nu(coth xi) minus the Whipple image; zero when the transformation holds.
inline double whipple(double nu, double mu, double xi)
{
    if (!qhat_defined(nu, mu))
        throw UndefinedFunction("Qhat undefined: nu + mu is a negative integer");
    double lhs = legendre_Qhat(nu, mu, 1 / std::tanh(xi));
    double rhs = std::sqrt(pi / 2) * gamma_fn(nu + mu + 1) * std::sqrt(std::sinh(xi)) *
                 legendre_P(-mu - 0.5, -nu - 0.5, std::cosh(xi));
    return lhs - rhs;
}

} // namespace algleg

#endif
