#ifndef ALGLEG_FAMILIES_HPP
#define ALGLEG_FAMILIES_HPP

#include "octahedral.hpp"
#include "oracle.hpp"

#include <complex>

namespace algleg {

enum class Sign { plus, minus };

enum class TrigKind { A, B, C };

struct TrigPair {
    double plus, minus;
    TrigKind kind;
};

// A(xi) on (0,inf), B(theta) on (0,pi), C(xi) on R
inline TrigPair trig_pair(TrigKind kind, double v)
{
    switch (kind) {
    case TrigKind::A: {
        if (!(v >= 0))
            throw DomainError("A pair needs xi >= 0");
        double c = std::cosh(v / 3), s = std::sinh(v / 3);
        double p = c + std::sqrt((4 * c * c - 1) / 3);
        return {p, s * s / (3 * p), kind};
    }
    case TrigKind::B: {
        if (!(v >= 0 && v <= pi))
            throw DomainError("B pair needs theta in [0, pi]");
        double c = std::cos(v / 3), s = std::sin(v / 3);
        double p = c + std::sqrt((4 * c * c - 1) / 3);
        return {p, s * s / (3 * p), kind};
    }
    case TrigKind::C: {
        double s = std::sinh(v / 3), c = std::cosh(v / 3);
        double root = std::sqrt((4 * s * s + 1) / 3);
        if (v >= 0) {
            double p = s + root;
            return {p, c * c / (3 * p), kind};
        }
        double mn = -s + root;
        return {c * c / (3 * mn), mn, kind};
    }
    }
    throw DomainError("unknown trig pair");
}

namespace detail {

inline double pow2(double e)
{
    return std::exp2(e);
}

inline double sgn(int k)
{
    return (k % 2 == 0) ? 1.0 : -1.0;
}

inline double poch(long num, long den, long k)
{
    return pochhammer(rat(num, den), k).get_d();
}

inline const double sqrt3p1 = std::sqrt(std::sqrt(3.0) + 1);
inline const double sqrt3m1 = std::sqrt(std::sqrt(3.0) - 1);

} // namespace detail

// P^{+-(1/4+m)}_{-1/6+n}(cosh xi)
inline double oct_legendre_P(int n, int m, double xi, Sign sign)
{
    if (!(xi > 0))
        throw DomainError("octahedral Legendre formula needs xi > 0");
    const auto& r = generate({n, m});
    auto A = trig_pair(TrigKind::A, xi);
    double e = 0.25 + 3 * m + 3 * n;
    double sh = std::pow(std::sinh(xi), -0.25 - m);
    if (sign == Sign::plus)
        return detail::pow2(-2 * m - 3 * n) * rgamma(0.75 - m) * sh * std::pow(A.plus, e) *
               r(-A.minus / A.plus);
    return detail::sgn(n) * detail::pow2(-2 * m - 3 * n) * std::pow(3.0, 0.75 + 3 * m) * rgamma(1.25 + m) * sh *
           std::pow(A.minus, e) * r.hat(-A.plus / A.minus);
}

// Ferrers P^{+-(1/4+m)}_{-1/6+n}(cos theta)
inline double oct_ferrers_P(int n, int m, double theta, Sign sign)
{
    if (!(theta > 0 && theta < pi))
        throw DomainError("octahedral Ferrers formula needs theta in (0, pi)");
    const auto& r = generate({n, m});
    auto B = trig_pair(TrigKind::B, theta);
    double e = 0.25 + 3 * m + 3 * n;
    double sh = std::pow(std::sin(theta), -0.25 - m);
    if (sign == Sign::plus)
        return detail::pow2(-2 * m - 3 * n) * rgamma(0.75 - m) * sh * std::pow(B.plus, e) * r(B.minus / B.plus);
    return detail::pow2(-2 * m - 3 * n) * std::pow(3.0, 0.75 + 3 * m) * rgamma(1.25 + m) * sh *
           std::pow(B.minus, e) * r.hat(B.plus / B.minus);
}

enum class Variable { circular, hyperbolic };

inline double mehler_K(int n, int m)
{
    return std::sqrt(pi / 2) * detail::pow2(-2 * m - 3 * n) * std::pow(3.0, 0.75 + 3 * m) *
           gamma_fn(0.75 + m) / gamma_fn(1.25 + m);
}

// Closed form of the Mehler-Dirichlet integral with kernel cos((1/3+n)phi)/(cos phi - cos theta)^(1/4-m)
inline double mehler_integral(int n, int m, double v, Variable kind)
{
    if (m < 0)
        throw DomainError("Mehler-Dirichlet closed form needs m >= 0");
    const auto& r = generate({n, m});
    double e = 0.25 + 3 * m + 3 * n;
    if (kind == Variable::circular) {
        if (!(v > 0 && v < pi))
            throw DomainError("theta must lie in (0, pi)");
        auto B = trig_pair(TrigKind::B, v);
        return mehler_K(n, m) * std::pow(B.minus, e) * r.hat(B.plus / B.minus);
    }
    if (!(v > 0))
        throw DomainError("xi must be positive");
    auto A = trig_pair(TrigKind::A, v);
    return detail::sgn(n) * mehler_K(n, m) * std::pow(A.minus, e) * r.hat(-A.plus / A.minus);
}

struct GammaIdentities {
    double plus[2], minus[2];
};

// Gamma-product expressions for sqrt(sqrt3 + 1) and sqrt(sqrt3 - 1)
inline GammaIdentities vidunas_expressions()
{
    double g4 = std::tgamma(0.25), g3 = std::tgamma(1.0 / 3);
    GammaIdentities g;
    g.plus[0] = std::sqrt(pi) * std::pow(2.0, 0.25) * std::pow(3.0, -0.375) * std::tgamma(1.0 / 12) / (g4 * g3);
    g.plus[1] = std::pow(pi, -1.5) * std::pow(2.0, -0.75) * std::pow(3.0, 0.375) * std::tgamma(11.0 / 12) * g4 * g3;
    g.minus[0] = std::pow(pi, -0.5) * std::pow(2.0, -0.25) * std::pow(3.0, 0.125) * std::tgamma(5.0 / 12) / g4 * g3;
    g.minus[1] = std::pow(pi, -0.5) * std::pow(2.0, -0.25) * std::pow(3.0, -0.125) * std::tgamma(7.0 / 12) * g4 / g3;
    return g;
}

namespace detail {

inline double tetra_F(int n, int m)
{
    return pow2(2.75 - 2 * m - 3 * n) * std::pow(3.0, -0.375) * poch(1, 4, m) / poch(13, 12, m + n) /
           gamma_fn(4.0 / 3);
}

} // namespace detail

enum class TetraRow { first, second };

// Qhat^{-1/3-n}_{-3/4-m}(coth xi) (first row) or Qhat^{-1/3-n}_{-1/4+m}(coth xi) (second row)
inline double tetra2_Qhat(int n, int m, double xi, TetraRow row)
{
    if (!(xi > 0))
        throw DomainError("xi must be positive");
    const auto& r = generate({n, m});
    auto A = trig_pair(TrigKind::A, xi);
    double e = 0.25 + 3 * m + 3 * n;
    double pref = detail::tetra_F(n, m) * std::pow(std::sinh(xi), 0.25 - m);
    double body;
    if (row == TetraRow::first)
        body = -detail::sgn(n) * detail::sqrt3p1 * std::pow(A.plus, e) * r(-A.minus / A.plus);
    else
        body = detail::sgn(m) * detail::sqrt3m1 * std::pow(A.minus, e) * r(-A.plus / A.minus);
    return pi / 2 * pref * body;
}

namespace detail {

template <class Pair>
double tetra2_P_common(int n, int m, const Pair& X, double hyp_pow, Sign sign, bool ferrers)
{
    const auto& r = generate({n, m});
    double e = 0.25 + 3 * m + 3 * n;
    double tp = sgn(n) * std::pow(X.plus, e) * r(-X.minus / X.plus);
    double tm = sgn(m) * std::pow(X.minus, e) * r(-X.plus / X.minus);
    if (sign == Sign::minus) {
        double pref = pow2(1.25 - 2 * m - 3 * n) * std::pow(3.0, -0.375) * poch(1, 4, m) / poch(13, 12, m + n) /
                      gamma_fn(4.0 / 3) * hyp_pow;
        if (ferrers)
            return pref * (-sqrt3m1 * tp + sqrt3p1 * tm);
        return sgn(n) * pref * (sqrt3m1 * tp - sqrt3p1 * tm);
    }
    double pref = sgn(n) * pow2(-0.25 - 2 * m - 3 * n) * std::pow(3.0, -0.375) * poch(1, 4, m) /
                  poch(5, 12, m - n) / gamma_fn(2.0 / 3) * hyp_pow;
    return pref * (sqrt3p1 * tp + sqrt3m1 * tm);
}

} // namespace detail

// P^{-+(1/3+n)}_{-3/4-m}(coth xi)
inline double tetra2_P_legendre(int n, int m, double xi, Sign sign)
{
    if (!(xi > 0))
        throw DomainError("xi must be positive");
    return detail::tetra2_P_common(n, m, trig_pair(TrigKind::A, xi), std::pow(std::sinh(xi), 0.25 - m), sign,
                                   false);
}

// Ferrers P^{-+(1/3+n)}_{-3/4-m}(tanh xi)
inline double tetra2_P_ferrers(int n, int m, double xi, Sign sign)
{
    return detail::tetra2_P_common(n, m, trig_pair(TrigKind::C, xi), std::pow(std::cosh(xi), 0.25 - m), sign,
                                   true);
}

enum class Tetra3Kind { ferrers_P, legendre_P, qhat };

// Class III: minus gives order -1/3-n at degree -1/6+n, plus gives order 1/3+n at degree -5/6-n.
inline double tetra3_eval(int n, double xi, Tetra3Kind which, Sign sign)
{
    double two = sign == Sign::minus ? detail::pow2(-1.0 / 3 - n) : detail::pow2(1.0 / 3 + n);
    Sign inner = sign;
    switch (which) {
    case Tetra3Kind::ferrers_P: {
        if (!(xi > 0))
            throw DomainError("xi must be positive");
        double w = -std::expm1(-2 * xi);
        return two * std::pow(w, -0.25) * tetra2_P_legendre(n, 0, xi, inner);
    }
    case Tetra3Kind::legendre_P: {
        double w = 1 + std::exp(-2 * xi);
        return two * std::pow(w, -0.25) * tetra2_P_ferrers(n, 0, xi, inner);
    }
    case Tetra3Kind::qhat: {
        double w = 1 + std::exp(2 * xi);
        return pi / 2 * two * std::pow(w, -0.25) * std::sqrt(2.0) * tetra2_P_ferrers(n, 0, xi, inner);
    }
    }
    throw DomainError("unknown class III kind");
}

enum class Kind { legendre_P, legendre_Qhat, ferrers_P, ferrers_Q };

// P^mu_{-1/2 +- (n+1/2)} via Jacobi polynomials; v is xi (Legendre) or theta (Ferrers)
inline double cyclic_P(int n, double mu, double v, Kind kind)
{
    if (n < 0)
        throw DomainError("cyclic degree must be non-negative");
    double pre = std::tgamma(n + 1.0) * rgamma(n - mu + 1);
    if (pre == 0)
        return 0.0;
    if (kind == Kind::legendre_P) {
        if (!(v > 0))
            throw DomainError("xi must be positive");
        return pre * std::pow(1 / std::tanh(v / 2), mu) * jacobi_P(n, -mu, mu, std::cosh(v));
    }
    if (kind == Kind::ferrers_P) {
        if (!(v > 0 && v < pi))
            throw DomainError("theta must lie in (0, pi)");
        return pre * std::pow(1 / std::tan(v / 2), mu) * jacobi_P(n, -mu, mu, std::cos(v));
    }
    throw DomainError("cyclic formulas cover P only");
}

enum class DihedralKind { qhat, legendre_P, ferrers_P, ferrers_Q };

// Order +-(1/2+m), degree -1/2+alpha; v is xi or theta.
inline double dihedral_eval(int m, double alpha, double v, DihedralKind which, Sign sign)
{
    using C = std::complex<double>;
    if (m < 0)
        throw DomainError("dihedral m must be non-negative");
    bool degenerate = is_integer(alpha) && std::abs(std::round(alpha)) <= m;
    if (sign == Sign::minus && degenerate) {
        if (which == DihedralKind::qhat || which == DihedralKind::ferrers_Q)
            throw UndefinedFunction("dihedral function undefined for alpha in {-m..m}");
        throw DomainError("dihedral minus case at alpha in {-m..m} needs a limit");
    }
    double mf = std::tgamma(m + 1.0);
    double poch = pochhammer(alpha - m, 2 * m + 1);
    if (which == DihedralKind::qhat || which == DihedralKind::legendre_P) {
        if (!(v > 0))
            throw DomainError("xi must be positive");
        double ct = 1 / std::tanh(v);
        auto Cf = [&](double a) { return std::exp(-a * v) * jacobi_P(m, a, -a, ct); };
        double sh = 1 / std::sqrt(std::sinh(v));
        if (which == DihedralKind::qhat) {
            double br = sign == Sign::plus ? 1.0 : 1 / poch;
            return std::sqrt(pi / 2) * mf * br * sh * Cf(alpha);
        }
        double part = sign == Sign::plus ? (Cf(alpha) + Cf(-alpha)) / 2 : (Cf(alpha) - Cf(-alpha)) / 2;
        double br = sign == Sign::plus ? detail::sgn(m) : detail::sgn(m + 1) / poch;
        return std::sqrt(2 / pi) * mf * br * sh * part;
    }
    if (!(v > 0 && v < pi))
        throw DomainError("theta must lie in (0, pi)");
    C ict(0, 1 / std::tan(v));
    auto Cf = [&](double a) { return std::exp(C(0, a * v)) * jacobi_P<C>(m, a, -a, ict); };
    auto ipow = [](int k) {
        static const C u[4] = {C(1, 0), C(0, 1), C(-1, 0), C(0, -1)};
        return u[((k % 4) + 4) % 4];
    };
    double sh = 1 / std::sqrt(std::sin(v));
    bool even;
    C br;
    double scale;
    if (which == DihedralKind::ferrers_P) {
        even = sign == Sign::plus;
        br = sign == Sign::plus ? ipow(m) : ipow(-m - 1) / poch;
        scale = std::sqrt(2 / pi);
    }
    else {
        even = sign == Sign::minus;
        br = sign == Sign::plus ? ipow(m + 1) : ipow(-m) / poch;
        scale = std::sqrt(pi / 2);
    }
    C part = even ? (Cf(alpha) + Cf(-alpha)) / 2.0 : (Cf(alpha) - Cf(-alpha)) / 2.0;
    C val = scale * mf * br * sh * part;
    if (std::abs(val.imag()) > 1e-12 * std::max(1.0, std::abs(val)))
        throw ConsistencyError("dihedral assembly left an imaginary residue");
    return val.real();
}

} // namespace algleg

#endif
