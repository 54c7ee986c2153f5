#include <algleg/expansions.hpp>
#include <algleg/families.hpp>
#include <algleg/ladders.hpp>
#include <algleg/lie_rep.hpp>
#include <algleg/octahedral.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iterator>
#include <random>
#include <string>

using namespace algleg;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

Outcome exact_seeds()
{
    if (generate({0, 0}).numer() != Poly{1} || generate({0, 1}).numer() != Poly{1, -26, -39} ||
        generate({1, 1}).numer() != Poly{1, 175, -150, 3550, 325, 195})
        return {false, "seed polynomials differ"};
    for (int n = -3; n <= 3; ++n)
        for (int m = -3; m <= 3; ++m)
            generate({n, m}).check_structure();
    for (int n = 0; n <= 6; ++n)
        for (int m = 0; m <= 6; ++m) {
            mpz_class e;
            mpz_pow_ui(e.get_mpz_t(), mpz_class(-64).get_mpz_t(), m + n);
            if (generate({n, m})(Rational(1)) != Rational(e))
                return {false, "r(1) at " + std::to_string(n) + "," + std::to_string(m)};
        }
    return {true, "49 structures, 49 values at 1"};
}

Outcome route_equivalence()
{
    int checked = 0;
    for (int n = 0; n <= 3; ++n) {
        if (coeffs_via_recurrence({n, 0}, true) != generate({n, 0}).numer().coeffs())
            return {false, "heun route at n=" + std::to_string(n)};
        for (int m = 0; m <= 3; ++m, ++checked)
            if (coeffs_via_recurrence({n, m}) != generate({n, m}).numer().coeffs())
                return {false, "coefficient route"};
    }
    for (int m = -3; m <= 3; ++m, ++checked)
        if (!(hypergeometric_row(m) == generate({0, m})))
            return {false, "hypergeometric row " + std::to_string(m)};
    for (int n = -2; n <= 2; ++n)
        for (int m = -2; m <= 2; ++m)
            for (auto [dn, dm] : diff_rows()) {
                ++checked;
                if (!(apply_diff_recurrence({n, m}, dn, dm) == generate({n + dn, m + dm})))
                    return {false, "differential route"};
            }
    const auto& p = invariant_polys();
    auto rf = [](int n, int m) { return generate({n, m}).rational_function(); };
    auto c = [](long v) { return RationalFunction(Rational(v)); };
    for (int n = -2; n <= 2; ++n)
        for (int m = -2; m <= 2; ++m, ++checked) {
            RationalFunction mres = c((4 * m - 3) * (4 * m + 1)) * rf(n, m + 1) -
                                    c((4 * m - 3) * (4 * m + 1)) * RationalFunction(p.pe) * rf(n, m) -
                                    c(3 * (12 * m - 12 * n - 7) * (12 * m + 12 * n + 1)) * RationalFunction(p.pv) *
                                        rf(n, m - 1);
            RationalFunction nres = c(12 * n - 12 * m + 7) * rf(n + 1, m) -
                                    c(8 * (3 * n + 1)) * RationalFunction(p.pe) * rf(n, m) +
                                    c(12 * n + 12 * m + 1) * RationalFunction(p.pf.pow(3)) * rf(n - 1, m);
            if (!mres.is_zero() || !nres.is_zero())
                return {false, "three-term residual"};
        }
    return {true, std::to_string(checked) + " exact comparisons"};
}

Outcome closed_forms()
{
    int checked = 0;
    double worst = 0;
    auto note = [&](double got, double want) {
        ++checked;
        double scale = std::abs(want) > 1e-6 ? std::abs(want) : 1e-6;
        worst = std::max(worst, std::abs(got - want) / scale);
    };
    for (int n = -2; n <= 2; ++n)
        for (int m = -2; m <= 2; ++m)
            for (Sign s : {Sign::plus, Sign::minus}) {
                double mu = (s == Sign::plus ? 1 : -1) * (0.25 + m);
                for (double xi : {0.3, 0.9})
                    note(oct_legendre_P(n, m, xi, s), legendre_P(-1.0 / 6 + n, mu, std::cosh(xi)));
                for (double t : {0.4, 1.4})
                    note(oct_ferrers_P(n, m, t, s), ferrers_P_theta(-1.0 / 6 + n, mu, t));
                for (double xi : {-0.3, 1.0}) {
                    double tmu = (s == Sign::plus ? 1 : -1) * (1.0 / 3 + n);
                    note(tetra2_P_ferrers(n, m, xi, s), ferrers_P(-0.75 - m, tmu, std::tanh(xi)));
                }
            }
    for (int n = -2; n <= 2; ++n)
        for (Sign s : {Sign::plus, Sign::minus}) {
            double nu = s == Sign::minus ? -1.0 / 6 + n : -5.0 / 6 - n;
            double mu = s == Sign::minus ? -1.0 / 3 - n : 1.0 / 3 + n;
            note(tetra3_eval(n, 0.6, Tetra3Kind::ferrers_P, s), ferrers_P(nu, mu, std::sqrt(-std::expm1(-1.2))));
            note(tetra3_eval(n, 0.4, Tetra3Kind::legendre_P, s), legendre_P(nu, mu, std::sqrt(1 + std::exp(-0.8))));
        }
    for (int n = 0; n <= 3; ++n)
        for (double mu : {0.25, -0.4, 1.3}) {
            note(cyclic_P(n, mu, 0.8, Kind::legendre_P), legendre_P(n, mu, std::cosh(0.8)));
            note(cyclic_P(n, mu, 0.9, Kind::ferrers_P), ferrers_P_theta(n, mu, 0.9));
        }
    for (int m = 0; m <= 3; ++m)
        for (double a : {0.3, 1.6})
            for (Sign s : {Sign::plus, Sign::minus}) {
                double mu = (s == Sign::plus ? 1 : -1) * (0.5 + m);
                note(dihedral_eval(m, a, 0.9, DihedralKind::qhat, s), legendre_Qhat(-0.5 + a, mu, std::cosh(0.9)));
                note(dihedral_eval(m, a, 0.9, DihedralKind::legendre_P, s), legendre_P(-0.5 + a, mu, std::cosh(0.9)));
            }
    char buf[96];
    std::snprintf(buf, sizeof buf, "%d points, worst rel %.2e", checked, worst);
    return {worst <= 1e-9, buf};
}

Outcome mehler()
{
    double worst = 0;
    for (auto [n, m] : {std::pair{0, 0}, {1, 0}, {0, 1}, {-1, 1}})
        for (auto [v, k] : {std::pair{1.2, Variable::circular}, {0.9, Variable::hyperbolic}})
            worst = std::max(worst, std::abs(mehler_integral(n, m, v, k) - mehler_quadrature(n, m, v, k).value));
    char buf[64];
    std::snprintf(buf, sizeof buf, "worst abs %.2e", worst);
    return {worst <= 1e-6, buf};
}

Outcome gamma_identities()
{
    auto g = vidunas_expressions();
    double worst = 0;
    for (double v : g.plus)
        worst = std::max(worst, std::abs(v - std::sqrt(std::sqrt(3.0) + 1)));
    for (double v : g.minus)
        worst = std::max(worst, std::abs(v - std::sqrt(std::sqrt(3.0) - 1)));
    char buf[64];
    std::snprintf(buf, sizeof buf, "%zu expressions, worst %.2e", std::size(g.plus) + std::size(g.minus), worst);
    return {worst <= 1e-12, buf};
}

Outcome ladder_identities()
{
    std::mt19937 gen(2024);
    std::uniform_real_distribution<double> nu(-1.3, 1.3), mu(-0.9, 0.9), th(0.3, 2.8), xi(0.3, 1.8);
    double worst3 = 0, worstd = 0;
    for (int i = 0; i < 20; ++i) {
        double n = nu(gen), m = mu(gen), t = th(gen), x = xi(gen);
        for (auto w : {ThreeTerm::order, ThreeTerm::degree, ThreeTerm::diag_plus, ThreeTerm::diag_minus}) {
            worst3 = std::max(worst3, three_term_check(Kind::ferrers_P, n, m, std::cos(t), w));
            worst3 = std::max(worst3, three_term_check(Kind::ferrers_Q, n, m, std::cos(t), w));
            worst3 = std::max(worst3, three_term_check(Kind::legendre_P, n, m, std::cosh(x), w));
            worst3 = std::max(worst3, three_term_check(Kind::legendre_Qhat, n, m, std::cosh(x), w));
        }
        for (const auto& st : ladder_steps()) {
            worstd = std::max(worstd, diff_recurrence_check(Kind::ferrers_P, n, m, t, st));
            worstd = std::max(worstd, diff_recurrence_check(Kind::ferrers_Q, n, m, t, st));
            worstd = std::max(worstd, diff_recurrence_check(Kind::legendre_P, n, m, x, st));
            worstd = std::max(worstd, diff_recurrence_check(Kind::legendre_Qhat, n, m, x, st));
        }
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "three-term %.2e, differential %.2e", worst3, worstd);
    return {worst3 <= 1e-8 && worstd <= 1e-6, buf};
}

Outcome lie_structure()
{
    const std::pair<double, double> offsets[] = {
        {0, 0}, {-1.0 / 6, 0.25}, {-0.75, -1.0 / 3}, {0.1, 0.5 + std::sqrt(2.0) - 1}};
    double structure = 0, c2dev = 0, wnorm = 0;
    for (auto [nu0, mu0] : offsets) {
        Window w{nu0, mu0, -5, 5, -5, 5, 4};
        for (auto f : {RealForm::so32A, RealForm::so41, RealForm::so32B, RealForm::so5R}) {
            auto t = build_real_form(w, f);
            structure = std::max(structure, check_structure(t));
            for (cplx d : interior_diagonal(casimir2(t)))
                c2dev = std::max(c2dev, std::abs(d - cplx(-1.25)));
            for (const auto& wa : w_components(t))
                wnorm = std::max(wnorm, interior_norm(wa));
        }
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "structure %.2e, c2 %.2e, w %.2e", structure, c2dev, wnorm);
    return {structure <= 1e-10 && c2dev <= 1e-10 && wnorm <= 1e-10, buf};
}

Outcome singletons()
{
    for (auto [nu0, mu0] : {std::pair{0.0, 0.0}, std::pair{0.5, 0.5}}) {
        auto r = singleton_check(nu0, mu0);
        if (!r.invariant || !r.skew_hermitian || !r.real_transposed || r.dimension <= 0)
            return {false, "singleton at " + std::to_string(nu0)};
    }
    auto g = singleton_check(-1.0 / 6, 0.25);
    if (g.skew_hermitian || g.invariant)
        return {false, "generic offset reported as unitary"};
    return {true, "Rac and Di unitary, generic offset flagged"};
}

Outcome biorthogonality()
{
    double worst = 0;
    for (auto [nu, mu] : {std::pair{-1.0 / 6, 0.25}, {-0.75, 1.0 / 3}, {0.3, -0.45}})
        for (int gap : {-2, 2, 4})
            worst = std::max(worst, std::abs(love_hunter_inner(nu, nu + gap, mu).value) /
                                        love_hunter_scale(nu, nu + gap, mu));
    for (int m : {0, -1})
        for (int n = -2; n <= 2; ++n)
            for (int np = -2; np <= 2; ++np)
                if (n != np && (n - np) % 2 == 0)
                    worst = std::max(worst, std::abs(octahedral_biorthog(n, np, m).value) /
                                                octahedral_biorthog_scale(n, np, m));
    ExpansionSpec spec{-1.0 / 6, 0.25, 2, [](double z) { return ferrers_P(-1.0 / 6, 0.25, z); }};
    auto c = lh_coefficients(spec);
    double self = 0;
    for (int n = -2; n <= 2; ++n)
        self = std::max(self, std::abs(c[n + 2] - (n == 0 ? 1.0 : 0.0)));
    char buf[96];
    std::snprintf(buf, sizeof buf, "worst relative inner %.2e, self-expansion %.2e", worst, self);
    return {worst <= 1e-8 && self <= 1e-7, buf};
}

Outcome w_expansions()
{
    auto f = [](double z) { return std::abs(z); };
    double prev = HUGE_VAL;
    std::string errs;
    for (int N : {16, 32, 64, 128}) {
        auto e = w_expansion(f, N, {0.0});
        double err = 0;
        for (double z : {-1.0, -0.5, 0.3, 1.0})
            err = std::max(err, std::abs(e(z) - f(z)));
        if (err >= prev)
            return {false, "|z| error not decreasing at N=" + std::to_string(N)};
        prev = err;
    }
    auto s = w_expansion([](double z) { return z > 0 ? 1.0 : 0.0; }, 128, {0.0});
    double mid = s(0.0);
    char buf[96];
    std::snprintf(buf, sizeof buf, "|z| error %.2e at N=128, step midpoint %.4f", prev, mid);
    return {std::abs(mid - 0.5) <= 0.05, buf};
}

} // namespace

int main()
{
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {"exact seeds and structure", exact_seeds},
        {"route equivalence", route_equivalence},
        {"closed forms against oracle", closed_forms},
        {"mehler integrals", mehler},
        {"gamma identities", gamma_identities},
        {"ladder identities", ladder_identities},
        {"lie structure and casimirs", lie_structure},
        {"singleton unitarity", singletons},
        {"biorthogonality", biorthogonality},
        {"w-expansion convergence", w_expansions},
    };
    int failed = 0, k = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        }
        catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s %2d %-30s %9.1f ms  %s\n", o.pass ? "PASS" : "FAIL", ++k, c.name, ms, o.detail.c_str());
        failed += !o.pass;
    }
    return failed ? 1 : 0;
}
