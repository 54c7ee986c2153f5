#ifndef ALGLEG_LIE_REP_HPP
#define ALGLEG_LIE_REP_HPP

#include "oracle.hpp"

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

namespace algleg {

using cplx = std::complex<double>;

// Finite piece of the lattice (nu0, mu0) + Z^2, n in [n_lo, n_hi], m in [m_lo, m_hi]
struct Window {
    double nu0 = 0, mu0 = 0;
    int n_lo = -4, n_hi = 4, m_lo = -4, m_hi = 4;
    int margin = 2;

    int width() const { return m_hi - m_lo + 1; }
    int size() const { return (n_hi - n_lo + 1) * width(); }
    bool contains(int n, int m) const { return n >= n_lo && n <= n_hi && m >= m_lo && m <= m_hi; }
    int index(int n, int m) const { return (n - n_lo) * width() + (m - m_lo); }
    int n_of(int i) const { return n_lo + i / width(); }
    int m_of(int i) const { return m_lo + i % width(); }
    double nu(int i) const { return nu0 + n_of(i); }
    double mu(int i) const { return mu0 + m_of(i); }
    // distance from index i to the window edge
    int depth(int i) const
    {
        return std::min({n_of(i) - n_lo, n_hi - n_of(i), m_of(i) - m_lo, m_hi - m_of(i)});
    }
    bool operator==(const Window& o) const
    {
        return nu0 == o.nu0 && mu0 == o.mu0 && n_lo == o.n_lo && n_hi == o.n_hi && m_lo == o.m_lo &&
               m_hi == o.m_hi;
    }
};

// Column j holds the image of the basis element j; reach is the largest lattice displacement a product
// can take before its columns stop being exact.
struct OpMatrix {
    Window w;
    Eigen::MatrixXcd a;
    std::string label;
    int reach = 1;

    static OpMatrix zero(const Window& w, std::string label = "0")
    {
        return {w, Eigen::MatrixXcd::Zero(w.size(), w.size()), std::move(label), 0};
    }
    cplx at(int n, int m, int n2, int m2) const { return a(w.index(n, m), w.index(n2, m2)); }
};

inline void check_same(const OpMatrix& x, const OpMatrix& y)
{
    if (!(x.w == y.w))
        throw DomainError("operator windows differ");
}

inline OpMatrix operator+(const OpMatrix& x, const OpMatrix& y)
{
    check_same(x, y);
    return {x.w, x.a + y.a, "(" + x.label + "+" + y.label + ")", std::max(x.reach, y.reach)};
}

inline OpMatrix operator-(const OpMatrix& x, const OpMatrix& y)
{
    check_same(x, y);
    return {x.w, x.a - y.a, "(" + x.label + "-" + y.label + ")", std::max(x.reach, y.reach)};
}

inline OpMatrix operator-(const OpMatrix& x)
{
    return {x.w, -x.a, "-" + x.label, x.reach};
}

inline OpMatrix operator*(cplx c, const OpMatrix& x)
{
    return {x.w, c * x.a, x.label, x.reach};
}

inline OpMatrix operator*(const OpMatrix& x, const OpMatrix& y)
{
    check_same(x, y);
    return {x.w, x.a * y.a, x.label + y.label, x.reach + y.reach};
}

inline OpMatrix commutator(const OpMatrix& x, const OpMatrix& y)
{
    OpMatrix r = x * y - y * x;
    r.label = "[" + x.label + "," + y.label + "]";
    return r;
}

inline OpMatrix anticommutator(const OpMatrix& x, const OpMatrix& y)
{
    OpMatrix r = x * y + y * x;
    r.label = "{" + x.label + "," + y.label + "}";
    return r;
}

// Max |entry| over columns at least `reach` away from the window edge
inline double interior_norm(const OpMatrix& x)
{
    if (x.w.margin < x.reach)
        throw DomainError("window margin smaller than the operator reach");
    double r = 0;
    for (int j = 0; j < x.w.size(); ++j)
        if (x.w.depth(j) >= x.w.margin)
            r = std::max(r, x.a.col(j).cwiseAbs().maxCoeff());
    return r;
}

inline double interior_distance(const OpMatrix& x, const OpMatrix& y)
{
    return interior_norm(x - y);
}

struct Root {
    int dn, dm;
};

struct Ladders {
    OpMatrix Jp, Jm, Kp, Km, Rp, Rm, Sp, Sm, J3, K3;

    std::array<std::pair<const OpMatrix*, Root>, 8> roots() const
    {
        return {{{&Jp, {0, 1}},
                 {&Jm, {0, -1}},
                 {&Kp, {1, 0}},
                 {&Km, {-1, 0}},
                 {&Rp, {1, 1}},
                 {&Rm, {-1, -1}},
                 {&Sp, {1, -1}},
                 {&Sm, {-1, 1}}}};
    }
};

namespace detail {

inline cplx twisted_root(double x)
{
    return std::sqrt(cplx(x, 0.0));
}

// Coefficient of S_{nu+dn}^{mu+dm} in X S_nu^mu
inline cplx ladder_coef(Root r, double nu, double mu, bool twisted)
{
    if (!twisted) {
        if (r.dn == 0)
            return r.dm > 0 ? 1 : (nu + mu) * (nu - mu + 1);
        if (r.dm == 0)
            return r.dn > 0 ? nu - mu + 1 : nu + mu;
        if (r.dn == r.dm)
            return r.dn > 0 ? 1 : (nu + mu) * (nu + mu - 1);
        return r.dn > 0 ? (nu - mu + 1) * (nu - mu + 2) : 1;
    }
    double s = r.dn != 0 ? r.dn : r.dm;
    if (r.dn == 0)
        return twisted_root((nu - mu + 0.5 - s / 2) * (nu + mu + 0.5 + s / 2));
    if (r.dm == 0)
        return twisted_root((nu - mu + 0.5 + s / 2) * (nu + mu + 0.5 + s / 2));
    if (r.dn == r.dm)
        return twisted_root((nu + mu + 0.5 + s / 2) * (nu + mu + 0.5 + 1.5 * s));
    return twisted_root((nu - mu + 0.5 + s / 2) * (nu - mu + 0.5 + 1.5 * s));
}

inline OpMatrix shift_op(const Window& w, Root r, bool twisted, std::string label)
{
    OpMatrix x = OpMatrix::zero(w, std::move(label));
    x.reach = 1;
    for (int j = 0; j < w.size(); ++j) {
        int n = w.n_of(j) + r.dn, m = w.m_of(j) + r.dm;
        if (w.contains(n, m))
            x.a(w.index(n, m), j) = ladder_coef(r, w.nu(j), w.mu(j), twisted);
    }
    return x;
}

inline OpMatrix diag_op(const Window& w, double (*f)(double, double), std::string label)
{
    OpMatrix x = OpMatrix::zero(w, std::move(label));
    x.reach = 1;
    for (int j = 0; j < w.size(); ++j)
        x.a(j, j) = f(w.nu(j), w.mu(j));
    return x;
}

} // namespace detail

// Matrices of the ten ladder and labeling operators on the window; twisted uses the square-root normalization
inline Ladders build_ladders(const Window& w, bool twisted = false)
{
    using detail::shift_op;
    return {shift_op(w, {0, 1}, twisted, "J+"),
            shift_op(w, {0, -1}, twisted, "J-"),
            shift_op(w, {1, 0}, twisted, "K+"),
            shift_op(w, {-1, 0}, twisted, "K-"),
            shift_op(w, {1, 1}, twisted, "R+"),
            shift_op(w, {-1, -1}, twisted, "R-"),
            shift_op(w, {1, -1}, twisted, "S+"),
            shift_op(w, {-1, 1}, twisted, "S-"),
            detail::diag_op(w, [](double, double mu) { return mu; }, "J3"),
            detail::diag_op(w, [](double nu, double) { return nu + 0.5; }, "K3")};
}

// J_i, PC^+_i, PC^-_i in the Cartesian basis and D = K3
struct Cartesian {
    std::array<OpMatrix, 3> J, PCp, PCm;
    OpMatrix D;
};

inline Cartesian cartesian(const Ladders& L)
{
    const cplx I(0, 1);
    auto pc = [&](double s) -> std::array<OpMatrix, 3> {
        OpMatrix p1 = 0.25 * (-s * L.Rp - L.Rm + s * L.Sp + L.Sm);
        OpMatrix p2 = (-0.25 * I) * (-s * L.Rp + L.Rm - s * L.Sp + L.Sm);
        OpMatrix p3 = 0.5 * (s * L.Kp + L.Km);
        return {p1, p2, p3};
    };
    Cartesian c{{0.5 * (L.Jp + L.Jm), (-0.5 * I) * (L.Jp - L.Jm), L.J3}, pc(1), pc(-1), L.K3};
    const char* names[] = {"1", "2", "3"};
    for (int i = 0; i < 3; ++i) {
        c.J[i].label = std::string("J") + names[i];
        c.PCp[i].label = std::string("PC+") + names[i];
        c.PCm[i].label = std::string("PC-") + names[i];
    }
    c.D.label = "D";
    return c;
}

// Skew-Cartesian elements: the second component is multiplied by i
inline Cartesian skew_cartesian(const Cartesian& c)
{
    const cplx I(0, 1);
    Cartesian s = c;
    s.J[1] = I * c.J[1];
    s.PCp[1] = I * c.PCp[1];
    s.PCm[1] = I * c.PCm[1];
    return s;
}

enum class RealForm { so32A, so41, so32B, so5R };

struct TensorOperator {
    std::array<std::array<OpMatrix, 5>, 5> M;
    std::array<double, 5> g;
};

inline TensorOperator build_real_form(const Window& w, RealForm form, bool twisted = false)
{
    const cplx I(0, 1);
    Ladders L = build_ladders(w, twisted);
    Cartesian c = cartesian(L);
    OpMatrix Z = OpMatrix::zero(w);
    TensorOperator t{{{{Z, Z, Z, Z, Z}, {Z, Z, Z, Z, Z}, {Z, Z, Z, Z, Z}, {Z, Z, Z, Z, Z}, {Z, Z, Z, Z, Z}}}, {}};
    auto set = [&](int a, int b, const OpMatrix& x) {
        t.M[a][b] = x;
        t.M[b][a] = -x;
    };
    const auto &J = c.J, &Pp = c.PCp, &Pm = c.PCm;
    const OpMatrix& D = c.D;
    switch (form) {
    case RealForm::so32A: {
        Cartesian s = skew_cartesian(c);
        set(0, 1, s.PCm[1]);
        set(0, 2, -s.PCm[0]);
        set(0, 3, -s.PCm[2]);
        set(0, 4, -D);
        set(1, 2, s.J[2]);
        set(1, 3, -s.J[0]);
        set(1, 4, s.PCp[1]);
        set(2, 3, s.J[1]);
        set(2, 4, -s.PCp[0]);
        set(3, 4, -s.PCp[2]);
        t.g = {1, 1, -1, -1, -1};
        break;
    }
    case RealForm::so41:
    case RealForm::so32B:
    case RealForm::so5R: {
        cplx first = form == RealForm::so5R ? I : cplx(1);
        cplx plus = form == RealForm::so32B ? I : cplx(1);
        cplx d = form == RealForm::so41 ? cplx(1) : I;
        for (int i = 0; i < 3; ++i) {
            set(0, i + 1, -first * Pm[i]);
            set(i + 1, 4, -plus * Pp[i]);
        }
        set(0, 4, -d * D);
        set(1, 2, -I * J[2]);
        set(1, 3, I * J[1]);
        set(2, 3, -I * J[0]);
        if (form == RealForm::so41)
            t.g = {1, -1, -1, -1, -1};
        else if (form == RealForm::so32B)
            t.g = {1, -1, -1, -1, 1};
        else
            t.g = {-1, -1, -1, -1, -1};
        break;
    }
    }
    return t;
}

// Max over a<b, c<d of the interior defect of [M_ab, M_cd] = g_ad M_bc + g_bc M_ad - g_ac M_bd - g_bd M_ac
inline double check_structure(const TensorOperator& t)
{
    const auto& M = t.M;
    auto g = [&](int a, int b) { return a == b ? t.g[a] : 0.0; };
    double worst = 0;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            for (int c = 0; c < 5; ++c)
                for (int d = c + 1; d < 5; ++d) {
                    OpMatrix rhs = g(a, d) * M[b][c] + g(b, c) * M[a][d] - g(a, c) * M[b][d] - g(b, d) * M[a][c];
                    OpMatrix lhs = commutator(M[a][b], M[c][d]);
                    rhs.reach = lhs.reach;
                    worst = std::max(worst, interior_distance(lhs, rhs));
                }
    return worst;
}

// c2 = -1/2 M_ab M^ab
inline OpMatrix casimir2(const TensorOperator& t)
{
    OpMatrix r = OpMatrix::zero(t.M[0][0].w, "c2");
    r.reach = 2;
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            if (a != b)
                r = r + (-0.5 * t.g[a] * t.g[b]) * (t.M[a][b] * t.M[a][b]);
    r.label = "c2";
    return r;
}

// c2 assembled from the labeling operators and anticommutators of root vectors
inline OpMatrix casimir2_ladder(const Ladders& L)
{
    OpMatrix r = L.J3 * L.J3 + L.K3 * L.K3 + 0.5 * anticommutator(L.Jp, L.Jm) - 0.5 * anticommutator(L.Kp, L.Km) -
                 0.25 * anticommutator(L.Rp, L.Rm) - 0.25 * anticommutator(L.Sp, L.Sm);
    r.label = "c2";
    return r;
}

namespace detail {

inline int levi_civita(const std::array<int, 5>& p)
{
    int s = 1;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            if (p[i] == p[j])
                return 0;
            if (p[i] > p[j])
                s = -s;
        }
    return s;
}

} // namespace detail

// w^a = 1/8 eps^{abcde} M_bc M_de with indices raised by the metric
inline std::array<OpMatrix, 5> w_components(const TensorOperator& t)
{
    const Window& w = t.M[0][0].w;
    std::array<OpMatrix, 5> out{OpMatrix::zero(w), OpMatrix::zero(w), OpMatrix::zero(w), OpMatrix::zero(w),
                                OpMatrix::zero(w)};
    for (int a = 0; a < 5; ++a) {
        OpMatrix acc = OpMatrix::zero(w);
        acc.reach = 2;
        for (int b = 0; b < 5; ++b)
            for (int c = 0; c < 5; ++c)
                for (int d = 0; d < 5; ++d)
                    for (int e = 0; e < 5; ++e) {
                        int eps = detail::levi_civita({a, b, c, d, e});
                        if (eps == 0)
                            continue;
                        double raise = t.g[a] * t.g[b] * t.g[c] * t.g[d] * t.g[e];
                        acc.a.noalias() += (eps * raise / 8.0) * (t.M[b][c].a * t.M[d][e].a);
                    }
        acc.label = "w" + std::to_string(a + 1);
        out[a] = acc;
    }
    return out;
}

// c4 = -w_a w^a
inline OpMatrix casimir4(const TensorOperator& t)
{
    auto w = w_components(t);
    OpMatrix r = OpMatrix::zero(w[0].w, "c4");
    r.reach = 4;
    for (int a = 0; a < 5; ++a)
        r = r + (-t.g[a]) * (w[a] * w[a]);
    r.label = "c4";
    return r;
}

// Interior diagonal entries of a matrix
inline std::vector<cplx> interior_diagonal(const OpMatrix& x)
{
    std::vector<cplx> d;
    for (int j = 0; j < x.w.size(); ++j)
        if (x.w.depth(j) >= x.w.margin)
            d.push_back(x.a(j, j));
    return d;
}

struct SingletonReport {
    bool invariant;        // the triangle |mu| <= nu, n >= 0 is preserved by every ladder
    bool skew_hermitian;   // every so(3,2) basis element is skew-Hermitian there
    double max_defect;     // max |X_ij + conj(X_ji)| over interior triangle indices
    double full_defect;    // the same over all interior window indices
    bool real_transposed;  // plus and minus ladders are real and mutually transposed
    int dimension;         // number of interior triangle states
};

// Twisted representation restricted to the triangle nu = nu0 + n, 0 <= n <= N, |mu| <= nu
inline SingletonReport singleton_check(double nu0, double mu0, int N = 8, double tol = 1e-12)
{
    Window w;
    w.nu0 = nu0;
    w.mu0 = mu0;
    w.n_lo = 0;
    w.n_hi = N;
    w.m_lo = static_cast<int>(std::floor(-nu0 - N - mu0)) - 1;
    w.m_hi = static_cast<int>(std::ceil(nu0 + N - mu0)) + 1;
    w.margin = 1;
    auto in_tri = [&](int i) { return std::abs(w.mu(i)) <= w.nu(i) + 1e-12; };
    auto inner = [&](int i) { return in_tri(i) && w.n_of(i) < N; };
    Ladders L = build_ladders(w, true);
    SingletonReport rep{true, true, 0, 0, true, 0};
    for (int j = 0; j < w.size(); ++j)
        if (inner(j))
            ++rep.dimension;
    for (auto [x, r] : L.roots())
        for (int j = 0; j < w.size(); ++j)
            if (inner(j))
                for (int i = 0; i < w.size(); ++i)
                    if (!in_tri(i) && std::abs(x->a(i, j)) > tol)
                        rep.invariant = false;
    std::array<std::pair<const OpMatrix*, const OpMatrix*>, 4> pairs{
        {{&L.Jp, &L.Jm}, {&L.Kp, &L.Km}, {&L.Rp, &L.Rm}, {&L.Sp, &L.Sm}}};
    for (auto [p, m] : pairs)
        for (int i = 0; i < w.size(); ++i)
            for (int j = 0; j < w.size(); ++j)
                if (inner(i) && inner(j)) {
                    if (std::abs(p->a(i, j).imag()) > tol || std::abs(m->a(i, j).imag()) > tol ||
                        std::abs(p->a(i, j) - m->a(j, i)) > tol)
                        rep.real_transposed = false;
                }
    const cplx I(0, 1);
    Cartesian c = cartesian(L);
    std::vector<OpMatrix> basis;
    for (int k = 0; k < 3; ++k) {
        basis.push_back(I * c.J[k]);
        basis.push_back(I * c.PCp[k]);
        basis.push_back(c.PCm[k]);
    }
    basis.push_back(I * c.D);
    for (const auto& x : basis)
        for (int i = 0; i < w.size(); ++i)
            for (int j = 0; j < w.size(); ++j)
                if (w.n_of(i) < N && w.n_of(j) < N && w.depth(i) >= 1 && w.depth(j) >= 1) {
                    double d = std::abs(x.a(i, j) + std::conj(x.a(j, i)));
                    rep.full_defect = std::max(rep.full_defect, d);
                    if (inner(i) && inner(j))
                        rep.max_defect = std::max(rep.max_defect, d);
                }
    rep.skew_hermitian = rep.invariant && rep.max_defect <= tol;
    return rep;
}

// r^nu P_nu^mu(cos theta) e^{i mu phi} at a Cartesian point
inline cplx solid_harmonic(double nu, double mu, const std::array<double, 3>& x)
{
    double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
    double phi = std::atan2(x[1], x[0]);
    return std::pow(r, nu) * ferrers_P(nu, mu, x[2] / r) * std::exp(cplx(0, mu * phi));
}

struct ConformalResidual {
    std::array<double, 10> ops;  // iJ1..3, P1..3, C1..3, D
    double laplacian;
};

// Differential forms of the conformal operators, by central differences, against the matrix action
inline ConformalResidual conformal_ops_check(double nu, double mu, const std::array<double, 3>& x, double h = 1e-4)
{
    double rho = std::hypot(x[0], x[1]);
    double r = std::hypot(rho, x[2]);
    if (r < 1e-6 || rho < 1e-6 * r || (x[0] < 0 && std::abs(x[1]) < 1e-6 * r))
        throw DomainError("point too close to a coordinate singularity");
    auto f = [&](double n, double m, std::array<double, 3> p) { return solid_harmonic(n, m, p); };
    auto shifted = [&](int i, double d) {
        auto p = x;
        p[i] += d;
        return p;
    };
    cplx f0 = f(nu, mu, x);
    std::array<cplx, 3> g;
    cplx lap = 0;
    double hl = 1e-3;
    for (int i = 0; i < 3; ++i) {
        g[i] = (f(nu, mu, shifted(i, h)) - f(nu, mu, shifted(i, -h))) / (2 * h);
        lap += (f(nu, mu, shifted(i, hl)) - 2.0 * f0 + f(nu, mu, shifted(i, -hl))) / (hl * hl);
    }
    double xx = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
    cplx xg = x[0] * g[0] + x[1] * g[1] + x[2] * g[2];
    std::array<cplx, 10> diff;
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        diff[i] = x[j] * g[k] - x[k] * g[j];
        diff[3 + i] = g[i];
        diff[6 + i] = x[i] * f0 - xx * g[i] + 2 * x[i] * xg;
    }
    diff[9] = xg + 0.5 * f0;

    Window w{nu, mu, -2, 2, -2, 2, 1};
    Cartesian c = cartesian(build_ladders(w));
    const cplx I(0, 1);
    std::array<OpMatrix, 10> mats{I * c.J[0],          I * c.J[1],          I * c.J[2],         c.PCp[0] + c.PCm[0],
                                  c.PCp[1] + c.PCm[1], c.PCp[2] + c.PCm[2], c.PCp[0] - c.PCm[0], c.PCp[1] - c.PCm[1],
                                  c.PCp[2] - c.PCm[2], c.D};
    int j0 = w.index(0, 0);
    ConformalResidual res{};
    for (int q = 0; q < 10; ++q) {
        cplx v = 0;
        for (int i = 0; i < w.size(); ++i)
            if (mats[q].a(i, j0) != cplx(0))
                v += mats[q].a(i, j0) * f(w.nu(i), w.mu(i), x);
        double scale = std::max({std::abs(v), std::abs(diff[q]), std::abs(f0)});
        res.ops[q] = std::abs(v - diff[q]) / scale;
    }
    double gs = std::max({std::abs(g[0]), std::abs(g[1]), std::abs(g[2]), std::abs(f0)});
    res.laplacian = std::abs(lap) / gs;
    return res;
}

} // namespace algleg

#endif
