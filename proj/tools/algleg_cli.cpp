#include <algleg/expansions.hpp>
#include <algleg/lie_rep.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <variant>

using namespace algleg;
using json = nlohmann::ordered_json;

namespace {

enum Exit { ok = 0, usage = 2, domain = 3, config = 4 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt17(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

double parse_number(const std::string& s)
{
    try {
        return parse_rational(s).get_d();
    } catch (const DomainError&) {
        throw;
    } catch (const std::exception&) {
        throw UsageError("not a number: " + s);
    }
}

// "a:b:k" gives k points from a to b inclusive; a single number gives one point
std::vector<double> parse_grid(const std::string& s)
{
    std::vector<std::string> parts;
    std::stringstream ss(s);
    for (std::string p; std::getline(ss, p, ':');)
        parts.push_back(p);
    if (parts.size() == 1)
        return {parse_number(parts[0])};
    if (parts.size() != 3)
        throw UsageError("grid must be a:b:k");
    double a = parse_number(parts[0]), b = parse_number(parts[1]);
    int k = static_cast<int>(parse_number(parts[2]));
    if (k < 1)
        throw UsageError("grid needs at least one point");
    std::vector<double> g;
    for (int i = 0; i < k; ++i)
        g.push_back(k == 1 ? a : a + (b - a) * i / (k - 1));
    return g;
}

std::pair<int, int> parse_range(const std::string& s)
{
    auto c = s.find(':');
    if (c == std::string::npos) {
        int v = static_cast<int>(parse_number(s));
        return {v, v};
    }
    return {static_cast<int>(parse_number(s.substr(0, c))), static_cast<int>(parse_number(s.substr(c + 1)))};
}

// Rows of named cells; a cell is a number, a string or empty
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::optional<std::variant<double, std::string>>>> rows;

    void emit(std::ostream& os, const std::string& format) const
    {
        if (format == "json") {
            json out = json::array();
            for (const auto& r : rows) {
                json o = json::object();
                for (std::size_t i = 0; i < columns.size(); ++i) {
                    if (!r[i])
                        o[columns[i]] = nullptr;
                    else if (auto d = std::get_if<double>(&*r[i]))
                        o[columns[i]] = json::parse(fmt17(*d));
                    else
                        o[columns[i]] = std::get<std::string>(*r[i]);
                }
                out.push_back(o);
            }
            os << out.dump(2) << "\n";
            return;
        }
        for (std::size_t i = 0; i < columns.size(); ++i)
            os << (i ? "," : "") << columns[i];
        os << "\n";
        for (const auto& r : rows) {
            for (std::size_t i = 0; i < columns.size(); ++i) {
                if (i)
                    os << ",";
                if (!r[i])
                    continue;
                if (auto d = std::get_if<double>(&*r[i]))
                    os << fmt17(*d);
                else {
                    const auto& s = std::get<std::string>(*r[i]);
                    os << (s.find_first_of(",\"") == std::string::npos ? s : "\"" + s + "\"");
                }
            }
            os << "\n";
        }
    }
};

void write_output(const std::string& path, const std::function<void(std::ostream&)>& f)
{
    if (path.empty()) {
        f(std::cout);
        return;
    }
    std::ofstream os(path);
    if (!os)
        throw ConfigError("cannot open " + path);
    f(os);
}

Sign parse_sign(const std::string& s)
{
    if (s == "+" || s == "plus")
        return Sign::plus;
    if (s == "-" || s == "minus")
        return Sign::minus;
    throw UsageError("order sign must be + or -");
}

struct EvalOptions {
    std::string family = "octahedral", kind = "ferrers-P", order = "+", row = "first";
    int n = 0, m = 0;
    std::string alpha = "0.5", mu = "0";
    std::string theta, xi;
    std::string format = "csv", out;
};

// Evaluates one point; errors specific to the point become status strings
std::function<double(double)> evaluator(const EvalOptions& o, bool& circular)
{
    Sign s = parse_sign(o.order);
    const std::string& k = o.kind;
    circular = k == "ferrers-P" || k == "ferrers-Q";
    int n = o.n, m = o.m;
    if (o.family == "octahedral") {
        if (k == "ferrers-P")
            return [=](double v) { return oct_ferrers_P(n, m, v, s); };
        if (k == "legendre-P")
            return [=](double v) { return oct_legendre_P(n, m, v, s); };
    } else if (o.family == "tetrahedral2") {
        circular = false;
        if (k == "ferrers-P")
            return [=](double v) { return tetra2_P_ferrers(n, m, v, s); };
        if (k == "legendre-P")
            return [=](double v) { return tetra2_P_legendre(n, m, v, s); };
        if (k == "legendre-Qhat") {
            if (o.row != "first" && o.row != "second")
                throw UsageError("row must be first or second");
            TetraRow r = o.row == "first" ? TetraRow::first : TetraRow::second;
            return [=](double v) { return tetra2_Qhat(n, m, v, r); };
        }
    } else if (o.family == "tetrahedral3") {
        circular = false;
        if (k == "ferrers-P")
            return [=](double v) { return tetra3_eval(n, v, Tetra3Kind::ferrers_P, s); };
        if (k == "legendre-P")
            return [=](double v) { return tetra3_eval(n, v, Tetra3Kind::legendre_P, s); };
        if (k == "legendre-Qhat")
            return [=](double v) { return tetra3_eval(n, v, Tetra3Kind::qhat, s); };
    } else if (o.family == "cyclic") {
        double mu = parse_number(o.mu);
        if (k == "ferrers-P")
            return [=](double v) { return cyclic_P(n, mu, v, Kind::ferrers_P); };
        if (k == "legendre-P")
            return [=](double v) { return cyclic_P(n, mu, v, Kind::legendre_P); };
    } else if (o.family == "dihedral") {
        double alpha = parse_number(o.alpha);
        if (m < 0)
            throw DomainError("dihedral m must be non-negative");
        DihedralKind dk;
        if (k == "ferrers-P")
            dk = DihedralKind::ferrers_P;
        else if (k == "ferrers-Q")
            dk = DihedralKind::ferrers_Q;
        else if (k == "legendre-P")
            dk = DihedralKind::legendre_P;
        else if (k == "legendre-Qhat")
            dk = DihedralKind::qhat;
        else
            throw UsageError("unknown kind " + k + " for dihedral");
        return [=](double v) { return dihedral_eval(m, alpha, v, dk, s); };
    } else {
        throw UsageError("unknown family " + o.family);
    }
    throw UsageError("unknown kind " + k + " for " + o.family);
}

int cmd_eval(const EvalOptions& o)
{
    bool circular = true;
    auto f = evaluator(o, circular);
    std::string var = circular ? "theta" : "xi";
    const std::string& spec = circular ? o.theta : o.xi;
    if (spec.empty())
        throw UsageError("--" + var + " grid required for kind " + o.kind + " of family " + o.family);
    Table t{{var, "value", "status"}, {}};
    for (double v : parse_grid(spec)) {
        try {
            double y = f(v);
            if (!std::isfinite(y))
                t.rows.push_back({v, std::nullopt, std::string("non-finite")});
            else
                t.rows.push_back({v, y, std::string("ok")});
        } catch (const UndefinedFunction& e) {
            t.rows.push_back({v, std::nullopt, std::string("undefined: ") + e.what()});
        } catch (const DomainError& e) {
            t.rows.push_back({v, std::nullopt, std::string("domain: ") + e.what()});
        }
    }
    write_output(o.out, [&](std::ostream& os) { t.emit(os, o.format); });
    return ok;
}

json rnm_json(int n, int m)
{
    const auto& r = generate({n, m});
    json coeffs = json::array();
    for (const auto& c : r.numer().coeffs())
        coeffs.push_back(to_string(c));
    return {{"n", n},
            {"m", m},
            {"r", r.str()},
            {"a", r.pow_one_minus_u()},
            {"b", r.pow_pf()},
            {"degree", r.numer().degree()},
            {"d", to_string(d_coeff({n, m}))},
            {"numerator", coeffs}};
}

int cmd_rnm(int n, int m, const std::string& format)
{
    json j = rnm_json(n, m);
    if (format == "json")
        std::cout << j.dump(2) << "\n";
    else {
        std::cout << j["r"].get<std::string>() << "\n";
        std::cout << "a=" << j["a"] << " b=" << j["b"] << " degree=" << j["degree"]
                  << " d=" << j["d"].get<std::string>() << "\n";
    }
    return ok;
}

int cmd_table(const std::string& nr, const std::string& mr, const std::string& format, const std::string& out)
{
    auto [n0, n1] = parse_range(nr);
    auto [m0, m1] = parse_range(mr);
    if (n0 > n1 || m0 > m1)
        throw UsageError("empty index range");
    Table t{{"n", "m", "a", "b", "degree", "d", "r"}, {}};
    for (int n = n0; n <= n1; ++n)
        for (int m = m0; m <= m1; ++m) {
            json j = rnm_json(n, m);
            t.rows.push_back({double(n), double(m), double(j["a"].get<int>()), double(j["b"].get<int>()),
                              double(j["degree"].get<int>()), j["d"].get<std::string>(), j["r"].get<std::string>()});
        }
    write_output(out, [&](std::ostream& os) { t.emit(os, format); });
    return ok;
}

int cmd_expand(const std::string& demo, int N, const std::string& points, const std::string& format,
               const std::string& out)
{
    if (N < 0)
        throw DomainError("N must be non-negative");
    std::function<double(double)> f;
    std::vector<double> breaks;
    if (demo == "abs") {
        f = [](double z) { return std::abs(z); };
        breaks = {0.0};
    } else if (demo == "step") {
        f = [](double z) { return z > 0 ? 1.0 : 0.0; };
        breaks = {0.0};
    } else if (demo == "linear") {
        f = [](double z) { return z; };
    } else {
        throw UsageError("demo must be abs, step or linear");
    }
    Table t{{"z", "f", "approx", "error"}, {}};
    if (demo == "linear") {
        ExpansionSpec spec{-1.0 / 6, 0.25, N, f};
        auto c = lh_coefficients(spec);
        for (double z : parse_grid(points)) {
            double a = lh_partial_sum(spec, c, z);
            t.rows.push_back({z, f(z), a, std::abs(a - f(z))});
        }
    } else {
        auto e = w_expansion(f, N, breaks);
        for (double z : parse_grid(points)) {
            double a = e(z);
            t.rows.push_back({z, f(z), a, std::abs(a - f(z))});
        }
    }
    write_output(out, [&](std::ostream& os) { t.emit(os, format); });
    return ok;
}

int cmd_mehler(int n, int m, const std::string& variable, const std::string& grid, const std::string& format,
               const std::string& out)
{
    if (m < 0)
        throw DomainError("Mehler-Dirichlet form needs m >= 0");
    if (variable != "circular" && variable != "hyperbolic")
        throw UsageError("variable must be circular or hyperbolic");
    Variable var = variable == "circular" ? Variable::circular : Variable::hyperbolic;
    Table t{{"v", "closed_form", "quadrature", "difference"}, {}};
    for (double v : parse_grid(grid)) {
        double c = mehler_integral(n, m, v, var);
        double q = mehler_quadrature(n, m, v, var).value;
        t.rows.push_back({v, c, q, std::abs(c - q)});
    }
    write_output(out, [&](std::ostream& os) { t.emit(os, format); });
    return ok;
}

int cmd_liealg(const std::vector<std::string>& base, int half, int margin, const std::string& form_name,
               bool twisted, const std::string& out)
{
    if (base.size() != 2)
        throw UsageError("--base needs two values");
    double nu0 = parse_number(base[0]), mu0 = parse_number(base[1]);
    if (margin < 2)
        throw ConfigError("margin must be at least 2");
    if (half < margin)
        throw ConfigError("window half-width " + std::to_string(half) + " leaves no interior for margin " +
                          std::to_string(margin));
    RealForm form;
    if (form_name == "so32A")
        form = RealForm::so32A;
    else if (form_name == "so41")
        form = RealForm::so41;
    else if (form_name == "so32B")
        form = RealForm::so32B;
    else if (form_name == "so5R")
        form = RealForm::so5R;
    else
        throw UsageError("form must be so32A, so41, so32B or so5R");
    Window w{nu0, mu0, -half, half, -half, half, margin};
    const double tol = 1e-10;
    auto t = build_real_form(w, form, twisted);
    double structure = check_structure(t);
    OpMatrix c2 = casimir2(t);
    double c2_lo = HUGE_VAL, c2_hi = -HUGE_VAL, c2_imag = 0;
    for (cplx d : interior_diagonal(c2)) {
        c2_lo = std::min(c2_lo, d.real());
        c2_hi = std::max(c2_hi, d.real());
        c2_imag = std::max(c2_imag, std::abs(d.imag()));
    }
    OpMatrix ref{w, -1.25 * Eigen::MatrixXcd::Identity(w.size(), w.size()), "c2", c2.reach};
    double c2_dev = interior_distance(c2, ref);
    double c2_ladder = interior_distance(c2, casimir2_ladder(build_ladders(w, twisted)));
    double w_max = 0;
    for (const auto& wa : w_components(t))
        w_max = std::max(w_max, interior_norm(wa));
    std::optional<double> c4;
    if (margin >= 4)
        c4 = interior_norm(casimir4(t));
    auto sing = singleton_check(nu0, mu0);
    bool pass = structure < tol && c2_dev < tol && c2_ladder < tol && w_max < tol && (!c4 || *c4 < tol);
    json j{{"base", {nu0, mu0}},
           {"window", half},
           {"margin", margin},
           {"form", form_name},
           {"twisted", twisted},
           {"structure_residual", structure},
           {"c2_min", c2_lo},
           {"c2_max", c2_hi},
           {"c2_max_imag", c2_imag},
           {"c2_deviation", c2_dev},
           {"c2_ladder_vs_tensor", c2_ladder},
           {"w_max", w_max},
           {"c4_max", c4 ? json(*c4) : json(nullptr)},
           {"singleton",
            {{"invariant_triangle", sing.invariant},
             {"skew_hermitian", sing.skew_hermitian},
             {"triangle_defect", sing.max_defect},
             {"full_defect", sing.full_defect},
             {"real_transposed", sing.real_transposed}}},
           {"pass", pass}};
    write_output(out, [&](std::ostream& os) { os << j.dump(2) << "\n"; });
    return pass ? ok : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Algebraic Legendre and Ferrers functions"};
    app.require_subcommand(1);

    EvalOptions eo;
    auto* eval = app.add_subcommand("eval", "evaluate a family on a grid");
    eval->add_option("--family", eo.family, "octahedral, tetrahedral2, tetrahedral3, cyclic, dihedral");
    eval->add_option("--kind", eo.kind, "ferrers-P, ferrers-Q, legendre-P, legendre-Qhat");
    eval->add_option("--n", eo.n);
    eval->add_option("--m", eo.m);
    eval->add_option("--order", eo.order, "sign of the order, + or -");
    eval->add_option("--row", eo.row, "first or second (tetrahedral2 Qhat)");
    eval->add_option("--alpha", eo.alpha, "dihedral degree offset");
    eval->add_option("--mu", eo.mu, "cyclic order");
    eval->add_option("--theta", eo.theta, "grid a:b:k");
    eval->add_option("--xi", eo.xi, "grid a:b:k");
    eval->add_option("--format", eo.format)->check(CLI::IsMember({"csv", "json"}));
    eval->add_option("--out", eo.out);

    int rn = 0, rm = 0;
    std::string rformat = "text";
    auto* rnm = app.add_subcommand("rnm", "print an octahedral rational function");
    rnm->add_option("n", rn)->required();
    rnm->add_option("m", rm)->required();
    rnm->add_option("--format", rformat)->check(CLI::IsMember({"text", "json"}));

    std::string tn = "0:2", tm = "0:2", tformat = "csv", tout;
    auto* table = app.add_subcommand("table", "tabulate octahedral rational functions");
    table->add_option("--n", tn, "range a:b");
    table->add_option("--m", tm, "range a:b");
    table->add_option("--format", tformat)->check(CLI::IsMember({"csv", "json"}));
    table->add_option("--out", tout);

    std::string demo = "abs", points = "-1:1:9", xformat = "csv", xout;
    int xN = 32;
    auto* expand = app.add_subcommand("expand", "expansion demos");
    expand->add_option("--demo", demo, "abs, step (Chebyshev W) or linear (Love-Hunter)");
    expand->add_option("--N", xN);
    expand->add_option("--points", points, "grid a:b:k");
    expand->add_option("--format", xformat)->check(CLI::IsMember({"csv", "json"}));
    expand->add_option("--out", xout);

    std::vector<std::string> base{"0", "0"};
    int half = 4, margin = 2;
    std::string form = "so32A", lout;
    bool twisted = false;
    auto* lie = app.add_subcommand("liealg", "verify the Lie algebra representation on a window");
    lie->add_option("--base", base, "nu0 mu0, accepts p/q")->expected(2);
    lie->add_option("--window", half, "half-width of the (n,m) window");
    lie->add_option("--margin", margin, "interior buffer");
    lie->add_option("--form", form, "so32A, so41, so32B, so5R");
    lie->add_flag("--twisted", twisted);
    lie->add_option("--out", lout);

    int mn = 0, mm = 0;
    std::string variable = "circular", grid = "1.2", mformat = "csv", mout;
    auto* mehler = app.add_subcommand("mehler", "Mehler-Dirichlet closed form against quadrature");
    mehler->add_option("--n", mn);
    mehler->add_option("--m", mm);
    mehler->add_option("--variable", variable, "circular or hyperbolic");
    mehler->add_option("--v", grid, "grid a:b:k");
    mehler->add_option("--format", mformat)->check(CLI::IsMember({"csv", "json"}));
    mehler->add_option("--out", mout);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    try {
        if (*eval)
            return cmd_eval(eo);
        if (*rnm)
            return cmd_rnm(rn, rm, rformat);
        if (*table)
            return cmd_table(tn, tm, tformat, tout);
        if (*expand)
            return cmd_expand(demo, xN, points, xformat, xout);
        if (*lie)
            return cmd_liealg(base, half, margin, form, twisted, lout);
        if (*mehler)
            return cmd_mehler(mn, mm, variable, grid, mformat, mout);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return usage;
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return config;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return domain;
    }
    return usage;
}
