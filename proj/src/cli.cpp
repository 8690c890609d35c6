#include "polyroots/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "polyroots/closedform.hpp"
#include "polyroots/format.hpp"
#include "polyroots/grim.hpp"
#include "polyroots/numerics.hpp"
#include "polyroots/poly.hpp"
#include "polyroots/radicals.hpp"
#include "polyroots/series.hpp"

namespace polyroots {

namespace {

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class InputKind { coeffs, trinomial, quadrinomial };

struct SolveInput {
    InputKind kind = InputKind::coeffs;
    Polynomial poly;
    Trinomial tri;
    Quadrinomial quad;
};

struct SolveOptions {
    std::string method = "auto";
    double tol = 1e-12;
    int max_terms = 400;
    std::vector<int> branches;
    bool json = false;
    bool oracle = true;
};

struct SolveOutcome {
    RootReport report;
    bool diverged = false;
    std::vector<std::string> notes;  // text-mode diagnostics
};

std::string branch_note(int k, const std::string& msg) { return "branch " + std::to_string(k) + ": " + msg; }

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        try {
            v.push_back(std::stoi(item, &used));
        } catch (const std::exception&) {
            throw UsageError("malformed integer list: '" + text + "'");
        }
    }
    return v;
}

std::vector<Complex> parse_complex_list(const std::string& text) {
    std::vector<Complex> v;
    if (text.find_first_not_of(" \t") == std::string::npos) return v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(parse_complex(item));
    return v;
}

int parse_int(const std::string& s, const char* what) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size()) throw UsageError(std::string("malformed integer for ") + what + ": '" + s + "'");
    return v;
}

// x^s - alpha x^b - q with exactly those three terms.
bool as_trinomial(const Polynomial& p, Trinomial& t) {
    const int s = p.degree();
    if (s < 2 || p[0] == Complex(0.0)) return false;
    const Polynomial m = p.monic();
    int mid = -1;
    for (int i = 1; i < s; ++i) {
        if (m[i] == Complex(0.0)) continue;
        if (mid >= 0) return false;
        mid = i;
    }
    if (mid < 0) return false;
    t = Trinomial{s, mid, -m[mid], -m[0]};
    return true;
}

// x^s + c x^r + alpha x - b with 2 <= r <= s-2.
bool as_quadrinomial(const Polynomial& p, Quadrinomial& w) {
    const int s = p.degree();
    if (s < 4) return false;
    const Polynomial m = p.monic();
    if (m[1] == Complex(0.0)) return false;
    int mid = -1;
    for (int i = 2; i < s; ++i) {
        if (m[i] == Complex(0.0)) continue;
        if (mid >= 0) return false;
        mid = i;
    }
    if (mid < 2 || mid > s - 2) return false;
    w = Quadrinomial{s, mid, m[mid], m[1], -m[0]};
    return true;
}

// x^7 + c x^3 + a x^2 + b x + d.
bool is_septic_shape(const Polynomial& p) {
    if (p.degree() != 7) return false;
    const Polynomial m = p.monic();
    return m[4] == Complex(0.0) && m[5] == Complex(0.0) && m[6] == Complex(0.0);
}

std::string resolve_method(const SolveInput& in, const std::string& method) {
    if (method != "auto") return method;
    if (in.kind != InputKind::coeffs) return "series";
    const int n = in.poly.degree();
    if (n <= 4) return "closed";
    if (n % 2 == 0 && n <= 10) return "split";
    Trinomial t;
    Quadrinomial w;
    if (as_trinomial(in.poly, t) || as_quadrinomial(in.poly, w)) return "series";
    return "grim";
}

void add_unique(RootReport& rep, const RootEntry& e) {
    for (const RootEntry& r : rep.roots)
        if (std::abs(r.root - e.root) <= 1e-6) return;
    rep.roots.push_back(e);
}

std::vector<int> branches_for(const SolveOptions& o, int n) {
    if (!o.branches.empty()) return o.branches;
    std::vector<int> b;
    for (int k = 0; k < n; ++k) b.push_back(k);
    return b;
}

SeriesConfig series_config(const SolveOptions& o) {
    SeriesConfig cfg;
    cfg.max_terms = o.max_terms;
    cfg.rel_tol = o.tol;
    cfg.validate();
    return cfg;
}

void solve_series(const SolveInput& in, const SolveOptions& o, SolveOutcome& res) {
    const SeriesConfig cfg = series_config(o);
    const Polynomial& p = in.poly;
    Trinomial t = in.tri;
    Quadrinomial w = in.quad;
    InputKind kind = in.kind;
    if (kind == InputKind::coeffs) {
        if (as_trinomial(p, t))
            kind = InputKind::trinomial;
        else if (as_quadrinomial(p, w))
            kind = InputKind::quadrinomial;
    }
    if (kind == InputKind::trinomial) {
        for (int k : branches_for(o, t.s)) {
            const SeriesRoot r = trinomial_series_root(t, k, cfg);
            for (const std::string& msg : r.warnings) res.report.warnings.push_back(branch_note(k, msg));
            if (r.status == SeriesStatus::diverged || r.residual > 1e-10) {
                res.diverged = true;
                continue;
            }
            add_unique(res.report, make_entry(p, r.root, k, r.terms_used));
        }
        return;
    }
    SeriesRoot r;
    if (kind == InputKind::quadrinomial) {
        r = quadrinomial_series_root(w, cfg);
    } else {
        r = general_poly_series_root(p, 0.0, std::min(o.max_terms, 60), cfg);
        if (r.status == SeriesStatus::diverged && r.residual <= 1e-10) r.status = SeriesStatus::converged;
    }
    res.report.warnings.insert(res.report.warnings.end(), r.warnings.begin(), r.warnings.end());
    res.notes.push_back("series value " + format_complex(r.raw) + ", residual " + format_residual(r.raw_residual));
    if (r.status == SeriesStatus::diverged || r.residual > 1e-10) {
        res.diverged = true;
        return;
    }
    res.report.roots.push_back(make_entry(p, r.root, -1, r.terms_used));
}

void solve_pfq(const SolveInput& in, const SolveOptions& o, SolveOutcome& res) {
    Trinomial t = in.tri;
    if (in.kind == InputKind::quadrinomial || (in.kind == InputKind::coeffs && !as_trinomial(in.poly, t)))
        throw UsageError("method pfq requires a trinomial");
    const SeriesConfig cfg = series_config(o);
    for (int k : branches_for(o, t.s)) {
        const PFQRootForm form = trinomial_pfq_root(t, k);
        const SeriesValue v = evaluate_pfq_root(form, t.q, cfg);
        if (v.status == SeriesStatus::diverged) {
            res.report.warnings.push_back(branch_note(k, "hypergeometric groups diverged"));
            res.diverged = true;
            continue;
        }
        Complex x = v.value;
        try {
            x = newton_polish(in.poly, v.value, 1e-14, 60).root;
        } catch (const NoConvergenceError& e) {
            x = e.partial().roots.front().root;
        }
        if (in.poly.scaled_residual(x) > 1e-10) {
            res.report.warnings.push_back(branch_note(k, "polish did not reach the residual target"));
            res.diverged = true;
            continue;
        }
        add_unique(res.report, make_entry(in.poly, x, k, v.terms_used));
    }
}

void radical_into(SolveOutcome& res, const Polynomial& p, const RadicalResult& r, int k) {
    if (r.status == RadicalStatus::diverged || r.residual > 1e-10) {
        res.report.warnings.push_back(branch_note(k, "radical iteration " + to_string(r.status)));
        res.diverged = true;
        return;
    }
    if (r.status != RadicalStatus::converged)
        res.report.warnings.push_back(branch_note(k, "radical iteration " + to_string(r.status) + "; root polished"));
    add_unique(res.report, make_entry(p, r.polished, k, r.iterations));
}

void solve_radical(const SolveInput& in, const SolveOptions& o, SolveOutcome& res) {
    RadicalIterConfig cfg;
    cfg.tol = o.tol;
    cfg.mu = std::max(cfg.mu, o.max_terms);
    Trinomial t = in.tri;
    Quadrinomial w = in.quad;
    const Polynomial& p = in.poly;
    const bool tri = in.kind == InputKind::trinomial || (in.kind == InputKind::coeffs && as_trinomial(p, t));
    const bool quad =
        !tri && (in.kind == InputKind::quadrinomial || (in.kind == InputKind::coeffs && as_quadrinomial(p, w)));
    if (tri) {
        for (int k : branches_for(o, t.s)) {
            cfg.k = k;
            radical_into(res, p, trinomial_radical_root(t.s, t.b, -t.alpha, t.q, cfg), k);
        }
    } else if (quad) {
        for (int k : branches_for(o, 1)) {
            cfg.k = k;
            radical_into(res, p, quadrinomial_radical_root(w.s, w.r, 1.0, w.c, w.alpha, w.b, cfg), k);
        }
    } else if (is_septic_shape(p)) {
        const Polynomial m = p.monic();
        for (int k : branches_for(o, 7)) {
            cfg.k = k;
            radical_into(res, p, septic_radical_root(m[3], m[2], m[1], m[0], cfg), k);
        }
    } else {
        throw UsageError("method radical requires a trinomial, quadrinomial or x^7 + a x^3 + b x^2 + c x + d");
    }
}

void solve_adjacent(const SolveInput& in, const SolveOptions& o, SolveOutcome& res) {
    const Polynomial& p = in.poly;
    if (!is_septic_shape(p) || p.monic()[3] == Complex(0.0))
        throw UsageError("method adjacent requires x^7 + c x^3 + a x^2 + b x - q with c != 0");
    const Polynomial m = p.monic();
    const AdjacentResult r = adjacent_septic_root(m[3], m[2], m[1], -m[0], series_config(o));
    res.report.warnings = r.warnings;
    res.notes.push_back("z_in " + format_complex(r.z_in) + ", residual " + format_residual(r.z_in_residual));
    res.notes.push_back("series " + format_complex(r.series_value) + ", residual " + format_residual(r.series_residual));
    if (r.residual > 1e-10) {
        res.diverged = true;
        return;
    }
    res.report.roots.push_back(make_entry(p, r.root, -1, r.terms_used));
}

SolveOutcome solve(const SolveInput& in, const SolveOptions& o, std::string& method) {
    method = resolve_method(in, o.method);
    const Polynomial& p = in.poly;
    const int n = p.degree();
    if (n < 1) throw UsageError("polynomial must have degree >= 1");
    SolveOutcome res;
    if (method == "closed") {
        if (n > 4) throw UsageError("method closed requires degree <= 4");
        res.report = solve_closed(p);
    } else if (method == "split") {
        if (n % 2 != 0 || n < 4 || n > 10) throw UsageError("method split requires even degree 4..10");
        try {
            const RootReport r = solve_by_split(p.monic());
            res.report.warnings = r.warnings;
            for (const RootEntry& e : r.roots) res.report.roots.push_back(make_entry(p, e.root));
        } catch (const NoConvergenceError& e) {
            res.report.warnings = e.partial().warnings;
            res.diverged = true;
        }
    } else if (method == "series") {
        solve_series(in, o, res);
    } else if (method == "pfq") {
        solve_pfq(in, o, res);
    } else if (method == "radical") {
        solve_radical(in, o, res);
    } else if (method == "grim") {
        GrimConfig cfg;
        cfg.branches = o.branches;
        try {
            res.report = grim_solve(p, cfg);
        } catch (const EmptyResultError& e) {
            res.report.warnings = e.diagnostics();
            res.diverged = true;
        }
    } else if (method == "adjacent") {
        solve_adjacent(in, o, res);
    } else if (method == "oracle") {
        try {
            res.report = all_roots_oracle(p, std::max(o.tol, 1e-15));
        } catch (const NoConvergenceError& e) {
            res.report = e.partial();
            res.report.warnings.push_back(e.what());
            res.diverged = true;
        }
    } else {
        throw UsageError("unknown method '" + method + "'");
    }
    res.report.method = method;
    res.report.sort();
    return res;
}

void oracle_cross_check(const Polynomial& p, SolveOutcome& res) {
    try {
        const std::vector<Complex> oracle = all_roots_oracle(p).values();
        double worst = 0.0;
        for (const RootEntry& e : res.report.roots) {
            double best = std::numeric_limits<double>::infinity();
            for (const Complex& z : oracle) best = std::min(best, std::abs(z - e.root));
            worst = std::max(worst, best);
            if (best > 1e-6)
                res.report.warnings.push_back("oracle cross-check: no oracle root within 1e-6 of " + format_complex(e.root));
        }
        res.notes.push_back("oracle cross-check: max distance " + format_residual(worst) + " over " +
                            std::to_string(res.report.roots.size()) + " of " + std::to_string(oracle.size()) +
                            " roots");
    } catch (const NoConvergenceError&) {
        res.notes.push_back("oracle cross-check skipped: oracle did not converge");
    }
}

void print_report(std::ostream& out, const SolveOutcome& res, bool json) {
    const std::string status = res.diverged ? "diverged" : "ok";
    if (json) {
        out << canonical_json(report_to_json(res.report, status)) << "\n";
        return;
    }
    out << "method: " << res.report.method << "\n";
    out << "status: " << status << "\n";
    out << "roots: " << res.report.roots.size() << "\n";
    for (const RootEntry& e : res.report.roots) {
        out << "  ";
        if (e.branch >= 0) out << "[k=" << e.branch << "] ";
        out << format_complex(e.root) << "  residual " << format_residual(e.residual) << "\n";
    }
    for (const std::string& n : res.notes) out << n << "\n";
    for (const std::string& w : res.report.warnings) out << "warning: " << w << "\n";
}

void set_parameter(SolveInput& in, Complex value) {
    switch (in.kind) {
        case InputKind::trinomial:
            in.tri.alpha = value;
            in.poly = in.tri.polynomial();
            break;
        case InputKind::quadrinomial:
            in.quad.alpha = value;
            in.poly = in.quad.polynomial();
            break;
        case InputKind::coeffs: {
            std::vector<Complex> c = in.poly.coeffs();
            c[0] = value;
            in.poly = Polynomial(c);
            break;
        }
    }
}

int run_basins(std::ostream& out, SolveInput in, const SolveOptions& o, const std::vector<double>& rect, int grid) {
    if (rect.size() != 4) throw UsageError("--rect needs x0 x1 y0 y1");
    if (grid < 1) throw UsageError("--grid must be >= 1");
    out << "param1,param2,method,status,residual\n";
    for (int j = 0; j < grid; ++j) {
        const double p2 = grid == 1 ? rect[2] : rect[2] + (rect[3] - rect[2]) * j / (grid - 1);
        for (int i = 0; i < grid; ++i) {
            const double p1 = grid == 1 ? rect[0] : rect[0] + (rect[1] - rect[0]) * i / (grid - 1);
            std::string method = o.method, status;
            double worst = std::numeric_limits<double>::quiet_NaN();
            try {
                set_parameter(in, Complex(p1, p2));
                const SolveOutcome res = solve(in, o, method);
                status = res.diverged ? "diverged" : "ok";
                if (!res.report.roots.empty()) {
                    worst = 0.0;
                    for (const RootEntry& e : res.report.roots) worst = std::max(worst, e.residual);
                }
            } catch (const std::exception&) {
                status = "error";
            }
            out << format_double(p1) << "," << format_double(p2) << "," << method << "," << status << ","
                << format_residual(worst) << "\n";
        }
    }
    return 0;
}

Complex parse_arg(const std::string& s) {
    try {
        return parse_complex(s);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

nlohmann::json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Polynomial roots by closed forms, series, radicals and GRIM"};
    app.require_subcommand(1);

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "Find polynomial roots");
    std::string coeffs, branches, plot;
    std::vector<std::string> tri, quad;
    std::vector<double> rect;
    int grid = 21;
    SolveOptions opts;
    bool no_oracle = false;
    auto* coeffs_opt = solve_cmd->add_option("--coeffs", coeffs, "Coefficients c0,c1,...,cn (constant term first)");
    auto* tri_opt = solve_cmd->add_option("--trinomial", tri, "s b alpha q for x^s - alpha x^b - q")->expected(4);
    auto* quad_opt =
        solve_cmd->add_option("--quadrinomial", quad, "s r c alpha b for x^s + c x^r + alpha x - b")->expected(5);
    coeffs_opt->excludes(tri_opt)->excludes(quad_opt);
    tri_opt->excludes(quad_opt);
    solve_cmd->add_option("--method", opts.method, "auto|closed|split|series|pfq|radical|grim|adjacent|oracle")
        ->check(CLI::IsMember({"auto", "closed", "split", "series", "pfq", "radical", "grim", "adjacent", "oracle"}));
    solve_cmd->add_option("--tol", opts.tol, "Relative tolerance for series and iterations");
    solve_cmd->add_option("--max-terms", opts.max_terms, "Series terms / outer iterations");
    solve_cmd->add_option("--branches", branches, "Comma-separated branch indices");
    solve_cmd->add_flag("--json", opts.json, "Canonical JSON output");
    solve_cmd->add_flag("--no-oracle", no_oracle, "Skip the oracle cross-check");
    solve_cmd->add_option("--plot", plot, "basins: CSV of convergence status over --rect")->check(CLI::IsMember({"basins"}));
    solve_cmd->add_option("--rect", rect, "x0 x1 y0 y1")->expected(4);
    solve_cmd->add_option("--grid", grid, "Grid points per axis");

    // rd-table
    auto* rd_cmd = app.add_subcommand("rd-table", "Brauer resolvent-degree bounds");
    std::vector<int> rd_n;
    bool rd_json = false;
    rd_cmd->add_option("n", rd_n, "Degrees n >= 5")->required();
    rd_cmd->add_flag("--json", rd_json, "JSON output");

    // pfq
    auto* pfq_cmd = app.add_subcommand("pfq", "Evaluate a generalized hypergeometric series");
    std::string upper, lower, zs;
    SeriesConfig pcfg;
    bool regularized = false, pfq_json = false;
    pfq_cmd->add_option("--upper", upper, "Upper parameters, comma-separated");
    pfq_cmd->add_option("--lower", lower, "Lower parameters, comma-separated");
    pfq_cmd->add_option("--z", zs, "Argument")->required();
    pfq_cmd->add_option("--max-terms", pcfg.max_terms, "Maximum number of terms");
    pfq_cmd->add_option("--tol", pcfg.rel_tol, "Relative tolerance");
    pfq_cmd->add_flag("--regularized", regularized, "Divide by Gamma of each lower parameter");
    pfq_cmd->add_flag("--json", pfq_json, "JSON output");

    // resultant
    auto* res_cmd = app.add_subcommand("resultant", "Sylvester resultant of two polynomials");
    std::string ps, qs;
    bool res_json = false;
    res_cmd->add_option("--p", ps, "Coefficients of p")->required();
    res_cmd->add_option("--q", qs, "Coefficients of q")->required();
    res_cmd->add_flag("--json", res_json, "JSON output");

    // tschirnhaus
    auto* ts_cmd = app.add_subcommand("tschirnhaus", "Quadratic Tschirnhaus reduction of a monic quintic");
    std::string ts_coeffs;
    bool ts_json = false;
    ts_cmd->add_option("--coeffs", ts_coeffs, "Coefficients c0..c5")->required();
    ts_cmd->add_flag("--json", ts_json, "JSON output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*solve_cmd) {
            opts.oracle = !no_oracle;
            if (!branches.empty()) opts.branches = parse_int_list(branches);
            SolveInput in;
            if (!tri.empty()) {
                in.kind = InputKind::trinomial;
                in.tri = Trinomial{parse_int(tri[0], "s"), parse_int(tri[1], "b"), parse_arg(tri[2]), parse_arg(tri[3])};
                in.tri.validate();
                in.poly = in.tri.polynomial();
            } else if (!quad.empty()) {
                in.kind = InputKind::quadrinomial;
                in.quad = Quadrinomial{parse_int(quad[0], "s"), parse_int(quad[1], "r"), parse_arg(quad[2]),
                                       parse_arg(quad[3]), parse_arg(quad[4])};
                in.quad.validate();
                in.poly = in.quad.polynomial();
            } else if (!coeffs.empty()) {
                in.poly = parse_polynomial(coeffs);
            } else {
                throw UsageError("one of --coeffs, --trinomial, --quadrinomial is required");
            }
            if (!plot.empty()) return run_basins(out, in, opts, rect, grid);
            std::string method;
            SolveOutcome res = solve(in, opts, method);
            if (opts.oracle && method != "oracle") oracle_cross_check(in.poly, res);
            print_report(out, res, opts.json);
            return res.diverged ? 2 : 0;
        }
        if (*rd_cmd) {
            std::vector<RDBoundRow> rows;
            for (int n : rd_n) rows.push_back(brauer_rd(n));
            if (rd_json) {
                nlohmann::json j = nlohmann::json::array();
                for (const RDBoundRow& r : rows) j.push_back({{"n", r.n}, {"rd_max", r.rd_max}, {"r", r.r}});
                out << canonical_json({{"rows", j}}) << "\n";
            } else {
                out << "n\tRD(n)max\tr\n";
                for (const RDBoundRow& r : rows) out << r.n << "\t" << r.rd_max << "\t" << r.r << "\n";
            }
            return 0;
        }
        if (*pfq_cmd) {
            PFQParams params{parse_complex_list(upper), parse_complex_list(lower)};
            const SeriesValue v = pfq_eval(params, parse_arg(zs), pcfg, regularized);
            if (pfq_json) {
                out << canonical_json({{"value", complex_json(v.value)},
                                       {"terms_used", v.terms_used},
                                       {"status", to_string(v.status)}})
                    << "\n";
            } else {
                out << "value: " << format_complex(v.value) << "\n";
                out << "terms_used: " << v.terms_used << "\n";
                out << "status: " << to_string(v.status) << "\n";
            }
            return v.status == SeriesStatus::diverged ? 2 : 0;
        }
        if (*res_cmd) {
            const Complex r = sylvester_resultant(parse_polynomial(ps), parse_polynomial(qs));
            if (res_json)
                out << canonical_json({{"resultant", complex_json(r)}}) << "\n";
            else
                out << "resultant: " << format_complex(r) << "\n";
            return 0;
        }
        if (*ts_cmd) {
            const TschirnhausResult t = tschirnhaus_quadratic(parse_polynomial(ts_coeffs));
            if (ts_json) {
                nlohmann::json c = nlohmann::json::array();
                for (const Complex& z : t.principal.coeffs()) c.push_back(complex_json(z));
                out << canonical_json({{"alpha1", complex_json(t.alpha1)}, {"alpha2", complex_json(t.alpha2)}, {"coeffs", c}})
                    << "\n";
            } else {
                out << "alpha1: " << format_complex(t.alpha1) << "\n";
                out << "alpha2: " << format_complex(t.alpha2) << "\n";
                out << "coeffs:";
                for (const Complex& z : t.principal.coeffs()) out << " " << format_complex(z);
                out << "\n";
            }
            return 0;
        }
    } catch (const NoConvergenceError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace polyroots
