// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "polyroots/closedform.hpp"
#include "polyroots/grim.hpp"
#include "polyroots/poly.hpp"
#include "polyroots/radicals.hpp"
#include "polyroots/series.hpp"
#include "support.hpp"

using namespace polyroots;
using namespace testsupport;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> log;  // per-instance notes printed under the line
};

std::string fmt(const char* f, double v) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

Outcome criterion1() {
    const int n[] = {5, 6, 7, 9, 25, 121};
    const int rd[] = {1, 2, 2, 4, 19, 114};
    const int r[] = {4, 4, 5, 5, 6, 7};
    Outcome o;
    for (int i = 0; i < 6; ++i) {
        const RDBoundRow row = brauer_rd(n[i]);
        if (row.rd_max != rd[i] || row.r != r[i]) {
            o.pass = false;
            o.log.push_back("n=" + std::to_string(n[i]) + " got (" + std::to_string(row.rd_max) + "," +
                            std::to_string(row.r) + ")");
        }
    }
    o.detail = "6 table rows";
    return o;
}

Outcome criterion2() {
    Outcome o;
    int checked = 0;
    for (int s = 2; s <= 9; ++s) {
        for (int b = 1; b < s; ++b) {
            const Rational c = trinomial_pfq_root(Trinomial{s, b, 1.0, 1.0}, 0).arg_coefficient;
            const Rational mag(c.num < 0 ? -c.num : c.num, c.den);
            ++checked;
            if (!(mag == argument_law(s, b))) {
                o.pass = false;
                o.log.push_back("s=" + std::to_string(s) + " b=" + std::to_string(b) + " got " + to_string(mag));
            }
        }
    }
    struct Anchor {
        int s, b;
        std::int64_t num, den;
    };
    const Anchor printed[] = {{5, 1, 256, 3125},     {5, 2, 108, 3125},       {5, 3, 108, 3125},
                              {6, 1, 3125, 46656},   {7, 1, 46656, 823543},   {7, 2, 12500, 823543}};
    for (const Anchor& a : printed) {
        const Rational c = trinomial_pfq_root(Trinomial{a.s, a.b, 1.0, 1.0}, 0).arg_coefficient;
        const Rational mag(c.num < 0 ? -c.num : c.num, c.den);
        if (!(mag == Rational(a.num, a.den))) {
            o.pass = false;
            o.log.push_back("printed constant mismatch at s=" + std::to_string(a.s) + " b=" + std::to_string(a.b));
        }
    }
    o.detail = std::to_string(checked) + " (s,b) pairs exact, 6 printed constants";
    return o;
}

Outcome criterion3() {
    Outcome o;
    const auto corpus = trinomial_corpus(0xC3, 500);
    int converged = 0, branches = 0, incomplete = 0;
    double worst_res = 0.0, worst_dist = 0.0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const Trinomial& t = corpus[i];
        const Polynomial p = t.polynomial();
        std::vector<Complex> found;
        for (int k = 0; k < t.s; ++k) {
            ++branches;
            const SeriesRoot r = trinomial_series_root(t, k);
            // Truncated branches (term budget exhausted, not diverged) are
            // polished too and join the union under the same residual bound.
            if (r.status == SeriesStatus::diverged) continue;
            if (r.status == SeriesStatus::converged) ++converged;
            worst_res = std::max(worst_res, r.residual);
            if (r.residual > 1e-10) {
                o.pass = false;
                o.log.push_back("instance " + std::to_string(i) + " k=" + std::to_string(k) + " residual " +
                                fmt("%.2e", r.residual));
            }
            found.push_back(r.root);
        }
        found = dedup(found, 1e-8);
        const std::vector<Complex> oracle = all_roots_oracle(p).values();
        const double dist = max_nearest_distance(found, oracle);
        worst_dist = std::max(worst_dist, dist);
        if (dist > 1e-8) {
            o.pass = false;
            o.log.push_back("instance " + std::to_string(i) + " matched distance " + fmt("%.2e", dist));
        }
        if (found.size() != oracle.size()) {
            ++incomplete;
            o.pass = false;
            o.log.push_back("instance " + std::to_string(i) + " union has " + std::to_string(found.size()) + " of " +
                            std::to_string(oracle.size()) + " roots");
        }
    }
    o.detail = std::to_string(converged) + "/" + std::to_string(branches) + " branches converged (rest truncated at 400 terms), worst residual " +
               fmt("%.2e", worst_res) + ", worst matched distance " + fmt("%.2e", worst_dist) + ", " +
               std::to_string(incomplete) + " incomplete unions";
    return o;
}

Outcome criterion4() {
    Outcome o;
    const auto corpus = trinomial_corpus(0xC3, 500);
    int total = 0, failed = 0;
    double worst = 0.0;
    // Diagnostic: the regrouped form truncated at the same depth as the
    // direct sum (ceil(400/s) terms per residue class).
    double worst_matched = 0.0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const Trinomial& t = corpus[i];
        for (int k = 0; k < t.s; ++k) {
            Complex direct = 0.0;
            for (int n = 0; n < 400; ++n) direct += trinomial_series_term(t, k, n);
            const PFQRootForm form = trinomial_pfq_root(t, k);
            SeriesConfig cfg;
            cfg.max_terms = 4000;
            const Complex regrouped = evaluate_pfq_root(form, t.q, cfg).value;
            const double rel = std::abs(regrouped - direct) / std::abs(direct);
            worst = std::max(worst, rel);
            ++total;
            if (rel > 1e-9) {
                ++failed;
                o.log.push_back("instance " + std::to_string(i) + " (s=" + std::to_string(t.s) + ", |arg|=" +
                                fmt("%.3f", regrouped_argument_modulus(t)) + ") k=" + std::to_string(k) +
                                " relative difference " + fmt("%.2e", rel));
            }
            Complex matched = 0.0;
            for (const PFQGroup& g : form.groups) {
                Complex sum = 0.0, term = 1.0;
                for (int m = 0; t.s * m + g.residue < 400; ++m) {
                    sum += term;
                    for (const Complex& a : g.params.upper) term *= a + double(m);
                    for (const Complex& b : g.params.lower) term /= b + double(m);
                    term *= g.argument / double(m + 1);
                }
                matched += g.prefactor * std::pow(t.q, g.power_of_q.value()) * sum;
            }
            worst_matched = std::max(worst_matched, std::abs(matched - direct) / std::abs(direct));
        }
    }
    o.pass = failed == 0;
    if (o.log.size() > 20) {
        const std::size_t extra = o.log.size() - 20;
        o.log.resize(20);
        o.log.push_back("... " + std::to_string(extra) + " more");
    }
    o.detail = std::to_string(total - failed) + "/" + std::to_string(total) + " branches within 1e-9, worst " +
               fmt("%.2e", worst) + "; depth-matched regrouping worst " + fmt("%.2e", worst_matched);
    return o;
}

Outcome criterion5() {
    Outcome o;
    std::mt19937_64 rng(0xC5);
    double worst_dist = 0.0, worst_vieta = 0.0;
    for (int n = 2; n <= 4; ++n) {
        for (int i = 0; i < 500; ++i) {
            const Polynomial p = random_polynomial(rng, n);
            const RootReport rep = solve_closed(p);
            const std::vector<Complex> roots = rep.values();
            const double dist = match_roots(roots, all_roots_oracle(p).values()).max_pair_distance;
            worst_dist = std::max(worst_dist, dist);
            Complex sum = 0.0, prod = 1.0;
            double abs_sum = 0.0;
            for (const Complex& z : roots) {
                sum += z;
                prod *= z;
                abs_sum += std::abs(z);
            }
            const Complex want_sum = -p[n - 1] / p[n];
            const Complex want_prod = (n % 2 ? -1.0 : 1.0) * p[0] / p[n];
            // Relative to the scale of the summands, so cancellation to zero is not penalized.
            const double e_sum = std::abs(sum - want_sum) / std::max(abs_sum, 1e-300);
            const double e_prod = std::abs(prod - want_prod) / std::max(std::abs(want_prod), 1e-300);
            worst_vieta = std::max({worst_vieta, e_sum, e_prod});
            if (roots.size() != std::size_t(n) || dist > 1e-8 || e_sum > 1e-8 || e_prod > 1e-8) {
                o.pass = false;
                o.log.push_back("degree " + std::to_string(n) + " instance " + std::to_string(i) + ": distance " +
                                fmt("%.2e", dist) + ", vieta " + fmt("%.2e", std::max(e_sum, e_prod)));
            }
        }
    }
    o.detail = "1500 polynomials, worst oracle distance " + fmt("%.2e", worst_dist) + ", worst Vieta " +
               fmt("%.2e", worst_vieta);
    return o;
}

Outcome criterion6() {
    Outcome o;
    std::mt19937_64 rng(0xC6);
    double worst_res = 0.0, worst_dist = 0.0;
    for (int n = 6; n <= 10; n += 2) {
        for (int i = 0; i < 100; ++i) {
            const Polynomial f = random_polynomial(rng, n, true);
            double res = INFINITY, dist = INFINITY;
            try {
                const SquareDifferenceSplit sp = square_difference_split(f);
                const Polynomial diff = sp.w_minus * sp.w_plus - f;
                res = 0.0;
                for (int j = 0; j <= diff.degree(); ++j) res = std::max(res, std::abs(diff[j]));
                const RootReport rep = solve_by_split(f);
                dist = rep.roots.size() == std::size_t(n)
                           ? match_roots(rep.values(), all_roots_oracle(f).values()).max_pair_distance
                           : INFINITY;
            } catch (const std::exception& e) {
                o.log.push_back("degree " + std::to_string(n) + " instance " + std::to_string(i) + ": " + e.what());
            }
            worst_res = std::max(worst_res, res);
            worst_dist = std::max(worst_dist, dist);
            if (res > 1e-9 || dist > 1e-7) {
                o.pass = false;
                o.log.push_back("degree " + std::to_string(n) + " instance " + std::to_string(i) +
                                ": reconstruction " + fmt("%.2e", res) + ", oracle distance " + fmt("%.2e", dist));
            }
        }
    }
    o.detail = "300 polynomials, worst reconstruction " + fmt("%.2e", worst_res) + ", worst oracle distance " +
               fmt("%.2e", worst_dist);
    return o;
}

Outcome criterion7() {
    Outcome o;
    std::mt19937_64 rng(0xC7);
    int full = 0;
    double worst_res = 0.0;
    bool sound = true;
    for (int i = 0; i < 100; ++i) {
        const int n = std::uniform_int_distribution<int>(2, 10)(rng);
        const Polynomial p = Polynomial::from_roots(separated_roots(rng, n, 0.1));
        const GrimCoverage cov = grim_coverage(p);
        RootReport rep;
        try {
            rep = grim_solve(p);
        } catch (const EmptyResultError&) {
        }
        for (const RootEntry& e : rep.roots) {
            worst_res = std::max(worst_res, e.residual);
            if (e.residual > 1e-10) sound = false;
        }
        if (cov.found == cov.total) {
            ++full;
        } else {
            o.log.push_back("instance " + std::to_string(i) + " (degree " + std::to_string(n) + "): found " +
                            std::to_string(cov.found) + "/" + std::to_string(cov.total));
        }
    }
    o.pass = sound && full >= 90;
    o.detail = "full coverage on " + std::to_string(full) + "/100, worst reported residual " + fmt("%.2e", worst_res);
    return o;
}

Outcome criterion8() {
    Outcome o;
    RadicalIterConfig cfg;
    cfg.mu = 200;
    const double want3 = bisect([](double x) { return x * x * x + x - 1.0; }, 0.0, 1.0);
    const double want5 = bisect([](double x) { return x * x * x * x * x + x - 1.0; }, 0.0, 1.0);
    const RadicalResult r3 = trinomial_radical_root(3, 1, 1.0, 1.0, cfg);
    const RadicalResult r5 = trinomial_radical_root(5, 1, 1.0, 1.0, cfg);
    const double e3 = std::abs(r3.root - want3), e5 = std::abs(r5.root - want5);
    const RadicalResult sep = septic_radical_root(0.2, 0.1, 0.3, -0.5, RadicalIterConfig{});
    const Polynomial septic({-0.5, 0.3, 0.1, 0.2, 0.0, 0.0, 0.0, 1.0});
    const double es = max_nearest_distance({sep.polished}, all_roots_oracle(septic).values());
    o.pass = e3 <= 1e-10 && e5 <= 1e-10 && es <= 1e-8;
    o.detail = "x^3+x-1 error " + fmt("%.2e", e3) + ", x^5+x-1 error " + fmt("%.2e", e5) + ", septic oracle distance " +
               fmt("%.2e", es);
    return o;
}

Outcome criterion9() {
    Outcome o;
    const AdjacentResult r = adjacent_septic_root(1.0, 4.0, 1.0, 1.0);
    const Polynomial p({-1.0, 1.0, 4.0, 1.0, 0.0, 0.0, 0.0, 1.0});
    const double dist = max_nearest_distance({r.root}, all_roots_oracle(p).values());
    o.pass = r.series_residual < r.z_in_residual && r.series_residual <= 1e-2 && dist <= 1e-8;
    o.detail = "seed residual " + fmt("%.2e", r.z_in_residual) + ", series residual " + fmt("%.2e", r.series_residual) +
               ", polished oracle distance " + fmt("%.2e", dist);
    return o;
}

Outcome criterion10() {
    Outcome o;
    std::mt19937_64 rng(0xCA);
    int zero_ok = 0, nonzero_ok = 0;
    for (int i = 0; i < 200; ++i) {
        const bool common = i % 2 == 0;
        const int m = std::uniform_int_distribution<int>(1, 5)(rng);
        const int n = std::uniform_int_distribution<int>(1, 5)(rng);
        std::vector<Complex> all = separated_roots(rng, m + n, 0.1);
        std::vector<Complex> ra(all.begin(), all.begin() + m), rb(all.begin() + m, all.end());
        if (common) rb[0] = ra[0];
        const Complex la = random_on_annulus(rng, 0.5, 2.0), lb = random_on_annulus(rng, 0.5, 2.0);
        const Polynomial a = Polynomial::from_roots(ra, la), b = Polynomial::from_roots(rb, lb);
        const Complex res = sylvester_resultant(a, b);
        // Product formula lc_a^n lc_b^m prod (a_i - b_j).
        Complex want = std::pow(la, n) * std::pow(lb, m);
        for (const Complex& x : ra)
            for (const Complex& y : rb) want *= x - y;
        // Hadamard bound on the Sylvester determinant: product of row norms.
        auto norm2 = [](const Polynomial& x) {
            double acc = 0.0;
            for (const Complex& c : x.coeffs()) acc += std::norm(c);
            return std::sqrt(acc);
        };
        const double scale = std::pow(norm2(a), n) * std::pow(norm2(b), m);
        if (common) {
            if (std::abs(res) <= 1e-10 * scale) ++zero_ok;
            else o.log.push_back("common-root instance " + std::to_string(i) + ": |res| " + fmt("%.2e", std::abs(res)));
        } else {
            if (std::abs(res) > 1e-10 * scale && std::abs(res - want) <= 1e-8 * std::abs(want)) ++nonzero_ok;
            else o.log.push_back("coprime instance " + std::to_string(i) + ": |res| " + fmt("%.2e", std::abs(res)));
        }
    }
    int ts_ok = 0;
    double worst_coef = 0.0, worst_dist = 0.0;
    for (int i = 0; i < 100; ++i) {
        const Polynomial p = random_polynomial(rng, 5, true);
        const TschirnhausResult t = tschirnhaus_quadratic(p);
        const double coef = std::max(std::abs(t.principal[4]), std::abs(t.principal[3]));
        std::vector<Complex> mapped;
        for (const Complex& v : all_roots_oracle(p).values()) mapped.push_back(v * v + t.alpha1 * v + t.alpha2);
        const double dist = match_roots(mapped, all_roots_oracle(t.principal).values()).max_pair_distance;
        worst_coef = std::max(worst_coef, coef);
        worst_dist = std::max(worst_dist, dist);
        if (coef <= 1e-10 && dist <= 1e-8) ++ts_ok;
        else o.log.push_back("quintic " + std::to_string(i) + ": coefficients " + fmt("%.2e", coef) + ", distance " + fmt("%.2e", dist));
    }
    o.pass = zero_ok == 100 && nonzero_ok == 100 && ts_ok == 100;
    o.detail = "resultant " + std::to_string(zero_ok + nonzero_ok) + "/200, reduction " + std::to_string(ts_ok) +
               "/100 (worst coefficient " + fmt("%.2e", worst_coef) + ", worst distance " + fmt("%.2e", worst_dist) + ")";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        double budget;  // seconds
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, 1, criterion1},   {2, 1, criterion2},  {3, 30, criterion3}, {4, 30, criterion4},
        {5, 10, criterion5},  {6, 60, criterion6}, {7, 120, criterion7}, {8, 5, criterion8},
        {9, 5, criterion9},   {10, 10, criterion10},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = secs < c.budget;
        const bool pass = o.pass && in_time;
        if (!pass) ++failures;
        std::printf("criterion %2d: %s  %s [%.2f s of %.0f s]\n", c.id, pass ? "PASS" : "FAIL", o.detail.c_str(), secs,
                    c.budget);
        for (const std::string& line : o.log) std::printf("    %s\n", line.c_str());
    }
    std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
