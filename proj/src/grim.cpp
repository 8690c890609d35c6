#include "polyroots/grim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace polyroots {

void GrimConfig::validate() const {
    if (iters < 1) throw std::invalid_argument("GrimConfig: iters must be >= 1");
    if (!(dedup_tol > 0.0)) throw std::invalid_argument("GrimConfig: dedup_tol must be > 0");
    if (!(polish_tol > 0.0)) throw std::invalid_argument("GrimConfig: polish_tol must be > 0");
}

namespace {

struct Candidate {
    Complex root;
    double residual;
    int branch;
    int iterations;
};

std::string describe(int d, Complex seed, const char* what) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "branch %d, seed (%.3g%+.3gi): %s", d, seed.real(), seed.imag(), what);
    return buf;
}

}  // namespace

RootReport grim_solve(const Polynomial& p, const GrimConfig& cfg) {
    cfg.validate();
    const int n = p.degree();
    if (n < 1) throw std::domain_error("grim_solve: degree must be >= 1");

    std::vector<int> branches = cfg.branches;
    if (branches.empty())
        for (int d = 0; d < n; ++d) branches.push_back(d);
    std::vector<Complex> seeds = cfg.seeds;
    if (seeds.empty()) seeds = {0.01, Complex(0.0, 1.0), Complex(0.0, -1.0), cauchy_bound(p) / 2.0};

    const Complex lead = p.lead();
    std::vector<Complex> lower(p.coeffs().begin(), p.coeffs().end() - 1);
    const Polynomial rest(lower);

    RootReport report;
    report.method = "grim";
    std::vector<Candidate> pool;
    for (int d : branches) {
        const Complex turn(0.0, 2.0 * std::numbers::pi * d);
        for (const Complex& seed : seeds) {
            Complex x = seed;
            int it = 0;
            bool settled = false;
            while (it < cfg.iters) {
                ++it;
                const Complex fc = -rest.eval(x) / lead;
                const Complex next = fc == Complex(0.0) ? Complex(0.0) : std::exp((std::log(fc) + turn) / double(n));
                const double move = std::abs(next - x);
                x = next;
                if (move <= 1e-13 * (1.0 + std::abs(x))) {
                    settled = true;
                    break;
                }
            }
            if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
                report.warnings.push_back(describe(d, seed, "iterate left the finite range"));
                continue;
            }
            Complex root = x;
            double res;
            try {
                const PolishResult pr = newton_polish(p, x, 1e-14, 60);
                root = pr.root;
                res = pr.residual;
            } catch (const NoConvergenceError& e) {
                root = e.partial().roots.front().root;
                res = p.scaled_residual(root);
            }
            if (res > cfg.polish_tol) {
                report.warnings.push_back(describe(d, seed, settled ? "polish failed" : "no fixed point; polish failed"));
                continue;
            }
            pool.push_back({root, res, d, it});
        }
    }

    std::stable_sort(pool.begin(), pool.end(), [](const Candidate& a, const Candidate& b) {
        if (a.root.real() != b.root.real()) return a.root.real() < b.root.real();
        return a.root.imag() < b.root.imag();
    });
    std::vector<Candidate> kept;
    for (const Candidate& c : pool) {
        bool dup = false;
        for (Candidate& k : kept) {
            if (std::abs(k.root - c.root) <= cfg.dedup_tol) {
                dup = true;
                if (c.residual < k.residual) k = c;
                break;
            }
        }
        if (!dup) kept.push_back(c);
    }
    if (kept.empty()) throw EmptyResultError("grim_solve: no run converged to a root", report.warnings);

    for (std::size_t i = 0; i < kept.size(); ++i)
        for (std::size_t j = i + 1; j < kept.size(); ++j)
            if (std::abs(kept[i].root - kept[j].root) <= 100.0 * cfg.dedup_tol) {
                char buf[128];
                std::snprintf(buf, sizeof buf, "near-duplicate cluster at (%.6g%+.6gi)", kept[i].root.real(),
                              kept[i].root.imag());
                report.warnings.push_back(buf);
            }

    for (const Candidate& c : kept) {
        RootEntry e = make_entry(p, c.root, c.branch, c.iterations);
        report.roots.push_back(e);
    }
    report.sort();
    return report;
}

GrimCoverage grim_coverage(const Polynomial& p, const GrimConfig& cfg, double match_tol) {
    GrimCoverage cov;
    const RootReport oracle = all_roots_oracle(p);
    cov.total = int(oracle.roots.size());
    std::vector<Complex> found;
    try {
        found = grim_solve(p, cfg).values();
    } catch (const EmptyResultError&) {
    }
    std::vector<bool> used(found.size(), false);
    for (const RootEntry& o : oracle.roots) {
        int best = -1;
        double best_d = match_tol;
        for (std::size_t j = 0; j < found.size(); ++j) {
            const double d = std::abs(found[j] - o.root);
            if (!used[j] && d <= best_d) {
                best = int(j);
                best_d = d;
            }
        }
        if (best >= 0) {
            used[best] = true;
            ++cov.found;
        } else {
            cov.unmatched.push_back(o.root);
        }
    }
    return cov;
}

}  // namespace polyroots
