#include "polyroots/radicals.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "polyroots/poly.hpp"

namespace polyroots {

void RadicalIterConfig::validate() const {
    if (v < 1 || mu < 1) throw std::invalid_argument("RadicalIterConfig: v and mu must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("RadicalIterConfig: tol must be > 0");
    if (!(max_modulus > 0.0)) throw std::invalid_argument("RadicalIterConfig: max_modulus must be > 0");
}

std::string to_string(RadicalStatus status) {
    switch (status) {
        case RadicalStatus::converged: return "converged";
        case RadicalStatus::max_iterations: return "max_iterations";
        case RadicalStatus::diverged: return "diverged";
    }
    return "unknown";
}

namespace {

Complex turn(double frac) { return std::polar(1.0, 2.0 * std::numbers::pi * frac); }

// Principal power; 0^e = 0 for e > 0.
Complex ppow(Complex z, double e) { return z == Complex(0.0) ? Complex(0.0) : std::pow(z, e); }

bool escaped(Complex z, double max_modulus) {
    return !std::isfinite(z.real()) || !std::isfinite(z.imag()) || std::abs(z) > max_modulus;
}

bool is_int(double x) { return x == std::floor(x) && std::fabs(x) < 64.0; }

void polish(RadicalResult& r, const Polynomial& p) {
    r.polished = r.root;
    r.residual = p.scaled_residual(r.root);
    if (r.status == RadicalStatus::diverged) return;
    try {
        const PolishResult pr = newton_polish(p, r.root, 1e-14, 60);
        r.polished = pr.root;
        r.residual = pr.residual;
    } catch (const NoConvergenceError& e) {
        const RootEntry& best = e.partial().roots.front();
        if (best.residual < r.residual) {
            r.polished = best.root;
            r.residual = best.residual;
        }
    }
}

struct FixedPointRun {
    Complex x{0.0, 0.0};
    double last_move = 0.0;
    int iterations = 0;
    RadicalStatus status = RadicalStatus::max_iterations;
};

// Guarded fixed-point engine shared by every radical iteration. A zero seed
// can land on an exact two-cycle through the branch point (x^3 + x - 1:
// 0 -> 1 -> 0); such a cycle is broken once by restarting at its midpoint.
template <typename Map>
FixedPointRun run_fixed_point(Map map, Complex x0, int steps, double tol, double max_modulus) {
    FixedPointRun run;
    run.x = x0;
    Complex prev = x0;
    for (int it = 1; it <= steps; ++it) {
        Complex next = map(run.x);
        run.last_move = std::abs(next - run.x);
        run.iterations = it;
        if (escaped(next, max_modulus)) {
            run.x = next;
            run.status = RadicalStatus::diverged;
            return run;
        }
        const double scale = tol * (1.0 + std::abs(next));
        if (run.last_move <= scale) {
            run.x = next;
            run.status = RadicalStatus::converged;
            return run;
        }
        if (it >= 2 && std::abs(next - prev) <= scale) next = 0.5 * (next + run.x);
        prev = run.x;
        run.x = next;
    }
    return run;
}

// x^p + alpha x^q = c with y = x^q, iterated from y0.
FixedPointRun iterate_trinomial(double p, double q, Complex alpha, Complex c, int k, int steps, double tol,
                                double max_modulus, Complex y0, Complex& x) {
    const Complex phase_y = turn(k * q / p);
    const FixedPointRun run = run_fixed_point([&](Complex y) { return phase_y * ppow(c - alpha * y, q / p); }, y0,
                                              steps, tol, max_modulus);
    x = turn(k / p) * ppow(c - alpha * run.x, 1.0 / p);
    return run;
}

}  // namespace

RadicalResult trinomial_radical_root(double p_exp, double q_exp, Complex alpha, Complex c,
                                     const RadicalIterConfig& cfg) {
    cfg.validate();
    if (!(q_exp > 0.0) || !(p_exp / q_exp > 1.0))
        throw std::domain_error("trinomial_radical_root: requires p/q > 1");
    Complex x;
    const FixedPointRun run =
        iterate_trinomial(p_exp, q_exp, alpha, c, cfg.k, cfg.mu, cfg.tol, cfg.max_modulus, 0.0, x);
    RadicalResult r;
    r.root = x;
    r.iterations = run.iterations;
    r.status = run.status;
    r.fixed_point_residual = run.last_move;
    r.polished = r.root;
    if (is_int(p_exp) && is_int(q_exp)) {
        std::vector<Complex> co(int(p_exp) + 1, 0.0);
        co[int(p_exp)] += 1.0;
        co[int(q_exp)] += alpha;
        co[0] -= c;
        polish(r, Polynomial(co));
    }
    return r;
}

RadicalResult quadrinomial_radical_root(double p_exp, double q_exp, double v_exp, Complex alpha, Complex beta,
                                        Complex c, const RadicalIterConfig& cfg) {
    cfg.validate();
    if (!(v_exp > 0.0 && v_exp < q_exp && q_exp < p_exp))
        throw std::domain_error("quadrinomial_radical_root: requires 0 < v < q < p");
    RadicalResult r;
    Complex y = 0.0;        // x^v
    Complex inner_y = 0.0;  // warm start of the inner iteration
    Complex x = 0.0;
    for (int it = 1; it <= cfg.mu; ++it) {
        const Complex c_eff = c - beta * y;
        const FixedPointRun st =
            iterate_trinomial(p_exp, q_exp, alpha, c_eff, cfg.k, cfg.v, cfg.tol, cfg.max_modulus, inner_y, x);
        inner_y = st.x;
        const Complex y_next = ppow(x, v_exp);
        r.fixed_point_residual = std::abs(y_next - y);
        y = y_next;
        r.iterations = it;
        if (st.status == RadicalStatus::diverged || escaped(y, cfg.max_modulus)) {
            r.status = RadicalStatus::diverged;
            break;
        }
        if (r.fixed_point_residual <= cfg.tol * (1.0 + std::abs(y)) && st.status == RadicalStatus::converged) {
            r.status = RadicalStatus::converged;
            break;
        }
    }
    r.root = x;
    r.polished = x;
    if (is_int(p_exp) && is_int(q_exp) && is_int(v_exp)) {
        std::vector<Complex> co(int(p_exp) + 1, 0.0);
        co[int(p_exp)] += 1.0;
        co[int(q_exp)] += alpha;
        co[int(v_exp)] += beta;
        co[0] -= c;
        polish(r, Polynomial(co));
    }
    return r;
}

RadicalResult sextic_radical_root(Complex w, Complex c, Complex b, const RadicalIterConfig& cfg) {
    cfg.validate();
    const Complex phase = turn(cfg.k / 6.0);
    auto map = [&](Complex x) { return ppow(w - c * phase * ppow(b - x, 1.0 / 6.0), 0.5); };
    RadicalResult r;
    const FixedPointRun run = run_fixed_point(map, 0.0, cfg.mu, cfg.tol, cfg.max_modulus);
    const Complex x = run.x;
    r.iterations = run.iterations;
    r.status = run.status;
    r.root = r.polished = x;
    r.fixed_point_residual = r.status == RadicalStatus::diverged ? INFINITY : std::abs(map(x) - x);
    r.residual = r.fixed_point_residual;
    return r;
}

RadicalResult septic_radical_root(Complex alpha, Complex beta, Complex gamma, Complex delta,
                                  const RadicalIterConfig& cfg) {
    cfg.validate();
    const Complex phase = turn(cfg.k / 7.0);
    // G(u): root of t^7 + gamma t - u = 0 by v fixed-point steps from 0.
    auto G = [&](Complex u) {
        return run_fixed_point([&](Complex t) { return phase * ppow(u - gamma * t, 1.0 / 7.0); }, 0.0, cfg.v,
                               cfg.tol, cfg.max_modulus)
            .x;
    };
    RadicalResult r;
    const FixedPointRun run = run_fixed_point(
        [&](Complex x) { return G(-delta - beta * x * x - alpha * x * x * x); }, 0.0, cfg.mu, cfg.tol, cfg.max_modulus);
    const Complex x = run.x;
    r.iterations = run.iterations;
    r.status = run.status;
    r.fixed_point_residual = run.last_move;
    r.root = x;
    polish(r, Polynomial({delta, gamma, beta, alpha, 0.0, 0.0, 0.0, 1.0}));
    return r;
}

}  // namespace polyroots
