#include "polyroots/closedform.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "polyroots/grim.hpp"
#include "polyroots/linalg.hpp"

namespace polyroots {

namespace {

bool all_real(const Polynomial& p) {
    for (const Complex& c : p.coeffs())
        if (c.imag() != 0.0) return false;
    return true;
}

// Newton steps that are kept only while they lower the scaled residual.
Complex guarded_polish(const Polynomial& p, Complex x, int steps = 3) {
    double r = p.scaled_residual(x);
    for (int i = 0; i < steps && r > 0.0; ++i) {
        auto [v, d] = p.eval_with_derivative(x);
        if (d == Complex(0.0)) break;
        const Complex y = x - v / d;
        const double ry = p.scaled_residual(y);
        if (!(ry < r)) break;
        x = y;
        r = ry;
    }
    return x;
}

RootReport finish(const Polynomial& p, const std::vector<Complex>& roots, const char* method) {
    RootReport rep;
    rep.method = method;
    for (const Complex& x : roots) rep.roots.push_back(make_entry(p, guarded_polish(p, x)));
    rep.sort();
    return rep;
}

// Roots of the monic x^2 + a1 x + a0: x = -w, w = a1/2 +- sqrt(a1^2/4 - a0).
std::pair<Complex, Complex> quadratic_roots(Complex a1, Complex a0) {
    const Complex half = a1 / 2.0;
    const Complex rad = std::sqrt(half * half - a0);
    const Complex wp = half + rad;
    const Complex wm = half - rad;
    const Complex wbig = std::abs(wp) >= std::abs(wm) ? wp : wm;
    if (wbig == Complex(0.0)) return {0.0, 0.0};
    const Complex x1 = -wbig;
    return {x1, a0 / x1};
}

std::vector<Complex> cubic_roots(const Polynomial& m, bool real_coeffs) {
    const Complex a2 = m[2], a1 = m[1], a0 = m[0];
    const Complex shift = a2 / 3.0;
    const Complex alpha = a1 - a2 * a2 / 3.0;
    const Complex beta = 2.0 * a2 * a2 * a2 / 27.0 - a2 * a1 / 3.0 + a0;

    std::vector<Complex> t;
    const Complex disc = beta * beta / 4.0 + alpha * alpha * alpha / 27.0;
    if (real_coeffs && disc.real() < 0.0) {
        const double tau = std::sqrt(-alpha.real() / 3.0);
        const double c = std::clamp(-beta.real() / (2.0 * tau * tau * tau), -1.0, 1.0);
        const double theta = std::acos(c);
        for (int k = 0; k < 3; ++k)
            t.push_back(2.0 * tau * std::cos((theta - 2.0 * std::numbers::pi * k) / 3.0));
    } else {
        // z = k1^3 solves z^2 + beta z - alpha^3/27 = 0; take the larger root.
        const Complex rad = std::sqrt(beta * beta + 4.0 * alpha * alpha * alpha / 27.0);
        const Complex zp = (-beta + rad) / 2.0;
        const Complex zm = (-beta - rad) / 2.0;
        const Complex z = std::abs(zp) >= std::abs(zm) ? zp : zm;
        Complex t1 = 0.0;
        if (z != Complex(0.0)) {
            const Complex k1 = (real_coeffs && z.imag() == 0.0) ? Complex(std::cbrt(z.real())) : std::pow(z, 1.0 / 3.0);
            const Complex k2 = -alpha / (3.0 * k1);
            t1 = k1 + k2;
        }
        // Cofactor t^2 + t1 t + (t1^2 + alpha).
        const auto [t2, t3] = quadratic_roots(t1, t1 * t1 + alpha);
        t = {t1, t2, t3};
    }
    for (Complex& v : t) v -= shift;
    return t;
}

struct QuarticSplit {
    Complex omega;
    Polynomial plus, minus;
    double residual = 0.0;
};

double product_mismatch(const Polynomial& a, const Polynomial& b, const Polynomial& f) {
    const Polynomial prod = a * b;
    double r = 0.0;
    for (int i = 0; i <= std::max(prod.degree(), f.degree()); ++i) r = std::max(r, std::abs(prod[i] - f[i]));
    return r;
}

QuarticSplit quartic_split(const Polynomial& m) {
    const Complex c3 = m[3], c2 = m[2], c1 = m[1], c0 = m[0];
    const Complex A = c3 / 2.0;
    const Complex b0 = c2 / 2.0;
    // (A B - c1/2)^2 - (B^2 - c0)(A^2 - Omega) = 0 with B = (c2 - Omega)/2.
    const Complex g0 = A * b0 - c1 / 2.0, g1 = -A / 2.0;
    const Complex h0 = b0 * b0 - c0, h1 = -b0, h2 = 0.25;
    const Complex k0 = A * A, k1 = -1.0;
    const Polynomial resolvent({g0 * g0 - h0 * k0, 2.0 * g0 * g1 - (h0 * k1 + h1 * k0),
                                g1 * g1 - (h1 * k1 + h2 * k0), -h2 * k1});
    const std::vector<Complex> omegas = cubic_roots(resolvent.monic(), all_real(resolvent));

    QuarticSplit best;
    best.residual = -1.0;
    for (const Complex& om : omegas) {
        const Complex B = (c2 - om) / 2.0;
        Complex S = std::sqrt(A * A - om);
        Complex T0 = std::sqrt(B * B - c0);
        // The x^1 coefficient fixes S T = A B - c1/2; derive the smaller
        // square root from the larger one, which is well conditioned.
        const Complex st = A * B - c1 / 2.0;
        if (std::abs(S) >= std::abs(T0) && S != Complex(0.0))
            T0 = st / S;
        else if (T0 != Complex(0.0))
            S = st / T0;
        for (double sign : {1.0, -1.0}) {
            const Complex T = sign * T0;
            const Polynomial plus({B + T, A + S, 1.0});
            const Polynomial minus({B - T, A - S, 1.0});
            const double r = product_mismatch(plus, minus, m);
            if (best.residual < 0.0 || r < best.residual) best = {om, plus, minus, r};
        }
    }
    return best;
}

}  // namespace

RootReport solve_quadratic(const Polynomial& p) {
    if (p.degree() != 2) throw std::domain_error("solve_quadratic: degree must be 2");
    const Polynomial m = p.monic();
    const auto [x1, x2] = quadratic_roots(m[1], m[0]);
    return finish(p, {x1, x2}, "closed");
}

RootReport solve_cubic(const Polynomial& p) {
    if (p.degree() != 3) throw std::domain_error("solve_cubic: degree must be 3");
    return finish(p, cubic_roots(p.monic(), all_real(p)), "closed");
}

RootReport solve_quartic(const Polynomial& p) {
    if (p.degree() != 4) throw std::domain_error("solve_quartic: degree must be 4");
    const QuarticSplit s = quartic_split(p.monic());
    const auto [a1, a2] = quadratic_roots(s.plus[1], s.plus[0]);
    const auto [b1, b2] = quadratic_roots(s.minus[1], s.minus[0]);
    return finish(p, {a1, a2, b1, b2}, "closed");
}

RootReport solve_closed(const Polynomial& p) {
    switch (p.degree()) {
        case 1: {
            RootReport r;
            r.method = "closed";
            r.roots.push_back(make_entry(p, -p[0] / p[1]));
            return r;
        }
        case 2: return solve_quadratic(p);
        case 3: return solve_cubic(p);
        case 4: return solve_quartic(p);
        default: throw std::domain_error("solve_closed: degree must be 1..4");
    }
}

namespace {

class SplitSystem {
public:
    explicit SplitSystem(const Polynomial& f) : f_(f), n_(f.degree()), h_(n_ / 2) {}

    int unknowns() const { return 2 * h_ - 3; }

    // Assembles w+ and w- from x = [Omega_1..Omega_{h-1}, L_0..L_{h-3}].
    // Each R_j takes the square-root sign closest to r_ref[j]; r_out gets the
    // chosen values.
    void assemble(const std::vector<Complex>& x, const std::vector<Complex>& r_ref, std::vector<Complex>& plus,
                  std::vector<Complex>& minus, std::vector<Complex>* r_out, std::vector<Complex>* omega_out) const {
        std::vector<Complex> omega(h_), L(h_);
        omega[0] = f_[0];
        for (int j = 1; j < h_; ++j) omega[j] = x[j - 1];
        for (int j = 0; j + 2 < h_; ++j) L[j] = x[h_ - 1 + j];
        L[h_ - 1] = f_[n_ - 1];
        L[h_ - 2] = f_[n_ - 2] - omega[h_ - 1];
        plus.assign(h_ + 1, 0.0);
        minus.assign(h_ + 1, 0.0);
        plus[h_] = minus[h_] = 1.0;
        if (r_out) r_out->assign(h_, 0.0);
        for (int j = 0; j < h_; ++j) {
            Complex R = std::sqrt(L[j] * L[j] / 4.0 - omega[j]);
            if (std::abs(-R - r_ref[j]) < std::abs(R - r_ref[j])) R = -R;
            plus[j] = L[j] / 2.0 + R;
            minus[j] = L[j] / 2.0 - R;
            if (r_out) (*r_out)[j] = R;
        }
        if (omega_out) *omega_out = omega;
    }

    // Mismatch at x^1 .. x^{n-3}; the other coefficients hold by construction.
    std::vector<Complex> residual(const std::vector<Complex>& x, const std::vector<Complex>& r_ref) const {
        std::vector<Complex> plus, minus;
        assemble(x, r_ref, plus, minus, nullptr, nullptr);
        std::vector<Complex> out(unknowns());
        for (int k = 1; k <= n_ - 3; ++k) {
            Complex s = 0.0;
            for (int i = std::max(0, k - h_); i <= std::min(k, h_); ++i) s += plus[i] * minus[k - i];
            out[k - 1] = s - f_[k];
        }
        return out;
    }

    double full_mismatch(const std::vector<Complex>& plus, const std::vector<Complex>& minus) const {
        return product_mismatch(Polynomial(plus), Polynomial(minus), f_);
    }

private:
    const Polynomial& f_;
    int n_;
    int h_;
};

double norm_inf(const std::vector<Complex>& v) {
    double m = 0.0;
    for (const Complex& c : v) m = std::max(m, std::abs(c));
    return m;
}

}  // namespace

SquareDifferenceSplit square_difference_split(const Polynomial& f_in, std::uint64_t seed) {
    const int n = f_in.degree();
    if (n < 4 || n > 10 || n % 2 != 0) throw std::domain_error("square_difference_split: degree must be 4, 6, 8 or 10");
    if (std::abs(f_in.lead() - 1.0) > 1e-14) throw std::domain_error("square_difference_split: polynomial must be monic");
    const Polynomial f = f_in.monic();
    double fnorm = 0.0;
    for (const Complex& c : f.coeffs()) fnorm = std::max(fnorm, std::abs(c));
    const double accept = 1e-9 * (1.0 + fnorm);

    SquareDifferenceSplit out;
    if (n == 4) {
        const QuarticSplit q = quartic_split(f);
        out.omega = {f[0], q.omega, 1.0};
        out.w_plus = q.plus;
        out.w_minus = q.minus;
        out.residual = q.residual;
        return out;
    }

    const int h = n / 2;
    const SplitSystem sys(f);
    const int m = sys.unknowns();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const double rho = f[0] == Complex(0.0) ? cauchy_bound(f) / 2.0 : std::pow(std::abs(f[0]), 1.0 / n);

    double best_res = -1.0;
    for (int start = 0; start < 64; ++start) {
        // Start from a factor pair whose roots sit on a circle of radius rho,
        // split into halves at random.
        std::vector<Complex> pts(n);
        const double radius = rho * (0.75 + 0.5 * unif(rng));
        for (Complex& z : pts) z = std::polar(radius, 2.0 * std::numbers::pi * unif(rng));
        std::shuffle(pts.begin(), pts.end(), rng);
        const Polynomial P0 = Polynomial::from_roots({pts.begin(), pts.begin() + h});
        const Polynomial M0 = Polynomial::from_roots({pts.begin() + h, pts.end()});
        std::vector<Complex> x(m), r_ref(h);
        for (int j = 1; j < h; ++j) x[j - 1] = P0[j] * M0[j];
        for (int j = 0; j + 2 < h; ++j) x[h - 1 + j] = P0[j] + M0[j];
        for (int j = 0; j < h; ++j) r_ref[j] = (P0[j] - M0[j]) / 2.0;

        std::vector<Complex> r = sys.residual(x, r_ref);
        double rn = norm_inf(r);
        for (int it = 0; it < 80 && rn > 1e-15 * (1.0 + fnorm); ++it) {
            ComplexMatrix J(m, std::vector<Complex>(m));
            for (int k = 0; k < m; ++k) {
                const double step = 1e-6 * (1.0 + std::abs(x[k]));
                std::vector<Complex> xp = x, xm = x;
                xp[k] += step;
                xm[k] -= step;
                const std::vector<Complex> fp = sys.residual(xp, r_ref);
                const std::vector<Complex> fm = sys.residual(xm, r_ref);
                for (int i = 0; i < m; ++i) J[i][k] = (fp[i] - fm[i]) / (2.0 * step);
            }
            std::vector<Complex> rhs(m), dx;
            for (int i = 0; i < m; ++i) rhs[i] = -r[i];
            if (!lu_solve(J, rhs, dx)) break;
            double lambda = 1.0;
            bool accepted = false;
            for (int halving = 0; halving <= 20; ++halving, lambda *= 0.5) {
                std::vector<Complex> xt(m);
                for (int i = 0; i < m; ++i) xt[i] = x[i] + lambda * dx[i];
                const std::vector<Complex> rt = sys.residual(xt, r_ref);
                const double rtn = norm_inf(rt);
                if (rtn < rn) {
                    // Follow the sqrt branch along the accepted path.
                    std::vector<Complex> pl, mi, rr;
                    sys.assemble(xt, r_ref, pl, mi, &rr, nullptr);
                    x = xt;
                    r_ref = rr;
                    r = rt;
                    rn = rtn;
                    accepted = true;
                    break;
                }
            }
            if (!accepted) break;
        }

        std::vector<Complex> plus, minus, omega;
        sys.assemble(x, r_ref, plus, minus, nullptr, &omega);
        const double res = sys.full_mismatch(plus, minus);
        if (best_res < 0.0 || res < best_res) {
            best_res = res;
            out.omega = omega;
            out.omega.push_back(1.0);
            out.l_vars.assign(x.begin() + (h - 1), x.end());
            out.w_plus = Polynomial(plus);
            out.w_minus = Polynomial(minus);
            out.residual = res;
        }
        if (res <= accept) return out;
    }
    RootReport partial;
    partial.method = "split";
    char buf[128];
    std::snprintf(buf, sizeof buf, "best reconstruction residual %.3e", best_res);
    partial.warnings.push_back(buf);
    throw NoConvergenceError("square_difference_split: no start reached the target residual", partial);
}

RootReport solve_by_split(const Polynomial& f, std::uint64_t seed) {
    const SquareDifferenceSplit s = square_difference_split(f, seed);
    RootReport rep;
    rep.method = "split";
    std::vector<Complex> roots;
    for (const Polynomial* half : {&s.w_minus, &s.w_plus}) {
        if (half->degree() <= 4) {
            for (const Complex& z : solve_closed(*half).values()) roots.push_back(z);
            continue;
        }
        // Degree-5 half: GRIM, then deflate whatever it misses to closed form.
        std::vector<Complex> found;
        try {
            found = grim_solve(*half).values();
        } catch (const EmptyResultError&) {
        }
        if (int(found.size()) > half->degree()) found.resize(half->degree());
        Polynomial rest = *half;
        for (const Complex& z : found) {
            std::vector<Complex> q(rest.degree());
            Complex carry = rest.lead();
            for (int i = rest.degree() - 1; i >= 0; --i) {
                q[i] = carry;
                carry = rest[i] + carry * z;
            }
            rest = Polynomial(q);
        }
        if (rest.degree() >= 1) {
            rep.warnings.push_back("grim missed roots of a quintic half; remainder solved in closed form");
            for (const Complex& z : solve_closed(rest).values()) found.push_back(z);
        }
        roots.insert(roots.end(), found.begin(), found.end());
    }
    for (const Complex& z : roots) {
        Complex x = z;
        try {
            x = newton_polish(f, z, 1e-14, 20).root;
        } catch (const NoConvergenceError& e) {
            if (e.partial().roots.front().residual < f.scaled_residual(z)) x = e.partial().roots.front().root;
        }
        rep.roots.push_back(make_entry(f, x));
    }
    rep.sort();
    return rep;
}

}  // namespace polyroots
