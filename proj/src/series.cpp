#include "polyroots/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>

namespace polyroots {

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational operator+(Rational a, Rational b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
Rational operator-(Rational a, Rational b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
Rational operator*(Rational a, Rational b) { return {a.num * b.num, a.den * b.den}; }
Rational operator/(Rational a, Rational b) { return {a.num * b.den, a.den * b.num}; }

std::string to_string(const Rational& r) {
    if (r.den == 1) return std::to_string(r.num);
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

Polynomial Trinomial::polynomial() const {
    std::vector<Complex> c(s + 1, 0.0);
    c[s] = 1.0;
    c[b] -= alpha;
    c[0] -= q;
    return Polynomial(std::move(c));
}

void Trinomial::validate() const {
    if (s < 2) throw std::domain_error("Trinomial: s must be >= 2");
    if (b < 1 || b > s - 1) throw std::domain_error("Trinomial: b must satisfy 1 <= b <= s-1");
    if (q == Complex(0.0)) throw std::domain_error("Trinomial: q must be nonzero");
}

Polynomial Quadrinomial::polynomial() const {
    std::vector<Complex> co(s + 1, 0.0);
    co[s] = 1.0;
    co[r] += c;
    co[1] += alpha;
    co[0] -= b;
    return Polynomial(std::move(co));
}

void Quadrinomial::validate() const {
    if (s < 4) throw std::domain_error("Quadrinomial: s must be >= 4");
    if (r < 2 || r > s - 2) throw std::domain_error("Quadrinomial: r must satisfy 2 <= r <= s-2");
    if (alpha == Complex(0.0)) throw std::domain_error("Quadrinomial: alpha must be nonzero");
}

namespace {

int mod(long long a, int m) {
    long long r = a % m;
    return int(r < 0 ? r + m : r);
}

Complex unit_root(long long numer, int s) {
    return std::polar(1.0, 2.0 * std::numbers::pi * mod(numer, s) / s);
}

char* format_warning(char* buf, std::size_t n, const char* fmt, double v) {
    std::snprintf(buf, n, fmt, v);
    return buf;
}

// Polishes `raw` against p and fills the residual fields.
void polish_into(SeriesRoot& out, const Polynomial& p) {
    out.raw_residual = p.scaled_residual(out.raw);
    out.root = out.raw;
    out.residual = out.raw_residual;
    try {
        const PolishResult pr = newton_polish(p, out.raw, 1e-14, 60);
        out.root = pr.root;
        out.residual = pr.residual;
        out.polished = true;
    } catch (const NoConvergenceError& e) {
        const RootEntry& best = e.partial().roots.front();
        if (best.residual < out.residual) {
            out.root = best.root;
            out.residual = best.residual;
        }
        out.polished = out.residual <= 1e-10;
        if (!out.polished) out.warnings.push_back("newton polish did not reach the residual target");
    }
}

}  // namespace

SeriesValue reciprocal_series_root(Complex alpha, Complex s, const SeriesConfig& cfg) {
    if (alpha == Complex(0.0)) throw std::domain_error("reciprocal_series_root: alpha must be nonzero");
    SeriesAccumulator acc(cfg);
    if (!acc.add(alpha) || s == Complex(0.0)) {
        SeriesValue v = acc.result();
        v.status = SeriesStatus::converged;
        return v;
    }
    const Complex ratio = s / (alpha * alpha);
    Complex t = s / alpha;
    for (int m = 1; acc.add(t); ++m) t *= -2.0 * (2.0 * m - 1.0) / (m + 1.0) * ratio;
    return acc.result();
}

Complex trinomial_series_term(const Trinomial& t, int k, int n) {
    t.validate();
    if (n < 0) throw std::invalid_argument("trinomial_series_term: n must be >= 0");
    if (n > 0 && t.alpha == Complex(0.0)) return 0.0;
    const int s = t.s;
    // Gamma(a - n + 1) = Gamma((1 + bn + s - ns)/s) has a pole when the
    // numerator is a nonpositive multiple of s.
    const long long num = 1LL + 1LL * t.b * n + s - 1LL * n * s;
    if (num <= 0 && num % s == 0) return 0.0;

    const double a = (1.0 + double(t.b) * n) / s;
    const double x = double(num) / s;
    int sign = 1;
    const double log_g = log_abs_gamma(a) - log_abs_gamma(x, &sign);
    const Complex log_q = std::log(t.q);
    const double e = a - n;
    double log_mag = -std::lgamma(n + 1.0) - std::log(double(s)) + log_g + e * log_q.real();
    double phase = e * log_q.imag() + 2.0 * std::numbers::pi * mod(1LL * k * (1 + 1LL * t.b * n), s) / s;
    if (n > 0) {
        log_mag += n * std::log(std::abs(t.alpha));
        phase += n * std::arg(t.alpha);
    }
    if (sign < 0) phase += std::numbers::pi;
    return std::polar(std::exp(log_mag), phase);
}

SeriesValue trinomial_series_sum(const Trinomial& t, int k, const SeriesConfig& cfg) {
    t.validate();
    SeriesAccumulator acc(cfg, t.s);
    for (int n = 0; acc.add(trinomial_series_term(t, k, n)); ++n) {
    }
    return acc.result();
}

SeriesRoot trinomial_series_root(const Trinomial& t, int k, const SeriesConfig& cfg) {
    const SeriesValue v = trinomial_series_sum(t, k, cfg);
    SeriesRoot out;
    out.raw = v.value;
    out.terms_used = v.terms_used;
    out.status = v.status;
    out.branch = k;
    if (v.status == SeriesStatus::diverged) {
        out.warnings.push_back("series diverged on this branch; value is the optimally truncated partial sum");
        out.raw_residual = out.residual = t.polynomial().scaled_residual(out.raw);
        out.root = out.raw;
        return out;
    }
    if (v.status == SeriesStatus::truncated) out.warnings.push_back("series truncated at max_terms");
    polish_into(out, t.polynomial());
    return out;
}

PFQRootForm trinomial_pfq_root(const Trinomial& t, int k) {
    t.validate();
    const int s = t.s, b = t.b, d = s - b;
    PFQRootForm form;
    form.k = k;

    std::int64_t bb = 1, dd = 1, ss = 1;
    for (int i = 0; i < b; ++i) bb *= b;
    for (int i = 0; i < d; ++i) dd *= d;
    for (int i = 0; i < s; ++i) ss *= s;
    form.arg_coefficient = Rational((d % 2 ? -1 : 1) * bb * dd, ss);

    Complex alpha_s = 1.0, q_d = 1.0;
    for (int i = 0; i < s; ++i) alpha_s *= t.alpha;
    for (int i = 0; i < d; ++i) q_d *= t.q;
    const Complex argument = form.arg_coefficient.value() * alpha_s / q_d;

    double j_fact = 1.0;
    Complex alpha_j = 1.0;
    for (int j = 0; j < s; ++j) {
        if (j > 0) {
            j_fact *= j;
            alpha_j *= t.alpha;
        }
        PFQGroup g;
        g.residue = j;
        g.argument = argument;
        const Rational a_j(1 + b * j, s);
        const Rational c_j = a_j - Rational(j) + Rational(1);
        g.power_of_q = Rational(1 + b * j - s * j, s);

        std::vector<Rational> upper, lower;
        for (int i = 0; i < b; ++i) upper.push_back((a_j + Rational(i)) / Rational(b));
        for (int i = 1; i <= d; ++i) upper.push_back((Rational(i) - c_j) / Rational(d));
        for (int i = 1; i <= s; ++i)
            if (i != s - j) lower.push_back(Rational(j + i, s));
        // Equal upper/lower pairs cancel.
        for (auto it = upper.begin(); it != upper.end();) {
            auto hit = std::find(lower.begin(), lower.end(), *it);
            if (hit != lower.end()) {
                lower.erase(hit);
                it = upper.erase(it);
            } else {
                ++it;
            }
        }
        g.upper = upper;
        g.lower = lower;
        for (const Rational& r : upper) g.params.upper.emplace_back(r.value(), 0.0);
        for (const Rational& r : lower) g.params.lower.emplace_back(r.value(), 0.0);

        if (c_j.is_nonpositive_integer() || alpha_j == Complex(0.0)) {
            g.prefactor = 0.0;
        } else {
            g.prefactor = alpha_j / j_fact * unit_root(1LL * k * (1 + b * j), s) / double(s) *
                          gamma_real(a_j.value()) * recip_gamma_real(c_j.value());
        }
        form.groups.push_back(std::move(g));
    }
    return form;
}

SeriesValue evaluate_pfq_root(const PFQRootForm& form, Complex q, const SeriesConfig& cfg) {
    const Complex log_q = std::log(q);
    SeriesValue out;
    out.status = SeriesStatus::converged;
    for (const PFQGroup& g : form.groups) {
        if (g.prefactor == Complex(0.0)) continue;
        const SeriesValue v = pfq_eval(g.params, g.argument, cfg);
        out.value += g.prefactor * std::exp(g.power_of_q.value() * log_q) * v.value;
        out.terms_used += v.terms_used;
        if (v.status == SeriesStatus::diverged ||
            (v.status == SeriesStatus::truncated && out.status == SeriesStatus::converged))
            out.status = v.status;
    }
    return out;
}

RootReport bring_jerrard_quintic(Complex alpha, Complex q, const SeriesConfig& cfg) {
    const Trinomial t{5, 1, -alpha, q};
    const Polynomial p({-q, alpha, 0.0, 0.0, 0.0, 1.0});
    RootReport rep;
    rep.method = "series";
    for (int k = 0; k < 5; ++k) {
        char buf[96];
        if (q == Complex(0.0)) {
            std::snprintf(buf, sizeof buf, "branch %d: q = 0 has no series form; oracle fallback", k);
            rep.warnings.push_back(buf);
            continue;
        }
        const SeriesRoot r = trinomial_series_root(t, k, cfg);
        if (r.status == SeriesStatus::diverged || r.residual > 1e-10) {
            std::snprintf(buf, sizeof buf, "branch %d: series failed; oracle fallback", k);
            rep.warnings.push_back(buf);
            continue;
        }
        bool dup = false;
        for (const RootEntry& e : rep.roots)
            if (std::abs(e.root - r.root) <= 1e-6) dup = true;
        if (dup) {
            std::snprintf(buf, sizeof buf, "branch %d: duplicates another branch; oracle fallback", k);
            rep.warnings.push_back(buf);
            continue;
        }
        rep.roots.push_back(make_entry(p, r.root, k, r.terms_used));
    }
    if (rep.roots.size() < 5) {
        const RootReport oracle = all_roots_oracle(p);
        std::vector<bool> used(rep.roots.size(), false);
        std::vector<RootEntry> extra;
        for (const RootEntry& o : oracle.roots) {
            bool matched = false;
            for (std::size_t i = 0; i < rep.roots.size(); ++i)
                if (!used[i] && std::abs(rep.roots[i].root - o.root) <= 1e-6) {
                    used[i] = matched = true;
                    break;
                }
            if (!matched) extra.push_back(make_entry(p, o.root));
        }
        for (const RootEntry& e : extra)
            if (rep.roots.size() < 5) rep.roots.push_back(e);
    }
    rep.sort();
    return rep;
}

SeriesRoot quadrinomial_series_root(const Quadrinomial& w, const SeriesConfig& cfg) {
    w.validate();
    SeriesRoot out;
    const Complex z = w.b / w.alpha;
    char buf[128];
    if (w.c != Complex(0.0)) {
        const double r1 = std::abs(w.c * w.b / (w.alpha * w.alpha));
        const double r2 = std::abs(std::pow(w.b, w.s - 2) / (w.c * std::pow(w.alpha, w.s - 2)));
        if (!(r1 < 1.0)) out.warnings.push_back(format_warning(buf, sizeof buf, "advisory check |c b/alpha^2| = %.3g is not < 1", r1));
        if (!(r2 < 1.0))
            out.warnings.push_back(format_warning(buf, sizeof buf, "advisory check |b^(s-2)/(c alpha^(s-2))| = %.3g is not < 1", r2));
    }
    if (z == Complex(0.0)) {
        out.status = SeriesStatus::converged;
        out.terms_used = 1;
        out.polished = true;
        return out;
    }

    const Complex log_z = std::log(z), log_alpha = std::log(w.alpha);
    const bool has_c = w.c != Complex(0.0);
    const Complex log_c = has_c ? std::log(w.c) : Complex(0.0);
    SeriesAccumulator acc(cfg);
    acc.add(z);
    for (int n = 1; !acc.done(); ++n) {
        Complex term = 0.0;
        for (int j = has_c ? 0 : n; j <= n; ++j) {
            const double e = double(w.r) * n + double(w.s - w.r) * j;
            const Complex lt = -std::lgamma(j + 1.0) - std::lgamma(n - j + 1.0) + double(n - j) * log_c -
                               double(n) * log_alpha + std::lgamma(e + 1.0) - std::lgamma(e - n + 2.0) +
                               (e - n + 1.0) * log_z;
            term += std::exp(lt);
        }
        if (n % 2) term = -term;
        acc.add(term);
    }
    const SeriesValue v = acc.result();
    out.raw = v.value;
    out.terms_used = v.terms_used;
    out.status = v.status;
    if (v.status == SeriesStatus::diverged) {
        out.warnings.push_back("series diverged; value is the optimally truncated partial sum");
        out.raw_residual = out.residual = w.polynomial().scaled_residual(out.raw);
        out.root = out.raw;
        return out;
    }
    if (v.status == SeriesStatus::truncated) out.warnings.push_back("series truncated at max_terms");
    polish_into(out, w.polynomial());
    return out;
}

Complex adjacent_cubic_seed(Complex c, Complex a, Complex b, Complex q) {
    if (c == Complex(0.0)) throw std::domain_error("adjacent_cubic_seed: c must be nonzero");
    const Complex d0 = -a * a + 3.0 * b * c;
    const Complex d1 = -2.0 * a * a * a + 9.0 * a * b * c + 27.0 * c * c * q;
    const Complex rad = std::sqrt(4.0 * d0 * d0 * d0 + d1 * d1);
    Complex D = d1 + rad;
    if (std::abs(D) <= 1e-14 * (1.0 + std::abs(d1))) D = d1 - rad;
    if (std::abs(D) <= 1e-14 * (1.0 + std::abs(d1))) return -a / (3.0 * c);
    const Complex Dc = std::pow(D, 1.0 / 3.0);
    const double cbrt2 = std::cbrt(2.0);
    return -a / (3.0 * c) - cbrt2 * d0 / (3.0 * c * Dc) + Dc / (3.0 * cbrt2 * c);
}

AdjacentResult adjacent_septic_root(Complex c, Complex a, Complex b, Complex q, const SeriesConfig& cfg) {
    cfg.validate();
    const Polynomial septic({-q, b, a, c, 0.0, 0.0, 0.0, 1.0});
    const Polynomial cubic({-q, b, a, c});
    AdjacentResult out;
    out.z_in = adjacent_cubic_seed(c, a, b, q);
    out.z_in_residual = septic.scaled_residual(out.z_in);
    out.series_value = out.z_in;
    out.series_residual = out.z_in_residual;

    // With x = z_in + y and G(y) = g(z_in + y)/y the septic reads
    // y = h(y) = -(z_in + y)^7 / G(y); Lagrange inversion gives
    // y = sum_n (1/n) [y^(n-1)] h(y)^n.
    const Polynomial shifted = cubic.taylor_shift(out.z_in);
    const Complex G0 = shifted[1], G1 = shifted[2], G2 = shifted[3];
    if (std::abs(G0) == 0.0) {
        out.warnings.push_back("cubic derivative vanishes at z_in; correction series skipped");
        out.status = SeriesStatus::diverged;
    } else {
        const int N = cfg.max_terms;
        std::vector<Complex> inv(N, 0.0), h(N, 0.0), lift(N, 0.0);
        inv[0] = 1.0 / G0;
        for (int m = 1; m < N; ++m) {
            Complex acc = G1 * inv[m - 1];
            if (m >= 2) acc += G2 * inv[m - 2];
            inv[m] = -acc / G0;
        }
        // (z_in + y)^7
        double binom = 1.0;
        std::vector<Complex> seventh(8, 0.0);
        for (int i = 0; i <= 7; ++i) {
            seventh[i] = binom * (out.z_in == Complex(0.0) ? (i == 7 ? Complex(1.0) : Complex(0.0))
                                                            : std::pow(out.z_in, 7 - i));
            binom = binom * (7 - i) / (i + 1);
        }
        for (int m = 0; m < N; ++m) {
            Complex acc = 0.0;
            for (int i = 0; i <= std::min(m, 7); ++i) acc += seventh[i] * inv[m - i];
            h[m] = -acc;
        }
        SeriesAccumulator acc(cfg);
        acc.add(out.z_in);
        std::vector<Complex> power = h;  // h^n truncated to degree N-1
        for (int n = 1; n < N; ++n) {
            if (!acc.add(power[n - 1] / double(n))) break;
            std::vector<Complex> next(N, 0.0);
            for (int i = 0; i < N; ++i) {
                if (power[i] == Complex(0.0)) continue;
                for (int j = 0; i + j < N; ++j) next[i + j] += power[i] * h[j];
            }
            power = std::move(next);
        }
        const SeriesValue v = acc.result();
        out.terms_used = v.terms_used;
        out.status = v.status;
        if (v.status == SeriesStatus::diverged) {
            out.warnings.push_back("correction series diverged; reporting z_in");
        } else {
            out.series_value = v.value;
            out.series_residual = septic.scaled_residual(v.value);
            if (v.status == SeriesStatus::truncated) out.warnings.push_back("correction series truncated at max_terms");
        }
    }

    out.root = out.series_value;
    out.residual = out.series_residual;
    try {
        const PolishResult pr = newton_polish(septic, out.series_value, 1e-14, 60);
        out.root = pr.root;
        out.residual = pr.residual;
    } catch (const NoConvergenceError& e) {
        const RootEntry& best = e.partial().roots.front();
        if (best.residual < out.residual) {
            out.root = best.root;
            out.residual = best.residual;
        }
        if (out.residual > 1e-10) out.warnings.push_back("newton polish did not reach the residual target");
    }
    return out;
}

SeriesRoot general_poly_series_root(const Polynomial& p, Complex center, int order, const SeriesConfig& cfg) {
    cfg.validate();
    if (p.degree() < 1) throw std::domain_error("general_poly_series_root: degree must be >= 1");
    if (order < 0) throw std::invalid_argument("general_poly_series_root: order must be >= 0");
    const Polynomial sh = p.taylor_shift(center);
    const Complex a0 = sh[0], a1 = sh[1];
    if (a1 == Complex(0.0)) throw std::domain_error("general_poly_series_root: p'(center) must be nonzero");
    SeriesRoot out;
    if (a0 == Complex(0.0)) {
        out.root = out.raw = center;
        out.status = SeriesStatus::converged;
        out.terms_used = 1;
        out.polished = true;
        return out;
    }
    const Complex lead = -a0 / a1;

    // x_j = a0^(j-1) a_j / (-a1)^j; parts with x_j = 0 never contribute.
    std::vector<int> parts;
    std::vector<Complex> xs;
    for (int j = 2; j <= sh.degree(); ++j) {
        if (sh[j] == Complex(0.0)) continue;
        parts.push_back(j);
        xs.push_back(std::pow(a0, j - 1) * sh[j] / std::pow(-a1, j));
    }
    if (!xs.empty() && std::abs(xs.front()) >= 1.0)
        out.warnings.push_back("advisory: first-order term is not small; series may diverge");

    // t_E = sum over n_j with sum j n_j = E of E!/(n1! prod n_j!) prod x_j^n_j,
    // n1 = 1 + sum (j-1) n_j.
    std::vector<Complex> tE(order + 1, 0.0);
    std::vector<int> counts(parts.size(), 0);
    std::function<void(std::size_t, int, int, double, Complex)> walk = [&](std::size_t idx, int E, int n1,
                                                                            double log_den, Complex prod) {
        if (idx == parts.size()) {
            tE[E] += std::exp(std::lgamma(E + 1.0) - std::lgamma(n1 + 1.0) - log_den) * prod;
            return;
        }
        const int j = parts[idx];
        Complex pw = 1.0;
        for (int c = 0; E + c * j <= order; ++c) {
            walk(idx + 1, E + c * j, n1 + c * (j - 1), log_den + std::lgamma(c + 1.0), prod * pw);
            pw *= xs[idx];
        }
    };
    walk(0, 0, 1, 0.0, 1.0);

    SeriesAccumulator acc(cfg);
    for (int E = 0; E <= order && acc.add(tE[E]); ++E) {
    }
    const SeriesValue v = acc.result();
    out.raw = center + lead * v.value;
    out.terms_used = v.terms_used;
    out.status = v.status;
    if (v.status == SeriesStatus::diverged)
        out.warnings.push_back("series diverged; polishing the optimally truncated partial sum");
    else if (v.status == SeriesStatus::truncated)
        out.warnings.push_back("series truncated at the requested order");
    polish_into(out, p);
    return out;
}

}  // namespace polyroots
