#include "polyroots/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <sstream>

#include "polyroots/linalg.hpp"

namespace polyroots {

Polynomial::Polynomial(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {
    while (c_.size() > 1 && c_.back() == Complex(0.0)) c_.pop_back();
    if (c_.empty()) c_.push_back(0.0);
}

Polynomial Polynomial::from_roots(const std::vector<Complex>& roots, Complex lead) {
    std::vector<Complex> c{lead};
    for (const Complex& r : roots) {
        c.push_back(0.0);
        for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = c[i - 1] - r * c[i];
        c[0] = -r * c[0];
    }
    return Polynomial(std::move(c));
}

Complex Polynomial::eval(Complex x) const {
    Complex v = c_.back();
    for (std::size_t i = c_.size() - 1; i-- > 0;) v = v * x + c_[i];
    return v;
}

std::pair<Complex, Complex> Polynomial::eval_with_derivative(Complex x) const {
    Complex v = c_.back();
    Complex d = 0.0;
    for (std::size_t i = c_.size() - 1; i-- > 0;) {
        d = d * x + v;
        v = v * x + c_[i];
    }
    return {v, d};
}

double Polynomial::scaled_residual(Complex x) const {
    const double ax = std::abs(x);
    double scale = 0.0;
    for (std::size_t i = c_.size(); i-- > 0;) scale = scale * ax + std::abs(c_[i]);
    return std::abs(eval(x)) / std::max(1.0, scale);
}

Polynomial Polynomial::monic() const {
    if (is_zero()) throw std::domain_error("monic: zero polynomial");
    std::vector<Complex> c = c_;
    const Complex l = c.back();
    for (Complex& v : c) v /= l;
    c.back() = 1.0;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::derivative() const {
    if (c_.size() == 1) return Polynomial();
    std::vector<Complex> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = double(i) * c_[i];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::taylor_shift(Complex c) const {
    std::vector<Complex> a = c_;
    const std::size_t n = a.size();
    for (std::size_t k = 0; k + 1 < n; ++k)
        for (std::size_t i = n - 1; i-- > k;) a[i] += c * a[i + 1];
    return Polynomial(std::move(a));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    std::vector<Complex> c(a.c_.size() + b.c_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Complex> c(std::max(a.c_.size(), b.c_.size()), 0.0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Complex> c(std::max(a.c_.size(), b.c_.size()), 0.0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return Polynomial(std::move(c));
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double parse_real(const std::string& s, const std::string& whole) {
    if (s.empty()) throw std::invalid_argument("malformed number: '" + whole + "'");
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || !std::isfinite(v))
        throw std::invalid_argument("malformed number: '" + whole + "'");
    return v;
}

}  // namespace

Complex parse_complex(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("empty coefficient");
    if (s.back() != 'i' && s.back() != 'I') return {parse_real(s, text), 0.0};

    s.pop_back();
    // Split at the last sign that is not an exponent sign or the leading sign.
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    std::string re_part, im_part = s;
    if (split != std::string::npos) {
        re_part = s.substr(0, split);
        im_part = s.substr(split);
    }
    double im;
    if (im_part.empty() || im_part == "+")
        im = 1.0;
    else if (im_part == "-")
        im = -1.0;
    else
        im = parse_real(im_part, text);
    const double re = re_part.empty() ? 0.0 : parse_real(re_part, text);
    return {re, im};
}

Polynomial parse_polynomial(const std::string& text) {
    std::vector<Complex> c;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) c.push_back(parse_complex(trim(item)));
    if (c.empty()) throw std::invalid_argument("empty coefficient list");
    return Polynomial(std::move(c));
}

std::vector<Complex> RootReport::values() const {
    std::vector<Complex> v;
    v.reserve(roots.size());
    for (const RootEntry& e : roots) v.push_back(e.root);
    return v;
}

void RootReport::sort() {
    std::stable_sort(roots.begin(), roots.end(), [](const RootEntry& a, const RootEntry& b) {
        if (a.root.real() != b.root.real()) return a.root.real() < b.root.real();
        return a.root.imag() < b.root.imag();
    });
}

RootEntry make_entry(const Polynomial& p, Complex x, int branch, int iterations) {
    RootEntry e;
    e.root = x;
    e.residual = p.scaled_residual(x);
    e.branch = branch;
    e.iterations = iterations;
    return e;
}

double cauchy_bound(const Polynomial& p) {
    if (p.degree() < 1) throw std::domain_error("cauchy_bound: degree must be >= 1");
    const double lead = std::abs(p.lead());
    double m = 0.0;
    for (int k = 0; k < p.degree(); ++k) m = std::max(m, std::abs(p[k]) / lead);
    return 1.0 + m;
}

PolishResult newton_polish(const Polynomial& p, Complex x0, double tol, int max_iter) {
    if (p.degree() < 1) throw std::domain_error("newton_polish: degree must be >= 1");
    PolishResult best{x0, p.scaled_residual(x0), 0};
    if (best.residual <= tol) return best;
    Complex x = x0;
    for (int it = 1; it <= max_iter; ++it) {
        auto [v, d] = p.eval_with_derivative(x);
        if (std::abs(d) <= std::numeric_limits<double>::min() * 1e4) {
            x += 1e-8 * (1.0 + std::abs(x));
            continue;
        }
        x -= v / d;
        const double r = p.scaled_residual(x);
        if (r < best.residual) best = {x, r, it};
        if (r <= tol) return {x, r, it};
    }
    RootReport partial;
    partial.method = "newton";
    partial.roots.push_back(make_entry(p, best.root, -1, max_iter));
    throw NoConvergenceError("newton_polish: residual above tolerance after max_iter steps", partial);
}

RootReport all_roots_oracle(const Polynomial& p, double tol) {
    const int n = p.degree();
    if (n < 1) throw std::domain_error("all_roots_oracle: degree must be >= 1");
    RootReport report;
    report.method = "oracle";
    const Polynomial m = p.monic();
    if (n == 1) {
        report.roots.push_back(make_entry(p, -m[0]));
        return report;
    }

    const double r = cauchy_bound(m) / 2.0;
    std::vector<Complex> z(n);
    for (int k = 0; k < n; ++k)
        z[k] = std::polar(r, 2.0 * std::numbers::pi * (k + 0.25) / n);

    const double floor_res = 4.0 * n * std::numeric_limits<double>::epsilon();
    bool converged = false;
    int sweeps = 0;
    for (; sweeps < 500 && !converged; ++sweeps) {
        double max_move = 0.0;
        for (int k = 0; k < n; ++k) {
            Complex denom = 1.0;
            for (int j = 0; j < n; ++j)
                if (j != k) denom *= z[k] - z[j];
            if (denom == Complex(0.0)) denom = 1e-14 * (1.0 + std::abs(z[k]));
            const Complex step = m.eval(z[k]) / denom;
            z[k] -= step;
            max_move = std::max(max_move, std::abs(step) / (1.0 + std::abs(z[k])));
        }
        if (max_move <= tol) {
            converged = true;
            break;
        }
        bool at_floor = true;
        for (const Complex& x : z)
            if (m.scaled_residual(x) > floor_res) {
                at_floor = false;
                break;
            }
        converged = at_floor;
    }
    for (int k = 0; k < n; ++k) report.roots.push_back(make_entry(p, z[k], -1, sweeps));
    report.sort();
    if (!converged) throw NoConvergenceError("all_roots_oracle: no convergence in 500 sweeps", report);
    return report;
}

Complex sylvester_resultant(const Polynomial& p, const Polynomial& q) {
    const int m = p.degree();
    const int n = q.degree();
    if (m < 1 || n < 1) throw std::domain_error("sylvester_resultant: degrees must be >= 1");
    const int size = m + n;
    ComplexMatrix s(size, std::vector<Complex>(size, 0.0));
    for (int row = 0; row < n; ++row)
        for (int i = 0; i <= m; ++i) s[row][row + i] = p[m - i];
    for (int row = 0; row < m; ++row)
        for (int i = 0; i <= n; ++i) s[n + row][row + i] = q[n - i];
    return determinant(std::move(s));
}

namespace {

// Power sums s_0..s_kmax of the roots of a monic polynomial (Newton identities).
std::vector<Complex> power_sums(const Polynomial& p, int kmax) {
    const int n = p.degree();
    std::vector<Complex> s(kmax + 1, 0.0);
    s[0] = double(n);
    for (int k = 1; k <= kmax; ++k) {
        Complex acc = 0.0;
        for (int i = 1; i <= std::min(k - 1, n); ++i) acc += p[n - i] * s[k - i];
        if (k <= n) acc += double(k) * p[n - k];
        s[k] = -acc;
    }
    return s;
}

}  // namespace

TschirnhausResult tschirnhaus_quadratic(const Polynomial& p) {
    if (p.degree() != 5) throw std::domain_error("tschirnhaus_quadratic: degree must be 5");
    if (std::abs(p.lead() - 1.0) > 1e-14) throw std::domain_error("tschirnhaus_quadratic: polynomial must be monic");
    const std::vector<Complex> s = power_sums(p, 10);

    // Sum of w vanishes when alpha2 = u + v alpha1; the sum of w^2 is then
    // a quadratic A alpha1^2 + B alpha1 + C.
    const Complex u = -s[2] / 5.0;
    const Complex v = -s[1] / 5.0;
    const Complex A = s[2] - s[1] * s[1] / 5.0;
    const Complex B = 2.0 * s[3] + 2.0 * v * s[2] + 2.0 * u * s[1] + 10.0 * u * v;
    const Complex C = s[4] + 2.0 * u * s[2] + 5.0 * u * u;
    const double scale = 1.0 + std::abs(s[4]) + std::norm(s[2]) + std::pow(std::abs(s[1]), 4.0);
    const double eps = 1e-13 * scale;

    Complex alpha1;
    if (std::abs(A) <= eps) {
        if (std::abs(B) <= eps) {
            if (std::abs(C) > eps)
                throw DegenerateError("tschirnhaus_quadratic: quadratic for alpha1 collapsed; shift the input first");
            alpha1 = 0.0;
        } else {
            alpha1 = -C / B;
        }
    } else {
        const Complex disc = std::sqrt(B * B - 4.0 * A * C);
        const Complex big = (std::real(std::conj(B) * disc) >= 0.0) ? -(B + disc) / 2.0 : -(B - disc) / 2.0;
        const Complex r1 = big / A;
        const Complex r2 = big == Complex(0.0) ? Complex(0.0) : C / big;
        alpha1 = std::abs(r1) <= std::abs(r2) ? r1 : r2;
    }
    const Complex alpha2 = u + v * alpha1;

    // Power sums of w = v^2 + alpha1 v + alpha2 from those of v.
    std::vector<Complex> S(6, 0.0);
    std::vector<Complex> t{1.0};
    const std::vector<Complex> base{alpha2, alpha1, 1.0};
    for (int j = 1; j <= 5; ++j) {
        std::vector<Complex> next(t.size() + 2, 0.0);
        for (std::size_t a = 0; a < t.size(); ++a)
            for (std::size_t b = 0; b < 3; ++b) next[a + b] += t[a] * base[b];
        t = std::move(next);
        for (std::size_t m = 0; m < t.size(); ++m) S[j] += t[m] * s[m];
    }
    // Elementary symmetric functions from power sums.
    std::vector<Complex> e(6, 0.0);
    e[0] = 1.0;
    for (int k = 1; k <= 5; ++k) {
        Complex acc = 0.0;
        for (int i = 1; i <= k; ++i) acc += ((i % 2) ? 1.0 : -1.0) * e[k - i] * S[i];
        e[k] = acc / double(k);
    }
    std::vector<Complex> out(6, 0.0);
    out[5] = 1.0;
    for (int k = 1; k <= 5; ++k) out[5 - k] = ((k % 2) ? -1.0 : 1.0) * e[k];
    return {Polynomial(std::move(out)), alpha1, alpha2};
}

RDBoundRow brauer_rd(int n) {
    if (n < 5) throw std::domain_error("brauer_rd: n must be >= 5");
    // (r-2)! + 1 <= n; factorial grows fast so a running product suffices.
    int r = 2;
    long long fact = 1;  // (r-1)! for the candidate r+1
    while (fact + 1 <= n) {
        ++r;
        fact *= (r - 1);
    }
    return {n, r, n - r};
}

RootMatching match_roots(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("match_roots: root counts differ");
    struct Pair {
        double d;
        int i, j;
    };
    std::vector<Pair> all;
    all.reserve(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) all.push_back({std::abs(a[i] - b[j]), int(i), int(j)});
    std::stable_sort(all.begin(), all.end(), [](const Pair& x, const Pair& y) { return x.d < y.d; });
    std::vector<bool> used_a(a.size(), false), used_b(b.size(), false);
    RootMatching m;
    for (const Pair& pr : all) {
        if (used_a[pr.i] || used_b[pr.j]) continue;
        used_a[pr.i] = used_b[pr.j] = true;
        m.pairs.emplace_back(pr.i, pr.j);
        m.max_pair_distance = std::max(m.max_pair_distance, pr.d);
    }
    std::sort(m.pairs.begin(), m.pairs.end());
    return m;
}

RootMatching match_roots(const RootReport& a, const RootReport& b) { return match_roots(a.values(), b.values()); }

}  // namespace polyroots
