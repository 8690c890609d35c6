#pragma once

// Shared generators and independent reference computations for the test
// suites. Nothing here calls into the solvers under test.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "polyroots/poly.hpp"
#include "polyroots/series.hpp"

namespace testsupport {

using polyroots::Complex;
using polyroots::Polynomial;

inline Complex random_in_disk(std::mt19937_64& rng, double radius = 1.0) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double r = radius * std::sqrt(u(rng));
    return std::polar(r, 2.0 * std::numbers::pi * u(rng));
}

inline Complex random_on_annulus(std::mt19937_64& rng, double r0, double r1) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return std::polar(r0 + (r1 - r0) * u(rng), 2.0 * std::numbers::pi * u(rng));
}

/// Random polynomial of the given degree with coefficients in the unit disk
/// and a leading coefficient bounded away from zero.
inline Polynomial random_polynomial(std::mt19937_64& rng, int degree, bool monic = false) {
    std::vector<Complex> c(degree + 1);
    for (auto& x : c) x = random_in_disk(rng);
    c[degree] = monic ? Complex(1.0) : random_on_annulus(rng, 0.5, 1.0);
    return Polynomial(c);
}

/// Roots in the disk of radius 1.5, pairwise at least min_sep apart.
inline std::vector<Complex> separated_roots(std::mt19937_64& rng, int n, double min_sep) {
    std::vector<Complex> roots;
    while (int(roots.size()) < n) {
        const Complex z = random_in_disk(rng, 1.5);
        bool ok = true;
        for (const Complex& w : roots) ok = ok && std::abs(z - w) >= min_sep;
        if (ok) roots.push_back(z);
    }
    return roots;
}

/// Bisection on a real bracket [lo, hi] with f(lo) f(hi) < 0.
inline double bisect(const std::function<double(double)>& f, double lo, double hi) {
    double flo = f(lo);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// b^b (s-b)^(s-b) / s^s as an exact fraction, by repeated integer products.
inline polyroots::Rational argument_law(int s, int b) {
    auto ipow = [](std::int64_t x, int e) {
        std::int64_t r = 1;
        for (int i = 0; i < e; ++i) r *= x;
        return r;
    };
    return polyroots::Rational(ipow(b, b) * ipow(s - b, s - b), ipow(s, s));
}

/// Trinomials x^s - alpha x^b - q (s <= 7) whose regrouped argument modulus
/// |b^b (s-b)^(s-b) / s^s| |alpha^s / q^(s-b)| is uniform in (0, max_arg].
inline std::vector<polyroots::Trinomial> trinomial_corpus(std::uint64_t seed, int count, double max_arg = 0.8) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> sdist(2, 7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<polyroots::Trinomial> out;
    for (int i = 0; i < count; ++i) {
        const int s = sdist(rng);
        const int b = std::uniform_int_distribution<int>(1, s - 1)(rng);
        const Complex q = random_on_annulus(rng, 0.5, 2.0);
        const double arg = max_arg * (1.0 - u(rng));
        const double law = argument_law(s, b).value();
        const double mod = std::pow(arg * std::pow(std::abs(q), s - b) / law, 1.0 / s);
        const Complex alpha = std::polar(mod, 2.0 * std::numbers::pi * u(rng));
        out.push_back({s, b, alpha, q});
    }
    return out;
}

inline double regrouped_argument_modulus(const polyroots::Trinomial& t) {
    return argument_law(t.s, t.b).value() * std::pow(std::abs(t.alpha), t.s) / std::pow(std::abs(t.q), t.s - t.b);
}

/// Deduplicated union of values.
inline std::vector<Complex> dedup(const std::vector<Complex>& v, double tol) {
    std::vector<Complex> out;
    for (const Complex& z : v) {
        bool dup = false;
        for (const Complex& w : out) dup = dup || std::abs(z - w) <= tol;
        if (!dup) out.push_back(z);
    }
    return out;
}

/// Largest distance from any element of `a` to its nearest element of `b`.
inline double max_nearest_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    double worst = 0.0;
    for (const Complex& z : a) {
        double best = INFINITY;
        for (const Complex& w : b) best = std::min(best, std::abs(z - w));
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace testsupport
