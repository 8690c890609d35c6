#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polyroots/numerics.hpp"

namespace polyroots {

/// Dense polynomial c_0 + c_1 x + ... + c_n x^n. Trailing (leading-order)
/// zeros are trimmed on construction, so the leading coefficient is nonzero
/// unless the polynomial is identically zero.
class Polynomial {
public:
    Polynomial() : c_{0.0} {}
    explicit Polynomial(std::vector<Complex> coeffs);

    static Polynomial from_roots(const std::vector<Complex>& roots, Complex lead = 1.0);

    int degree() const { return int(c_.size()) - 1; }
    const std::vector<Complex>& coeffs() const { return c_; }
    Complex operator[](int i) const { return i >= 0 && i <= degree() ? c_[i] : Complex(0.0); }
    Complex lead() const { return c_.back(); }
    bool is_zero() const { return c_.size() == 1 && c_[0] == Complex(0.0); }

    Complex eval(Complex x) const;
    /// (p(x), p'(x)) in one Horner pass.
    std::pair<Complex, Complex> eval_with_derivative(Complex x) const;
    /// |p(x)| / max(1, sum |c_i| |x|^i).
    double scaled_residual(Complex x) const;

    Polynomial monic() const;
    Polynomial derivative() const;
    /// Coefficients of p(x + c).
    Polynomial taylor_shift(Complex c) const;

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);

private:
    std::vector<Complex> c_;
};

/// Parses "c0, c1, ..., cn" (constant term first). Each entry is "re",
/// "re+imi", "re-imi" or "imi".
Polynomial parse_polynomial(const std::string& text);
Complex parse_complex(const std::string& text);

struct RootEntry {
    Complex root{0.0, 0.0};
    double residual = 0.0;
    int branch = -1;
    int iterations = 0;
};

struct RootReport {
    std::vector<RootEntry> roots;
    std::string method;
    std::vector<std::string> warnings;

    std::vector<Complex> values() const;
    /// Lexicographic order by (re, im).
    void sort();
};

RootEntry make_entry(const Polynomial& p, Complex x, int branch = -1, int iterations = 0);

class DegenerateError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An iteration ran out of steps. Carries the best iterate found.
class NoConvergenceError : public std::runtime_error {
public:
    NoConvergenceError(const std::string& what, RootReport partial)
        : std::runtime_error(what), partial_(std::move(partial)) {}
    const RootReport& partial() const { return partial_; }

private:
    RootReport partial_;
};

double cauchy_bound(const Polynomial& p);

struct PolishResult {
    Complex root;
    double residual = 0.0;
    int iterations = 0;
};

/// Newton iteration until the scaled residual is <= tol. Throws
/// NoConvergenceError (best iterate in the payload) after max_iter steps.
PolishResult newton_polish(const Polynomial& p, Complex x0, double tol = 1e-13, int max_iter = 100);

/// Durand-Kerner simultaneous iteration; independent of every solver in the
/// library and used to validate them.
RootReport all_roots_oracle(const Polynomial& p, double tol = 1e-12);

/// Determinant of the (m+n) x (m+n) Sylvester matrix.
Complex sylvester_resultant(const Polynomial& p, const Polynomial& q);

struct TschirnhausResult {
    Polynomial principal;
    Complex alpha1;
    Complex alpha2;
};

/// Quadratic substitution w = v^2 + alpha1 v + alpha2 taking a monic quintic
/// to one with vanishing w^4 and w^3 coefficients.
TschirnhausResult tschirnhaus_quadratic(const Polynomial& p);

struct RDBoundRow {
    int n = 0;
    int r = 0;
    int rd_max = 0;
};

/// Largest r with (r-2)! + 1 <= n; rd_max = n - r.
RDBoundRow brauer_rd(int n);

struct RootMatching {
    double max_pair_distance = 0.0;
    std::vector<std::pair<int, int>> pairs;
};

/// Greedy matching, closest remaining pair first.
RootMatching match_roots(const std::vector<Complex>& a, const std::vector<Complex>& b);
RootMatching match_roots(const RootReport& a, const RootReport& b);

}  // namespace polyroots
