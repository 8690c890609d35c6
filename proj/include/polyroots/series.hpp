#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polyroots/numerics.hpp"
#include "polyroots/poly.hpp"

namespace polyroots {

/// Exact rational with 64-bit parts, always reduced, denominator > 0.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1);

    double value() const { return double(num) / double(den); }
    bool is_nonpositive_integer() const { return den == 1 && num <= 0; }

    friend Rational operator+(Rational a, Rational b);
    friend Rational operator-(Rational a, Rational b);
    friend Rational operator*(Rational a, Rational b);
    friend Rational operator/(Rational a, Rational b);
    friend bool operator==(Rational a, Rational b) { return a.num == b.num && a.den == b.den; }
};

std::string to_string(const Rational& r);

/// z^s - alpha z^b - q = 0.
struct Trinomial {
    int s = 2;
    int b = 1;
    Complex alpha{0.0, 0.0};
    Complex q{1.0, 0.0};

    Polynomial polynomial() const;
    void validate() const;
};

/// x^s + c x^r + alpha x - b = 0.
struct Quadrinomial {
    int s = 4;
    int r = 2;
    Complex c{0.0, 0.0};
    Complex alpha{1.0, 0.0};
    Complex b{0.0, 0.0};

    Polynomial polynomial() const;
    void validate() const;
};

/// A series root before and after Newton polishing.
struct SeriesRoot {
    Complex root{0.0, 0.0};  // polished when polishing succeeded
    Complex raw{0.0, 0.0};   // series value
    double raw_residual = 0.0;
    double residual = 0.0;
    int terms_used = 0;
    SeriesStatus status = SeriesStatus::truncated;
    bool polished = false;
    int branch = -1;
    std::vector<std::string> warnings;
};

/// Root of z = alpha + s/z near alpha:
///   alpha + sum_{m>=1} (-1)^{m-1} (2m-2)! s^m / ((m-1)! m! alpha^{2m-1}).
SeriesValue reciprocal_series_root(Complex alpha, Complex s, const SeriesConfig& cfg = {});

/// Term n of the Lagrange series for branch k of a trinomial:
///   alpha^n/n! w^{1+bn}/s Gamma(a) / Gamma(a - n + 1) q^{a - n},
/// a = (1+bn)/s, w = exp(2 pi i k/s). Exactly zero at Gamma poles.
Complex trinomial_series_term(const Trinomial& t, int k, int n);

/// Direct sum of the branch-k series (blocks of s terms), no polishing.
SeriesValue trinomial_series_sum(const Trinomial& t, int k, const SeriesConfig& cfg = {});

/// Series value for branch k, polished against the trinomial.
SeriesRoot trinomial_series_root(const Trinomial& t, int k, const SeriesConfig& cfg = {});

/// One residue class n = s m + j of the trinomial series:
///   prefactor * q^power_of_q * pFq(upper; lower; argument).
struct PFQGroup {
    int residue = 0;
    Complex prefactor{0.0, 0.0};
    Rational power_of_q;
    std::vector<Rational> upper;
    std::vector<Rational> lower;
    PFQParams params;
    Complex argument{0.0, 0.0};
};

struct PFQRootForm {
    int k = 0;
    /// argument = arg_coefficient * alpha^s / q^(s-b)
    Rational arg_coefficient;
    std::vector<PFQGroup> groups;
};

PFQRootForm trinomial_pfq_root(const Trinomial& t, int k);

/// Sums every group; status is the worst group status.
SeriesValue evaluate_pfq_root(const PFQRootForm& form, Complex q, const SeriesConfig& cfg = {});

/// All five roots of z^5 + alpha z - q = 0 from the five series branches.
/// Branches whose series fail are filled from the oracle, with a warning.
RootReport bring_jerrard_quintic(Complex alpha, Complex q, const SeriesConfig& cfg = {});

/// Lagrange series for x = b/alpha - (c x^r + x^s)/alpha about z = b/alpha.
SeriesRoot quadrinomial_series_root(const Quadrinomial& w, const SeriesConfig& cfg = {});

struct AdjacentResult {
    Complex z_in{0.0, 0.0};
    double z_in_residual = 0.0;
    Complex series_value{0.0, 0.0};
    double series_residual = 0.0;
    Complex root{0.0, 0.0};
    double residual = 0.0;
    int terms_used = 0;
    SeriesStatus status = SeriesStatus::truncated;
    std::vector<std::string> warnings;
};

/// Cubic seed for x^7 + c x^3 + a x^2 + b x - q = 0 from the principal-branch
/// Cardano expression of c z^3 + a z^2 + b z - q.
Complex adjacent_cubic_seed(Complex c, Complex a, Complex b, Complex q);

/// Seed from the cubic part, then the Lagrange correction that restores the
/// x^7 term, then Newton polish. Residuals are scaled septic residuals.
AdjacentResult adjacent_septic_root(Complex c, Complex a, Complex b, Complex q, const SeriesConfig& cfg = {});

/// Multinomial Lagrange series about `center` summed by total order up to
/// `order`, then polished.
SeriesRoot general_poly_series_root(const Polynomial& p, Complex center, int order = 40,
                                    const SeriesConfig& cfg = {});

}  // namespace polyroots
