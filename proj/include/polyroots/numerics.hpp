#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyroots {

using Complex = std::complex<double>;

/// Raised when a Gamma function or a pFq lower parameter hits a pole.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Outcome of summing an infinite series.
enum class SeriesStatus { converged, diverged, truncated };

std::string to_string(SeriesStatus status);

struct SeriesConfig {
    int max_terms = 400;
    double rel_tol = 1e-12;
    /// Consecutive growing terms (or term blocks) that signal divergence.
    int divergence_window = 8;

    void validate() const;
};

/// Parameter lists of a generalized hypergeometric series pFq.
struct PFQParams {
    std::vector<Complex> upper;
    std::vector<Complex> lower;
};

struct SeriesValue {
    Complex value{0.0, 0.0};
    int terms_used = 0;
    SeriesStatus status = SeriesStatus::truncated;
};

/// Gamma function for real arguments (Lanczos g = 7, 9 coefficients).
/// Throws PoleError at nonpositive integers.
double gamma_real(double x);

/// 1/Gamma(x); exactly zero at nonpositive integers.
double recip_gamma_real(double x);

/// log|Gamma(x)| for real x. `sign` receives the sign of Gamma(x).
/// Throws PoleError at nonpositive integers.
double log_abs_gamma(double x, int* sign = nullptr);

/// Gamma and 1/Gamma for complex arguments (same Lanczos scheme).
Complex gamma_complex(Complex z);
Complex recip_gamma_complex(Complex z);

/// Rising factorial a (a+1) ... (a+n-1), evaluated left to right.
Complex pochhammer(Complex a, int n);

/// True when z is (numerically exactly) a nonpositive integer.
bool is_nonpositive_integer(Complex z);

/// Sums pFq(upper; lower; z) with the term recurrence
///   t_{n+1} = t_n * prod(a_i + n) / prod(b_j + n) * z / (n + 1).
/// With `regularized`, every lower Pochhammer (b)_n is replaced by
/// Gamma(b + n), which removes the lower-parameter poles.
SeriesValue pfq_eval(const PFQParams& params, Complex z, const SeriesConfig& cfg = {},
                     bool regularized = false);

/// Sequential series summation with the convergence and divergence rules
/// shared by every series engine in the library.
///
/// Terms are grouped into blocks of `stride` consecutive terms. The series
/// has converged once a whole block is below rel_tol relative to the partial
/// sum; it has diverged once block maxima grow strictly for
/// `divergence_window` consecutive blocks past term 16. Exact zero terms are
/// ignored by both tests; `divergence_window` consecutive all-zero blocks
/// count as convergence. The partial sum at the smallest block is retained
/// so a diverged series can still report its optimally truncated value.
class SeriesAccumulator {
public:
    explicit SeriesAccumulator(const SeriesConfig& cfg, int stride = 1);

    /// Adds one term; returns false once summation should stop.
    bool add(Complex term);

    bool done() const { return finished_; }
    int terms_used() const { return terms_; }
    SeriesStatus status() const;
    Complex sum() const { return sum_; }
    /// Partial sum at the block with the smallest magnitude.
    Complex best_sum() const { return best_sum_; }
    /// Value to report: the sum unless diverged, then the best partial sum.
    SeriesValue result() const;

private:
    void close_block();

    SeriesConfig cfg_;
    int stride_;
    Complex sum_{0.0, 0.0};
    Complex best_sum_{0.0, 0.0};
    double best_block_ = -1.0;
    int terms_ = 0;
    int in_block_ = 0;
    double block_max_ = 0.0;
    bool block_small_ = true;
    bool block_has_nonzero_ = false;
    double prev_block_max_ = -1.0;
    int growth_run_ = 0;
    int zero_run_ = 0;
    bool finished_ = false;
    SeriesStatus status_ = SeriesStatus::truncated;
};

}  // namespace polyroots
