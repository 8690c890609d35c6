#include "polyroots/numerics.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace polyroots {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

const double kLogSqrtTwoPi = 0.5 * std::log(2.0 * std::numbers::pi);

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// sin(pi x) with argument reduction so large |x| keeps its accuracy.
double sin_pi(double x) {
    double r = std::fmod(x, 2.0);
    if (r > 1.0) r -= 2.0;
    if (r < -1.0) r += 2.0;
    return std::sin(std::numbers::pi * r);
}

template <typename T>
T lanczos_sum(T x) {
    T a = T(kLanczos[0]);
    for (std::size_t i = 1; i < kLanczos.size(); ++i) a += kLanczos[i] / (x + double(i));
    return a;
}

// Gamma(x) for x >= 0.5.
double gamma_upper(double x) {
    const double xm = x - 1.0;
    const double t = xm + kLanczosG + 0.5;
    return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, xm + 0.5) * std::exp(-t) *
           lanczos_sum(xm);
}

double log_gamma_upper(double x) {
    const double xm = x - 1.0;
    const double t = xm + kLanczosG + 0.5;
    return kLogSqrtTwoPi + (xm + 0.5) * std::log(t) - t + std::log(lanczos_sum(xm));
}

Complex gamma_upper(Complex z) {
    const Complex zm = z - 1.0;
    const Complex t = zm + kLanczosG + 0.5;
    return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, zm + 0.5) * std::exp(-t) *
           lanczos_sum(zm);
}

}  // namespace

std::string to_string(SeriesStatus status) {
    switch (status) {
        case SeriesStatus::converged: return "converged";
        case SeriesStatus::diverged: return "diverged";
        case SeriesStatus::truncated: return "truncated";
    }
    return "unknown";
}

void SeriesConfig::validate() const {
    if (max_terms < 1) throw std::invalid_argument("SeriesConfig: max_terms must be >= 1");
    if (!(rel_tol >= std::numeric_limits<double>::epsilon()))
        throw std::invalid_argument("SeriesConfig: rel_tol must be >= machine epsilon");
    if (divergence_window < 1)
        throw std::invalid_argument("SeriesConfig: divergence_window must be >= 1");
}

double gamma_real(double x) {
    if (is_nonpositive_integer(x)) throw PoleError("gamma_real: pole at nonpositive integer");
    if (x < 0.5) return std::numbers::pi / (sin_pi(x) * gamma_upper(1.0 - x));
    return gamma_upper(x);
}

double recip_gamma_real(double x) {
    if (is_nonpositive_integer(x)) return 0.0;
    if (x < 0.5) return sin_pi(x) * gamma_upper(1.0 - x) / std::numbers::pi;
    if (x > 171.7) return 0.0;
    return 1.0 / gamma_upper(x);
}

double log_abs_gamma(double x, int* sign) {
    if (is_nonpositive_integer(x)) throw PoleError("log_abs_gamma: pole at nonpositive integer");
    if (x >= 0.5) {
        if (sign) *sign = 1;
        return log_gamma_upper(x);
    }
    const double s = sin_pi(x);
    if (sign) *sign = s < 0.0 ? -1 : 1;
    return std::log(std::numbers::pi) - std::log(std::fabs(s)) - log_gamma_upper(1.0 - x);
}

bool is_nonpositive_integer(Complex z) { return z.imag() == 0.0 && is_nonpositive_integer(z.real()); }

Complex gamma_complex(Complex z) {
    if (is_nonpositive_integer(z)) throw PoleError("gamma_complex: pole at nonpositive integer");
    if (z.real() < 0.5)
        return std::numbers::pi / (std::sin(std::numbers::pi * z) * gamma_upper(1.0 - z));
    return gamma_upper(z);
}

Complex recip_gamma_complex(Complex z) {
    if (is_nonpositive_integer(z)) return 0.0;
    if (z.real() < 0.5) return std::sin(std::numbers::pi * z) * gamma_upper(1.0 - z) / std::numbers::pi;
    return 1.0 / gamma_upper(z);
}

Complex pochhammer(Complex a, int n) {
    if (n < 0) throw std::invalid_argument("pochhammer: n must be nonnegative");
    Complex r = 1.0;
    for (int i = 0; i < n; ++i) r *= a + double(i);
    return r;
}

SeriesValue pfq_eval(const PFQParams& params, Complex z, const SeriesConfig& cfg, bool regularized) {
    cfg.validate();

    // Terminating series: an upper parameter -m stops the sum after n = m.
    int terminate_at = -1;
    for (const Complex& a : params.upper) {
        if (is_nonpositive_integer(a)) {
            const int m = int(-a.real());
            if (terminate_at < 0 || m < terminate_at) terminate_at = m;
        }
    }
    if (!regularized) {
        for (const Complex& b : params.lower) {
            if (!is_nonpositive_integer(b)) continue;
            const int k = int(-b.real());
            if (terminate_at < 0 || terminate_at >= k + 1)
                throw PoleError("pfq_eval: lower parameter is a nonpositive integer");
        }
    }

    if (z == Complex(0.0)) {
        SeriesValue v;
        v.value = 1.0;
        if (regularized)
            for (const Complex& b : params.lower) v.value *= recip_gamma_complex(b);
        v.terms_used = 1;
        v.status = SeriesStatus::converged;
        return v;
    }

    // Regularized form keeps 1/Gamma(b_j + n) per lower parameter.
    std::vector<Complex> rgamma;
    if (regularized)
        for (const Complex& b : params.lower) rgamma.push_back(recip_gamma_complex(b));

    SeriesAccumulator acc(cfg);
    Complex t = 1.0;  // upper/lower ratio part; the full term in the plain case
    for (int n = 0;; ++n) {
        Complex term = t;
        if (regularized)
            for (const Complex& rg : rgamma) term *= rg;
        const bool more = acc.add(term);
        if (terminate_at >= 0 && n == terminate_at) {
            SeriesValue v;
            v.value = acc.sum();
            v.terms_used = n + 1;
            v.status = SeriesStatus::converged;
            return v;
        }
        if (!more) break;

        const double nd = double(n);
        Complex ratio = z / (nd + 1.0);
        for (const Complex& a : params.upper) ratio *= a + nd;
        if (regularized) {
            for (std::size_t j = 0; j < params.lower.size(); ++j) {
                const Complex bn = params.lower[j] + nd;
                rgamma[j] = rgamma[j] == Complex(0.0) ? recip_gamma_complex(bn + 1.0) : rgamma[j] / bn;
            }
        } else {
            for (const Complex& b : params.lower) ratio /= b + nd;
        }
        t *= ratio;
    }
    return acc.result();
}

SeriesAccumulator::SeriesAccumulator(const SeriesConfig& cfg, int stride) : cfg_(cfg), stride_(stride) {
    cfg_.validate();
    if (stride_ < 1) throw std::invalid_argument("SeriesAccumulator: stride must be >= 1");
}

bool SeriesAccumulator::add(Complex term) {
    if (finished_) return false;
    sum_ += term;
    ++terms_;
    ++in_block_;
    const double mag = std::abs(term);
    if (!std::isfinite(mag) || !std::isfinite(std::abs(sum_))) {
        finished_ = true;
        status_ = SeriesStatus::diverged;
        return false;
    }
    if (mag != 0.0) {
        block_has_nonzero_ = true;
        if (mag > block_max_) block_max_ = mag;
        if (mag > cfg_.rel_tol * std::abs(sum_)) block_small_ = false;
    }
    if (in_block_ == stride_) close_block();
    if (!finished_ && terms_ >= cfg_.max_terms) {
        finished_ = true;
        status_ = SeriesStatus::truncated;
    }
    return !finished_;
}

void SeriesAccumulator::close_block() {
    const int first_index = terms_ - stride_;
    in_block_ = 0;
    if (!block_has_nonzero_) {
        // Zero blocks never reset the growth run; a long run of them means the
        // series has stopped contributing.
        if (++zero_run_ >= cfg_.divergence_window) {
            finished_ = true;
            status_ = SeriesStatus::converged;
            best_sum_ = sum_;
        }
        return;
    }
    zero_run_ = 0;
    if (best_block_ < 0.0 || block_max_ < best_block_) {
        best_block_ = block_max_;
        best_sum_ = sum_;
    }
    if (block_small_) {
        finished_ = true;
        status_ = SeriesStatus::converged;
        best_sum_ = sum_;
    } else if (first_index >= 16 && prev_block_max_ >= 0.0 && block_max_ > prev_block_max_) {
        if (++growth_run_ >= cfg_.divergence_window) {
            finished_ = true;
            status_ = SeriesStatus::diverged;
        }
    } else {
        growth_run_ = 0;
    }
    prev_block_max_ = block_max_;
    block_max_ = 0.0;
    block_small_ = true;
    block_has_nonzero_ = false;
}

SeriesStatus SeriesAccumulator::status() const { return status_; }

SeriesValue SeriesAccumulator::result() const {
    SeriesValue v;
    v.terms_used = terms_;
    v.status = status_;
    v.value = status_ == SeriesStatus::diverged ? best_sum_ : sum_;
    return v;
}

}  // namespace polyroots
