#pragma once

#include <string>

#include "polyroots/numerics.hpp"

namespace polyroots {

struct RadicalIterConfig {
    int k = 0;        // branch index
    int v = 40;       // inner iterations
    int mu = 60;      // outer iterations
    double tol = 1e-12;
    double max_modulus = 1e8;

    void validate() const;
};

enum class RadicalStatus { converged, max_iterations, diverged };

std::string to_string(RadicalStatus status);

struct RadicalResult {
    Complex root{0.0, 0.0};      // value of the radical chain
    Complex polished{0.0, 0.0};  // after Newton on the target polynomial, when one exists
    double fixed_point_residual = 0.0;
    double residual = 0.0;  // scaled polynomial residual of `polished`
    int iterations = 0;
    RadicalStatus status = RadicalStatus::max_iterations;
};

/// x^p + alpha x^q = c with y = x^q:
///   y <- e^{2 k pi i q/p} (c - alpha y)^{q/p},  x = e^{2 k pi i/p} (c - alpha y)^{1/p}.
/// Requires p/q > 1.
RadicalResult trinomial_radical_root(double p_exp, double q_exp, Complex alpha, Complex c,
                                     const RadicalIterConfig& cfg = {});

/// x^p + alpha x^q + beta x^v = c with v < q < p: outer fixed point on
/// c' = c - beta y, y = x^v, around the trinomial iteration.
RadicalResult quadrinomial_radical_root(double p_exp, double q_exp, double v_exp, Complex alpha, Complex beta,
                                        Complex c, const RadicalIterConfig& cfg = {});

/// x <- (w - c e^{2 k pi i/6} (b - x)^{1/6})^{1/2}; fixed-point residual only.
RadicalResult sextic_radical_root(Complex w, Complex c, Complex b, const RadicalIterConfig& cfg = {});

/// x^7 + alpha x^3 + beta x^2 + gamma x + delta = 0 by the two-level
/// iteration x <- G(-delta - beta x^2 - alpha x^3), where G(u) solves
/// t^7 + gamma t - u = 0 by t <- e^{2 k pi i/7} (u - gamma t)^{1/7}.
RadicalResult septic_radical_root(Complex alpha, Complex beta, Complex gamma, Complex delta,
                                  const RadicalIterConfig& cfg = {});

}  // namespace polyroots
