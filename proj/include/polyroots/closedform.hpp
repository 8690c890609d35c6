#pragma once

#include <cstdint>
#include <vector>

#include "polyroots/poly.hpp"

namespace polyroots {

RootReport solve_quadratic(const Polynomial& p);
RootReport solve_cubic(const Polynomial& p);
RootReport solve_quartic(const Polynomial& p);

/// Degree 1..4 dispatch to the closed-form solvers above.
RootReport solve_closed(const Polynomial& p);

/// F = Q^2 - P^2 = (Q - P)(Q + P) with monic halves of degree h = n/2.
/// Writing w+_j = q_j + p_j and w-_j = q_j - p_j for j < h:
///   L_j = w+_j + w-_j,  Omega_j = w+_j w-_j,  w+-_j = L_j/2 +- R_j,
///   R_j = sqrt(L_j^2/4 - Omega_j).
struct SquareDifferenceSplit {
    std::vector<Complex> omega;   // Omega_0 .. Omega_h (Omega_h = 1)
    std::vector<Complex> l_vars;  // free L_0 .. L_{h-3}
    Polynomial w_plus;
    Polynomial w_minus;
    double residual = 0.0;  // max coefficient mismatch of w_minus * w_plus - F
};

/// Degree 4 in closed form; degrees 6, 8, 10 by damped Newton on the
/// coefficient-matching system with up to 64 seeded starts.
SquareDifferenceSplit square_difference_split(const Polynomial& f, std::uint64_t seed = 0x5eed);

/// Splits, solves each half (closed form up to degree 4, GRIM for degree 5)
/// and polishes every root against F.
RootReport solve_by_split(const Polynomial& f, std::uint64_t seed = 0x5eed);

}  // namespace polyroots
