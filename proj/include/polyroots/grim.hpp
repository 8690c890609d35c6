#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "polyroots/poly.hpp"

namespace polyroots {

struct GrimConfig {
    /// Inverse branches d; empty means 0..n-1.
    std::vector<int> branches;
    /// Starting values; empty means {0.01, i, -i, rho/2} with rho the Cauchy bound.
    std::vector<Complex> seeds;
    int iters = 80;
    double dedup_tol = 1e-6;
    double polish_tol = 1e-10;

    void validate() const;
};

/// No (branch, seed) run produced a root that survived polishing.
class EmptyResultError : public std::runtime_error {
public:
    EmptyResultError(const std::string& what, std::vector<std::string> diagnostics)
        : std::runtime_error(what), diagnostics_(std::move(diagnostics)) {}
    const std::vector<std::string>& diagnostics() const { return diagnostics_; }

private:
    std::vector<std::string> diagnostics_;
};

/// Inverts the dominant monomial c_n x^n and iterates
///   x <- exp((Log(Fc(x)) + 2 pi i d) / n),  Fc(x) = -(F(x) - c_n x^n) / c_n
/// for every branch d and seed, then polishes, pools and deduplicates.
RootReport grim_solve(const Polynomial& p, const GrimConfig& cfg = {});

struct GrimCoverage {
    int found = 0;
    int total = 0;
    std::vector<Complex> unmatched;
};

/// Runs grim_solve and counts how many oracle roots it recovers within
/// match_tol (one-to-one).
GrimCoverage grim_coverage(const Polynomial& p, const GrimConfig& cfg = {}, double match_tol = 1e-6);

}  // namespace polyroots
