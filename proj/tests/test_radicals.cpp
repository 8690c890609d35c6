#include <doctest.h>

#include <cmath>
#include <random>

#include "polyroots/radicals.hpp"
#include "polyroots/poly.hpp"
#include "support.hpp"

using namespace polyroots;
using namespace testsupport;

namespace {

double to_oracle(const Polynomial& p, Complex z) { return max_nearest_distance({z}, all_roots_oracle(p).values()); }

RadicalIterConfig deep() {
    RadicalIterConfig cfg;
    cfg.mu = 200;
    return cfg;
}

}  // namespace

TEST_CASE("trinomial radical with alpha zero is a plain root") {
    for (int k = 0; k < 3; ++k) {
        RadicalIterConfig cfg;
        cfg.k = k;
        const RadicalResult r = trinomial_radical_root(3, 1, 0.0, 8.0, cfg);
        CHECK(std::abs(r.root - 2.0 * std::polar(1.0, 2.0 * M_PI * k / 3.0)) <= 1e-14);
        CHECK(r.status == RadicalStatus::converged);
        CHECK(r.iterations <= 2);
    }
}

TEST_CASE("trinomial radical anchors") {
    const double r3 = bisect([](double x) { return x * x * x + x - 1.0; }, 0.0, 1.0);
    const double r5 = bisect([](double x) { return std::pow(x, 5) + x - 1.0; }, 0.0, 1.0);
    const RadicalResult a = trinomial_radical_root(3, 1, 1.0, 1.0, deep());
    const RadicalResult b = trinomial_radical_root(5, 1, 1.0, 1.0, deep());
    CHECK(a.status == RadicalStatus::converged);
    CHECK(b.status == RadicalStatus::converged);
    CHECK(std::abs(a.root - r3) <= 1e-10);
    CHECK(std::abs(b.root - r5) <= 1e-10);
    CHECK(std::abs(a.root - 0.6823278038280193) <= 1e-10);
    CHECK(std::abs(b.root - 0.7548776662466927) <= 1e-10);
}

TEST_CASE("trinomial radical preconditions and divergence") {
    CHECK_THROWS_AS(trinomial_radical_root(1, 2, 1.0, 1.0), std::domain_error);
    RadicalIterConfig bad;
    bad.mu = 0;
    CHECK_THROWS_AS(trinomial_radical_root(3, 1, 1.0, 1.0, bad), std::invalid_argument);
    // strongly expanding map escapes the modulus guard
    RadicalIterConfig cfg;
    cfg.max_modulus = 1e3;
    const RadicalResult r = trinomial_radical_root(2, 1.9, 50.0, 1.0, cfg);
    CHECK(r.status != RadicalStatus::converged);
}

TEST_CASE("quadrinomial radical") {
    const RadicalResult r = quadrinomial_radical_root(4, 2, 1, 1.0, 1.0, 3.0, deep());
    CHECK(std::abs(r.polished - 1.0) <= 1e-10);

    const RadicalResult t = trinomial_radical_root(5, 3, 0.7, 1.3, deep());
    const RadicalResult q = quadrinomial_radical_root(5, 3, 1, 0.7, 0.0, 1.3, deep());
    CHECK(std::abs(t.root - q.root) <= 1e-10);

    std::mt19937_64 rng(41);
    const Complex alpha = random_in_disk(rng, 0.5), beta = random_in_disk(rng, 0.3), c = random_on_annulus(rng, 0.5, 1.5);
    const RadicalResult s = quadrinomial_radical_root(5, 3, 1, alpha, beta, c, deep());
    REQUIRE(s.status != RadicalStatus::diverged);
    const Polynomial p({-c, beta, 0.0, alpha, 0.0, 1.0});
    CHECK(to_oracle(p, s.polished) <= 1e-8);
    CHECK_THROWS_AS(quadrinomial_radical_root(5, 1, 3, 1.0, 1.0, 1.0), std::domain_error);
}

TEST_CASE("sextic radical iteration") {
    const RadicalResult plain = sextic_radical_root(4.0, 0.0, 1.0);
    CHECK(std::abs(plain.root - 2.0) <= 1e-15);
    CHECK(plain.iterations <= 2);

    RadicalIterConfig cfg;
    cfg.mu = 200;
    const RadicalResult r = sextic_radical_root(2.0, 0.3, 1.0, cfg);
    CHECK(r.status == RadicalStatus::converged);
    CHECK(r.fixed_point_residual <= 1e-10);

    const double x0 = 1.2, b = 2.0, c = 0.3;
    const Complex w = x0 * x0 + c * std::pow(b - x0, 1.0 / 6.0);
    const RadicalResult f = sextic_radical_root(w, c, b, cfg);
    CHECK(std::abs(f.root - x0) <= 1e-9);
}

TEST_CASE("septic radical iteration") {
    for (int k = 0; k < 7; ++k) {
        RadicalIterConfig cfg;
        cfg.k = k;
        const RadicalResult r = septic_radical_root(0.0, 0.0, 0.0, -3.0, cfg);
        CHECK(std::abs(r.root - std::pow(3.0, 1.0 / 7.0) * std::polar(1.0, 2.0 * M_PI * k / 7.0)) <= 1e-12);
    }
    RadicalIterConfig one;
    one.mu = 1;
    one.v = 1;
    CHECK(std::abs(septic_radical_root(0.0, 0.0, 0.0, -1.0, one).root - 1.0) <= 1e-15);

    const RadicalResult r = septic_radical_root(0.2, 0.1, 0.3, -0.5);
    const Polynomial p({-0.5, 0.3, 0.1, 0.2, 0.0, 0.0, 0.0, 1.0});
    CHECK(r.status != RadicalStatus::diverged);
    CHECK(r.residual <= 1e-8);
    CHECK(to_oracle(p, r.polished) <= 1e-8);
}

TEST_CASE("converged radicals satisfy their fixed point and polynomial") {
    std::mt19937_64 rng(42);
    int converged = 0;
    for (int i = 0; i < 100; ++i) {
        const int p = std::uniform_int_distribution<int>(3, 7)(rng);
        const int q = std::uniform_int_distribution<int>(1, p - 1)(rng);
        RadicalIterConfig cfg;
        cfg.mu = 300;
        cfg.k = std::uniform_int_distribution<int>(0, p - 1)(rng);
        const RadicalResult r =
            trinomial_radical_root(p, q, random_in_disk(rng, 0.8), random_on_annulus(rng, 0.5, 2.0), cfg);
        if (r.status == RadicalStatus::converged) {
            ++converged;
            CHECK(r.fixed_point_residual <= 1e-10);
            CHECK(r.residual <= 1e-8);
        }
    }
    CHECK(converged > 0);
}
