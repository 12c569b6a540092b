#include <cmath>
#include <doctest.h>
#include <tuple>

#include "sphsum/errors.hpp"
#include "sphsum/levenshtein.hpp"
#include "support.hpp"

using namespace sphsum;
using testsupport::Rng;

namespace {

long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (long long j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

}  // namespace

TEST_CASE("design thresholds") {
    for (int n : {2, 5, 9}) {
        CHECK(design_threshold(n, 1) == 2);
        CHECK(design_threshold(n, 2) == n + 1);
        CHECK(design_threshold(n, 3) == 2 * n);
    }
    CHECK(design_threshold(6, 4) == 27);
    CHECK_THROWS_AS(design_threshold(6, 5), RangeError);
    CHECK_THROWS_AS(design_threshold(6, 0), RangeError);

    // Binomial form: D*(n, m) = C(n+k-2+eps, n-1) + C(n+k-2, n-1), m = 2k-1+eps.
    for (int n = 2; n <= 12; ++n)
        for (int m = 1; m <= 4; ++m) {
            const int k = (m + 1) / 2;
            const int eps = m - (2 * k - 1);
            CHECK(design_threshold(n, m) ==
                  binomial(n + k - 2 + eps, n - 1) + binomial(n + k - 2, n - 1));
        }
}

TEST_CASE("degree selection with left-closed ties") {
    CHECK(select_degree(7, 2) == 1);
    CHECK(select_degree(7, 7) == 1);
    CHECK(select_degree(7, 8) == 2);   // N = n+1
    CHECK(select_degree(7, 13) == 2);
    CHECK(select_degree(7, 14) == 3);  // N = 2n
    CHECK(select_degree(7, 35) == 3);  // N = n(n+3)/2 closes the range
    CHECK_THROWS_AS(select_degree(7, 36), RangeError);
    CHECK_THROWS_AS(select_degree(7, 1), RangeError);
    CHECK_THROWS_AS(select_degree(3, 100), RangeError);
}

TEST_CASE("cardinality bound closed forms") {
    for (int n : {2, 6, 14}) {
        CHECK(lev_bound(n, -1.0, 1) == doctest::Approx(2.0));
        CHECK(lev_bound(n, 0.0, 2) == doctest::Approx(2.0 * n));
    }
    CHECK(lev_bound(5, 0.2, 3) == doctest::Approx(16.0).epsilon(1e-12));
    CHECK_THROWS_AS(lev_bound(5, 0.0, 1), RangeError);              // pole
    CHECK_THROWS_AS(lev_bound(5, 0.2, 2), RangeError);              // pole at 1/n
    CHECK_THROWS_AS(lev_bound(4, 0.5, 3), RangeError);              // pole at 1/sqrt(n)
    CHECK_THROWS_AS(lev_bound(5, 1.0, 1), RangeError);              // s outside [-1, 1)
    // Beyond the pole the value is negative but well-defined.
    CHECK(lev_bound(95, 1.0 / 9.0, 3) < 0.0);
}

TEST_CASE("solving for the separation") {
    CHECK(solve_s(5, 16.0, 3) == doctest::Approx(0.2).epsilon(1e-13));
    for (int n : {3, 8, 19}) {
        CHECK(solve_s(n, n + 1.0, 1) == doctest::Approx(-1.0 / n).epsilon(1e-13));
        CHECK(solve_s(n, 2.0 * n, 2) == doctest::Approx(0.0));
    }
    CHECK_THROWS_AS(solve_s(5, 40.0, 3), RangeError);  // outside segment

    // Inverse property across all segments.
    for (int n = 3; n <= 20; n += 3)
        for (int m = 1; m <= 3; ++m) {
            const double lo = static_cast<double>(design_threshold(n, m));
            const double hi = static_cast<double>(design_threshold(n, m + 1));
            for (int i = 0; i <= 6; ++i) {
                const double N = lo + (hi - lo) * i / 6.0;
                CHECK(std::fabs(lev_bound(n, solve_s(n, N, m), m) - N) < 1e-9 * N);
            }
        }
}

TEST_CASE("segment endpoints round-trip") {
    for (int n = 3; n <= 20; ++n)
        for (int m = 1; m <= 3; ++m) {
            const double N = static_cast<double>(design_threshold(n, m));
            CHECK(testsupport::rel_diff(lev_bound(n, solve_s(n, N, m), m), N) < 1e-9);
        }
}

TEST_CASE("node and weight systems") {
    const LevenshteinSystem deg3 = quadrature_system(5, 0.2, 3);
    REQUIRE(deg3.nodes.size() == 2);
    CHECK(deg3.nodes[0] == doctest::Approx(-0.6).epsilon(1e-13));
    CHECK(deg3.nodes[1] == doctest::Approx(0.2));
    CHECK(deg3.bound == doctest::Approx(16.0));
    CHECK(deg3.weights[0] + deg3.weights[1] == doctest::Approx(1.0 - 1.0 / 16.0).epsilon(1e-12));
    CHECK(deg3.in_paper_range);

    const LevenshteinSystem deg2 = quadrature_system(3, 0.0, 2);
    CHECK(deg2.nodes[0] == -1.0);
    CHECK(deg2.weights[0] == doctest::Approx(1.0 / 6.0).epsilon(1e-13));
    CHECK(deg2.weights[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
    CHECK(deg2.weights[0] + deg2.weights[1] == doctest::Approx(1.0 - 1.0 / 6.0));

    for (int n : {2, 4, 9}) {
        const LevenshteinSystem deg1 = quadrature_system(n, -1.0 / n, 1);
        CHECK(deg1.weights[0] == doctest::Approx(n / (n + 1.0)).epsilon(1e-13));
        CHECK(deg1.weights[0] == doctest::Approx(1.0 - 1.0 / deg1.bound).epsilon(1e-13));
    }

    // Weight-sum identity and positivity across the published ranges.
    for (int n = 3; n <= 20; n += 2)
        for (int m = 1; m <= 3; ++m)
            for (int i = 1; i < 6; ++i) {
                const double lo = degree_lower_s(n, m), hi = degree_upper_s(n, m);
                const double s = lo + (hi - lo) * i / 6.0;
                const LevenshteinSystem sys = quadrature_system(n, s, m);
                double total = 0.0;
                for (double w : sys.weights) {
                    CHECK(w > 0.0);
                    total += w;
                }
                CHECK(std::fabs(total - (1.0 - 1.0 / sys.bound)) < 1e-10);
                CHECK(sys.in_paper_range);
            }

    // Beyond the pole: still constructible, flagged, negative bound.
    const LevenshteinSystem beyond = quadrature_system(95, 1.0 / 9.0, 3);
    CHECK_FALSE(beyond.in_paper_range);
    CHECK(beyond.bound < 0.0);
    CHECK(beyond.weights[0] > 0.0);
    CHECK(beyond.weights[1] > 0.0);
    CHECK(std::fabs(beyond.weights[0] + beyond.weights[1] - (1.0 - 1.0 / beyond.bound)) < 1e-10);

    // Node ordering breaks below -1/n at degree 3.
    CHECK_THROWS_AS(quadrature_system(5, -0.9, 3), RangeError);
}

TEST_CASE("extremal polynomial structure") {
    const Polynomial f1 = levenshtein_polynomial(7, -0.2, 1);
    CHECK(f1.degree() == 1);
    CHECK(f1(-0.2) == doctest::Approx(0.0));

    const Polynomial f2 = levenshtein_polynomial(3, 0.0, 2);
    CHECK(f2.degree() == 2);
    CHECK(f2(-1.0) == doctest::Approx(0.0));
    CHECK(f2(0.0) == doctest::Approx(0.0));

    const Polynomial f3 = levenshtein_polynomial(5, 0.2, 3);
    CHECK(f3.degree() == 3);
    CHECK(f3(-0.6) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(f3(0.2) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(f3.derivative()(-0.6) == doctest::Approx(0.0).epsilon(1e-12));  // double root

    // Ratio f(1)/f_0 reproduces the cardinality bound.
    const std::vector<std::tuple<int, double, int>> cases = {
        std::tuple{5, 0.2, 3}, std::tuple{3, 0.0, 2}, std::tuple{7, -0.2, 1},
        std::tuple{9, 0.15, 3}, std::tuple{12, -0.05, 2}};
    for (const auto& [n, s, m] : cases) {
        const Polynomial f = levenshtein_polynomial(n, s, m);
        const GegenbauerExpansion e = gegenbauer_expand(f, n);
        CHECK(f(1.0) / e.coeffs[0] == doctest::Approx(lev_bound(n, s, m)).epsilon(1e-10));
    }
}

TEST_CASE("extremal polynomial matches its adjacent-Jacobi form") {
    // Degree 3: (t - a0)^2 (t - s) is proportional to
    // (J_2(t) J_1(s) - J_2(s) J_1(t))^2 / (t - s) with the eps = 0 system.
    for (const auto& [n, s] : std::vector<std::pair<int, double>>{{5, 0.2}, {8, 0.1}, {12, 0.25}}) {
        const Polynomial f = levenshtein_polynomial(n, s, 3);
        double ratio = 0.0;
        for (double t : {-0.7, -0.3, 0.45, 0.9}) {
            const double jac =
                std::pow(jacobi_adjacent_eval(n, 0, 2, t) * jacobi_adjacent_eval(n, 0, 1, s) -
                             jacobi_adjacent_eval(n, 0, 2, s) * jacobi_adjacent_eval(n, 0, 1, t),
                         2) /
                (t - s);
            if (ratio == 0.0)
                ratio = jac / f(t);
            else
                CHECK(jac / f(t) == doctest::Approx(ratio).epsilon(1e-9));
        }
        CHECK(ratio > 0.0);
    }
}

TEST_CASE("positive expansion coefficients across the ranges") {
    for (int n = 3; n <= 20; ++n)
        for (int m = 1; m <= 3; ++m)
            for (int i = 1; i < 5; ++i) {
                const double lo = degree_lower_s(n, m), hi = degree_upper_s(n, m);
                const double s = lo + (hi - lo) * i / 5.0;
                const GegenbauerExpansion e =
                    gegenbauer_expand(levenshtein_polynomial(n, s, m), n);
                for (double c : e.coeffs) CHECK(c > 0.0);
            }
}

TEST_CASE("quadrature identity") {
    const LevenshteinSystem sys1 = quadrature_system(6, -0.3, 1);
    CHECK(verify_quadrature(sys1, Polynomial({1.0})) < 1e-14);
    CHECK(verify_quadrature(sys1, Polynomial({0.0, 1.0})) < 1e-14);
    CHECK_THROWS_AS(verify_quadrature(sys1, Polynomial({0.0, 0.0, 1.0})), RangeError);

    Rng rng(2024);
    const LevenshteinSystem sys3 = quadrature_system(7, 0.1, 3);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> coeffs(4);
        for (double& c : coeffs) c = rng.uniform(-1.0, 1.0);
        CHECK(verify_quadrature(sys3, Polynomial(coeffs)) < 1e-10);
    }

    // Full sweep of the identity, including beyond-range separations.
    for (int n = 3; n <= 20; n += 4)
        for (int m = 1; m <= 3; ++m)
            for (int i = 1; i < 5; ++i) {
                const double lo = degree_lower_s(n, m), hi = degree_upper_s(n, m);
                const double s = lo + (hi - lo) * i / 5.0;
                const LevenshteinSystem sys = quadrature_system(n, s, m);
                for (int trial = 0; trial < 20; ++trial) {
                    std::vector<double> coeffs(static_cast<std::size_t>(m) + 1);
                    for (double& c : coeffs) c = rng.uniform(-1.0, 1.0);
                    CHECK(verify_quadrature(sys, Polynomial(coeffs)) < 1e-10);
                }
            }

    // The identity survives past the pole.
    const LevenshteinSystem beyond = quadrature_system(95, 1.0 / 9.0, 3);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> coeffs(4);
        for (double& c : coeffs) c = rng.uniform(-1.0, 1.0);
        CHECK(verify_quadrature(beyond, Polynomial(coeffs)) < 1e-10);
    }
}
