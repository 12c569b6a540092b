#include <cmath>
#include <doctest.h>
#include <tuple>

#include "sphsum/bounds.hpp"
#include "sphsum/discrepancy.hpp"
#include "sphsum/errors.hpp"
#include "sphsum/oracle.hpp"
#include "support.hpp"

using namespace sphsum;
using testsupport::rel_diff;

namespace {
const double kSqrt2 = std::sqrt(2.0);
}

TEST_CASE("upper bound closed forms at pinned values") {
    // Seven-digit published values carry ~5e-7 rounding.
    CHECK(rel_diff(ulb_closed(5, 16), 345.4941208) < 5e-6);
    CHECK(rel_diff(ulb_closed(95, 4096), 2.369344e7) < 5e-6);
    CHECK(ulb_closed(9, 2) == doctest::Approx(4.0).epsilon(1e-13));  // antipodal pair
    CHECK(ulb_closed(3, 4) == doctest::Approx(8.0 * std::sqrt(6.0)).epsilon(1e-12));
    CHECK(ulb_closed(3, 6) == doctest::Approx(12.0 + 24.0 * kSqrt2).epsilon(1e-12));
    CHECK(rel_diff(ulb_closed(51, 256), 92338.0198) < 5e-6);
    CHECK_THROWS_AS(ulb_closed(3, 100), RangeError);
    CHECK_THROWS_AS(ulb_closed(3, 1), RangeError);
}

TEST_CASE("pipeline and closed form agree across all segments") {
    for (int n = 3; n <= 40; ++n) {
        const long long top = design_threshold(n, 4);
        for (long long N : {2LL, 1LL + n / 2, static_cast<long long>(n), n + 1LL, n + 2LL,
                            2LL * n - 1, 2LL * n, 3LL * n, (2LL * n + top) / 2, top}) {
            if (N < 2 || N > top) continue;
            CHECK(rel_diff(ulb_closed(n, N), ulb_pipeline(n, N)) < 1e-9);
        }
    }
}

TEST_CASE("segment boundaries are continuous") {
    for (int n = 3; n <= 40; ++n) {
        const UlbReport at_n1 = ulb_report(n, n + 1);  // selected degree 2
        CHECK(at_n1.m == 2);
        const double deg1 = (n + 1.0) * std::sqrt(2.0 * (n + 1.0) * n);
        CHECK(rel_diff(at_n1.closed, deg1) < 1e-9);
        CHECK(rel_diff(ulb_closed_formula(n, n + 1, 1), ulb_closed_formula(n, n + 1, 2)) < 1e-9);
        CHECK(rel_diff(ulb_closed_formula(n, 2LL * n, 2), ulb_closed_formula(n, 2LL * n, 3)) <
              1e-9);
    }
}

TEST_CASE("attainment by the simplex and biorthogonal configurations") {
    for (int n : {2, 3, 4, 7, 12, 25, 50}) {
        CHECK(rel_diff(pairwise_distance_sum(simplex_points(n)), ulb_closed(n, n + 1)) < 1e-12);
        CHECK(rel_diff(pairwise_distance_sum(biorthogonal_points(n)), ulb_closed(n, 2LL * n)) <
              1e-12);
    }
}

TEST_CASE("lower bound pipeline at pinned values") {
    CHECK(rel_diff(uub_pipeline(5, 16, 0.2), 345.4941208) < 5e-6);
    CHECK(rel_diff(uub_pipeline(95, 4096, 1.0 / 9.0), 2.341901e7) < 5e-6);
    CHECK(uub_pipeline(3, 6, 0.0) == doctest::Approx(12.0 + 24.0 * kSqrt2).epsilon(1e-12));
    CHECK(rel_diff(uub_pipeline(51, 256, 1.0 / 17.0), 91959.9016) < 5e-6);
}

TEST_CASE("lower bound closed forms") {
    // Degree 1 equals the minimum-distance bound; the simplex attains it.
    const double simplex_sum = 12.0 * std::sqrt(8.0 / 3.0);
    CHECK(uub_closed(3, 4, -1.0 / 3.0) == doctest::Approx(simplex_sum).epsilon(1e-12));
    CHECK(rel_diff(uub_closed(3, 4, -1.0 / 3.0), pairwise_distance_sum(simplex_points(3))) <
          1e-12);

    CHECK(rel_diff(uub_closed(51, 256, 1.0 / 17.0), 91959.9016) < 5e-6);

    // Corrected degree-2 form at the biorthogonal coincidence point. The
    // segment tie sends N = 2n to degree 3, so force degree 2 explicitly.
    for (int n : {3, 7, 20}) {
        const double expect = 4.0 * n + 4.0 * kSqrt2 * n * (n - 1.0);
        CHECK(rel_diff(uub_closed(n, 2LL * n, 0.0, 2), expect) < 1e-12);
        CHECK(rel_diff(uub_pipeline(n, 2LL * n, 0.0), expect) < 1e-12);
        // The printed variant drops a factor N on the last term and misses.
        const double printed = uub_closed_printed(n, 2LL * n, 0.0, 2);
        CHECK(rel_diff(printed, 4.0 * n + 2.0 * kSqrt2 * (n - 1.0)) < 1e-12);
        CHECK(rel_diff(printed, expect) > 0.1);
        // Interior of the degree-2 segment: same factor-N gap.
        const long long N = 2LL * n - 1;
        const double s = solve_s(n, static_cast<double>(N), 2) + 0.01;
        CHECK(rel_diff(uub_closed(n, N, s), uub_pipeline(n, N, s)) < 1e-9);
        CHECK(rel_diff(uub_closed_printed(n, N, s), uub_pipeline(n, N, s)) > 0.1);
    }

    // Degree-3 closed form tracks the pipeline; the printed expression is
    // its negative.
    const std::vector<std::tuple<int, long long, double>> deg3_cases = {
        std::tuple{5, 16LL, 0.2}, std::tuple{20, 60LL, 0.1}, std::tuple{51, 256LL, 1.0 / 17.0},
        std::tuple{95, 4096LL, 1.0 / 9.0}};
    for (const auto& [n, N, s] : deg3_cases) {
        CHECK(rel_diff(uub_closed(n, N, s), uub_pipeline(n, N, s)) < 1e-8);
        CHECK(uub_closed_printed(n, N, s) == doctest::Approx(-uub_closed(n, N, s)));
    }
}

TEST_CASE("lower bound rejects separations below the design point") {
    CHECK_THROWS_AS(uub_report(5, 16, 0.1), RangeError);  // L_3(5, 0.1) < 16
    CHECK_THROWS_AS(uub_report(7, 10, -0.5), RangeError);
}

TEST_CASE("continuity extension past the pole eventually refuses") {
    // Slightly past the pole is fine (the published tables rely on it)...
    CHECK(uub_report(95, 4096, 1.0 / 9.0).pipeline > 0.0);
    // ...but far past it the multiplier construction loses its sign
    // structure and the request is refused as out of range.
    CHECK_THROWS_AS(uub_report(5, 16, 0.8), RangeError);
    CHECK_THROWS_AS(uub_report(2, 4, 0.92), RangeError);
}

TEST_CASE("lower bound report witnesses") {
    const UubReport rep = uub_report(5, 16, 0.2);
    CHECK(rep.m == 3);
    CHECK(rep.cardinality_bound == doctest::Approx(16.0));
    CHECK(rep.in_paper_range);
    CHECK(rep.lambda_multiplier > 0.0);
    CHECK(rep.f_at_one < 0.0);

    const UubReport deg2 = uub_report(7, 10, -0.05);
    CHECK(deg2.m == 2);
    CHECK(deg2.f_at_one == doctest::Approx(-2.0));

    const UubReport deg1 = uub_report(9, 5, -0.2);
    CHECK(deg1.m == 1);
    CHECK(deg1.lambda_multiplier == 0.0);

    const UubReport beyond = uub_report(95, 4096, 1.0 / 9.0);
    CHECK_FALSE(beyond.in_paper_range);
    CHECK(beyond.cardinality_bound < 0.0);

    // Degenerate pair N = 2: the range collapses to s = -1 and the bound to
    // the antipodal sum 4 with no special-casing.
    const UubReport pair = uub_report(7, 2, -1.0);
    CHECK(pair.pipeline == doctest::Approx(4.0).epsilon(1e-13));
    CHECK(pair.in_paper_range);
    // Separation 0 pairs with the degree-1 pole in the cardinality bound,
    // but the distance bound itself stays finite.
    const UubReport flat = uub_report(7, 4, 0.0);
    CHECK(flat.pipeline == doctest::Approx(12.0 * std::sqrt(2.0)).epsilon(1e-13));
    CHECK(std::isinf(flat.cardinality_bound));
}

TEST_CASE("universal optimality coincidences") {
    for (int n = 3; n <= 30; n += 3) {
        CHECK(rel_diff(uub_pipeline(n, n + 1, -1.0 / n), ulb_pipeline(n, n + 1)) < 1e-9);
        CHECK(rel_diff(uub_pipeline(n, 2LL * n, 0.0), ulb_pipeline(n, 2LL * n)) < 1e-9);
    }
    CHECK(rel_diff(uub_pipeline(5, 16, 0.2), ulb_pipeline(5, 16)) < 1e-9);
}

TEST_CASE("lower bound is nonincreasing in the separation") {
    for (const auto& [n, N] : std::vector<std::pair<int, long long>>{{20, 60}, {9, 30}, {5, 16}}) {
        const double lo = solve_s(n, static_cast<double>(N), 3);
        const double hi = 0.9 / std::sqrt(static_cast<double>(n));
        double prev = HUGE_VAL;
        for (int i = 0; i <= 24; ++i) {
            const double s = lo + (hi - lo) * i / 24.0;
            const double value = uub_pipeline(n, N, s);
            CHECK(value <= prev * (1.0 + 1e-12));
            prev = value;
        }
    }
}

TEST_CASE("upper bound never exceeds the trivial asymptote") {
    for (int n = 2; n <= 40; n += 3) {
        const long long top = design_threshold(n, 4);
        for (long long N = 2; N <= top; N = N < 8 ? N + 1 : N + top / 7)
            CHECK(ulb_closed(n, N) <= kSqrt2 * static_cast<double>(N) * static_cast<double>(N));
    }
}

TEST_CASE("asymptotic reference expressions") {
    // Degree-1 regime: relative gap vanishes like 1/N^2.
    {
        const int n = 1000000;
        const long long N = 1000000;
        CHECK(rel_diff(ulb_closed(n, N), asymptotic_reference(n, N, AsymptoticRegime::Degree1)) <
              1e-6);
        CHECK(asymptotic_regime_matches(n, N, AsymptoticRegime::Degree1));
    }
    // Degree-2 regime: the linear coefficient is recovered at scale.
    {
        const int n = 10000;
        const long long N = 20000;
        const double coef = (ulb_closed(n, N) - kSqrt2 * static_cast<double>(N) * N) / N;
        CHECK(std::fabs(coef - (-2.0 * (kSqrt2 - 1.0))) < 0.01 * 2.0 * (kSqrt2 - 1.0));
    }
    // Degree-3 regime at N = n^2 (formula evaluation; the segment itself
    // caps at n(n+3)/2): the O(N) remainder stays bounded.
    {
        double prev_ratio = 0.0;
        for (int n : {500, 1000, 2000}) {
            const long long N = static_cast<long long>(n) * n;
            const double remainder =
                ulb_closed_formula(n, N, 3) - asymptotic_reference(n, N, AsymptoticRegime::Degree3);
            const double ratio = remainder / static_cast<double>(N);
            CHECK(std::fabs(ratio) < 1.0);
            if (prev_ratio != 0.0) CHECK(std::fabs(ratio - prev_ratio) < 0.01);
            prev_ratio = ratio;
        }
    }
    // General three-halves form sits above the degree-3 expansion at d = 1.
    {
        const int n = 1000;
        const long long N = static_cast<long long>(n) * n;
        CHECK(asymptotic_reference(n, N, AsymptoticRegime::ThreeHalves) <
              asymptotic_reference(n, N, AsymptoticRegime::Degree3) + 1.0);
    }
}

TEST_CASE("mean-distance bound") {
    CHECK(trivial_bound(3, 100) == doctest::Approx(10000.0 * 4.0 / 3.0).epsilon(1e-12));
    CHECK(trivial_bound(2, 10) == doctest::Approx(100.0 * 4.0 / M_PI).epsilon(1e-12));
    // Valid far beyond the segment cap, and above every segment bound.
    for (int n : {5, 12})
        for (long long N : {4LL, 2LL * n, design_threshold(n, 4)})
            CHECK(ulb_closed(n, N) <= trivial_bound(n, N) * (1.0 + 1e-12));
}

TEST_CASE("bound sandwich helper") {
    const BoundSandwich in_seg = sum_bounds_sandwich(5, 16, 0.2);
    CHECK(in_seg.in_segment);
    CHECK(in_seg.upper_method == "degree-3");
    CHECK(in_seg.lower_method == "degree-3");
    CHECK(*in_seg.lower <= in_seg.upper * (1.0 + 1e-12));  // equality here

    const BoundSandwich out_seg = sum_bounds_sandwich(16, 256, 0.25);  // beyond n(n+3)/2 = 152
    CHECK_FALSE(out_seg.in_segment);
    CHECK(out_seg.upper_method == "mean-distance");
    CHECK(out_seg.lower_method == "min-distance");
    CHECK(*out_seg.lower == doctest::Approx(256.0 * 255.0 * std::sqrt(1.5)).epsilon(1e-12));
    CHECK(*out_seg.lower <= out_seg.upper);

    const BoundSandwich no_s = sum_bounds_sandwich(5, 16, std::nullopt);
    CHECK_FALSE(no_s.lower.has_value());
}
