#pragma once

#include <optional>
#include <string>

#include "sphsum/levenshtein.hpp"

namespace sphsum {

// Upper bound on the sum of pairwise distances of any N-point code on
// S^{n-1}, from the degree-m linear programming bound with m selected by
// N's segment. `closed` evaluates the explicit formula in n and N;
// `pipeline` recomputes the same value through the node/weight system.
// The two routes agree to ~1e-12 relative and cross-validate each other.
struct UlbReport {
    int n;
    long long N;
    int m;
    double s;  // solved separation with L_m(n, s) = N
    double closed;
    double pipeline;
    LevenshteinSystem system;
};

double ulb_closed(int n, long long N);
double ulb_pipeline(int n, long long N);
UlbReport ulb_report(int n, long long N);

// The degree-m expression evaluated as a formula with no segment check.
// The asymptotic comparisons probe the degree-3 form at N ~ d n^2, past the
// end of its segment.
double ulb_closed_formula(int n, long long N, int m);

// Lower bound on the sum of distances of an N-point code whose pairwise
// inner products do not exceed s. Computed by the interpolation route:
// Hermite-fit the distance potential at the node multiset, pick the
// multiplier that kills the first Gegenbauer coefficient, and evaluate the
// resulting feasible polynomial at 1.
struct UubReport {
    int n;
    long long N;
    double s;
    int m;
    double cardinality_bound;  // L_m(n, s); negative beyond the pole
    double pipeline;
    double closed;          // proof-consistent closed form
    double closed_printed;  // historical printed variant (see below)
    double lambda_multiplier;
    double f_at_one;
    LevenshteinSystem system;
    bool in_paper_range;
};

double uub_pipeline(int n, long long N, double s);
double uub_closed(int n, long long N, double s);

// The degree-2 closed form circulated in print drops a factor N on its last
// numerator term and fails the coincidence test at N = 2n, s = 0; the
// degree-3 printed form carries an overall sign flip relative to its own
// derivation. This returns those variants verbatim for diagnostics.
double uub_closed_printed(int n, long long N, double s);

// Degree-forced variants: segment ties go to the higher degree, so probing
// the lower-degree form at a boundary (N = 2n with degree 2, say) needs the
// degree spelled out.
double uub_closed(int n, long long N, double s, int m);
double uub_closed_printed(int n, long long N, double s, int m);

UubReport uub_report(int n, long long N, double s);

// Truncated asymptotic expansions of the three bounds plus the general
// N^{3/2} deficit form, used as reference expressions in tests.
enum class AsymptoticRegime {
    Degree1,     // N ~ dn, 0 < d <= 1:   sqrt2 N^2 - N/sqrt2
    Degree2,     // N ~ dn, 1 <= d <= 2:  sqrt2 N^2 - 2(1-d-(1-3d/2)/sqrt2) N
    Degree3,     // N ~ dn^2:             sqrt2 N^2 - sqrt(2d)/8 N^{3/2}
    ThreeHalves  // design-range form:    sqrt2 N^2 - N^{3/2}/(4 sqrt2)
};

double asymptotic_reference(int n, long long N, AsymptoticRegime which);
bool asymptotic_regime_matches(int n, long long N, AsymptoticRegime which);

// N^2 times the mean distance of the sphere: valid for every code size,
// including sizes beyond the degree-3 segment.
double trivial_bound(int n, long long N);

// Two-sided enclosure usable for any (n, N, s): the segment bounds when N
// lies inside [2, n(n+3)/2], otherwise the mean-distance upper bound and the
// minimum-distance lower bound N(N-1)sqrt(2(1-s)) (valid for all s).
struct BoundSandwich {
    double upper;
    std::string upper_method;  // "degree-1".."degree-3" or "mean-distance"
    std::optional<double> lower;
    std::string lower_method;  // "degree-m" or "min-distance"
    bool in_segment;
    bool lower_in_paper_range;
};

BoundSandwich sum_bounds_sandwich(int n, long long N, std::optional<double> s);

}  // namespace sphsum
