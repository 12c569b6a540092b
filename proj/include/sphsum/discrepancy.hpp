#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sphsum/families.hpp"

namespace sphsum {

using int128 = __int128;
using uint128 = unsigned __int128;

// Mean distance W(S^{n-1}) between two uniform points on the sphere,
// evaluated through the duplication identity
//   W = sqrt(2) Gamma(n/2)^2 / (Gamma(n/2 - 1/4) Gamma(n/2 + 1/4)),
// with a Stirling-series tail for large n. Accurate to ~1 ulp for all
// n >= 2; the naive log-gamma combination loses 7 digits by n = 10^6.
double mean_distance(int n);

// Normalizing constant of the invariance identity relating the sum of
// distances to the quadratic cap discrepancy:
//   c_n = (n-1) sqrt(pi) Gamma((n-1)/2) / Gamma(n/2).
double stolarsky_constant(int n);

struct SphereConstants {
    int n;
    double mean_dist;  // W(S^{n-1})
    double c_n;
};

SphereConstants sphere_constants(int n);

// Quadratic cap discrepancy implied by a sum of distances tau:
//   D = (W(S^{n-1}) - tau/N^2) / c_n.
// Negative outputs are numerically possible for synthetic spectra and are
// returned as-is; genuine codes always give D >= 0.
double spherical_discrepancy(double tau, int n, long long N);

// The Hamming-space potential pairing with ball counts: lambda(0) = 0 and
//   lambda(2i-1) = lambda(2i) = 2^{n-2i} i C(2i, i).
// Exact 128-bit integers for n <= 62, log-domain beyond. For odd n the top
// entry lambda(n) carries the factor 2^{-1}, still an exact integer because
// the central binomial coefficient is even.
class LambdaPotential {
public:
    explicit LambdaPotential(int n);

    int length() const { return n_; }
    double value(int w) const;
    double log_value(int w) const;  // natural log; -inf at w = 0

    bool exact_available() const { return exact_ok_; }
    uint128 exact(int w) const;  // throws RangeError if not exact_available

    // Test hook: a copy with entry w shifted by delta, for fault-injection
    // of the identity checks.
    LambdaPotential with_perturbed_entry(int w, long long delta) const;

private:
    int n_ = 0;
    bool exact_ok_ = false;
    std::vector<double> values_;
    std::vector<double> logs_;
    std::vector<uint128> exact_;
};

// Mean of the lambda potential over ordered codeword pairs:
// (1/N) sum_w A_w lambda(w).
double lambda_mean(const BinaryDistanceDistribution& d);
double lambda_mean(const BinaryDistanceDistribution& d, const LambdaPotential& table);

// Quadratic discrepancy of a binary code over Hamming balls:
//   D_b = n C(2n, n) / 2^{n+1} - (1/N) sum_w A_w lambda(w).
// The combinatorial constant is exact integer arithmetic for n <= 30 and
// log-domain beyond; the sum uses compensated accumulation.
double binary_discrepancy(const BinaryDistanceDistribution& d);

// Upper bound on the lambda mean through the spherical embedding, for even
// length n: (2^{n-1}/N^2) sqrt(n/pi) tau(embedding). Throws RangeError for
// odd n.
double lambda_mean_bound_spherical(const InnerProductSpectrum& embedding, int n);

// Cardinality-free bounds on the lambda mean for odd n = 2l - 1: the
// relaxed form 2^{n-1/2} sqrt(l/pi) always, plus the sharper intermediate
// 2^{n-l} (l/2) C(l, l/2) when l is even.
struct LambdaLpBound {
    double relaxed;
    std::optional<double> intermediate;
};

LambdaLpBound lambda_lp_bound(int n);

}  // namespace sphsum
