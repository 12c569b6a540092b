#pragma once

#include <cstdint>
#include <vector>

#include "sphsum/binary.hpp"
#include "sphsum/discrepancy.hpp"
#include "sphsum/families.hpp"

// Independent brute-force references: explicit coordinates, exhaustive
// binary-space sweeps, Monte Carlo integration. Used by tests and the
// `verify` command only; nothing here feeds the bound computations.

namespace sphsum {

struct PointSet {
    int dimension = 0;
    std::vector<std::vector<double>> points;  // unit vectors

    std::size_t size() const { return points.size(); }
    double inner(std::size_t i, std::size_t j) const;
    void validate() const;  // unit norms within 1e-12
};

// N = n+1 unit vectors with mutual inner product -1/n.
PointSet simplex_points(int n);

// The 2n vectors +-e_i.
PointSet biorthogonal_points(int n);

// Rows of the orthogonal projector onto the chosen adjacency eigenspace,
// rescaled to unit norm and expressed in eigenbasis coordinates. The
// adjacency matrix is validated against the parameters (row sums, the
// square identity A^2 = kI + aA + c(J - I - A)).
PointSet srg_points(const SrgParameters& p,
                    const std::vector<std::vector<int>>& adjacency,
                    Eigenspace which);

// Kneser graph on the 2-subsets of a 5-set: the standard SRG(10,3,0,1).
std::vector<std::vector<int>> petersen_adjacency();

// +-1/sqrt(n) coordinate vectors of the codewords.
PointSet cube_embedding_points(const BinaryCode& code);

// Direct O(N^2 n) pairwise sum with compensated accumulation.
double pairwise_distance_sum(const PointSet& ps);

// Exact quadratic discrepancy of a binary code, as the integer
// numerator / (2^{2 length} size^2). Computed two ways: `brute` sweeps all
// 2^n ball centers (length <= 14); `identity` goes through the lambda
// potential (length <= 20). Equality of the two numerators is the
// exactness contract.
struct ScaledBinaryDiscrepancy {
    int128 numerator = 0;
    int length = 0;
    long long size = 0;

    double value() const;
};

ScaledBinaryDiscrepancy brute_binary_discrepancy(const BinaryCode& code);
ScaledBinaryDiscrepancy binary_discrepancy_identity_scaled(const BinaryCode& code);
ScaledBinaryDiscrepancy binary_discrepancy_identity_scaled(const BinaryCode& code,
                                                           const LambdaPotential& table);

// Normalized surface measure of the cap {y : x.y >= t} on S^{n-1}, via the
// regularized incomplete beta function.
double cap_measure(int n, double t);

struct MonteCarloEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
    long long samples = 0;
};

// Unbiased estimate of the cap-count double integral defining the quadratic
// discrepancy of a point set: sample a uniform center and a uniform level
// t in [-1, 1], compare the empirical cap count against the cap measure.
// Deterministic for a fixed (seed, shards) pair; shard substreams make
// parallel reproductions possible.
MonteCarloEstimate monte_carlo_cap_discrepancy(const PointSet& ps, long long samples,
                                               std::uint64_t seed, int shards = 1);

}  // namespace sphsum
