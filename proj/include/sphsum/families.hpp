#pragma once

#include <utility>
#include <vector>

namespace sphsum {

// A point-regular spherical code summarized by its inner-product spectrum:
// every point sees `multiplicity` neighbors at inner product `value`.
// Multiplicities are reals because nonlinear codes only have averaged
// distributions; they are exact integers for the distance-invariant
// families constructed here.
struct SpectrumEntry {
    double value;
    double multiplicity;
};

struct InnerProductSpectrum {
    int dimension = 2;
    long long size = 0;
    std::vector<SpectrumEntry> entries;  // sorted by value ascending

    double separation() const;  // largest inner product
    // Throws ValidationError unless multiplicities sum to size-1, values lie
    // in [-1, 1) and are pairwise distinct.
    void validate() const;
};

// Sum of pairwise Euclidean distances over all ordered pairs (the diagonal
// contributes zero). Compensated accumulation keeps ~10 significant digits
// for sizes up to a few 10^8.
double sum_of_distances(const InnerProductSpectrum& spec);

// N (1 + sum m_j v_j^2): equals N^2/dimension exactly when the code is a
// tight frame.
double frame_potential(const InnerProductSpectrum& spec);

// ---------------------------------------------------------------------------
// Equiangular line systems

// Code of N = 2M unit vectors from M equiangular lines with common inner
// product s: each vector sees M-1 others at s, M-1 at -s, and its antipode.
InnerProductSpectrum equiangular_spectrum(long long M, double s, int n);

struct DeCaenParameters {
    int r;
    long long n;
    long long N;
    double s;
};

// The quadratic-size equiangular family: n = 3*2^(2r-1) - 1, N = (4/9)(n+1)^2,
// s = 1/(2^r + 1).
DeCaenParameters de_caen_parameters(int r);

// ---------------------------------------------------------------------------
// Strongly regular graphs

struct SrgParameters {
    long long v = 0;  // vertices
    long long k = 0;  // valency
    long long a = 0;  // common neighbors of adjacent vertices
    long long c = 0;  // common neighbors of nonadjacent vertices

    double delta() const;  // (a-c)^2 + 4(k-c)
    double r1() const;     // larger non-principal eigenvalue
    double r2() const;
    long long n1() const;  // eigenspace dimensions; validated integral
    long long n2() const;
    // Feasibility: k(k-a-1) = (v-k-1)c, delta >= 0, n1/n2 positive integers.
    // Throws RangeError when infeasible.
    void validate() const;
};

enum class Eigenspace { First, Second };

// Spherical embedding of the graph: project the standard basis onto one
// eigenspace. Gives v unit vectors in dimension n1 (or n2) with two inner
// products, multiplicities k and v-1-k.
InnerProductSpectrum srg_embedding(const SrgParameters& p, Eigenspace which);

// Parameter presets: points on a quadric in a (2m)-dimensional projective
// geometry over GF(q), and on a hyperbolic quadric in dimension 2m-1.
SrgParameters quadric_srg(int m, long long q);
SrgParameters hyperbolic_srg(int m, long long q);

bool is_prime_power(long long q);

// ---------------------------------------------------------------------------
// Binary codes

// Distance distribution of a binary code: count(w) is the average number of
// codewords at Hamming distance w from a fixed codeword. Stored sparsely;
// count(0) == 1 and the counts sum to the code size.
struct WeightCount {
    int w;
    double count;
};

struct BinaryDistanceDistribution {
    int length = 0;
    long long size = 0;
    std::vector<WeightCount> counts;  // sorted by w, including w = 0

    double count(int w) const;
    void validate() const;  // throws ValidationError
};

// Two-weight linear codes of length (2^{4r}-1)/(2^r+1) and size 2^{4r}.
BinaryDistanceDistribution sidelnikov(int r);

// Nonlinear codes of length n = 2^{2m} and size n^2 with distances
// concentrated at n/2 and (n +- sqrt n)/2.
BinaryDistanceDistribution kerdock(int m);

// Dual of the double-error-correcting BCH code of length 2^r - 1. For odd r
// the classical three-weight distribution is returned directly; for even r
// the printed distribution is inconsistent, so the code is enumerated from
// the trace construction (feasible for r <= 8).
BinaryDistanceDistribution dual_bch(int r);

// The distribution as printed in the literature. Valid for odd r; for even
// r it fails the sum check (and has non-integral weight labels), so this
// throws ValidationError describing the failure.
BinaryDistanceDistribution dual_bch_printed(int r);

// Trace-construction enumeration, any r in 3..8.
BinaryDistanceDistribution dual_bch_enumerated(int r);

// All C(n,2) words of Hamming weight two.
BinaryDistanceDistribution weight_two(int n);

// Map a binary code to the sphere by z -> ((-1)^{z_i}/sqrt(n))_i: distance w
// becomes inner product 1 - 2w/n.
InnerProductSpectrum spherical_embedding(const BinaryDistanceDistribution& d);

}  // namespace sphsum
