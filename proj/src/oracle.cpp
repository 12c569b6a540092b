#include "sphsum/oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <boost/math/special_functions/beta.hpp>
#include <cmath>

#include "sphsum/errors.hpp"

namespace sphsum {

namespace {

class KahanSum {
public:
    void add(double x) {
        const double y = x - comp_;
        const double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Deterministic substream RNG: splitmix64-seeded xoshiro-style mixing is
// overkill here; the standard engine seeded per shard is reproducible, but
// uniform/normal draws go through fixed arithmetic instead of
// std::*_distribution so results do not depend on the standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9E3779B97F4A7C15ULL) {}

    std::uint64_t next_u64() {
        // splitmix64
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform01() - 1.0;
            v = 2.0 * uniform01() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        have_spare_ = true;
        return u * f;
    }

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

std::uint64_t substream_seed(std::uint64_t seed, int shard) {
    return seed ^ (0xD1B54A32D192ED03ULL * static_cast<std::uint64_t>(shard + 1));
}

}  // namespace

double PointSet::inner(std::size_t i, std::size_t j) const {
    double acc = 0.0;
    for (int d = 0; d < dimension; ++d)
        acc += points[i][static_cast<std::size_t>(d)] * points[j][static_cast<std::size_t>(d)];
    return acc;
}

void PointSet::validate() const {
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (static_cast<int>(points[i].size()) != dimension)
            throw ValidationError("point dimension mismatch");
        if (std::fabs(inner(i, i) - 1.0) > 1e-12)
            throw ValidationError("points must have unit norm");
        for (std::size_t j = 0; j < i; ++j) {
            const double ip = inner(i, j);
            if (ip < -1.0 - 1e-12 || ip > 1.0 + 1e-12)
                throw ValidationError("pairwise inner product outside [-1, 1]");
        }
    }
}

PointSet simplex_points(int n) {
    if (n < 2) throw RangeError("dimension must be at least 2");
    // Vertices e_i - centroid in R^{n+1}, reflected so the all-ones direction
    // lands on the last axis, which is then dropped.
    const int N = n + 1;
    std::vector<double> w(static_cast<std::size_t>(N));
    const double u = 1.0 / std::sqrt(static_cast<double>(N));
    for (int i = 0; i < N; ++i) w[static_cast<std::size_t>(i)] = u;
    w[static_cast<std::size_t>(N - 1)] -= 1.0;
    double w2 = 0.0;
    for (double x : w) w2 += x * x;

    PointSet ps;
    ps.dimension = n;
    for (int i = 0; i < N; ++i) {
        std::vector<double> v(static_cast<std::size_t>(N), -1.0 / N);
        v[static_cast<std::size_t>(i)] += 1.0;
        double dot = 0.0;
        for (int d = 0; d < N; ++d) dot += v[static_cast<std::size_t>(d)] * w[static_cast<std::size_t>(d)];
        for (int d = 0; d < N; ++d) v[static_cast<std::size_t>(d)] -= 2.0 * dot / w2 * w[static_cast<std::size_t>(d)];
        v.pop_back();  // last coordinate is zero after the reflection
        double norm = 0.0;
        for (double x : v) norm += x * x;
        norm = std::sqrt(norm);
        for (double& x : v) x /= norm;
        ps.points.push_back(std::move(v));
    }
    return ps;
}

PointSet biorthogonal_points(int n) {
    if (n < 2) throw RangeError("dimension must be at least 2");
    PointSet ps;
    ps.dimension = n;
    for (int i = 0; i < n; ++i)
        for (double sign : {1.0, -1.0}) {
            std::vector<double> v(static_cast<std::size_t>(n), 0.0);
            v[static_cast<std::size_t>(i)] = sign;
            ps.points.push_back(std::move(v));
        }
    return ps;
}

PointSet srg_points(const SrgParameters& p, const std::vector<std::vector<int>>& adjacency,
                    Eigenspace which) {
    p.validate();
    const auto v = static_cast<Eigen::Index>(p.v);
    if (static_cast<long long>(adjacency.size()) != p.v)
        throw ValidationError("adjacency size does not match vertex count");
    Eigen::MatrixXd A(v, v);
    for (Eigen::Index i = 0; i < v; ++i) {
        if (static_cast<long long>(adjacency[static_cast<std::size_t>(i)].size()) != p.v)
            throw ValidationError("adjacency matrix must be square");
        long long row = 0;
        for (Eigen::Index j = 0; j < v; ++j) {
            const int e = adjacency[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (e != 0 && e != 1) throw ValidationError("adjacency entries must be 0/1");
            if (e != adjacency[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
                throw ValidationError("adjacency matrix must be symmetric");
            if (i == j && e != 0) throw ValidationError("adjacency diagonal must be zero");
            row += e;
            A(i, j) = e;
        }
        if (row != p.k) throw ValidationError("adjacency row sum does not match valency");
    }
    // A^2 = kI + aA + c(J - I - A) characterizes the parameters.
    Eigen::MatrixXd A2 = A * A;
    for (Eigen::Index i = 0; i < v; ++i)
        for (Eigen::Index j = 0; j < v; ++j) {
            const double expect = (i == j ? static_cast<double>(p.k) : 0.0) +
                                  static_cast<double>(p.a) * A(i, j) +
                                  static_cast<double>(p.c) * (1.0 - (i == j ? 1.0 : 0.0) - A(i, j));
            if (std::fabs(A2(i, j) - expect) > 1e-9)
                throw ValidationError("adjacency matrix is not strongly regular with these parameters");
        }

    const double theta = which == Eigenspace::First ? p.r1() : p.r2();
    const long long dim = which == Eigenspace::First ? p.n1() : p.n2();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
    std::vector<Eigen::Index> cols;
    for (Eigen::Index j = 0; j < v; ++j)
        if (std::fabs(es.eigenvalues()(j) - theta) < 1e-6) cols.push_back(j);
    if (static_cast<long long>(cols.size()) != dim)
        throw InternalError("eigenspace multiplicity does not match the parameters");

    PointSet ps;
    ps.dimension = static_cast<int>(dim);
    for (Eigen::Index i = 0; i < v; ++i) {
        std::vector<double> x(cols.size());
        double norm2 = 0.0;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            x[c] = es.eigenvectors()(i, cols[c]);
            norm2 += x[c] * x[c];
        }
        const double norm = std::sqrt(norm2);
        for (double& val : x) val /= norm;
        ps.points.push_back(std::move(x));
    }
    return ps;
}

std::vector<std::vector<int>> petersen_adjacency() {
    // Vertices are the 2-subsets of {0..4}; edges join disjoint pairs.
    std::vector<std::pair<int, int>> vs;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) vs.emplace_back(i, j);
    std::vector<std::vector<int>> adj(10, std::vector<int>(10, 0));
    for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = 0; b < vs.size(); ++b) {
            if (a == b) continue;
            const bool disjoint = vs[a].first != vs[b].first && vs[a].first != vs[b].second &&
                                  vs[a].second != vs[b].first && vs[a].second != vs[b].second;
            adj[a][b] = disjoint ? 1 : 0;
        }
    return adj;
}

PointSet cube_embedding_points(const BinaryCode& code) {
    if (code.size() == 0) throw ValidationError("empty code");
    PointSet ps;
    ps.dimension = code.length;
    const double scale = 1.0 / std::sqrt(static_cast<double>(code.length));
    for (std::size_t i = 0; i < code.size(); ++i) {
        std::vector<double> v(static_cast<std::size_t>(code.length));
        for (int b = 0; b < code.length; ++b) {
            const bool bit = (code.words[i][static_cast<std::size_t>(b) / 64] >>
                              (static_cast<std::size_t>(b) % 64)) & 1u;
            v[static_cast<std::size_t>(b)] = bit ? -scale : scale;
        }
        ps.points.push_back(std::move(v));
    }
    return ps;
}

double pairwise_distance_sum(const PointSet& ps) {
    KahanSum acc;
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i + 1; j < ps.size(); ++j) {
            double d2 = 0.0;
            for (int d = 0; d < ps.dimension; ++d) {
                const double diff = ps.points[i][static_cast<std::size_t>(d)] -
                                    ps.points[j][static_cast<std::size_t>(d)];
                d2 += diff * diff;
            }
            acc.add(2.0 * std::sqrt(d2));  // ordered pairs
        }
    return acc.value();
}

double ScaledBinaryDiscrepancy::value() const {
    const double scale = std::ldexp(1.0, 2 * length) * static_cast<double>(size) *
                         static_cast<double>(size);
    return static_cast<double>(numerator) / scale;
}

ScaledBinaryDiscrepancy brute_binary_discrepancy(const BinaryCode& code) {
    const int n = code.length;
    if (n > 14) throw RangeError("exhaustive sweep limited to length <= 14");
    const long long N = static_cast<long long>(code.size());
    std::vector<std::uint64_t> words(code.size());
    for (std::size_t i = 0; i < code.size(); ++i) words[i] = code.words[i][0];

    // Ball volumes v(t) = sum_{i<=t} C(n, i).
    std::vector<long long> vol(static_cast<std::size_t>(n) + 1);
    long long c = 1, run = 1;
    vol[0] = 1;
    for (int i = 1; i <= n; ++i) {
        c = c * (n - i + 1) / i;
        run += c;
        vol[static_cast<std::size_t>(i)] = run;
    }

    int128 total = 0;
    std::vector<int> hist(static_cast<std::size_t>(n) + 1);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        std::fill(hist.begin(), hist.end(), 0);
        for (std::uint64_t w : words) ++hist[static_cast<std::size_t>(std::popcount(x ^ w))];
        long long ball = 0;
        for (int t = 0; t <= n; ++t) {
            ball += hist[static_cast<std::size_t>(t)];
            const long long diff = (ball << n) - N * vol[static_cast<std::size_t>(t)];
            total += static_cast<int128>(diff) * diff;
        }
    }
    return ScaledBinaryDiscrepancy{total, n, N};
}

ScaledBinaryDiscrepancy binary_discrepancy_identity_scaled(const BinaryCode& code,
                                                           const LambdaPotential& table) {
    const int n = code.length;
    if (n > 20) throw RangeError("scaled identity limited to length <= 20");
    if (table.length() != n) throw RangeError("potential length mismatch");
    const long long N = static_cast<long long>(code.size());

    std::vector<long long> pair_counts(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t i = 0; i < code.size(); ++i)
        for (std::size_t j = 0; j < code.size(); ++j)
            ++pair_counts[static_cast<std::size_t>(code.distance(i, j))];

    // 2^{2n} N^2 D = 2^{n-1} N^2 n C(2n,n) - 2^{2n} sum_pairs lambda(d).
    long long binom = 1;
    for (int j = 1; j <= n; ++j) binom = binom * (n + j) / j;
    int128 total = (static_cast<int128>(N) * N * n * binom) << (n - 1);
    for (int w = 1; w <= n; ++w) {
        if (pair_counts[static_cast<std::size_t>(w)] == 0) continue;
        const int128 scaled = static_cast<int128>(table.exact(w)) << (2 * n);
        total -= scaled * pair_counts[static_cast<std::size_t>(w)];
    }
    return ScaledBinaryDiscrepancy{total, n, N};
}

ScaledBinaryDiscrepancy binary_discrepancy_identity_scaled(const BinaryCode& code) {
    return binary_discrepancy_identity_scaled(code, LambdaPotential(code.length));
}

double cap_measure(int n, double t) {
    if (n < 2) throw RangeError("dimension must be at least 2");
    if (t >= 1.0) return 0.0;
    if (t <= -1.0) return 1.0;
    if (t < 0.0) return 1.0 - cap_measure(n, -t);
    return 0.5 * boost::math::ibeta(0.5 * (n - 1), 0.5, 1.0 - t * t);
}

MonteCarloEstimate monte_carlo_cap_discrepancy(const PointSet& ps, long long samples,
                                               std::uint64_t seed, int shards) {
    if (samples < 10000) throw RangeError("need at least 10^4 samples");
    if (shards < 1) throw RangeError("shard count must be positive");
    const auto N = static_cast<double>(ps.size());
    const int n = ps.dimension;

    KahanSum sum, sum_sq;
    std::vector<double> x(static_cast<std::size_t>(n));
    const long long per = samples / shards;
    for (int shard = 0; shard < shards; ++shard) {
        Rng rng(substream_seed(seed, shard));
        const long long count = shard == shards - 1 ? samples - per * shard : per;
        for (long long it = 0; it < count; ++it) {
            double norm2 = 0.0;
            for (int d = 0; d < n; ++d) {
                x[static_cast<std::size_t>(d)] = rng.normal();
                norm2 += x[static_cast<std::size_t>(d)] * x[static_cast<std::size_t>(d)];
            }
            const double inv = 1.0 / std::sqrt(norm2);
            const double t = 2.0 * rng.uniform01() - 1.0;
            long long inside = 0;
            for (const auto& z : ps.points) {
                double dot = 0.0;
                for (int d = 0; d < n; ++d) dot += x[static_cast<std::size_t>(d)] * z[static_cast<std::size_t>(d)];
                if (dot * inv >= t) ++inside;
            }
            const double g = static_cast<double>(inside) / N - cap_measure(n, t);
            const double y = 2.0 * g * g;  // factor 2 = |t-interval|
            sum.add(y);
            sum_sq.add(y * y);
        }
    }
    const double mean = sum.value() / static_cast<double>(samples);
    const double var = std::max(0.0, sum_sq.value() / static_cast<double>(samples) - mean * mean);
    return MonteCarloEstimate{mean, std::sqrt(var / static_cast<double>(samples)), samples};
}

}  // namespace sphsum
