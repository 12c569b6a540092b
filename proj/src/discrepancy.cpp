#include "sphsum/discrepancy.hpp"

#include <cmath>

#include "sphsum/errors.hpp"

namespace sphsum {

namespace {

void require_dimension(int n) {
    if (n < 2) throw RangeError("dimension must be at least 2");
}

// Tail of the Stirling series for ln Gamma: sum B_{2k}/(2k(2k-1) x^{2k-1}).
double stirling_tail(double x) {
    const double x2 = x * x;
    double inv = 1.0 / x;
    double s = inv / 12.0;
    inv /= x2;
    s -= inv / 360.0;
    inv /= x2;
    s += inv / 1260.0;
    inv /= x2;
    s -= inv / 1680.0;
    inv /= x2;
    s += inv / 1188.0;
    inv /= x2;
    s -= inv * 691.0 / 360360.0;
    return s;
}

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

double ln_binomial(long long n, long long k) {
    return std::lgamma(static_cast<double>(n) + 1.0) -
           std::lgamma(static_cast<double>(k) + 1.0) -
           std::lgamma(static_cast<double>(n - k) + 1.0);
}

}  // namespace

double mean_distance(int n) {
    require_dimension(n);
    const double x = 0.5 * n;
    if (n < 40) {
        // Gamma(x)^2 / (Gamma(x - 1/4) Gamma(x + 1/4)); arguments stay small
        // enough for direct evaluation.
        return std::sqrt(2.0) * std::tgamma(x) * std::tgamma(x) /
               (std::tgamma(x - 0.25) * std::tgamma(x + 0.25));
    }
    // Same ratio through Stirling with the ln x terms cancelled exactly:
    // log of the ratio = -(x - 3/4) log1p(-u) - (x - 1/4) log1p(u) + tails,
    // u = 1/(4x). No large-term cancellation, ~1 ulp for all n.
    const double u = 0.25 / x;
    const double f = -(x - 0.75) * std::log1p(-u) - (x - 0.25) * std::log1p(u) +
                     2.0 * stirling_tail(x) - stirling_tail(x - 0.25) - stirling_tail(x + 0.25);
    return std::sqrt(2.0) * std::exp(f);
}

double stolarsky_constant(int n) {
    require_dimension(n);
    return (n - 1.0) * std::sqrt(M_PI) *
           std::exp(std::lgamma(0.5 * (n - 1)) - std::lgamma(0.5 * n));
}

SphereConstants sphere_constants(int n) {
    return SphereConstants{n, mean_distance(n), stolarsky_constant(n)};
}

double spherical_discrepancy(double tau, int n, long long N) {
    require_dimension(n);
    if (N < 1) throw RangeError("code size must be positive");
    if (tau < 0.0) throw RangeError("sum of distances cannot be negative");
    const double Nd = static_cast<double>(N);
    return (mean_distance(n) - tau / (Nd * Nd)) / stolarsky_constant(n);
}

// ---------------------------------------------------------------------------

LambdaPotential::LambdaPotential(int n) : n_(n) {
    if (n < 1) throw RangeError("length must be positive");
    exact_ok_ = n <= 62;
    values_.assign(static_cast<std::size_t>(n) + 1, 0.0);
    logs_.assign(static_cast<std::size_t>(n) + 1, -HUGE_VAL);
    if (exact_ok_) exact_.assign(static_cast<std::size_t>(n) + 1, 0);

    for (int w = 1; w <= n; ++w) {
        const int i = (w + 1) / 2;
        // lambda(w) = 2^{n-2i} i C(2i, i); for w = n odd the power is -1 and
        // the central binomial is even, so the value stays integral.
        logs_[static_cast<std::size_t>(w)] =
            (n - 2 * i) * std::log(2.0) + std::log(static_cast<double>(i)) +
            ln_binomial(2LL * i, i);
        if (exact_ok_) {
            uint128 v = 1;
            for (int j = 1; j <= i; ++j) v = v * static_cast<unsigned>(i + j) / static_cast<unsigned>(j);
            v *= static_cast<unsigned>(i);
            const int shift = n - 2 * i;
            if (shift >= 0)
                v <<= shift;
            else
                v >>= 1;
            exact_[static_cast<std::size_t>(w)] = v;
            values_[static_cast<std::size_t>(w)] = static_cast<double>(v);
        } else {
            values_[static_cast<std::size_t>(w)] = std::exp(logs_[static_cast<std::size_t>(w)]);
        }
    }
}

double LambdaPotential::value(int w) const {
    if (w < 0 || w > n_) throw RangeError("distance outside 0..n");
    return values_[static_cast<std::size_t>(w)];
}

double LambdaPotential::log_value(int w) const {
    if (w < 0 || w > n_) throw RangeError("distance outside 0..n");
    return logs_[static_cast<std::size_t>(w)];
}

uint128 LambdaPotential::exact(int w) const {
    if (!exact_ok_) throw RangeError("exact table only available for length <= 62");
    if (w < 0 || w > n_) throw RangeError("distance outside 0..n");
    return exact_[static_cast<std::size_t>(w)];
}

LambdaPotential LambdaPotential::with_perturbed_entry(int w, long long delta) const {
    LambdaPotential out = *this;
    if (w < 0 || w > n_) throw RangeError("distance outside 0..n");
    out.values_[static_cast<std::size_t>(w)] += static_cast<double>(delta);
    if (out.exact_ok_)
        out.exact_[static_cast<std::size_t>(w)] += static_cast<uint128>(delta);
    out.logs_[static_cast<std::size_t>(w)] =
        std::log(out.values_[static_cast<std::size_t>(w)]);
    return out;
}

// ---------------------------------------------------------------------------

double lambda_mean(const BinaryDistanceDistribution& d, const LambdaPotential& table) {
    if (table.length() != d.length) throw RangeError("potential length mismatch");
    KahanSum acc;
    for (const auto& e : d.counts)
        if (e.w > 0) acc.add(e.count * table.value(e.w));
    // (1/N) sum_w A_w lambda(w), the mean over ordered codeword pairs.
    return acc.value() / static_cast<double>(d.size);
}

double lambda_mean(const BinaryDistanceDistribution& d) {
    return lambda_mean(d, LambdaPotential(d.length));
}

double binary_discrepancy(const BinaryDistanceDistribution& d) {
    d.validate();
    const int n = d.length;
    double constant;
    if (n <= 30) {
        long long c = 1;  // C(2n, n) fits well below 2^63 for n <= 30
        for (int j = 1; j <= n; ++j) c = c * (n + j) / j;
        constant = static_cast<double>(n) * static_cast<double>(c) / std::ldexp(1.0, n + 1);
    } else {
        constant = std::exp(std::log(static_cast<double>(n)) + ln_binomial(2LL * n, n) -
                            (n + 1) * std::log(2.0));
    }
    return constant - lambda_mean(d);
}

double lambda_mean_bound_spherical(const InnerProductSpectrum& embedding, int n) {
    if (n % 2 != 0) throw RangeError("spherical route requires even length");
    if (embedding.dimension != n) throw RangeError("embedding dimension mismatch");
    const double N = static_cast<double>(embedding.size);
    const double tau = sum_of_distances(embedding);
    return std::ldexp(1.0, n - 1) / (N * N) * std::sqrt(n / M_PI) * tau;
}

LambdaLpBound lambda_lp_bound(int n) {
    if (n < 1 || n % 2 == 0) throw RangeError("this bound requires odd length");
    const long long l = (n + 1) / 2;
    LambdaLpBound out;
    out.relaxed = std::exp((n - 0.5) * std::log(2.0)) * std::sqrt(static_cast<double>(l) / M_PI);
    if (l % 2 == 0) {
        double binom;
        if (l <= 60) {
            long long b = 1;
            for (long long j = 1; j <= l / 2; ++j) b = b * (l / 2 + j) / j;
            binom = static_cast<double>(b);
        } else {
            binom = std::exp(ln_binomial(l, l / 2));
        }
        out.intermediate = std::ldexp(1.0, static_cast<int>(n - l)) * 0.5 *
                           static_cast<double>(l) * binom;
    }
    return out;
}

}  // namespace sphsum
