#include "sphsum/families.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <sstream>

#include "sphsum/errors.hpp"

namespace sphsum {

namespace {

// Compensated accumulation; multiplicities reach ~2.7e8 and we want ~10
// significant digits in the totals.
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

long long checked_pow(long long base, int exp, const char* what) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > (1LL << 62) / base) throw RangeError(std::string(what) + ": parameter too large");
        r *= base;
    }
    return r;
}

long long lround_checked(double x, const char* what) {
    const double r = std::round(x);
    if (std::fabs(x - r) > 1e-6) throw RangeError(std::string(what) + ": non-integral value");
    return static_cast<long long>(r);
}

}  // namespace

double InnerProductSpectrum::separation() const {
    if (entries.empty()) throw ValidationError("empty inner-product spectrum");
    double s = entries.front().value;
    for (const auto& e : entries) s = std::max(s, e.value);
    return s;
}

void InnerProductSpectrum::validate() const {
    if (dimension < 2) throw ValidationError("spectrum dimension must be at least 2");
    if (size < 1) throw ValidationError("spectrum size must be positive");
    KahanSum total;
    for (const auto& e : entries) {
        if (!(e.value >= -1.0 - 1e-12) || !(e.value < 1.0))
            throw ValidationError("inner products must lie in [-1, 1)");
        if (e.multiplicity < 0.0) throw ValidationError("negative multiplicity");
        total.add(e.multiplicity);
    }
    for (std::size_t i = 1; i < entries.size(); ++i)
        if (entries[i - 1].value == entries[i].value)
            throw ValidationError("duplicate inner-product value");
    const double expect = static_cast<double>(size) - 1.0;
    if (std::fabs(total.value() - expect) > 1e-9 * std::max(1.0, expect))
        throw ValidationError("multiplicities must sum to size - 1");
}

double sum_of_distances(const InnerProductSpectrum& spec) {
    KahanSum acc;
    for (const auto& e : spec.entries)
        acc.add(e.multiplicity * std::sqrt(2.0 * (1.0 - e.value)));
    return static_cast<double>(spec.size) * acc.value();
}

double frame_potential(const InnerProductSpectrum& spec) {
    KahanSum acc;
    acc.add(1.0);  // diagonal
    for (const auto& e : spec.entries) acc.add(e.multiplicity * e.value * e.value);
    return static_cast<double>(spec.size) * acc.value();
}

// ---------------------------------------------------------------------------

InnerProductSpectrum equiangular_spectrum(long long M, double s, int n) {
    if (M < 2) throw RangeError("need at least two lines");
    if (!(s > 0.0) || !(s < 1.0)) throw RangeError("line angle parameter must be in (0, 1)");
    InnerProductSpectrum spec;
    spec.dimension = n;
    spec.size = 2 * M;
    spec.entries = {{-1.0, 1.0},
                    {-s, static_cast<double>(M - 1)},
                    {s, static_cast<double>(M - 1)}};
    spec.validate();
    return spec;
}

DeCaenParameters de_caen_parameters(int r) {
    if (r < 1 || r > 14) throw RangeError("family parameter must be in 1..14");
    const long long n = 3 * checked_pow(2, 2 * r - 1, "equiangular family") - 1;
    const long long N = checked_pow(2, 4 * r, "equiangular family");  // (4/9)(n+1)^2
    return DeCaenParameters{r, n, N, 1.0 / (checked_pow(2, r, "equiangular family") + 1.0)};
}

// ---------------------------------------------------------------------------

double SrgParameters::delta() const {
    return static_cast<double>(a - c) * (a - c) + 4.0 * (k - c);
}

double SrgParameters::r1() const { return 0.5 * ((a - c) + std::sqrt(delta())); }
double SrgParameters::r2() const { return 0.5 * ((a - c) - std::sqrt(delta())); }

long long SrgParameters::n1() const {
    const double sd = std::sqrt(delta());
    return lround_checked(0.5 * ((v - 1) + ((v - 1.0) * (c - a) - 2.0 * k) / sd),
                          "eigenspace dimension");
}

long long SrgParameters::n2() const {
    const double sd = std::sqrt(delta());
    return lround_checked(0.5 * ((v - 1) - ((v - 1.0) * (c - a) - 2.0 * k) / sd),
                          "eigenspace dimension");
}

void SrgParameters::validate() const {
    if (v < 2 || k < 1 || k >= v || a < 0 || c < 0)
        throw RangeError("infeasible strongly regular graph parameters");
    if (k * (k - a - 1) != (v - k - 1) * c)
        throw RangeError("infeasible strongly regular graph parameters: edge count identity");
    if (delta() < 0.0) throw RangeError("infeasible strongly regular graph parameters: delta < 0");
    const long long d1 = n1(), d2 = n2();
    if (d1 < 1 || d2 < 1 || d1 + d2 != v - 1)
        throw RangeError("infeasible strongly regular graph parameters: eigenspace dimensions");
}

InnerProductSpectrum srg_embedding(const SrgParameters& p, Eigenspace which) {
    p.validate();
    const double theta = which == Eigenspace::First ? p.r1() : p.r2();
    InnerProductSpectrum spec;
    spec.dimension = static_cast<int>(which == Eigenspace::First ? p.n1() : p.n2());
    spec.size = p.v;
    const double near = theta / static_cast<double>(p.k);
    const double far = -(1.0 + theta) / static_cast<double>(p.v - 1 - p.k);
    spec.entries = {{near, static_cast<double>(p.k)}, {far, static_cast<double>(p.v - 1 - p.k)}};
    std::sort(spec.entries.begin(), spec.entries.end(),
              [](const SpectrumEntry& x, const SpectrumEntry& y) { return x.value < y.value; });
    spec.validate();
    return spec;
}

bool is_prime_power(long long q) {
    if (q < 2) return false;
    long long p = 0;
    for (long long d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return true;  // q itself prime
    while (q % p == 0) q /= p;
    return q == 1;
}

SrgParameters quadric_srg(int m, long long q) {
    if (m < 2) throw RangeError("quadric preset needs m >= 2");
    if (!is_prime_power(q)) throw RangeError("field order must be a prime power");
    const long long q2m = checked_pow(q, 2 * m, "quadric preset");
    SrgParameters p;
    p.v = (q2m - 1) / (q - 1);
    p.k = q * (q2m / (q * q) - 1) / (q - 1);
    p.a = q * q * (q2m / (q * q * q * q) - 1) / (q - 1) + q - 1;
    p.c = (q2m / (q * q) - 1) / (q - 1);
    p.validate();
    return p;
}

SrgParameters hyperbolic_srg(int m, long long q) {
    if (m < 2) throw RangeError("hyperbolic preset needs m >= 2");
    if (!is_prime_power(q)) throw RangeError("field order must be a prime power");
    const long long q2m1 = checked_pow(q, 2 * m - 1, "hyperbolic preset");
    const long long qm1 = checked_pow(q, m - 1, "hyperbolic preset");
    SrgParameters p;
    p.v = (q2m1 - 1) / (q - 1) + qm1;
    p.k = q * (q2m1 / (q * q) - 1) / (q - 1) + qm1;
    p.a = p.k - q2m1 / (q * q) - 1;
    p.c = p.k / q;
    p.validate();
    return p;
}

// ---------------------------------------------------------------------------

double BinaryDistanceDistribution::count(int w) const {
    for (const auto& e : counts)
        if (e.w == w) return e.count;
    return 0.0;
}

void BinaryDistanceDistribution::validate() const {
    if (length < 1) throw ValidationError("code length must be positive");
    if (size < 1) throw ValidationError("code size must be positive");
    KahanSum total;
    for (const auto& e : counts) {
        if (e.w < 0 || e.w > length) {
            std::ostringstream msg;
            msg << "distance " << e.w << " outside 0.." << length;
            throw ValidationError(msg.str());
        }
        if (e.count < 0.0) throw ValidationError("negative distance count");
        total.add(e.count);
    }
    for (std::size_t i = 1; i < counts.size(); ++i)
        if (counts[i - 1].w >= counts[i].w)
            throw ValidationError("distance counts must be sorted by distance");
    if (count(0) != 1.0) throw ValidationError("count at distance zero must be 1");
    const double expect = static_cast<double>(size);
    if (std::fabs(total.value() - expect) > 1e-9 * expect) {
        std::ostringstream msg;
        msg << "distance distribution sums to " << total.value() << ", expected " << expect;
        throw ValidationError(msg.str());
    }
}

BinaryDistanceDistribution sidelnikov(int r) {
    if (r < 1 || r > 13) throw RangeError("two-weight family parameter must be in 1..13");
    const long long N = checked_pow(2, 4 * r, "two-weight family");
    const long long n = (N - 1) / (checked_pow(2, r, "two-weight family") + 1);
    const long long w1 = (checked_pow(2, 4 * r - 1, "w1") - checked_pow(2, 2 * r - 1, "w1")) /
                         (checked_pow(2, r, "w1") + 1);
    const long long w2 = (checked_pow(2, 4 * r - 1, "w2") + checked_pow(2, 3 * r - 1, "w2")) /
                         (checked_pow(2, r, "w2") + 1);
    BinaryDistanceDistribution d;
    d.length = static_cast<int>(n);
    d.size = N;
    d.counts = {{0, 1.0},
                {static_cast<int>(w1), static_cast<double>(N - n - 1)},
                {static_cast<int>(w2), static_cast<double>(n)}};
    d.validate();
    return d;
}

BinaryDistanceDistribution kerdock(int m) {
    if (m < 2 || m > 12) throw RangeError("nonlinear family parameter must be in 2..12");
    const long long n = checked_pow(2, 2 * m, "nonlinear family");
    const long long root = checked_pow(2, m, "nonlinear family");
    BinaryDistanceDistribution d;
    d.length = static_cast<int>(n);
    d.size = n * n;
    const double bulk = static_cast<double>(n) * (n / 2.0 - 1.0);
    d.counts = {{0, 1.0},
                {static_cast<int>((n - root) / 2), bulk},
                {static_cast<int>(n / 2), 2.0 * (n - 1.0)},
                {static_cast<int>((n + root) / 2), bulk},
                {static_cast<int>(n), 1.0}};
    d.validate();
    return d;
}

namespace {

// GF(2^r) via an irreducible polynomial; multiplication by shift-and-reduce.
constexpr std::array<unsigned, 9> kFieldPoly = {0, 0, 0b111, 0b1011, 0b10011,
                                                0b100101, 0b1000011, 0b10001001, 0b100011101};

unsigned gf_mul(unsigned a, unsigned b, int r) {
    const unsigned poly = kFieldPoly[static_cast<std::size_t>(r)];
    unsigned res = 0;
    while (b != 0) {
        if (b & 1u) res ^= a;
        b >>= 1;
        a <<= 1;
        if (a >> r) a ^= poly;
    }
    return res;
}

}  // namespace

BinaryDistanceDistribution dual_bch_enumerated(int r) {
    if (r < 3 || r > 8) throw RangeError("enumeration supported for lengths 7..255 (r in 3..8)");
    const unsigned q = 1u << r;
    const int n = static_cast<int>(q) - 1;

    std::vector<std::uint8_t> tr(q);
    for (unsigned x = 0; x < q; ++x) {
        unsigned t = 0, y = x;
        for (int i = 0; i < r; ++i) {
            t ^= y;
            y = gf_mul(y, y, r);
        }
        tr[x] = static_cast<std::uint8_t>(t & 1u);
    }
    std::vector<unsigned> cube(q);
    for (unsigned x = 0; x < q; ++x) cube[x] = gf_mul(gf_mul(x, x, r), x, r);

    // The code {(tr(a x + b x^3))_{x != 0} : a, b in GF(2^r)} is linear, so
    // its distance distribution equals its weight distribution.
    std::vector<long long> freq(static_cast<std::size_t>(n) + 1, 0);
    std::vector<unsigned> ax(q);
    for (unsigned a = 0; a < q; ++a) {
        for (unsigned x = 1; x < q; ++x) ax[x] = gf_mul(a, x, r);
        for (unsigned b = 0; b < q; ++b) {
            int w = 0;
            for (unsigned x = 1; x < q; ++x) w += tr[ax[x] ^ gf_mul(b, cube[x], r)];
            ++freq[static_cast<std::size_t>(w)];
        }
    }

    BinaryDistanceDistribution d;
    d.length = n;
    d.size = static_cast<long long>(q) * q;
    for (int w = 0; w <= n; ++w)
        if (freq[static_cast<std::size_t>(w)] != 0)
            d.counts.push_back({w, static_cast<double>(freq[static_cast<std::size_t>(w)])});
    d.validate();
    return d;
}

namespace {

BinaryDistanceDistribution dual_bch_odd_printed(int r) {
    const long long n = checked_pow(2, r, "dual code family") - 1;
    const long long N = checked_pow(2, 2 * r, "dual code family");
    const long long half = (n + 1) / 2;                        // 2^{r-1}
    const long long dev = checked_pow(2, (r - 1) / 2, "dev");  // sqrt((n+1)/2)
    // Counts n(2^{r-2} -+ 2^{(r-3)/2}), exact integers for odd r >= 3.
    const double shift = std::sqrt(static_cast<double>(n + 1)) / (2.0 * std::sqrt(2.0));
    BinaryDistanceDistribution d;
    d.length = static_cast<int>(n);
    d.size = N;
    d.counts = {{0, 1.0},
                {static_cast<int>(half - dev), n * ((n + 1) / 4.0 + shift)},
                {static_cast<int>(half), n * (n + 3.0) / 2.0},
                {static_cast<int>(half + dev), n * ((n + 1) / 4.0 - shift)}};
    d.validate();
    return d;
}

}  // namespace

BinaryDistanceDistribution dual_bch_printed(int r) {
    if (r < 3) throw RangeError("dual code family needs r >= 3");
    if (r % 2 == 1) return dual_bch_odd_printed(r);

    // Even r: reproduce the printed values and surface their inconsistency.
    if (r > 30) throw RangeError("dual code family parameter too large");
    const double n = std::pow(2.0, r) - 1.0;
    const double N = std::pow(2.0, 2 * r);
    const double rt = std::sqrt(n + 1.0);   // integral
    const double rt2 = std::sqrt((n + 1.0) / 2.0);  // not integral for even r
    const double outer = 0.5 * n * rt * (std::sqrt((n + 1.0) / 4.0) + 1.0) +
                         0.5 * n * rt * (std::sqrt((n + 1.0) / 4.0) - 1.0);
    const double inner = n * rt * (rt + 1.0) / 3.0 + n * rt * (rt - 1.0) / 3.0;
    const double mid = n * ((n + 1.0) / 4.0 + 1.0);
    const double total = 1.0 + outer + inner + mid;
    std::ostringstream msg;
    msg << "printed distance distribution is inconsistent for even r=" << r
        << ": counts sum to " << total << ", expected " << N
        << "; distances " << (n + 1.0) / 2.0 - rt2 << " and " << (n + 1.0) / 2.0 + rt2
        << " are not integers";
    throw ValidationError(msg.str());
}

BinaryDistanceDistribution dual_bch(int r) {
    if (r < 3) throw RangeError("dual code family needs r >= 3");
    if (r % 2 == 1) return dual_bch_odd_printed(r);
    return dual_bch_enumerated(r);
}

BinaryDistanceDistribution weight_two(int n) {
    if (n < 2) throw RangeError("code length must be at least 2");
    BinaryDistanceDistribution d;
    d.length = n;
    d.size = static_cast<long long>(n) * (n - 1) / 2;
    d.counts.push_back({0, 1.0});
    if (n > 2) d.counts.push_back({2, 2.0 * (n - 2)});
    if (n > 3) d.counts.push_back({4, (n - 2.0) * (n - 3.0) / 2.0});
    d.validate();
    return d;
}

InnerProductSpectrum spherical_embedding(const BinaryDistanceDistribution& d) {
    d.validate();
    InnerProductSpectrum spec;
    spec.dimension = d.length;
    spec.size = d.size;
    for (const auto& e : d.counts) {
        if (e.w == 0 || e.count == 0.0) continue;
        spec.entries.push_back({1.0 - 2.0 * e.w / d.length, e.count});
    }
    std::sort(spec.entries.begin(), spec.entries.end(),
              [](const SpectrumEntry& x, const SpectrumEntry& y) { return x.value < y.value; });
    spec.validate();
    return spec;
}

}  // namespace sphsum
