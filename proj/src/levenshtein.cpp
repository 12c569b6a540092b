#include "sphsum/levenshtein.hpp"

#include <cmath>
#include <limits>

#include "sphsum/errors.hpp"

namespace sphsum {

namespace {

void require_dimension(int n) {
    if (n < 2) throw RangeError("dimension must be at least 2");
}

void require_degree(int m) {
    if (m < 1 || m > 3) throw RangeError("degree must be 1, 2, or 3");
}

constexpr double kPoleEps = 1e-14;

}  // namespace

long long design_threshold(int n, int m) {
    require_dimension(n);
    switch (m) {
        case 1: return 2;
        case 2: return static_cast<long long>(n) + 1;
        case 3: return 2LL * n;
        case 4: return static_cast<long long>(n) * (n + 3) / 2;
        default: throw RangeError("design threshold defined for degrees 1..4");
    }
}

int select_degree(int n, long long N) {
    require_dimension(n);
    if (N < 2) throw RangeError("code size must be at least 2");
    if (N > design_threshold(n, 4))
        throw RangeError("code size " + std::to_string(N) +
                         " exceeds the degree-3 segment [" + std::to_string(2 * n) + ", " +
                         std::to_string(design_threshold(n, 4)) + "] for dimension " +
                         std::to_string(n));
    if (N < design_threshold(n, 2)) return 1;
    if (N < design_threshold(n, 3)) return 2;
    return 3;
}

DegreeSelector select_segment(int n, long long N) {
    const int m = select_degree(n, N);
    return DegreeSelector{n, N, m, design_threshold(n, m), design_threshold(n, m + 1)};
}

double degree_lower_s(int n, int m) {
    require_dimension(n);
    require_degree(m);
    if (m == 1) return -1.0;
    if (m == 2) return -1.0 / n;
    return 0.0;
}

double degree_upper_s(int n, int m) {
    require_dimension(n);
    require_degree(m);
    if (m == 1) return -1.0 / n;
    if (m == 2) return 0.0;
    return (std::sqrt(static_cast<double>(n) + 3.0) - 1.0) / (n + 2.0);
}

double lev_bound(int n, double s, int m) {
    require_dimension(n);
    require_degree(m);
    if (!(s >= -1.0) || !(s < 1.0)) throw RangeError("separation must lie in [-1, 1)");
    switch (m) {
        case 1: {
            if (std::fabs(s) < kPoleEps) throw RangeError("degree-1 bound has a pole at s = 0");
            return (s - 1.0) / s;
        }
        case 2: {
            const double den = 1.0 - n * s;
            if (std::fabs(den) < kPoleEps * n)
                throw RangeError("degree-2 bound has a pole at s = 1/n");
            return 2.0 * n * (1.0 - s) / den;
        }
        default: {
            const double den = 1.0 - n * s * s;
            if (std::fabs(den) < kPoleEps * n)
                throw RangeError("degree-3 bound has a pole at s = 1/sqrt(n)");
            return n * (1.0 - s) * ((n + 1.0) * s + 2.0) / den;
        }
    }
}

double solve_s(int n, double N, int m) {
    require_dimension(n);
    require_degree(m);
    const double lo = static_cast<double>(design_threshold(n, m));
    const double hi = static_cast<double>(design_threshold(n, m + 1));
    if (!(N >= lo) || !(N <= hi))
        throw RangeError("size outside the segment of the requested degree");
    if (m == 1) return -1.0 / (N - 1.0);
    if (m == 2) return (N - 2.0 * n) / (n * (N - 2.0));
    // Larger root of n(N-n-1)s^2 + n(n-1)s + (2n-N) = 0. b > 0, so the
    // stable pair is q = -(b + sqrt(D))/2 and roots q/a, c/q.
    const double a = n * (N - n - 1.0);
    const double b = n * (n - 1.0);
    const double c = 2.0 * n - N;
    const double disc = b * b - 4.0 * a * c;
    if (disc < 0.0) throw InternalError("negative discriminant in degree-3 inversion");
    const double q = -0.5 * (b + std::sqrt(disc));
    if (N == 2.0 * n) return 0.0;  // c = 0 exactly
    return c / q;
}

LevenshteinSystem quadrature_system(int n, double s, int m) {
    const double N1 = lev_bound(n, s, m);
    LevenshteinSystem sys;
    sys.n = n;
    sys.m = m;
    sys.k = (m + 1) / 2;
    sys.eps = m - (2 * sys.k - 1);
    sys.s = s;
    sys.bound = N1;
    switch (m) {
        case 1:
            sys.nodes = {s};
            sys.weights = {1.0 / (1.0 - s)};
            break;
        case 2: {
            const double den = N1 * n + N1 - 4.0 * n;
            sys.nodes = {-1.0, s};
            sys.weights = {(N1 - n - 1.0) / den, n * (N1 - 2.0) * (N1 - 2.0) / (N1 * den)};
            break;
        }
        default: {
            const double one_ns = 1.0 + n * s;
            const double crown = 1.0 + 2.0 * s + n * s * s;  // positive for all real s
            const double lin = (n + 1.0) * s + 2.0;
            sys.nodes = {-(1.0 + s) / one_ns, s};
            sys.weights = {one_ns * one_ns * one_ns / (n * lin * crown),
                           (n - 1.0) / (n * (1.0 - s) * crown)};
            break;
        }
    }
    // Weights are positive in the interior; at the left segment boundary
    // (bound = n+1 for degree 2) the node at -1 degenerates to weight zero,
    // which the identity tolerates. Tiny negatives are rounding.
    for (double& w : sys.weights) {
        if (w < 0.0 && w > -1e-12) w = 0.0;
        if (!(w >= 0.0))
            throw RangeError("separation outside the constructible domain for this degree");
    }
    for (std::size_t i = 1; i < sys.nodes.size(); ++i)
        if (!(sys.nodes[i - 1] < sys.nodes[i]))
            throw RangeError("separation outside the constructible domain for this degree");
    sys.in_paper_range = s >= degree_lower_s(n, m) - 1e-12 && s <= degree_upper_s(n, m) + 1e-12;
    return sys;
}

Polynomial levenshtein_polynomial(int n, double s, int m) {
    const LevenshteinSystem sys = quadrature_system(n, s, m);
    std::vector<double> roots;
    if (m == 1) {
        roots = {s};
    } else if (m == 2) {
        roots = {-1.0, s};
    } else {
        roots = {sys.nodes[0], sys.nodes[0], s};
    }
    return Polynomial::from_roots(roots);
}

double verify_quadrature(const LevenshteinSystem& sys, const Polynomial& p) {
    if (p.degree() > sys.m)
        throw RangeError("quadrature identity only covers degree <= m");
    const GegenbauerExpansion e = gegenbauer_expand(p, sys.n);
    double rhs = p(1.0) / sys.bound;
    for (std::size_t i = 0; i < sys.nodes.size(); ++i) rhs += sys.weights[i] * p(sys.nodes[i]);
    return std::fabs(e.coeffs[0] - rhs);
}

}  // namespace sphsum
