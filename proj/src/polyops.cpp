#include "sphsum/polyops.hpp"

#include <cmath>
#include <cstddef>

#include "sphsum/errors.hpp"

namespace sphsum {

namespace {

void require_dimension(int n) {
    if (n < 2) throw RangeError("dimension must be at least 2");
}

void trim(std::vector<double>& c) {
    while (c.size() > 1 && c.back() == 0.0) c.pop_back();
}

}  // namespace

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(0.0);
    trim(coeffs_);
}

Polynomial Polynomial::from_roots(std::span<const double> roots) {
    std::vector<double> c{1.0};
    for (double r : roots) {
        c.push_back(0.0);
        for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = c[i - 1] - r * c[i];
        c[0] *= -r;
    }
    return Polynomial(std::move(c));
}

double Polynomial::operator()(double t) const {
    double v = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) v = v * t + coeffs_[i];
    return v;
}

int Polynomial::degree() const {
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        if (coeffs_[i] != 0.0) return static_cast<int>(i);
    return 0;
}

double Polynomial::coeff(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= coeffs_.size()) return 0.0;
    return coeffs_[static_cast<std::size_t>(i)];
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d[i - 1] = static_cast<double>(i) * coeffs_[i];
    return Polynomial(std::move(d));
}

Polynomial& Polynomial::operator*=(double c) {
    for (double& x : coeffs_) x *= c;
    trim(coeffs_);
    return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    std::vector<double> c(p.coeffs_.size() + q.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < q.coeffs_.size(); ++j)
            c[i + j] += p.coeffs_[i] * q.coeffs_[j];
    return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    std::vector<double> c(std::max(p.coeffs_.size(), q.coeffs_.size()), 0.0);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) c[i] += p.coeffs_[i];
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i) c[i] += q.coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
    std::vector<double> c(std::max(p.coeffs_.size(), q.coeffs_.size()), 0.0);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) c[i] += p.coeffs_[i];
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i) c[i] -= q.coeffs_[i];
    return Polynomial(std::move(c));
}

double GegenbauerExpansion::operator()(double t) const {
    // Run the recurrence once instead of per-coefficient evaluations.
    double acc = 0.0;
    double pm = 1.0, p = t;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        double pi;
        if (i == 0) {
            pi = 1.0;
        } else if (i == 1) {
            pi = t;
        } else {
            int j = static_cast<int>(i) - 1;
            double next = ((2.0 * j + dimension - 2.0) * t * p - j * pm) / (j + dimension - 2.0);
            pm = p;
            p = next;
            pi = next;
        }
        acc += coeffs[i] * pi;
    }
    return acc;
}

double gegenbauer_eval(int n, int i, double t) {
    require_dimension(n);
    if (i < 0) throw RangeError("polynomial index must be nonnegative");
    if (i == 0) return 1.0;
    if (i == 1) return t;
    double pm = 1.0, p = t;
    for (int j = 1; j < i; ++j) {
        double next = ((2.0 * j + n - 2.0) * t * p - j * pm) / (j + n - 2.0);
        pm = p;
        p = next;
    }
    return p;
}

double jacobi_adjacent_eval(int n, int eps, int i, double t) {
    require_dimension(n);
    if (eps != 0 && eps != 1) throw RangeError("parity must be 0 or 1");
    if (i < 0) throw RangeError("polynomial index must be nonnegative");
    const double a = 0.5 * (n - 1);
    const double b = 0.5 * (n - 3) + eps;

    auto raw = [&](double x) {
        if (i == 0) return 1.0;
        double pm = 1.0;
        double p = 0.5 * ((a + b + 2.0) * x + a - b);
        for (int j = 2; j <= i; ++j) {
            double c1 = 2.0 * j * (j + a + b) * (2.0 * j + a + b - 2.0);
            double c2 = (2.0 * j + a + b - 1.0) *
                        ((2.0 * j + a + b) * (2.0 * j + a + b - 2.0) * x + a * a - b * b);
            double c3 = 2.0 * (j + a - 1.0) * (j + b - 1.0) * (2.0 * j + a + b);
            double next = (c2 * p - c3 * pm) / c1;
            pm = p;
            p = next;
        }
        return p;
    };

    // Value at 1 is prod_{j<=i} (a+j)/j.
    double at_one = 1.0;
    for (int j = 1; j <= i; ++j) at_one *= (a + j) / j;
    return raw(t) / at_one;
}

Polynomial gegenbauer_polynomial(int n, int i) {
    require_dimension(n);
    if (i < 0) throw RangeError("polynomial index must be nonnegative");
    if (i == 0) return Polynomial({1.0});
    if (i == 1) return Polynomial({0.0, 1.0});
    Polynomial pm({1.0});
    Polynomial p({0.0, 1.0});
    const Polynomial t({0.0, 1.0});
    for (int j = 1; j < i; ++j) {
        Polynomial shifted = t * p;
        shifted *= (2.0 * j + n - 2.0);
        Polynomial prev = pm;
        prev *= static_cast<double>(j);
        Polynomial next = shifted - prev;
        next *= 1.0 / (j + n - 2.0);
        pm = p;
        p = next;
    }
    return p;
}

GegenbauerExpansion gegenbauer_expand(const Polynomial& p, int n) {
    require_dimension(n);
    const int d = p.degree();
    if (d > 8) throw RangeError("expansion supported for degree <= 8 only");

    // Monomial coefficients of P_0..P_d form a lower-triangular system;
    // back-substitute from the top degree.
    std::vector<Polynomial> basis;
    basis.reserve(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) basis.push_back(gegenbauer_polynomial(n, i));

    std::vector<double> rem(static_cast<std::size_t>(d) + 1, 0.0);
    for (int i = 0; i <= d; ++i) rem[static_cast<std::size_t>(i)] = p.coeff(i);

    GegenbauerExpansion out;
    out.dimension = n;
    out.coeffs.assign(static_cast<std::size_t>(d) + 1, 0.0);
    for (int i = d; i >= 0; --i) {
        const double f = rem[static_cast<std::size_t>(i)] / basis[static_cast<std::size_t>(i)].coeff(i);
        out.coeffs[static_cast<std::size_t>(i)] = f;
        for (int j = 0; j <= i; ++j)
            rem[static_cast<std::size_t>(j)] -= f * basis[static_cast<std::size_t>(i)].coeff(j);
    }
    return out;
}

}  // namespace sphsum
