#pragma once

#include <span>
#include <vector>

namespace sphsum {

// Dense real polynomial in the monomial basis, coeffs[i] is the coefficient
// of t^i. Degrees stay tiny here (<= 8), so no sparse representation.
class Polynomial {
public:
    Polynomial() : coeffs_{0.0} {}
    explicit Polynomial(std::vector<double> coeffs);

    static Polynomial from_roots(std::span<const double> roots);

    double operator()(double t) const;  // Horner evaluation
    int degree() const;                 // highest index with nonzero coeff
    double coeff(int i) const;
    std::span<const double> coeffs() const { return coeffs_; }

    Polynomial derivative() const;

    Polynomial& operator*=(double c);
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator-(const Polynomial& p, const Polynomial& q);

private:
    std::vector<double> coeffs_;
};

// Coefficients f_0..f_d of a polynomial written as sum f_i P_i^{(n)} in the
// Gegenbauer basis normalized by P_i^{(n)}(1) = 1.
struct GegenbauerExpansion {
    int dimension = 2;
    std::vector<double> coeffs;

    // Synthesize sum f_i P_i^{(n)}(t).
    double operator()(double t) const;
};

// P_i^{(n)}(t), the Gegenbauer (ultraspherical) polynomial for S^{n-1}
// normalized to P_i(1) = 1, by the three-term recurrence
//   P_{i+1}(t) = ((2i+n-2) t P_i(t) - i P_{i-1}(t)) / (i+n-2).
double gegenbauer_eval(int n, int i, double t);

// Jacobi polynomial with parameters ((n-1)/2, (n-3)/2 + eps), normalized to
// 1 at t = 1. These are the "adjacent" systems entering the degree-m
// extremal polynomials.
double jacobi_adjacent_eval(int n, int eps, int i, double t);

// Monomial representation of P_i^{(n)}.
Polynomial gegenbauer_polynomial(int n, int i);

// Change of basis: coefficients f_i with p = sum f_i P_i^{(n)}.
GegenbauerExpansion gegenbauer_expand(const Polynomial& p, int n);

}  // namespace sphsum
