#pragma once

#include <vector>

#include "sphsum/polyops.hpp"

namespace sphsum {

// Node/weight system behind the degree-m cardinality bound L_m(n, s).
// The quadrature identity
//   f_0 = f(1)/bound + sum_i weights[i] * f(nodes[i])
// holds exactly for every polynomial f of degree <= m, where f_0 is the
// constant coefficient of f in the Gegenbauer basis for S^{n-1}.
//
// `bound` = L_m(n, s) turns negative once s crosses the pole of the closed
// form; the quadrature identity continues to hold algebraically, which is
// what makes evaluation beyond the published s-intervals meaningful.
struct LevenshteinSystem {
    int n = 2;       // dimension
    int m = 1;       // degree, 1..3
    int k = 1;       // m = 2k - 1 + eps
    int eps = 0;
    double s = 0.0;  // largest node
    double bound = 0.0;
    std::vector<double> nodes;    // strictly increasing, back() == s
    std::vector<double> weights;  // all positive
    bool in_paper_range = true;   // s inside the degree's published interval
};

// Minimum cardinality D*(n, m) of a spherical m-design; these values mark
// the segment boundaries for degree selection. m in 1..4.
long long design_threshold(int n, int m);

// Degree whose segment contains N: 1 on [2, n+1), 2 on [n+1, 2n),
// 3 on [2n, n(n+3)/2]. Ties go to the higher degree (the bounds agree there
// by continuity). Throws RangeError outside [2, n(n+3)/2].
int select_degree(int n, long long N);

struct DegreeSelector {
    int n;
    long long N;
    int m;
    long long segment_lo;  // D*(n, m)
    long long segment_hi;  // D*(n, m+1)
};

DegreeSelector select_segment(int n, long long N);

// Published interval of s for which the degree-m system is the optimal
// choice; outside it the formulas still evaluate but are flagged.
double degree_lower_s(int n, int m);
double degree_upper_s(int n, int m);

// L_m(n, s) for m = 1, 2, 3:
//   L_1 = (s-1)/s,  L_2 = 2n(1-s)/(1-ns),  L_3 = n(1-s)((n+1)s+2)/(1-ns^2).
// Throws RangeError at a pole of the closed form or for s outside [-1, 1).
double lev_bound(int n, double s, int m);

// Inverse of lev_bound on its segment: the s with L_m(n, s) = N. For m = 3
// this is the larger root of n(N-n-1)s^2 + n(n-1)s + 2n - N = 0, computed
// with the cancellation-free quadratic formula.
double solve_s(int n, double N, int m);

// Complete node/weight system for (n, s, m).
LevenshteinSystem quadrature_system(int n, double s, int m);

// The monic degree-m polynomial with the system's root structure:
//   m=1: (t-s),  m=2: (t+1)(t-s),  m=3: (t-a0)^2 (t-s).
Polynomial levenshtein_polynomial(int n, double s, int m);

// Residual |f_0 - f(1)/bound - sum w_i f(a_i)| of the quadrature identity.
// Throws RangeError if degree(p) > m.
double verify_quadrature(const LevenshteinSystem& sys, const Polynomial& p);

}  // namespace sphsum
