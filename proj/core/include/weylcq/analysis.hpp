#pragma once

#include <complex>

#include "weylcq/charquasi.hpp"
#include "weylcq/report.hpp"

namespace weylcq {

/* Reflection symmetry chi((b-a+1)h - t) = (-1)^l chi(t), checked
 * constituent-by-constituent for the shift-operator intervals and at the
 * characteristic-polynomial level for Catalan intervals. */
Report check_functional_equation(const RootSystem& rs, const ArrangementSpec& spec);

/* chi^[1-k, n+k](q) = chi^[1,n](q - k*h), at constituent level, with a few
 * counting spot-checks where the grid is small enough. */
Report check_shift_reduction(const RootSystem& rs, int n, int k,
                             long long oracle_guard = 100'000'000);

/* E_l(S^m) = ((1 + S + ... + S^{m-1})/m)^{l+1} E_l(S) modulo (S-1)^{l+1}. */
Report check_congruence(int l, int m);

/* All complex roots with multiplicity, by the Aberth-Ehrlich simultaneous
 * iteration on the double-precision image of the polynomial. */
std::vector<std::complex<double>> complex_roots(const Poly& p);

struct RootCheckReport {
    Poly polynomial;
    std::vector<std::complex<double>> roots;
    Rat target_real_part;
    double max_deviation = 0.0;
    bool passed = false;
    bool predicted_by_theory = false;

    nlohmann::json to_json() const;
};

/* Root-location check for the Linial interval [1-k, n+k]: every root of the
 * characteristic polynomial should have real part (n+2k)h/2. */
RootCheckReport riemann_check(const RootSystem& rs, int n, int k);

/* The sextic witnessing the root-location property for E6 at n = 5:
 * applies the stretched Eulerian operator to the coprime Ehrhart constituent,
 * normalizes to monic, pins the exact coefficients, and checks that all six
 * roots sit on the real-part-15 line. */
Poly e6_witness();

}  // namespace weylcq
