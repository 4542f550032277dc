#pragma once

#include <optional>
#include <string>

#include "weylcq/quasipoly.hpp"
#include "weylcq/rootsystem.hpp"

namespace weylcq {

/* Truncated affine Weyl arrangement: the hyperplanes (alpha, x) = k for
 * positive roots alpha and a <= k <= b. */
struct ArrangementSpec {
    long long a = 0;
    long long b = 0;

    long long levels() const { return b - a + 1; }
    bool is_coxeter() const { return a == 0 && b == 0; }
    bool is_catalan() const { return a == -b && b >= 1; }
    bool is_shi() const { return a + b == 1 && b >= 1; }
    bool is_extended_linial() const { return a <= 1 && a + b >= 2; }
    std::string str() const { return "[" + std::to_string(a) + "," + std::to_string(b) + "]"; }
};

struct CharQuasi {
    ArrangementSpec spec;
    QuasiPoly quasi;
    Poly char_poly;  // constituent at a residue coprime to the period
    std::string route;  // "formula" or "oracle"
    bool empirical = false;

    void validate(const RootSystem& rs) const;
};

/* #{x in (Z/q)^l : (alpha, x) != k mod q for all hyperplanes}, the counting
 * function the characteristic quasi-polynomial agrees with for large q. */
long long oracle_count(const RootSystem& rs, const ArrangementSpec& spec, long long q,
                       long long guard = 100'000'000);

/* Brute-force route: interpolates oracle_count above (b-a+1)*h at the alcove
 * period, retrying once at lcm(period, b-a+1) if overdetermination fails. */
CharQuasi oracle_quasi(const RootSystem& rs, const ArrangementSpec& spec,
                       long long guard = 100'000'000);

/* Extended Shi arrangement [1-k, k]: computes the shift-operator expression
 * and asserts every constituent collapses to (t - k*h)^l. */
CharQuasi shi_quasi(const RootSystem& rs, int k);

/* Extended Linial arrangement [1-k, n+k], n >= 1, k >= 0. */
CharQuasi linial_quasi(const RootSystem& rs, int n, int k);

/* Extended Catalan characteristic polynomial: prod_i (t - e_i - k*h). */
Poly catalan_char_poly(const RootSystem& rs, int k);

/* Closed-form quasi-polynomial for the intervals the theory covers
 * (Coxeter, Catalan, Shi, extended Linial); nullopt otherwise. */
std::optional<CharQuasi> formula_quasi(const RootSystem& rs, const ArrangementSpec& spec);
bool formula_quasi_coverage(const ArrangementSpec& spec);

/* Coprime-residue constituent. */
Poly char_poly_of(const RootSystem& rs, const QuasiPoly& quasi);

}  // namespace weylcq
