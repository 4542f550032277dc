#pragma once

#include <set>

#include "weylcq/quasipoly.hpp"
#include "weylcq/report.hpp"
#include "weylcq/rootsystem.hpp"

namespace weylcq {

/* Lattice points of the q-dilated closed fundamental alcove with respect to
 * the coweight lattice.  excluded_facets lists facet indices 0..l whose
 * supporting hyperplane is removed (0 is the highest-root wall);
 * interior_only removes all of them. */
struct AlcoveCountQuery {
    long long q = 0;
    std::set<int> excluded_facets;
    bool interior_only = false;
};

long long count_alcove_points(const RootSystem& rs, const AlcoveCountQuery& query);
inline long long count_alcove_points(const RootSystem& rs, long long q) {
    return count_alcove_points(rs, AlcoveCountQuery{q, {}, false});
}

/* Ehrhart quasi-polynomial of the closed fundamental alcove: exact counts
 * interpolated at period rs.ehrhart_period, degree rs.rank.  Asserts the
 * structural facts (leading coefficient f/|W|, gcd property). */
QuasiPoly ehrhart_quasi(const RootSystem& rs);

/* Points of the dilated alcove counted by a plain coordinate scan instead of
 * the knapsack recurrence; used as an independent cross-check. */
long long count_alcove_points_direct(const RootSystem& rs, const AlcoveCountQuery& query);

/* Facet removal: direct counting with excluded facets against
 * Ehr(q - sum of the removed facets' marks), swept over subsets and q. */
Report verify_facet_removal(const RootSystem& rs, int subset_size_max, int q_samples = 2);

/* Reciprocity: Ehr(-q) = (-1)^l * interior count, and the h-shift duality
 * Ehr(q-h) = (-1)^l Ehr(-q), for q in [q_lo, q_hi]. */
Report verify_reciprocity(const RootSystem& rs, long long q_lo, long long q_hi);

/* Counts over a long window are consistent with the table period and
 * inconsistent with every proper divisor of it. */
Report verify_period_minimality(const RootSystem& rs);

}  // namespace weylcq
