#pragma once

#include <map>

#include "weylcq/polynomial.hpp"
#include "weylcq/rootsystem.hpp"

namespace weylcq {

/* A point of V in coweight coordinates together with an infinitesimal
 * perturbation direction.  Root functionals evaluate to the pair
 * (base value, direction value) compared lexicographically, so a point on a
 * hyperplane is pushed off it exactly.  The canonical direction is -rho,
 * under which no root functional is ever integral in the perturbed sense. */
struct PerturbedPoint {
    std::vector<Rat> base;
    std::vector<Rat> dir;

    static PerturbedPoint with_canonical_direction(std::vector<Rat> base_coords) {
        PerturbedPoint p;
        p.dir.assign(base_coords.size(), rat(-1));
        p.base = std::move(base_coords);
        return p;
    }
};

/* Identifies the alcove of a point: for every positive root, the integer
 * floor k with k < (alpha, x) < k+1 in the perturbed sense.  Entries are
 * aligned with rs.positive_roots; lexicographic order on the vector makes
 * partition dumps deterministic.  The same vector doubles as the membership
 * test for the partially closed alcove (ceilings kept, floors dropped). */
struct AlcoveKey {
    std::vector<int> floors;
    bool operator==(const AlcoveKey& o) const { return floors == o.floors; }
    bool operator<(const AlcoveKey& o) const { return floors < o.floors; }
};

/* Affine-Weyl element as a reflection word (applied left to right) with its
 * exact affine action x |-> linear*x + translation on coweight coordinates. */
struct AffineElement {
    std::vector<int> word;  // reflection indices in 0..l, 0 = affine wall
    std::vector<std::vector<Rat>> linear;
    std::vector<Rat> translation;

    std::vector<Rat> apply(const std::vector<Rat>& x) const;
};

AlcoveKey alcove_key_of(const RootSystem& rs, const PerturbedPoint& p);

/* Walks p into the open fundamental alcove (perturbed sense) by simple and
 * affine-wall reflections; returns the walk.  The inverse's linear part is
 * the Weyl element whose asc statistic labels p's alcove. */
AffineElement reduce_to_fundamental(const RootSystem& rs, const PerturbedPoint& p);

int asc_of_alcove(const RootSystem& rs, const PerturbedPoint& p);

/* The partially closed alcoves partitioning the fundamental parallelepiped,
 * found by scanning the lattice points of its (h+1)-fold dilation.  Exactly
 * |W|/f alcoves come back, each with its asc. */
std::map<AlcoveKey, int> worpitzky_partition(const RootSystem& rs, long long guard = 10'000'000);

/* Lattice points of the q-dilated partially closed alcove, by direct scan. */
long long half_open_alcove_count(const RootSystem& rs, const AlcoveKey& key, long long q,
                                 long long guard = 100'000'000);

/* One scan of {1..q}^l assigning every lattice point to its alcove. */
std::map<AlcoveKey, long long> partition_point_counts(const RootSystem& rs, long long q,
                                                      long long guard = 100'000'000);

enum class EulerianRoute { product_formula, weyl_sum, alcove_scan };

/* Generalized Eulerian polynomial by three independent routes:
 * product_formula multiplies the mark brackets into the classical Eulerian
 * polynomial; weyl_sum averages t^asc over the Weyl group; alcove_scan sums
 * t^asc over the parallelepiped partition. */
Poly generalized_eulerian(const RootSystem& rs, EulerianRoute route,
                          long long weyl_cap = 1'000'000, long long scan_guard = 10'000'000);

}  // namespace weylcq
