#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "weylcq/alcove.hpp"
#include "weylcq/ehrhart.hpp"
#include "weylcq/errors.hpp"

using namespace weylcq;

namespace {

PerturbedPoint point(std::vector<long long> coords, long long den = 1) {
    std::vector<Rat> base;
    base.reserve(coords.size());
    for (long long c : coords) base.push_back(rat(c, den));
    return PerturbedPoint::with_canonical_direction(std::move(base));
}

int floor_of(const RootSystem& rs, const AlcoveKey& key, const std::vector<int>& root) {
    const int idx = rs.root_index(root);
    REQUIRE(idx >= 0);
    return key.floors[idx];
}

/* Solve translation = sum a_i * coroot_i and report whether all a_i are
 * integers; the coroots are the rows of the Cartan matrix. */
bool translation_in_coroot_lattice(const RootSystem& rs, const std::vector<Rat>& translation) {
    const int l = rs.rank;
    std::vector<std::vector<Rat>> m(l, std::vector<Rat>(l + 1, Rat(0)));
    for (int j = 0; j < l; ++j) {
        for (int i = 0; i < l; ++i) m[j][i] = rat(rs.cartan[i][j]);
        m[j][l] = translation[j];
    }
    for (int col = 0; col < l; ++col) {
        int piv = -1;
        for (int r = col; r < l; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return false;
        std::swap(m[piv], m[col]);
        for (int r = 0; r < l; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat f = m[r][col] / m[col][col];
            for (int c = col; c <= l; ++c) m[r][c] -= f * m[col][c];
        }
    }
    for (int r = 0; r < l; ++r)
        if (!is_integer(m[r][l] / m[r][r])) return false;
    return true;
}

}  // namespace

TEST_CASE("alcove keys") {
    const RootSystem b2 = build_root_system("B2");
    const AlcoveKey corner = alcove_key_of(b2, point({1, 1}));
    CHECK(floor_of(b2, corner, {1, 0}) == 0);
    CHECK(floor_of(b2, corner, {0, 1}) == 0);
    CHECK(floor_of(b2, corner, {1, 1}) == 1);
    CHECK(floor_of(b2, corner, {1, 2}) == 2);

    /* barycenter of the fundamental alcove: all floors zero */
    const RootSystem a2 = build_root_system("A2");
    const AlcoveKey fund = alcove_key_of(a2, point({1, 1}, 4));
    CHECK(fund.floors == std::vector<int>({0, 0, 0}));

    const AlcoveKey edge = alcove_key_of(a2, point({1, 0}));
    CHECK(floor_of(a2, edge, {1, 0}) == 0);
    CHECK(floor_of(a2, edge, {0, 1}) == -1);
    CHECK(floor_of(a2, edge, {1, 1}) == 0);
}

TEST_CASE("reduction to the fundamental alcove") {
    const RootSystem b2 = build_root_system("B2");

    /* interior point: empty walk */
    const PerturbedPoint inside = point({1, 1}, 4);
    const AffineElement trivial = reduce_to_fundamental(b2, inside);
    CHECK(trivial.word.empty());

    /* the corner alcove of the parallelepiped has asc 1 */
    CHECK(asc_of_alcove(b2, point({1, 1})) == 1);

    /* fundamental alcove has asc h-1 */
    CHECK(asc_of_alcove(b2, inside) == 3);

    /* reducing an already reduced image is trivial */
    const PerturbedPoint far = point({3, 2});
    const AffineElement u = reduce_to_fundamental(b2, far);
    PerturbedPoint reduced;
    reduced.base = u.apply(far.base);
    reduced.dir = u.apply(far.dir);
    for (size_t j = 0; j < reduced.dir.size(); ++j) reduced.dir[j] -= u.translation[j];
    CHECK(reduce_to_fundamental(b2, reduced).word.empty());
    CHECK(translation_in_coroot_lattice(b2, u.translation));
}

TEST_CASE("asc is translation invariant") {
    const RootSystem b2 = build_root_system("B2");
    const PerturbedPoint p = point({1, 1}, 2);
    const int base_asc = asc_of_alcove(b2, p);
    for (int i = 1; i <= 2; ++i) {
        std::vector<Rat> shifted = p.base;
        const std::vector<int> coroot = simple_coroot(b2, i);
        for (int j = 0; j < 2; ++j) shifted[j] += rat(coroot[j]);
        CHECK(asc_of_alcove(b2, PerturbedPoint::with_canonical_direction(shifted)) == base_asc);
    }
}

TEST_CASE("worpitzky partition, B2") {
    const RootSystem b2 = build_root_system("B2");
    const auto partition = worpitzky_partition(b2);
    REQUIRE(partition.size() == 4);
    std::multiset<int> ascs;
    for (const auto& [key, a] : partition) ascs.insert(a);
    CHECK(ascs == std::multiset<int>({1, 2, 2, 3}));
}

TEST_CASE("worpitzky partition, A1 and G2") {
    const RootSystem a1 = build_root_system("A1");
    const auto pa1 = worpitzky_partition(a1);
    REQUIRE(pa1.size() == 1);
    CHECK(pa1.begin()->second == 1);

    const RootSystem g2 = build_root_system("G2");
    const auto pg2 = worpitzky_partition(g2);
    CHECK(pg2.size() == 12);
    Poly scan;
    for (const auto& [key, a] : pg2) scan += Poly::monomial(a);
    CHECK(scan == generalized_eulerian(g2, EulerianRoute::product_formula));
}

TEST_CASE("partition covers the dilated box exactly once") {
    for (const std::string name : {"A2", "B2", "G2", "A3", "B3"}) {
        const RootSystem rs = build_root_system(name);
        const auto partition = worpitzky_partition(rs);
        for (long long q :
             {static_cast<long long>(rs.coxeter_number + 1), static_cast<long long>(rs.coxeter_number + 2)}) {
            const auto counts = partition_point_counts(rs, q);
            long long total = 0;
            for (const auto& [key, count] : counts) {
                CHECK(partition.count(key) == 1);
                total += count;
            }
            long long expected = 1;
            for (int i = 0; i < rs.rank; ++i) expected *= q;
            CHECK(total == expected);
        }
    }
}

TEST_CASE("half-open alcove counts against the ehrhart shift") {
    const RootSystem b2 = build_root_system("B2");
    const auto partition = worpitzky_partition(b2);
    std::multiset<long long> sizes;
    long long total = 0;
    for (const auto& [key, a] : partition) {
        const long long n = half_open_alcove_count(b2, key, 6);
        CHECK(n == count_alcove_points(b2, 6 - a));
        sizes.insert(n);
        total += n;
    }
    CHECK(sizes == std::multiset<long long>({6, 9, 9, 12}));
    CHECK(total == 36);

    /* beyond q > h the shift law holds for every alcove of G2 too */
    const RootSystem g2 = build_root_system("G2");
    for (const auto& [key, a] : worpitzky_partition(g2))
        CHECK(half_open_alcove_count(g2, key, 8) == count_alcove_points(g2, 8 - a));
}

TEST_CASE("three routes to the generalized eulerian polynomial") {
    for (const std::string name : {"A1", "A2", "A3", "B2", "B3", "C3", "D3", "D4", "G2", "F4"}) {
        const RootSystem rs = build_root_system(name);
        const Poly product = generalized_eulerian(rs, EulerianRoute::product_formula);
        CHECK(product == generalized_eulerian(rs, EulerianRoute::weyl_sum));
        CHECK(product == generalized_eulerian(rs, EulerianRoute::alcove_scan));
    }
}

TEST_CASE("generalized eulerian basics") {
    const RootSystem b2 = build_root_system("B2");
    CHECK(generalized_eulerian(b2, EulerianRoute::product_formula) == Poly({0, 1, 2, 1}));

    /* type A reduces to the classical polynomial */
    for (int l = 1; l <= 5; ++l) {
        const RootSystem rs = build_root_system("A" + std::to_string(l));
        CHECK(generalized_eulerian(rs, EulerianRoute::product_formula) == eulerian_polynomial(l));
    }

    /* F4: bracket product of the marks, degree h-1 */
    const RootSystem f4 = build_root_system("F4");
    const Poly rf4 = generalized_eulerian(f4, EulerianRoute::product_formula);
    CHECK(rf4 == q_bracket(2) * q_bracket(3) * q_bracket(4) * q_bracket(2) * eulerian_polynomial(4));
    CHECK(rf4.degree() == f4.coxeter_number - 1);
}

TEST_CASE("duality and total mass") {
    for (const std::string name : {"A4", "B3", "C3", "D4", "G2", "F4", "E6", "E7", "E8"}) {
        const RootSystem rs = build_root_system(name);
        const Poly r = generalized_eulerian(rs, EulerianRoute::product_formula);
        const int h = rs.coxeter_number;
        CHECK(r.degree() == h - 1);
        /* t^h R(1/t) = R(t) */
        for (int k = 0; k <= h; ++k) CHECK(r.coeff(k) == r.coeff(h - k));
        CHECK(r.eval(rat(1)) == rat(rs.weyl_order) / rat(rs.index_of_connection));
    }
}

TEST_CASE("worpitzky identity at quasi-polynomial level") {
    for (const std::string name : {"A1", "A2", "A3", "B2", "B3", "C3", "D3", "D4", "G2", "F4",
                                   "E6", "E7", "E8"}) {
        const RootSystem rs = build_root_system(name);
        const QuasiPoly lhs = apply_shift(generalized_eulerian(rs, EulerianRoute::product_formula),
                                          ehrhart_quasi(rs));
        for (int r = 1; r <= lhs.period(); ++r)
            CHECK(lhs.constituent(r) == Poly::monomial(rs.rank));
    }
}

TEST_CASE("guards") {
    const RootSystem e7 = build_root_system("E7");
    CHECK_THROWS_AS(worpitzky_partition(e7), GuardExceeded);
    const RootSystem e8 = build_root_system("E8");
    CHECK_THROWS_AS(generalized_eulerian(e8, EulerianRoute::alcove_scan), GuardExceeded);
    CHECK_THROWS_AS(generalized_eulerian(e8, EulerianRoute::weyl_sum), CapExceeded);
}
