#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "weylcq/errors.hpp"
#include "weylcq/rootsystem.hpp"

using namespace weylcq;

namespace {

std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("id parsing") {
    CHECK(RootSystemId::parse("b2").str() == "B2");
    CHECK(RootSystemId::parse("E8").str() == "E8");
    CHECK(RootSystemId::parse("a13").rank == 13);
    CHECK_THROWS_AS(RootSystemId::parse("E9"), InvalidType);
    CHECK_THROWS_AS(RootSystemId::parse("H3"), InvalidType);
    CHECK_THROWS_AS(RootSystemId::parse("B1"), InvalidType);
    CHECK_THROWS_AS(RootSystemId::parse("D2"), InvalidType);
    CHECK_THROWS_AS(RootSystemId::parse("G"), InvalidType);
}

TEST_CASE("B2 data") {
    const RootSystem b2 = build_root_system("B2");
    CHECK(b2.marks == std::vector<int>({1, 2}));
    CHECK(b2.coxeter_number == 4);
    CHECK(b2.index_of_connection == 2);
    CHECK(b2.ehrhart_period == 2);
    CHECK(b2.highest_root == std::vector<int>({1, 2}));
    CHECK(b2.num_positive_roots() == 4);
    CHECK(b2.exponents == std::vector<int>({1, 3}));
}

TEST_CASE("A1 and E6 data") {
    const RootSystem a1 = build_root_system("A1");
    CHECK(a1.positive_roots == std::vector<std::vector<int>>({{1}}));
    CHECK(a1.coxeter_number == 2);
    CHECK(a1.exponents == std::vector<int>({1}));

    const RootSystem e6 = build_root_system("E6");
    CHECK(e6.num_positive_roots() == 36);
    CHECK(e6.num_positive_roots() * 2 == 6 * e6.coxeter_number);
    CHECK(e6.index_of_connection == 3);
    CHECK(sorted(e6.marks) == std::vector<int>({1, 1, 2, 2, 2, 3}));
}

TEST_CASE("structural validation for every tabulated type") {
    for (const std::string name : {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C3", "D3",
                                   "D4", "D5", "E6", "E7", "E8", "F4", "G2"}) {
        const RootSystem rs = build_root_system(name);
        for (const auto& [check, ok] : validate(rs)) {
            INFO(name, ": ", check);
            CHECK(ok);
        }
    }
}

TEST_CASE("pairing") {
    const RootSystem b2 = build_root_system("B2");
    /* highest root against the first fundamental coweight gives c_1 */
    CHECK(pairing(b2, b2.highest_root, std::vector<Rat>{rat(1), rat(0)}) == 1);
    /* duality of the bases */
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            std::vector<int> alpha(2, 0);
            alpha[i - 1] = 1;
            std::vector<Rat> omega(2, rat(0));
            omega[j - 1] = rat(1);
            CHECK(pairing(b2, alpha, omega) == (i == j ? 1 : 0));
        }
    CHECK(pairing(b2, std::vector<int>{1, 1}, std::vector<Rat>{rat(3), rat(5)}) == 8);
}

TEST_CASE("simple coroots") {
    const RootSystem a2 = build_root_system("A2");
    CHECK(simple_coroot(a2, 1) == std::vector<int>({2, -1}));
    const RootSystem a1 = build_root_system("A1");
    CHECK(simple_coroot(a1, 1) == std::vector<int>({2}));
    CHECK_THROWS(simple_coroot(a2, 0));
    CHECK_THROWS(simple_coroot(a2, 3));
}

TEST_CASE("reflections") {
    for (const std::string name : {"A3", "B3", "C3", "D4", "G2", "F4"}) {
        const RootSystem rs = build_root_system(name);
        /* s_i(alpha_i) = -alpha_i */
        for (int i = 1; i <= rs.rank; ++i) {
            std::vector<int> alpha(rs.rank, 0);
            alpha[i - 1] = 1;
            std::vector<int> neg(alpha);
            neg[i - 1] = -1;
            CHECK(reflect_root(rs, i, alpha) == neg);
        }
        /* s_i permutes the other positive roots */
        for (int i = 1; i <= rs.rank; ++i) {
            for (const auto& beta : rs.positive_roots) {
                std::vector<int> alpha(rs.rank, 0);
                alpha[i - 1] = 1;
                if (beta == alpha) continue;
                CHECK(is_positive_root_vector(reflect_root(rs, i, beta)));
            }
        }
        /* involution, including the highest-root reflection */
        for (int i = 0; i <= rs.rank; ++i)
            for (const auto& beta : rs.positive_roots)
                CHECK(reflect_root(rs, i, reflect_root(rs, i, beta)) == beta);
    }
}

TEST_CASE("weyl enumeration") {
    CHECK(enumerate_weyl(build_root_system("B2"), 100).size() == 8);
    CHECK(enumerate_weyl(build_root_system("A1"), 100).size() == 2);
    CHECK(enumerate_weyl(build_root_system("F4"), 100000).size() == 1152);
    try {
        enumerate_weyl(build_root_system("E8"), 1000000);
        FAIL("E8 enumeration should exceed the cap");
    } catch (const CapExceeded& e) {
        CHECK(e.estimate == 696729600LL);
    }
}

TEST_CASE("asc statistics") {
    const RootSystem b2 = build_root_system("B2");
    const auto w = enumerate_weyl(b2, 100);

    CHECK(asc(b2, weyl_identity(b2)) == b2.coxeter_number - 1);

    /* the longest element sends all simple roots negative */
    int longest_found = 0;
    for (const auto& elem : w) {
        bool all_negative = true;
        for (const auto& img : elem.images) all_negative = all_negative && !is_positive_root_vector(img);
        if (all_negative) {
            ++longest_found;
            CHECK(asc(b2, elem) == 1);
        }
    }
    CHECK(longest_found == 1);

    std::multiset<int> stats;
    for (const auto& elem : w) stats.insert(asc(b2, elem));
    CHECK(stats == std::multiset<int>({1, 1, 2, 2, 2, 2, 3, 3}));
}

TEST_CASE("asc + dsc = h on short words") {
    for (const std::string name : {"A2", "B3", "G2", "D4"}) {
        const RootSystem rs = build_root_system(name);
        std::set<std::vector<std::vector<int>>> seen;
        std::vector<WeylElement> frontier{weyl_identity(rs)};
        seen.insert(frontier[0].images);
        for (int len = 0; len < 6; ++len) {
            std::vector<WeylElement> next;
            for (const auto& w : frontier) {
                CHECK(asc(rs, w) + dsc(rs, w) == rs.coxeter_number);
                for (int i = 1; i <= rs.rank; ++i) {
                    WeylElement n = weyl_apply_simple(rs, w, i);
                    if (seen.insert(n.images).second) next.push_back(std::move(n));
                }
            }
            frontier = std::move(next);
        }
    }
}

TEST_CASE("weyl order formula matches enumeration") {
    for (const std::string name : {"A3", "B3", "C3", "D4", "G2", "F4"}) {
        const RootSystem rs = build_root_system(name);
        CHECK(static_cast<long long>(enumerate_weyl(rs, 1 << 20).size()) == rs.weyl_order);
    }
}

TEST_CASE("B and C agree where the table treats them together") {
    const RootSystem b3 = build_root_system("B3");
    const RootSystem c3 = build_root_system("C3");
    CHECK(sorted(b3.marks) == sorted(c3.marks));
    CHECK(b3.exponents == c3.exponents);
    CHECK(b3.coxeter_number == c3.coxeter_number);
    CHECK(b3.index_of_connection == c3.index_of_connection);
    CHECK(b3.weyl_order == c3.weyl_order);
    /* dual Cartan matrices */
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(b3.cartan[i][j] == c3.cartan[j][i]);
}
