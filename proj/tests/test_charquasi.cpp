#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "weylcq/charquasi.hpp"
#include "weylcq/ehrhart.hpp"
#include "weylcq/errors.hpp"

using namespace weylcq;

namespace {

/* Classical closed forms for the Linial characteristic polynomial, as a
 * shift operator applied to t^l.  For even n the inner squared (resp.
 * fourth-power) factor steps by 1, not 2; that normalization is forced by
 * the operator having total mass (n+1)^{l+1}. */
Poly linial_closed_form(const RootSystem& rs, int n) {
    const int l = rs.rank;
    Poly op;
    auto geometric = [](int step, int top) {
        /* 1 + S^step + ... + S^top */
        std::vector<Rat> c(top + 1, Rat(0));
        for (int k = 0; k <= top; k += step) c[k] = rat(1);
        return Poly(c);
    };
    Rat denom = rat(1);
    for (int i = 0; i <= l; ++i) denom *= rat(n + 1);
    switch (rs.id.family) {
        case Family::A:
            op = geometric(1, n).pow(l + 1);
            break;
        case Family::B:
        case Family::C:
            if (n % 2 == 1)
                op = Poly({0, 4}) * geometric(2, 2 * n).pow(l - 1) * geometric(2, n - 1).pow(2);
            else
                op = geometric(2, 2 * n).pow(l - 1) * geometric(1, n).pow(2);
            break;
        case Family::D:
            if (n % 2 == 1)
                op = Poly({0, 8}) * Poly({1, 0, 1}) * geometric(2, 2 * n).pow(l - 3) *
                     geometric(2, n - 1).pow(4);
            else
                op = geometric(2, 2 * n).pow(l - 3) * geometric(1, n).pow(4);
            break;
        default:
            throw std::invalid_argument("closed form only for the classical families");
    }
    return apply_shift_poly(op.scaled(Rat(1) / denom), Poly::monomial(l));
}

}  // namespace

TEST_CASE("oracle counts, pinned instances") {
    const RootSystem b2 = build_root_system("B2");
    CHECK(oracle_count(b2, {0, 0}, 5) == 8);   // (5-1)(5-3)
    CHECK(oracle_count(b2, {0, 1}, 7) == 9);   // (7-4)^2
    const RootSystem a2 = build_root_system("A2");
    CHECK(oracle_count(a2, {1, 2}, 7) == 18);  // 7^2 - 6*7 + 11
    /* forbidden set covering all residues empties the count */
    CHECK(oracle_count(a2, {0, 6}, 5) == 0);
}

TEST_CASE("oracle quasi, Coxeter B2") {
    const RootSystem b2 = build_root_system("B2");
    const CharQuasi cq = oracle_quasi(b2, {0, 0});
    CHECK(cq.quasi.period() == 2);
    CHECK(cq.quasi.constituent(1) == Poly({-1, 1}) * Poly({-3, 1}));  // (q-1)(q-3)
    CHECK(cq.quasi.constituent(2) == Poly({-2, 1}) * Poly({-2, 1}));  // (q-2)^2
    CHECK(cq.char_poly == Poly({3, -4, 1}));
    CHECK(cq.route == "oracle");
    CHECK_FALSE(cq.empirical);
}

TEST_CASE("oracle quasi, Catalan A2") {
    const RootSystem a2 = build_root_system("A2");
    const CharQuasi cq = oracle_quasi(a2, {-1, 1});
    CHECK(cq.quasi.period() == 1);
    CHECK(cq.char_poly == Poly({-4, 1}) * Poly({-5, 1}));
    CHECK(cq.char_poly == catalan_char_poly(a2, 1));
}

TEST_CASE("oracle quasi, Shi B2") {
    const RootSystem b2 = build_root_system("B2");
    const CharQuasi cq = oracle_quasi(b2, {0, 1});
    for (int r = 1; r <= cq.quasi.period(); ++r)
        CHECK(cq.quasi.constituent(r) == Poly({16, -8, 1}));
}

TEST_CASE("shi theorem instances") {
    CHECK(shi_quasi(build_root_system("B2"), 1).char_poly == Poly({16, -8, 1}));
    CHECK(shi_quasi(build_root_system("A2"), 1).char_poly == Poly({9, -6, 1}));
    CHECK(shi_quasi(build_root_system("G2"), 2).char_poly == Poly({144, -24, 1}));
}

TEST_CASE("linial quasi, A2") {
    const RootSystem a2 = build_root_system("A2");
    const CharQuasi cq = linial_quasi(a2, 2, 0);
    CHECK(cq.char_poly == Poly({11, -6, 1}));
    CHECK(to_int(cq.quasi.eval(7)) == oracle_count(a2, {1, 2}, 7));
}

TEST_CASE("linial closed forms, type A") {
    for (int l = 1; l <= 4; ++l) {
        const RootSystem rs = build_root_system("A" + std::to_string(l));
        for (int n = 1; n <= 4; ++n)
            CHECK(linial_quasi(rs, n, 0).char_poly == linial_closed_form(rs, n));
    }
}

TEST_CASE("linial closed forms, types B, C, D") {
    for (const std::string name : {"B2", "B3", "C3", "D4"}) {
        const RootSystem rs = build_root_system(name);
        for (int n = 1; n <= 3; ++n) {
            INFO(name, " n=", n);
            CHECK(linial_quasi(rs, n, 0).char_poly == linial_closed_form(rs, n));
        }
    }
}

TEST_CASE("linial shift against the lower interval") {
    const RootSystem b2 = build_root_system("B2");
    const CharQuasi shifted = linial_quasi(b2, 1, 1);
    const CharQuasi base = linial_quasi(b2, 1, 0);
    CHECK(quasi_equal(shifted.quasi,
                      apply_shift(Poly::monomial(b2.coxeter_number), base.quasi)));
}

TEST_CASE("catalan characteristic polynomials") {
    const RootSystem b2 = build_root_system("B2");
    CHECK(catalan_char_poly(b2, 1) == Poly({-5, 1}) * Poly({-7, 1}));
    CHECK(catalan_char_poly(b2, 0) == Poly({-1, 1}) * Poly({-3, 1}));
    const RootSystem g2 = build_root_system("G2");
    CHECK(catalan_char_poly(g2, 1) == Poly({-7, 1}) * Poly({-11, 1}));
}

TEST_CASE("formula coverage classification") {
    CHECK(ArrangementSpec{0, 0}.is_coxeter());
    CHECK(ArrangementSpec{-2, 2}.is_catalan());
    CHECK(ArrangementSpec{-1, 2}.is_shi());
    CHECK(ArrangementSpec{0, 2}.is_extended_linial());
    CHECK_FALSE(formula_quasi_coverage({2, 3}));
    CHECK_FALSE(formula_quasi_coverage({-2, 1}));
}

TEST_CASE("formula vs oracle across a small matrix") {
    for (const std::string name : {"A1", "A2", "B2", "G2"}) {
        const RootSystem rs = build_root_system(name);
        for (const ArrangementSpec spec :
             {ArrangementSpec{0, 0}, {-1, 1}, {0, 1}, {1, 1}, {1, 2}, {0, 2}, {-1, 2}}) {
            const auto cq = formula_quasi(rs, spec);
            REQUIRE(cq.has_value());
            const long long vf =
                std::max(cq->quasi.valid_from(), spec.levels() * rs.coxeter_number);
            for (long long q = vf + 1; q <= vf + 6; ++q) {
                INFO(name, " ", spec.str(), " q=", q);
                CHECK(rat(oracle_count(rs, spec, q)) == cq->quasi.eval(q));
            }
        }
    }
}

TEST_CASE("oracle route on an interval without closed form") {
    const RootSystem a2 = build_root_system("A2");
    const CharQuasi cq = oracle_quasi(a2, {-2, 1});
    CHECK(cq.empirical);
    CHECK(cq.route == "oracle");
    CHECK(cq.char_poly.is_monic());
    CHECK(cq.char_poly.degree() == 2);
    /* it still matches fresh counts */
    const long long q = cq.quasi.valid_from() + 11;
    CHECK(rat(oracle_count(a2, {-2, 1}, q)) == cq.quasi.eval(q));
}

TEST_CASE("constituent structure") {
    const RootSystem g2 = build_root_system("G2");
    const CharQuasi cq = oracle_quasi(g2, {1, 1});
    for (int r = 1; r <= cq.quasi.period(); ++r) {
        CHECK(cq.quasi.constituent(r).is_monic());
        CHECK(cq.quasi.constituent(r).degree() == g2.rank);
    }
    CHECK(cq.quasi.gcd_property());
    /* distinct residue classes under the gcd grouping: one per divisor */
    CHECK(cq.quasi.gcd_class_count() == 4);  // divisors of 6: 1,2,3,6
}

TEST_CASE("hyperplane count of the spec") {
    for (const std::string name : {"A2", "B3", "G2"}) {
        const RootSystem rs = build_root_system(name);
        for (const ArrangementSpec spec : {ArrangementSpec{0, 0}, {1, 2}, {-1, 3}}) {
            const long long expected =
                static_cast<long long>(rs.rank) * rs.coxeter_number * spec.levels() / 2;
            CHECK(static_cast<long long>(rs.num_positive_roots()) * spec.levels() == expected);
        }
    }
}
