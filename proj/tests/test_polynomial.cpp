#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weylcq/polynomial.hpp"

using namespace weylcq;

namespace {

/* Independent expansion of (P(S)f)(t) over sampled integer arguments; the
 * production route composes polynomials instead. */
bool annihilates_by_sampling(const Poly& op, const Poly& f) {
    for (long long t = -6; t <= 6; ++t) {
        Rat total(0);
        for (int k = 0; k <= op.degree(); ++k) total += op.coeff(k) * f.eval(rat(t - k));
        if (total != 0) return false;
    }
    return true;
}

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

/* E_n by direct summation of t^{1+ascents} over all permutations. */
Poly eulerian_by_permutations(int n) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::vector<Rat> coeffs(n + 1, Rat(0));
    do {
        int ascents = 0;
        for (int i = 0; i + 1 < n; ++i)
            if (perm[i] < perm[i + 1]) ++ascents;
        coeffs[1 + ascents] += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Poly(coeffs);
}

}  // namespace

TEST_CASE("ring operations keep canonical form") {
    const Poly a({1, 1});   // t + 1
    const Poly b({-1, 1});  // t - 1
    CHECK(a * b == Poly({-1, 0, 1}));
    CHECK((a - a).is_zero());
    CHECK((a - a).degree() == -1);
    CHECK(a + b == Poly({0, 2}));
    CHECK(Poly({0, 0, 1}).shift_arg(rat(1)) == Poly({1, 2, 1}));
}

TEST_CASE("evaluation") {
    const Poly p({11, -6, 1});  // t^2 - 6t + 11, the A2 Linial characteristic polynomial
    CHECK(p.eval(rat(3)) == 2);
    CHECK(p.eval_int(7) == 18);
    CHECK(Poly{}.eval(rat(5)) == 0);
}

TEST_CASE("string form") {
    CHECK(Poly({11, -6, 1}).str() == "t^2 - 6*t + 11");
    CHECK(Poly({0, 1, 2, 1}).str() == "t^3 + 2*t^2 + t");
    CHECK(Poly{}.str() == "0");
    CHECK(Poly(std::vector<Rat>{rat(1, 2), rat(-3, 4)}).str("S") == "-3/4*S + 1/2");
}

TEST_CASE("eulerian polynomials match direct permutation sums") {
    for (int n = 1; n <= 8; ++n) CHECK(eulerian_polynomial(n) == eulerian_by_permutations(n));
}

TEST_CASE("eulerian basics") {
    CHECK(eulerian_polynomial(1) == Poly({0, 1}));
    CHECK(eulerian_polynomial(3) == Poly({0, 1, 4, 1}));
    CHECK(eulerian_polynomial(8) ==
          Poly({0, 1, 247, 4293, 15619, 15619, 4293, 247, 1}));
    for (int n = 1; n <= 8; ++n) {
        const Poly e = eulerian_polynomial(n);
        CHECK(e.eval(rat(1)) == rat(factorial(n)));
        /* palindromic coefficients: t^{n+1} E_n(1/t) = E_n(t) */
        for (int k = 1; k <= n; ++k) CHECK(e.coeff(k) == e.coeff(n - k + 1));
    }
}

TEST_CASE("q_bracket") {
    CHECK(q_bracket(1) == Poly({1}));
    CHECK(q_bracket(2) == Poly({1, 1}));
    CHECK(q_bracket(3) * Poly({-1, 1}) == Poly({-1, 0, 0, 1}));
}

TEST_CASE("shift operator on polynomials") {
    const Poly identity_op({1});
    const Poly f({11, -6, 1});
    CHECK(apply_shift_poly(identity_op, f) == f);
    /* (1 - S) of a constant vanishes */
    CHECK(apply_shift_poly(Poly({1, -1}), Poly({7})).is_zero());
    /* (1 - S) t = t - (t-1) = 1 */
    CHECK(apply_shift_poly(Poly({1, -1}), Poly({0, 1})) == Poly({1}));
}

TEST_CASE("annihilation iff divisibility by (1-S)^{deg+1}") {
    const Poly one_minus_s({1, -1});
    CHECK(is_annihilated(one_minus_s.pow(2), Poly({0, 1})));
    CHECK_FALSE(is_annihilated(one_minus_s, Poly({0, 1})));
    CHECK(is_annihilated(Poly({0, 1}) * one_minus_s.pow(3), Poly({0, 5, 1})));

    /* small sweep: op = S^j * (1-S)^e * (1 + 2S), f of degree d */
    const std::vector<Poly> fs{Poly({3}), Poly({1, 2}), Poly({0, 5, 1}), Poly({1, 0, 0, 2})};
    for (const Poly& f : fs) {
        for (int e = 0; e <= 5; ++e) {
            for (int j = 0; j <= 2; ++j) {
                const Poly op = Poly::monomial(j) * one_minus_s.pow(e) * Poly({1, 2});
                const bool expected = e >= f.degree() + 1;
                CHECK(is_annihilated(op, f) == expected);
                CHECK(annihilates_by_sampling(op, f) == expected);
                CHECK(op.divisible_by(one_minus_s.pow(f.degree() + 1)) == expected);
            }
        }
    }
}

TEST_CASE("divmod") {
    const Poly f({-1, 0, 0, 1});  // t^3 - 1
    const auto [q, r] = f.divmod(Poly({-1, 1}));
    CHECK(q == Poly({1, 1, 1}));
    CHECK(r.is_zero());
    const auto [q2, r2] = f.divmod(Poly({1, 1}));
    CHECK(r2 == Poly({-2}));
    CHECK(q2 * Poly({1, 1}) + r2 == f);
}

TEST_CASE("lagrange fit reproduces exact data") {
    const Poly p(std::vector<Rat>{rat(3, 2), rat(-1, 3), rat(1)});
    std::vector<Rat> xs, ys;
    for (long long x = 0; x < 3; ++x) {
        xs.push_back(rat(x));
        ys.push_back(p.eval(rat(x)));
    }
    CHECK(lagrange_fit(xs, ys) == p);
}

TEST_CASE("stretch and reflect") {
    const Poly e2 = eulerian_polynomial(2);  // t + t^2
    CHECK(e2.stretch(3) == Poly({0, 0, 0, 1, 0, 0, 1}));
    const Poly p({11, -6, 1});
    /* p(6 - t) = p(t) for this centered quadratic */
    CHECK(p.reflect_arg(rat(6)) == p);
    CHECK(p.mirror() == Poly({11, 6, 1}));
}
