#pragma once

#include <map>
#include <vector>

#include "weylcq/polynomial.hpp"

namespace weylcq {

/* Quasi-polynomial of period N: constituent r (1 <= r <= N) applies to
 * integer arguments congruent to r mod N; the residue-0 class is stored as
 * r = N.  The function claim holds for arguments q > valid_from; identities
 * are checked at constituent level, so valid_from never affects equality. */
class QuasiPoly {
public:
    QuasiPoly() : period_(1), constituents_(1) {}
    QuasiPoly(int period, std::vector<Poly> constituents, long long valid_from = 0);

    static QuasiPoly from_poly(const Poly& p, long long valid_from = 0) {
        return QuasiPoly(1, {p}, valid_from);
    }

    int period() const { return period_; }
    long long valid_from() const { return valid_from_; }
    const std::vector<Poly>& constituents() const { return constituents_; }

    /* Constituent by residue label r in 1..N. */
    const Poly& constituent(int r) const;
    /* Constituent applicable to integer argument q (any sign). */
    const Poly& constituent_for(long long q) const;
    Rat eval(long long q) const { return constituent_for(q).eval(rat(q)); }

    int degree() const;

    /* Constituents depend on the residue only through gcd(residue, period). */
    bool gcd_property() const;
    /* Number of distinct residue classes under the gcd grouping (tau(N)). */
    int gcd_class_count() const;

    /* Same function with period lifted to a multiple of the current one. */
    QuasiPoly lifted(int new_period) const;

    QuasiPoly scaled(const Rat& a) const;

    std::string str(const std::string& var = "t") const;

private:
    int period_;
    std::vector<Poly> constituents_;
    long long valid_from_ = 0;
};

/* (P(S)f)(q) = sum_k a_k f(q-k).  Period is preserved; valid_from grows by
 * deg P since the claim at q now references arguments down to q - deg P. */
QuasiPoly apply_shift(const Poly& op_in_s, const QuasiPoly& f);

/* Exact identity of the underlying functions: periods are lifted to the lcm
 * and constituents compared. */
bool quasi_equal(const QuasiPoly& f, const QuasiPoly& g);

/* q |-> f(c - q) */
QuasiPoly quasi_reflect(const QuasiPoly& f, long long c);

/* q |-> (-1)^sign_dim * f(q) */
QuasiPoly quasi_negate_sign(const QuasiPoly& f, int sign_dim);

/* Exact fit of integer samples by a quasi-polynomial of the given period and
 * degree bound.  Per residue class, the first degree+1 samples above
 * valid_from determine a Lagrange fit and at least one further sample must
 * reproduce exactly, otherwise OverdeterminationFailure is thrown. */
QuasiPoly interpolate_quasi(const std::map<long long, long long>& samples, int period, int degree,
                            long long valid_from);

}  // namespace weylcq
