#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "weylcq/rational.hpp"

namespace weylcq {

/* Dense univariate polynomial over Q, lowest degree first, no trailing zero
 * coefficient.  The zero polynomial is the empty coefficient list.  The same
 * type doubles as a polynomial in the shift symbol S. */
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<long long> ints) {
        c_.reserve(ints.size());
        for (long long v : ints) c_.push_back(rat(v));
        trim();
    }

    static Poly constant(const Rat& a) { return Poly(std::vector<Rat>{a}); }
    static Poly monomial(int k, const Rat& a = Rat(1));
    /* (t - r_1)(t - r_2)... */
    static Poly from_roots(const std::vector<Rat>& roots);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rat coeff(int k) const { return (k >= 0 && k <= degree()) ? c_[k] : Rat(0); }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat leading() const { return is_zero() ? Rat(0) : c_.back(); }
    bool is_monic() const { return !is_zero() && c_.back() == 1; }

    Poly operator-() const;
    Poly operator+(const Poly& g) const;
    Poly operator-(const Poly& g) const;
    Poly operator*(const Poly& g) const;
    Poly& operator+=(const Poly& g) { return *this = *this + g; }
    Poly& operator-=(const Poly& g) { return *this = *this - g; }
    Poly& operator*=(const Poly& g) { return *this = *this * g; }
    bool operator==(const Poly& g) const { return c_ == g.c_; }

    Poly scaled(const Rat& a) const;
    Poly pow(int n) const;

    Rat eval(const Rat& x) const;
    long long eval_int(long long x) const { return to_int(eval(rat(x))); }

    /* p(t + a) */
    Poly shift_arg(const Rat& a) const;
    /* p(-t) */
    Poly mirror() const;
    /* p(c - t) */
    Poly reflect_arg(const Rat& c) const { return mirror().shift_arg(-c); }
    /* p(t^m); used to turn g(S) into g(S^m) */
    Poly stretch(int m) const;
    Poly derivative() const;

    /* Euclidean division: returns {quotient, remainder}. */
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;
    bool divisible_by(const Poly& divisor) const { return divmod(divisor).second.is_zero(); }

    /* Canonical display, highest power first: "t^2 - 6*t + 11". */
    std::string str(const std::string& var = "t") const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

/* Lagrange interpolation through (xs[i], ys[i]); xs must be distinct. */
Poly lagrange_fit(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

/* Classical Eulerian polynomial E_n(t) = sum over permutations of t^{1+ascents};
 * coefficients are the Eulerian numbers A(n,k). */
Poly eulerian_polynomial(int n);

/* [c]_t = 1 + t + ... + t^{c-1} */
Poly q_bracket(int c);

/* (P(S)f)(t) = sum_k a_k f(t-k) for P(S) = sum_k a_k S^k. */
Poly apply_shift_poly(const Poly& op_in_s, const Poly& f);

/* True iff op_in_s(S) annihilates f; equivalent to (1-S)^{deg f + 1} | op_in_s. */
bool is_annihilated(const Poly& op_in_s, const Poly& f);

}  // namespace weylcq
