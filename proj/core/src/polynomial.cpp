#include "weylcq/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace weylcq {

Poly Poly::monomial(int k, const Rat& a) {
    if (a == 0) return {};
    std::vector<Rat> c(k + 1, Rat(0));
    c[k] = a;
    return Poly(std::move(c));
}

Poly Poly::from_roots(const std::vector<Rat>& roots) {
    Poly p = constant(Rat(1));
    for (const Rat& r : roots) p *= Poly(std::vector<Rat>{-r, Rat(1)});
    return p;
}

Poly Poly::operator-() const {
    std::vector<Rat> c(c_);
    for (Rat& x : c) x = -x;
    return Poly(std::move(c));
}

Poly Poly::operator+(const Poly& g) const {
    std::vector<Rat> c(std::max(c_.size(), g.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < g.c_.size(); ++i) c[i] += g.c_[i];
    return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& g) const { return *this + (-g); }

Poly Poly::operator*(const Poly& g) const {
    if (is_zero() || g.is_zero()) return {};
    std::vector<Rat> c(c_.size() + g.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < g.c_.size(); ++j) c[i + j] += c_[i] * g.c_[j];
    return Poly(std::move(c));
}

Poly Poly::scaled(const Rat& a) const {
    std::vector<Rat> c(c_);
    for (Rat& x : c) x *= a;
    return Poly(std::move(c));
}

Poly Poly::pow(int n) const {
    if (n < 0) throw std::domain_error("negative polynomial power");
    Poly r = constant(Rat(1));
    Poly b = *this;
    for (; n; n >>= 1) {
        if (n & 1) r *= b;
        b *= b;
    }
    return r;
}

Rat Poly::eval(const Rat& x) const {
    Rat s(0);
    for (size_t i = c_.size(); i-- > 0;) s = s * x + c_[i];
    return s;
}

Poly Poly::shift_arg(const Rat& a) const {
    /* Horner on p viewed as q(t)*t + c0 keeps this O(n^2). */
    Poly res;
    const Poly lin(std::vector<Rat>{a, Rat(1)});
    for (size_t i = c_.size(); i-- > 0;) res = res * lin + constant(c_[i]);
    return res;
}

Poly Poly::mirror() const {
    std::vector<Rat> c(c_);
    for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return Poly(std::move(c));
}

Poly Poly::stretch(int m) const {
    if (m < 1) throw std::domain_error("stretch factor must be positive");
    if (is_zero()) return {};
    std::vector<Rat> c(static_cast<size_t>(degree()) * m + 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i * m] = c_[i];
    return Poly(std::move(c));
}

Poly Poly::derivative() const {
    if (degree() <= 0) return {};
    std::vector<Rat> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * rat(static_cast<long long>(i));
    return Poly(std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    std::vector<Rat> rem(c_);
    int dr = static_cast<int>(rem.size()) - 1;
    const int dd = divisor.degree();
    if (dr < dd) return {Poly{}, *this};
    std::vector<Rat> quot(dr - dd + 1, Rat(0));
    const Rat& lead = divisor.c_.back();
    for (; dr >= dd; --dr) {
        if (rem[dr] == 0) continue;
        Rat f = rem[dr] / lead;
        quot[dr - dd] = f;
        for (int j = 0; j <= dd; ++j) rem[dr - dd + j] -= f * divisor.c_[j];
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rat& a = c_[k];
        if (a == 0) continue;
        const bool neg = a < 0;
        Rat mag = neg ? Rat(-a) : a;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        const bool unit = (mag == 1);
        if (k == 0 || !unit) os << mag.get_str();
        if (k > 0) {
            if (!unit) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

Poly lagrange_fit(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    if (xs.size() != ys.size() || xs.empty())
        throw std::invalid_argument("lagrange_fit needs matching nonempty node/value lists");
    Poly acc;
    for (size_t i = 0; i < xs.size(); ++i) {
        Poly basis = Poly::constant(Rat(1));
        Rat denom(1);
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis *= Poly(std::vector<Rat>{-xs[j], Rat(1)});
            denom *= xs[i] - xs[j];
        }
        if (denom == 0) throw std::invalid_argument("lagrange_fit nodes must be distinct");
        acc += basis.scaled(ys[i] / denom);
    }
    return acc;
}

Poly eulerian_polynomial(int n) {
    if (n < 1) throw std::domain_error("eulerian_polynomial needs n >= 1");
    /* A(n,k) via the triangle recurrence A(n,k) = k*A(n-1,k) + (n-k+1)*A(n-1,k-1),
     * with coefficients placed at t^k, 1 <= k <= n. */
    std::vector<mpz_class> row{1};  // row for n=1: coefficient of t^1
    for (int m = 2; m <= n; ++m) {
        std::vector<mpz_class> next(m, 0);
        for (int k = 1; k <= m; ++k) {
            mpz_class v = 0;
            if (k <= m - 1) v += mpz_class(k) * row[k - 1];
            if (k >= 2) v += mpz_class(m - k + 1) * row[k - 2];
            next[k - 1] = v;
        }
        row = std::move(next);
    }
    std::vector<Rat> c(n + 1, Rat(0));
    for (int k = 1; k <= n; ++k) c[k] = Rat(row[k - 1]);
    return Poly(std::move(c));
}

Poly q_bracket(int c) {
    if (c < 1) throw std::domain_error("q_bracket needs c >= 1");
    return Poly(std::vector<Rat>(c, Rat(1)));
}

Poly apply_shift_poly(const Poly& op_in_s, const Poly& f) {
    Poly res;
    for (int k = 0; k <= op_in_s.degree(); ++k) {
        Rat a = op_in_s.coeff(k);
        if (a == 0) continue;
        res += f.shift_arg(rat(-k)).scaled(a);
    }
    return res;
}

bool is_annihilated(const Poly& op_in_s, const Poly& f) {
    return apply_shift_poly(op_in_s, f).is_zero();
}

}  // namespace weylcq
