#include "weylcq/quasipoly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "weylcq/errors.hpp"

namespace weylcq {

namespace {
/* residue label in 1..N for an arbitrary integer */
int residue_label(long long q, int n) {
    long long r = q % n;
    if (r <= 0) r += n;
    return static_cast<int>(r);
}
}  // namespace

QuasiPoly::QuasiPoly(int period, std::vector<Poly> constituents, long long valid_from)
    : period_(period), constituents_(std::move(constituents)), valid_from_(valid_from) {
    if (period_ < 1 || constituents_.size() != static_cast<size_t>(period_))
        throw std::invalid_argument("quasi-polynomial needs one constituent per residue");
}

const Poly& QuasiPoly::constituent(int r) const {
    if (r < 1 || r > period_) throw std::out_of_range("residue label out of range");
    return constituents_[r - 1];
}

const Poly& QuasiPoly::constituent_for(long long q) const {
    return constituents_[residue_label(q, period_) - 1];
}

int QuasiPoly::degree() const {
    int d = -1;
    for (const Poly& p : constituents_) d = std::max(d, p.degree());
    return d;
}

bool QuasiPoly::gcd_property() const {
    for (int r1 = 1; r1 <= period_; ++r1)
        for (int r2 = r1 + 1; r2 <= period_; ++r2)
            if (std::gcd(r1, period_) == std::gcd(r2, period_) &&
                !(constituents_[r1 - 1] == constituents_[r2 - 1]))
                return false;
    return true;
}

int QuasiPoly::gcd_class_count() const {
    int count = 0;
    for (int d = 1; d <= period_; ++d)
        if (period_ % d == 0) ++count;
    return count;
}

QuasiPoly QuasiPoly::lifted(int new_period) const {
    if (new_period % period_ != 0)
        throw std::invalid_argument("lift target must be a multiple of the period");
    std::vector<Poly> cs(new_period);
    for (int r = 1; r <= new_period; ++r) cs[r - 1] = constituent(residue_label(r, period_));
    return QuasiPoly(new_period, std::move(cs), valid_from_);
}

QuasiPoly QuasiPoly::scaled(const Rat& a) const {
    std::vector<Poly> cs(constituents_);
    for (Poly& p : cs) p = p.scaled(a);
    return QuasiPoly(period_, std::move(cs), valid_from_);
}

std::string QuasiPoly::str(const std::string& var) const {
    std::ostringstream os;
    os << "period " << period_ << ":";
    for (int r = 1; r <= period_; ++r)
        os << " [" << r << "] " << constituents_[r - 1].str(var) << ";";
    return os.str();
}

QuasiPoly apply_shift(const Poly& op_in_s, const QuasiPoly& f) {
    const int n = f.period();
    std::vector<Poly> cs(n);
    for (int r = 1; r <= n; ++r) {
        Poly acc;
        for (int k = 0; k <= op_in_s.degree(); ++k) {
            Rat a = op_in_s.coeff(k);
            if (a == 0) continue;
            /* arguments q = r mod n shifted by k land on residue r - k */
            acc += f.constituent(residue_label(r - k, n)).shift_arg(rat(-k)).scaled(a);
        }
        cs[r - 1] = acc;
    }
    long long vf = f.valid_from() + std::max(0, op_in_s.degree());
    return QuasiPoly(n, std::move(cs), vf);
}

bool quasi_equal(const QuasiPoly& f, const QuasiPoly& g) {
    const int n = std::lcm(f.period(), g.period());
    const QuasiPoly a = f.lifted(n);
    const QuasiPoly b = g.lifted(n);
    for (int r = 1; r <= n; ++r)
        if (!(a.constituent(r) == b.constituent(r))) return false;
    return true;
}

QuasiPoly quasi_reflect(const QuasiPoly& f, long long c) {
    const int n = f.period();
    std::vector<Poly> cs(n);
    for (int r = 1; r <= n; ++r)
        cs[r - 1] = f.constituent(residue_label(c - r, n)).reflect_arg(rat(c));
    return QuasiPoly(n, std::move(cs), f.valid_from());
}

QuasiPoly quasi_negate_sign(const QuasiPoly& f, int sign_dim) {
    return (sign_dim % 2 == 0) ? f : f.scaled(rat(-1));
}

QuasiPoly interpolate_quasi(const std::map<long long, long long>& samples, int period, int degree,
                            long long valid_from) {
    if (period < 1 || degree < 0) throw std::invalid_argument("bad period or degree");
    std::vector<Poly> cs(period);
    for (int r = 1; r <= period; ++r) {
        std::vector<Rat> xs, ys;
        std::vector<std::pair<long long, long long>> extra;
        for (const auto& [q, v] : samples) {
            if (q <= valid_from || residue_label(q, period) != r) continue;
            if (static_cast<int>(xs.size()) <= degree) {
                xs.push_back(rat(q));
                ys.push_back(rat(v));
            } else {
                extra.emplace_back(q, v);
            }
        }
        if (static_cast<int>(xs.size()) < degree + 1 || extra.empty())
            throw std::invalid_argument(
                "interpolate_quasi: residue " + std::to_string(r) + " needs at least " +
                std::to_string(degree + 2) + " samples above " + std::to_string(valid_from));
        Poly fit = lagrange_fit(xs, ys);
        for (const auto& [q, v] : extra)
            if (fit.eval(rat(q)) != rat(v)) throw OverdeterminationFailure(r, q);
        cs[r - 1] = fit;
    }
    return QuasiPoly(period, std::move(cs), valid_from);
}

}  // namespace weylcq
