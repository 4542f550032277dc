#include "weylcq/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "weylcq/alcove.hpp"
#include "weylcq/ehrhart.hpp"
#include "weylcq/errors.hpp"

namespace weylcq {

Report check_functional_equation(const RootSystem& rs, const ArrangementSpec& spec) {
    Report rep;
    rep.check = "functional-equation";
    rep.type = rs.str();
    rep.parameters = {{"a", spec.a}, {"b", spec.b}};
    const long long c = spec.levels() * rs.coxeter_number;

    if (spec.is_catalan()) {
        /* Exponent duality makes the product factor symmetric; the identity
         * is checked on the characteristic polynomial. */
        const Poly chi = catalan_char_poly(rs, static_cast<int>(spec.b));
        const Poly reflected = chi.reflect_arg(rat(c));
        const Poly signed_chi = (rs.rank % 2 == 0) ? chi : -chi;
        if (!(reflected == signed_chi))
            rep.fail({{"level", "char-poly"},
                      {"lhs", reflected.str()},
                      {"rhs", signed_chi.str()}});
        return rep;
    }

    auto cq = formula_quasi(rs, spec);
    if (!cq) {
        rep.fail({{"error", "interval outside formula coverage"}});
        return rep;
    }
    const QuasiPoly lhs = quasi_reflect(cq->quasi, c);
    const QuasiPoly rhs = quasi_negate_sign(cq->quasi, rs.rank);
    if (!quasi_equal(lhs, rhs)) {
        for (int r = 1; r <= lhs.period(); ++r)
            if (!(lhs.constituent(r) == rhs.constituent(r)))
                rep.fail({{"residue", r},
                          {"lhs", lhs.constituent(r).str()},
                          {"rhs", rhs.constituent(r).str()}});
    }
    return rep;
}

Report check_shift_reduction(const RootSystem& rs, int n, int k, long long oracle_guard) {
    Report rep;
    rep.check = "shift-reduction";
    rep.type = rs.str();
    rep.parameters = {{"n", n}, {"k", k}};
    const CharQuasi extended = linial_quasi(rs, n, k);
    const CharQuasi base = linial_quasi(rs, n, 0);
    const QuasiPoly shifted = apply_shift(Poly::monomial(k * rs.coxeter_number), base.quasi);
    if (!quasi_equal(extended.quasi, shifted))
        rep.fail({{"level", "constituents"},
                  {"extended", extended.quasi.str()},
                  {"shifted", shifted.str()}});

    /* Counting spot-checks: two arguments per residue, where feasible. */
    const long long vf = extended.quasi.valid_from();
    for (int r = 0; r < extended.quasi.period(); ++r) {
        for (int rep_i = 0; rep_i < 2; ++rep_i) {
            const long long q = vf + 1 + r + static_cast<long long>(rep_i) * extended.quasi.period();
            long long points = 1;
            bool feasible = true;
            for (int i = 0; i < rs.rank; ++i) {
                points *= q;
                if (points > oracle_guard) {
                    feasible = false;
                    break;
                }
            }
            if (!feasible) continue;
            const long long counted = oracle_count(rs, extended.spec, q, oracle_guard);
            if (rat(counted) != extended.quasi.eval(q))
                rep.fail({{"q", q},
                          {"counted", counted},
                          {"formula", rat_str(extended.quasi.eval(q))}});
        }
    }
    return rep;
}

Report check_congruence(int l, int m) {
    Report rep;
    rep.check = "eulerian-congruence";
    rep.type = "eulerian";
    rep.parameters = {{"l", l}, {"m", m}};
    if (l < 1 || m < 2) {
        rep.fail({{"error", "need l >= 1 and m >= 2"}});
        return rep;
    }
    const Poly el = eulerian_polynomial(l);
    const Poly lhs = el.stretch(m);
    const Poly rhs = q_bracket(m).scaled(rat(1, m)).pow(l + 1) * el;
    const Poly modulus = Poly({1, -1}).pow(l + 1);  // (1 - S)^{l+1}
    const Poly diff = lhs - rhs;
    const Poly remainder = diff.divmod(modulus).second;
    if (!remainder.is_zero())
        rep.fail({{"remainder", remainder.str("S")}});
    return rep;
}

namespace {

double poly_abs_at(const std::vector<double>& coeffs, double r) {
    /* sum |a_k| r^k, an evaluation-scale for residual tests */
    double s = 0.0, p = 1.0;
    for (double a : coeffs) {
        s += std::abs(a) * p;
        p *= r;
    }
    return s;
}

}  // namespace

std::vector<std::complex<double>> complex_roots(const Poly& p) {
    const int n = p.degree();
    if (n < 1) throw std::invalid_argument("complex_roots needs degree >= 1");

    /* Work on the monic double image. */
    std::vector<double> a(n + 1);
    for (int k = 0; k <= n; ++k) a[k] = to_double(p.coeff(k) / p.leading());

    if (n == 1) return {std::complex<double>(-a[0], 0.0)};

    auto eval = [&](std::complex<double> z) {
        std::complex<double> s(0.0, 0.0);
        for (int k = n; k >= 0; --k) s = s * z + a[k];
        return s;
    };
    auto eval_deriv = [&](std::complex<double> z) {
        std::complex<double> s(0.0, 0.0);
        for (int k = n; k >= 1; --k) s = s * z + a[k] * static_cast<double>(k);
        return s;
    };

    /* Initial points on a circle around the root centroid (Fujiwara radius),
     * at irrational-ish phases so symmetric configurations cannot lock. */
    const double centroid = -a[n - 1] / n;
    double radius = 0.0;
    for (int k = 0; k < n; ++k) {
        double b = std::abs(a[k]);
        if (k == 0) b *= 0.5;
        if (b > 0) radius = std::max(radius, std::pow(b, 1.0 / (n - k)));
    }
    radius = 2.0 * radius + 0.5;
    std::vector<std::complex<double>> z(n);
    const double tau = 6.283185307179586;
    for (int i = 0; i < n; ++i) {
        double phase = tau * (i + 0.376) / n;
        z[i] = centroid + radius * std::complex<double>(std::cos(phase), std::sin(phase));
    }

    const double coeff_scale = poly_abs_at(a, 1.0);
    for (int iter = 0; iter < 1000; ++iter) {
        bool all_small = true;
        for (int i = 0; i < n; ++i) {
            const std::complex<double> pv = eval(z[i]);
            if (std::abs(pv) > 1e-12 * std::max(coeff_scale, poly_abs_at(a, std::abs(z[i]))))
                all_small = false;
            const std::complex<double> dv = eval_deriv(z[i]);
            std::complex<double> newton = (dv == 0.0) ? std::complex<double>(1e-8, 1e-8) : pv / dv;
            std::complex<double> rep(0.0, 0.0);
            for (int j = 0; j < n; ++j)
                if (j != i) rep += 1.0 / (z[i] - z[j]);
            const std::complex<double> denom = 1.0 - newton * rep;
            z[i] -= (std::abs(denom) < 1e-14) ? newton : newton / denom;
        }
        if (all_small) {
            std::sort(z.begin(), z.end(), [](auto u, auto v) {
                if (u.real() != v.real()) return u.real() < v.real();
                return u.imag() < v.imag();
            });
            return z;
        }
    }
    throw ConvergenceFailure("root iteration did not reach the residual target");
}

nlohmann::json RootCheckReport::to_json() const {
    nlohmann::json roots_json = nlohmann::json::array();
    for (const auto& r : roots) roots_json.push_back({r.real(), r.imag()});
    return {{"poly", polynomial.str()},
            {"roots", roots_json},
            {"target", to_double(target_real_part)},
            {"maxDeviation", max_deviation},
            {"passed", passed},
            {"predictedByPaper", predicted_by_theory}};
}

RootCheckReport riemann_check(const RootSystem& rs, int n, int k) {
    const CharQuasi cq = linial_quasi(rs, n, k);
    RootCheckReport report;
    report.polynomial = cq.char_poly;
    report.roots = complex_roots(cq.char_poly);
    report.target_real_part = rat(static_cast<long long>(n + 2 * k) * rs.coxeter_number, 2);
    const double target = to_double(report.target_real_part);
    report.max_deviation = 0.0;
    for (const auto& root : report.roots)
        report.max_deviation = std::max(report.max_deviation, std::abs(root.real() - target));
    report.passed = report.max_deviation < 1e-6;
    switch (rs.id.family) {
        case Family::A:
        case Family::B:
        case Family::C:
        case Family::D:
        case Family::G:
            report.predicted_by_theory = true;
            break;
        case Family::E:
        case Family::F:
            report.predicted_by_theory = ((n + 1) % rs.ehrhart_period_radical) == 0;
            break;
    }
    return report;
}

Poly e6_witness() {
    const RootSystem e6 = build_root_system(RootSystemId{Family::E, 6});
    const Poly g = char_poly_of(e6, ehrhart_quasi(e6));  // coprime Ehrhart constituent
    Poly witness = apply_shift_poly(eulerian_polynomial(6).stretch(6), g);
    witness = witness.scaled(Rat(1) / witness.leading());

    const Poly expected(
        {29288834LL, -8855550LL, 1159185LL, -84600LL, 3660LL, -90LL, 1LL});
    if (!(witness == expected))
        throw std::logic_error("witness sextic mismatch: got " + witness.str() +
                               ", expected " + expected.str());
    const auto roots = complex_roots(witness);
    for (const auto& r : roots)
        if (std::abs(r.real() - 15.0) > 1e-6)
            throw std::logic_error("witness root off the real-part-15 line: " +
                                   std::to_string(r.real()));
    return witness;
}

}  // namespace weylcq
