#include "weylcq/charquasi.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "weylcq/alcove.hpp"
#include "weylcq/ehrhart.hpp"
#include "weylcq/errors.hpp"
#include "weylcq/parallel.hpp"

namespace weylcq {

void CharQuasi::validate(const RootSystem& rs) const {
    for (int r = 1; r <= quasi.period(); ++r) {
        const Poly& g = quasi.constituent(r);
        if (g.degree() != rs.rank || !g.is_monic())
            throw std::logic_error("characteristic constituent not monic of degree l for " +
                                   rs.str() + " " + spec.str());
    }
    if (!(char_poly == char_poly_of(rs, quasi)))
        throw std::logic_error("stored characteristic polynomial is stale");
}

Poly char_poly_of(const RootSystem& rs, const QuasiPoly& quasi) {
    const int n = quasi.period();
    for (int r = 1; r <= n; ++r)
        if (std::gcd(r, n) == 1) return quasi.constituent(r);
    (void)rs;
    throw std::logic_error("no residue coprime to the period");
}

long long oracle_count(const RootSystem& rs, const ArrangementSpec& spec, long long q,
                       long long guard) {
    if (spec.a > spec.b) throw std::invalid_argument("empty interval");
    if (q < 1) throw std::invalid_argument("modulus must be positive");
    long long points = 1;
    for (int i = 0; i < rs.rank; ++i) {
        points *= q;
        if (points > guard) throw GuardExceeded(points, guard);
    }
    if (spec.levels() >= q) return 0;  // every residue class is forbidden

    std::vector<char> forbidden(q, 0);
    for (long long k = spec.a; k <= spec.b; ++k) {
        long long r = k % q;
        if (r < 0) r += q;
        forbidden[r] = 1;
    }

    const int l = rs.rank;
    const int nroots = rs.num_positive_roots();
    std::vector<long long> totals(std::max(1, worker_threads()), 0);
    parallel_chunks(0, q, [&](long long lo, long long hi, int w) {
        std::vector<long long> vals(nroots, 0);
        std::vector<long long> coord(l, 0);
        long long count = 0;
        std::function<void(int)> rec = [&](int depth) {
            if (depth == l) {
                for (int m = 0; m < nroots; ++m)
                    if (forbidden[vals[m] % q]) return;
                ++count;
                return;
            }
            const long long first = depth == 0 ? lo : 0;
            const long long last = depth == 0 ? hi - 1 : q - 1;
            for (long long t = first; t <= last; ++t) {
                coord[depth] = t;
                for (int m = 0; m < nroots; ++m) {
                    const int c = rs.positive_roots[m][depth];
                    if (c) vals[m] += (t == first) ? c * first : c;
                }
                rec(depth + 1);
            }
            for (int m = 0; m < nroots; ++m) {
                const int c = rs.positive_roots[m][depth];
                if (c) vals[m] -= c * last;
            }
        };
        rec(0);
        totals[w] = count;
    });
    return std::accumulate(totals.begin(), totals.end(), 0LL);
}

namespace {

QuasiPoly oracle_fit(const RootSystem& rs, const ArrangementSpec& spec, int period,
                     long long guard) {
    const long long valid_from = spec.levels() * rs.coxeter_number;
    std::map<long long, long long> samples;
    const long long hi = valid_from + static_cast<long long>(period) * (rs.rank + 2);
    for (long long q = valid_from + 1; q <= hi; ++q)
        samples[q] = oracle_count(rs, spec, q, guard);
    return interpolate_quasi(samples, period, rs.rank, valid_from);
}

}  // namespace

CharQuasi oracle_quasi(const RootSystem& rs, const ArrangementSpec& spec, long long guard) {
    QuasiPoly fit;
    bool gcd_expected = true;
    try {
        fit = oracle_fit(rs, spec, rs.ehrhart_period, guard);
    } catch (const OverdeterminationFailure&) {
        /* The interval may genuinely need a larger period; retry once with
         * the lcm before giving up. */
        const int fallback = static_cast<int>(
            std::lcm<long long>(rs.ehrhart_period, std::max<long long>(1, spec.levels())));
        if (fallback == rs.ehrhart_period) throw;
        fit = oracle_fit(rs, spec, fallback, guard);
        gcd_expected = false;
    }
    if (gcd_expected && !fit.gcd_property())
        throw std::logic_error("oracle counting lost the gcd property for " + rs.str() + " " +
                               spec.str());
    CharQuasi cq;
    cq.spec = spec;
    cq.quasi = fit;
    cq.char_poly = char_poly_of(rs, fit);
    cq.route = "oracle";
    cq.empirical = !formula_quasi_coverage(spec);
    cq.validate(rs);
    return cq;
}

bool formula_quasi_coverage(const ArrangementSpec& spec) {
    return spec.is_coxeter() || spec.is_catalan() || spec.is_shi() || spec.is_extended_linial();
}

CharQuasi shi_quasi(const RootSystem& rs, int k) {
    if (k < 1) throw std::invalid_argument("shi_quasi needs k >= 1");
    const int kh = k * rs.coxeter_number;
    const Poly op = Poly::monomial(kh) * generalized_eulerian(rs, EulerianRoute::product_formula);
    const QuasiPoly chi = apply_shift(op, ehrhart_quasi(rs));
    const Poly expected = Poly::from_roots(std::vector<Rat>(rs.rank, rat(kh)));
    for (int r = 1; r <= chi.period(); ++r)
        if (!(chi.constituent(r) == expected))
            throw std::logic_error("Shi identity failed at residue " + std::to_string(r) +
                                   " for " + rs.str());
    CharQuasi cq;
    cq.spec = {1 - k, k};
    cq.quasi = QuasiPoly::from_poly(expected, chi.valid_from());
    cq.char_poly = expected;
    cq.route = "formula";
    cq.validate(rs);
    return cq;
}

CharQuasi linial_quasi(const RootSystem& rs, int n, int k) {
    if (n < 1 || k < 0) throw std::invalid_argument("linial_quasi needs n >= 1, k >= 0");
    const int kh = k * rs.coxeter_number;
    const Poly op = Poly::monomial(kh) *
                    generalized_eulerian(rs, EulerianRoute::product_formula).stretch(n + 1);
    const QuasiPoly chi = apply_shift(op, ehrhart_quasi(rs));
    CharQuasi cq;
    cq.spec = {1 - k, n + k};
    cq.quasi = chi;
    cq.char_poly = char_poly_of(rs, chi);
    cq.route = "formula";
    cq.validate(rs);
    return cq;
}

Poly catalan_char_poly(const RootSystem& rs, int k) {
    if (k < 0) throw std::invalid_argument("catalan_char_poly needs k >= 0");
    std::vector<Rat> roots;
    roots.reserve(rs.rank);
    for (int e : rs.exponents) roots.push_back(rat(e + static_cast<long long>(k) * rs.coxeter_number));
    return Poly::from_roots(roots);
}

std::optional<CharQuasi> formula_quasi(const RootSystem& rs, const ArrangementSpec& spec) {
    if (spec.is_shi()) return shi_quasi(rs, static_cast<int>(spec.b));
    if (spec.is_extended_linial())
        return linial_quasi(rs, static_cast<int>(spec.a + spec.b - 1),
                            static_cast<int>(1 - spec.a));
    if (spec.is_coxeter() || spec.is_catalan()) {
        /* chi(q) = (|W|/f) * Ehr(q - (k+1)h): the hyperplane shells shave
         * k+1 layers off every facet of every alcove in the dissection. */
        const long long k = spec.b;
        const QuasiPoly ehr = ehrhart_quasi(rs);
        const long long shift = (k + 1) * rs.coxeter_number;
        QuasiPoly chi = apply_shift(Poly::monomial(static_cast<int>(shift)), ehr)
                            .scaled(rat(rs.weyl_order) / rat(rs.index_of_connection));
        CharQuasi cq;
        cq.spec = spec;
        cq.quasi = chi;
        cq.char_poly = char_poly_of(rs, chi);
        cq.route = "formula";
        cq.validate(rs);
        return cq;
    }
    return std::nullopt;
}

}  // namespace weylcq
