#include "weylcq/ehrhart.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>

#include "weylcq/errors.hpp"

namespace weylcq {

long long count_alcove_points(const RootSystem& rs, const AlcoveCountQuery& query) {
    if (query.q < 0) throw std::invalid_argument("dilation must be nonnegative");
    std::set<int> excluded = query.excluded_facets;
    if (query.interior_only) {
        if (!query.excluded_facets.empty())
            throw std::invalid_argument("interior_only excludes all facets already");
        for (int i = 0; i <= rs.rank; ++i) excluded.insert(i);
    }
    /* Coordinates with an excluded wall shift from >=0 to >=1; excluding the
     * highest-root wall drops the budget by c_0 = 1. */
    long long budget = query.q;
    for (int i : excluded) {
        if (i < 0 || i > rs.rank) throw std::out_of_range("facet index out of range");
        budget -= (i == 0) ? 1 : rs.marks[i - 1];
    }
    if (budget < 0) return 0;

    /* #{t >= 0 : sum c_i t_i <= budget} by the coin recurrence, one coin per
     * coordinate. */
    std::vector<long long> dp(budget + 1, 0);
    dp[0] = 1;
    for (int i = 0; i < rs.rank; ++i) {
        const int c = rs.marks[i];
        for (long long j = c; j <= budget; ++j) dp[j] += dp[j - c];
    }
    return std::accumulate(dp.begin(), dp.end(), 0LL);
}

long long count_alcove_points_direct(const RootSystem& rs, const AlcoveCountQuery& query) {
    std::set<int> excluded = query.excluded_facets;
    if (query.interior_only)
        for (int i = 0; i <= rs.rank; ++i) excluded.insert(i);
    long long budget = query.q - (excluded.count(0) ? 1 : 0);
    std::function<long long(int, long long)> rec = [&](int i, long long left) -> long long {
        if (left < 0) return 0;
        if (i == rs.rank) return 1;
        const int lo = excluded.count(i + 1) ? 1 : 0;
        long long total = 0;
        for (long long t = lo; t * rs.marks[i] <= left; ++t) total += rec(i + 1, left - t * rs.marks[i]);
        return total;
    };
    return rec(0, budget);
}

QuasiPoly ehrhart_quasi(const RootSystem& rs) {
    const int period = rs.ehrhart_period;
    const int degree = rs.rank;
    std::map<long long, long long> samples;
    for (long long q = 1; q <= static_cast<long long>(degree + 2) * period; ++q)
        samples[q] = count_alcove_points(rs, q);
    QuasiPoly ehr = interpolate_quasi(samples, period, degree, 0);

    const Rat lead = rat(rs.index_of_connection) / rat(rs.weyl_order);
    for (int r = 1; r <= period; ++r) {
        const Poly& g = ehr.constituent(r);
        if (g.degree() != degree || g.coeff(degree) != lead)
            throw std::logic_error("alcove Ehrhart constituent has wrong leading term for " +
                                   rs.str());
    }
    if (!ehr.gcd_property())
        throw std::logic_error("alcove Ehrhart quasi-polynomial lost the gcd property for " +
                               rs.str());
    return ehr;
}

Report verify_facet_removal(const RootSystem& rs, int subset_size_max, int q_samples) {
    Report rep;
    rep.check = "facet-removal";
    rep.type = rs.str();
    rep.parameters = {{"subset_size_max", subset_size_max}, {"q_samples", q_samples}};

    std::vector<int> facets(rs.rank + 1);
    std::iota(facets.begin(), facets.end(), 0);
    const int n = rs.rank + 1;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) > subset_size_max) continue;
        std::set<int> subset;
        long long shift = 0;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) {
                subset.insert(i);
                shift += (i == 0) ? 1 : rs.marks[i - 1];
            }
        for (long long q = shift + 1; q <= shift + q_samples; ++q) {
            long long direct = count_alcove_points_direct(rs, AlcoveCountQuery{q, subset, false});
            long long expected = count_alcove_points(rs, q - shift);
            if (direct != expected)
                rep.fail({{"subset", std::vector<int>(subset.begin(), subset.end())},
                          {"q", q},
                          {"direct", direct},
                          {"expected", expected}});
        }
    }
    return rep;
}

Report verify_reciprocity(const RootSystem& rs, long long q_lo, long long q_hi) {
    Report rep;
    rep.check = "reciprocity";
    rep.type = rs.str();
    rep.parameters = {{"q_lo", q_lo}, {"q_hi", q_hi}};
    const QuasiPoly ehr = ehrhart_quasi(rs);
    const int sign = (rs.rank % 2 == 0) ? 1 : -1;
    for (long long q = q_lo; q <= q_hi; ++q) {
        const Rat at_neg = ehr.eval(-q);
        const long long interior =
            count_alcove_points(rs, AlcoveCountQuery{q, {}, true});
        if (at_neg * sign != rat(interior))
            rep.fail({{"q", q},
                      {"ehr(-q)", rat_str(at_neg)},
                      {"interior", interior},
                      {"law", "ehr(-q) = (-1)^l * interior(q)"}});
        if (ehr.eval(q - rs.coxeter_number) != at_neg * sign)
            rep.fail({{"q", q}, {"law", "ehr(q-h) = (-1)^l * ehr(-q)"}});
    }
    return rep;
}

Report verify_period_minimality(const RootSystem& rs) {
    Report rep;
    rep.check = "period-minimality";
    rep.type = rs.str();
    const int period = rs.ehrhart_period;
    rep.parameters = {{"period", period}};

    const long long window = 3LL * period * (rs.rank + 1);
    std::map<long long, long long> samples;
    for (long long q = 1; q <= window; ++q) samples[q] = count_alcove_points(rs, q);

    try {
        interpolate_quasi(samples, period, rs.rank, 0);
    } catch (const OverdeterminationFailure& e) {
        rep.fail({{"period", period}, {"consistent", false}, {"residue", e.residue}});
    }
    for (int d = 1; d < period; ++d) {
        if (period % d != 0) continue;
        bool fits = true;
        try {
            interpolate_quasi(samples, d, rs.rank, 0);
        } catch (const OverdeterminationFailure&) {
            fits = false;
        }
        if (fits)
            rep.fail({{"divisor", d},
                      {"consistent", true},
                      {"note", "counts also fit the smaller period"}});
    }
    return rep;
}

}  // namespace weylcq
