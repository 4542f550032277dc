#include "weylcq/alcove.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "weylcq/errors.hpp"
#include "weylcq/parallel.hpp"

namespace weylcq {

namespace {

struct VecHash {
    size_t operator()(const std::vector<int>& v) const {
        size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

/* Exact perturbed point for the reduction walk: base = num/den in coweight
 * coordinates, plus an integer direction vector (its positive scale is
 * irrelevant, only signs of pairings matter). */
template <class I>
struct LexPoint {
    std::vector<I> num;
    I den;
    std::vector<I> dir;
};

template <class I>
int lex_sign_minus(const I& base_diff, const I& dir_val) {
    /* sign of (base_diff + eps*dir_val) */
    if (base_diff != 0) return base_diff < 0 ? -1 : 1;
    if (dir_val != 0) return dir_val < 0 ? -1 : 1;
    return 0;
}

template <class I>
I dot_root(const std::vector<int>& root, const std::vector<I>& v) {
    I s = 0;
    for (size_t j = 0; j < root.size(); ++j)
        if (root[j] != 0) s += I(root[j]) * v[j];
    return s;
}

/* Reduction into the open fundamental alcove in the perturbed sense.  Each
 * pass first folds into the dominant cone (inversion count strictly drops),
 * then reflects in the affine wall (squared norm strictly drops), so the walk
 * terminates; the step budget is a failsafe against arithmetic bugs. */
template <class I>
std::vector<int> reduce_word(const RootSystem& rs, LexPoint<I> p, long long step_budget) {
    const int l = rs.rank;
    std::vector<int> word;
    long long steps = 0;
    for (;;) {
        int applied = -1;
        for (int i = 1; i <= l; ++i) {
            if (lex_sign_minus(p.num[i - 1], p.dir[i - 1]) < 0) {
                /* s_i: x -= (alpha_i, x) alpha_i^vee */
                const I v = p.num[i - 1];
                const I dv = p.dir[i - 1];
                const auto& coroot = rs.cartan[i - 1];
                for (int j = 0; j < l; ++j) {
                    if (coroot[j] == 0) continue;
                    p.num[j] -= v * coroot[j];
                    p.dir[j] -= dv * coroot[j];
                }
                applied = i;
                break;
            }
        }
        if (applied < 0) {
            const I vh = dot_root<I>(rs.highest_root, p.num);
            const I dvh = dot_root<I>(rs.highest_root, p.dir);
            if (lex_sign_minus(I(vh - p.den), dvh) > 0) {
                /* s_0: x -= ((highest, x) - 1) highest^vee */
                const I excess = vh - p.den;
                for (int j = 0; j < l; ++j) {
                    if (rs.highest_coroot[j] == 0) continue;
                    p.num[j] -= excess * I(rs.highest_coroot[j]);
                    p.dir[j] -= dvh * I(rs.highest_coroot[j]);
                }
                applied = 0;
            }
        }
        if (applied < 0) break;
        word.push_back(applied);
        if (++steps > step_budget)
            throw NonTermination("alcove reduction exceeded its step budget of " +
                                 std::to_string(step_budget));
    }
    return word;
}

/* asc of the alcove whose reduction walk is `word`: the inverse walk's
 * linear part w acts on roots through the reversed word. */
int asc_from_word(const RootSystem& rs, const std::vector<int>& word) {
    const int l = rs.rank;
    std::vector<std::vector<int>> imgs(l);
    for (int j = 0; j < l; ++j) {
        std::vector<int> root(l, 0);
        root[j] = 1;
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            root = reflect_root(rs, *it, root);
        imgs[j] = std::move(root);
    }
    int total = 0;
    std::vector<int> img_high(l, 0);
    for (int j = 0; j < l; ++j) {
        if (is_positive_root_vector(imgs[j])) total += rs.marks[j];
        for (int m = 0; m < l; ++m) img_high[m] += rs.marks[j] * imgs[j][m];
    }
    for (int& x : img_high) x = -x;  // w(alpha_0) = -w(highest root)
    if (is_positive_root_vector(img_high)) total += 1;
    return total;
}

long long reduction_budget(const RootSystem& rs, const Rat& max_coord) {
    Rat m = max_coord < 0 ? Rat(-max_coord) : max_coord;
    long long c = to_int(rat_floor(m)) + 1;
    return 10LL * rs.coxeter_number * (c + 1);
}

/* floor k with k < v/den + eps*dsign < k+1; dsign must be nonzero. */
long long perturbed_floor(long long v, long long den, int dsign) {
    if (dsign == 0) throw std::invalid_argument("perturbation direction hits a hyperplane");
    long long q = v / den;
    long long r = v % den;
    if (r < 0) {
        q -= 1;
        r += den;
    }
    if (r == 0 && dsign < 0) return q - 1;
    return q;
}

void check_scan_guard(int rank, long long q, long long guard) {
    long long points = 1;
    for (int i = 0; i < rank; ++i) {
        if (points > guard / q + 1) throw GuardExceeded(guard + 1, guard);
        points *= q;
    }
    if (points > guard) throw GuardExceeded(points, guard);
}

/* Scans {1..q}^l, handing each point's positive-root values to visit. */
void scan_box(const RootSystem& rs, long long q, long long lo0, long long hi0,
              const std::function<void(const std::vector<long long>& point,
                                       const std::vector<long long>& vals)>& visit) {
    const int l = rs.rank;
    const int nroots = rs.num_positive_roots();
    std::vector<long long> point(l, 1);
    std::vector<long long> vals(nroots, 0);
    std::function<void(int)> rec = [&](int depth) {
        if (depth == l) {
            visit(point, vals);
            return;
        }
        const long long lo = depth == 0 ? lo0 : 1;
        const long long hi = depth == 0 ? hi0 : q;
        for (long long t = lo; t <= hi; ++t) {
            point[depth] = t;
            for (int m = 0; m < nroots; ++m) {
                const int coeff = rs.positive_roots[m][depth];
                if (coeff) vals[m] += coeff * (t == lo ? lo : 1);
                /* incremental: first iteration adds lo*coeff, then +coeff */
            }
            rec(depth + 1);
        }
        /* undo this depth's contributions */
        for (int m = 0; m < nroots; ++m) {
            const int coeff = rs.positive_roots[m][depth];
            if (coeff) vals[m] -= coeff * hi;
        }
        point[depth] = 1;
    };
    rec(0);
}

}  // namespace

std::vector<Rat> AffineElement::apply(const std::vector<Rat>& x) const {
    const size_t l = translation.size();
    std::vector<Rat> y(l, Rat(0));
    for (size_t j = 0; j < l; ++j) {
        Rat s = translation[j];
        for (size_t k = 0; k < l; ++k)
            if (linear[j][k] != 0) s += linear[j][k] * x[k];
        y[j] = s;
    }
    return y;
}

AlcoveKey alcove_key_of(const RootSystem& rs, const PerturbedPoint& p) {
    const int nroots = rs.num_positive_roots();
    AlcoveKey key;
    key.floors.resize(nroots);
    for (int m = 0; m < nroots; ++m) {
        const Rat v = pairing(rs, rs.positive_roots[m], p.base);
        const Rat dv = pairing(rs, rs.positive_roots[m], p.dir);
        const int dsign = dv < 0 ? -1 : (dv > 0 ? 1 : 0);
        if (dsign == 0)
            throw std::invalid_argument("perturbation direction is not generic for " + rs.str());
        Rat fl = rat_floor(v);
        long long k = to_int(fl);
        if (fl == v && dsign < 0) k -= 1;
        key.floors[m] = static_cast<int>(k);
    }
    return key;
}

AffineElement reduce_to_fundamental(const RootSystem& rs, const PerturbedPoint& p) {
    const int l = rs.rank;
    if (static_cast<int>(p.base.size()) != l || static_cast<int>(p.dir.size()) != l)
        throw std::invalid_argument("point dimension mismatch");

    /* Scale base and direction to integer vectors; positive scaling changes
     * neither the alcove nor the walk. */
    mpz_class den(1);
    for (const Rat& x : p.base) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
    mpz_class dden(1);
    for (const Rat& x : p.dir) mpz_lcm(dden.get_mpz_t(), dden.get_mpz_t(), x.get_den().get_mpz_t());

    LexPoint<mpz_class> lp;
    lp.den = den;
    lp.num.resize(l);
    lp.dir.resize(l);
    Rat max_coord(0);
    for (int j = 0; j < l; ++j) {
        Rat n = p.base[j] * Rat(den);
        Rat d = p.dir[j] * Rat(dden);
        lp.num[j] = n.get_num();
        lp.dir[j] = d.get_num();
        Rat a = p.base[j] < 0 ? Rat(-p.base[j]) : p.base[j];
        if (a > max_coord) max_coord = a;
    }
    std::vector<int> word = reduce_word<mpz_class>(rs, lp, reduction_budget(rs, max_coord));

    AffineElement u;
    u.word = word;
    u.linear.assign(l, std::vector<Rat>(l, Rat(0)));
    u.translation.assign(l, Rat(0));
    for (int j = 0; j < l; ++j) u.linear[j][j] = Rat(1);
    for (int idx : word) {
        /* compose reflection after the current map */
        std::vector<std::vector<Rat>> m(l, std::vector<Rat>(l, Rat(0)));
        std::vector<Rat> b(l, Rat(0));
        if (idx == 0) {
            for (int j = 0; j < l; ++j) {
                for (int k = 0; k < l; ++k)
                    m[j][k] = Rat((j == k) ? 1 : 0) - rat(rs.marks[k]) * rat(rs.highest_coroot[j]);
                b[j] = rat(rs.highest_coroot[j]);
            }
        } else {
            for (int j = 0; j < l; ++j)
                for (int k = 0; k < l; ++k)
                    m[j][k] = Rat((j == k) ? 1 : 0) -
                              Rat((k == idx - 1) ? 1 : 0) * rat(rs.cartan[idx - 1][j]);
        }
        std::vector<std::vector<Rat>> nl(l, std::vector<Rat>(l, Rat(0)));
        std::vector<Rat> nt(l, Rat(0));
        for (int j = 0; j < l; ++j) {
            for (int k = 0; k < l; ++k) {
                Rat s(0);
                for (int a = 0; a < l; ++a)
                    if (m[j][a] != 0 && u.linear[a][k] != 0) s += m[j][a] * u.linear[a][k];
                nl[j][k] = s;
            }
            Rat s = b[j];
            for (int a = 0; a < l; ++a)
                if (m[j][a] != 0 && u.translation[a] != 0) s += m[j][a] * u.translation[a];
            nt[j] = s;
        }
        u.linear = std::move(nl);
        u.translation = std::move(nt);
    }
    return u;
}

int asc_of_alcove(const RootSystem& rs, const PerturbedPoint& p) {
    AffineElement u = reduce_to_fundamental(rs, p);
    return asc_from_word(rs, u.word);
}

std::map<AlcoveKey, int> worpitzky_partition(const RootSystem& rs, long long guard) {
    const int l = rs.rank;
    const long long q = rs.coxeter_number + 1;
    check_scan_guard(l, q, guard);

    const int workers = worker_threads();
    std::vector<std::unordered_map<std::vector<int>, std::vector<long long>, VecHash>> local(
        std::max(1, workers));
    parallel_chunks(1, q + 1, [&](long long lo, long long hi, int w) {
        auto& mine = local[w];
        std::vector<int> floors(rs.num_positive_roots());
        scan_box(rs, q, lo, hi, [&](const std::vector<long long>& point,
                                    const std::vector<long long>& vals) {
            for (size_t m = 0; m < floors.size(); ++m)
                floors[m] = static_cast<int>(perturbed_floor(vals[m], q, -1));
            auto it = mine.find(floors);
            if (it == mine.end()) mine.emplace(floors, point);
        });
    });

    std::map<AlcoveKey, int> result;
    for (auto& mine : local) {
        for (auto& [floors, rep] : mine) {
            AlcoveKey key{floors};
            if (result.count(key)) continue;
            LexPoint<long long> lp;
            lp.num = rep;
            lp.den = q;
            lp.dir.assign(l, -1);
            std::vector<int> word = reduce_word<long long>(rs, lp, reduction_budget(rs, rat(1)));
            result.emplace(std::move(key), asc_from_word(rs, word));
        }
    }
    const long long expected = rs.weyl_order / rs.index_of_connection;
    if (static_cast<long long>(result.size()) != expected)
        throw std::logic_error("parallelepiped partition found " +
                               std::to_string(result.size()) + " alcoves, expected " +
                               std::to_string(expected));
    return result;
}

long long half_open_alcove_count(const RootSystem& rs, const AlcoveKey& key, long long q,
                                 long long guard) {
    if (q < 0) throw std::invalid_argument("dilation must be nonnegative");
    if (q == 0) return 0;
    check_scan_guard(rs.rank, q, guard);
    if (static_cast<int>(key.floors.size()) != rs.num_positive_roots())
        throw std::invalid_argument("alcove key does not match the root system");

    std::vector<long long> totals(std::max(1, worker_threads()), 0);
    parallel_chunks(1, q + 1, [&](long long lo, long long hi, int w) {
        long long count = 0;
        scan_box(rs, q, lo, hi,
                 [&](const std::vector<long long>&, const std::vector<long long>& vals) {
                     for (size_t m = 0; m < vals.size(); ++m) {
                         const long long k = key.floors[m];
                         if (vals[m] <= q * k || vals[m] > q * (k + 1)) return;
                     }
                     ++count;
                 });
        totals[w] = count;
    });
    return std::accumulate(totals.begin(), totals.end(), 0LL);
}

std::map<AlcoveKey, long long> partition_point_counts(const RootSystem& rs, long long q,
                                                      long long guard) {
    if (q < 1) throw std::invalid_argument("dilation must be positive");
    check_scan_guard(rs.rank, q, guard);
    std::vector<std::unordered_map<std::vector<int>, long long, VecHash>> local(
        std::max(1, worker_threads()));
    parallel_chunks(1, q + 1, [&](long long lo, long long hi, int w) {
        auto& mine = local[w];
        std::vector<int> floors(rs.num_positive_roots());
        scan_box(rs, q, lo, hi,
                 [&](const std::vector<long long>&, const std::vector<long long>& vals) {
                     for (size_t m = 0; m < floors.size(); ++m)
                         floors[m] = static_cast<int>(perturbed_floor(vals[m], q, -1));
                     mine[floors] += 1;
                 });
    });
    std::map<AlcoveKey, long long> result;
    for (auto& mine : local)
        for (auto& [floors, count] : mine) result[AlcoveKey{floors}] += count;
    return result;
}

Poly generalized_eulerian(const RootSystem& rs, EulerianRoute route, long long weyl_cap,
                          long long scan_guard) {
    switch (route) {
        case EulerianRoute::product_formula: {
            Poly p = eulerian_polynomial(rs.rank);
            for (int c : rs.marks) p *= q_bracket(c);
            return p;
        }
        case EulerianRoute::weyl_sum: {
            const auto elements = enumerate_weyl(rs, weyl_cap);
            std::vector<long long> counts(rs.coxeter_number + 1, 0);
            for (const auto& w : elements) counts[asc(rs, w)] += 1;
            const long long f = rs.index_of_connection;
            std::vector<Rat> coeffs(rs.coxeter_number + 1, Rat(0));
            for (size_t k = 0; k < counts.size(); ++k) {
                if (counts[k] % f != 0)
                    throw std::logic_error("asc distribution is not divisible by f for " +
                                           rs.str());
                coeffs[k] = rat(counts[k] / f);
            }
            return Poly(std::move(coeffs));
        }
        case EulerianRoute::alcove_scan: {
            const auto partition = worpitzky_partition(rs, scan_guard);
            std::vector<Rat> coeffs(rs.coxeter_number + 1, Rat(0));
            for (const auto& [key, a] : partition) coeffs[a] += 1;
            return Poly(std::move(coeffs));
        }
    }
    throw std::invalid_argument("unknown route");
}

}  // namespace weylcq
