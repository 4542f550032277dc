#include "weylcq/rootsystem.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "weylcq/errors.hpp"

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

std::vector<std::vector<int>> simply_laced_cartan(int l, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> c(l, std::vector<int>(l, 0));
    for (int i = 0; i < l; ++i) c[i][i] = 2;
    for (auto [a, b] : edges) {
        c[a - 1][b - 1] = -1;
        c[b - 1][a - 1] = -1;
    }
    return c;
}

/* Cartan matrix with cartan[i][j] = <alpha_{j+1}, alpha_{i+1}^vee>, Bourbaki
 * numbering throughout. */
std::vector<std::vector<int>> make_cartan(Family f, int l) {
    std::vector<std::pair<int, int>> chain;
    for (int i = 1; i < l; ++i) chain.emplace_back(i, i + 1);
    switch (f) {
        case Family::A:
            return simply_laced_cartan(l, chain);
        case Family::B: {
            auto c = simply_laced_cartan(l, chain);
            c[l - 1][l - 2] = -2;  // alpha_l short
            return c;
        }
        case Family::C: {
            auto c = simply_laced_cartan(l, chain);
            c[l - 2][l - 1] = -2;  // alpha_l long
            return c;
        }
        case Family::D: {
            std::vector<std::pair<int, int>> e;
            for (int i = 1; i + 1 < l; ++i) e.emplace_back(i, i + 1);
            e.emplace_back(l - 2, l);
            return simply_laced_cartan(l, e);
        }
        case Family::E: {
            std::vector<std::pair<int, int>> e{{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}};
            if (l >= 7) e.emplace_back(6, 7);
            if (l == 8) e.emplace_back(7, 8);
            return simply_laced_cartan(l, e);
        }
        case Family::F: {
            auto c = simply_laced_cartan(4, chain);
            c[1][2] = -1;  // alpha_2 long, alpha_3 short
            c[2][1] = -2;
            return c;
        }
        case Family::G: {
            /* alpha_1 long, alpha_2 short; highest root 2a1 + 3a2 */
            return {{2, -1}, {-3, 2}};
        }
    }
    throw InvalidType("unknown family");
}

std::vector<Rat> make_norms(Family f, int l) {
    switch (f) {
        case Family::A:
        case Family::D:
        case Family::E:
            return std::vector<Rat>(l, rat(2));
        case Family::B: {
            std::vector<Rat> n(l, rat(2));
            n[l - 1] = rat(1);
            return n;
        }
        case Family::C: {
            std::vector<Rat> n(l, rat(1));
            n[l - 1] = rat(2);
            return n;
        }
        case Family::F:
            return {rat(2), rat(2), rat(1), rat(1)};
        case Family::G:
            return {rat(2), rat(2, 3)};
    }
    throw InvalidType("unknown family");
}

int table_period(Family f, int l) {
    switch (f) {
        case Family::A: return 1;
        case Family::B:
        case Family::C:
        case Family::D: return 2;
        case Family::E: return l == 6 ? 6 : (l == 7 ? 12 : 60);
        case Family::F: return 12;
        case Family::G: return 6;
    }
    throw InvalidType("unknown family");
}

int table_period_radical(Family f, int l) {
    switch (f) {
        case Family::A: return 1;
        case Family::B:
        case Family::C:
        case Family::D: return 2;
        case Family::E: return l == 8 ? 30 : 6;
        case Family::F: return 6;
        case Family::G: return 6;
    }
    throw InvalidType("unknown family");
}

/* |det| of an integer matrix, exact. */
long long abs_det(const std::vector<std::vector<int>>& m) {
    const int n = static_cast<int>(m.size());
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = rat(m[i][j]);
    Rat det(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (int r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Rat f = a[r][col] / a[col][col];
            for (int j = col; j < n; ++j) a[r][j] -= f * a[col][j];
        }
    }
    if (det < 0) det = -det;
    return to_int(det);
}

/* (alpha_{j+1}, root) as an exact rational, from the Cartan data. */
Rat inner_with_simple(const RootSystem& rs, int j, const std::vector<int>& root) {
    Rat s(0);
    for (int i = 0; i < rs.rank; ++i)
        if (root[i] != 0) s += rat(root[i]) * rat(rs.cartan[i][j]) * rs.root_norms[i] / 2;
    return s;
}

Rat root_norm(const RootSystem& rs, const std::vector<int>& root) {
    Rat s(0);
    for (int j = 0; j < rs.rank; ++j)
        if (root[j] != 0) s += rat(root[j]) * inner_with_simple(rs, j, root);
    return s;
}

}  // namespace

RootSystemId RootSystemId::parse(std::string_view s) {
    if (s.size() < 2) throw InvalidType("cannot parse root system id: " + std::string(s));
    char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (fam < 'A' || fam > 'G') throw InvalidType("unknown family letter in: " + std::string(s));
    int rank = 0;
    for (size_t i = 1; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw InvalidType("bad rank in: " + std::string(s));
        rank = rank * 10 + (s[i] - '0');
        if (rank > 1000) throw InvalidType("rank out of range in: " + std::string(s));
    }
    RootSystemId id{static_cast<Family>(fam), rank};
    if (!id.valid()) throw InvalidType("not an irreducible type: " + std::string(s));
    return id;
}

std::string RootSystemId::str() const {
    return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

bool RootSystemId::valid() const {
    switch (family) {
        case Family::A: return rank >= 1;
        case Family::B:
        case Family::C: return rank >= 2;
        case Family::D: return rank >= 3;
        case Family::E: return rank >= 6 && rank <= 8;
        case Family::F: return rank == 4;
        case Family::G: return rank == 2;
    }
    return false;
}

int RootSystem::root_index(const std::vector<int>& root) const {
    for (size_t i = 0; i < positive_roots.size(); ++i)
        if (positive_roots[i] == root) return static_cast<int>(i);
    return -1;
}

int RootSystem::height(const std::vector<int>& root) const {
    return std::accumulate(root.begin(), root.end(), 0);
}

Rat pairing(const RootSystem& rs, const std::vector<int>& root, const std::vector<Rat>& point) {
    if (root.size() != point.size() || static_cast<int>(root.size()) != rs.rank)
        throw std::invalid_argument("pairing dimension mismatch");
    Rat s(0);
    for (int i = 0; i < rs.rank; ++i)
        if (root[i] != 0) s += rat(root[i]) * point[i];
    return s;
}

long long pairing(const RootSystem& rs, const std::vector<int>& root,
                  const std::vector<long long>& point) {
    if (root.size() != point.size() || static_cast<int>(root.size()) != rs.rank)
        throw std::invalid_argument("pairing dimension mismatch");
    long long s = 0;
    for (int i = 0; i < rs.rank; ++i) s += static_cast<long long>(root[i]) * point[i];
    return s;
}

std::vector<int> simple_coroot(const RootSystem& rs, int i) {
    if (i < 1 || i > rs.rank) throw std::out_of_range("simple_coroot index out of range");
    return rs.cartan[i - 1];
}

long long cartan_pairing(const RootSystem& rs, int i, const std::vector<int>& root) {
    const std::vector<int>& coroot = (i == 0) ? rs.highest_coroot : rs.cartan[i - 1];
    long long s = 0;
    for (int j = 0; j < rs.rank; ++j) s += static_cast<long long>(root[j]) * coroot[j];
    return s;
}

std::vector<int> reflect_root(const RootSystem& rs, int i, const std::vector<int>& root) {
    if (i < 0 || i > rs.rank) throw std::out_of_range("reflection index out of range");
    const long long k = cartan_pairing(rs, i, root);
    std::vector<int> res = root;
    if (k == 0) return res;
    if (i == 0) {
        for (int j = 0; j < rs.rank; ++j) res[j] -= static_cast<int>(k) * rs.highest_root[j];
    } else {
        res[i - 1] -= static_cast<int>(k);
    }
    return res;
}

bool is_positive_root_vector(const std::vector<int>& root) {
    bool nonzero = false;
    for (int x : root) {
        if (x < 0) return false;
        if (x > 0) nonzero = true;
    }
    return nonzero;
}

RootSystem build_root_system(RootSystemId id) {
    if (!id.valid()) throw InvalidType("not an irreducible type: " + id.str());
    RootSystem rs;
    rs.id = id;
    rs.rank = id.rank;
    rs.cartan = make_cartan(id.family, id.rank);
    rs.root_norms = make_norms(id.family, id.rank);
    const int l = rs.rank;

    /* Positive roots: closure of the simple roots under the simple
     * reflections, keeping the images with nonnegative coordinates. */
    {
        std::set<std::vector<int>> seen;
        std::queue<std::vector<int>> todo;
        for (int i = 0; i < l; ++i) {
            std::vector<int> e(l, 0);
            e[i] = 1;
            seen.insert(e);
            todo.push(std::move(e));
        }
        while (!todo.empty()) {
            std::vector<int> beta = std::move(todo.front());
            todo.pop();
            for (int i = 1; i <= l; ++i) {
                long long k = 0;
                for (int j = 0; j < l; ++j) k += static_cast<long long>(beta[j]) * rs.cartan[i - 1][j];
                if (k == 0) continue;
                std::vector<int> img = beta;
                img[i - 1] -= static_cast<int>(k);
                if (is_positive_root_vector(img) && seen.insert(img).second) todo.push(std::move(img));
            }
        }
        rs.positive_roots.assign(seen.begin(), seen.end());
        std::sort(rs.positive_roots.begin(), rs.positive_roots.end(),
                  [&](const std::vector<int>& a, const std::vector<int>& b) {
                      int ha = std::accumulate(a.begin(), a.end(), 0);
                      int hb = std::accumulate(b.begin(), b.end(), 0);
                      if (ha != hb) return ha < hb;
                      return a < b;
                  });
    }

    rs.highest_root = rs.positive_roots.back();
    rs.marks = rs.highest_root;
    rs.coxeter_number = 1 + std::accumulate(rs.marks.begin(), rs.marks.end(), 0);

    /* Exponents: conjugate partition of the height distribution of the
     * positive roots. */
    {
        std::map<int, int> by_height;
        for (const auto& r : rs.positive_roots)
            by_height[std::accumulate(r.begin(), r.end(), 0)]++;
        const int max_height = by_height.rbegin()->first;
        std::vector<int> exps;
        for (int j = 1; j <= l; ++j) {
            int e = 0;  // #{k : at least j roots have height k}
            for (int k = 1; k <= max_height; ++k) {
                auto it = by_height.find(k);
                if (it != by_height.end() && it->second >= j) ++e;
            }
            if (e > 0) exps.push_back(e);
        }
        std::sort(exps.begin(), exps.end());
        rs.exponents = exps;
    }

    rs.index_of_connection = abs_det(rs.cartan);
    {
        long long w = rs.index_of_connection;
        for (int i = 2; i <= l; ++i) w *= i;
        for (int c : rs.marks) w *= c;
        rs.weyl_order = w;
    }
    rs.ehrhart_period = table_period(id.family, id.rank);
    rs.ehrhart_period_radical = table_period_radical(id.family, id.rank);

    /* Coweight coordinates of the highest coroot: Cartan integers of the
     * highest root against each simple root. */
    {
        Rat hn = root_norm(rs, rs.highest_root);
        if (hn != 2) throw std::logic_error("highest root is not long after normalization");
        rs.highest_coroot.resize(l);
        for (int j = 0; j < l; ++j) {
            Rat v = inner_with_simple(rs, j, rs.highest_root);  // (alpha_{j+1}, highest)
            rs.highest_coroot[j] = static_cast<int>(to_int(v * 2 / hn));
        }
    }

    /* Construction self-checks (cheap, always on). */
    if (static_cast<long long>(rs.positive_roots.size()) * 2 !=
        static_cast<long long>(l) * rs.coxeter_number)
        throw std::logic_error("positive root count disagrees with l*h/2 for " + id.str());
    if (static_cast<int>(rs.exponents.size()) != l)
        throw std::logic_error("exponent count mismatch for " + id.str());
    for (int i = 0; i < l; ++i)
        if (rs.exponents[i] + rs.exponents[l - 1 - i] != rs.coxeter_number)
            throw std::logic_error("exponent duality fails for " + id.str());
    if (rs.coxeter_number % rs.ehrhart_period_radical != 0)
        throw std::logic_error("period radical does not divide h for " + id.str());

    return rs;
}

WeylElement weyl_identity(const RootSystem& rs) {
    WeylElement w;
    w.images.resize(rs.rank);
    for (int i = 0; i < rs.rank; ++i) {
        w.images[i].assign(rs.rank, 0);
        w.images[i][i] = 1;
    }
    return w;
}

WeylElement weyl_apply_simple(const RootSystem& rs, const WeylElement& w, int i) {
    /* (w s_i)(alpha_j) = w(alpha_j) - C[i][j] w(alpha_i) */
    WeylElement res = w;
    for (int j = 0; j < rs.rank; ++j) {
        int cij = rs.cartan[i - 1][j];
        if (cij == 0) continue;
        for (int m = 0; m < rs.rank; ++m) res.images[j][m] -= cij * w.images[i - 1][m];
    }
    return res;
}

std::vector<int> weyl_image(const RootSystem& rs, const WeylElement& w,
                            const std::vector<int>& root) {
    std::vector<int> img(rs.rank, 0);
    for (int i = 0; i < rs.rank; ++i) {
        if (root[i] == 0) continue;
        for (int m = 0; m < rs.rank; ++m) img[m] += root[i] * w.images[i][m];
    }
    return img;
}

std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, long long cap) {
    if (cap < 1) throw std::invalid_argument("enumeration cap must be positive");
    if (rs.weyl_order > cap) throw CapExceeded(rs.weyl_order);

    std::unordered_set<std::vector<int>, VecHash> seen;
    std::vector<WeylElement> out;
    auto flatten = [&](const WeylElement& w) {
        std::vector<int> f;
        f.reserve(rs.rank * rs.rank);
        for (const auto& v : w.images) f.insert(f.end(), v.begin(), v.end());
        return f;
    };
    std::queue<WeylElement> todo;
    WeylElement e = weyl_identity(rs);
    seen.insert(flatten(e));
    out.push_back(e);
    todo.push(std::move(e));
    while (!todo.empty()) {
        WeylElement w = std::move(todo.front());
        todo.pop();
        for (int i = 1; i <= rs.rank; ++i) {
            WeylElement n = weyl_apply_simple(rs, w, i);
            if (seen.insert(flatten(n)).second) {
                if (static_cast<long long>(out.size()) >= cap) throw CapExceeded(rs.weyl_order);
                out.push_back(n);
                todo.push(std::move(n));
            }
        }
    }
    if (static_cast<long long>(out.size()) != rs.weyl_order)
        throw std::logic_error("enumerated Weyl order disagrees with the closed formula");
    return out;
}

int asc(const RootSystem& rs, const WeylElement& w) {
    int total = 0;
    /* w(alpha_0) = -w(highest root) */
    std::vector<int> img_high = weyl_image(rs, w, rs.highest_root);
    for (int& x : img_high) x = -x;
    if (is_positive_root_vector(img_high)) total += 1;  // c_0 = 1
    for (int i = 0; i < rs.rank; ++i)
        if (is_positive_root_vector(w.images[i])) total += rs.marks[i];
    return total;
}

int dsc(const RootSystem& rs, const WeylElement& w) { return rs.coxeter_number - asc(rs, w); }

std::vector<std::pair<std::string, bool>> validate(const RootSystem& rs) {
    std::vector<std::pair<std::string, bool>> checks;
    const int l = rs.rank;

    checks.emplace_back("marks sum to h-1",
                        std::accumulate(rs.marks.begin(), rs.marks.end(), 0) ==
                            rs.coxeter_number - 1);
    checks.emplace_back("positive root count is l*h/2",
                        2 * rs.num_positive_roots() == l * rs.coxeter_number);
    checks.emplace_back("index of connection is |det cartan|",
                        rs.index_of_connection == abs_det(rs.cartan));
    bool expdual = true;
    for (int i = 0; i < l; ++i)
        expdual = expdual && rs.exponents[i] + rs.exponents[l - 1 - i] == rs.coxeter_number;
    checks.emplace_back("exponent duality e_i + e_{l-i+1} = h", expdual);
    checks.emplace_back("rad(period) divides h",
                        rs.coxeter_number % rs.ehrhart_period_radical == 0);

    /* Simple reflections permute the root set; reflection through the
     * highest root does too. */
    bool closed = true;
    std::set<std::vector<int>> all;
    for (const auto& r : rs.positive_roots) {
        all.insert(r);
        std::vector<int> neg(r);
        for (int& x : neg) x = -x;
        all.insert(neg);
    }
    for (int i = 0; i <= l && closed; ++i)
        for (const auto& r : all) {
            if (!all.count(reflect_root(rs, i, r))) {
                closed = false;
                break;
            }
        }
    checks.emplace_back("reflections preserve the root set", closed);

    bool involutive = true;
    for (int i = 0; i <= l && involutive; ++i)
        for (const auto& r : all)
            if (reflect_root(rs, i, reflect_root(rs, i, r)) != r) {
                involutive = false;
                break;
            }
    checks.emplace_back("reflections are involutions", involutive);

    /* det of the coroot matrix = +-f */
    {
        long long det = abs_det(rs.cartan);
        checks.emplace_back("coroot basis determinant is +-f", det == rs.index_of_connection);
    }
    return checks;
}

}  // namespace weylcq
