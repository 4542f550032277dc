#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "weylcq/rational.hpp"

namespace weylcq {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct RootSystemId {
    Family family;
    int rank;

    /* "A3", "b2", "E8", ... (family letter case-insensitive). */
    static RootSystemId parse(std::string_view s);
    std::string str() const;
    bool valid() const;
};

/* Linear action of a Weyl group element, recorded as the images of the
 * simple roots in simple-root coordinates. */
struct WeylElement {
    std::vector<std::vector<int>> images;  // images[i-1] = w(alpha_i)
    bool operator==(const WeylElement& o) const { return images == o.images; }
};

/* Immutable data of an irreducible root system.  Roots are integer vectors
 * of simple-root coordinates; points downstream live in coweight
 * coordinates (the basis dual to the simple roots).  Long roots are
 * normalized to squared length 2. */
struct RootSystem {
    RootSystemId id;
    int rank = 0;
    std::vector<std::vector<int>> cartan;  // cartan[i][j] = <alpha_{j+1}, alpha_{i+1}^vee>
    std::vector<Rat> root_norms;           // squared lengths of the simple roots
    std::vector<std::vector<int>> positive_roots;  // sorted by (height, lex)
    std::vector<int> highest_root;
    std::vector<int> marks;  // c_1..c_l; c_0 = 1 is implicit
    int coxeter_number = 0;
    std::vector<int> exponents;  // ascending
    long long index_of_connection = 0;
    long long weyl_order = 0;  // f * l! * c_1 * ... * c_l
    int ehrhart_period = 0;
    int ehrhart_period_radical = 0;
    std::vector<int> highest_coroot;  // coweight coordinates of highest_root^vee

    int num_positive_roots() const { return static_cast<int>(positive_roots.size()); }
    /* index of a root vector in positive_roots, or -1 */
    int root_index(const std::vector<int>& root) const;
    int height(const std::vector<int>& root) const;
    std::string str() const { return id.str(); }
};

RootSystem build_root_system(RootSystemId id);
inline RootSystem build_root_system(std::string_view name) {
    return build_root_system(RootSystemId::parse(name));
}

/* <root, point> where the root is in simple-root coordinates and the point
 * in coweight coordinates; this is just the integer-weighted coordinate sum. */
Rat pairing(const RootSystem& rs, const std::vector<int>& root, const std::vector<Rat>& point);
long long pairing(const RootSystem& rs, const std::vector<int>& root,
                  const std::vector<long long>& point);

/* alpha_i^vee in coweight coordinates (i in 1..rank): row i of the Cartan matrix. */
std::vector<int> simple_coroot(const RootSystem& rs, int i);

/* Cartan integer <root, gamma^vee> for gamma = alpha_i (i >= 1) or the
 * highest root (i = 0). */
long long cartan_pairing(const RootSystem& rs, int i, const std::vector<int>& root);

/* Reflection s_{alpha_i} (or s_{highest root} for i = 0) acting on a root. */
std::vector<int> reflect_root(const RootSystem& rs, int i, const std::vector<int>& root);

bool is_positive_root_vector(const std::vector<int>& root);

/* Breadth-first closure of the identity under right multiplication by the
 * simple reflections; throws CapExceeded when the formula order exceeds cap. */
std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, long long cap);

WeylElement weyl_identity(const RootSystem& rs);
WeylElement weyl_apply_simple(const RootSystem& rs, const WeylElement& w, int i);  // w * s_i
std::vector<int> weyl_image(const RootSystem& rs, const WeylElement& w,
                            const std::vector<int>& root);

int asc(const RootSystem& rs, const WeylElement& w);
int dsc(const RootSystem& rs, const WeylElement& w);

/* Named structural self-checks; every pair should come back true. */
std::vector<std::pair<std::string, bool>> validate(const RootSystem& rs);

}  // namespace weylcq
