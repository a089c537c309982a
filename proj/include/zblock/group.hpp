#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace zblock {

constexpr int kMaxGroupOrder = 2000;
constexpr int kMaxIsoOrder = 512;

/// A concrete finite group on indices 0..N-1, identity at index 0, with a
/// full multiplication table. Constructors decode a backend law (normal-form
/// tuples or permutations) once; afterwards everything is index arithmetic.
/// Immutable after construction.
class FiniteGroup {
public:
    FiniteGroup() = default;

    int size() const { return n_; }
    int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int conj(int g, int x) const { return mul(mul(inv(x), g), x); }  // g^x
    int pow(int g, int64_t e) const;
    int order(int g) const { return order_[g]; }
    int exponent() const { return exponent_; }
    bool abelian() const { return abelian_; }
    const std::string& label(int g) const { return labels_[g]; }
    const std::string& descriptor() const { return desc_; }
    /// A small generating set (greedy, deterministic).
    const std::vector<int>& generators() const { return gens_; }

    /// Builds from an index-level multiplication law. The law must already
    /// place the identity at index 0.
    static FiniteGroup from_law(int n, const std::function<int(int, int)>& law,
                                std::vector<std::string> labels, std::string desc);

private:
    int n_ = 0;
    std::vector<uint16_t> mul_;
    std::vector<uint16_t> inv_;
    std::vector<int> order_;
    int exponent_ = 1;
    bool abelian_ = true;
    std::vector<std::string> labels_;
    std::string desc_;
    std::vector<int> gens_;
};

struct ConjClass {
    int rep = 0;                // minimal member index
    std::vector<int> members;   // sorted
    int size() const { return static_cast<int>(members.size()); }
};

/// Subgroup of an ambient group: a sorted element index list.
struct Subgroup {
    std::vector<int> elems;  // sorted, contains 0

    int order() const { return static_cast<int>(elems.size()); }
    bool contains(int g) const;
    bool operator==(const Subgroup& o) const { return elems == o.elems; }
};

/// Classes in a deterministic order: identity class first, then by minimal
/// member index.
std::vector<ConjClass> conj_classes(const FiniteGroup& G);

Subgroup centralizer(const FiniteGroup& G, int g);
Subgroup centralizer_of_set(const FiniteGroup& G, const std::vector<int>& S);
Subgroup center(const FiniteGroup& G);
Subgroup trivial_subgroup();
Subgroup full_subgroup(const FiniteGroup& G);
Subgroup closure(const FiniteGroup& G, std::vector<int> seed);
Subgroup normalizer(const FiniteGroup& G, const Subgroup& S);
bool is_subgroup_abelian(const FiniteGroup& G, const Subgroup& S);
bool is_normal(const FiniteGroup& G, const Subgroup& N);
Subgroup derived_subgroup(const FiniteGroup& G);
Subgroup conjugate_subgroup(const FiniteGroup& G, const Subgroup& S, int g);

/// Sylow p-subgroup, grown from a maximal-order p-element through normalizer
/// extensions. Returns the trivial subgroup when p does not divide |G|.
Subgroup sylow_p(const FiniteGroup& G, int64_t p);

/// g = g_p * g_p' = g_p' * g_p with o(g_p) a p-power and o(g_p') prime to p.
std::pair<int, int> p_decomposition(const FiniteGroup& G, int g, int64_t p);

struct QuotientGroup {
    FiniteGroup group;
    std::vector<int> proj;  // ambient element -> quotient index
};
/// Throws InputError when N is not normal.
QuotientGroup quotient_group(const FiniteGroup& G, const Subgroup& N);

struct SubgroupGroup {
    FiniteGroup group;
    std::vector<int> to_parent;   // subgroup index -> ambient index
    std::vector<int> from_parent; // ambient index -> subgroup index or -1
};
SubgroupGroup subgroup_as_group(const FiniteGroup& G, const Subgroup& S);

/// Invariant type (e1 >= e2 >= ... >= er) of an abelian p-group, found by
/// repeatedly splitting off a complement of a maximal-order element.
std::vector<int> abelian_type(const FiniteGroup& G, const Subgroup& A, int64_t p);

/// e with p^e = exponent of the p-group P. Throws InputError otherwise.
int exponent_log(const FiniteGroup& G, const Subgroup& P, int64_t p);

bool is_metacyclic(const FiniteGroup& G, const Subgroup& P);

/// Isomorphism test for groups of order <= 512: invariant fingerprint, then
/// exhaustive generator-image search.
bool is_isomorphic(const FiniteGroup& P, const FiniteGroup& Q);

/// True iff some G-conjugate of Q is contained in P.
bool conjugate_subgroup_leq(const FiniteGroup& G, const Subgroup& Q, const Subgroup& P);
/// True iff some G-conjugate of Q equals P.
bool conjugate_subgroup_eq(const FiniteGroup& G, const Subgroup& Q, const Subgroup& P);

/// All subgroups of S (ambient indices), BFS over single-element extensions.
/// Intended for small S (centers of defect groups and the like).
std::vector<Subgroup> all_subgroups(const FiniteGroup& G, const Subgroup& S);

int64_t p_part(int64_t n, int64_t p);
int vp(int64_t n, int64_t p);  // p-adic valuation

// ---------------------------------------------------------------------------
// constructors / descriptor mini-language

FiniteGroup make_cyclic(int n);
FiniteGroup make_abelian(const std::vector<int>& invariants);
FiniteGroup make_dihedral(int order);          // order = 2n, n >= 3
FiniteGroup make_quaternion(int order);        // generalized quaternion, 2^n >= 8
FiniteGroup make_symmetric(int n);             // n <= 6
FiniteGroup make_alternating(int n);           // n <= 6
FiniteGroup make_extraspecial_plus(int64_t p); // order p^3, exponent p, p odd
FiniteGroup make_w_group(int d, int64_t p);    // the W(d) family, d >= 3
FiniteGroup make_semidirect_cyclic(int n, int m, int64_t e);  // C_n : C_m, x -> x^e
FiniteGroup make_direct_product(const FiniteGroup& A, const FiniteGroup& B);
FiniteGroup make_perm_group(const std::vector<std::vector<std::vector<int>>>& gen_cycles,
                            const std::string& desc);

/// Parses the descriptor mini-language: C12, Ab[4,2,2], D8, Q16, S4, A5,
/// ES+(3), W(4,3), C7:C3(2), X*Y, perm:[(1 2),(1 2 3 4)].
FiniteGroup group_build(const std::string& spec);

}  // namespace zblock
