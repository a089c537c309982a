#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zblock/comalg.hpp"
#include "zblock/field.hpp"
#include "zblock/group.hpp"

namespace zblock {

constexpr int kMaxFieldDegree = 16;
constexpr int kMaxGroupAlgebraOrder = 243;

/// Conjugacy class of (G, p) with the block-theoretic attributes attached.
struct ClassInfo {
    int rep = 0;
    std::vector<int> members;
    int rep_order = 1;
    int defect = 0;        // v_p(|C_G(rep)|)
    bool p_regular = true; // o(rep) prime to p
    int size() const { return static_cast<int>(members.size()); }
};

/// Prime-independent class data of a group: classes in canonical order and
/// integer class-multiplication counts (reduced mod p later, reusable
/// across primes).
struct ClassStructure {
    std::vector<ConjClass> classes;
    std::vector<int> class_of;  // element -> class index
    /// counts[i*n+j]: list of (k, #{x in C_i : x^{-1} z_k in C_j}).
    std::vector<std::vector<std::pair<int, int64_t>>> counts;
};
ClassStructure class_structure(const FiniteGroup& G);

/// Z(FG) on the class-sum basis over the splitting field GF(p^k), where
/// k is the multiplicative order of p modulo the p'-part of exp(G).
class GroupAlgebraCenter {
public:
    std::shared_ptr<const FiniteGroup> G;
    std::shared_ptr<const FieldCtx> F;
    CommAlgebra Z;
    std::vector<ClassInfo> classes;
    std::vector<int> class_of;
    int64_t p = 0;
    int64_t splitting_modulus = 1;  // p'-part of exp(G)

    int dim() const { return static_cast<int>(classes.size()); }
};

/// Throws CapError when the splitting-field degree would exceed the cap.
/// A prebuilt ClassStructure and a shared FieldCtx may be supplied to reuse
/// work across primes / subgroup algebras.
GroupAlgebraCenter center_build(std::shared_ptr<const FiniteGroup> G, int64_t p,
                                uint64_t seed = 0, int degree_cap = kMaxFieldDegree,
                                const ClassStructure* cs = nullptr,
                                std::shared_ptr<const FieldCtx> shared_field = nullptr);

/// One block of FG: the local piece of Z(FG) plus the defect data.
struct Block {
    int index = 0;
    LocalPiece piece;               // idempotent + lambda, class-sum coordinates
    IdealBasis radical;             // J(ZB)
    int dim_zb = 0;
    LoewyResult loewy;              // of J(ZB); loewy.length = LL(ZB)
    int defect = 0;                 // d
    int defect_class = -1;
    Subgroup defect_group;          // D, ambient indices
    int e_log = 0;                  // p^e = exponent of D
    bool principal = false;
    int ll_zb_mod_rb = 0;           // LL(ZB/RB); 0 when the quotient is zero
    RowBasis reynolds;              // RB
    int kulshammer_exponent = 0;    // max_z min{t : z^{p^t} = 0} over J(ZB) basis
    // defect-group structure
    bool d_abelian = false;
    bool d_cyclic = false;
    bool d_metacyclic = false;
    std::vector<int> d_abelian_type;      // when abelian
    std::optional<bool> d_is_w;           // nullopt when past the iso cap
    bool d_is_es_plus = false;
    int d_center_order = 1;

    int ll_zb() const { return loewy.length; }
};

struct SubAnalysis;

/// Block pipeline state for one (G, p), with caches for centralizer and
/// per-class defect-group computations.
struct CenterAnalysis {
    GroupAlgebraCenter Z;
    std::vector<Block> blocks;
    std::map<std::vector<int>, std::shared_ptr<SubAnalysis>> sub_cache;
    std::vector<std::optional<Subgroup>> class_dg;
    uint64_t seed = 0;
    int degree_cap = kMaxFieldDegree;

    const Block& principal() const;
};

/// Full decomposition plus per-block defect machinery.
CenterAnalysis analyze_center(std::shared_ptr<const FiniteGroup> G, int64_t p,
                              uint64_t seed = 0, int degree_cap = kMaxFieldDegree,
                              const ClassStructure* cs = nullptr,
                              std::shared_ptr<const FieldCtx> shared_field = nullptr);

/// Centralizer-algebra analysis of a subgroup, sharing the ambient field,
/// with the index maps back into the parent. Cached inside `an` by element
/// set.
struct SubAnalysis {
    SubgroupGroup sg;
    CenterAnalysis an;
};
std::shared_ptr<SubAnalysis> analyze_subgroup(CenterAnalysis& an, const Subgroup& H);

// ---------------------------------------------------------------------------
// Brauer machinery

/// Coefficient restriction Z(FG) -> Z(F C_G(P)); z given and returned in
/// class-sum coordinates. ZH must be the center of the full centralizer of P.
std::vector<int64_t> brauer_image(const GroupAlgebraCenter& ZG, const GroupAlgebraCenter& ZH,
                                  const SubgroupGroup& sg, const int64_t* z);

/// Index of the block of G induced from block `b` of the subgroup algebra
/// (lambda_{b^G}(C+) = lambda_b((C meet H)+)), or nullopt when that map is
/// not the central character of any block.
std::optional<int> induced_block(const CenterAnalysis& an, const CenterAnalysis& sub,
                                 const SubgroupGroup& sg, const Block& b);

/// Subsection (u, b) attached to a block: representative normalized into D
/// with the defect group of b equal to C_D(u) when the search succeeds.
struct Subsection {
    int u = 0;        // ambient element index
    int u_class = 0;  // ambient class index
    int u_order = 1;  // p^n
    bool major = false;
    bool normalized = true;
    int b_defect = 0;
    int ll_zb = 1;
    int ll_zb_mod_rb = 0;
    int ll_zbbar = 1;  // dominated block of C_G(u)/<u>
    bool induced_ok = true;
};

std::vector<Subsection> subsections(CenterAnalysis& an, const Block& B);

/// LL(Z b_bar) for the block of C/<u> dominated by b (b a block of C, u
/// central in C). Exposed for direct testing; subsections() uses it.
struct DominatedResult {
    int ll_zbbar = 1;
    int defect = 0;
};
DominatedResult dominated_block(CenterAnalysis& centralizer_an, const Block& b, int u_local);

/// Reynolds ideal RB = span{S+ eps} over p'-section sums S+, and LL(ZB/RB).
RowBasis reynolds_ideal(const GroupAlgebraCenter& Z, const Block& B);
int ll_center_mod_reynolds(const GroupAlgebraCenter& Z, const Block& B, const RowBasis& rb);

/// Z_{<=P}(B) and Z_{<P}(B): class sums whose defect group embeds into (a
/// proper subgroup of) P, cut by the block idempotent. The strict version
/// uses that a class lies in some Z_{<=Q}, Q < P, exactly when a conjugate
/// of its defect group is a proper subgroup of P.
RowBasis z_leq_ideal(CenterAnalysis& an, const Block& B, const Subgroup& P);
RowBasis z_lt_ideal(CenterAnalysis& an, const Block& B, const Subgroup& P);

/// J^t of the block radical (t >= 0; t = 0 gives the piece basis).
RowBasis radical_power(const GroupAlgebraCenter& Z, const Block& B, int t);

/// Loewy length of the full group algebra FD of a p-group (augmentation
/// ideal powers over GF(p)); |D| <= 243.
LoewyResult ll_group_algebra_pgroup(const FiniteGroup& D, int64_t p);

/// Acceptance-style machine checks on one analyzed center; returns failure
/// descriptions (empty = all good).
std::vector<std::string> verify_center_invariants(CenterAnalysis& an);

}  // namespace zblock
