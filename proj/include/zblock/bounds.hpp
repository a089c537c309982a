#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace zblock {

/// rho(m, n) = q(p^n - 1) + p^r where m = qn + r, 0 <= r <= n-1; rho(m, 0) = 1.
int64_t rho(int64_t m, int64_t n, int64_t p);

struct RhoPropertyReport {
    int64_t cases = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Exhaustive monotonicity / bound / equality-trichotomy check of rho over
/// 0 <= m,n,k,l <= max, for each prime. Any violation is reported.
RhoPropertyReport rho_property_suite(int max_m, int max_n, const std::vector<int64_t>& primes);

struct AbelianLL {
    int64_t value = 1;         // sum p^{e_i} - r + 1
    bool rho_equality = true;  // value == rho(d, e), i.e. type (e, ..., e, f)
};

/// Loewy length of FD for D abelian of the given invariant type (largest
/// exponent first). The empty type (trivial D) gives 1.
AbelianLL ll_abelian_formula(const std::vector<int>& type, int64_t p);

/// One inequality instance. The right-hand side is a rational rhs_num /
/// rhs_den (den = 1 except for the general KOS bound); comparisons are exact.
struct BoundVerdict {
    std::string check;
    bool applicable = false;
    std::string hypothesis_note;
    int64_t lhs = 0;
    int64_t rhs_num = 0;
    int64_t rhs_den = 1;
    bool strict = false;    // paper claims < rather than <=
    bool satisfied = true;  // vacuously true when inapplicable
    enum class Kind { theorem, conjecture } classification = Kind::theorem;

    bool failed() const { return applicable && !satisfied; }
};

BoundVerdict make_verdict(std::string check, bool applicable, int64_t lhs, int64_t rhs_num,
                          int64_t rhs_den, bool strict, BoundVerdict::Kind kind,
                          std::string note = "");

/// The numeric facts of one block that the pure bound checks consume.
struct BlockFacts {
    int64_t p = 2;
    int d = 0;
    int e = 0;
    int ll_zb = 1;
    int ll_zb_mod_rb = 0;
    int dim_zb = 1;
    bool d_abelian = true;
    bool d_cyclic = true;
    bool d_metacyclic = true;
    std::optional<bool> d_is_w;
    bool d_is_es_plus = false;
    std::vector<int> d_abelian_type;
    bool group_is_defect_group = false;  // nilpotent probe G = D
    bool assume_controlled = false;
    int kulshammer_exponent = 0;
};

/// Every applicability-aware bound of the paper on one block, plus the
/// dimension bound filed as a conjecture-class check. Inapplicable checks
/// are emitted with applicable = false rather than omitted.
std::vector<BoundVerdict> check_block(const BlockFacts& f);

int64_t ipow_checked(int64_t base, int64_t exp);

}  // namespace zblock
