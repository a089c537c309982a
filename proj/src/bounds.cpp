#include "zblock/bounds.hpp"

#include <numeric>

#include "zblock/field.hpp"

namespace zblock {

int64_t ipow_checked(int64_t base, int64_t exp) {
    int64_t r = 1;
    for (int64_t i = 0; i < exp; ++i) {
        if (r > (int64_t{1} << 62) / base) throw CapError("integer power overflow");
        r *= base;
    }
    return r;
}

int64_t rho(int64_t m, int64_t n, int64_t p) {
    if (m < 0 || n < 0) throw InputError("rho: m, n must be non-negative");
    if (!is_prime(p)) throw InputError("rho: p must be prime");
    if (n == 0) return 1;
    int64_t q = m / n, r = m % n;
    return q * (ipow_checked(p, n) - 1) + ipow_checked(p, r);
}

RhoPropertyReport rho_property_suite(int max_m, int max_n, const std::vector<int64_t>& primes) {
    RhoPropertyReport rep;
    auto fail = [&rep](const std::string& s) { rep.violations.push_back(s); };
    for (int64_t p : primes) {
        for (int m = 0; m <= max_m; ++m)
            for (int n = 0; n <= max_n; ++n) {
                int64_t v = rho(m, n, p);
                ++rep.cases;
                if (v < 1 || v > ipow_checked(p, m))
                    fail("bound: rho(" + std::to_string(m) + "," + std::to_string(n) +
                         ")@p=" + std::to_string(p) + " outside [1,p^m]");
                if (m <= n && v != ipow_checked(p, m))
                    fail("rho(m,n) != p^m for m <= n at m=" + std::to_string(m) +
                         ",n=" + std::to_string(n) + ",p=" + std::to_string(p));
            }
        for (int m = 0; m <= max_m; ++m)
            for (int n = 0; n <= max_n; ++n)
                for (int k = m; k <= max_m; ++k)
                    for (int l = n; l <= max_n; ++l) {
                        ++rep.cases;
                        int64_t a = rho(m, n, p), b = rho(k, l, p);
                        if (a > b)
                            fail("monotonicity fails at (" + std::to_string(m) + "," +
                                 std::to_string(n) + ") <= (" + std::to_string(k) + "," +
                                 std::to_string(l) + "), p=" + std::to_string(p));
                        bool eq = (a == b);
                        bool case_a = (l == 0);
                        bool case_b = (n == l && n < m && m == k);
                        bool case_c = (m == k && m <= n);
                        if (eq != (case_a || case_b || case_c))
                            fail("equality trichotomy fails at (" + std::to_string(m) + "," +
                                 std::to_string(n) + ") vs (" + std::to_string(k) + "," +
                                 std::to_string(l) + "), p=" + std::to_string(p));
                    }
    }
    return rep;
}

AbelianLL ll_abelian_formula(const std::vector<int>& type, int64_t p) {
    AbelianLL out;
    if (type.empty()) return out;  // trivial group: LL(F) = 1 = rho(0, 0)
    for (size_t i = 1; i < type.size(); ++i)
        if (type[i] > type[i - 1]) throw InputError("ll_abelian_formula: type not sorted");
    int64_t sum = 0;
    for (int e : type) sum += ipow_checked(p, e);
    out.value = sum - static_cast<int64_t>(type.size()) + 1;
    // equality with rho(d, e) holds exactly when all parts but the last
    // equal the first one: type (e, ..., e, f)
    out.rho_equality = true;
    for (size_t i = 1; i + 1 < type.size(); ++i)
        if (type[i] != type[0]) out.rho_equality = false;
    return out;
}

BoundVerdict make_verdict(std::string check, bool applicable, int64_t lhs, int64_t rhs_num,
                          int64_t rhs_den, bool strict, BoundVerdict::Kind kind,
                          std::string note) {
    BoundVerdict v;
    v.check = std::move(check);
    v.applicable = applicable;
    v.hypothesis_note = std::move(note);
    v.lhs = lhs;
    int64_t g = std::gcd(rhs_num, rhs_den);
    if (g > 1) {
        rhs_num /= g;
        rhs_den /= g;
    }
    v.rhs_num = rhs_num;
    v.rhs_den = rhs_den;
    v.strict = strict;
    v.classification = kind;
    if (applicable)
        v.satisfied = strict ? (lhs * rhs_den < rhs_num) : (lhs * rhs_den <= rhs_num);
    else
        v.satisfied = true;
    return v;
}

std::vector<BoundVerdict> check_block(const BlockFacts& f) {
    using Kind = BoundVerdict::Kind;
    std::vector<BoundVerdict> out;
    const int64_t p = f.p;
    const int64_t pd = ipow_checked(p, f.d);
    const int64_t pe = ipow_checked(p, f.e);
    const int64_t ll = f.ll_zb;

    out.push_back(make_verdict("okuyama_ll_le_pd", true, ll, pd, 1, false, Kind::theorem));

    out.push_back(make_verdict("kulshammer_radical_power", true, f.kulshammer_exponent, f.e, 1,
                               false, Kind::theorem,
                               "z^{p^e} = 0 for all z in J(ZB); lhs is the largest exponent "
                               "needed on the radical basis"));

    out.push_back(make_verdict("ks_thm_abelian_upper", f.d_abelian, ll, rho(f.d, f.e, p), 1,
                               false, Kind::theorem, "D abelian"));

    // equality classification, exercised on nilpotent probes (G = D, so B is
    // nilpotent with normal defect group): LL = rho(d, e) exactly for types
    // (e, ..., e, f); strict otherwise
    if (f.d_abelian && f.group_is_defect_group) {
        AbelianLL af = ll_abelian_formula(f.d_abelian_type, p);
        out.push_back(make_verdict("ks_thm_equality_case_lower", af.rho_equality,
                                   rho(f.d, f.e, p), ll, 1, false, Kind::theorem,
                                   "nilpotent probe, D of type (e,...,e,f)"));
        out.push_back(make_verdict("ks_thm_equality_case_strict", !af.rho_equality, ll,
                                   rho(f.d, f.e, p), 1, true, Kind::theorem,
                                   "nilpotent probe, D not of type (e,...,e,f)"));
    } else {
        out.push_back(make_verdict("ks_thm_equality_case_lower", false, 0, 0, 1, false,
                                   Kind::theorem, "only checked on nilpotent probes"));
        out.push_back(make_verdict("ks_thm_equality_case_strict", false, 0, 0, 1, true,
                                   Kind::theorem, "only checked on nilpotent probes"));
    }

    out.push_back(make_verdict("otokita_abelian_lower", f.d_abelian,
                               (pe + p - 2) / (p - 1), ll, 1, false, Kind::theorem,
                               "D abelian; lhs is the lower bound, rhs = LL(ZB)"));

    {
        // KOS general: LL <= (d/e + 1)(d/2 + 1/(p-1))(p^e - 1), exact rationals
        bool app = f.d >= 1;
        int64_t num = 0, den = 1;
        if (app) {
            num = static_cast<int64_t>(f.d + f.e) * (f.d * (p - 1) + 2) * (pe - 1);
            den = 2 * static_cast<int64_t>(f.e) * (p - 1);
        }
        out.push_back(
            make_verdict("kos_general_upper", app, ll, num, den, false, Kind::theorem, "d >= 1"));
    }

    {
        bool app = !f.d_abelian && f.e == f.d - 1;
        int64_t rhs = app ? (p == 2 ? ipow_checked(2, f.e - 1) + 1 : ipow_checked(p, f.e - 1)) : 0;
        out.push_back(make_verdict("kos_cyclic_maximal_upper", app, ll, rhs, 1, false,
                                   Kind::theorem, "D non-abelian with cyclic maximal subgroup"));
    }

    out.push_back(make_verdict("thm5_metacyclic_strict", !f.d_abelian && f.d_metacyclic, ll,
                               rho(f.d, f.e, p), 1, true, Kind::theorem,
                               "D non-abelian metacyclic"));

    {
        bool excluded = f.d_is_es_plus && p >= 5;
        bool app = !f.d_abelian && !excluded;
        out.push_back(make_verdict("thm8_general_strict", app, ll,
                                   app ? 3 * ipow_checked(p, f.d - 2) : 0, 1, true,
                                   Kind::theorem,
                                   excluded ? "skipped: D = p^{1+2}_+ with p >= 5"
                                            : "D non-abelian"));
    }

    {
        bool known = f.d_is_w.has_value();
        bool app = known && *f.d_is_w;
        int64_t rhs = 0;
        if (app) {
            if (f.d == 3)
                rhs = 4 * p - 1;
            else if (f.d == 4)
                rhs = 2 * p * p + 2 * p;
            else
                rhs = ipow_checked(p, f.d - 2) + 2 * p * (p - 1) + 1;
        }
        out.push_back(make_verdict("thm8_w_family_upper", app, ll, rhs, 1, false, Kind::theorem,
                                   known ? "D isomorphic to W(d)"
                                         : "isomorphism test capped (|D| > 512)"));
    }

    {
        bool known_not_w = f.d_is_w.has_value() && !*f.d_is_w;
        bool app = f.assume_controlled && !f.d_abelian && known_not_w;
        int64_t rhs =
            app ? ipow_checked(p, f.d - 2) + 3 * ipow_checked(p, f.d - 3) + p - 1 : 0;
        out.push_back(make_verdict("thm8_controlled_upper", app, ll, rhs, 1, false,
                                   Kind::theorem,
                                   "hypothesis user-asserted: B controlled, D not W(d)"));
    }

    {
        bool app = f.assume_controlled && !f.d_abelian && f.e <= f.d - 3;
        out.push_back(make_verdict("thm9_controlled_strict", app, ll,
                                   app ? 6 * ipow_checked(p, f.d - 3) : 0, 1, true,
                                   Kind::theorem,
                                   "hypothesis user-asserted: B controlled, e <= d-3"));
    }

    {
        bool app = !f.d_abelian;
        int64_t de = f.d - f.e;
        int64_t rhs = app ? de * (de + 1) / 2 * pe : 0;
        out.push_back(make_verdict("conjecture_nonabelian_strict", app, ll, rhs, 1, true,
                                   Kind::conjecture, "D non-abelian"));
    }

    out.push_back(make_verdict("brauer_problem20_dim_bound", true, f.dim_zb, pd, 1, false,
                               Kind::conjecture, "k(B) <= p^d, Brauer Problem 20"));

    out.push_back(make_verdict("ll_le_ll_mod_reynolds_plus_one", f.d >= 1, ll,
                               static_cast<int64_t>(f.ll_zb_mod_rb) + 1, 1, false,
                               Kind::theorem, "skipped for defect-0 blocks"));

    return out;
}

}  // namespace zblock
