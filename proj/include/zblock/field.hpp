#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace zblock {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad input to a constructor or parser.
class InputError : public Error {
public:
    using Error::Error;
};

/// A size/order cap was exceeded (group order, field degree, ...).
class CapError : public Error {
public:
    using Error::Error;
};

/// The working field turned out not to split a commutative algebra.
/// The field degree is chosen so that this never fires; firing means a bug
/// upstream, not a user error.
class SplitFieldError : public Error {
public:
    using Error::Error;
};

/// Field element of GF(p^k): k coefficients of the polynomial residue,
/// each in [0, p).
using Fel = std::vector<int64_t>;

/// Arithmetic context for GF(p^k).
///
/// The modulus is the lexicographically least monic irreducible of degree k
/// over the prime field (coefficient vectors compared low-degree-first), so
/// a (p, k) pair always denotes the same concrete field. All operations are
/// pure; a constructed context is immutable and safe to share across threads.
///
/// Element data is handled as raw spans of k int64 limbs so matrices can
/// store rows contiguously; Fel is the convenience owning form.
class FieldCtx {
public:
    FieldCtx() = default;

    int64_t p() const { return p_; }
    int k() const { return k_; }
    /// Monic modulus, k+1 prime-field coefficients, constant term first.
    const std::vector<int64_t>& modulus() const { return modulus_; }
    uint64_t seed() const { return seed_; }

    // ---- scalar (prime field) helpers ----
    int64_t snorm(int64_t a) const {
        a %= p_;
        return a < 0 ? a + p_ : a;
    }
    int64_t sadd(int64_t a, int64_t b) const { return (a + b) % p_; }
    int64_t ssub(int64_t a, int64_t b) const { return snorm(a - b); }
    int64_t smul(int64_t a, int64_t b) const { return (a * b) % p_; }
    int64_t sinv(int64_t a) const;
    int64_t spow(int64_t a, int64_t e) const;

    // ---- element ops on k-limb spans ----
    void set_zero(int64_t* a) const;
    void set_one(int64_t* a) const;
    void set_int(int64_t* a, int64_t v) const;
    bool is_zero(const int64_t* a) const;
    bool is_one(const int64_t* a) const;
    bool eq(const int64_t* a, const int64_t* b) const;
    void add(int64_t* out, const int64_t* a, const int64_t* b) const;
    void sub(int64_t* out, const int64_t* a, const int64_t* b) const;
    void add_inplace(int64_t* a, const int64_t* b) const;
    void sub_inplace(int64_t* a, const int64_t* b) const;
    void neg(int64_t* out, const int64_t* a) const;
    void mul(int64_t* out, const int64_t* a, const int64_t* b) const;
    /// acc += a*b
    void mul_add(int64_t* acc, const int64_t* a, const int64_t* b) const;
    void inv(int64_t* out, const int64_t* a) const;
    void pow(int64_t* out, const int64_t* a, int64_t e) const;
    /// x -> x^p, applied t times (t may be 0).
    void frob(int64_t* out, const int64_t* a, int64_t t = 1) const;
    /// Inverse of t-fold Frobenius (uses x^{p^k} = x).
    void frob_inv(int64_t* out, const int64_t* a, int64_t t = 1) const;

    // ---- Fel convenience wrappers ----
    Fel zero() const { return Fel(k_, 0); }
    Fel one() const {
        Fel r(k_, 0);
        r[0] = 1 % p_;
        return r;
    }
    Fel from_int(int64_t v) const {
        Fel r(k_, 0);
        r[0] = snorm(v);
        return r;
    }
    Fel add(const Fel& a, const Fel& b) const {
        Fel r(k_);
        add(r.data(), a.data(), b.data());
        return r;
    }
    Fel sub(const Fel& a, const Fel& b) const {
        Fel r(k_);
        sub(r.data(), a.data(), b.data());
        return r;
    }
    Fel mul(const Fel& a, const Fel& b) const {
        Fel r(k_);
        mul(r.data(), a.data(), b.data());
        return r;
    }
    Fel inv(const Fel& a) const {
        Fel r(k_);
        inv(r.data(), a.data());
        return r;
    }
    Fel pow(const Fel& a, int64_t e) const {
        Fel r(k_);
        pow(r.data(), a.data(), e);
        return r;
    }
    bool is_zero(const Fel& a) const { return is_zero(a.data()); }
    std::string to_string(const int64_t* a) const;
    std::string to_string(const Fel& a) const { return to_string(a.data()); }

    friend FieldCtx field_make(int64_t p, int k, uint64_t seed);

private:
    int64_t p_ = 0;
    int k_ = 0;
    std::vector<int64_t> modulus_;
    uint64_t seed_ = 0;
};

/// Builds GF(p^k), 1 <= k <= 16, with the deterministic least modulus.
/// Throws InputError for non-prime p, CapError for k out of range.
FieldCtx field_make(int64_t p, int k, uint64_t seed = 0);

/// a^p (the Frobenius endomorphism; an automorphism of GF(p^k)).
Fel frobenius(const FieldCtx& F, const Fel& a);

bool is_prime(int64_t n);

// ---------------------------------------------------------------------------
// Univariate polynomials over a FieldCtx.

/// Dense polynomial, constant coefficient first, no leading zeros
/// (the zero polynomial has an empty coefficient list).
struct Poly {
    const FieldCtx* F = nullptr;
    std::vector<int64_t> c;  // (deg+1)*k limbs

    int deg() const { return F ? static_cast<int>(c.size()) / F->k() - 1 : -1; }
    bool zero() const { return c.empty(); }
    const int64_t* coef(int i) const { return c.data() + static_cast<size_t>(i) * F->k(); }
    int64_t* coef(int i) { return c.data() + static_cast<size_t>(i) * F->k(); }
};

Poly poly_zero(const FieldCtx& F);
Poly poly_one(const FieldCtx& F);
Poly poly_x(const FieldCtx& F);
/// From field-element coefficients, constant first.
Poly poly_from(const FieldCtx& F, const std::vector<Fel>& coeffs);
/// From prime-field integer coefficients, constant first.
Poly poly_from_ints(const FieldCtx& F, const std::vector<int64_t>& coeffs);
void poly_trim(Poly& f);
bool poly_eq(const Poly& a, const Poly& b);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const int64_t* s);
/// f = q*g + r with deg r < deg g. g must be nonzero.
void poly_divmod(const Poly& f, const Poly& g, Poly& q, Poly& r);
Poly poly_mod(const Poly& f, const Poly& g);
Poly poly_gcd(Poly a, Poly b);  // monic gcd
Poly poly_monic(const Poly& f);
Poly poly_derivative(const Poly& f);
Poly poly_powmod(const Poly& base, int64_t e, const Poly& mod);
Poly poly_pow(const Poly& base, int64_t e);
/// Extended gcd: returns g monic and u, v with u*a + v*b = g.
Poly poly_ext_gcd(const Poly& a, const Poly& b, Poly& u, Poly& v);
std::string poly_to_string(const Poly& f);

struct PolyFactor {
    Poly factor;  // monic irreducible
    int multiplicity = 0;
};

/// Full factorization over GF(p^k): square-free split, then distinct-degree,
/// then equal-degree (Cantor-Zassenhaus; trace splitting in characteristic 2).
/// The random choices are seeded from the context seed and the input, so the
/// output is deterministic. Factors come back sorted (degree, then
/// coefficients low-to-high), with the leading unit as a separate value.
/// Throws InputError on the zero polynomial.
std::vector<PolyFactor> poly_factor(const Poly& f, Fel* unit_out = nullptr);

/// Irreducibility test (used by the modulus search and as a test oracle).
bool poly_irreducible(const Poly& f);

}  // namespace zblock
