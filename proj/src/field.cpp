#include "zblock/field.hpp"

#include <algorithm>
#include <cassert>
#include <random>

namespace zblock {

bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int64_t FieldCtx::sinv(int64_t a) const {
    a = snorm(a);
    if (a == 0) throw InputError("division by zero in GF(p)");
    // extended Euclid
    int64_t old_r = a, r = p_, old_s = 1, s = 0;
    while (r != 0) {
        int64_t q = old_r / r;
        int64_t t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    return snorm(old_s);
}

int64_t FieldCtx::spow(int64_t a, int64_t e) const {
    a = snorm(a);
    int64_t r = 1 % p_;
    while (e > 0) {
        if (e & 1) r = smul(r, a);
        a = smul(a, a);
        e >>= 1;
    }
    return r;
}

void FieldCtx::set_zero(int64_t* a) const { std::fill(a, a + k_, 0); }

void FieldCtx::set_one(int64_t* a) const {
    set_zero(a);
    a[0] = 1 % p_;
}

void FieldCtx::set_int(int64_t* a, int64_t v) const {
    set_zero(a);
    a[0] = snorm(v);
}

bool FieldCtx::is_zero(const int64_t* a) const {
    for (int i = 0; i < k_; ++i)
        if (a[i] != 0) return false;
    return true;
}

bool FieldCtx::is_one(const int64_t* a) const {
    if (a[0] != 1 % p_) return false;
    for (int i = 1; i < k_; ++i)
        if (a[i] != 0) return false;
    return true;
}

bool FieldCtx::eq(const int64_t* a, const int64_t* b) const {
    return std::equal(a, a + k_, b);
}

void FieldCtx::add(int64_t* out, const int64_t* a, const int64_t* b) const {
    for (int i = 0; i < k_; ++i) out[i] = (a[i] + b[i]) % p_;
}

void FieldCtx::sub(int64_t* out, const int64_t* a, const int64_t* b) const {
    for (int i = 0; i < k_; ++i) out[i] = snorm(a[i] - b[i]);
}

void FieldCtx::add_inplace(int64_t* a, const int64_t* b) const { add(a, a, b); }
void FieldCtx::sub_inplace(int64_t* a, const int64_t* b) const { sub(a, a, b); }

void FieldCtx::neg(int64_t* out, const int64_t* a) const {
    for (int i = 0; i < k_; ++i) out[i] = snorm(-a[i]);
}

void FieldCtx::mul(int64_t* out, const int64_t* a, const int64_t* b) const {
    if (k_ == 1) {
        out[0] = (a[0] * b[0]) % p_;
        return;
    }
    int64_t buf[31] = {0};  // k <= 16, product has 2k-1 coefficients
    for (int i = 0; i < k_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < k_; ++j) buf[i + j] = (buf[i + j] + a[i] * b[j]) % p_;
    }
    // reduce by the monic modulus
    for (int i = 2 * k_ - 2; i >= k_; --i) {
        int64_t c = buf[i];
        if (c == 0) continue;
        for (int j = 0; j < k_; ++j)
            buf[i - k_ + j] = snorm(buf[i - k_ + j] - c * modulus_[j]);
        buf[i] = 0;
    }
    std::copy(buf, buf + k_, out);
}

void FieldCtx::mul_add(int64_t* acc, const int64_t* a, const int64_t* b) const {
    if (k_ == 1) {
        acc[0] = (acc[0] + a[0] * b[0]) % p_;
        return;
    }
    int64_t tmp[16];
    mul(tmp, a, b);
    add_inplace(acc, tmp);
}

void FieldCtx::inv(int64_t* out, const int64_t* a) const {
    if (is_zero(a)) throw InputError("division by zero in GF(p^k)");
    if (k_ == 1) {
        out[0] = sinv(a[0]);
        return;
    }
    // extended Euclid between a (as polynomial) and the modulus over GF(p)
    std::vector<int64_t> r0(modulus_), r1(a, a + k_), s0(k_ + 1, 0), s1(k_ + 1, 0);
    s1[0] = 1;
    auto degree = [&](const std::vector<int64_t>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
            if (v[i] != 0) return i;
        return -1;
    };
    while (degree(r1) > 0 || (degree(r1) == 0)) {
        int d1 = degree(r1);
        if (d1 == 0) break;
        int d0 = degree(r0);
        if (d0 < d1) {
            std::swap(r0, r1);
            std::swap(s0, s1);
            continue;
        }
        int64_t f = smul(r0[d0], sinv(r1[d1]));
        int sh = d0 - d1;
        for (int i = 0; i <= d1; ++i) r0[i + sh] = snorm(r0[i + sh] - f * r1[i]);
        for (int i = 0; i + sh < static_cast<int>(s0.size()); ++i)
            if (i <= degree(s1) || s1[i] != 0)
                s0[i + sh] = snorm(s0[i + sh] - f * s1[i]);
    }
    int d1 = degree(r1);
    if (d1 != 0) throw Error("inv: element not invertible (modulus not irreducible?)");
    int64_t c = sinv(r1[0]);
    for (int i = 0; i < k_; ++i) out[i] = smul(c, i < static_cast<int>(s1.size()) ? s1[i] : 0);
}

void FieldCtx::pow(int64_t* out, const int64_t* a, int64_t e) const {
    int64_t base[16], acc[16];
    std::copy(a, a + k_, base);
    set_one(acc);
    if (e < 0) {
        inv(base, base);
        e = -e;
    }
    while (e > 0) {
        if (e & 1) mul(acc, acc, base);
        mul(base, base, base);
        e >>= 1;
    }
    std::copy(acc, acc + k_, out);
}

void FieldCtx::frob(int64_t* out, const int64_t* a, int64_t t) const {
    int64_t cur[16];
    std::copy(a, a + k_, cur);
    t %= k_;  // p^k-th power is the identity
    if (t < 0) t += k_;
    for (int64_t i = 0; i < t; ++i) pow(cur, cur, p_);
    std::copy(cur, cur + k_, out);
}

void FieldCtx::frob_inv(int64_t* out, const int64_t* a, int64_t t) const {
    t %= k_;
    frob(out, a, (k_ - t) % k_);
}

std::string FieldCtx::to_string(const int64_t* a) const {
    if (k_ == 1) return std::to_string(a[0]);
    std::string s = "[";
    for (int i = 0; i < k_; ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s + "]";
}

Fel frobenius(const FieldCtx& F, const Fel& a) {
    Fel r(F.k());
    F.frob(r.data(), a.data(), 1);
    return r;
}

// ---------------------------------------------------------------------------
// polynomials

Poly poly_zero(const FieldCtx& F) { return Poly{&F, {}}; }

Poly poly_one(const FieldCtx& F) {
    Poly f{&F, std::vector<int64_t>(F.k(), 0)};
    f.c[0] = 1 % F.p();
    return f;
}

Poly poly_x(const FieldCtx& F) {
    Poly f{&F, std::vector<int64_t>(2 * F.k(), 0)};
    f.c[F.k()] = 1 % F.p();
    return f;
}

void poly_trim(Poly& f) {
    const FieldCtx& F = *f.F;
    int d = f.deg();
    while (d >= 0 && F.is_zero(f.coef(d))) --d;
    f.c.resize(static_cast<size_t>(d + 1) * F.k());
}

Poly poly_from(const FieldCtx& F, const std::vector<Fel>& coeffs) {
    Poly f{&F, {}};
    f.c.resize(coeffs.size() * F.k());
    for (size_t i = 0; i < coeffs.size(); ++i)
        std::copy(coeffs[i].begin(), coeffs[i].end(), f.coef(static_cast<int>(i)));
    poly_trim(f);
    return f;
}

Poly poly_from_ints(const FieldCtx& F, const std::vector<int64_t>& coeffs) {
    Poly f{&F, std::vector<int64_t>(coeffs.size() * F.k(), 0)};
    for (size_t i = 0; i < coeffs.size(); ++i) F.set_int(f.coef(static_cast<int>(i)), coeffs[i]);
    poly_trim(f);
    return f;
}

bool poly_eq(const Poly& a, const Poly& b) { return a.c == b.c; }

Poly poly_add(const Poly& a, const Poly& b) {
    const FieldCtx& F = *a.F;
    Poly r{&F, std::vector<int64_t>(std::max(a.c.size(), b.c.size()), 0)};
    std::copy(a.c.begin(), a.c.end(), r.c.begin());
    int db = b.deg();
    for (int i = 0; i <= db; ++i) F.add_inplace(r.coef(i), b.coef(i));
    poly_trim(r);
    return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
    const FieldCtx& F = *a.F;
    Poly r{&F, std::vector<int64_t>(std::max(a.c.size(), b.c.size()), 0)};
    std::copy(a.c.begin(), a.c.end(), r.c.begin());
    int db = b.deg();
    for (int i = 0; i <= db; ++i) F.sub_inplace(r.coef(i), b.coef(i));
    poly_trim(r);
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    const FieldCtx& F = *a.F;
    if (a.zero() || b.zero()) return poly_zero(F);
    int da = a.deg(), db = b.deg();
    Poly r{&F, std::vector<int64_t>(static_cast<size_t>(da + db + 1) * F.k(), 0)};
    for (int i = 0; i <= da; ++i) {
        if (F.is_zero(a.coef(i))) continue;
        for (int j = 0; j <= db; ++j) F.mul_add(r.coef(i + j), a.coef(i), b.coef(j));
    }
    poly_trim(r);
    return r;
}

Poly poly_scale(const Poly& a, const int64_t* s) {
    const FieldCtx& F = *a.F;
    Poly r = a;
    for (int i = 0; i <= r.deg(); ++i) F.mul(r.coef(i), a.coef(i), s);
    poly_trim(r);
    return r;
}

void poly_divmod(const Poly& f, const Poly& g, Poly& q, Poly& r) {
    const FieldCtx& F = *f.F;
    if (g.zero()) throw InputError("polynomial division by zero");
    r = f;
    int dg = g.deg();
    if (f.deg() < dg) {
        q = poly_zero(F);
        return;
    }
    q = Poly{&F, std::vector<int64_t>(static_cast<size_t>(f.deg() - dg + 1) * F.k(), 0)};
    std::vector<int64_t> lcinv(F.k());
    F.inv(lcinv.data(), g.coef(dg));
    std::vector<int64_t> t(F.k());
    for (int i = f.deg(); i >= dg; --i) {
        int cur = r.deg();
        if (cur < i) continue;
        if (F.is_zero(r.coef(i))) continue;
        F.mul(t.data(), r.coef(i), lcinv.data());
        std::copy(t.begin(), t.end(), q.coef(i - dg));
        // r -= t * x^{i-dg} * g
        std::vector<int64_t> tmp(F.k());
        for (int j = 0; j <= dg; ++j) {
            F.mul(tmp.data(), t.data(), g.coef(j));
            F.sub_inplace(r.coef(i - dg + j), tmp.data());
        }
    }
    poly_trim(q);
    poly_trim(r);
}

Poly poly_mod(const Poly& f, const Poly& g) {
    Poly q, r;
    poly_divmod(f, g, q, r);
    return r;
}

Poly poly_monic(const Poly& f) {
    const FieldCtx& F = *f.F;
    if (f.zero()) return f;
    if (F.is_one(f.coef(f.deg()))) return f;
    std::vector<int64_t> lcinv(F.k());
    F.inv(lcinv.data(), f.coef(f.deg()));
    return poly_scale(f, lcinv.data());
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.zero()) {
        Poly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a);
}

Poly poly_derivative(const Poly& f) {
    const FieldCtx& F = *f.F;
    if (f.deg() <= 0) return poly_zero(F);
    Poly r{&F, std::vector<int64_t>(static_cast<size_t>(f.deg()) * F.k(), 0)};
    std::vector<int64_t> s(F.k());
    for (int i = 1; i <= f.deg(); ++i) {
        F.set_int(s.data(), i);
        F.mul(r.coef(i - 1), f.coef(i), s.data());
    }
    poly_trim(r);
    return r;
}

Poly poly_powmod(const Poly& base, int64_t e, const Poly& mod) {
    const FieldCtx& F = *base.F;
    Poly acc = poly_one(F);
    Poly b = poly_mod(base, mod);
    while (e > 0) {
        if (e & 1) acc = poly_mod(poly_mul(acc, b), mod);
        e >>= 1;
        if (e > 0) b = poly_mod(poly_mul(b, b), mod);
    }
    return acc;
}

Poly poly_pow(const Poly& base, int64_t e) {
    const FieldCtx& F = *base.F;
    Poly acc = poly_one(F);
    Poly b = base;
    while (e > 0) {
        if (e & 1) acc = poly_mul(acc, b);
        e >>= 1;
        if (e > 0) b = poly_mul(b, b);
    }
    return acc;
}

Poly poly_ext_gcd(const Poly& a, const Poly& b, Poly& u, Poly& v) {
    const FieldCtx& F = *a.F;
    Poly r0 = a, r1 = b;
    Poly s0 = poly_one(F), s1 = poly_zero(F);
    Poly t0 = poly_zero(F), t1 = poly_one(F);
    while (!r1.zero()) {
        Poly q, r;
        poly_divmod(r0, r1, q, r);
        Poly s2 = poly_sub(s0, poly_mul(q, s1));
        Poly t2 = poly_sub(t0, poly_mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // normalize to monic gcd
    if (!r0.zero() && !F.is_one(r0.coef(r0.deg()))) {
        std::vector<int64_t> lcinv(F.k());
        F.inv(lcinv.data(), r0.coef(r0.deg()));
        r0 = poly_scale(r0, lcinv.data());
        s0 = poly_scale(s0, lcinv.data());
        t0 = poly_scale(t0, lcinv.data());
    }
    u = std::move(s0);
    v = std::move(t0);
    return r0;
}

std::string poly_to_string(const Poly& f) {
    const FieldCtx& F = *f.F;
    if (f.zero()) return "0";
    std::string s;
    for (int i = f.deg(); i >= 0; --i) {
        if (F.is_zero(f.coef(i))) continue;
        if (!s.empty()) s += " + ";
        if (i == 0 || !F.is_one(f.coef(i))) s += F.to_string(f.coef(i));
        if (i >= 1) {
            if (!F.is_one(f.coef(i))) s += "*";
            s += "x";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// factorization

namespace {

uint64_t fnv1a(const void* data, size_t n, uint64_t h = 0xcbf29ce484222325ULL) {
    const unsigned char* b = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < n; ++i) {
        h ^= b[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

// p-th root of a coefficient: a^(p^(k-1)).
void pth_root(const FieldCtx& F, int64_t* out, const int64_t* a) {
    F.frob(out, a, F.k() - 1);
}

// f with zero derivative is a polynomial in x^p; take the p-th root.
Poly extract_pth_root(const Poly& f) {
    const FieldCtx& F = *f.F;
    int64_t p = F.p();
    int d = f.deg();
    Poly g{&F, std::vector<int64_t>(static_cast<size_t>(d / p + 1) * F.k(), 0)};
    for (int i = 0; i <= d; ++i) {
        if (F.is_zero(f.coef(i))) continue;
        if (i % p != 0) throw Error("extract_pth_root: derivative was not zero");
        pth_root(F, g.coef(i / static_cast<int>(p)), f.coef(i));
    }
    poly_trim(g);
    return g;
}

// square-free decomposition of a monic f; returns (gi, ei) with f = prod gi^ei.
std::vector<std::pair<Poly, int>> squarefree(const Poly& f) {
    const FieldCtx& F = *f.F;
    std::vector<std::pair<Poly, int>> out;
    if (f.deg() == 0) return out;
    Poly df = poly_derivative(f);
    if (df.zero()) {
        Poly g = poly_monic(extract_pth_root(f));
        for (auto& [h, e] : squarefree(g)) out.emplace_back(h, e * static_cast<int>(F.p()));
        return out;
    }
    Poly c = poly_gcd(f, df);
    Poly w, r;
    poly_divmod(f, c, w, r);
    int mult = 1;
    while (w.deg() > 0) {
        Poly y = poly_gcd(w, c);
        Poly fac, r2;
        poly_divmod(w, y, fac, r2);
        if (fac.deg() > 0) out.emplace_back(poly_monic(fac), mult);
        w = std::move(y);
        Poly c2;
        poly_divmod(c, w, c2, r2);
        c = std::move(c2);
        ++mult;
    }
    if (c.deg() > 0) {
        Poly g = poly_monic(extract_pth_root(c));
        for (auto& [h, e] : squarefree(g)) {
            // interleave: these factors carry multiplicity e*p on top of what
            // was already split off; merge on output instead of here
            out.emplace_back(h, e * static_cast<int>(F.p()));
        }
    }
    return out;
}

// distinct-degree: input monic square-free; returns (product, d) pairs.
std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f) {
    const FieldCtx& F = *f.F;
    std::vector<std::pair<Poly, int>> out;
    Poly rem = f;
    Poly h = poly_x(F);
    Poly x = poly_x(F);
    int d = 0;
    while (rem.deg() > 0) {
        ++d;
        if (2 * d > rem.deg()) {
            out.emplace_back(rem, rem.deg());
            break;
        }
        // h = h^(p^k) mod rem, i.e. h = x^(q^d) mod rem
        for (int i = 0; i < F.k(); ++i) h = poly_powmod(h, F.p(), rem);
        Poly g = poly_gcd(poly_sub(h, x), rem);
        if (g.deg() > 0) {
            out.emplace_back(g, d);
            Poly q, r;
            poly_divmod(rem, g, q, r);
            rem = std::move(q);
            h = poly_mod(h, rem);
        }
    }
    return out;
}

Poly random_poly(const FieldCtx& F, int maxdeg, std::mt19937_64& rng) {
    std::vector<Fel> cs(static_cast<size_t>(maxdeg) + 1, F.zero());
    for (auto& c : cs)
        for (int i = 0; i < F.k(); ++i) c[i] = static_cast<int64_t>(rng() % static_cast<uint64_t>(F.p()));
    return poly_from(F, cs);
}

// equal-degree splitting of monic square-free f, all factors of degree d.
void equal_degree(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
    const FieldCtx& F = *f.F;
    if (f.deg() == d) {
        out.push_back(f);
        return;
    }
    Poly split;
    while (true) {
        Poly r = random_poly(F, f.deg() - 1, rng);
        if (r.deg() < 1) continue;
        Poly g = poly_gcd(r, f);
        if (g.deg() > 0 && g.deg() < f.deg()) {
            split = g;
            break;
        }
        if (F.p() == 2) {
            // trace map over GF(2): T(r) = sum r^(2^i), i < k*d
            Poly t = poly_mod(r, f);
            Poly acc = t;
            Poly cur = t;
            for (int i = 1; i < F.k() * d; ++i) {
                cur = poly_powmod(cur, 2, f);
                acc = poly_add(acc, cur);
            }
            Poly g2 = poly_gcd(acc, f);
            if (g2.deg() > 0 && g2.deg() < f.deg()) {
                split = g2;
                break;
            }
        } else {
            // w = r^((q^d-1)/2) via the norm chain: s = r^(1+q+...+q^(d-1)),
            // then w = s^((q-1)/2); avoids forming the huge exponent.
            Poly s = poly_mod(r, f);
            Poly rq = s;
            for (int i = 1; i < d; ++i) {
                for (int j = 0; j < F.k(); ++j) rq = poly_powmod(rq, F.p(), f);
                s = poly_mod(poly_mul(s, rq), f);
            }
            int64_t q = 1;
            for (int i = 0; i < F.k(); ++i) q *= F.p();
            Poly w = poly_powmod(s, (q - 1) / 2, f);
            Poly g2 = poly_gcd(poly_sub(w, poly_one(F)), f);
            if (g2.deg() > 0 && g2.deg() < f.deg()) {
                split = g2;
                break;
            }
        }
    }
    Poly q, r;
    poly_divmod(f, split, q, r);
    equal_degree(poly_monic(split), d, rng, out);
    equal_degree(poly_monic(q), d, rng, out);
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    return a.c < b.c;
}

}  // namespace

std::vector<PolyFactor> poly_factor(const Poly& f, Fel* unit_out) {
    const FieldCtx& F = *f.F;
    if (f.zero()) throw InputError("poly_factor: zero polynomial");
    Fel unit(f.coef(f.deg()), f.coef(f.deg()) + F.k());
    if (unit_out) *unit_out = unit;
    Poly g = poly_monic(f);
    std::mt19937_64 rng(F.seed() ^ fnv1a(g.c.data(), g.c.size() * sizeof(int64_t)) ^
                        0x5bd1e995u);

    std::vector<PolyFactor> result;
    for (auto& [sf, mult] : squarefree(g)) {
        for (auto& [prod, d] : distinct_degree(sf)) {
            std::vector<Poly> irr;
            equal_degree(prod, d, rng, irr);
            for (auto& h : irr) result.push_back(PolyFactor{h, mult});
        }
    }
    std::sort(result.begin(), result.end(), [](const PolyFactor& a, const PolyFactor& b) {
        return poly_less(a.factor, b.factor);
    });
    // merge equal factors (can arise when squarefree recursion splits p-th powers)
    std::vector<PolyFactor> merged;
    for (auto& pf : result) {
        if (!merged.empty() && poly_eq(merged.back().factor, pf.factor))
            merged.back().multiplicity += pf.multiplicity;
        else
            merged.push_back(pf);
    }
    return merged;
}

bool poly_irreducible(const Poly& f) {
    const FieldCtx& F = *f.F;
    int n = f.deg();
    if (n <= 0) return false;
    if (n == 1) return true;
    Poly x = poly_x(F);
    // x^(q^n) == x mod f, and gcd(x^(q^(n/r)) - x, f) == 1 for prime r | n
    Poly h = x;
    std::vector<Poly> qpow(static_cast<size_t>(n) + 1);  // qpow[i] = x^(q^i) mod f
    qpow[0] = poly_mod(x, f);
    for (int i = 1; i <= n; ++i) {
        Poly t = qpow[i - 1];
        for (int j = 0; j < F.k(); ++j) t = poly_powmod(t, F.p(), f);
        qpow[i] = t;
    }
    if (!poly_eq(qpow[n], poly_mod(x, f))) return false;
    for (int r = 2; r <= n; ++r) {
        if (n % r != 0) continue;
        bool prime = true;
        for (int d2 = 2; d2 * d2 <= r; ++d2)
            if (r % d2 == 0) prime = false;
        if (!prime) continue;
        Poly g = poly_gcd(poly_sub(qpow[n / r], x), f);
        if (g.deg() != 0) return false;
    }
    return true;
}

FieldCtx field_make(int64_t p, int k, uint64_t seed) {
    if (!is_prime(p)) throw InputError("field_make: p = " + std::to_string(p) + " is not prime");
    if (k < 1 || k > 16) throw CapError("field_make: extension degree k = " + std::to_string(k) +
                                        " out of range [1,16]");
    FieldCtx F;
    F.p_ = p;
    F.k_ = 1;
    F.modulus_ = {0, 1};  // x: GF(p) itself
    F.seed_ = seed;
    if (k == 1) return F;

    // search the lexicographically least monic irreducible of degree k over
    // GF(p); candidates ordered by the base-p value of the low coefficients
    FieldCtx prime = F;  // GF(p) context for the search
    std::vector<int64_t> digits(static_cast<size_t>(k), 0);
    while (true) {
        std::vector<int64_t> coeffs(digits.begin(), digits.end());
        coeffs.push_back(1);
        Poly cand = poly_from_ints(prime, coeffs);
        if (poly_irreducible(cand)) {
            F.k_ = k;
            F.modulus_ = coeffs;
            return F;
        }
        int pos = 0;
        while (pos < k && ++digits[pos] == p) digits[pos++] = 0;
        if (pos == k) throw Error("field_make: no irreducible found (unreachable)");
    }
}

}  // namespace zblock
