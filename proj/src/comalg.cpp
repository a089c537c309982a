#include "zblock/comalg.hpp"

#include <algorithm>
#include <cassert>

namespace zblock {

namespace {

int ceil_log(int64_t p, int64_t n) {
    // least N with p^N >= n
    int N = 0;
    int64_t v = 1;
    while (v < n) {
        v *= p;
        ++N;
    }
    return N;
}

}  // namespace

CommAlgebra CommAlgebra::build(const FieldCtx& F, int n, std::vector<SparseProd> table,
                               std::vector<int64_t> identity, std::vector<std::string> labels) {
    CommAlgebra A;
    A.F_ = &F;
    A.n_ = n;
    A.tab_ = std::move(table);
    A.one_ = std::move(identity);
    A.labels_ = std::move(labels);
    if (A.tab_.size() != static_cast<size_t>(n) * n)
        throw InputError("CommAlgebra: table size mismatch");
    if (A.labels_.empty()) {
        A.labels_.resize(n);
        for (int i = 0; i < n; ++i) A.labels_[i] = "b" + std::to_string(i);
    }
    const int k = F.k();
    // commutativity: the table must be symmetric entry-by-entry
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const SparseProd &a = A.prod(i, j), &b = A.prod(j, i);
            if (a.idx != b.idx || a.co != b.co)
                throw InputError("CommAlgebra: structure constants not commutative");
        }
    // identity acts trivially
    std::vector<int64_t> tmp(static_cast<size_t>(n) * k), bi(static_cast<size_t>(n) * k);
    for (int i = 0; i < n; ++i) {
        std::fill(bi.begin(), bi.end(), 0);
        F.set_one(bi.data() + static_cast<size_t>(i) * k);
        A.mul(tmp.data(), A.one_.data(), bi.data());
        if (tmp != bi) throw InputError("CommAlgebra: identity does not act trivially");
    }
    // associativity: (b_i b_j) b_l == b_i (b_j b_l); exhaustive for n <= 40
    {
        std::vector<int64_t> v1(static_cast<size_t>(n) * k), v2(static_cast<size_t>(n) * k);
        std::vector<int64_t> lhs(static_cast<size_t>(n) * k), rhs(static_cast<size_t>(n) * k);
        auto dense_prod = [&](int i, int j, std::vector<int64_t>& out) {
            std::fill(out.begin(), out.end(), 0);
            const SparseProd& pr = A.prod(i, j);
            for (size_t t = 0; t < pr.idx.size(); ++t)
                F.add_inplace(out.data() + static_cast<size_t>(pr.idx[t]) * k,
                              pr.co.data() + t * k);
        };
        auto check_triple = [&](int i, int j, int l) {
            dense_prod(i, j, v1);
            A.mul_basis(lhs.data(), l, v1.data());  // (b_i b_j) b_l, by commutativity
            dense_prod(j, l, v2);
            A.mul_basis(rhs.data(), i, v2.data());
            if (lhs != rhs) throw InputError("CommAlgebra: structure constants not associative");
        };
        if (n <= 40) {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int l = 0; l < n; ++l) check_triple(i, j, l);
        } else {
            uint64_t s = 0x9E3779B97F4A7C15ULL;
            for (int t = 0; t < 4000; ++t) {
                s = s * 6364136223846793005ULL + 1442695040888963407ULL;
                int i = static_cast<int>((s >> 33) % n);
                s = s * 6364136223846793005ULL + 1442695040888963407ULL;
                int j = static_cast<int>((s >> 33) % n);
                s = s * 6364136223846793005ULL + 1442695040888963407ULL;
                int l = static_cast<int>((s >> 33) % n);
                check_triple(i, j, l);
            }
        }
    }
    // cache p-th powers of the basis: x^p is then semilinear in x
    A.phi_.resize(n);
    for (int i = 0; i < n; ++i) {
        std::vector<int64_t> cur(static_cast<size_t>(n) * k, 0);
        F.set_one(cur.data() + static_cast<size_t>(i) * k);
        std::vector<int64_t> out(static_cast<size_t>(n) * k);
        for (int64_t e = 1; e < F.p(); ++e) {
            A.mul_basis(out.data(), i, cur.data());
            std::swap(cur, out);
        }
        A.phi_[i] = std::move(cur);
    }
    return A;
}

void CommAlgebra::mul_basis(int64_t* out, int i, const int64_t* y) const {
    const FieldCtx& F = *F_;
    const int k = F.k();
    std::fill(out, out + static_cast<size_t>(n_) * k, 0);
    if (k == 1) {
        const int64_t p = F.p();
        for (int j = 0; j < n_; ++j) {
            int64_t yj = y[j];
            if (yj == 0) continue;
            const SparseProd& pr = prod(i, j);
            for (size_t t = 0; t < pr.idx.size(); ++t)
                out[pr.idx[t]] = (out[pr.idx[t]] + yj * pr.co[t]) % p;
        }
        return;
    }
    int64_t tmp[16];
    for (int j = 0; j < n_; ++j) {
        const int64_t* yj = y + static_cast<size_t>(j) * k;
        if (F.is_zero(yj)) continue;
        const SparseProd& pr = prod(i, j);
        for (size_t t = 0; t < pr.idx.size(); ++t) {
            F.mul(tmp, yj, pr.co.data() + t * k);
            F.add_inplace(out + static_cast<size_t>(pr.idx[t]) * k, tmp);
        }
    }
}

void CommAlgebra::mul(int64_t* out, const int64_t* x, const int64_t* y) const {
    const FieldCtx& F = *F_;
    const int k = F.k();
    std::fill(out, out + static_cast<size_t>(n_) * k, 0);
    if (k == 1) {
        const int64_t p = F.p();
        for (int i = 0; i < n_; ++i) {
            int64_t xi = x[i];
            if (xi == 0) continue;
            for (int j = 0; j < n_; ++j) {
                int64_t c = (xi * y[j]) % p;
                if (c == 0) continue;
                const SparseProd& pr = prod(i, j);
                for (size_t t = 0; t < pr.idx.size(); ++t)
                    out[pr.idx[t]] = (out[pr.idx[t]] + c * pr.co[t]) % p;
            }
        }
        return;
    }
    int64_t c[16], tmp[16];
    for (int i = 0; i < n_; ++i) {
        const int64_t* xi = x + static_cast<size_t>(i) * k;
        if (F.is_zero(xi)) continue;
        for (int j = 0; j < n_; ++j) {
            const int64_t* yj = y + static_cast<size_t>(j) * k;
            if (F.is_zero(yj)) continue;
            F.mul(c, xi, yj);
            const SparseProd& pr = prod(i, j);
            for (size_t t = 0; t < pr.idx.size(); ++t) {
                F.mul(tmp, c, pr.co.data() + t * k);
                F.add_inplace(out + static_cast<size_t>(pr.idx[t]) * k, tmp);
            }
        }
    }
}

void CommAlgebra::pow_p(int64_t* out, const int64_t* x) const {
    const FieldCtx& F = *F_;
    const int k = F.k();
    std::fill(out, out + static_cast<size_t>(n_) * k, 0);
    int64_t xp[16];
    for (int i = 0; i < n_; ++i) {
        const int64_t* xi = x + static_cast<size_t>(i) * k;
        if (F.is_zero(xi)) continue;
        F.pow(xp, xi, F.p());
        const std::vector<int64_t>& phi = phi_[i];
        if (k == 1) {
            const int64_t p = F.p();
            for (int j = 0; j < n_; ++j)
                if (phi[j] != 0) out[j] = (out[j] + xp[0] * phi[j]) % p;
        } else {
            int64_t tmp[16];
            for (int j = 0; j < n_; ++j) {
                if (F.is_zero(phi.data() + static_cast<size_t>(j) * k)) continue;
                F.mul(tmp, xp, phi.data() + static_cast<size_t>(j) * k);
                F.add_inplace(out + static_cast<size_t>(j) * k, tmp);
            }
        }
    }
}

void CommAlgebra::power(int64_t* out, const int64_t* x, int64_t e) const {
    const int k = F_->k();
    std::vector<int64_t> base(x, x + static_cast<size_t>(n_) * k);
    std::vector<int64_t> acc = one_;
    std::vector<int64_t> tmp(static_cast<size_t>(n_) * k);
    while (e > 0) {
        if (e & 1) {
            mul(tmp.data(), acc.data(), base.data());
            std::swap(acc, tmp);
        }
        e >>= 1;
        if (e > 0) {
            mul(tmp.data(), base.data(), base.data());
            std::swap(base, tmp);
        }
    }
    std::copy(acc.begin(), acc.end(), out);
}

std::vector<int64_t> CommAlgebra::basis_vec(int i) const {
    std::vector<int64_t> v(static_cast<size_t>(n_) * F_->k(), 0);
    F_->set_one(v.data() + static_cast<size_t>(i) * F_->k());
    return v;
}

Poly minimal_polynomial(const CommAlgebra& A, const int64_t* x, const int64_t* unit) {
    const FieldCtx& F = A.field();
    const int k = F.k();
    const size_t len = static_cast<size_t>(A.dim()) * k;
    SpanSolver span(F, A.dim());
    std::vector<int64_t> v(unit, unit + len), next(len);
    span.insert(v.data());
    for (int m = 1; m <= A.dim() + 1; ++m) {
        A.mul(next.data(), v.data(), x);
        std::swap(v, next);
        if (auto coords = span.coords(v.data())) {
            // x^m = sum coords_i x^i  ->  minpoly = x^m - sum coords_i x^i
            std::vector<Fel> cs(static_cast<size_t>(m) + 1, F.zero());
            for (int i = 0; i < m; ++i) {
                const int64_t* ci = coords->data() + static_cast<size_t>(i) * k;
                Fel neg(k);
                F.neg(neg.data(), ci);
                cs[i] = neg;
            }
            cs[m] = F.one();
            return poly_from(F, cs);
        }
        span.insert(v.data());
    }
    throw Error("minimal_polynomial: no dependence found (internal)");
}

std::vector<int64_t> eval_poly(const CommAlgebra& A, const Poly& f, const int64_t* x,
                               const int64_t* unit) {
    const FieldCtx& F = A.field();
    const int k = F.k();
    const size_t len = static_cast<size_t>(A.dim()) * k;
    std::vector<int64_t> acc(len, 0), tmp(len);
    if (f.zero()) return acc;
    for (int i = f.deg(); i >= 0; --i) {
        if (i < f.deg()) {
            A.mul(tmp.data(), acc.data(), x);
            std::swap(acc, tmp);
        }
        if (!F.is_zero(f.coef(i))) {
            // acc += c_i * unit
            int64_t t[16];
            for (int j = 0; j < A.dim(); ++j) {
                const int64_t* uj = unit + static_cast<size_t>(j) * k;
                if (F.is_zero(uj)) continue;
                F.mul(t, f.coef(i), uj);
                F.add_inplace(acc.data() + static_cast<size_t>(j) * k, t);
            }
        }
    }
    return acc;
}

namespace {

// semisimple dimension of the piece spanned by `rows`: rank of x -> x^{p^N}
// over a spanning set, with p^N at least the piece dimension (so the
// nilpotent parts die and only the Wedderburn part survives)
int semisimple_rank(const CommAlgebra& A, const RowBasis& rows, int N) {
    const FieldCtx& F = A.field();
    RowBasis span(F, A.dim());
    std::vector<int64_t> w(static_cast<size_t>(A.dim()) * F.k());
    std::vector<int64_t> w2 = w;
    for (size_t r = 0; r < rows.dim(); ++r) {
        w.assign(rows.row(r).begin(), rows.row(r).end());
        for (int t = 0; t < N; ++t) {
            A.pow_p(w2.data(), w.data());
            std::swap(w, w2);
        }
        span.insert(w.data());
    }
    return static_cast<int>(span.dim());
}

void decompose_rec(const CommAlgebra& A, std::vector<int64_t> e, RowBasis rows,
                   std::vector<LocalPiece>& out) {
    const FieldCtx& F = A.field();
    const int k = F.k();
    const int n = A.dim();
    const size_t len = static_cast<size_t>(n) * k;
    const int N = std::max(1, ceil_log(F.p(), static_cast<int64_t>(rows.dim())));

    if (semisimple_rank(A, rows, N) == 1) {
        // local split piece: read the eigenvalue of every ambient basis
        // element from its p^N-th power, which is a scalar multiple of e
        LocalPiece piece;
        piece.idempotent = e;
        piece.eigen.assign(n, F.zero());
        int pc = -1;  // a coordinate where e is nonzero
        for (int j = 0; j < n; ++j)
            if (!F.is_zero(e.data() + static_cast<size_t>(j) * k)) {
                pc = j;
                break;
            }
        int64_t einv[16];
        F.inv(einv, e.data() + static_cast<size_t>(pc) * k);
        std::vector<int64_t> x(len), w(len), w2(len);
        for (int i = 0; i < n; ++i) {
            A.mul_basis(x.data(), i, e.data());
            w = x;
            for (int t = 0; t < N; ++t) {
                A.pow_p(w2.data(), w.data());
                std::swap(w, w2);
            }
            int64_t s[16];
            F.mul(s, w.data() + static_cast<size_t>(pc) * k, einv);
            // sanity: w must equal s*e
            int64_t t2[16];
            for (int j = 0; j < n; ++j) {
                F.mul(t2, s, e.data() + static_cast<size_t>(j) * k);
                if (!F.eq(t2, w.data() + static_cast<size_t>(j) * k))
                    throw Error("decompose_local: semisimple part not scalar (internal)");
            }
            Fel lam(static_cast<size_t>(k));
            F.frob_inv(lam.data(), s, N);
            piece.eigen[i] = std::move(lam);
        }
        piece.rows = std::move(rows);
        out.push_back(std::move(piece));
        return;
    }

    // find the lowest basis index whose minimal polynomial on this piece has
    // at least two distinct irreducible factors
    std::vector<int64_t> x(len);
    bool saw_big_factor = false;
    for (int i = 0; i < n; ++i) {
        A.mul_basis(x.data(), i, e.data());
        Poly mp = minimal_polynomial(A, x.data(), e.data());
        std::vector<PolyFactor> fac = poly_factor(mp);
        if (fac.size() >= 2) {
            // coprime-power idempotents via CRT in F[t]/(mp)
            for (auto& [f, mult] : fac) {
                Poly fpow = poly_pow(f, mult);
                Poly q, r;
                poly_divmod(mp, fpow, q, r);
                if (!r.zero()) throw Error("decompose_local: factor does not divide (internal)");
                Poly u, v;
                Poly g = poly_ext_gcd(q, fpow, u, v);
                if (g.deg() != 0) throw Error("decompose_local: factors not coprime (internal)");
                // normalize gcd to 1: g is a nonzero constant after ext_gcd monic step
                Poly uq = poly_mod(poly_mul(u, q), mp);
                std::vector<int64_t> et = eval_poly(A, uq, x.data(), e.data());
                // new piece basis: row-reduce { b_j * e_t }
                RowBasis rws(F, n);
                std::vector<int64_t> tmp(len);
                for (int j = 0; j < n; ++j) {
                    A.mul_basis(tmp.data(), j, et.data());
                    rws.insert(tmp.data());
                }
                decompose_rec(A, std::move(et), std::move(rws), out);
            }
            return;
        }
        if (!fac.empty() && fac[0].factor.deg() >= 2) saw_big_factor = true;
    }
    if (saw_big_factor)
        throw SplitFieldError(
            "decompose_local: irreducible factor of degree >= 2 at a local leaf "
            "(field does not split the algebra)");
    throw Error("decompose_local: no splitter on a non-local piece (internal)");
}

}  // namespace

std::vector<LocalPiece> decompose_local(const CommAlgebra& A) {
    const FieldCtx& F = A.field();
    RowBasis full(F, A.dim());
    for (int i = 0; i < A.dim(); ++i) full.insert(A.basis_vec(i));
    std::vector<LocalPiece> out;
    decompose_rec(A, A.one(), std::move(full), out);
    // cross-checks: orthogonal idempotents summing to one
    const int k = F.k();
    const size_t len = static_cast<size_t>(A.dim()) * k;
    std::vector<int64_t> sum(len, 0), tmp(len);
    for (auto& p : out) {
        A.mul(tmp.data(), p.idempotent.data(), p.idempotent.data());
        if (tmp != p.idempotent) throw Error("decompose_local: non-idempotent output (internal)");
        for (size_t j = 0; j < len; ++j) sum[j] = F.sadd(sum[j], p.idempotent[j]);
    }
    // componentwise the limbs add independently, so plain scalar adds suffice
    if (sum != A.one()) throw Error("decompose_local: idempotents do not sum to 1 (internal)");
    for (size_t a = 0; a < out.size(); ++a)
        for (size_t b = a + 1; b < out.size(); ++b) {
            A.mul(tmp.data(), out[a].idempotent.data(), out[b].idempotent.data());
            bool zero = true;
            for (int64_t v : tmp)
                if (v != 0) zero = false;
            if (!zero) throw Error("decompose_local: idempotents not orthogonal (internal)");
        }
    return out;
}

IdealBasis radical_of_piece(const CommAlgebra& A, const LocalPiece& piece) {
    const FieldCtx& F = A.field();
    const int k = F.k();
    const int n = A.dim();
    const size_t len = static_cast<size_t>(n) * k;
    RowBasis J(F, n);
    std::vector<int64_t> x(len), t(len);
    int64_t tmp[16];
    for (int i = 0; i < n; ++i) {
        A.mul_basis(x.data(), i, piece.idempotent.data());
        // x -= lambda_i * e
        for (int j = 0; j < n; ++j) {
            F.mul(tmp, piece.eigen[i].data(),
                  piece.idempotent.data() + static_cast<size_t>(j) * k);
            F.sub_inplace(x.data() + static_cast<size_t>(j) * k, tmp);
        }
        J.insert(x.data());
    }
    if (static_cast<int>(J.dim()) != piece.dim() - 1)
        throw Error("radical_of_piece: codimension is not 1 (internal)");
    // verify nilpotency of each basis vector
    for (size_t r = 0; r < J.dim(); ++r) {
        std::vector<int64_t> z = J.row(r);
        if (!nilpotency_p_exponent(A, z))
            throw Error("radical_of_piece: non-nilpotent radical vector (internal)");
    }
    IdealBasis out;
    out.rows = std::move(J);
    out.ideal_checked = false;
    return out;
}

IdealBasis radical_all(const CommAlgebra& A, const std::vector<LocalPiece>& pieces) {
    IdealBasis out;
    out.rows = RowBasis(A.field(), A.dim());
    for (auto& p : pieces) {
        IdealBasis j = radical_of_piece(A, p);
        out.rows.merge(j.rows);
    }
    return out;
}

LoewyResult loewy_series(const CommAlgebra& A, const RowBasis& J, int dim0,
                         const std::vector<std::vector<int64_t>>* ideal_gens) {
    const FieldCtx& F = A.field();
    const size_t len = static_cast<size_t>(A.dim()) * F.k();
    LoewyResult res;
    res.dims = {dim0, static_cast<int>(J.dim())};
    if (J.dim() == 0) {
        res.length = 1;
        return res;
    }
    RowBasis cur = J;
    std::vector<int64_t> prodv(len);
    int t = 1;
    while (cur.dim() > 0) {
        RowBasis next(F, A.dim());
        for (size_t r = 0; r < cur.dim(); ++r) {
            if (ideal_gens) {
                for (const auto& g : *ideal_gens) {
                    A.mul(prodv.data(), cur.row(r).data(), g.data());
                    next.insert(prodv.data());
                }
            } else {
                for (size_t s = 0; s < J.dim(); ++s) {
                    A.mul(prodv.data(), cur.row(r).data(), J.row(s).data());
                    next.insert(prodv.data());
                }
            }
        }
        if (next.dim() >= cur.dim())
            throw Error("loewy_series: power dimensions stopped decreasing (input not a "
                        "nilpotent ideal)");
        ++t;
        res.dims.push_back(static_cast<int>(next.dim()));
        cur = std::move(next);
    }
    res.length = t;
    return res;
}

int loewy_length(const CommAlgebra& A, const RowBasis& J, int dim0) {
    return loewy_series(A, J, dim0).length;
}

IdealBasis ideal_product(const CommAlgebra& A, const RowBasis& I, const RowBasis& K) {
    const FieldCtx& F = A.field();
    const size_t len = static_cast<size_t>(A.dim()) * F.k();
    IdealBasis out;
    out.rows = RowBasis(F, A.dim());
    std::vector<int64_t> prodv(len);
    for (size_t r = 0; r < I.dim(); ++r)
        for (size_t s = 0; s < K.dim(); ++s) {
            A.mul(prodv.data(), I.row(r).data(), K.row(s).data());
            out.rows.insert(prodv.data());
        }
    return out;
}

bool is_ideal(const CommAlgebra& A, const RowBasis& I) {
    const FieldCtx& F = A.field();
    const size_t len = static_cast<size_t>(A.dim()) * F.k();
    std::vector<int64_t> prodv(len);
    for (int i = 0; i < A.dim(); ++i)
        for (size_t r = 0; r < I.dim(); ++r) {
            A.mul_basis(prodv.data(), i, I.row(r).data());
            if (!I.contains(prodv)) return false;
        }
    return true;
}

namespace {

// Coordinates of x over the fully reduced rows of `basis` (each row has
// zeros in every other row's pivot column, so reduction order is free).
std::vector<int64_t> coords_in_reduced_rows(const FieldCtx& F, const Mat& basis,
                                            const int64_t* x) {
    const int k = F.k();
    const int m = static_cast<int>(basis.rows());
    const int nc = static_cast<int>(basis.cols());
    std::vector<int64_t> w(x, x + static_cast<size_t>(nc) * k);
    std::vector<int64_t> coords(static_cast<size_t>(m) * k, 0);
    int64_t cv[16], tmp[16];
    for (int r = 0; r < m; ++r) {
        int pc = -1;  // pivot of row r: first nonzero column
        for (int j = 0; j < nc; ++j)
            if (!F.is_zero(basis.at(r, j))) {
                pc = j;
                break;
            }
        const int64_t* c = w.data() + static_cast<size_t>(pc) * k;
        if (F.is_zero(c)) continue;
        std::copy(c, c + k, cv);
        std::copy(cv, cv + k, coords.data() + static_cast<size_t>(r) * k);
        for (int j = 0; j < nc; ++j) {
            if (F.is_zero(basis.at(r, j))) continue;
            F.mul(tmp, cv, basis.at(r, j));
            F.sub_inplace(w.data() + static_cast<size_t>(j) * k, tmp);
        }
    }
    for (int64_t v : w)
        if (v != 0) throw Error("coords_in_reduced_rows: vector not in the span");
    return coords;
}

}  // namespace

std::vector<int64_t> SubAlgebra::to_local(const CommAlgebra& ambient, const int64_t* x) const {
    return coords_in_reduced_rows(ambient.field(), basis, x);
}

SubAlgebra materialize(const CommAlgebra& A, const RowBasis& rows, const int64_t* unit) {
    const FieldCtx& F = A.field();
    const int k = F.k();
    const int m = static_cast<int>(rows.dim());
    const size_t len = static_cast<size_t>(A.dim()) * k;
    SubAlgebra out;
    out.basis = rows.to_mat();

    std::vector<SparseProd> table(static_cast<size_t>(m) * m);
    std::vector<int64_t> prodv(len);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            A.mul(prodv.data(), rows.row(i).data(), rows.row(j).data());
            std::vector<int64_t> coords = coords_in_reduced_rows(F, out.basis, prodv.data());
            SparseProd sp;
            for (int t = 0; t < m; ++t) {
                const int64_t* c = coords.data() + static_cast<size_t>(t) * k;
                if (F.is_zero(c)) continue;
                sp.idx.push_back(t);
                sp.co.insert(sp.co.end(), c, c + k);
            }
            table[static_cast<size_t>(i) * m + j] = sp;
            table[static_cast<size_t>(j) * m + i] = std::move(sp);
        }
    std::vector<int64_t> onec = coords_in_reduced_rows(F, out.basis, unit);
    std::vector<std::string> labels(m);
    for (int i = 0; i < m; ++i) labels[i] = "e" + std::to_string(i);
    out.alg = CommAlgebra::build(F, m, std::move(table), std::move(onec), std::move(labels));
    return out;
}

std::vector<int64_t> QuotientAlgebra::project(const CommAlgebra& ambient,
                                              const int64_t* x) const {
    const FieldCtx& F = ambient.field();
    const int k = F.k();
    std::vector<int64_t> w(x, x + static_cast<size_t>(ambient.dim()) * k);
    ideal.reduce(w.data());
    std::vector<int64_t> out(comp_cols.size() * k);
    for (size_t t = 0; t < comp_cols.size(); ++t)
        std::copy(w.data() + static_cast<size_t>(comp_cols[t]) * k,
                  w.data() + static_cast<size_t>(comp_cols[t] + 1) * k,
                  out.data() + t * k);
    return out;
}

QuotientAlgebra quotient_algebra(const CommAlgebra& A, const RowBasis& I) {
    const FieldCtx& F = A.field();
    const int k = F.k();
    const int n = A.dim();
    if (!is_ideal(A, I)) throw InputError("quotient_algebra: subspace is not an ideal");
    QuotientAlgebra out;
    out.ideal = I;
    std::vector<bool> is_pivot(n, false);
    for (size_t r = 0; r < I.dim(); ++r) is_pivot[I.pivot(r)] = true;
    for (int j = 0; j < n; ++j)
        if (!is_pivot[j]) out.comp_cols.push_back(j);
    const int m = static_cast<int>(out.comp_cols.size());

    // induced products: pi(rep_i * rep_j), where rep_t is the basis vector
    // at complement column t (reduction mod I maps into the complement)
    const size_t len = static_cast<size_t>(n) * k;
    std::vector<SparseProd> table(static_cast<size_t>(m) * m);
    std::vector<int64_t> prodv(len);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            A.mul_basis(prodv.data(), out.comp_cols[i], A.basis_vec(out.comp_cols[j]).data());
            std::vector<int64_t> q = out.project(A, prodv.data());
            SparseProd sp;
            for (int t = 0; t < m; ++t) {
                const int64_t* c = q.data() + static_cast<size_t>(t) * k;
                if (F.is_zero(c)) continue;
                sp.idx.push_back(t);
                sp.co.insert(sp.co.end(), c, c + k);
            }
            table[static_cast<size_t>(i) * m + j] = sp;
            table[static_cast<size_t>(j) * m + i] = std::move(sp);
        }
    std::vector<int64_t> onec = out.project(A, A.one().data());
    std::vector<std::string> labels(m);
    for (int i = 0; i < m; ++i) labels[i] = A.label(out.comp_cols[i]) + "~";
    out.alg = CommAlgebra::build(F, m, std::move(table), std::move(onec), std::move(labels));
    return out;
}

bool element_nilpotency_check(const CommAlgebra& A, const std::vector<int64_t>& z,
                              const RowBasis& J, int64_t t) {
    if (!J.contains(z)) throw InputError("element_nilpotency_check: element not in the radical");
    if (t < 1) throw InputError("element_nilpotency_check: t must be >= 1");
    std::vector<int64_t> out(z.size());
    A.power(out.data(), z.data(), t);
    for (int64_t v : out)
        if (v != 0) return false;
    return true;
}

std::optional<int> nilpotency_p_exponent(const CommAlgebra& A, const std::vector<int64_t>& z) {
    const FieldCtx& F = A.field();
    int bound = ceil_log(F.p(), static_cast<int64_t>(A.dim())) + 1;
    std::vector<int64_t> w = z, w2(z.size());
    for (int t = 0; t <= bound; ++t) {
        bool zero = true;
        for (int64_t v : w)
            if (v != 0) {
                zero = false;
                break;
            }
        if (zero) return t;
        A.pow_p(w2.data(), w.data());
        std::swap(w, w2);
    }
    return std::nullopt;
}

}  // namespace zblock
