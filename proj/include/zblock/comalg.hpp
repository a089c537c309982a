#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zblock/field.hpp"
#include "zblock/linalg.hpp"

namespace zblock {

/// One sparse structure-constant row: b_i * b_j = sum co[t] * b_{idx[t]}.
struct SparseProd {
    std::vector<int32_t> idx;
    std::vector<int64_t> co;  // field elements, stride k
};

/// Finite-dimensional commutative associative unital algebra over GF(p^k),
/// given by structure constants on a distinguished basis. Construction
/// verifies commutativity, the identity, and associativity (exhaustively up
/// to dimension 40, sampled above). Immutable afterwards; all operations
/// are pure.
class CommAlgebra {
public:
    CommAlgebra() = default;

    static CommAlgebra build(const FieldCtx& F, int n, std::vector<SparseProd> table,
                             std::vector<int64_t> identity, std::vector<std::string> labels);

    int dim() const { return n_; }
    const FieldCtx& field() const { return *F_; }
    const SparseProd& prod(int i, int j) const { return tab_[static_cast<size_t>(i) * n_ + j]; }
    const std::vector<int64_t>& one() const { return one_; }
    const std::string& label(int i) const { return labels_[i]; }

    /// out = x * y (out must not alias x or y).
    void mul(int64_t* out, const int64_t* x, const int64_t* y) const;
    /// out = b_i * y.
    void mul_basis(int64_t* out, int i, const int64_t* y) const;
    /// out = x^p (uses the cached p-th powers of the basis; char-p linearity).
    void pow_p(int64_t* out, const int64_t* x) const;
    /// out = x^e, e >= 1.
    void power(int64_t* out, const int64_t* x, int64_t e) const;

    std::vector<int64_t> mul(const std::vector<int64_t>& x, const std::vector<int64_t>& y) const {
        std::vector<int64_t> out(static_cast<size_t>(n_) * F_->k());
        mul(out.data(), x.data(), y.data());
        return out;
    }

    /// Basis vector as a dense coefficient vector.
    std::vector<int64_t> basis_vec(int i) const;

private:
    const FieldCtx* F_ = nullptr;
    int n_ = 0;
    std::vector<SparseProd> tab_;
    std::vector<int64_t> one_;
    std::vector<std::string> labels_;
    std::vector<std::vector<int64_t>> phi_;  // phi_[i] = b_i^p, dense
};

/// Row-reduced basis of a subspace, tagged by whether the ideal property has
/// been verified against the ambient algebra.
struct IdealBasis {
    RowBasis rows;
    bool ideal_checked = false;

    size_t dim() const { return rows.dim(); }
};

/// Primitive idempotent block of a commutative algebra, in ambient
/// coordinates: e, a basis of Ae, and the residue eigenvalue of every
/// ambient basis element on the piece.
struct LocalPiece {
    std::vector<int64_t> idempotent;  // n*k limbs
    RowBasis rows;                    // basis of A*e
    std::vector<Fel> eigen;           // eigen[i] = lambda(b_i), size n
    int dim() const { return static_cast<int>(rows.dim()); }
};

/// Splits A into local pieces by factoring minimal polynomials of basis
/// elements (tie-break: lowest splittable index) and recursing on the
/// coprime-power idempotents. Requires the field to split A; a surviving
/// irreducible factor of degree >= 2 at a leaf throws SplitFieldError.
std::vector<LocalPiece> decompose_local(const CommAlgebra& A);

/// J(A e) = span{ b_i e - lambda_i e }, row-reduced; nilpotency of every
/// returned row is verified.
IdealBasis radical_of_piece(const CommAlgebra& A, const LocalPiece& piece);
/// Direct sum of the piece radicals = J(A).
IdealBasis radical_all(const CommAlgebra& A, const std::vector<LocalPiece>& pieces);

struct LoewyResult {
    int length = 1;          // least L >= 1 with J^L = 0
    std::vector<int> dims;   // dims[t] = dim J^t for t = 0..L (dims[0] = algebra/piece dim)
};

/// Powers of a nilpotent ideal J until zero. dim0 is the dimension reported
/// for J^0 (the algebra or piece containing J). When J is known to be
/// generated as an ideal by few elements (augmentation ideals of group
/// algebras), passing them makes each power step cost |gens| products per
/// basis vector instead of dim(J); the computed ideals are identical.
/// Throws Error if the power dimensions stop decreasing before reaching 0.
LoewyResult loewy_series(const CommAlgebra& A, const RowBasis& J, int dim0,
                         const std::vector<std::vector<int64_t>>* ideal_gens = nullptr);
int loewy_length(const CommAlgebra& A, const RowBasis& J, int dim0);

/// span{ x*y : x in I, y in K }, row-reduced.
IdealBasis ideal_product(const CommAlgebra& A, const RowBasis& I, const RowBasis& K);
/// Checks b_i * x in I for every basis element and basis vector of I.
bool is_ideal(const CommAlgebra& A, const RowBasis& I);

/// Minimal polynomial of x acting inside the unital subalgebra with identity
/// `unit` (Krylov iteration; the first linear dependence of 1, x, x^2, ...).
Poly minimal_polynomial(const CommAlgebra& A, const int64_t* x, const int64_t* unit);

/// Horner evaluation f(x), with the constant term mapped to c*unit.
std::vector<int64_t> eval_poly(const CommAlgebra& A, const Poly& f, const int64_t* x,
                               const int64_t* unit);

/// A as a standalone algebra restricted to a multiplicatively closed
/// subspace (a piece A e): induced structure constants on the row basis.
struct SubAlgebra {
    CommAlgebra alg;
    Mat basis;  // alg basis index -> ambient row vector
    /// Ambient vector -> coordinates over `basis` rows (must lie in the span).
    std::vector<int64_t> to_local(const CommAlgebra& ambient, const int64_t* x) const;
};
SubAlgebra materialize(const CommAlgebra& A, const RowBasis& rows, const int64_t* unit);

/// Quotient A/I on the complement of the pivot columns of I.
struct QuotientAlgebra {
    CommAlgebra alg;
    std::vector<int> comp_cols;  // quotient basis index -> ambient column
    RowBasis ideal;              // copy of I, for projecting
    /// pi(x): reduce mod I, then read complement coordinates.
    std::vector<int64_t> project(const CommAlgebra& ambient, const int64_t* x) const;
};
QuotientAlgebra quotient_algebra(const CommAlgebra& A, const RowBasis& I);

/// z^t == 0, by repeated squaring; z must lie in J (checked).
bool element_nilpotency_check(const CommAlgebra& A, const std::vector<int64_t>& z,
                              const RowBasis& J, int64_t t);

/// Least t >= 0 with z^{p^t} = 0, or nullopt if z is not nilpotent within
/// p^t <= bound iterations.
std::optional<int> nilpotency_p_exponent(const CommAlgebra& A, const std::vector<int64_t>& z);

}  // namespace zblock
