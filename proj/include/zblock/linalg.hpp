#pragma once

#include <optional>
#include <vector>

#include "zblock/field.hpp"

namespace zblock {

/// Dense row-major matrix over a FieldCtx; entries are k-limb field elements
/// stored flat so row operations touch contiguous memory.
class Mat {
public:
    Mat() = default;
    Mat(const FieldCtx& F, size_t rows, size_t cols)
        : F_(&F), nr_(rows), nc_(cols), d_(rows * cols * F.k(), 0) {}

    const FieldCtx& field() const { return *F_; }
    size_t rows() const { return nr_; }
    size_t cols() const { return nc_; }
    int64_t* at(size_t r, size_t c) { return d_.data() + (r * nc_ + c) * F_->k(); }
    const int64_t* at(size_t r, size_t c) const { return d_.data() + (r * nc_ + c) * F_->k(); }
    int64_t* row(size_t r) { return d_.data() + r * nc_ * F_->k(); }
    const int64_t* row(size_t r) const { return d_.data() + r * nc_ * F_->k(); }

private:
    const FieldCtx* F_ = nullptr;
    size_t nr_ = 0, nc_ = 0;
    std::vector<int64_t> d_;
};

/// Incrementally maintained row-reduced basis of a subspace of F^n.
/// Rows are kept fully reduced with leading coefficient 1, indexed by pivot
/// column, so membership tests and insertions are single reduction passes.
class RowBasis {
public:
    RowBasis() = default;
    RowBasis(const FieldCtx& F, size_t ncols)
        : F_(&F), nc_(ncols), row_of_pivot_(ncols, -1) {}

    size_t dim() const { return rows_.size(); }
    size_t ncols() const { return nc_; }
    const FieldCtx& field() const { return *F_; }
    const std::vector<int64_t>& row(size_t i) const { return rows_[i]; }
    int pivot(size_t i) const { return pivots_[i]; }
    const std::vector<int>& pivots() const { return pivots_; }
    bool has_pivot(size_t col) const { return row_of_pivot_[col] >= 0; }

    /// Reduces v (length ncols*k) in place against the basis.
    void reduce(int64_t* v) const;
    /// Reduces and inserts if independent. Returns true if the dimension grew.
    bool insert(const int64_t* v);
    bool insert(const std::vector<int64_t>& v) { return insert(v.data()); }
    bool contains(const std::vector<int64_t>& v) const;
    bool contains_basis(const RowBasis& other) const;
    bool same_space(const RowBasis& other) const;

    /// Inserts every row of the other basis.
    void merge(const RowBasis& other);

    Mat to_mat() const;

private:
    const FieldCtx* F_ = nullptr;
    size_t nc_ = 0;
    std::vector<std::vector<int64_t>> rows_;
    std::vector<int> pivots_;
    std::vector<int> row_of_pivot_;
};

/// RowBasis that additionally tracks coordinates of each stored row in terms
/// of the vectors originally inserted. Used to express elements in a given
/// spanning set (minimal polynomials, change of basis into a subalgebra).
class SpanSolver {
public:
    SpanSolver(const FieldCtx& F, size_t ncols) : F_(&F), nc_(ncols), row_of_pivot_(ncols, -1) {}

    size_t dim() const { return rows_.size(); }
    /// Inserts v as generator #index (coordinates refer to insertion order).
    /// Returns true if independent.
    bool insert(const int64_t* v);
    /// If v lies in the span, returns its coordinates over the inserted
    /// generators (length = number of insert() calls so far).
    std::optional<std::vector<int64_t>> coords(const int64_t* v) const;

private:
    const FieldCtx* F_ = nullptr;
    size_t nc_ = 0;
    size_t ngen_ = 0;
    std::vector<std::vector<int64_t>> rows_;    // reduced vectors
    std::vector<std::vector<int64_t>> combo_;   // combo_[i]: row i as combo of generators
    std::vector<int> pivots_;
    std::vector<int> row_of_pivot_;
};

}  // namespace zblock
