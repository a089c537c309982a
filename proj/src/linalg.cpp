#include "zblock/linalg.hpp"

#include <cassert>

namespace zblock {

namespace {

// row -= c * other, over the span [0, ncols)
void axpy_sub(const FieldCtx& F, int64_t* row, const int64_t* c, const int64_t* other,
              size_t ncols) {
    const int k = F.k();
    if (k == 1) {
        const int64_t p = F.p();
        const int64_t cv = c[0];
        for (size_t j = 0; j < ncols; ++j) {
            if (other[j] == 0) continue;
            int64_t t = (row[j] - cv * other[j]) % p;
            row[j] = t < 0 ? t + p : t;
        }
        return;
    }
    int64_t tmp[16];
    for (size_t j = 0; j < ncols; ++j) {
        const int64_t* o = other + j * k;
        if (F.is_zero(o)) continue;
        F.mul(tmp, c, o);
        F.sub_inplace(row + j * k, tmp);
    }
}

void scale_row(const FieldCtx& F, int64_t* row, const int64_t* c, size_t ncols) {
    const int k = F.k();
    if (k == 1) {
        const int64_t p = F.p();
        const int64_t cv = c[0];
        for (size_t j = 0; j < ncols; ++j) row[j] = (row[j] * cv) % p;
        return;
    }
    for (size_t j = 0; j < ncols; ++j) F.mul(row + j * k, row + j * k, c);
}

int leading_col(const FieldCtx& F, const int64_t* v, size_t ncols) {
    const int k = F.k();
    for (size_t j = 0; j < ncols; ++j)
        if (!F.is_zero(v + j * k)) return static_cast<int>(j);
    return -1;
}

}  // namespace

void RowBasis::reduce(int64_t* v) const {
    const int k = F_->k();
    for (size_t i = 0; i < rows_.size(); ++i) {
        const int64_t* c = v + static_cast<size_t>(pivots_[i]) * k;
        if (F_->is_zero(c)) continue;
        int64_t cv[16];
        std::copy(c, c + k, cv);
        axpy_sub(*F_, v, cv, rows_[i].data(), nc_);
    }
}

bool RowBasis::insert(const int64_t* v) {
    const int k = F_->k();
    std::vector<int64_t> w(v, v + nc_ * k);
    reduce(w.data());
    int lead = leading_col(*F_, w.data(), nc_);
    if (lead < 0) return false;
    int64_t inv[16];
    F_->inv(inv, w.data() + static_cast<size_t>(lead) * k);
    scale_row(*F_, w.data(), inv, nc_);
    // back-substitute into existing rows to keep the basis fully reduced
    for (size_t i = 0; i < rows_.size(); ++i) {
        int64_t* c = rows_[i].data() + static_cast<size_t>(lead) * k;
        if (F_->is_zero(c)) continue;
        int64_t cv[16];
        std::copy(c, c + k, cv);
        axpy_sub(*F_, rows_[i].data(), cv, w.data(), nc_);
    }
    rows_.push_back(std::move(w));
    pivots_.push_back(lead);
    row_of_pivot_[lead] = static_cast<int>(rows_.size()) - 1;
    return true;
}

bool RowBasis::contains(const std::vector<int64_t>& v) const {
    std::vector<int64_t> w = v;
    reduce(w.data());
    return leading_col(*F_, w.data(), nc_) < 0;
}

bool RowBasis::contains_basis(const RowBasis& other) const {
    for (size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.row(i))) return false;
    return true;
}

bool RowBasis::same_space(const RowBasis& other) const {
    return dim() == other.dim() && contains_basis(other);
}

void RowBasis::merge(const RowBasis& other) {
    for (size_t i = 0; i < other.dim(); ++i) insert(other.row(i));
}

Mat RowBasis::to_mat() const {
    Mat m(*F_, rows_.size(), nc_);
    for (size_t i = 0; i < rows_.size(); ++i)
        std::copy(rows_[i].begin(), rows_[i].end(), m.row(i));
    return m;
}

bool SpanSolver::insert(const int64_t* v) {
    const int k = F_->k();
    std::vector<int64_t> w(v, v + nc_ * k);
    std::vector<int64_t> combo(static_cast<size_t>(ngen_ + 1) * k, 0);
    F_->set_one(combo.data() + ngen_ * k);
    ++ngen_;
    // grow stored combos to the new generator count
    for (auto& c : combo_) c.resize(static_cast<size_t>(ngen_) * k, 0);

    for (size_t i = 0; i < rows_.size(); ++i) {
        const int64_t* c = w.data() + static_cast<size_t>(pivots_[i]) * k;
        if (F_->is_zero(c)) continue;
        int64_t cv[16];
        std::copy(c, c + k, cv);
        axpy_sub(*F_, w.data(), cv, rows_[i].data(), nc_);
        axpy_sub(*F_, combo.data(), cv, combo_[i].data(), ngen_);
    }
    int lead = leading_col(*F_, w.data(), nc_);
    if (lead < 0) return false;
    int64_t inv[16];
    F_->inv(inv, w.data() + static_cast<size_t>(lead) * k);
    scale_row(*F_, w.data(), inv, nc_);
    scale_row(*F_, combo.data(), inv, ngen_);
    rows_.push_back(std::move(w));
    combo_.push_back(std::move(combo));
    pivots_.push_back(lead);
    row_of_pivot_[lead] = static_cast<int>(rows_.size()) - 1;
    return true;
}

std::optional<std::vector<int64_t>> SpanSolver::coords(const int64_t* v) const {
    const int k = F_->k();
    std::vector<int64_t> w(v, v + nc_ * k);
    std::vector<int64_t> combo(static_cast<size_t>(ngen_) * k, 0);
    for (size_t i = 0; i < rows_.size(); ++i) {
        const int64_t* c = w.data() + static_cast<size_t>(pivots_[i]) * k;
        if (F_->is_zero(c)) continue;
        int64_t cv[16];
        std::copy(c, c + k, cv);
        axpy_sub(*F_, w.data(), cv, rows_[i].data(), nc_);
        // combo accumulates +c * combo_[i]
        int64_t tmp[16];
        const int64_t* src = combo_[i].data();
        for (size_t j = 0; j < ngen_; ++j) {
            if (F_->is_zero(src + j * k)) continue;
            F_->mul(tmp, cv, src + j * k);
            F_->add_inplace(combo.data() + j * k, tmp);
        }
    }
    if (leading_col(*F_, w.data(), nc_) >= 0) return std::nullopt;
    return combo;
}

}  // namespace zblock
