#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"

namespace ila {

// Dense row-major matrix over an exact field. Only what the space kernel
// needs: row reduction, null space, solving.
template <Field F>
class Mat {
  public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, F::zero()) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    F& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const F& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    void append_row(const std::vector<F>& row) {
        if (row.size() != cols_) throw Error("row length mismatch");
        a_.insert(a_.end(), row.begin(), row.end());
        ++rows_;
    }

    std::vector<F> row(std::size_t r) const {
        return std::vector<F>(a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                              a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    }

    bool operator==(const Mat&) const = default;

    // In-place reduced row echelon form. Returns the pivot column of each
    // surviving row; zero rows are dropped.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t sel = rows_;
            for (std::size_t i = r; i < rows_; ++i) {
                if (!at(i, c).is_zero()) {
                    sel = i;
                    break;
                }
            }
            if (sel == rows_) continue;
            swap_rows(sel, r);
            F inv = at(r, c).inv();
            for (std::size_t j = c; j < cols_; ++j) at(r, j) = at(r, j) * inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || at(i, c).is_zero()) continue;
                F f = at(i, c);
                for (std::size_t j = c; j < cols_; ++j) at(i, j) = at(i, j) - f * at(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        truncate_rows(r);
        return pivots;
    }

    // Null space of this matrix (as row space of the returned matrix),
    // computed from the RREF in the canonical free-variable basis.
    Mat null_space() const {
        Mat m = *this;
        std::vector<std::size_t> pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (std::size_t c : pivots) is_pivot[c] = true;
        Mat out(0, cols_);
        for (std::size_t c = 0; c < cols_; ++c) {
            if (is_pivot[c]) continue;
            std::vector<F> v(cols_, F::zero());
            v[c] = F::one();
            for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m.at(i, c);
            out.append_row(v);
        }
        return out;
    }

    std::size_t rank() const {
        Mat m = *this;
        return m.rref().size();
    }

  private:
    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
    }
    void truncate_rows(std::size_t r) {
        a_.resize(r * cols_);
        rows_ = r;
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F> a_;
};

// Reduces v against an RREF basis in place; returns true when v reduces to 0,
// i.e. v lies in the row space.
template <Field F>
bool reduce_against(std::vector<F>& v, const Mat<F>& rref_basis, const std::vector<std::size_t>& pivots) {
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        const F& coef = v[pivots[i]];
        if (coef.is_zero()) continue;
        F f = coef;
        for (std::size_t c = 0; c < rref_basis.cols(); ++c)
            v[c] = v[c] - f * rref_basis.at(i, c);
    }
    for (const F& x : v)
        if (!x.is_zero()) return false;
    return true;
}

// Solves x * A = b for one row vector x (A given by rows); returns {found, x}.
template <Field F>
std::pair<bool, std::vector<F>> solve_left(const Mat<F>& a, const std::vector<F>& b) {
    // Transpose to solve A^T x^T = b^T by elimination on an augmented matrix.
    std::size_t n = a.rows(), m = a.cols();
    Mat<F> aug(m, n + 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(j, i);
        aug.at(i, n) = b[i];
    }
    std::vector<std::size_t> pivots = aug.rref();
    std::vector<F> x(n, F::zero());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == n) return {false, {}};  // inconsistent
        x[pivots[i]] = aug.at(i, n);
    }
    return {true, x};
}

}  // namespace ila
