// Dense exact matrices with Gaussian elimination. Pivoting is deterministic:
// columns are scanned left to right and the first row with a nonzero entry is
// taken, so reduced echelon forms are canonical for a given row space.

#pragma once

#include "fdalg/scalar.hpp"

#include <cassert>
#include <optional>
#include <vector>

namespace fdalg {

template <ScalarField F>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, F::zero()) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<F> flat)
        : rows_(rows), cols_(cols), a_(std::move(flat)) {
        assert(a_.size() == rows_ * cols_);
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = F::one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    F& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const F& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    std::vector<F> row(std::size_t r) const {
        return std::vector<F>(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
    }
    std::vector<F> col(std::size_t c) const {
        std::vector<F> v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
        return v;
    }
    void set_row(std::size_t r, const std::vector<F>& v) {
        assert(v.size() == cols_);
        for (std::size_t c = 0; c < cols_; ++c) at(r, c) = v[c];
    }

    const std::vector<F>& flat() const { return a_; }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

    bool is_zero() const {
        for (const F& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        assert(x.rows_ == y.rows_ && x.cols_ == y.cols_);
        Matrix r(x.rows_, x.cols_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        assert(x.rows_ == y.rows_ && x.cols_ == y.cols_);
        Matrix r(x.rows_, x.cols_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
        return r;
    }
    friend Matrix operator*(const F& s, const Matrix& x) {
        Matrix r(x.rows_, x.cols_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = s * x.a_[i];
        return r;
    }
    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        assert(x.cols_ == y.rows_);
        Matrix r(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const F& xik = x.at(i, k);
                if (xik.is_zero()) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) {
                    const F& ykj = y.at(k, j);
                    if (!ykj.is_zero()) r.at(i, j) += xik * ykj;
                }
            }
        return r;
    }

    std::vector<F> apply(const std::vector<F>& v) const {
        assert(v.size() == cols_);
        std::vector<F> r(rows_, F::zero());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    Matrix vstack(const Matrix& below) const {
        if (rows_ == 0) return below;
        if (below.rows_ == 0) return *this;
        assert(cols_ == below.cols_);
        Matrix r(rows_ + below.rows_, cols_);
        std::copy(a_.begin(), a_.end(), r.a_.begin());
        std::copy(below.a_.begin(), below.a_.end(), r.a_.begin() + a_.size());
        return r;
    }
    Matrix hstack(const Matrix& right) const {
        if (cols_ == 0) return right;
        if (right.cols_ == 0) return *this;
        assert(rows_ == right.rows_);
        Matrix r(rows_, cols_ + right.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
            for (std::size_t j = 0; j < right.cols_; ++j) r.at(i, cols_ + j) = right.at(i, j);
        }
        return r;
    }

    /// In-place reduction to reduced row echelon form; returns pivot columns.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t p = r;
            while (p < rows_ && at(p, c).is_zero()) ++p;
            if (p == rows_) continue;
            if (p != r)
                for (std::size_t j = c; j < cols_; ++j) std::swap(at(r, j), at(p, j));
            F inv = F::one() / at(r, c);
            for (std::size_t j = c; j < cols_; ++j) at(r, j) = at(r, j) * inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || at(i, c).is_zero()) continue;
                F f = at(i, c);
                for (std::size_t j = c; j < cols_; ++j) at(i, j) = at(i, j) - f * at(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    std::size_t rank() const {
        Matrix m = *this;
        return m.rref().size();
    }

    /// Basis of the right kernel {v : A v = 0}, rows of the result, in RREF.
    Matrix nullspace() const {
        Matrix m = *this;
        std::vector<std::size_t> pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (std::size_t c : pivots) is_pivot[c] = true;
        std::vector<std::size_t> free_cols;
        for (std::size_t c = 0; c < cols_; ++c)
            if (!is_pivot[c]) free_cols.push_back(c);
        Matrix ker(free_cols.size(), cols_);
        for (std::size_t k = 0; k < free_cols.size(); ++k) {
            std::size_t fc = free_cols[k];
            ker.at(k, fc) = F::one();
            for (std::size_t pi = 0; pi < pivots.size(); ++pi)
                ker.at(k, pivots[pi]) = -m.at(pi, fc);
        }
        ker.rref(); // canonical basis of the kernel
        return ker;
    }

    /// One solution of A x = b, if any.
    std::optional<std::vector<F>> solve(const std::vector<F>& b) const {
        assert(b.size() == rows_);
        Matrix aug(rows_, cols_ + 1);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_) = b[i];
        }
        std::vector<std::size_t> pivots = aug.rref();
        if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
        std::vector<F> x(cols_, F::zero());
        for (std::size_t pi = 0; pi < pivots.size(); ++pi) x[pivots[pi]] = aug.at(pi, cols_);
        return x;
    }

    F det() const {
        assert(rows_ == cols_);
        Matrix m = *this;
        F d = F::one();
        for (std::size_t c = 0; c < cols_; ++c) {
            std::size_t p = c;
            while (p < rows_ && m.at(p, c).is_zero()) ++p;
            if (p == rows_) return F::zero();
            if (p != c) {
                for (std::size_t j = c; j < cols_; ++j) std::swap(m.at(c, j), m.at(p, j));
                d = -d;
            }
            d = d * m.at(c, c);
            F inv = F::one() / m.at(c, c);
            for (std::size_t i = c + 1; i < rows_; ++i) {
                if (m.at(i, c).is_zero()) continue;
                F f = m.at(i, c) * inv;
                for (std::size_t j = c; j < cols_; ++j) m.at(i, j) = m.at(i, j) - f * m.at(c, j);
            }
        }
        return d;
    }

    std::optional<Matrix> inverse() const {
        assert(rows_ == cols_);
        Matrix aug = hstack(identity(rows_));
        std::vector<std::size_t> pivots = aug.rref();
        if (pivots.size() != rows_) return std::nullopt;
        for (std::size_t i = 0; i < rows_; ++i)
            if (pivots[i] != i) return std::nullopt;
        Matrix inv(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
        return inv;
    }

private:
    std::size_t rows_, cols_;
    std::vector<F> a_;
};

} // namespace fdalg
