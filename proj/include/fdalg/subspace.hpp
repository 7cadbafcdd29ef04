// Subspaces of F^n stored as canonical RREF basis matrices (rows = basis).
// Two subspaces are equal iff their stored matrices are identical.

#pragma once

#include "fdalg/matrix.hpp"

#include <optional>

namespace fdalg {

template <ScalarField F>
class Subspace {
public:
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

    /// Canonicalizes the row space of `span`.
    static Subspace from_span(std::size_t ambient, Matrix<F> span) {
        Subspace s(ambient);
        std::vector<std::size_t> pivots = span.rref();
        Matrix<F> b(pivots.size(), ambient);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            b.set_row(i, span.row(i));
        s.basis_ = std::move(b);
        s.pivots_ = std::move(pivots);
        return s;
    }

    static Subspace full(std::size_t ambient) {
        return from_span(ambient, Matrix<F>::identity(ambient));
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix<F>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    std::vector<F> basis_vector(std::size_t i) const { return basis_.row(i); }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    /// Reduces v against the basis; the residual is zero iff v lies in the span.
    std::vector<F> reduce(std::vector<F> v) const {
        for (std::size_t i = 0; i < basis_.rows(); ++i) {
            const F& c = v[pivots_[i]];
            if (c.is_zero()) continue;
            F f = c; // pivot entries are 1
            for (std::size_t j = 0; j < ambient_; ++j)
                v[j] = v[j] - f * basis_.at(i, j);
        }
        return v;
    }

    bool contains(const std::vector<F>& v) const {
        for (const F& x : reduce(v))
            if (!x.is_zero()) return false;
        return true;
    }

    bool contains(const Subspace& other) const {
        for (std::size_t i = 0; i < other.dim(); ++i)
            if (!contains(other.basis_vector(i))) return false;
        return true;
    }

    /// Coordinates of v in the stored basis, or nullopt if v is outside.
    std::optional<std::vector<F>> coordinates(const std::vector<F>& v) const {
        std::vector<F> coords(dim());
        for (std::size_t i = 0; i < dim(); ++i) coords[i] = v[pivots_[i]];
        if (!contains(v)) return std::nullopt;
        return coords;
    }

    /// Vector with given coordinates in the stored basis.
    std::vector<F> from_coordinates(const std::vector<F>& coords) const {
        std::vector<F> v(ambient_, F::zero());
        for (std::size_t i = 0; i < dim(); ++i) {
            if (coords[i].is_zero()) continue;
            for (std::size_t j = 0; j < ambient_; ++j)
                v[j] = v[j] + coords[i] * basis_.at(i, j);
        }
        return v;
    }

    Subspace sum_with(const Subspace& other) const {
        return from_span(ambient_, basis_.vstack(other.basis_));
    }

    Subspace intersect(const Subspace& other) const {
        // (x, y) with x^T U + y^T W = 0 parameterize U-row-combinations in
        // the intersection up to sign.
        Matrix<F> stacked = basis_.vstack(other.basis_); // (a+b) x n
        Matrix<F> ker = stacked.transpose().nullspace(); // rows (x | y)
        Matrix<F> vs(ker.rows(), ambient_);
        for (std::size_t r = 0; r < ker.rows(); ++r)
            for (std::size_t i = 0; i < dim(); ++i) {
                const F& xi = ker.at(r, i);
                if (xi.is_zero()) continue;
                for (std::size_t j = 0; j < ambient_; ++j)
                    vs.at(r, j) = vs.at(r, j) + xi * basis_.at(i, j);
            }
        return from_span(ambient_, vs);
    }

    /// Canonical direct complement of `this` inside `super`: the RREF rows of
    /// `super` whose pivot column is not a pivot column of `this`.
    /// Requires this ⊆ super.
    Matrix<F> complement_in(const Subspace& super) const {
        std::vector<bool> mine(ambient_, false);
        for (std::size_t c : pivots_) mine[c] = true;
        Matrix<F> rep(super.dim() - dim(), ambient_);
        std::size_t k = 0;
        for (std::size_t i = 0; i < super.dim(); ++i)
            if (!mine[super.pivots_[i]]) rep.set_row(k++, super.basis_vector(i));
        assert(k == rep.rows());
        return rep;
    }

private:
    std::size_t ambient_;
    Matrix<F> basis_;
    std::vector<std::size_t> pivots_;
};

} // namespace fdalg
