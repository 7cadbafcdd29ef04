// Cyclic one-sided ideals and the hom calculus on them: annihilators, the
// solution spaces B(x,y) = { b : L(x) b y = 0 }, the two hom-space dimension
// formulas, and the matrix endomorphism algebra M_B(x_1,...,x_n) built from
// coset representatives of B(x_r,x_s)/L(x_s).

#pragma once

#include "fdalg/algebra.hpp"

namespace fdalg {

enum class Side { left, right };

template <ScalarField F>
struct CyclicIdeal {
    const Algebra<F>* alg;
    std::vector<F> generator;
    Side side;
    Subspace<F> basis; // column space of the appropriate multiplication matrix
};

template <ScalarField F>
CyclicIdeal<F> make_cyclic_ideal(const Algebra<F>& A, const std::vector<F>& gen, Side side) {
    Matrix<F> m = side == Side::left ? A.right_mult_matrix(gen)   // Au = { a u }
                                     : A.left_mult_matrix(gen);   // uA = { u a }
    return {&A, gen, side, Subspace<F>::from_span(A.dim(), m.transpose())};
}

/// L(S) = { b : b s = 0 for all s in S }.
template <ScalarField F>
Subspace<F> left_annihilator(const Algebra<F>& A, const std::vector<std::vector<F>>& S) {
    Matrix<F> stacked(0, A.dim());
    for (const auto& s : S) stacked = stacked.vstack(A.right_mult_matrix(s));
    if (S.empty()) return Subspace<F>::full(A.dim());
    return Subspace<F>::from_span(A.dim(), stacked.nullspace());
}

/// R(S) = { b : s b = 0 for all s in S }.
template <ScalarField F>
Subspace<F> right_annihilator(const Algebra<F>& A, const std::vector<std::vector<F>>& S) {
    Matrix<F> stacked(0, A.dim());
    for (const auto& s : S) stacked = stacked.vstack(A.left_mult_matrix(s));
    if (S.empty()) return Subspace<F>::full(A.dim());
    return Subspace<F>::from_span(A.dim(), stacked.nullspace());
}

template <ScalarField F>
Subspace<F> left_annihilator(const Algebra<F>& A, const Subspace<F>& S) {
    std::vector<std::vector<F>> gens;
    for (std::size_t i = 0; i < S.dim(); ++i) gens.push_back(S.basis_vector(i));
    return left_annihilator(A, gens);
}

template <ScalarField F>
Subspace<F> right_annihilator(const Algebra<F>& A, const Subspace<F>& S) {
    std::vector<std::vector<F>> gens;
    for (std::size_t i = 0; i < S.dim(); ++i) gens.push_back(S.basis_vector(i));
    return right_annihilator(A, gens);
}

/// B(x,y) = { b : L(x) b y = 0 }.
template <ScalarField F>
Subspace<F> b_space(const Algebra<F>& A, const std::vector<F>& x, const std::vector<F>& y) {
    Subspace<F> lx = left_annihilator(A, std::vector<std::vector<F>>{x});
    Matrix<F> ry = A.right_mult_matrix(y);
    Matrix<F> stacked(0, A.dim());
    for (std::size_t i = 0; i < lx.dim(); ++i)
        stacked = stacked.vstack(ry * A.left_mult_matrix(lx.basis_vector(i)));
    if (lx.dim() == 0) return Subspace<F>::full(A.dim());
    return Subspace<F>::from_span(A.dim(), stacked.nullspace());
}

/// Hom(Bx, By) presented as the quotient B(x,y)/L(y) with canonical coset
/// representatives (echelon complement of L(y) inside B(x,y)).
template <ScalarField F>
struct HomSpaceCoset {
    Subspace<F> numerator;   // B(x,y)
    Subspace<F> denominator; // L(y)
    Matrix<F> representatives;
};

template <ScalarField F>
HomSpaceCoset<F> hom_space_coset(const Algebra<F>& A, const std::vector<F>& x,
                                 const std::vector<F>& y) {
    Subspace<F> num = b_space(A, x, y);
    Subspace<F> den = left_annihilator(A, std::vector<std::vector<F>>{y});
    if (!num.contains(den))
        throw std::logic_error("hom_space_coset: L(y) not inside B(x,y)");
    return {num, den, den.complement_in(num)};
}

/// dim Hom(Bx, By) via theta: dim B(x,y) - dim L(y).
template <ScalarField F>
long hom_dim_theta(const Algebra<F>& A, const std::vector<F>& x, const std::vector<F>& y) {
    return static_cast<long>(b_space(A, x, y).dim()) -
           static_cast<long>(left_annihilator(A, std::vector<std::vector<F>>{y}).dim());
}

/// dim Hom(Bx, By) via phi: dim (R(L(x)) cap By).
template <ScalarField F>
long hom_dim_phi(const Algebra<F>& A, const std::vector<F>& x, const std::vector<F>& y) {
    Subspace<F> rlx = right_annihilator(A, left_annihilator(A, std::vector<std::vector<F>>{x}));
    Subspace<F> by = make_cyclic_ideal(A, y, Side::left).basis;
    return static_cast<long>(rlx.intersect(by).dim());
}

/// The module homomorphism Bx -> By attached to a representative b (sends
/// a x to a b y). Returns the matrix in the canonical bases of Bx and By.
template <ScalarField F>
Matrix<F> representative_to_map(const Algebra<F>& A, const std::vector<F>& x,
                                const std::vector<F>& y, const std::vector<F>& b) {
    Subspace<F> bx = make_cyclic_ideal(A, x, Side::left).basis;
    Subspace<F> by = make_cyclic_ideal(A, y, Side::left).basis;
    Matrix<F> rx = A.right_mult_matrix(x);
    std::vector<F> by_target = A.multiply(b, y);
    Matrix<F> r_by = A.right_mult_matrix(by_target);
    Matrix<F> out(by.dim(), bx.dim());
    for (std::size_t c = 0; c < bx.dim(); ++c) {
        auto a = rx.solve(bx.basis_vector(c)); // some a with a x = basis vector
        if (!a) throw std::logic_error("representative_to_map: generator preimage missing");
        auto coords = by.coordinates(r_by.apply(*a)); // a b y in By coordinates
        if (!coords) throw std::logic_error("representative_to_map: image left By");
        for (std::size_t r = 0; r < by.dim(); ++r) out.at(r, c) = (*coords)[r];
    }
    return out;
}

// ---- matrix endomorphism algebra -------------------------------------------

template <ScalarField F>
struct MatrixEndoAlgebra {
    Algebra<F> algebra;
    std::size_t blocks;
    // basis index -> (row block, col block, representative vector in B)
    std::vector<std::tuple<std::size_t, std::size_t, std::vector<F>>> basis_info;
};

/// M_B(x_1,...,x_n): block (r,s) carries B(x_r,x_s)/L(x_s); multiplication is
/// the matrix product with entrywise products reduced modulo L(x_t). The
/// block-diagonal identity cosets are the idempotents. Isomorphic to
/// End(Bx_1 + ... + Bx_n).
template <ScalarField F>
MatrixEndoAlgebra<F> matrix_endomorphism_algebra(const Algebra<F>& B,
                                                 const std::vector<std::vector<F>>& xs,
                                                 const std::string& name) {
    std::size_t nb = xs.size();
    std::vector<std::vector<HomSpaceCoset<F>>> cells(nb);
    std::vector<std::vector<Subspace<F>>> rep_spaces(nb, std::vector<Subspace<F>>(nb, Subspace<F>(B.dim())));
    std::vector<std::vector<std::size_t>> offset(nb, std::vector<std::size_t>(nb, 0));
    std::size_t dim = 0;
    std::vector<std::tuple<std::size_t, std::size_t, std::vector<F>>> info;
    std::vector<std::string> labels;
    for (std::size_t r = 0; r < nb; ++r) {
        for (std::size_t s = 0; s < nb; ++s) {
            cells[r].push_back(hom_space_coset(B, xs[r], xs[s]));
            rep_spaces[r][s] = Subspace<F>::from_span(B.dim(), cells[r][s].representatives);
            offset[r][s] = dim;
            const Matrix<F>& reps = cells[r][s].representatives;
            for (std::size_t t = 0; t < reps.rows(); ++t) {
                info.emplace_back(r, s, reps.row(t));
                labels.push_back("(" + std::to_string(r) + "," + std::to_string(s) + "," +
                                 std::to_string(t) + ")");
            }
            dim += reps.rows();
        }
    }

    // coset coordinates of an element of B(x_r,x_s) relative to the stored
    // representatives: reduce mod L(x_s), then read off coordinates in the
    // complement (complement rows are RREF rows of the numerator).
    auto coset_coords = [&](std::size_t r, std::size_t s, const std::vector<F>& w) {
        std::vector<F> red = cells[r][s].denominator.reduce(w);
        auto coords = rep_spaces[r][s].coordinates(red);
        if (!coords) throw std::logic_error("matrix_endomorphism_algebra: reduction left the cell");
        return *coords;
    };

    std::vector<StructureTriple<F>> triples;
    for (std::size_t a = 0; a < dim; ++a) {
        const auto& [r1, s1, rep1] = info[a];
        for (std::size_t b = 0; b < dim; ++b) {
            const auto& [r2, s2, rep2] = info[b];
            if (s1 != r2) continue;
            std::vector<F> w = B.multiply(rep1, rep2);
            std::vector<F> coords = coset_coords(r1, s2, w);
            for (std::size_t t = 0; t < coords.size(); ++t)
                if (!coords[t].is_zero())
                    triples.push_back({a, b, offset[r1][s2] + t, coords[t]});
        }
    }

    std::vector<F> unit(dim, F::zero());
    std::vector<std::vector<F>> idems;
    for (std::size_t r = 0; r < nb; ++r) {
        std::vector<F> e(dim, F::zero());
        std::vector<F> coords = coset_coords(r, r, B.unit());
        for (std::size_t t = 0; t < coords.size(); ++t) {
            e[offset[r][r] + t] = coords[t];
            unit[offset[r][r] + t] += coords[t];
        }
        idems.push_back(std::move(e));
    }

    Algebra<F> out(name, dim, std::move(labels), std::move(unit), triples,
                   std::move(idems), std::nullopt, B.parameter());
    require_sound(out);
    return {std::move(out), nb, std::move(info)};
}

} // namespace fdalg
