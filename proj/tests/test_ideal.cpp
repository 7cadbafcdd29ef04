#include "fdalg/liu_schulz.hpp"

#include <doctest.h>

using namespace fdalg;
using R = Rat;

TEST_CASE("annihilators of the u_j") {
    LiuSchulzContext<R> ctx(R(2));
    const Algebra<R>& A = ctx.algebra();
    for (long j : {-3L, -1L, 0L, 2L, 6L}) {
        // L(u_j) = I_{j+1} and R(u_{j+1}) = J_j
        CHECK(left_annihilator(A, {ctx.u(j)}) == ctx.ideal(j + 1, Side::left).basis);
        CHECK(right_annihilator(A, {ctx.u(j + 1)}) == ctx.ideal(j, Side::right).basis);
    }
    CHECK(left_annihilator(A, {A.unit()}).dim() == 0);
    CHECK(right_annihilator(A, {A.unit()}).dim() == 0);
    // annihilator of the empty set is everything
    CHECK(left_annihilator(A, std::vector<std::vector<R>>{}).dim() == 8);
}

TEST_CASE("B(x,y) spaces match the printed case split") {
    LiuSchulzContext<R> ctx(R(2));
    const Algebra<R>& A = ctx.algebra();

    // A(1, u_i) = A and A(u_i, 1) = J_i
    for (long i : {-2L, 0L, 3L}) {
        CHECK(b_space(A, A.unit(), ctx.u(i)).dim() == 8);
        CHECK(b_space(A, ctx.u(i), A.unit()) == ctx.ideal(i, Side::right).basis);
    }

    // diagonal: A(u_j, u_j) = C, dimension 7
    for (long j : {-1L, 0L, 4L}) {
        Subspace<R> b = b_space(A, ctx.u(j), ctx.u(j));
        CHECK(b.dim() == 7);
        CHECK(b == ctx.C_space());
    }
    // j = i - 2: A(u_j, u_{j+2}) = S, dimension 7 (x0 joins the generic part)
    for (long j : {-2L, 0L, 3L}) {
        Subspace<R> b = b_space(A, ctx.u(j), ctx.u(j + 2));
        CHECK(b.dim() == 7);
        CHECK(b == ctx.S_space());
    }
    // generic: dimension 6, equal to T
    for (auto [j, i] : std::vector<std::pair<long, long>>{{0, 1}, {0, 3}, {2, 1}, {-1, -4}}) {
        Subspace<R> b = b_space(A, ctx.u(j), ctx.u(i));
        CHECK(b.dim() == 6);
        CHECK(b == ctx.T_space());
    }

    // L(y) is always inside B(x,y)
    for (long j : {-2L, 0L, 1L})
        for (long i : {-1L, 0L, 2L})
            CHECK(b_space(A, ctx.u(j), ctx.u(i))
                      .contains(left_annihilator(A, {ctx.u(i)})));
}

TEST_CASE("hom dimensions through theta and phi match the printed table") {
    LiuSchulzContext<R> ctx(R(2));
    const Algebra<R>& A = ctx.algebra();
    for (long j = -4; j <= 4; ++j)
        for (long i = -4; i <= 4; ++i) {
            long expected = (i == j || i == j + 2) ? 3 : 2;
            CHECK(hom_dim_theta(A, ctx.u(j), ctx.u(i)) == expected);
            CHECK(hom_dim_phi(A, ctx.u(j), ctx.u(i)) == expected);
        }
    // Hom(I_j, A) has the dimension of J_j, and End(A) = A
    CHECK(hom_dim_theta(A, ctx.u(0), A.unit()) == 4);
    CHECK(hom_dim_phi(A, ctx.u(0), A.unit()) == 4);
    CHECK(hom_dim_theta(A, A.unit(), A.unit()) == 8);
}

TEST_CASE("representatives turn into intertwiners, theta-multiplicatively") {
    LiuSchulzContext<R> ctx(R(2));
    const Algebra<R>& A = ctx.algebra();
    std::vector<std::vector<R>> xs{A.unit(), ctx.u(0), ctx.u(2)};
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t s = 0; s + 1 < 3; ++s) {
            HomSpaceCoset<R> cell = hom_space_coset(A, xs[r], xs[s]);
            CHECK(cell.representatives.rows() ==
                  cell.numerator.dim() - cell.denominator.dim());
            HomSpaceCoset<R> next = hom_space_coset(A, xs[s], xs[s + 1]);
            for (std::size_t t = 0; t < cell.representatives.rows(); ++t) {
                if (next.representatives.rows() == 0) continue;
                std::vector<R> b1 = cell.representatives.row(t);
                std::vector<R> b2 = next.representatives.row(0);
                Matrix<R> m1 = representative_to_map(A, xs[r], xs[s], b1);
                Matrix<R> m2 = representative_to_map(A, xs[s], xs[s + 1], b2);
                Matrix<R> composed = m2 * m1; // first m1, then m2
                Matrix<R> direct =
                    representative_to_map(A, xs[r], xs[s + 1], A.multiply(b1, b2));
                CHECK(composed == direct);
            }
        }
}

TEST_CASE("M_B(1) recovers B") {
    LiuSchulzContext<R> ctx(R(2));
    const Algebra<R>& A = ctx.algebra();
    MatrixEndoAlgebra<R> m = matrix_endomorphism_algebra(A, {A.unit()}, "M_A(1)");
    CHECK(m.algebra.dim() == 8);
    CHECK(audit_algebra(m.algebra).empty());
    // single block B(1,1)/L(1) = A: structure constants literally agree
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            CHECK(m.algebra.multiply(m.algebra.basis_element(i), m.algebra.basis_element(j)) ==
                  A.multiply(A.basis_element(i), A.basis_element(j)));
}

TEST_CASE("M_A(1, u_0, u_m) block dimensions and Cartan matrices") {
    LiuSchulzContext<R> ctx(R(2));

    for (long m : {3L, 5L}) {
        MatrixEndoAlgebra<R> lam = build_lambda_matrix(ctx, m);
        CHECK(lam.algebra.dim() == 34);
        CHECK(cartan_matrix(lam.algebra) ==
              std::vector<std::vector<long>>{{8, 4, 4}, {4, 3, 2}, {4, 2, 3}});
    }

    // m = 2 is the exception: block (2,3) is S/I_3 and the Cartan matrix is
    // not symmetric (block dims [[8,4,4],[4,3,3],[4,2,3]], total 35)
    MatrixEndoAlgebra<R> lam2 = build_lambda_matrix(ctx, 2);
    CHECK(lam2.algebra.dim() == 35);
    CHECK(cartan_matrix(lam2.algebra) ==
          std::vector<std::vector<long>>{{8, 4, 4}, {4, 3, 3}, {4, 2, 3}});
}

TEST_CASE("corner of M_A(1,u_0,u_m) at the first block idempotent is 8-dimensional and local") {
    LiuSchulzContext<R> ctx(R(2));
    MatrixEndoAlgebra<R> lam = build_lambda_matrix(ctx, 4);
    const auto& e1 = (*lam.algebra.idempotents())[0];
    Algebra<R> corner = corner_algebra(lam.algebra, e1, "e1.Lam.e1");
    CHECK(corner.dim() == 8);
    CHECK(is_local(corner));
    // oracle: the (1,1) block is A(1,1)/L(1) = A itself, so the corner admits
    // a symmetric nondegenerate form just as A does
    SymmetricFormResult<R> form = symmetric_form_search(corner);
    CHECK(form.functional.has_value());
}

TEST_CASE("cartan sum equals algebra dimension") {
    LiuSchulzContext<R> ctx(R(2));
    for (long m : {2L, 4L}) {
        MatrixEndoAlgebra<R> lam = build_lambda_matrix(ctx, m);
        long sum = 0;
        for (const auto& row : cartan_matrix(lam.algebra))
            for (long v : row) sum += v;
        CHECK(sum == static_cast<long>(lam.algebra.dim()));
    }
}
