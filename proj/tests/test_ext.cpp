#include "fdalg/liu_schulz.hpp"

#include <doctest.h>

using namespace fdalg;
using R = Rat;

namespace {

// independent re-implementation of the admissibility condition, used as an
// oracle against is_admissible
bool admissible_oracle(const std::vector<std::size_t>& set) {
    auto in = [&](std::size_t v) {
        for (std::size_t s : set)
            if (s == v) return true;
        return false;
    };
    if (!in(0)) return false;
    for (std::size_t p : set)
        for (std::size_t q : set)
            for (std::size_t r : set)
                if (in(p + q + r) && in(p + q) != in(q + r)) return false;
    return true;
}

} // namespace

TEST_CASE("admissible sets") {
    CHECK(is_admissible({0}));
    for (std::size_t a : {1, 2, 5, 9}) CHECK(is_admissible({0, a}));
    CHECK(is_admissible({0, 1, 27})); // cubes of {0,1,3}
    // p,q,r = 1,1,2: p+q+r = 4 in S, p+q = 2 in S, q+r = 3 not in S
    CHECK_FALSE(is_admissible({0, 1, 2, 4}));
    CHECK_FALSE(is_admissible({1, 2}));
    CHECK(is_admissible({0, 1, 2, 3}));

    // exhaustive agreement with the oracle on all subsets of {0..6} with 0
    for (std::size_t mask = 0; mask < 64; ++mask) {
        std::vector<std::size_t> s{0};
        for (std::size_t b = 0; b < 6; ++b)
            if (mask & (1u << b)) s.push_back(b + 1);
        CHECK(is_admissible(s) == admissible_oracle(s));
    }

    CHECK_THROWS(AdmissibleSet({0, 1, 2, 4}));
    AdmissibleSet phi({1, 0}); // sorts and validates
    CHECK(phi.elements() == std::vector<std::size_t>{0, 1});
    CHECK(phi.max() == 1);
}

TEST_CASE("Ext^1 band between the I_j") {
    LiuSchulzContext<R> ctx(R(2));
    ModuleEnv<R>& env = ctx.env();
    for (long j = -3; j <= 3; ++j) {
        Resolution<R> res(ctx.I_module(j), env);
        for (long i = -3; i <= 6; ++i) {
            std::size_t expected = (j <= i && i <= j + 3) ? 1 : 0;
            CHECK(ext_dim(res, ctx.I_module(i), 1) == expected);
        }
    }
}

TEST_CASE("higher Ext bands") {
    LiuSchulzContext<R> ctx(R(2));
    ModuleEnv<R>& env = ctx.env();
    Resolution<R> res0(ctx.I_module(0), env);
    for (std::size_t j : {1, 2, 4}) {
        for (long t = -4; t <= 7; ++t) {
            std::size_t expected = (-1 <= t - static_cast<long>(j) && t - static_cast<long>(j) <= 2) ? 1 : 0;
            CHECK(ext_dim(res0, ctx.I_module(t), j) == expected);
        }
    }
    // Ext^j(I_0, I_0) vanishes beyond degree 1
    CHECK(ext_dim(res0, ctx.I_module(0), 2) == 0);
    CHECK(ext_dim(res0, ctx.I_module(0), 3) == 0);
}

TEST_CASE("Ext vanishes on projective first argument, and Ext^0 is Hom") {
    LiuSchulzContext<R> ctx(R(2));
    ModuleEnv<R>& env = ctx.env();
    Module<R> reg = regular_module(ctx.algebra());
    Resolution<R> res(reg, env);
    for (std::size_t i : {1, 2, 3}) CHECK(ext_dim(res, ctx.I_module(0), i) == 0);
    CHECK(ext_dim(res, ctx.I_module(0), 0) == 4); // Hom(A, I_0) = I_0

    Resolution<R> res0(ctx.I_module(0), env);
    CHECK(ext_dim(res0, ctx.I_module(2), 0) ==
          static_cast<std::size_t>(hom_dim(ctx.I_module(0), ctx.I_module(2), env)));
}

TEST_CASE("dimension shift") {
    LiuSchulzContext<R> ctx(R(2));
    ModuleEnv<R>& env = ctx.env();
    for (long j : {0L, 1L}) {
        Resolution<R> res(ctx.I_module(j), env);
        Module<R> omega = syzygies(ctx.I_module(j), 1, env)[0];
        Resolution<R> res_omega(omega, env);
        for (std::size_t i : {1, 2})
            for (long t : {0L, 2L, 3L})
                CHECK(ext_dim(res, ctx.I_module(t), i + 1) ==
                      ext_dim(res_omega, ctx.I_module(t), i));
    }
}

TEST_CASE("lifting: residuals vanish and products are lift-independent") {
    LiuSchulzContext<R> ctx(R(2));
    ModuleEnv<R>& env = ctx.env();

    Resolution<R> res0(ctx.I_module(0), env);
    Resolution<R> res1(ctx.I_module(1), env);

    // a degree-1 class I_0 -> I_1 lifts to a map Omega^2 I_0 -> Omega^1 I_1
    ExtSpace<R> e01 = ext_space(res0, ctx.I_module(1), 1);
    REQUIRE(e01.dim() == 1);
    Matrix<R> f = e01.rep_matrix(0);
    Matrix<R> alt;
    Matrix<R> lifted = lift_once(res0, 1, res1, 0, f, &alt);
    CHECK(lifted.rows() == res1.kernel(0).dim());
    CHECK(lifted.cols() == res0.kernel(1).dim());

    // the two lifts give the same Yoneda product into Ext^2(I_0, I_2)
    ExtSpace<R> e12 = ext_space(res1, ctx.I_module(2), 1);
    REQUIRE(e12.dim() == 1);
    ExtSpace<R> target = ext_space(res0, ctx.I_module(2), 2);
    REQUIRE(target.dim() == 1);
    Matrix<R> g = e12.rep_matrix(0);
    // g is defined on Omega^1(I_1); the lift lands there through the kernel
    // coordinates, so compose after re-expressing columns in the ambient space
    std::vector<R> prod1 = target.class_of(g * lifted);
    std::vector<R> prod2 = target.class_of(g * alt);
    CHECK(prod1 == prod2);
}

TEST_CASE("yoneda product with the identity class acts as the identity") {
    LiuSchulzContext<R> ctx(R(2));
    ModuleEnv<R>& env = ctx.env();
    Resolution<R> res0(ctx.I_module(0), env);
    Resolution<R> res1(ctx.I_module(1), env);

    ExtSpace<R> e01 = ext_space(res0, ctx.I_module(1), 1);
    REQUIRE(e01.dim() == 1);
    Matrix<R> a = e01.rep_matrix(0);

    // a . id  (degree 1 times degree 0)
    Matrix<R> id1 = Matrix<R>::identity(ctx.I_module(1).dim);
    std::vector<R> prod = yoneda_product(res0, 1, a, res1, 0, id1, e01);
    CHECK(prod == std::vector<R>{R(1)});

    // id . a  (degree 0 times degree 1): lift id_{I_0} one step, compose with a
    Matrix<R> id0 = Matrix<R>::identity(ctx.I_module(0).dim);
    std::vector<R> prod2 = yoneda_product(res0, 0, id0, res0, 1, a, e01);
    CHECK(prod2 == std::vector<R>{R(1)});
}

TEST_CASE("E^Phi(A) recovers A for any Phi") {
    LiuSchulzContext<R> ctx(R(2));
    Module<R> reg = regular_module(ctx.algebra());
    YonedaAlgebraBuild<R> b = build_phi_yoneda_algebra<R>(
        {&reg}, AdmissibleSet({0, 1, 2}), ctx.env(), "E(A)");
    CHECK(b.algebra.dim() == 8);
    CHECK(audit_algebra(b.algebra).empty());
    // The degree-0 block is End(A), and End(A) = A under f -> f(1) with
    // left-to-right composition. The basis of the build is the canonical
    // Hom(A, A) echelon basis, so recompute it in the same order and verify
    // the structure constants transport to A's multiplication.
    std::vector<ModuleMap<R>> homs = hom_space(reg, reg, ctx.env());
    REQUIRE(homs.size() == 8);
    std::vector<R> unitvec(8, R(0));
    unitvec[0] = R(1);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            std::vector<R> lhs(8, R(0));
            for (const auto& [k, c] : b.algebra.basis_product(i, j)) {
                std::vector<R> ek = homs[k].mat.apply(unitvec);
                for (std::size_t t = 0; t < 8; ++t) lhs[t] += c * ek[t];
            }
            std::vector<R> rhs = ctx.algebra().multiply(homs[i].mat.apply(unitvec),
                                                        homs[j].mat.apply(unitvec));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("E^Phi(V_m) dimensions, grading constraint and audits") {
    LiuSchulzContext<R> ctx(R(2));
    long m = 4;

    YonedaAlgebraBuild<R> b0 = build_lambda_yoneda(ctx, 0, m, AdmissibleSet({0}));
    CHECK(b0.algebra.dim() == 34);
    CHECK(audit_algebra(b0.algebra).empty());

    YonedaAlgebraBuild<R> b01 = build_lambda_yoneda(ctx, 0, m, AdmissibleSet({0, 1}));
    CHECK(b01.algebra.dim() == 36); // 34 + Ext^1(I_0,I_0) + Ext^1(I_m,I_m)
    CHECK(audit_algebra(b01.algebra).empty());

    // graded product: degree-1 times degree-1 is zero since 2 is not in Phi
    for (std::size_t a = 0; a < 36; ++a)
        for (std::size_t c = 0; c < 36; ++c) {
            if (b01.basis_info[a].degree != 1 || b01.basis_info[c].degree != 1) continue;
            CHECK(b01.algebra.basis_product(a, c).empty());
        }

    // the degree-0 block sums to 34 = printed Cartan total
    std::size_t deg0 = 0;
    for (const auto& row : b01.block_dims[0])
        for (std::size_t v : row) deg0 += v;
    CHECK(deg0 == 34);

    YonedaAlgebraBuild<R> b012 = build_lambda_yoneda(ctx, 0, m, AdmissibleSet({0, 1, 2}));
    CHECK(audit_algebra(b012.algebra).empty());

    YonedaAlgebraBuild<R> bgap = build_lambda_yoneda(ctx, 0, m, AdmissibleSet({0, 3, 27}));
    CHECK(audit_algebra(bgap.algebra).empty());
    // Ext^3(V,V) = Ext^3(I_0, I_4) is one-dimensional for m = 4
    std::size_t deg3 = 0;
    for (const auto& row : bgap.block_dims[1])
        for (std::size_t v : row) deg3 += v;
    CHECK(deg3 == 1);

    CHECK_THROWS(build_lambda_yoneda(ctx, 0, 0, AdmissibleSet({0}))); // m collision
}

TEST_CASE("Mueller criterion") {
    LiuSchulzContext<R> ctx(R(2));
    // Y = V_m: Ext^1(V,V) != 0 forces dominant dimension exactly 2
    DominantDim dd = muller_dominant_dimension(lambda_summands(ctx, 0, 4), ctx.env(), 4);
    CHECK_FALSE(dd.at_least);
    CHECK(dd.value == 2);

    // self-injective: Y = A is already a generator-cogenerator, all Ext vanish
    Module<R> reg = regular_module(ctx.algebra());
    DominantDim dd2 = muller_dominant_dimension<R>({&reg}, ctx.env(), 3);
    CHECK(dd2.at_least);
    CHECK(dd2.value == 5); // >= cap + 2

    // not a generator: Y = I_0 alone
    CHECK_THROWS(muller_dominant_dimension<R>({&ctx.I_module(0)}, ctx.env(), 2));
}
