#include "fdalg/matrix.hpp"
#include "fdalg/subspace.hpp"

#include <doctest.h>

using namespace fdalg;
using M = Matrix<Rat>;
using S = Subspace<Rat>;

namespace {
M from_ints(std::size_t r, std::size_t c, std::vector<long> vals) {
    std::vector<Rat> flat;
    for (long v : vals) flat.emplace_back(v);
    return M(r, c, std::move(flat));
}
} // namespace

TEST_CASE("rref is canonical and idempotent") {
    M a = from_ints(3, 4, {2, 4, 0, 6, 1, 2, 1, 4, 0, 0, 2, 2});
    M b = a;
    auto pivots = b.rref();
    CHECK(pivots == std::vector<std::size_t>{0, 2});
    M c = b;
    c.rref();
    // zero rows remain but the reduced rows are unchanged
    CHECK(c == b);
    CHECK(a.rank() == 2);
}

TEST_CASE("nullspace and solve agree") {
    M a = from_ints(2, 3, {1, 2, 3, 2, 4, 6});
    M ker = a.nullspace();
    CHECK(ker.rows() == 2);
    for (std::size_t r = 0; r < ker.rows(); ++r)
        CHECK(a.apply(ker.row(r)) == std::vector<Rat>{Rat(0), Rat(0)});

    auto x = a.solve({Rat(6), Rat(12)});
    REQUIRE(x.has_value());
    CHECK(a.apply(*x) == std::vector<Rat>{Rat(6), Rat(12)});
    CHECK_FALSE(a.solve({Rat(1), Rat(0)}).has_value());
}

TEST_CASE("determinant and inverse") {
    M a = from_ints(3, 3, {2, 1, 0, 1, 1, 1, 0, 3, 1});
    CHECK(a.det() == Rat(-5));
    auto inv = a.inverse();
    REQUIRE(inv.has_value());
    CHECK((*inv * a) == M::identity(3));
    M sing = from_ints(2, 2, {1, 2, 2, 4});
    CHECK(sing.det() == Rat(0));
    CHECK_FALSE(sing.inverse().has_value());
}

TEST_CASE("zero-dimensional matrices behave") {
    M z(0, 3);
    CHECK(z.nullspace().rows() == 3); // kernel of the empty map is everything
    M z2(3, 0);
    CHECK(z2.rank() == 0);
    CHECK(M(0, 0).det() == Rat(1));
    CHECK(M(0, 0).inverse().has_value());
}

TEST_CASE("subspace canonical form, membership, sums and intersections") {
    S u = S::from_span(3, from_ints(2, 3, {1, 1, 0, 0, 0, 1}));
    S v = S::from_span(3, from_ints(2, 3, {2, 2, 2, 0, 0, 5}));
    CHECK(u == v);
    CHECK(u.dim() == 2);
    CHECK(u.contains(std::vector<Rat>{Rat(3), Rat(3), Rat(7)}));
    CHECK_FALSE(u.contains(std::vector<Rat>{Rat(1), Rat(0), Rat(0)}));

    S w = S::from_span(3, from_ints(1, 3, {0, 1, 0}));
    S sum = u.sum_with(w);
    CHECK(sum.dim() == 3);
    S inter = u.intersect(w);
    CHECK(inter.dim() == 0);

    S a = S::from_span(3, from_ints(2, 3, {1, 0, 0, 0, 1, 0}));
    S b = S::from_span(3, from_ints(2, 3, {0, 1, 0, 0, 0, 1}));
    S ab = a.intersect(b);
    CHECK(ab.dim() == 1);
    CHECK(ab.contains(std::vector<Rat>{Rat(0), Rat(1), Rat(0)}));
}

TEST_CASE("echelon complement is a direct complement") {
    S super = S::from_span(4, from_ints(3, 4, {1, 0, 0, 1, 0, 1, 0, 2, 0, 0, 1, 3}));
    S sub = S::from_span(4, from_ints(1, 4, {0, 1, 0, 2}));
    M comp = sub.complement_in(super);
    CHECK(comp.rows() == 2);
    S rebuilt = sub.sum_with(S::from_span(4, comp));
    CHECK(rebuilt == super);
}

TEST_CASE("coordinates round-trip") {
    S u = S::from_span(3, from_ints(2, 3, {1, 2, 0, 0, 0, 1}));
    std::vector<Rat> v{Rat(2), Rat(4), Rat(-5)};
    auto coords = u.coordinates(v);
    REQUIRE(coords.has_value());
    CHECK(u.from_coordinates(*coords) == v);
    CHECK_FALSE(u.coordinates(std::vector<Rat>{Rat(0), Rat(1), Rat(0)}).has_value());
}
