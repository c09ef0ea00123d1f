// Unit tests for decompositions: direct sums, bracket closure, universal
// groups, eigenvalue tables, and the ambient matrix algebras.

#include "gradings/abelian.hpp"
#include "gradings/exact.hpp"
#include "gradings/grading.hpp"
#include "gradings/maps.hpp"
#include "gradings/mat.hpp"
#include "gradings/subspace.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace gradings;

namespace {
const GaussianRational one{1};
const GaussianRational i = imaginary_unit();

// A three-part toy inside the upper-left 2x2 block: raising, lowering,
// and the diagonal.
[[nodiscard]] Grading toy_triangle() {
    const Mat4 e = Mat4::unit(0, 1);
    const Mat4 f = Mat4::unit(1, 0);
    const Mat4 h = Mat4::unit(0, 0) - Mat4::unit(1, 1);
    return Grading::from_parts({{"up", ComplexSubspace::span({e})},
                                {"down", ComplexSubspace::span({f})},
                                {"diag", ComplexSubspace::span({h})}});
}
}  // namespace

TEST_CASE("ambient spaces have the expected dimensions") {
    CHECK(gl4_space().dim() == 16);
    CHECK(sl4_space().dim() == 15);
    for (const auto& b : sl4_space().basis()) CHECK(b.trace().is_zero());
}

TEST_CASE("direct sums and part lookup") {
    const Grading g = toy_triangle();
    CHECK(g.part_count() == 3);
    CHECK(g.total_dim() == 3);
    const auto ambient = ComplexSubspace::span(
        {Mat4::unit(0, 1), Mat4::unit(1, 0), Mat4::unit(0, 0) - Mat4::unit(1, 1)});
    CHECK(g.is_direct_sum_of(ambient));
    CHECK(!g.is_direct_sum_of(sl4_space()));  // too small
    CHECK(g.part_index("down") == 1);
    CHECK(!g.part_index("missing").has_value());
    CHECK(g.part_containing(Mat4::unit(0, 1)) == 0);
    CHECK(!g.part_containing(Mat4::unit(0, 1) + Mat4::unit(1, 0)).has_value());
}

TEST_CASE("closure finds bracket relations") {
    const Grading g = toy_triangle();
    const auto rep = g.closure();
    REQUIRE(rep.closed);
    // [up, down] lands in diag, [up, diag] in up, [down, diag] in down.
    CHECK(rep.relations.size() == 3);

    const Grading open = Grading::from_parts(
        {{"up", ComplexSubspace::span({Mat4::unit(0, 1)})},
         {"down", ComplexSubspace::span({Mat4::unit(1, 0)})}});
    const auto bad = open.closure();
    CHECK(!bad.closed);
    CHECK(!bad.failure.empty());
    CHECK_THROWS(open.universal_group());
}

TEST_CASE("universal group of the toy triangle is Z") {
    const Grading g = toy_triangle();
    const auto q = g.universal_group();
    CHECK(isomorphic(q.group, parse_group("Z")));
    CHECK(g.is_group_grading());
    // diag sits at the identity label; up and down at opposite labels.
    CHECK(q.generator_images[0] != q.generator_images[1]);
    CHECK(q.generator_images[0] != q.generator_images[2]);
}

TEST_CASE("eigenvalue tables separate parts") {
    const Grading g = toy_triangle();
    const auto gen = Automorphism::make_inner(
        Mat4::diagonal({one, GaussianRational{2}, one, one}));
    const auto table = eigenvalue_table({gen}, g);
    REQUIRE(table.has_value());
    CHECK((*table)[0][0] == GaussianRational{2});
    CHECK((*table)[1][0] == GaussianRational{make_rational(1, 2)});
    CHECK((*table)[2][0] == one);
    CHECK(rows_pairwise_distinct(*table));

    const auto coarse = Automorphism::make_inner(Mat4::identity());
    CHECK(!rows_pairwise_distinct(*eigenvalue_table({coarse}, g)));
}

TEST_CASE("has_real_spectrum distinguishes real from imaginary eigenvalues") {
    const Grading g = toy_triangle();
    const auto real_gen = Automorphism::make_inner(
        Mat4::diagonal({one, GaussianRational{3}, one, one}));
    CHECK(has_real_spectrum(real_gen, g));
    const auto imag_gen = Automorphism::make_inner(Mat4::diagonal({one, i, one, one}));
    CHECK(!has_real_spectrum(imag_gen, g));
}

TEST_CASE("matrix_algebra_preserving computes form subalgebras") {
    // A skew form gives the ten-dimensional algebra.
    Mat4 skew;
    skew.at(0, 2) = one;
    skew.at(1, 3) = one;
    skew.at(2, 0) = -one;
    skew.at(3, 1) = -one;
    CHECK(matrix_algebra_preserving(skew).dim() == 10);

    // A symmetric form gives the six-dimensional algebra.
    CHECK(matrix_algebra_preserving(Mat4::identity()).dim() == 6);
    const Mat4 sym = tensor(pauli(0), pauli(1));
    CHECK(matrix_algebra_preserving(sym).dim() == 6);

    for (const auto& x : matrix_algebra_preserving(sym).basis())
        CHECK(x * sym == -(sym * x.transpose()));
}

TEST_CASE("intersect_complex computes exact meets") {
    const auto a = ComplexSubspace::span({Mat4::unit(0, 1), Mat4::unit(1, 0)});
    const auto b = ComplexSubspace::span({Mat4::unit(1, 0), Mat4::unit(0, 2)});
    const auto meet = intersect_complex(a, b);
    REQUIRE(meet.size() == 1);
    CHECK(scalar_ratio(meet[0], Mat4::unit(1, 0)).has_value());

    const auto disjoint = intersect_complex(
        ComplexSubspace::span({Mat4::unit(0, 1)}), ComplexSubspace::span({Mat4::unit(2, 3)}));
    CHECK(disjoint.empty());
}
