// Unit tests for linear automorphisms, antilinear antiautomorphisms, and
// spectral helpers on subspaces.

#include "gradings/exact.hpp"
#include "gradings/maps.hpp"
#include "gradings/mat.hpp"
#include "gradings/subspace.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace gradings;

namespace {
const GaussianRational one{1};
const GaussianRational i = imaginary_unit();

[[nodiscard]] Mat4 clock_shift() {
    return Mat4::from_text("0 1 0 0  0 0 1 0  0 0 0 1  1 0 0 0");
}
[[nodiscard]] Mat4 clock_diagonal() { return Mat4::diagonal({one, i, -one, -i}); }
}  // namespace

TEST_CASE("inner automorphisms conjugate") {
    const Mat4 a = Mat4::diagonal({one, GaussianRational{2}, GaussianRational{3}, one});
    const auto ad = Automorphism::make_inner(a);
    CHECK(ad.apply(Mat4::unit(0, 1)) == GaussianRational{2} * Mat4::unit(0, 1));
    CHECK(ad.apply(Mat4::unit(1, 0)) == GaussianRational{make_rational(1, 2)} * Mat4::unit(1, 0));
    CHECK(ad.apply(Mat4::identity()) == Mat4::identity());
    CHECK_THROWS(Automorphism::make_inner(Mat4::unit(0, 0)));
}

TEST_CASE("outer automorphisms negate the transpose") {
    const auto out = Automorphism::make_outer(Mat4::identity());
    const Mat4 x = Mat4::unit(0, 1) + i * Mat4::unit(2, 2) - i * Mat4::unit(3, 3);
    CHECK(out.apply(x) == -(x.transpose()));
    // Both kinds preserve brackets.
    const Mat4 y = Mat4::unit(1, 0) + Mat4::unit(2, 3);
    CHECK(out.apply(bracket(x, y)) == bracket(out.apply(x), out.apply(y)));
}

TEST_CASE("projective equality identifies proportional conjugators") {
    const Mat4 p = clock_shift();
    CHECK(projectively_equal(p, (one + i) * p));
    CHECK(!projectively_equal(p, clock_diagonal()));
    CHECK(same_automorphism(Automorphism::make_inner(p),
                            Automorphism::make_inner(GaussianRational{-3} * p)));
    CHECK(!same_automorphism(Automorphism::make_inner(p), Automorphism::make_outer(p)));
}

TEST_CASE("conjugated_by_inner transports the action") {
    const Mat4 s = Mat4::identity() + Mat4::unit(0, 1);  // unipotent, invertible
    const auto f = [&s](const Mat4& x) { return *s.inverse_matrix() * x * s; };
    const auto finv = [&s](const Mat4& x) { return s * x * *s.inverse_matrix(); };

    const auto g_in = Automorphism::make_inner(clock_diagonal());
    const auto g_out = Automorphism::make_outer(clock_shift());
    for (const auto& g : {g_in, g_out}) {
        const auto h = g.conjugated_by_inner(s);
        const Mat4 x = Mat4::unit(1, 2) + i * Mat4::unit(3, 0);
        CHECK(h.apply(x) == f(g.apply(finv(x))));
    }
}

TEST_CASE("conjugation-type antiautomorphisms") {
    // Plain entrywise conjugation.
    const auto j = Antiautomorphism::make_conj_inner(Mat4::identity());
    CHECK(!j.anticircular());
    CHECK(j.fixes(Mat4::unit(0, 1)));
    CHECK(!j.fixes(i * Mat4::unit(0, 1)));
    CHECK(j.apply(j.apply(i * Mat4::unit(2, 3) + Mat4::unit(1, 1))) ==
          i * Mat4::unit(2, 3) + Mat4::unit(1, 1));

    // An anticircular example: F * conj(F) = -I.
    const auto anti = Antiautomorphism::make_conj_inner(tensor(pauli(2), Mat2::identity()));
    CHECK(anti.anticircular());

    // Neither +I nor -I: rejected.
    CHECK_THROWS(Antiautomorphism::make_conj_inner(
        Mat4::diagonal({GaussianRational{2}, one, one, one})));
    CHECK_THROWS(Antiautomorphism::make_conj_inner(Mat4{}));
}

TEST_CASE("hermitian-form antiautomorphisms") {
    const auto j = Antiautomorphism::make_conj_outer(Mat4::identity());
    const Mat4 antihermitian = i * Mat4::unit(0, 0) + Mat4::unit(1, 2) - Mat4::unit(2, 1);
    CHECK(j.fixes(antihermitian));
    CHECK(!j.fixes(Mat4::unit(1, 2) + Mat4::unit(2, 1)));
    CHECK_THROWS(Antiautomorphism::make_conj_outer(Mat4::unit(0, 1)));  // not hermitian

    // fixes and fixes_by_commutation agree.
    const Mat4 e = Mat4::diagonal({one, one, one, -one});
    const auto js = Antiautomorphism::make_conj_outer(e);
    for (const Mat4& x : {antihermitian, Mat4::unit(0, 3), i * (Mat4::unit(0, 3) + Mat4::unit(3, 0))})
        CHECK(js.fixes(x) == js.fixes_by_commutation(x));
}

TEST_CASE("eigenvalue_on extracts scalar actions") {
    const Mat4 p = clock_shift();
    const Mat4 q = clock_diagonal();
    const auto ad_q = Automorphism::make_inner(q);
    const auto on_p = eigenvalue_on(ad_q, ComplexSubspace::span({p}));
    REQUIRE(on_p.has_value());
    CHECK(*on_p == i);

    // Mixed span: P and P^2 carry different eigenvalues.
    CHECK(!eigenvalue_on(ad_q, ComplexSubspace::span({p, p * p})).has_value());

    // Antilinear version: conjugation negates the coefficient of an
    // imaginary basis matrix.
    const auto j = Antiautomorphism::make_conj_inner(Mat4::identity());
    const auto lambda = eigenvalue_on(j, ComplexSubspace::span({i * Mat4::unit(0, 1)}));
    REQUIRE(lambda.has_value());
    CHECK(*lambda == -one);
}

TEST_CASE("intersect_real cuts the fixed points of a span") {
    const auto j = Antiautomorphism::make_conj_inner(Mat4::identity());
    const auto fixed = intersect_real(ComplexSubspace::span({Mat4::unit(0, 1)}), j);
    REQUIRE(fixed.dim() == 1);
    CHECK(fixed.contains(Mat4::unit(0, 1)));
    CHECK(!fixed.contains(i * Mat4::unit(0, 1)));

    // A span with no fixed directions at all: J maps it off itself.
    const Mat4 p = clock_shift();
    const auto je = Antiautomorphism::make_conj_outer(Mat4::identity());
    CHECK(intersect_real(ComplexSubspace::span({p}), je).dim() == 0);
}
