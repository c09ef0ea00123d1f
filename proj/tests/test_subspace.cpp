// Unit tests for the linear-algebra layer: row spaces, coordinate solving,
// kernels, and exact subspaces over Q(i) and over Q.

#include "gradings/exact.hpp"
#include "gradings/mat.hpp"
#include "gradings/subspace.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <vector>

using namespace gradings;

namespace {
const GaussianRational one{1};
const GaussianRational i = imaginary_unit();
}  // namespace

TEST_CASE("RowSpace tracks rank and membership") {
    RowSpace<Rational> rows(3);
    CHECK(rows.insert({Rational(1), Rational(0), Rational(1)}));
    CHECK(rows.insert({Rational(0), Rational(1), Rational(1)}));
    CHECK(rows.rank() == 2);
    // Dependent vector: sum of the two rows.
    CHECK(!rows.insert({Rational(1), Rational(1), Rational(2)}));
    CHECK(rows.rank() == 2);
    CHECK(rows.contains({Rational(2), Rational(-3), Rational(-1)}));
    CHECK(!rows.contains({Rational(0), Rational(0), Rational(1)}));
}

TEST_CASE("solve_coordinates finds the unique combination") {
    using Vec = std::vector<Rational>;
    const std::vector<Vec> basis{{Rational(1), Rational(1), Rational(0)},
                                 {Rational(0), Rational(1), Rational(0)}};
    const auto coords = solve_coordinates(basis, Vec{Rational(1), Rational(3), Rational(0)});
    REQUIRE(coords.has_value());
    CHECK((*coords)[0] == Rational(1));
    CHECK((*coords)[1] == Rational(2));
    CHECK(!solve_coordinates(basis, Vec{Rational(0), Rational(0), Rational(1)}).has_value());
}

TEST_CASE("kernel_basis solves homogeneous systems exactly") {
    using Vec = std::vector<Rational>;
    const std::vector<Vec> equations{{Rational(1), Rational(1), Rational(0)},
                                     {Rational(0), Rational(1), Rational(1)}};
    const auto kernel = kernel_basis(equations, 3);
    REQUIRE(kernel.size() == 1);
    for (const auto& eq : equations) {
        Rational dot = 0;
        for (std::size_t k = 0; k < 3; ++k) dot += eq[k] * kernel[0][k];
        CHECK(dot == Rational(0));
    }
    CHECK(kernel_basis(std::vector<Vec>{}, 2).size() == 2);
    const std::vector<Vec> full{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
    CHECK(kernel_basis(full, 2).empty());
}

TEST_CASE("ComplexSubspace spans keep the given basis verbatim") {
    const Mat4 a = Mat4::unit(0, 1) + Mat4::unit(1, 0);
    const Mat4 b = Mat4::unit(0, 1) - Mat4::unit(1, 0);
    const auto s = ComplexSubspace::span({a, b});
    REQUIRE(s.dim() == 2);
    CHECK(s.basis()[0] == a);
    CHECK(s.basis()[1] == b);
    CHECK(s.contains(Mat4::unit(0, 1)));          // (a+b)/2
    CHECK(s.contains(i * a));                     // complex coefficients allowed
    CHECK(!s.contains(Mat4::unit(2, 3)));
    CHECK_THROWS(ComplexSubspace::span({a, b, Mat4::unit(0, 1)}));

    const auto coords = s.coordinates(GaussianRational{3} * a + i * b);
    REQUIRE(coords.has_value());
    CHECK((*coords)[0] == GaussianRational{3});
    CHECK((*coords)[1] == i);
}

TEST_CASE("RealSubspace restricts coefficients to the rationals") {
    const Mat4 x = i * Mat4::unit(0, 0);
    const auto s = RealSubspace::span({x});
    CHECK(s.contains(GaussianRational{-2} * x));
    CHECK(!s.contains(i * x));   // would need an imaginary coefficient
    CHECK(!s.contains(Mat4::unit(0, 0)));

    // Over Q, the pair {m, i*m} is independent.
    const auto t = RealSubspace::span({Mat4::unit(1, 2), i * Mat4::unit(1, 2)});
    CHECK(t.dim() == 2);
    CHECK(t.contains((one + i) * Mat4::unit(1, 2)));
}

TEST_CASE("same_span compares spans, not bases") {
    const Mat4 a = Mat4::unit(0, 1);
    const Mat4 b = Mat4::unit(1, 0);
    const auto s = ComplexSubspace::span({a, b});
    const auto t = ComplexSubspace::span({a + b, a - b});
    CHECK(s.same_span(t));
    CHECK(t.same_span(s));
    const auto u = ComplexSubspace::span({a});
    CHECK(!s.same_span(u));
    CHECK(!u.same_span(ComplexSubspace::span({b})));
}
