// Unit tests for the exact scalar layer: rationals, Gaussian rationals,
// text round-trips, and the antilinear rescaling table.

#include "gradings/exact.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <vector>

using namespace gradings;

TEST_CASE("make_rational normalizes sign and common factors") {
    CHECK(make_rational(2, 4) == make_rational(1, 2));
    CHECK(make_rational(1, -2) == make_rational(-1, 2));
    CHECK(make_rational(-6, -4) == make_rational(3, 2));
    CHECK(make_rational(0, 7) == Rational(0));
    CHECK_THROWS(make_rational(1, 0));
}

TEST_CASE("gaussian arithmetic follows the defining identities") {
    const GaussianRational i = imaginary_unit();
    CHECK(i * i == GaussianRational{-1});

    const GaussianRational a{make_rational(1), make_rational(2)};   // 1+2i
    const GaussianRational b{make_rational(3), make_rational(-1)};  // 3-i
    CHECK(a * b == GaussianRational{make_rational(5), make_rational(5)});
    CHECK(a + b == GaussianRational{make_rational(4), make_rational(1)});
    CHECK(conj(a) == GaussianRational{make_rational(1), make_rational(-2)});
    CHECK(norm_sq(a) == Rational(5));
    CHECK(a * inverse(a) == GaussianRational{1});
    CHECK((a / b) * b == a);
    CHECK_THROWS(inverse(GaussianRational{}));
}

TEST_CASE("phase_ratio computes a / conj(a)") {
    const GaussianRational one{1};
    const GaussianRational i = imaginary_unit();
    CHECK(phase_ratio(one) == one);
    CHECK(phase_ratio(i) == -one);
    CHECK(phase_ratio(one + i) == i);
    CHECK(phase_ratio(one - i) == -i);
    // Scale invariance under real scaling.
    const GaussianRational a{make_rational(3, 7), make_rational(3, 7)};
    CHECK(phase_ratio(a) == i);
}

TEST_CASE("real_multiplier_for_eigenvalue inverts phase_ratio on fourth roots") {
    const GaussianRational one{1};
    const GaussianRational i = imaginary_unit();
    const std::vector<GaussianRational> fourth_roots{one, -one, i, -i};
    for (const auto& lambda : fourth_roots) {
        const auto alpha = real_multiplier_for_eigenvalue(lambda);
        REQUIRE(alpha.has_value());
        CHECK(phase_ratio(*alpha) == lambda);  // the defining property
    }
    CHECK(!real_multiplier_for_eigenvalue(GaussianRational{2}).has_value());
    // A unit that is not a fourth root of unity.
    const GaussianRational unit{make_rational(3, 5), make_rational(4, 5)};
    CHECK(norm_sq(unit) == Rational(1));
    CHECK(!real_multiplier_for_eigenvalue(unit).has_value());
}

TEST_CASE("scalar text round-trips") {
    const GaussianRational i = imaginary_unit();
    const std::vector<GaussianRational> samples{
        GaussianRational{0},
        GaussianRational{1},
        GaussianRational{-1},
        i,
        -i,
        GaussianRational{1} + i,
        GaussianRational{1} - i,
        GaussianRational{make_rational(1, 2), make_rational(-3, 4)},
        GaussianRational{make_rational(-22, 7), make_rational(0)},
        GaussianRational{make_rational(0), make_rational(5, 9)},
    };
    for (const auto& s : samples) CHECK(parse_scalar(format_scalar(s)) == s);

    CHECK(parse_scalar("1/2-3/4*i") ==
          GaussianRational{make_rational(1, 2), make_rational(-3, 4)});
    CHECK(parse_scalar("2*i") == GaussianRational{make_rational(0), make_rational(2)});
    CHECK(parse_scalar("-1*i") == -imaginary_unit());
    CHECK(parse_scalar("-7") == GaussianRational{-7});
    CHECK_THROWS(parse_scalar(""));
    CHECK_THROWS(parse_scalar("x"));
    CHECK_THROWS(parse_scalar("1/"));
}
