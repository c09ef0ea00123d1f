// Randomized exact property suites: algebra axioms, map laws, and
// congruence invariants, each over at least one hundred generated
// instances with fixed seeds.

#include "gradings/abelian.hpp"
#include "property_suites.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace gradings;

TEST_CASE("bracket axioms hold on random traceless matrices") {
    CHECK(testing::jacobi_suite(0x5eed0001ULL, 120));
}

TEST_CASE("inner and outer maps preserve brackets on random instances") {
    CHECK(testing::automorphism_suite(0x5eed0002ULL, 120));
}

TEST_CASE("antilinear structures are involutive, antilinear, bracket-preserving") {
    CHECK(testing::antiautomorphism_suite(0x5eed0003ULL, 120));
}

TEST_CASE("signature is a congruence invariant on random hermitian matrices") {
    CHECK(testing::signature_suite(0x5eed0004ULL, 120));
}

TEST_CASE("integer normal forms factor correctly on random matrices") {
    std::mt19937_64 engine(0x5eed0005ULL);
    std::uniform_int_distribution<int> entry(-9, 9);
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    for (std::size_t n = 0; n < 120; ++n) {
        const std::size_t rows = dim(engine);
        const std::size_t cols = dim(engine);
        IntMatrix a(rows, std::vector<Integer>(cols));
        for (auto& r : a)
            for (auto& e : r) e = entry(engine);
        const auto s = smith_normal_form(a);
        const Rational du = int_determinant(s.u);
        const Rational dv = int_determinant(s.v);
        REQUIRE((du == Rational(1) || du == Rational(-1)));
        REQUIRE((dv == Rational(1) || dv == Rational(-1)));
        REQUIRE(s.d == int_multiply(int_multiply(s.u, a), s.v));
        std::vector<Integer> diag;
        for (std::size_t j = 0; j < rows; ++j)
            for (std::size_t k = 0; k < cols; ++k) {
                if (j == k) diag.push_back(s.d[j][k]);
                else REQUIRE(s.d[j][k] == 0);
            }
        bool seen_zero = false;
        for (std::size_t t = 0; t < diag.size(); ++t) {
            REQUIRE(diag[t] >= 0);
            if (diag[t] == 0) {
                seen_zero = true;
                continue;
            }
            REQUIRE(!seen_zero);                                // zeros trail
            if (t > 0 && diag[t - 1] != 0) REQUIRE(diag[t] % diag[t - 1] == 0);
        }
    }
}
