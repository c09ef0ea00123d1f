// Randomized exact property suites shared by the unit tests and the
// acceptance battery.  Every instance is generated and checked in exact
// arithmetic; a suite passes only if every single instance holds.

#ifndef GRADINGS_TESTS_PROPERTY_SUITES_HPP
#define GRADINGS_TESTS_PROPERTY_SUITES_HPP

#include "gradings/exact.hpp"
#include "gradings/maps.hpp"
#include "gradings/mat.hpp"

#include <cstdint>
#include <random>

namespace gradings::testing {

class ExactRng {
public:
    explicit ExactRng(std::uint64_t seed) : engine_(seed) {}

    [[nodiscard]] Rational rational() {
        std::uniform_int_distribution<int> num(-4, 4);
        std::uniform_int_distribution<int> den(1, 4);
        return make_rational(num(engine_), den(engine_));
    }

    [[nodiscard]] GaussianRational scalar() {
        return GaussianRational{rational(), rational()};
    }

    [[nodiscard]] GaussianRational nonzero_scalar() {
        for (;;) {
            const GaussianRational c = scalar();
            if (!c.is_zero()) return c;
        }
    }

    [[nodiscard]] Mat4 matrix() {
        Mat4 m;
        std::uniform_int_distribution<int> keep(0, 2);
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c)
                if (keep(engine_) != 0) m.at(r, c) = scalar();
        return m;
    }

    [[nodiscard]] Mat4 traceless() {
        Mat4 m = matrix();
        const GaussianRational shift = m.trace() * GaussianRational{make_rational(1, 4)};
        for (std::size_t k = 0; k < 4; ++k) m.at(k, k) = m.at(k, k) - shift;
        return m;
    }

    [[nodiscard]] Mat4 invertible() {
        for (;;) {
            Mat4 m = matrix();
            for (std::size_t k = 0; k < 4; ++k)
                if (m.at(k, k).is_zero()) m.at(k, k) = GaussianRational{1};
            if (m.is_invertible()) return m;
        }
    }

    [[nodiscard]] Mat4 hermitian() {
        const Mat4 m = matrix();
        return m + m.dagger();
    }

    [[nodiscard]] Mat4 invertible_hermitian_diagonal() {
        Mat4 d;
        std::uniform_int_distribution<int> sign(0, 1);
        for (std::size_t k = 0; k < 4; ++k)
            d.at(k, k) = sign(engine_) == 0 ? GaussianRational{1} : GaussianRational{-1};
        return d;
    }

    [[nodiscard]] bool coin() {
        std::uniform_int_distribution<int> b(0, 1);
        return b(engine_) == 1;
    }

private:
    std::mt19937_64 engine_;
};

// [[a,b],c] + [[b,c],a] + [[c,a],b] = 0, plus bilinearity and antisymmetry.
[[nodiscard]] inline bool jacobi_suite(std::uint64_t seed, std::size_t instances) {
    ExactRng rng(seed);
    for (std::size_t n = 0; n < instances; ++n) {
        const Mat4 a = rng.traceless();
        const Mat4 b = rng.traceless();
        const Mat4 c = rng.traceless();
        const Mat4 jac =
            bracket(bracket(a, b), c) + bracket(bracket(b, c), a) + bracket(bracket(c, a), b);
        if (!jac.is_zero()) return false;
        if (bracket(a, b) != -(bracket(b, a))) return false;
        const GaussianRational t = rng.scalar();
        if (bracket(a, b + t * c) != bracket(a, b) + t * bracket(a, c)) return false;
        if (!bracket(a, b).trace().is_zero()) return false;
    }
    return true;
}

// Inner and outer maps preserve brackets; proportional conjugators give the
// same map.
[[nodiscard]] inline bool automorphism_suite(std::uint64_t seed, std::size_t instances) {
    ExactRng rng(seed);
    for (std::size_t n = 0; n < instances; ++n) {
        const Mat4 a = rng.invertible();
        const Automorphism phi =
            rng.coin() ? Automorphism::make_inner(a) : Automorphism::make_outer(a);
        const Mat4 x = rng.traceless();
        const Mat4 y = rng.traceless();
        if (phi.apply(bracket(x, y)) != bracket(phi.apply(x), phi.apply(y))) return false;
        const Automorphism scaled = phi.kind() == Automorphism::Kind::inner
                                        ? Automorphism::make_inner(rng.nonzero_scalar() * a)
                                        : Automorphism::make_outer(rng.nonzero_scalar() * a);
        if (!same_automorphism(phi, scaled)) return false;
        if (scaled.apply(x) != phi.apply(x)) return false;
    }
    return true;
}

// Antilinear structures: involutive, antilinear, bracket-preserving, and
// the two fixed-point formulations agree.
[[nodiscard]] inline bool antiautomorphism_suite(std::uint64_t seed, std::size_t instances) {
    ExactRng rng(seed);
    const Mat4 anti_block = tensor(pauli(2), Mat2::identity());
    for (std::size_t n = 0; n < instances; ++n) {
        const Mat4 s = rng.invertible();
        Antiautomorphism j = [&]() {
            switch (n % 3) {
                case 0:
                    return Antiautomorphism::make_conj_inner(
                        s * s.conjugate().inverse_matrix().value());
                case 1:
                    return Antiautomorphism::make_conj_inner(
                        s * anti_block * s.conjugate().inverse_matrix().value());
                default:
                    return Antiautomorphism::make_conj_outer(
                        s.dagger() * rng.invertible_hermitian_diagonal() * s);
            }
        }();
        const Mat4 x = rng.traceless();
        const Mat4 y = rng.traceless();
        const GaussianRational c = rng.scalar();
        if (j.apply(j.apply(x)) != x) return false;
        if (j.apply(c * x) != conj(c) * j.apply(x)) return false;
        if (j.apply(bracket(x, y)) != bracket(j.apply(x), j.apply(y))) return false;
        if (j.fixes(x) != j.fixes_by_commutation(x)) return false;
        const Mat4 fixed = x + j.apply(x);  // always a fixed vector
        if (!j.fixes(fixed)) return false;
    }
    return true;
}

// Sylvester: congruence by any invertible matrix preserves the signature.
[[nodiscard]] inline bool signature_suite(std::uint64_t seed, std::size_t instances) {
    ExactRng rng(seed);
    for (std::size_t n = 0; n < instances; ++n) {
        const Mat4 h = rng.hermitian();
        const Mat4 s = rng.invertible();
        const Signature before = signature(h);
        if (before.positive + before.negative + before.zero != 4) return false;
        const Signature after = signature(s.dagger() * h * s);
        if (!(after == before)) return false;
    }
    return true;
}

}  // namespace gradings::testing

#endif  // GRADINGS_TESTS_PROPERTY_SUITES_HPP
