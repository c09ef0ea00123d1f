// maps.hpp -- the symmetries used to cut gradings out of gl(4).
//
// Linear automorphisms of the matrix algebra come in two flavours:
//   inner:  X -> A^{-1} X A
//   outer:  X -> -(C^{-1} X C)^T
// Antilinear ones are the composition of entrywise conjugation with either
// flavour; they reverse products up to sign and pick out real forms.

#ifndef GRADINGS_MAPS_HPP
#define GRADINGS_MAPS_HPP

#include "gradings/exact.hpp"
#include "gradings/mat.hpp"
#include "gradings/subspace.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace gradings {

class Automorphism {
public:
    enum class Kind { inner, outer };

    [[nodiscard]] static Automorphism make_inner(const Mat4& a) {
        return Automorphism(Kind::inner, a);
    }
    [[nodiscard]] static Automorphism make_outer(const Mat4& c) {
        return Automorphism(Kind::outer, c);
    }

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] const Mat4& matrix() const { return m_; }

    [[nodiscard]] Mat4 apply(const Mat4& x) const {
        if (kind_ == Kind::inner) return inv_ * x * m_;
        return -(inv_ * x * m_).transpose();
    }

    // f o g o f^{-1} for an inner conjugator f = (X -> S^{-1} X S).
    [[nodiscard]] Automorphism conjugated_by_inner(const Mat4& s) const {
        const auto sinv = s.inverse_matrix();
        if (!sinv) throw std::invalid_argument("conjugated_by_inner: singular conjugator");
        if (kind_ == Kind::inner) return make_inner(*sinv * m_ * s);
        // Outer case: the defining matrix transforms with an extra inverse
        // transpose on the right.
        const auto st_inv = s.transpose().inverse_matrix();
        return make_outer(*sinv * m_ * *st_inv);
    }

private:
    Automorphism(Kind kind, const Mat4& m) : kind_(kind), m_(m) {
        const auto inv = m.inverse_matrix();
        if (!inv) throw std::invalid_argument("Automorphism: defining matrix is singular");
        inv_ = *inv;
    }

    Kind kind_;
    Mat4 m_;
    Mat4 inv_;
};

// Equality as maps on the algebra: same kind and proportional defining
// matrices (the scalar cancels in A^{-1} X A).
[[nodiscard]] inline bool projectively_equal(const Mat4& a, const Mat4& b) {
    GaussianRational ratio;
    bool have = false;
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t k = 0; k < 4; ++k) {
            const auto& x = a.at(j, k);
            const auto& y = b.at(j, k);
            if (x.is_zero() != y.is_zero()) return false;
            if (x.is_zero()) continue;
            const GaussianRational r = y / x;
            if (have && r != ratio) return false;
            ratio = r;
            have = true;
        }
    return true;  // both zero counts as proportional; callers pass invertibles
}

[[nodiscard]] inline bool same_automorphism(const Automorphism& f, const Automorphism& g) {
    return f.kind() == g.kind() && projectively_equal(f.matrix(), g.matrix());
}

class Antiautomorphism {
public:
    enum class Kind { conj_inner, conj_outer };

    // Entrywise conjugation composed with an inner map; the defining matrix
    // must satisfy F * conj(F) = +I (the "circular" case) or -I
    // ("anticircular") for the map to be involutive.
    [[nodiscard]] static Antiautomorphism make_conj_inner(const Mat4& f) {
        Antiautomorphism j(Kind::conj_inner, f);
        const Mat4 ff = f * f.conjugate();
        const Mat4 id = Mat4::identity();
        if (ff != id && ff != -id)
            throw std::invalid_argument("make_conj_inner: F*conj(F) must be +I or -I");
        j.anticircular_ = (ff == -id);
        return j;
    }

    // Entrywise conjugation composed with an outer map; E must be hermitian
    // (then the fixed set is the algebra of X with X E = -E X^dagger).
    [[nodiscard]] static Antiautomorphism make_conj_outer(const Mat4& e) {
        if (!e.is_hermitian())
            throw std::invalid_argument("make_conj_outer: E must be hermitian");
        return Antiautomorphism(Kind::conj_outer, e);
    }

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] const Mat4& matrix() const { return m_; }

    // Only meaningful for conj_inner: F*conj(F) = -I?
    [[nodiscard]] bool anticircular() const { return anticircular_; }

    [[nodiscard]] Mat4 apply(const Mat4& x) const {
        if (kind_ == Kind::conj_inner) return (inv_ * x * m_).conjugate();
        return -(inv_ * x * m_).transpose().conjugate();
    }

    [[nodiscard]] bool fixes(const Mat4& x) const { return apply(x) == x; }

    // The same fixed-point condition written without inverses:
    //   conj_inner:  X F = F conj(X)
    //   conj_outer:  X E = -E X^dagger
    [[nodiscard]] bool fixes_by_commutation(const Mat4& x) const {
        if (kind_ == Kind::conj_inner) return x * m_ == m_ * x.conjugate();
        return x * m_ == -(m_ * x.dagger());
    }

private:
    Antiautomorphism(Kind kind, const Mat4& m) : kind_(kind), m_(m) {
        const auto inv = m.inverse_matrix();
        if (!inv) throw std::invalid_argument("Antiautomorphism: defining matrix is singular");
        inv_ = *inv;
    }

    Kind kind_;
    Mat4 m_;
    Mat4 inv_;
    bool anticircular_ = false;
};

// ===========================================================================
// Spectral data on subspaces
// ===========================================================================

// If g maps the span into itself acting as one scalar, returns it.
[[nodiscard]] inline std::optional<GaussianRational>
eigenvalue_on(const Automorphism& g, const ComplexSubspace& s) {
    std::optional<GaussianRational> lambda;
    for (const auto& b : s.basis()) {
        const Mat4 gb = g.apply(b);
        // Find the scalar via one nonzero entry of b, then verify globally.
        GaussianRational candidate;
        bool found = false;
        for (std::size_t j = 0; j < 4 && !found; ++j)
            for (std::size_t k = 0; k < 4 && !found; ++k)
                if (!b.at(j, k).is_zero()) {
                    candidate = gb.at(j, k) / b.at(j, k);
                    found = true;
                }
        if (!found) continue;  // zero basis vector cannot occur in a span
        if (gb != candidate * b) return std::nullopt;
        if (lambda && *lambda != candidate) return std::nullopt;
        lambda = candidate;
    }
    return lambda;
}

// Antilinear version: J(b) = lambda * b for every basis vector b.  (This is
// basis-dependent data for an antilinear map, which is exactly how it is
// used: the catalog rows fix the basis.)
[[nodiscard]] inline std::optional<GaussianRational>
eigenvalue_on(const Antiautomorphism& j, const ComplexSubspace& s) {
    std::optional<GaussianRational> lambda;
    for (const auto& b : s.basis()) {
        const Mat4 jb = j.apply(b);
        GaussianRational candidate;
        bool found = false;
        for (std::size_t r = 0; r < 4 && !found; ++r)
            for (std::size_t c = 0; c < 4 && !found; ++c)
                if (!b.at(r, c).is_zero()) {
                    candidate = jb.at(r, c) / b.at(r, c);
                    found = true;
                }
        if (!found) continue;
        if (jb != candidate * b) return std::nullopt;
        if (lambda && *lambda != candidate) return std::nullopt;
        lambda = candidate;
    }
    return lambda;
}

// ===========================================================================
// Real intersection
// ===========================================================================

// The fixed points of an antilinear involution J inside the complex span S,
// as a real subspace: solve J(x) = x for x = sum (a_l + i b_l) B_l with
// rational unknowns a_l, b_l.
[[nodiscard]] inline RealSubspace intersect_real(const ComplexSubspace& s,
                                                 const Antiautomorphism& j) {
    const auto& basis = s.basis();
    const std::size_t m = basis.size();
    const GaussianRational i = imaginary_unit();

    // Column l      : coefficient matrix of a_l in J(x) - x
    // Column m + l  : coefficient matrix of b_l in J(x) - x
    std::vector<std::vector<Rational>> columns;
    columns.reserve(2 * m);
    for (std::size_t l = 0; l < m; ++l)
        columns.push_back(flatten_real(j.apply(basis[l]) - basis[l]));
    for (std::size_t l = 0; l < m; ++l)
        columns.push_back(flatten_real(-i * j.apply(basis[l]) - i * basis[l]));

    // Transpose into equations (32 rows, 2m unknowns).
    std::vector<std::vector<Rational>> equations(32, std::vector<Rational>(2 * m));
    for (std::size_t col = 0; col < 2 * m; ++col)
        for (std::size_t row = 0; row < 32; ++row) equations[row][col] = columns[col][row];

    std::vector<Mat4> fixed;
    for (const auto& sol : kernel_basis(equations, 2 * m)) {
        Mat4 x;
        for (std::size_t l = 0; l < m; ++l) {
            const GaussianRational coeff{sol[l], sol[m + l]};
            if (!coeff.is_zero()) x = x + coeff * basis[l];
        }
        if (!x.is_zero()) fixed.push_back(x);
    }
    return RealSubspace::span(std::move(fixed));
}

}  // namespace gradings

#endif  // GRADINGS_MAPS_HPP
