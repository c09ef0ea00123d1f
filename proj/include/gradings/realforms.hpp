// realforms.hpp -- real forms of complex matrix Lie algebras and the three
// ways a grading descends to one.
//
// A real form is the fixed-point set of an involutive antiautomorphism J.
// A complex grading descends to the real form when every part meets the
// fixed set in full dimension ("intersection" route), or when the parts can
// be rescaled into the fixed set by unit multipliers ("scaled basis" route),
// or by splitting the fixed set into joint real eigenspaces of a commuting
// automorphism family ("eigendecomposition" route).  The routes must agree;
// the verification below computes all of them independently.

#ifndef GRADINGS_REALFORMS_HPP
#define GRADINGS_REALFORMS_HPP

#include "gradings/exact.hpp"
#include "gradings/grading.hpp"
#include "gradings/maps.hpp"
#include "gradings/mat.hpp"
#include "gradings/subspace.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace gradings {

// ===========================================================================
// Fixed-point real forms
// ===========================================================================

struct RealForm {
    std::string name;
    Antiautomorphism antiaut;
    RealSubspace basis;
};

// The fixed points of j inside a complex parent space.  For a genuine real
// form the real dimension of the fixed set equals the complex dimension of
// the parent; anything else signals an invalid pairing.
[[nodiscard]] inline RealForm fixed_points(std::string name, const Antiautomorphism& j,
                                           const ComplexSubspace& parent) {
    RealSubspace basis = intersect_real(parent, j);
    if (basis.dim() != parent.dim())
        throw std::invalid_argument("fixed_points: dimension mismatch for " + name + ": got " +
                                    std::to_string(basis.dim()) + ", want " +
                                    std::to_string(parent.dim()));
    return RealForm{std::move(name), j, std::move(basis)};
}

// Realness: the basis meets its own i-multiple trivially and together they
// span the complex parent, so every parent element is uniquely u + i*v.
[[nodiscard]] inline bool is_real_form_of(const RealSubspace& basis,
                                          const ComplexSubspace& parent) {
    if (basis.dim() != parent.dim()) return false;
    RowSpace<Rational> joint(32);
    for (const auto& b : basis.basis()) {
        if (!parent.contains(b)) return false;
        if (!joint.insert(flatten_real(b))) return false;
        if (!joint.insert(flatten_real(imaginary_unit() * b))) return false;
    }
    return true;
}

// ===========================================================================
// Intersection route
// ===========================================================================

struct RealGradingResult {
    bool determined = false;
    std::optional<RealGrading> grading;
    std::string failure;  // empty when determined
};

// Intersect every part with the fixed set of j.  The grading descends
// exactly when every intersection has real dimension equal to the complex
// dimension of its part; a single deficient part is a negative result.
[[nodiscard]] inline RealGradingResult determine_real_grading(const Grading& g,
                                                              const Antiautomorphism& j) {
    RealGradingResult result;
    std::vector<RealGradingPart> parts;
    for (const auto& p : g.parts()) {
        RealSubspace s = intersect_real(p.space, j);
        if (s.dim() != p.space.dim()) {
            result.failure = "part " + p.name + " meets the fixed set in dimension " +
                             std::to_string(s.dim()) + " instead of " +
                             std::to_string(p.space.dim());
            return result;
        }
        parts.push_back({p.name, std::move(s)});
    }
    result.determined = true;
    result.grading = RealGrading::from_parts(std::move(parts));
    return result;
}

// ===========================================================================
// Scaled-basis route
// ===========================================================================

struct CoefficientCheck {
    bool ok = false;
    std::string failure;
};

// Verify a table of unit multipliers, one per basis vector of g in part
// order: each scaled vector alpha*X must be fixed by j (equivalently X is a
// j-eigenvector with eigenvalue alpha/conj(alpha)), the scaled vectors of a
// part must span exactly the part's intersection with the fixed set, and
// the resulting real decomposition must again be a group grading, closed
// with rational structure constants.
[[nodiscard]] inline CoefficientCheck verify_coefficient_table(
    const Grading& g, const Antiautomorphism& j,
    const std::vector<GaussianRational>& multipliers) {
    CoefficientCheck check;
    if (multipliers.size() != g.total_dim()) {
        check.failure = "expected " + std::to_string(g.total_dim()) + " multipliers, got " +
                        std::to_string(multipliers.size());
        return check;
    }
    std::vector<RealGradingPart> parts;
    std::size_t idx = 0;
    for (const auto& p : g.parts()) {
        std::vector<Mat4> scaled;
        for (const auto& x : p.space.basis()) {
            const GaussianRational alpha = multipliers[idx++];
            if (alpha.is_zero()) {
                check.failure = "zero multiplier in part " + p.name;
                return check;
            }
            const GaussianRational lambda = phase_ratio(alpha);
            if (!(j.apply(x) == lambda * x)) {
                check.failure = "part " + p.name + ": vector is not an eigenvector with " +
                                format_scalar(lambda);
                return check;
            }
            const Mat4 z = alpha * x;
            if (!j.fixes(z) || !j.fixes_by_commutation(z)) {
                check.failure = "part " + p.name + ": scaled vector escapes the fixed set";
                return check;
            }
            scaled.push_back(z);
        }
        RealSubspace span = RealSubspace::span(std::move(scaled));
        if (!span.same_span(intersect_real(p.space, j))) {
            check.failure = "part " + p.name + ": scaled span differs from the intersection";
            return check;
        }
        parts.push_back({p.name, std::move(span)});
    }
    const RealGrading rg = RealGrading::from_parts(std::move(parts));
    if (!rg.is_direct_sum_of(intersect_real(merged_span(g), j))) {
        check.failure = "scaled parts do not decompose the fixed set";
        return check;
    }
    const auto closure = rg.closure();
    if (!closure.closed) {
        check.failure = "real decomposition not closed: " + closure.failure;
        return check;
    }
    if (!rg.is_group_grading()) {
        check.failure = "real decomposition is not a group grading";
        return check;
    }
    check.ok = true;
    return check;
}

// ===========================================================================
// Eigendecomposition route
// ===========================================================================

[[nodiscard]] inline bool commute_on_gl4(const Automorphism& g, const Antiautomorphism& j) {
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
            const Mat4 u = Mat4::unit(r, c);
            if (!(g.apply(j.apply(u)) == j.apply(g.apply(u)))) return false;
        }
    return true;
}

[[nodiscard]] inline bool commute_on_gl4(const Automorphism& g, const Automorphism& h) {
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
            const Mat4 u = Mat4::unit(r, c);
            if (!(g.apply(h.apply(u)) == h.apply(g.apply(u)))) return false;
        }
    return true;
}

// { x in piece : gen(x) = lambda*x }, a real subspace of a real span.
[[nodiscard]] inline RealSubspace real_eigenspace_within(const Automorphism& gen,
                                                         const GaussianRational& lambda,
                                                         const RealSubspace& piece) {
    const auto& basis = piece.basis();
    std::vector<std::vector<Rational>> equations(32, std::vector<Rational>(basis.size()));
    for (std::size_t l = 0; l < basis.size(); ++l) {
        const auto col = flatten_real(gen.apply(basis[l]) - lambda * basis[l]);
        for (std::size_t row = 0; row < 32; ++row) equations[row][l] = col[row];
    }
    std::vector<Mat4> found;
    for (const auto& sol : kernel_basis(equations, basis.size())) {
        Mat4 x;
        for (std::size_t l = 0; l < basis.size(); ++l)
            if (!scalar_is_zero(sol[l])) x = x + GaussianRational(sol[l]) * basis[l];
        if (!x.is_zero()) found.push_back(x);
    }
    return RealSubspace::span(std::move(found));
}

// Split the fixed set of j into joint eigenspaces of a commuting generator
// family.  Candidate eigenvalues for each generator are read off from its
// scalar action on the parts of a reference grading of the same space.
// Throws when a generator fails to commute with j, fails to act by scalars
// on the reference parts, or when the candidates do not exhaust a piece.
[[nodiscard]] inline std::vector<RealSubspace> mad_eigendecompose(
    const std::vector<Automorphism>& generators, const Antiautomorphism& j,
    const Grading& reference) {
    for (const auto& gen : generators)
        if (!commute_on_gl4(gen, j))
            throw std::invalid_argument("mad_eigendecompose: generator does not commute");

    std::vector<RealSubspace> pieces{intersect_real(merged_span(reference), j)};
    for (const auto& gen : generators) {
        std::vector<GaussianRational> candidates;
        for (const auto& p : reference.parts()) {
            const auto lambda = eigenvalue_on(gen, p.space);
            if (!lambda)
                throw std::invalid_argument(
                    "mad_eigendecompose: generator is not scalar on part " + p.name);
            if (std::find(candidates.begin(), candidates.end(), *lambda) == candidates.end())
                candidates.push_back(*lambda);
        }
        std::vector<RealSubspace> next;
        for (const auto& piece : pieces) {
            std::size_t covered = 0;
            for (const auto& lambda : candidates) {
                RealSubspace sub = real_eigenspace_within(gen, lambda, piece);
                if (sub.dim() == 0) continue;
                covered += sub.dim();
                next.push_back(std::move(sub));
            }
            if (covered != piece.dim())
                throw std::invalid_argument(
                    "mad_eigendecompose: candidate eigenvalues do not exhaust a piece");
        }
        pieces = std::move(next);
    }
    return pieces;
}

// Same partition up to reordering, compared span-by-span.
[[nodiscard]] inline bool partitions_match(const std::vector<RealSubspace>& pieces,
                                           const RealGrading& g) {
    if (pieces.size() != g.part_count()) return false;
    std::vector<bool> used(pieces.size(), false);
    for (const auto& p : g.parts()) {
        bool matched = false;
        for (std::size_t m = 0; m < pieces.size() && !matched; ++m) {
            if (used[m]) continue;
            if (pieces[m].dim() == p.space.dim() && pieces[m].same_span(p.space)) {
                used[m] = true;
                matched = true;
            }
        }
        if (!matched) return false;
    }
    return true;
}

// ===========================================================================
// Diagonalizable-automorphism-group membership
// ===========================================================================

// Parametric shapes of the cataloged abelian automorphism groups, tested
// projectively (defining matrices up to a nonzero scalar).
enum class MadFamilyPattern {
    finite_only,                 // membership by closure of the listed generators
    any_diagonal,                // any invertible diagonal matrix
    diagonal_sign_reciprocal,    // diag(1, e, a, 1/a) with e^2 = 1, up to scale
    diagonal_reciprocal_pairs,   // diag(a, 1/a, b, 1/b), up to scale
    block_scalar_reciprocal,     // sigma_j (x) diag(a, 1/a), up to scale
};

struct MadGroupSpec {
    std::string name;
    std::vector<Mat4> inner;     // sampled inner generators
    std::optional<Mat4> outer;   // the single outer defining matrix, if any
    MadFamilyPattern pattern = MadFamilyPattern::finite_only;
};

// First nonzero entry scaled to 1: a canonical projective representative.
[[nodiscard]] inline Mat4 projective_normalize(const Mat4& m) {
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            if (!m.at(r, c).is_zero()) return inverse(m.at(r, c)) * m;
    return m;
}

// All projective classes generated by the given matrices under products.
// Guards against runaway growth: the cataloged finite families have at most
// sixteen classes.
[[nodiscard]] inline std::vector<Mat4> projective_closure(const std::vector<Mat4>& gens,
                                                          std::size_t limit = 256) {
    std::map<std::string, Mat4> classes;
    const Mat4 id = Mat4::identity();
    classes.emplace(id.to_text(), id);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Mat4> snapshot;
        for (const auto& [key, value] : classes) snapshot.push_back(value);
        for (const auto& m : snapshot)
            for (const auto& g : gens) {
                const Mat4 prod = projective_normalize(m * g);
                if (classes.emplace(prod.to_text(), prod).second) grew = true;
                if (classes.size() > limit)
                    throw std::invalid_argument("projective_closure: family is not finite");
            }
    }
    std::vector<Mat4> result;
    for (const auto& [key, value] : classes) result.push_back(value);
    return result;
}

[[nodiscard]] inline bool projectively_among(const Mat4& m, const std::vector<Mat4>& classes) {
    for (const auto& c : classes)
        if (projectively_equal(m, c)) return true;
    return false;
}

// The sixteen projective classes sigma_j (x) sigma_k.
[[nodiscard]] inline std::vector<Mat4> pauli_tensor_classes() {
    std::vector<Mat4> classes;
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t k = 0; k < 4; ++k) classes.push_back(tensor(pauli(j), pauli(k)));
    return classes;
}

namespace detail {

[[nodiscard]] inline bool is_diagonal_invertible(const Mat4& m) {
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
            if (r == c && m.at(r, c).is_zero()) return false;
            if (r != c && !m.at(r, c).is_zero()) return false;
        }
    return true;
}

// Nonzero support exactly { (0,2), (1,3), (2,0), (3,1) }, all entries nonzero.
[[nodiscard]] inline bool is_antiblock_diagonal(const Mat4& m) {
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
            const bool slot = (r + 2) % 4 == c && r / 2 != c / 2;
            if (slot && m.at(r, c).is_zero()) return false;
            if (!slot && !m.at(r, c).is_zero()) return false;
        }
    return true;
}

[[nodiscard]] inline bool matches_inner_pattern(const Mat4& m, const MadGroupSpec& spec) {
    const GaussianRational one(1);
    switch (spec.pattern) {
        case MadFamilyPattern::finite_only:
            return projectively_among(m, projective_closure(spec.inner));
        case MadFamilyPattern::any_diagonal:
            return is_diagonal_invertible(m);
        case MadFamilyPattern::diagonal_sign_reciprocal: {
            if (!is_diagonal_invertible(m)) return false;
            const GaussianRational sign = m.at(1, 1) / m.at(0, 0);
            return (sign * sign == one) && m.at(2, 2) * m.at(3, 3) == m.at(0, 0) * m.at(0, 0);
        }
        case MadFamilyPattern::diagonal_reciprocal_pairs:
            return is_diagonal_invertible(m) &&
                   m.at(0, 0) * m.at(1, 1) == m.at(2, 2) * m.at(3, 3);
        case MadFamilyPattern::block_scalar_reciprocal: {
            if (is_diagonal_invertible(m)) {
                const GaussianRational r = m.at(2, 2) / m.at(0, 0);
                return r * r == one && m.at(3, 3) == r * m.at(1, 1);
            }
            if (is_antiblock_diagonal(m)) {
                const GaussianRational r = m.at(2, 0) / m.at(0, 2);
                return r * r == one && m.at(3, 1) == r * m.at(1, 3);
            }
            return false;
        }
    }
    return false;
}

}  // namespace detail

// Projective membership of an automorphism in the group cut out by a spec:
// inner members match the family pattern (or the finite closure of the
// listed generators), outer members factor as (inner member) * (the outer
// defining matrix).
[[nodiscard]] inline bool mad_contains(const MadGroupSpec& spec, const Automorphism& h) {
    if (h.kind() == Automorphism::Kind::inner)
        return detail::matches_inner_pattern(h.matrix(), spec);
    if (!spec.outer) return false;
    const auto outer_inv = spec.outer->inverse_matrix();
    if (!outer_inv) throw std::invalid_argument("mad_contains: singular outer matrix");
    return detail::matches_inner_pattern(h.matrix() * *outer_inv, spec);
}

// ===========================================================================
// Scaled-basis witness from a group element
// ===========================================================================

struct RealBasisResult {
    bool member = false;  // whether h belongs to the group
    std::optional<RealGrading> grading;
    std::vector<GaussianRational> multipliers;  // one per part, when member
    std::string failure;
};

// When h lies in the abelian group that cuts out g and the basis of g is
// real, each part is an h-eigenspace with unit eigenvalue lambda_k, and the
// composition of entrywise conjugation with h acts on the part as the
// antilinear eigenvalue conj(lambda_k); picking alpha_k with
// alpha_k/conj(alpha_k) = conj(lambda_k) rescales the basis into the fixed
// set of that composition, producing the real grading.
[[nodiscard]] inline RealBasisResult real_basis_witness(const Grading& g, const Automorphism& h,
                                                        const MadGroupSpec& spec) {
    for (const auto& p : g.parts())
        for (const auto& b : p.space.basis())
            for (std::size_t r = 0; r < 4; ++r)
                for (std::size_t c = 0; c < 4; ++c)
                    if (!b.at(r, c).im.is_zero())
                        throw std::invalid_argument("real_basis_witness: basis is not real");

    RealBasisResult result;
    if (!mad_contains(spec, h)) {
        result.failure = "automorphism is outside the group";
        return result;
    }
    result.member = true;
    std::vector<RealGradingPart> parts;
    for (const auto& p : g.parts()) {
        const auto lambda = eigenvalue_on(h, p.space);
        if (!lambda) {
            result.failure = "automorphism is not scalar on part " + p.name;
            result.member = false;
            return result;
        }
        if (!(norm_sq(*lambda) == Rational(1)))
            throw std::domain_error("real_basis_witness: eigenvalue on " + p.name +
                                    " is not a unit");
        const auto alpha = real_multiplier_for_eigenvalue(conj(*lambda));
        if (!alpha)
            throw std::domain_error("real_basis_witness: eigenvalue on " + p.name +
                                    " is outside the fourth roots of unity");
        result.multipliers.push_back(*alpha);
        std::vector<Mat4> scaled;
        for (const auto& x : p.space.basis()) scaled.push_back(*alpha * x);
        parts.push_back({p.name, RealSubspace::span(std::move(scaled))});
    }
    result.grading = RealGrading::from_parts(std::move(parts));
    return result;
}

// The antiautomorphism obtained by composing entrywise conjugation with h.
[[nodiscard]] inline Antiautomorphism conjugation_composed_with(const Automorphism& h) {
    if (h.kind() == Automorphism::Kind::inner)
        return Antiautomorphism::make_conj_inner(h.matrix());
    return Antiautomorphism::make_conj_outer(h.matrix());
}

// ===========================================================================
// Exhaustive scan for compatible real structures on a two-generator grading
// ===========================================================================

struct RealStructureTarget {
    enum class Kind { circular, anticircular, hermitian };
    Kind kind = Kind::hermitian;
    std::size_t positive = 0;  // hermitian targets only
    std::size_t negative = 0;
};

struct RealStructureWitness {
    Mat4 matrix;
    GaussianRational p_twist;  // scalar eta with P*M + eta*M*twist(P) = 0
    GaussianRational q_twist;  // scalar mu likewise for Q
    std::vector<GaussianRational> part_eigenvalues;  // one per grading part
};

// Solutions M of the simultaneous equations A*M + t*M*B = 0.
[[nodiscard]] inline std::vector<Mat4> twisted_commutant(
    const std::vector<std::tuple<Mat4, GaussianRational, Mat4>>& conditions) {
    std::vector<std::vector<GaussianRational>> equations(16 * conditions.size(),
                                                         std::vector<GaussianRational>(16));
    std::size_t col = 0;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
            const Mat4 u = Mat4::unit(r, c);
            std::size_t row = 0;
            for (const auto& [a, t, b] : conditions) {
                const auto img = flatten_complex(a * u + t * (u * b));
                for (std::size_t e = 0; e < 16; ++e) equations[row++][col] = img[e];
            }
            ++col;
        }
    std::vector<Mat4> result;
    for (const auto& sol : kernel_basis(equations, 16)) {
        Mat4 m;
        std::size_t idx = 0;
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c) m = m + sol[idx++] * Mat4::unit(r, c);
        result.push_back(m);
    }
    return result;
}

// A real basis of the hermitian members of a complex span.
[[nodiscard]] inline std::vector<Mat4> hermitian_members(const std::vector<Mat4>& span_basis) {
    const std::size_t m = span_basis.size();
    std::vector<std::vector<Rational>> equations(32, std::vector<Rational>(2 * m));
    const GaussianRational i = imaginary_unit();
    for (std::size_t l = 0; l < m; ++l) {
        const auto real_col = flatten_real(span_basis[l] - span_basis[l].dagger());
        const auto imag_col = flatten_real(i * (span_basis[l] + span_basis[l].dagger()));
        for (std::size_t row = 0; row < 32; ++row) {
            equations[row][l] = real_col[row];
            equations[row][m + l] = imag_col[row];
        }
    }
    std::vector<Mat4> result;
    for (const auto& sol : kernel_basis(equations, 2 * m)) {
        Mat4 h;
        for (std::size_t l = 0; l < m; ++l) {
            const GaussianRational coeff{sol[l], sol[m + l]};
            if (!coeff.is_zero()) h = h + coeff * span_basis[l];
        }
        if (!h.is_zero()) result.push_back(h);
    }
    return result;
}

namespace detail {

// Common unit eigenvalue of an antilinear map on every listed basis vector
// of every part, or nullopt when some part fails.
[[nodiscard]] inline std::optional<std::vector<GaussianRational>> antilinear_part_eigenvalues(
    const Grading& g, const std::function<Mat4(const Mat4&)>& j) {
    std::vector<GaussianRational> eigenvalues;
    for (const auto& p : g.parts()) {
        std::optional<GaussianRational> common;
        for (const auto& x : p.space.basis()) {
            const auto lambda = scalar_ratio(j(x), x);
            if (!lambda || !(norm_sq(*lambda) == Rational(1))) return std::nullopt;
            if (common && !(*common == *lambda)) return std::nullopt;
            common = lambda;
        }
        eigenvalues.push_back(*common);
    }
    return eigenvalues;
}

}  // namespace detail

// Every defining matrix (one representative per twist pair and real line)
// of an antilinear involution of the requested kind compatible with the
// grading generated by p and q.  Compatibility of a part spanned by X means
// the scaled vector alpha*X lies in the fixed set for some unit alpha; for
// the defining matrix M this forces P*M = -eta*M*P^dagger (hermitian kind)
// or P*M = nu*M*conj(P) (conjugation kinds) with a twist scalar per
// generator.  Powers p^4 = q^4 = 1 force every twist to be a fourth root of
// unity, so scanning the sixteen twist pairs is exhaustive; an empty result
// certifies that no real form of that kind carries the grading.
[[nodiscard]] inline std::vector<RealStructureWitness> real_structure_scan(
    const Mat4& p, const Mat4& q, const Grading& g, const RealStructureTarget& target) {
    if (!(p * p * p * p == Mat4::identity()) || !(q * q * q * q == Mat4::identity()))
        throw std::invalid_argument("real_structure_scan: generators must have order four");

    const GaussianRational i = imaginary_unit();
    const std::vector<GaussianRational> fourth_roots{GaussianRational(1), GaussianRational(-1),
                                                     i, -i};
    std::vector<RealStructureWitness> witnesses;

    for (const auto& eta : fourth_roots)
        for (const auto& mu : fourth_roots) {
            std::vector<Mat4> kernel;
            if (target.kind == RealStructureTarget::Kind::hermitian)
                kernel = twisted_commutant({{p, eta, p.dagger()}, {q, mu, q.dagger()}});
            else
                kernel = twisted_commutant({{p, -eta, p.conjugate()}, {q, -mu, q.conjugate()}});
            if (kernel.empty()) continue;

            std::vector<Mat4> candidates;
            if (target.kind == RealStructureTarget::Kind::hermitian)
                candidates = hermitian_members(kernel);
            else
                candidates = kernel;

            for (const auto& m : candidates) {
                if (!m.is_invertible()) continue;
                std::optional<std::vector<GaussianRational>> eigenvalues;
                if (target.kind == RealStructureTarget::Kind::hermitian) {
                    const Signature sig = signature(m);
                    const bool straight =
                        sig.positive == target.positive && sig.negative == target.negative;
                    const bool flipped =
                        sig.positive == target.negative && sig.negative == target.positive;
                    if (sig.zero != 0 || (!straight && !flipped)) continue;
                    const Antiautomorphism j = Antiautomorphism::make_conj_outer(m);
                    eigenvalues = detail::antilinear_part_eigenvalues(
                        g, [&j](const Mat4& x) { return j.apply(x); });
                } else {
                    // Complex rescaling does not change the map x -> conj(m^-1 x m),
                    // so m * conj(m) = r * identity with real r of the right sign
                    // already certifies the kind.
                    const auto ratio = scalar_ratio(m * m.conjugate(), Mat4::identity());
                    if (!ratio || !ratio->is_real()) continue;
                    const bool want_negative =
                        target.kind == RealStructureTarget::Kind::anticircular;
                    if (ratio->re.is_zero() || (ratio->re < 0) != want_negative) continue;
                    const auto inv = m.inverse_matrix();
                    eigenvalues = detail::antilinear_part_eigenvalues(
                        g, [&](const Mat4& x) { return (*inv * x * m).conjugate(); });
                }
                if (!eigenvalues) continue;
                witnesses.push_back({m, eta, mu, std::move(*eigenvalues)});
            }
        }
    return witnesses;
}

}  // namespace gradings

#endif  // GRADINGS_REALFORMS_HPP
