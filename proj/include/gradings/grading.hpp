// grading.hpp -- decompositions of a matrix Lie algebra and their groups.
//
// A grading is a list of named, jointly independent subspaces ("parts").
// It is closed when the bracket of any two parts lands inside a single part
// (or vanishes); the nonzero bracket relations then present the universal
// abelian group of the decomposition: one generator per part, one relation
// g_j + g_k - g_m per relation [L_j, L_k] <= L_m.
//
// The machinery is identical for complex spans and for real spans of complex
// matrices, so the core is templated on the subspace type.

#ifndef GRADINGS_GRADING_HPP
#define GRADINGS_GRADING_HPP

#include "gradings/abelian.hpp"
#include "gradings/exact.hpp"
#include "gradings/maps.hpp"
#include "gradings/mat.hpp"
#include "gradings/subspace.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gradings {

template <typename SubspaceT>
struct DecompositionPart {
    std::string name;
    SubspaceT space;
};

struct BracketRelation {
    std::size_t j = 0;  // part indices, j <= k
    std::size_t k = 0;
    std::size_t target = 0;
};

struct ClosureReport {
    bool closed = false;
    std::vector<BracketRelation> relations;  // one per nonvanishing pair
    std::string failure;                     // empty when closed
};

template <typename SubspaceT>
class Decomposition {
public:
    using Part = DecompositionPart<SubspaceT>;

    [[nodiscard]] static Decomposition from_parts(std::vector<Part> parts) {
        Decomposition g;
        g.parts_ = std::move(parts);
        return g;
    }

    [[nodiscard]] const std::vector<Part>& parts() const { return parts_; }
    [[nodiscard]] std::size_t part_count() const { return parts_.size(); }

    [[nodiscard]] std::size_t total_dim() const {
        std::size_t d = 0;
        for (const auto& p : parts_) d += p.space.dim();
        return d;
    }

    [[nodiscard]] const Part& part(std::size_t j) const { return parts_.at(j); }

    [[nodiscard]] std::optional<std::size_t> part_index(const std::string& name) const {
        for (std::size_t j = 0; j < parts_.size(); ++j)
            if (parts_[j].name == name) return j;
        return std::nullopt;
    }

    // The parts are jointly independent and fill the ambient space.
    [[nodiscard]] bool is_direct_sum_of(const SubspaceT& ambient) const {
        if (total_dim() != ambient.dim()) return false;
        RowSpace<typename SubspaceT::Field> acc(SubspaceT::coord_width);
        for (const auto& p : parts_)
            for (const auto& b : p.space.basis()) {
                if (!ambient.contains(b)) return false;
                if (!acc.insert(SubspaceT::flatten(b))) return false;
            }
        return true;
    }

    // Index of the unique part containing x, if any.
    [[nodiscard]] std::optional<std::size_t> part_containing(const Mat4& x) const {
        for (std::size_t j = 0; j < parts_.size(); ++j)
            if (parts_[j].space.contains(x)) return j;
        return std::nullopt;
    }

    [[nodiscard]] ClosureReport closure() const {
        ClosureReport rep;
        for (std::size_t j = 0; j < parts_.size(); ++j) {
            for (std::size_t k = j; k < parts_.size(); ++k) {
                std::optional<std::size_t> target;
                bool any_nonzero = false;
                for (const auto& bj : parts_[j].space.basis())
                    for (const auto& bk : parts_[k].space.basis()) {
                        const Mat4 br = bracket(bj, bk);
                        if (br.is_zero()) continue;
                        any_nonzero = true;
                        const auto home = part_containing(br);
                        if (!home) {
                            rep.failure = "[" + parts_[j].name + "," + parts_[k].name +
                                          "] leaves the decomposition";
                            return rep;
                        }
                        if (target && *target != *home) {
                            rep.failure = "[" + parts_[j].name + "," + parts_[k].name +
                                          "] spreads over two parts";
                            return rep;
                        }
                        target = *home;
                    }
                if (any_nonzero) rep.relations.push_back({j, k, *target});
            }
        }
        rep.closed = true;
        return rep;
    }

    // Universal abelian group of the decomposition, with one generator per
    // part.  Requires closure.
    [[nodiscard]] QuotientPresentation universal_group() const {
        const auto rep = closure();
        if (!rep.closed)
            throw std::logic_error("universal_group: decomposition is not closed: " + rep.failure);
        IntMatrix relations;
        for (const auto& r : rep.relations) {
            std::vector<Integer> row(parts_.size(), 0);
            row[r.j] += 1;
            row[r.k] += 1;
            row[r.target] -= 1;
            relations.push_back(std::move(row));
        }
        return quotient_by_relations(parts_.size(), relations);
    }

    // A closed decomposition is a group grading when distinct parts receive
    // distinct labels in the universal group.
    [[nodiscard]] bool is_group_grading() const {
        const auto q = universal_group();
        for (std::size_t j = 0; j < q.generator_images.size(); ++j)
            for (std::size_t k = j + 1; k < q.generator_images.size(); ++k)
                if (q.generator_images[j] == q.generator_images[k]) return false;
        return true;
    }

private:
    Decomposition() = default;
    std::vector<Part> parts_;
};

using Grading = Decomposition<ComplexSubspace>;
using GradingPart = DecompositionPart<ComplexSubspace>;
using RealGrading = Decomposition<RealSubspace>;
using RealGradingPart = DecompositionPart<RealSubspace>;

// The span of all parts together (the graded space itself).
template <typename SubspaceT>
[[nodiscard]] SubspaceT merged_span(const Decomposition<SubspaceT>& g) {
    std::vector<Mat4> basis;
    for (const auto& p : g.parts())
        for (const auto& b : p.space.basis()) basis.push_back(b);
    return SubspaceT::span(std::move(basis));
}

// ===========================================================================
// Spectra of automorphism families on a grading
// ===========================================================================

// One row per part: the eigenvalue of each generator on that part, or
// nullopt if some generator fails to act by a scalar somewhere.
[[nodiscard]] inline std::optional<std::vector<std::vector<GaussianRational>>>
eigenvalue_table(const std::vector<Automorphism>& generators, const Grading& g) {
    std::vector<std::vector<GaussianRational>> table;
    for (const auto& p : g.parts()) {
        std::vector<GaussianRational> row;
        for (const auto& gen : generators) {
            const auto lambda = eigenvalue_on(gen, p.space);
            if (!lambda) return std::nullopt;
            row.push_back(*lambda);
        }
        table.push_back(std::move(row));
    }
    return table;
}

[[nodiscard]] inline bool rows_pairwise_distinct(
    const std::vector<std::vector<GaussianRational>>& table) {
    for (std::size_t j = 0; j < table.size(); ++j)
        for (std::size_t k = j + 1; k < table.size(); ++k)
            if (table[j] == table[k]) return false;
    return true;
}

// True when every generator acts with purely real eigenvalues on every part.
[[nodiscard]] inline bool has_real_spectrum(const Automorphism& gen, const Grading& g) {
    for (const auto& p : g.parts()) {
        const auto lambda = eigenvalue_on(gen, p.space);
        if (!lambda || !lambda->is_real()) return false;
    }
    return true;
}

// ===========================================================================
// Ambient algebras
// ===========================================================================

[[nodiscard]] inline ComplexSubspace gl4_space() {
    std::vector<Mat4> basis;
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t k = 0; k < 4; ++k) basis.push_back(Mat4::unit(j, k));
    return ComplexSubspace::span(std::move(basis));
}

[[nodiscard]] inline ComplexSubspace sl4_space() {
    std::vector<Mat4> basis;
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t k = 0; k < 4; ++k)
            if (j != k) basis.push_back(Mat4::unit(j, k));
    for (std::size_t j = 0; j < 3; ++j)
        basis.push_back(Mat4::unit(j, j) - Mat4::unit(j + 1, j + 1));
    return ComplexSubspace::span(std::move(basis));
}

// { X : X K = -K X^T }, the symplectic/orthogonal algebra attached to an
// invertible K (10-dimensional for antisymmetric K, 6 for symmetric).
[[nodiscard]] inline ComplexSubspace matrix_algebra_preserving(const Mat4& k) {
    std::vector<std::vector<GaussianRational>> equations(16,
                                                         std::vector<GaussianRational>(16));
    std::size_t col = 0;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
            const Mat4 x = Mat4::unit(r, c);
            const auto img = flatten_complex(x * k + k * x.transpose());
            for (std::size_t row = 0; row < 16; ++row) equations[row][col] = img[row];
            ++col;
        }
    std::vector<Mat4> basis;
    for (const auto& sol : kernel_basis(equations, 16)) {
        Mat4 x;
        std::size_t idx = 0;
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c) x = x + sol[idx++] * Mat4::unit(r, c);
        basis.push_back(x);
    }
    return ComplexSubspace::span(std::move(basis));
}

// Basis of the intersection of two complex spans.
[[nodiscard]] inline std::vector<Mat4> intersect_complex(const ComplexSubspace& a,
                                                         const ComplexSubspace& b) {
    // Solve sum x_l A_l = sum y_m B_m: kernel of [A | -B] glued columnwise.
    const std::size_t na = a.dim(), nb = b.dim();
    std::vector<std::vector<GaussianRational>> equations(16,
                                                         std::vector<GaussianRational>(na + nb));
    for (std::size_t l = 0; l < na; ++l) {
        const auto col = flatten_complex(a.basis()[l]);
        for (std::size_t row = 0; row < 16; ++row) equations[row][l] = col[row];
    }
    for (std::size_t m = 0; m < nb; ++m) {
        const auto col = flatten_complex(b.basis()[m]);
        for (std::size_t row = 0; row < 16; ++row) equations[row][na + m] = -col[row];
    }
    std::vector<Mat4> result;
    RowSpace<GaussianRational> seen(16);
    for (const auto& sol : kernel_basis(equations, na + nb)) {
        Mat4 x;
        for (std::size_t l = 0; l < na; ++l)
            if (!sol[l].is_zero()) x = x + sol[l] * a.basis()[l];
        if (x.is_zero()) continue;
        if (seen.insert(flatten_complex(x))) result.push_back(x);
    }
    return result;
}

}  // namespace gradings

#endif  // GRADINGS_GRADING_HPP
