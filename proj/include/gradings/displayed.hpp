// displayed.hpp -- gradings of the symplectic/orthogonal subalgebras cut
// out of a graded ambient algebra by an invertible (anti)symmetric form.
//
// For K with K = ±K^T the subalgebra { X : XK = -KX^T } is the +1
// eigenspace of the outer automorphism attached to K.  A grading whose
// group contains that automorphism sorts its parts into +1 parts (inside
// the subalgebra) and -1 parts (meeting it trivially); collecting the +1
// parts yields a grading of the subalgebra.

#ifndef GRADINGS_DISPLAYED_HPP
#define GRADINGS_DISPLAYED_HPP

#include "gradings/grading.hpp"
#include "gradings/maps.hpp"
#include "gradings/mat.hpp"
#include "gradings/subspace.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gradings {

// The defining identity of the subalgebra attached to K.
[[nodiscard]] inline bool preserves_form(const Mat4& x, const Mat4& k) {
    return x * k == -(k * x.transpose());
}

struct DisplayedSelection {
    Grading subgrading;                  // the parts inside the subalgebra
    std::vector<std::string> selected;   // their names, in source order
    std::vector<std::string> excluded;   // parts meeting the subalgebra trivially
};

// Sort the parts of g by the form identity and return the subalgebra
// grading.  Every part must be uniform: a part with both passing and
// failing basis vectors means the grading does not display the subalgebra.
// The selected parts are checked to span the independently computed
// solution space of the identity exactly.
[[nodiscard]] inline DisplayedSelection displayed_subgrading(const Grading& g, const Mat4& k) {
    if (!k.is_invertible())
        throw std::invalid_argument("displayed_subgrading: form matrix is singular");
    if (!(k.transpose() == k) && !(k.transpose() == -k))
        throw std::invalid_argument("displayed_subgrading: form is neither symmetric nor skew");

    std::vector<GradingPart> inside;
    std::vector<std::string> selected, excluded;
    for (const auto& p : g.parts()) {
        std::size_t passing = 0;
        for (const auto& x : p.space.basis())
            if (preserves_form(x, k)) ++passing;
        if (passing == p.space.dim()) {
            inside.push_back(p);
            selected.push_back(p.name);
        } else if (passing == 0) {
            excluded.push_back(p.name);
        } else {
            throw std::domain_error("displayed_subgrading: part " + p.name +
                                    " is split by the form");
        }
    }

    DisplayedSelection result{Grading::from_parts(std::move(inside)), std::move(selected),
                              std::move(excluded)};
    if (!result.subgrading.is_direct_sum_of(matrix_algebra_preserving(k)))
        throw std::domain_error(
            "displayed_subgrading: selected parts do not fill the subalgebra");
    return result;
}

// Replace one part by the spans of its individual basis vectors.
[[nodiscard]] inline Grading split_part(const Grading& g, const std::string& part_name) {
    std::vector<GradingPart> parts;
    bool found = false;
    for (const auto& p : g.parts()) {
        if (p.name != part_name) {
            parts.push_back(p);
            continue;
        }
        found = true;
        std::size_t piece = 1;
        for (const auto& x : p.space.basis())
            parts.push_back({p.name + "." + std::to_string(piece++), ComplexSubspace::span({x})});
    }
    if (!found) throw std::invalid_argument("split_part: no part named " + part_name);
    return Grading::from_parts(std::move(parts));
}

struct NonGroupCertificate {
    bool closed = false;
    bool group = false;  // distinct parts got distinct labels
    std::vector<std::pair<std::string, std::string>> duplicate_labels;
};

// A decomposition can be closed under the bracket and still fail to be a
// group grading: the universal group may assign two parts the same label.
[[nodiscard]] inline NonGroupCertificate certify_nongroup(const Grading& g) {
    NonGroupCertificate cert;
    cert.closed = g.closure().closed;
    if (!cert.closed) return cert;
    const auto q = g.universal_group();
    for (std::size_t j = 0; j < q.generator_images.size(); ++j)
        for (std::size_t k = j + 1; k < q.generator_images.size(); ++k)
            if (q.generator_images[j] == q.generator_images[k])
                cert.duplicate_labels.emplace_back(g.part(j).name, g.part(k).name);
    cert.group = cert.duplicate_labels.empty();
    return cert;
}

}  // namespace gradings

#endif  // GRADINGS_DISPLAYED_HPP
