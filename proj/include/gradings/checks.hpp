// checks.hpp -- the catalog-driven verification battery.
//
// Every recorded claim of the catalog becomes one or more named checks.
// A check never throws: unexpected exceptions are converted into failures
// with the message preserved, so one bad entry cannot mask the others.
// Expected-negative claims (a grading NOT descending, a structure being
// absent) are first-class checks that pass when the absence is confirmed.

#ifndef GRADINGS_CHECKS_HPP
#define GRADINGS_CHECKS_HPP

#include "gradings/abelian.hpp"
#include "gradings/catalog.hpp"
#include "gradings/displayed.hpp"
#include "gradings/exact.hpp"
#include "gradings/grading.hpp"
#include "gradings/maps.hpp"
#include "gradings/mat.hpp"
#include "gradings/realforms.hpp"
#include "gradings/subspace.hpp"

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace gradings {

struct CheckResult {
    std::string id;
    std::string claim;
    bool passed = false;
    std::string details;
};

namespace detail {

// Runs fn (returning {passed, details}) under an exception net.
template <typename Fn>
void add_check(std::vector<CheckResult>& out, std::string id, std::string claim, Fn&& fn) {
    CheckResult r{std::move(id), std::move(claim), false, {}};
    try {
        auto [ok, details] = fn();
        r.passed = ok;
        r.details = std::move(details);
    } catch (const std::exception& e) {
        r.passed = false;
        r.details = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(r));
}

using Verdict = std::pair<bool, std::string>;

[[nodiscard]] inline bool real_proportional(const Mat4& a, const Mat4& b) {
    const auto ratio = scalar_ratio(a, b);
    return ratio && ratio->is_real() && !ratio->is_zero();
}

[[nodiscard]] inline bool basis_is_real(const Grading& g) {
    for (const auto& p : g.parts())
        for (const auto& b : p.space.basis())
            for (std::size_t r = 0; r < 4; ++r)
                for (std::size_t c = 0; c < 4; ++c)
                    if (!b.at(r, c).im.is_zero()) return false;
    return true;
}

}  // namespace detail

// ===========================================================================
// Catalog-entry adapters
// ===========================================================================

[[nodiscard]] inline Antiautomorphism antiaut_of(const Catalog& cat,
                                                 const RepresentationSpec& rep) {
    const Mat4& m = cat.matrix(rep.name);
    if (rep.kind == RealStructureTarget::Kind::hermitian)
        return Antiautomorphism::make_conj_outer(m);
    return Antiautomorphism::make_conj_inner(m);
}

[[nodiscard]] inline Automorphism group_element_of(const Catalog& cat,
                                                   const RepresentationSpec& rep) {
    const Mat4& m = cat.matrix(rep.name);
    if (rep.kind == RealStructureTarget::Kind::hermitian) return Automorphism::make_outer(m);
    return Automorphism::make_inner(m);
}

[[nodiscard]] inline std::vector<Automorphism> family_generators(const MadGroupSpec& spec) {
    std::vector<Automorphism> gens;
    for (const auto& m : spec.inner) gens.push_back(Automorphism::make_inner(m));
    if (spec.outer) gens.push_back(Automorphism::make_outer(*spec.outer));
    return gens;
}

// The real-form name a structure target selects.
[[nodiscard]] inline std::string form_of_target(const RealStructureTarget& target) {
    switch (target.kind) {
        case RealStructureTarget::Kind::circular: return "sl4r";
        case RealStructureTarget::Kind::anticircular: return "sustar4";
        case RealStructureTarget::Kind::hermitian:
            return "su" + std::to_string(target.positive) + std::to_string(target.negative);
    }
    return {};
}

// ===========================================================================
// Complex-grading checks
// ===========================================================================

inline void append_grading_checks(const Catalog& cat, const GradingSpec& spec,
                                  std::vector<CheckResult>& out) {
    using detail::Verdict;
    const std::string prefix = "grading." + spec.name + ".";
    const Grading& g = *spec.grading;

    detail::add_check(out, prefix + "span",
                      spec.name + " decomposes the traceless 4x4 matrices", [&]() -> Verdict {
                          const bool ok = g.is_direct_sum_of(sl4_space());
                          return {ok, std::to_string(g.part_count()) + " parts, total dimension " +
                                          std::to_string(g.total_dim())};
                      });

    detail::add_check(out, prefix + "closure",
                      "every bracket of two parts of " + spec.name + " lands in one part",
                      [&]() -> Verdict {
                          const auto rep = g.closure();
                          return {rep.closed, rep.closed ? std::to_string(rep.relations.size()) +
                                                               " nonzero bracket relations"
                                                         : rep.failure};
                      });

    detail::add_check(out, prefix + "group",
                      spec.name + " is a group grading (parts get distinct labels)",
                      [&]() -> Verdict {
                          return {g.is_group_grading(), ""};
                      });

    detail::add_check(out, prefix + "group-type",
                      "the universal group of " + spec.name + " is " + spec.group_text,
                      [&]() -> Verdict {
                          const auto computed = g.universal_group().group;
                          const bool ok = isomorphic(computed, parse_group(spec.group_text));
                          return {ok, "computed " + computed.to_string()};
                      });

    detail::add_check(
        out, prefix + "labels",
        "the recorded generators separate the parts of " + spec.name + " by eigenvalues",
        [&]() -> Verdict {
            const MadGroupEntry& family = cat.madgroup_for(spec.name);
            const auto gens = family_generators(family.spec);
            for (std::size_t j = 0; j < gens.size(); ++j)
                for (std::size_t k = j + 1; k < gens.size(); ++k)
                    if (!commute_on_gl4(gens[j], gens[k]))
                        return {false, "generators do not commute"};
            const auto table = eigenvalue_table(gens, g);
            if (!table) return {false, "a generator is not scalar on some part"};
            const bool ok = rows_pairwise_distinct(*table);
            return {ok, std::to_string(gens.size()) + " generators on " +
                            std::to_string(g.part_count()) + " parts"};
        });

    detail::add_check(out, prefix + "members",
                      "the recorded generators belong to their own family pattern",
                      [&]() -> Verdict {
                          const MadGroupEntry& family = cat.madgroup_for(spec.name);
                          for (const auto& m : family.spec.inner)
                              if (!mad_contains(family.spec, Automorphism::make_inner(m)))
                                  return {false, "an inner generator escapes the pattern"};
                          if (family.spec.outer &&
                              !mad_contains(family.spec,
                                            Automorphism::make_outer(*family.spec.outer)))
                              return {false, "the outer generator escapes the pattern"};
                          return {true, ""};
                      });
}

// ===========================================================================
// Displayed-subalgebra checks
// ===========================================================================

inline void append_displayed_checks(const Catalog& cat, const DisplayedSpec& spec,
                                    std::vector<CheckResult>& out) {
    using detail::Verdict;
    const std::string prefix = "displayed." + spec.name + ".";
    const std::string algebra = spec.symplectic ? "symplectic" : "orthogonal";
    const std::size_t want_dim = spec.symplectic ? 10 : 6;
    const Grading& g = *cat.grading(spec.grading).grading;
    const Mat4& k = cat.matrix(spec.form_matrix);

    detail::add_check(
        out, prefix + "selection",
        spec.grading + " displays the " + algebra + " subalgebra of " + spec.form_matrix +
            " on the recorded parts",
        [&]() -> Verdict {
            const DisplayedSelection sel = displayed_subgrading(g, k);
            const std::set<std::string> got(sel.selected.begin(), sel.selected.end());
            const std::set<std::string> want(spec.parts.begin(), spec.parts.end());
            std::string listing;
            for (const auto& name : sel.selected) listing += (listing.empty() ? "" : " ") + name;
            return {got == want, "selected " + listing};
        });

    detail::add_check(out, prefix + "dimension",
                      "the displayed subalgebra has dimension " + std::to_string(want_dim),
                      [&]() -> Verdict {
                          const DisplayedSelection sel = displayed_subgrading(g, k);
                          const std::size_t dim = sel.subgrading.total_dim();
                          return {dim == want_dim, "dimension " + std::to_string(dim)};
                      });

    detail::add_check(
        out, prefix + "form",
        "selected vectors satisfy the form identity and excluded vectors fail it",
        [&]() -> Verdict {
            const std::set<std::string> want(spec.parts.begin(), spec.parts.end());
            for (const auto& p : g.parts()) {
                const bool inside = want.count(p.name) > 0;
                for (const auto& b : p.space.basis())
                    if (preserves_form(b, k) != inside)
                        return {false, "part " + p.name + " is on the wrong side"};
            }
            return {true, ""};
        });

    detail::add_check(out, prefix + "closure", "the displayed subalgebra grading is closed",
                      [&]() -> Verdict {
                          const DisplayedSelection sel = displayed_subgrading(g, k);
                          const auto rep = sel.subgrading.closure();
                          return {rep.closed, rep.failure};
                      });
}

inline void append_split_checks(const Catalog& cat, const SplitSpec& spec,
                                std::vector<CheckResult>& out) {
    using detail::Verdict;
    const std::string prefix = "displayed." + spec.displayed_name + ".split.";

    const auto find_displayed = [&]() -> const DisplayedSpec& {
        for (const auto& d : cat.displayed())
            if (d.name == spec.displayed_name) return d;
        throw CatalogError("split references unknown selection " + spec.displayed_name);
    };

    detail::add_check(out, prefix + "basis",
                      "the recorded split vectors are the basis of part " + spec.part,
                      [&]() -> Verdict {
                          const DisplayedSpec& d = find_displayed();
                          const Grading& g = *cat.grading(d.grading).grading;
                          const DisplayedSelection sel =
                              displayed_subgrading(g, cat.matrix(d.form_matrix));
                          const auto idx = sel.subgrading.part_index(spec.part);
                          if (!idx) return {false, "part not present"};
                          const auto& basis = sel.subgrading.part(*idx).space.basis();
                          if (basis.size() != spec.vectors.size())
                              return {false, "dimension differs"};
                          for (std::size_t j = 0; j < basis.size(); ++j)
                              if (!(basis[j] == spec.vectors[j])) return {false, "vector differs"};
                          return {true, ""};
                      });

    detail::add_check(
        out, prefix + "closed-not-group",
        "splitting " + spec.part + " yields a closed decomposition that is not a group grading",
        [&]() -> Verdict {
            const DisplayedSpec& d = find_displayed();
            const Grading& g = *cat.grading(d.grading).grading;
            const DisplayedSelection sel = displayed_subgrading(g, cat.matrix(d.form_matrix));
            const Grading refined = split_part(sel.subgrading, spec.part);
            const NonGroupCertificate cert = certify_nongroup(refined);
            if (!cert.closed) return {false, "refinement is not closed"};
            if (cert.group) return {false, "refinement is unexpectedly a group grading"};
            std::string dup;
            for (const auto& [a, b] : cert.duplicate_labels)
                dup += (dup.empty() ? "" : ", ") + a + "=" + b;
            return {!cert.duplicate_labels.empty(), "equal labels: " + dup};
        });
}

// ===========================================================================
// Real-form checks: traceless 4x4 rows
// ===========================================================================

inline void append_sl_row_checks(const Catalog& cat, const SlRealRow& row,
                                 std::vector<CheckResult>& out) {
    using detail::Verdict;
    const std::string prefix =
        "realform.sl." + row.grading + "." + row.form + "." + row.representation + ".";
    const RepresentationSpec& rep = cat.representation(row.representation);
    const Grading& g = *cat.grading(row.grading).grading;

    detail::add_check(out, prefix + "realform",
                      row.representation + " cuts a fifteen-dimensional real form",
                      [&]() -> Verdict {
                          const Antiautomorphism j = antiaut_of(cat, rep);
                          const RealForm rf = fixed_points(row.form, j, sl4_space());
                          const bool ok = is_real_form_of(rf.basis, sl4_space());
                          return {ok, "real dimension " + std::to_string(rf.basis.dim())};
                      });

    detail::add_check(out, prefix + "descends",
                      row.grading + " meets every part of the fixed set in full dimension",
                      [&]() -> Verdict {
                          const Antiautomorphism j = antiaut_of(cat, rep);
                          const auto result = determine_real_grading(g, j);
                          return {result.determined, result.failure};
                      });

    detail::add_check(out, prefix + "coefficients",
                      "the recorded multipliers rescale the basis of " + row.grading +
                          " into the fixed set of " + row.representation,
                      [&]() -> Verdict {
                          const Antiautomorphism j = antiaut_of(cat, rep);
                          const auto check = verify_coefficient_table(g, j, row.multipliers);
                          return {check.ok, check.failure};
                      });

    if (!detail::basis_is_real(g)) return;  // the witness route needs a real basis

    detail::add_check(
        out, prefix + "witness",
        "the multipliers are reproduced from the group element " + row.representation,
        [&]() -> Verdict {
            const Automorphism h = group_element_of(cat, rep);
            const MadGroupSpec& family = cat.madgroup_for(row.grading).spec;
            const auto witness = real_basis_witness(g, h, family);
            if (!witness.member) return {false, witness.failure};
            std::vector<GaussianRational> flat;
            for (std::size_t p = 0; p < g.part_count(); ++p)
                for (std::size_t d = 0; d < g.part(p).space.dim(); ++d)
                    flat.push_back(witness.multipliers[p]);
            if (flat != row.multipliers) return {false, "multipliers differ from the table"};
            const Antiautomorphism j = antiaut_of(cat, rep);
            const auto direct = determine_real_grading(g, j);
            if (!direct.determined) return {false, "intersection route failed"};
            std::vector<RealSubspace> pieces;
            for (const auto& p : witness.grading->parts()) pieces.push_back(p.space);
            const bool ok = partitions_match(pieces, *direct.grading);
            return {ok, ok ? "" : "rescaled parts differ from the intersections"};
        });
}

inline void append_negative_checks(const Catalog& cat, const NegativeRow& row,
                                   std::vector<CheckResult>& out) {
    using detail::Verdict;
    const std::string id =
        "realform.sl." + row.grading + "." + row.form + "." + row.representation +
        ".not-determined";
    detail::add_check(out, id,
                      row.grading + " does not descend to the fixed set of " +
                          row.representation,
                      [&]() -> Verdict {
                          const RepresentationSpec& rep = cat.representation(row.representation);
                          const Grading& g = *cat.grading(row.grading).grading;
                          const auto result = determine_real_grading(g, antiaut_of(cat, rep));
                          if (result.determined)
                              return {false, "unexpectedly determined a real grading"};
                          return {true, result.failure};
                      });
}

// ===========================================================================
// Real-form checks: symplectic and orthogonal rows
// ===========================================================================

inline void append_subalgebra_row_checks(const Catalog& cat, const SubalgebraRealRow& row,
                                         std::vector<CheckResult>& out) {
    using detail::Verdict;
    const std::string family = row.symplectic ? "sp" : "o";
    const std::string prefix = "realform." + family + "." + row.grading + "." + row.form + "." +
                               row.representation + ".";
    const std::size_t want_dim = row.symplectic ? 10 : 6;

    const auto subgrading = [&]() -> Grading {
        for (const auto& d : cat.displayed())
            if (d.symplectic == row.symplectic && d.grading == row.grading &&
                d.form_matrix == row.form_matrix) {
                const Grading& g = *cat.grading(row.grading).grading;
                return displayed_subgrading(g, cat.matrix(d.form_matrix)).subgrading;
            }
        throw CatalogError("no displayed selection matches " + prefix);
    };

    detail::add_check(out, prefix + "descends",
                      "the displayed " + family + " grading of " + row.grading +
                          " meets the fixed set of " + row.representation + " in full dimension",
                      [&]() -> Verdict {
                          const Grading sub = subgrading();
                          const RepresentationSpec& rep = cat.representation(row.representation);
                          const auto result = determine_real_grading(sub, antiaut_of(cat, rep));
                          if (!result.determined) return {false, result.failure};
                          const std::size_t dim = result.grading->total_dim();
                          return {dim == want_dim, "real dimension " + std::to_string(dim)};
                      });

    detail::add_check(out, prefix + "group",
                      "the resulting real decomposition is a closed group grading",
                      [&]() -> Verdict {
                          const Grading sub = subgrading();
                          const RepresentationSpec& rep = cat.representation(row.representation);
                          const auto result = determine_real_grading(sub, antiaut_of(cat, rep));
                          if (!result.determined) return {false, result.failure};
                          const auto closure = result.grading->closure();
                          if (!closure.closed) return {false, closure.failure};
                          return {result.grading->is_group_grading(), ""};
                      });

    detail::add_check(out, prefix + "fixed-set",
                      "the real parts decompose the fixed points of the displayed subalgebra",
                      [&]() -> Verdict {
                          const Grading sub = subgrading();
                          const RepresentationSpec& rep = cat.representation(row.representation);
                          const Antiautomorphism j = antiaut_of(cat, rep);
                          const auto result = determine_real_grading(sub, j);
                          if (!result.determined) return {false, result.failure};
                          const RealSubspace fixed = intersect_real(merged_span(sub), j);
                          const bool ok = result.grading->is_direct_sum_of(fixed);
                          return {ok, "fixed set dimension " + std::to_string(fixed.dim())};
                      });
}

// ===========================================================================
// Structure-scan checks on the order-sixteen grading
// ===========================================================================

inline void append_structure_checks(const Catalog& cat, const StructureExpectation& exp,
                                    std::vector<CheckResult>& out) {
    using detail::Verdict;
    std::string id = "structure.";
    switch (exp.target.kind) {
        case RealStructureTarget::Kind::circular: id += "circular"; break;
        case RealStructureTarget::Kind::anticircular: id += "anticircular"; break;
        case RealStructureTarget::Kind::hermitian:
            id += "hermitian." + std::to_string(exp.target.positive) + "." +
                  std::to_string(exp.target.negative);
            break;
    }
    const std::string what = form_of_target(exp.target);
    const std::string claim =
        exp.absent ? "no " + what + " structure is compatible with the order-sixteen grading"
                   : "a compatible " + what + " structure exists and matches " + exp.witness;

    detail::add_check(out, id, claim, [&]() -> Verdict {
        const Grading& g = *cat.grading("gamma2").grading;
        const auto witnesses =
            real_structure_scan(cat.matrix("P"), cat.matrix("Q"), g, exp.target);
        if (exp.absent)
            return {witnesses.empty(),
                    std::to_string(witnesses.size()) + " compatible matrices found"};
        const Mat4& expected = cat.matrix(exp.witness);
        for (const auto& w : witnesses) {
            if (!detail::real_proportional(w.matrix, expected)) continue;
            for (const auto& lambda : w.part_eigenvalues)
                if (!real_multiplier_for_eigenvalue(lambda))
                    return {false, "an eigenvalue is not a fourth root of unity"};
            return {true, "twists " + format_scalar(w.p_twist) + ", " +
                              format_scalar(w.q_twist) + " among " +
                              std::to_string(witnesses.size()) + " witnesses"};
        }
        return {false, "no witness is a real multiple of " + exp.witness};
    });
}

// ===========================================================================
// Real-spectrum subgroup checks
// ===========================================================================

inline void append_realparts_checks(const Catalog& cat, const RealPartsSpec& spec,
                                    std::vector<CheckResult>& out) {
    using detail::Verdict;
    const MadGroupEntry& plain = cat.madgroup(spec.plain_family);
    const MadGroupEntry& conjugated = cat.madgroup(spec.conjugated_family);
    const MadGroupEntry& ambient = cat.madgroup(spec.ambient_family);

    detail::add_check(
        out, "realparts." + spec.plain_family + "-in-" + spec.ambient_family,
        "the real-spectrum elements of " + spec.plain_family + " form a proper subset of " +
            spec.ambient_family,
        [&]() -> Verdict {
            const Grading& g = *cat.grading(plain.grading).grading;
            const auto classes = projective_closure(plain.spec.inner);
            std::size_t real_count = 0;
            for (const auto& m : classes) {
                const Automorphism h = Automorphism::make_inner(m);
                if (!has_real_spectrum(h, g)) continue;
                ++real_count;
                if (!mad_contains(ambient.spec, h))
                    return {false, "a real-spectrum element escapes the ambient family"};
            }
            const std::size_t ambient_size =
                projective_closure(ambient.spec.inner).size() * (ambient.spec.outer ? 2 : 1);
            const bool proper = real_count < ambient_size && real_count > 0;
            return {proper, std::to_string(real_count) + " of " +
                                std::to_string(classes.size()) + " classes have real spectrum"};
        });

    detail::add_check(
        out, "realparts." + spec.conjugated_family + "-in-" + spec.ambient_family,
        "after conjugating by " + spec.conjugator + ", the real-spectrum elements of " +
            spec.conjugated_family + " form a proper subset of " + spec.ambient_family,
        [&]() -> Verdict {
            const Grading& g = *cat.grading(conjugated.grading).grading;
            const Mat4& s = cat.matrix(spec.conjugator);
            const auto inner_classes = projective_closure(conjugated.spec.inner);
            std::vector<Automorphism> members;
            for (const auto& m : inner_classes) members.push_back(Automorphism::make_inner(m));
            if (conjugated.spec.outer)
                for (const auto& m : inner_classes)
                    members.push_back(Automorphism::make_outer(m * *conjugated.spec.outer));
            std::size_t real_count = 0;
            for (const auto& h : members) {
                if (!has_real_spectrum(h, g)) continue;
                ++real_count;
                if (!mad_contains(ambient.spec, h.conjugated_by_inner(s)))
                    return {false, "a conjugated real-spectrum element escapes the ambient"};
            }
            const std::size_t ambient_size =
                projective_closure(ambient.spec.inner).size() * (ambient.spec.outer ? 2 : 1);
            const bool proper = real_count < ambient_size && real_count > 0;
            return {proper, std::to_string(real_count) + " of " +
                                std::to_string(members.size()) + " members have real spectrum"};
        });

    detail::add_check(out, "realparts.non-real-element",
                      "the second generator of " + spec.plain_family +
                          " does not have real spectrum",
                      [&]() -> Verdict {
                          const Grading& g = *cat.grading(plain.grading).grading;
                          if (plain.spec.inner.size() < 2) return {false, "missing generator"};
                          const Automorphism h =
                              Automorphism::make_inner(plain.spec.inner.back());
                          const bool ok = !has_real_spectrum(h, g);
                          return {ok, ok ? "a part carries an imaginary eigenvalue"
                                         : "spectrum is unexpectedly real"};
                      });
}

// ===========================================================================
// Route-agreement checks
// ===========================================================================

inline void append_madpair_checks(const Catalog& cat, const MadPairRow& row,
                                  std::vector<CheckResult>& out) {
    using detail::Verdict;
    const std::string id = "madpair." + row.grading + "." + row.form + "." + row.representation;
    detail::add_check(
        out, id,
        "eigenspace splitting and direct intersection agree on " + row.grading + " over " +
            row.form,
        [&]() -> Verdict {
            const Grading& g = *cat.grading(row.grading).grading;
            const RepresentationSpec& rep = cat.representation(row.representation);
            const Antiautomorphism j = antiaut_of(cat, rep);
            const auto direct = determine_real_grading(g, j);
            if (!direct.determined) return {false, "intersection route: " + direct.failure};
            const auto pieces = mad_eigendecompose(family_generators(cat.madreal(row.madreal)),
                                                   j, g);
            const bool ok = partitions_match(pieces, *direct.grading);
            return {ok, std::to_string(pieces.size()) + " joint eigenspaces"};
        });
}

// ===========================================================================
// Count checks
// ===========================================================================

inline void append_count_checks(const Catalog& cat, std::vector<CheckResult>& out) {
    using detail::Verdict;
    const CountsSpec& counts = cat.counts();

    std::size_t sp_rows = 0, o_rows = 0;
    for (const auto& r : cat.subalgebra_rows()) (r.symplectic ? sp_rows : o_rows) += 1;
    const std::size_t sl_rows = cat.sl_rows().size();

    detail::add_check(out, "count.sl",
                      "the traceless algebra contributes " + std::to_string(counts.sl) +
                          " real gradings",
                      [&]() -> Verdict {
                          return {sl_rows == counts.sl, std::to_string(sl_rows) + " rows"};
                      });
    detail::add_check(out, "count.sp",
                      "the symplectic forms contribute " + std::to_string(counts.sp) +
                          " real gradings",
                      [&]() -> Verdict {
                          return {sp_rows == counts.sp, std::to_string(sp_rows) + " rows"};
                      });
    detail::add_check(out, "count.o",
                      "the orthogonal forms contribute " + std::to_string(counts.o) +
                          " real gradings",
                      [&]() -> Verdict {
                          return {o_rows == counts.o, std::to_string(o_rows) + " rows"};
                      });
    detail::add_check(out, "count.total",
                      "the grand total of real gradings is " + std::to_string(counts.total),
                      [&]() -> Verdict {
                          const std::size_t total = sl_rows + sp_rows + o_rows;
                          const bool ok =
                              total == counts.total && counts.sl + counts.sp + counts.o == total;
                          return {ok, std::to_string(total) + " rows"};
                      });
    detail::add_check(out, "count.forms", "twelve distinct real forms appear",
                      [&]() -> Verdict {
                          const auto names = cat.real_form_names();
                          return {names.size() == 12, std::to_string(names.size()) + " forms"};
                      });
}

// ===========================================================================
// Scope assembly
// ===========================================================================

[[nodiscard]] inline std::vector<CheckResult> checks_for_grading(const Catalog& cat,
                                                                 const std::string& name) {
    std::vector<CheckResult> out;
    for (const auto& g : cat.gradings())
        if (name.empty() || g.name == name) append_grading_checks(cat, g, out);
    return out;
}

[[nodiscard]] inline std::vector<CheckResult> checks_for_displayed(const Catalog& cat) {
    std::vector<CheckResult> out;
    for (const auto& d : cat.displayed()) append_displayed_checks(cat, d, out);
    for (const auto& s : cat.splits()) append_split_checks(cat, s, out);
    return out;
}

// form and grading filters are conjunctive; empty matches everything.
[[nodiscard]] inline std::vector<CheckResult> checks_for_realform(
    const Catalog& cat, const std::string& form = {}, const std::string& grading = {}) {
    const auto match = [](const std::string& filter, const std::string& value) {
        return filter.empty() || filter == value;
    };
    std::vector<CheckResult> out;
    for (const auto& row : cat.sl_rows())
        if (match(form, row.form) && match(grading, row.grading))
            append_sl_row_checks(cat, row, out);
    for (const auto& row : cat.negatives())
        if (match(form, row.form) && match(grading, row.grading))
            append_negative_checks(cat, row, out);
    for (const auto& row : cat.subalgebra_rows())
        if (match(form, row.form) && match(grading, row.grading))
            append_subalgebra_row_checks(cat, row, out);
    for (const auto& exp : cat.structures())
        if (match(form, form_of_target(exp.target)) && match(grading, "gamma2"))
            append_structure_checks(cat, exp, out);
    for (const auto& row : cat.madpairs())
        if (match(form, row.form) && match(grading, row.grading))
            append_madpair_checks(cat, row, out);
    return out;
}

[[nodiscard]] inline std::vector<CheckResult> checks_for_realparts(const Catalog& cat) {
    std::vector<CheckResult> out;
    for (const auto& spec : cat.realparts()) append_realparts_checks(cat, spec, out);
    return out;
}

[[nodiscard]] inline std::vector<CheckResult> checks_for_counts(const Catalog& cat) {
    std::vector<CheckResult> out;
    append_count_checks(cat, out);
    return out;
}

[[nodiscard]] inline std::vector<CheckResult> run_all_checks(const Catalog& cat) {
    std::vector<CheckResult> out = checks_for_grading(cat, {});
    for (auto& c : checks_for_displayed(cat)) out.push_back(std::move(c));
    for (auto& c : checks_for_realform(cat)) out.push_back(std::move(c));
    for (auto& c : checks_for_realparts(cat)) out.push_back(std::move(c));
    for (auto& c : checks_for_counts(cat)) out.push_back(std::move(c));
    return out;
}

[[nodiscard]] inline bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.passed; });
}

inline void sort_by_id(std::vector<CheckResult>& results) {
    std::sort(results.begin(), results.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
}

}  // namespace gradings

#endif  // GRADINGS_CHECKS_HPP
