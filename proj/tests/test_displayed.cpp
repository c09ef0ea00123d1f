// Unit tests for form-subalgebra selections: which parts of a grading
// survive inside the symplectic or orthogonal algebra of a form matrix,
// and the one pathological refinement that is closed but not a group
// grading.

#include "gradings/catalog.hpp"
#include "gradings/displayed.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <stdexcept>

using namespace gradings;

namespace {
const Catalog& catalog() {
    static const Catalog cat = load_catalog(GRADINGS_CATALOG_FILE);
    return cat;
}
}  // namespace

TEST_CASE("preserves_form matches the defining identity") {
    const Mat4 k = catalog().matrix("K3");
    const Mat4 h1 = Mat4::unit(0, 0) - Mat4::unit(1, 1) + Mat4::unit(2, 2) - Mat4::unit(3, 3);
    CHECK(preserves_form(h1, k));
    CHECK(!preserves_form(Mat4::unit(0, 1), k));
}

TEST_CASE("a symplectic selection: ten dimensions across recorded parts") {
    const auto& cat = catalog();
    const auto& g5 = *cat.grading("gamma5").grading;
    const auto sel = displayed_subgrading(g5, cat.matrix("K0"));
    CHECK(sel.subgrading.total_dim() == 10);
    CHECK(sel.selected.size() + sel.excluded.size() == g5.part_count());
    for (const auto& p : sel.subgrading.parts())
        for (const auto& b : p.space.basis()) CHECK(preserves_form(b, cat.matrix("K0")));
    CHECK(sel.subgrading.closure().closed);
}

TEST_CASE("an orthogonal selection keeps whole parts only") {
    const auto& cat = catalog();
    const auto& g5 = *cat.grading("gamma5").grading;
    const auto sel = displayed_subgrading(g5, cat.matrix("K3"));
    CHECK(sel.subgrading.total_dim() == 6);

    // The recorded selection for this pair.
    std::set<std::string> names;
    for (const auto& d : cat.displayed())
        if (!d.symplectic && d.grading == "gamma5" && d.form_matrix == "K3")
            names = std::set<std::string>(d.parts.begin(), d.parts.end());
    REQUIRE(!names.empty());
    const std::set<std::string> got(sel.selected.begin(), sel.selected.end());
    CHECK(got == names);

    // The two-dimensional diagonal part survives with its stored basis.
    const auto idx = sel.subgrading.part_index("L14");
    REQUIRE(idx.has_value());
    CHECK(sel.subgrading.part(*idx).space.dim() == 2);
}

TEST_CASE("selections reject unusable forms and straddling parts") {
    const auto& cat = catalog();
    const auto& g1 = *cat.grading("gamma1").grading;
    // Singular form.
    CHECK_THROWS_AS(displayed_subgrading(g1, Mat4::unit(0, 0)), std::invalid_argument);
    // Neither symmetric nor skew.
    Mat4 lopsided = Mat4::identity();
    lopsided.at(0, 1) = GaussianRational{1};
    CHECK_THROWS_AS(displayed_subgrading(g1, lopsided), std::invalid_argument);
    // The diagonal part straddles the orthogonal condition for this form:
    // only a proper subspace of it satisfies the identity.
    CHECK_THROWS_AS(displayed_subgrading(g1, cat.matrix("K3")), std::domain_error);
}

TEST_CASE("splitting the diagonal part breaks the group property") {
    const auto& cat = catalog();
    const auto& g5 = *cat.grading("gamma5").grading;
    const auto sel = displayed_subgrading(g5, cat.matrix("K3"));
    const Grading refined = split_part(sel.subgrading, "L14");
    CHECK(refined.part_count() == sel.subgrading.part_count() + 1);
    CHECK(refined.part_index("L14.1").has_value());
    CHECK(refined.part_index("L14.2").has_value());

    const auto cert = certify_nongroup(refined);
    CHECK(cert.closed);
    CHECK(!cert.group);
    CHECK(!cert.duplicate_labels.empty());

    // The unsplit selection, by contrast, is a group grading.
    CHECK(sel.subgrading.is_group_grading());

    CHECK_THROWS_AS(split_part(sel.subgrading, "missing"), std::invalid_argument);
}
