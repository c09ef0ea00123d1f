// Unit tests for the catalog file format: header, checksum, directive
// parsing, basis expressions, and the shape of the shipped data set.

#include "gradings/catalog.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <iomanip>
#include <sstream>
#include <string>

using namespace gradings;

namespace {

// Assembles a syntactically valid file around the given body.
[[nodiscard]] std::string with_header(const std::string& body) {
    std::uint64_t digest = 14695981039346656037ULL;
    std::istringstream lines(body);
    std::string line;
    std::ostringstream canonical;
    while (std::getline(lines, line)) canonical << line << '\n';
    const std::string text = canonical.str();
    for (const unsigned char c : text) {
        digest ^= c;
        digest *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << "gradings-catalog v1\n";
    out << "checksum fnv1a64 " << std::hex << std::setw(16) << std::setfill('0') << digest
        << "\n";
    out << text;
    return out.str();
}

[[nodiscard]] Catalog parse(const std::string& text) {
    std::istringstream in(text);
    return parse_catalog(in);
}

}  // namespace

TEST_CASE("minimal catalog round-trips through the checksum") {
    const auto cat = parse(with_header("counts sl 1 sp 0 o 0 total 1\n"));
    CHECK(cat.counts().total == 1);
    CHECK(cat.gradings().empty());
}

TEST_CASE("header and checksum validation") {
    CHECK_THROWS_AS(parse("bogus v1\ncounts sl 1 sp 0 o 0 total 1\n"), CatalogError);
    CHECK_THROWS_AS(
        parse("gradings-catalog v1\nchecksum fnv1a64 0000000000000000\n"
              "counts sl 1 sp 0 o 0 total 1\n"),
        CatalogError);
    // Tampering after the checksum line is detected.
    std::string text = with_header("counts sl 1 sp 0 o 0 total 1\n");
    text += "# trailing surprise\n";
    CHECK_THROWS_AS(parse(text), CatalogError);
}

TEST_CASE("directive errors carry line information") {
    CHECK_THROWS_AS(parse(with_header("frobnicate 1 2 3\n")), CatalogError);
    // Too few literals for a matrix.
    CHECK_THROWS_AS(parse(with_header("matrix A 1 0 0 0 1 0 0 0 1\n")), CatalogError);
    // Part with a non-traceless basis matrix.
    CHECK_THROWS_AS(parse(with_header("grading g Z\npart L1 E11\nend\n"
                                      "counts sl 1 sp 0 o 0 total 1\n")),
                    CatalogError);
    // Reference to an unknown matrix.
    CHECK_THROWS_AS(
        parse(with_header("madgroup m grading g pattern finite\ninner @missing\nend\n"
                          "counts sl 1 sp 0 o 0 total 1\n")),
        CatalogError);
    // Missing counts line.
    CHECK_THROWS_AS(parse(with_header("")), CatalogError);
}

TEST_CASE("basis expressions combine matrix units with signs") {
    const auto cat = parse(with_header("grading g Z^2\npart L1 E12-E21\npart L2 E13+E24\nend\n"
                                       "counts sl 1 sp 0 o 0 total 1\n"));
    const auto& g = *cat.grading("g").grading;
    CHECK(g.part(0).space.basis()[0] == Mat4::unit(0, 1) - Mat4::unit(1, 0));
    CHECK(g.part(1).space.basis()[0] == Mat4::unit(0, 2) + Mat4::unit(1, 3));
}

TEST_CASE("the shipped catalog loads and has the recorded shape") {
    const Catalog cat = load_catalog(GRADINGS_CATALOG_FILE);
    CHECK(cat.gradings().size() == 8);
    CHECK(cat.representations().size() == 12);
    CHECK(cat.madgroups().size() == 8);
    CHECK(cat.madreals().size() == 6);
    CHECK(cat.displayed().size() == 9);
    CHECK(cat.sl_rows().size() == 23);
    CHECK(cat.subalgebra_rows().size() == 21);
    CHECK(cat.negatives().size() == 1);
    CHECK(cat.madpairs().size() == 17);
    CHECK(cat.structures().size() == 5);
    CHECK(cat.splits().size() == 1);
    CHECK(cat.realparts().size() == 1);
    CHECK(cat.counts().sl == 23);
    CHECK(cat.counts().sp == 7);
    CHECK(cat.counts().o == 14);
    CHECK(cat.counts().total == 44);
    CHECK(cat.real_form_names().size() == 12);

    // Every grading has a generator family attached.
    for (const auto& g : cat.gradings()) {
        CHECK(g.grading.has_value());
        CHECK(cat.madgroup_for(g.name).grading == g.name);
    }

    // Representative entries resolve.
    CHECK(cat.representation("E313").form == "su31");
    CHECK(cat.representation("F4R1").kind == RealStructureTarget::Kind::circular);
    CHECK(cat.representation("FS41").kind == RealStructureTarget::Kind::anticircular);
    CHECK(cat.matrix("K1") == Mat4::identity());
    CHECK_THROWS_AS(cat.matrix("nope"), CatalogError);
    CHECK_THROWS_AS(cat.grading("nope"), CatalogError);

    // Power expressions resolved against the cataloged clock and shift.
    const auto& g2 = *cat.grading("gamma2").grading;
    const Mat4& p = cat.matrix("P");
    const Mat4& q = cat.matrix("Q");
    const auto idx = g2.part_index("L5");
    REQUIRE(idx.has_value());
    CHECK(g2.part(*idx).space.basis()[0] == p * (q * q * q));
}

TEST_CASE("unknown catalog path raises an input error") {
    CHECK_THROWS_AS(load_catalog("/nonexistent/catalog.txt"), CatalogError);
}
