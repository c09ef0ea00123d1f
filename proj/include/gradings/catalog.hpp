// catalog.hpp -- the frozen data set: grading bases, generator samples,
// form matrices, real-form representations, coefficient tables, expected
// counts.  Loaded from a versioned, checksummed text file so the data can
// be reviewed and diffed independently of the verification code.
//
// File format (UTF-8 text, '#' comments, blank lines ignored):
//   line 1:  gradings-catalog v1
//   line 2:  checksum fnv1a64 <16 hex digits of everything after this line>
//   matrix <name> <16 scalar literals, row-major>
//   representation <name> <form> {circular | anticircular | hermitian p n}
//   grading <name> <universal group literal>     ... part lines ... end
//   part <name> <expr> [<expr> ...]              (inside a grading block)
//   madgroup <name> grading <gname> pattern <p>  ... inner/outer lines ... end
//   madreal <name> pattern <p>                   ... inner/outer lines ... end
//   inner {@<matrix-name> | <16 scalar literals>}
//   outer {@<matrix-name> | <16 scalar literals>}
//   displayed <name> {sp | o} <grading> <K-matrix-name> <part names...>
//   realrow sl <grading> <form> <representation> <15 multiplier literals>
//   realrow {sp | o} <grading> <form> <K-matrix-name> <representation>
//   negative <grading> <form> <representation>
//   madpair <grading> <form> <representation> <madreal-name>
//   structure {circular | anticircular | hermitian p n} {absent | witness <m>}
//   split <displayed-name> <part> <expr> <expr> [...]
//   realparts <family> <conjugated-family> <ambient-family> <conjugator>
//   counts sl <n> sp <n> o <n> total <n>
//
// Basis expressions are signed sums of terms 'Ejk' (matrix unit, 1-based)
// or 'PjQk' (powers of the cataloged matrices named P and Q), e.g.
// 'E14+E41', 'E11-E22-E33+E44', 'P2Q3'.

#ifndef GRADINGS_CATALOG_HPP
#define GRADINGS_CATALOG_HPP

#include "gradings/exact.hpp"
#include "gradings/grading.hpp"
#include "gradings/mat.hpp"
#include "gradings/realforms.hpp"
#include "gradings/subspace.hpp"

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gradings {

struct CatalogError : std::runtime_error {
    explicit CatalogError(const std::string& what) : std::runtime_error(what) {}
};

[[nodiscard]] inline std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t hash = 14695981039346656037ull;
    for (const char ch : data) {
        hash ^= static_cast<unsigned char>(ch);
        hash *= 1099511628211ull;
    }
    return hash;
}

// ===========================================================================
// Catalog entry types
// ===========================================================================

struct RepresentationSpec {
    std::string name;  // also the name of the defining matrix
    std::string form;
    RealStructureTarget::Kind kind = RealStructureTarget::Kind::hermitian;
    std::size_t positive = 0;  // hermitian kinds only
    std::size_t negative = 0;
};

struct GradingSpec {
    std::string name;
    std::string group_text;  // claimed universal group
    std::vector<std::string> part_names;
    std::optional<Grading> grading;
};

struct MadGroupEntry {
    MadGroupSpec spec;
    std::string grading;  // cataloged eigenbasis (complex families only)
};

struct DisplayedSpec {
    std::string name;
    bool symplectic = false;
    std::string grading;
    std::string form_matrix;
    std::vector<std::string> parts;
};

struct SlRealRow {
    std::string grading;
    std::string form;
    std::string representation;
    std::vector<GaussianRational> multipliers;  // one per basis vector
};

struct SubalgebraRealRow {
    bool symplectic = false;
    std::string grading;
    std::string form;
    std::string form_matrix;
    std::string representation;
};

struct NegativeRow {
    std::string grading;
    std::string form;
    std::string representation;
};

struct MadPairRow {
    std::string grading;
    std::string form;
    std::string representation;
    std::string madreal;
};

struct StructureExpectation {
    RealStructureTarget target;
    bool absent = true;
    std::string witness;  // representation name when present
};

// A recorded refinement of one displayed-subalgebra part into lines, used to
// certify decompositions that are closed but not group gradings.
struct SplitSpec {
    std::string displayed_name;
    std::string part;
    std::vector<Mat4> vectors;
};

// Claimed inclusions between the real-spectrum subgroups of two families and
// a third family, after conjugating the second by the recorded basis change.
struct RealPartsSpec {
    std::string plain_family;       // compared to the ambient family directly
    std::string conjugated_family;  // compared after conjugation
    std::string ambient_family;
    std::string conjugator;         // matrix name
};

struct CountsSpec {
    std::size_t sl = 0;
    std::size_t sp = 0;
    std::size_t o = 0;
    std::size_t total = 0;
};

// ===========================================================================
// Catalog
// ===========================================================================

class Catalog {
public:
    [[nodiscard]] const Mat4& matrix(const std::string& name) const {
        const auto it = matrices_.find(name);
        if (it == matrices_.end()) throw CatalogError("unknown matrix: " + name);
        return it->second;
    }

    [[nodiscard]] const RepresentationSpec& representation(const std::string& name) const {
        for (const auto& r : representations_)
            if (r.name == name) return r;
        throw CatalogError("unknown representation: " + name);
    }

    [[nodiscard]] const GradingSpec& grading(const std::string& name) const {
        for (const auto& g : gradings_)
            if (g.name == name) return g;
        throw CatalogError("unknown grading: " + name);
    }

    [[nodiscard]] const MadGroupEntry& madgroup(const std::string& name) const {
        for (const auto& m : madgroups_)
            if (m.spec.name == name) return m;
        throw CatalogError("unknown generator family: " + name);
    }

    [[nodiscard]] const MadGroupEntry& madgroup_for(const std::string& grading_name) const {
        for (const auto& m : madgroups_)
            if (m.grading == grading_name) return m;
        throw CatalogError("no generator family for grading: " + grading_name);
    }

    [[nodiscard]] const MadGroupSpec& madreal(const std::string& name) const {
        for (const auto& m : madreals_)
            if (m.name == name) return m;
        throw CatalogError("unknown real generator family: " + name);
    }

    [[nodiscard]] const std::vector<RepresentationSpec>& representations() const {
        return representations_;
    }
    [[nodiscard]] const std::vector<GradingSpec>& gradings() const { return gradings_; }
    [[nodiscard]] const std::vector<MadGroupEntry>& madgroups() const { return madgroups_; }
    [[nodiscard]] const std::vector<MadGroupSpec>& madreals() const { return madreals_; }
    [[nodiscard]] const std::vector<DisplayedSpec>& displayed() const { return displayed_; }
    [[nodiscard]] const std::vector<SlRealRow>& sl_rows() const { return sl_rows_; }
    [[nodiscard]] const std::vector<SubalgebraRealRow>& subalgebra_rows() const {
        return subalgebra_rows_;
    }
    [[nodiscard]] const std::vector<NegativeRow>& negatives() const { return negatives_; }
    [[nodiscard]] const std::vector<MadPairRow>& madpairs() const { return madpairs_; }
    [[nodiscard]] const std::vector<StructureExpectation>& structures() const {
        return structures_;
    }
    [[nodiscard]] const std::vector<SplitSpec>& splits() const { return splits_; }
    [[nodiscard]] const std::vector<RealPartsSpec>& realparts() const { return realparts_; }
    [[nodiscard]] const CountsSpec& counts() const { return counts_; }

    [[nodiscard]] std::set<std::string> real_form_names() const {
        std::set<std::string> names;
        for (const auto& r : representations_) names.insert(r.form);
        for (const auto& r : sl_rows_) names.insert(r.form);
        for (const auto& r : subalgebra_rows_) names.insert(r.form);
        return names;
    }

    friend Catalog parse_catalog(std::istream& in);

private:
    std::map<std::string, Mat4> matrices_;
    std::vector<RepresentationSpec> representations_;
    std::vector<GradingSpec> gradings_;
    std::vector<MadGroupEntry> madgroups_;
    std::vector<MadGroupSpec> madreals_;
    std::vector<DisplayedSpec> displayed_;
    std::vector<SlRealRow> sl_rows_;
    std::vector<SubalgebraRealRow> subalgebra_rows_;
    std::vector<NegativeRow> negatives_;
    std::vector<MadPairRow> madpairs_;
    std::vector<StructureExpectation> structures_;
    std::vector<SplitSpec> splits_;
    std::vector<RealPartsSpec> realparts_;
    CountsSpec counts_;
};

// ===========================================================================
// Parsing
// ===========================================================================

namespace detail {

[[nodiscard]] inline std::vector<std::string> split_tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

[[nodiscard]] inline Mat4 matrix_power(const Mat4& m, std::size_t n) {
    Mat4 result = Mat4::identity();
    for (std::size_t j = 0; j < n; ++j) result = result * m;
    return result;
}

// Signed sum of 'Ejk' / 'PjQk' terms, e.g. "E14+E41" or "P2Q3".
[[nodiscard]] inline Mat4 evaluate_basis_expression(const std::string& expr,
                                                    const std::map<std::string, Mat4>& named) {
    Mat4 sum;
    std::size_t pos = 0;
    bool negate = false;
    if (pos < expr.size() && (expr[pos] == '+' || expr[pos] == '-')) {
        negate = expr[pos] == '-';
        ++pos;
    }
    const auto digit_at = [&](std::size_t at) -> std::size_t {
        if (at >= expr.size() || expr[at] < '0' || expr[at] > '9')
            throw CatalogError("bad basis expression: " + expr);
        return static_cast<std::size_t>(expr[at] - '0');
    };
    while (pos < expr.size()) {
        Mat4 term;
        if (expr[pos] == 'E') {
            const std::size_t j = digit_at(pos + 1), k = digit_at(pos + 2);
            if (j < 1 || j > 4 || k < 1 || k > 4)
                throw CatalogError("matrix unit out of range: " + expr);
            term = Mat4::unit(j - 1, k - 1);
            pos += 3;
        } else if (expr[pos] == 'P') {
            const std::size_t j = digit_at(pos + 1);
            if (pos + 2 >= expr.size() || expr[pos + 2] != 'Q')
                throw CatalogError("bad basis expression: " + expr);
            const std::size_t k = digit_at(pos + 3);
            const auto p = named.find("P");
            const auto q = named.find("Q");
            if (p == named.end() || q == named.end())
                throw CatalogError("expression needs matrices P and Q: " + expr);
            term = matrix_power(p->second, j) * matrix_power(q->second, k);
            pos += 4;
        } else {
            throw CatalogError("bad basis expression: " + expr);
        }
        sum = negate ? sum - term : sum + term;
        if (pos == expr.size()) break;
        if (expr[pos] == '+' || expr[pos] == '-') {
            negate = expr[pos] == '-';
            ++pos;
        } else {
            throw CatalogError("bad basis expression: " + expr);
        }
    }
    return sum;
}

[[nodiscard]] inline std::size_t parse_count(const std::string& tok) {
    std::size_t value = 0;
    for (const char ch : tok) {
        if (ch < '0' || ch > '9') throw CatalogError("bad count: " + tok);
        value = value * 10 + static_cast<std::size_t>(ch - '0');
    }
    return value;
}

[[nodiscard]] inline RealStructureTarget parse_structure_kind(
    const std::vector<std::string>& tokens, std::size_t& next) {
    RealStructureTarget target;
    const std::string& word = tokens.at(next++);
    if (word == "circular") {
        target.kind = RealStructureTarget::Kind::circular;
    } else if (word == "anticircular") {
        target.kind = RealStructureTarget::Kind::anticircular;
    } else if (word == "hermitian") {
        target.kind = RealStructureTarget::Kind::hermitian;
        target.positive = parse_count(tokens.at(next++));
        target.negative = parse_count(tokens.at(next++));
    } else {
        throw CatalogError("bad structure kind: " + word);
    }
    return target;
}

[[nodiscard]] inline MadFamilyPattern parse_pattern(const std::string& word) {
    if (word == "finite") return MadFamilyPattern::finite_only;
    if (word == "diagonal") return MadFamilyPattern::any_diagonal;
    if (word == "diag-sign-recip") return MadFamilyPattern::diagonal_sign_reciprocal;
    if (word == "diag-recip-pairs") return MadFamilyPattern::diagonal_reciprocal_pairs;
    if (word == "block-scalar-recip") return MadFamilyPattern::block_scalar_reciprocal;
    throw CatalogError("bad family pattern: " + word);
}

}  // namespace detail

[[nodiscard]] inline Catalog parse_catalog(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "gradings-catalog v1")
        throw CatalogError("missing or unsupported catalog header");
    if (!std::getline(in, line)) throw CatalogError("missing checksum line");
    const auto checksum_tokens = detail::split_tokens(line);
    if (checksum_tokens.size() != 3 || checksum_tokens[0] != "checksum" ||
        checksum_tokens[1] != "fnv1a64")
        throw CatalogError("bad checksum line");

    std::string body, raw;
    std::vector<std::string> lines;
    while (std::getline(in, raw)) {
        body += raw;
        body += '\n';
        lines.push_back(raw);
    }
    std::ostringstream claimed;
    claimed << std::hex << fnv1a64(body);
    std::ostringstream padded;
    for (std::size_t j = claimed.str().size(); j < 16; ++j) padded << '0';
    padded << claimed.str();
    if (padded.str() != checksum_tokens[2])
        throw CatalogError("checksum mismatch: body hashes to " + padded.str());

    Catalog cat;
    // Block state for grading / madgroup / madreal sections.
    std::optional<GradingSpec> open_grading;
    std::vector<std::pair<std::string, std::vector<Mat4>>> open_parts;
    std::optional<MadGroupEntry> open_family;
    bool open_family_is_real = false;

    const auto matrix_from = [&cat](const std::vector<std::string>& tokens, std::size_t first,
                                    std::size_t line_no) -> Mat4 {
        if (tokens.size() == first + 1 && tokens[first].front() == '@')
            return cat.matrix(tokens[first].substr(1));
        if (tokens.size() != first + 16)
            throw CatalogError("line " + std::to_string(line_no) +
                               ": expected 16 entries or one @reference");
        std::string joined;
        for (std::size_t j = first; j < tokens.size(); ++j) {
            if (!joined.empty()) joined += ' ';
            joined += tokens[j];
        }
        return Mat4::from_text(joined);
    };

    for (std::size_t n = 0; n < lines.size(); ++n) {
        const std::size_t line_no = n + 3;  // 1-based, after the two header lines
        const std::string& text = lines[n];
        if (text.empty() || text[0] == '#') continue;
        const auto tokens = detail::split_tokens(text);
        if (tokens.empty()) continue;
        const std::string& key = tokens[0];
        try {
            if (key == "matrix") {
                cat.matrices_.emplace(tokens.at(1), matrix_from(tokens, 2, line_no));
            } else if (key == "representation") {
                RepresentationSpec rep;
                rep.name = tokens.at(1);
                rep.form = tokens.at(2);
                std::size_t next = 3;
                const auto target = detail::parse_structure_kind(tokens, next);
                rep.kind = target.kind;
                rep.positive = target.positive;
                rep.negative = target.negative;
                (void)cat.matrix(rep.name);  // must be declared
                cat.representations_.push_back(std::move(rep));
            } else if (key == "grading") {
                if (open_grading || open_family)
                    throw CatalogError("nested block at line " + std::to_string(line_no));
                GradingSpec spec;
                spec.name = tokens.at(1);
                std::string group;
                for (std::size_t j = 2; j < tokens.size(); ++j) {
                    if (!group.empty()) group += ' ';
                    group += tokens[j];
                }
                spec.group_text = group;
                open_grading = std::move(spec);
                open_parts.clear();
            } else if (key == "part") {
                if (!open_grading)
                    throw CatalogError("part outside grading block at line " +
                                       std::to_string(line_no));
                std::vector<Mat4> basis;
                for (std::size_t j = 2; j < tokens.size(); ++j) {
                    Mat4 x = detail::evaluate_basis_expression(tokens[j], cat.matrices_);
                    if (!x.trace().is_zero())
                        throw CatalogError("part " + tokens.at(1) + " has a basis matrix with " +
                                           "nonzero trace at line " + std::to_string(line_no));
                    basis.push_back(std::move(x));
                }
                if (basis.empty())
                    throw CatalogError("empty part at line " + std::to_string(line_no));
                open_parts.emplace_back(tokens.at(1), std::move(basis));
            } else if (key == "madgroup" || key == "madreal") {
                if (open_grading || open_family)
                    throw CatalogError("nested block at line " + std::to_string(line_no));
                MadGroupEntry entry;
                entry.spec.name = tokens.at(1);
                std::size_t next = 2;
                if (key == "madgroup") {
                    if (tokens.at(next) != "grading")
                        throw CatalogError("madgroup needs a grading at line " +
                                           std::to_string(line_no));
                    entry.grading = tokens.at(next + 1);
                    next += 2;
                }
                if (tokens.at(next) != "pattern")
                    throw CatalogError("family needs a pattern at line " +
                                       std::to_string(line_no));
                entry.spec.pattern = detail::parse_pattern(tokens.at(next + 1));
                open_family = std::move(entry);
                open_family_is_real = key == "madreal";
            } else if (key == "inner") {
                if (!open_family)
                    throw CatalogError("inner outside family block at line " +
                                       std::to_string(line_no));
                open_family->spec.inner.push_back(matrix_from(tokens, 1, line_no));
            } else if (key == "outer") {
                if (!open_family)
                    throw CatalogError("outer outside family block at line " +
                                       std::to_string(line_no));
                open_family->spec.outer = matrix_from(tokens, 1, line_no);
            } else if (key == "end") {
                if (open_grading) {
                    std::vector<GradingPart> parts;
                    for (auto& [name, basis] : open_parts) {
                        open_grading->part_names.push_back(name);
                        parts.push_back({name, ComplexSubspace::span(std::move(basis))});
                    }
                    open_grading->grading = Grading::from_parts(std::move(parts));
                    cat.gradings_.push_back(std::move(*open_grading));
                    open_grading.reset();
                } else if (open_family) {
                    if (open_family_is_real)
                        cat.madreals_.push_back(std::move(open_family->spec));
                    else
                        cat.madgroups_.push_back(std::move(*open_family));
                    open_family.reset();
                } else {
                    throw CatalogError("stray end at line " + std::to_string(line_no));
                }
            } else if (key == "displayed") {
                DisplayedSpec spec;
                spec.name = tokens.at(1);
                spec.symplectic = tokens.at(2) == "sp";
                if (!spec.symplectic && tokens.at(2) != "o")
                    throw CatalogError("bad subalgebra family at line " +
                                       std::to_string(line_no));
                spec.grading = tokens.at(3);
                spec.form_matrix = tokens.at(4);
                const Mat4& k = cat.matrix(spec.form_matrix);
                if (!k.is_invertible() ||
                    !(k.transpose() == (spec.symplectic ? -k : k)))
                    throw CatalogError("form matrix fails its symmetry at line " +
                                       std::to_string(line_no));
                for (std::size_t j = 5; j < tokens.size(); ++j) spec.parts.push_back(tokens[j]);
                cat.displayed_.push_back(std::move(spec));
            } else if (key == "realrow") {
                const std::string& family = tokens.at(1);
                if (family == "sl") {
                    SlRealRow row;
                    row.grading = tokens.at(2);
                    row.form = tokens.at(3);
                    row.representation = tokens.at(4);
                    for (std::size_t j = 5; j < tokens.size(); ++j) {
                        const GaussianRational alpha = parse_scalar(tokens[j]);
                        if (alpha.is_zero())
                            throw CatalogError("zero multiplier at line " +
                                               std::to_string(line_no));
                        row.multipliers.push_back(alpha);
                    }
                    cat.sl_rows_.push_back(std::move(row));
                } else if (family == "sp" || family == "o") {
                    SubalgebraRealRow row;
                    row.symplectic = family == "sp";
                    row.grading = tokens.at(2);
                    row.form = tokens.at(3);
                    row.form_matrix = tokens.at(4);
                    row.representation = tokens.at(5);
                    cat.subalgebra_rows_.push_back(std::move(row));
                } else {
                    throw CatalogError("bad realrow family at line " + std::to_string(line_no));
                }
            } else if (key == "negative") {
                cat.negatives_.push_back({tokens.at(1), tokens.at(2), tokens.at(3)});
            } else if (key == "madpair") {
                cat.madpairs_.push_back({tokens.at(1), tokens.at(2), tokens.at(3), tokens.at(4)});
            } else if (key == "structure") {
                StructureExpectation exp;
                std::size_t next = 1;
                exp.target = detail::parse_structure_kind(tokens, next);
                const std::string& verdict = tokens.at(next++);
                if (verdict == "absent") {
                    exp.absent = true;
                } else if (verdict == "witness") {
                    exp.absent = false;
                    exp.witness = tokens.at(next++);
                    (void)cat.matrix(exp.witness);
                } else {
                    throw CatalogError("bad structure verdict at line " +
                                       std::to_string(line_no));
                }
                cat.structures_.push_back(std::move(exp));
            } else if (key == "split") {
                SplitSpec spec;
                spec.displayed_name = tokens.at(1);
                spec.part = tokens.at(2);
                for (std::size_t j = 3; j < tokens.size(); ++j)
                    spec.vectors.push_back(
                        detail::evaluate_basis_expression(tokens[j], cat.matrices_));
                if (spec.vectors.size() < 2)
                    throw CatalogError("split needs at least two vectors at line " +
                                       std::to_string(line_no));
                cat.splits_.push_back(std::move(spec));
            } else if (key == "realparts") {
                RealPartsSpec spec;
                spec.plain_family = tokens.at(1);
                spec.conjugated_family = tokens.at(2);
                spec.ambient_family = tokens.at(3);
                spec.conjugator = tokens.at(4);
                (void)cat.matrix(spec.conjugator);
                cat.realparts_.push_back(std::move(spec));
            } else if (key == "counts") {
                if (tokens.size() != 9 || tokens.at(1) != "sl" || tokens.at(3) != "sp" ||
                    tokens.at(5) != "o" || tokens.at(7) != "total")
                    throw CatalogError("bad counts line at line " + std::to_string(line_no));
                cat.counts_.sl = detail::parse_count(tokens.at(2));
                cat.counts_.sp = detail::parse_count(tokens.at(4));
                cat.counts_.o = detail::parse_count(tokens.at(6));
                cat.counts_.total = detail::parse_count(tokens.at(8));
            } else {
                throw CatalogError("unknown directive '" + key + "' at line " +
                                   std::to_string(line_no));
            }
        } catch (const std::out_of_range&) {
            throw CatalogError("truncated line " + std::to_string(line_no) + ": " + text);
        }
    }
    if (open_grading || open_family) throw CatalogError("unterminated block at end of file");
    if (cat.counts_.total == 0) throw CatalogError("missing counts line");
    return cat;
}

[[nodiscard]] inline Catalog load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CatalogError("cannot open catalog file: " + path);
    return parse_catalog(in);
}

}  // namespace gradings

#endif  // GRADINGS_CATALOG_HPP
