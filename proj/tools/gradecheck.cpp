// gradecheck -- verify the grading catalog or display its entries.
//
//   gradecheck verify [--scope S] [--name N] [--grading G] [--format F] [--catalog PATH]
//   gradecheck show grading|madgroup|realform NAME [--catalog PATH]
//
// Exit codes: 0 all requested checks pass, 1 a check fails, 2 usage or
// input error.  Output is deterministic: checks are sorted by identifier
// and no timestamps or environment data are embedded.

#include "gradings/checks.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <exception>
#include <iostream>
#include <set>
#include <string>
#include <vector>

namespace {

using gradings::Catalog;
using gradings::CheckResult;
using gradings::Mat4;

[[nodiscard]] std::string render_matrix(const Mat4& m) {
    std::string out;
    for (std::size_t r = 0; r < 4; ++r) {
        out += "    [";
        for (std::size_t c = 0; c < 4; ++c) {
            if (c != 0) out += ", ";
            out += gradings::format_scalar(m.at(r, c));
        }
        out += "]\n";
    }
    return out;
}

void print_md(const std::vector<CheckResult>& results) {
    std::size_t passed = 0;
    for (const auto& r : results) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.id << " -- " << r.claim;
        if (!r.details.empty()) std::cout << " (" << r.details << ")";
        std::cout << "\n";
        if (r.passed) ++passed;
    }
    std::cout << results.size() << " checks, " << passed << " passed, "
              << (results.size() - passed) << " failed\n";
}

void print_json(const std::vector<CheckResult>& results) {
    nlohmann::ordered_json report;
    report["checks"] = nlohmann::ordered_json::array();
    std::size_t passed = 0;
    for (const auto& r : results) {
        nlohmann::ordered_json item;
        item["check_id"] = r.id;
        item["claim"] = r.claim;
        item["status"] = r.passed ? "pass" : "fail";
        item["details"] = r.details;
        report["checks"].push_back(std::move(item));
        if (r.passed) ++passed;
    }
    report["total"] = results.size();
    report["passed"] = passed;
    report["failed"] = results.size() - passed;
    std::cout << report.dump(2) << "\n";
}

[[nodiscard]] int run_verify(const Catalog& cat, const std::string& scope,
                             const std::string& name, const std::string& grading,
                             const std::string& format) {
    std::vector<CheckResult> results;
    if (scope == "all") {
        if (!name.empty() || !grading.empty()) {
            std::cerr << "error: --name/--grading are not accepted with --scope all\n";
            return 2;
        }
        results = gradings::run_all_checks(cat);
    } else if (scope == "grading") {
        if (!grading.empty()) {
            std::cerr << "error: use --name to select a grading\n";
            return 2;
        }
        if (!name.empty()) (void)cat.grading(name);  // throws on unknown names
        results = gradings::checks_for_grading(cat, name);
    } else if (scope == "realform") {
        if (!name.empty() && cat.real_form_names().count(name) == 0) {
            std::cerr << "error: unknown real form " << name << "\n";
            return 2;
        }
        if (!grading.empty()) (void)cat.grading(grading);
        results = gradings::checks_for_realform(cat, name, grading);
    } else if (scope == "displayed") {
        if (!name.empty() || !grading.empty()) {
            std::cerr << "error: --name/--grading are not accepted with --scope displayed\n";
            return 2;
        }
        results = gradings::checks_for_displayed(cat);
    } else if (scope == "realparts") {
        if (!name.empty() || !grading.empty()) {
            std::cerr << "error: --name/--grading are not accepted with --scope realparts\n";
            return 2;
        }
        results = gradings::checks_for_realparts(cat);
    } else if (scope == "count") {
        if (!name.empty() || !grading.empty()) {
            std::cerr << "error: --name/--grading are not accepted with --scope count\n";
            return 2;
        }
        results = gradings::checks_for_counts(cat);
    } else {
        std::cerr << "error: unknown scope " << scope << "\n";
        return 2;
    }

    gradings::sort_by_id(results);
    if (format == "json")
        print_json(results);
    else
        print_md(results);
    return gradings::all_passed(results) ? 0 : 1;
}

[[nodiscard]] int run_show(const Catalog& cat, const std::string& object,
                           const std::string& name) {
    if (object == "grading") {
        const auto& spec = cat.grading(name);
        const auto& g = *spec.grading;
        std::cout << "grading " << spec.name << "\n";
        std::cout << "  universal group " << spec.group_text << "\n";
        std::cout << "  parts " << g.part_count() << ", total dimension " << g.total_dim()
                  << "\n";
        for (const auto& p : g.parts()) {
            std::cout << "  part " << p.name << " (dimension " << p.space.dim() << ")\n";
            for (const auto& b : p.space.basis()) std::cout << render_matrix(b);
        }
        return 0;
    }
    if (object == "madgroup") {
        const auto& entry = cat.madgroup(name);
        std::cout << "madgroup " << entry.spec.name << " (labels " << entry.grading << ")\n";
        std::cout << "  inner generators " << entry.spec.inner.size() << "\n";
        for (const auto& m : entry.spec.inner) std::cout << render_matrix(m);
        if (entry.spec.outer) {
            std::cout << "  outer generator\n";
            std::cout << render_matrix(*entry.spec.outer);
        }
        return 0;
    }
    if (object == "realform") {
        if (cat.real_form_names().count(name) == 0) {
            std::cerr << "error: unknown real form " << name << "\n";
            return 2;
        }
        std::cout << "realform " << name << "\n";
        for (const auto& rep : cat.representations()) {
            if (rep.form != name) continue;
            std::cout << "  representation " << rep.name << "\n";
            std::cout << render_matrix(cat.matrix(rep.name));
        }
        for (const auto& row : cat.sl_rows())
            if (row.form == name)
                std::cout << "  grading " << row.grading << " via " << row.representation
                          << " (dimension 15)\n";
        for (const auto& row : cat.subalgebra_rows())
            if (row.form == name)
                std::cout << "  " << (row.symplectic ? "sp" : "o") << " grading " << row.grading
                          << " with form " << row.form_matrix << " via " << row.representation
                          << " (dimension " << (row.symplectic ? 10 : 6) << ")\n";
        return 0;
    }
    std::cerr << "error: unknown object " << object << "\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of the grading catalog"};
    app.require_subcommand(1);

    std::string catalog_path = GRADINGS_CATALOG_FILE;

    auto* verify = app.add_subcommand("verify", "run recorded checks");
    std::string scope = "all";
    std::string name;
    std::string grading;
    std::string format = "md";
    verify->add_option("--scope", scope, "all, grading, realform, displayed, realparts, count");
    verify->add_option("--name", name, "grading or real-form name to select");
    verify->add_option("--grading", grading, "restrict real-form checks to one grading");
    verify->add_option("--format", format)->check(CLI::IsMember({"json", "md"}));
    verify->add_option("--catalog", catalog_path, "catalog file to load");

    auto* show = app.add_subcommand("show", "display a catalog entry");
    std::string object;
    std::string entry;
    show->add_option("object", object, "grading, madgroup, or realform")->required();
    show->add_option("name", entry, "entry name")->required();
    show->add_option("--catalog", catalog_path, "catalog file to load");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const Catalog cat = gradings::load_catalog(catalog_path);
        if (verify->parsed()) return run_verify(cat, scope, name, grading, format);
        return run_show(cat, object, entry);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
