// torsym command-line front end: classify group specs, build cell
// structures, compute isotropy tables, enumerate bundle invariants, and
// verify the golden tables.
//
// Exit codes: 0 ok, 1 verification mismatch, 2 input error, 3 resource cap,
// 4 invariant violation.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "torsym/report.hpp"

using namespace torsym;

namespace {

GroupSpec load_spec(const std::string& path, std::size_t cap_override) {
    std::ifstream in(path);
    if (!in.good()) throw parse_error("cannot open spec file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad JSON: ") + e.what());
    }
    GroupSpec spec = parse_group_spec(j);
    if (cap_override) spec.cap = cap_override;
    return spec;
}

void emit(const ordered_json& report, const std::string& output) {
    if (output.empty()) return;
    std::ofstream out(output);
    out << report.dump(2) << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"exact classification of finite symmetry groups of the two-torus"};
    app.require_subcommand(1);

    std::string spec_path, output;
    std::size_t cap = 0;
    std::int64_t rank = 1, rank_cap = 4;
    std::string selector, golden_path;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("spec", spec_path, "group spec JSON file")->required();
        cmd->add_option("--output", output, "write the JSON report here");
        cmd->add_option("--cap", cap, "closure size cap");
    };

    CLI::App* c_classify = app.add_subcommand("classify", "canonical row and conjugator");
    add_common(c_classify);
    CLI::App* c_cells = app.add_subcommand("cells", "fundamental domains and census");
    add_common(c_cells);
    CLI::App* c_iso = app.add_subcommand("isotropy", "isotropy labels and counting identities");
    add_common(c_iso);
    CLI::App* c_bundles = app.add_subcommand("bundles", "bundle invariant enumeration");
    add_common(c_bundles);
    c_bundles->add_option("--rank", rank, "enumerate tuples up to this rank")->required();
    c_bundles->add_option("--rank-cap", rank_cap, "enumeration rank cap");
    CLI::App* c_verify = app.add_subcommand("verify-tables", "diff recomputed tables vs golden");
    c_verify->add_option("--row", selector, "restrict to one row (by name)");
    c_verify->add_option("--golden", golden_path, "golden CSV path (default: embedded copy)");
    c_verify->add_option("--output", output, "write the JSON report here");

    app.parse(argc, argv);

    if (c_verify->parsed()) {
        std::string text(kGoldenTablesCsv);
        if (!golden_path.empty()) {
            std::ifstream in(golden_path);
            if (!in.good()) throw parse_error("cannot open golden file '" + golden_path + "'");
            text.assign((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        }
        if (!selector.empty()) {
            bool known = false;
            for (FineRow r : all_fine_rows())
                if (fine_row_name(r) == selector) known = true;
            if (!known) throw parse_error("unknown row selector '" + selector + "'");
        }
        TableDiff diff = verify_tables(text, selector);
        ordered_json rep = report_skeleton("verify-tables");
        rep["checked"] = diff.checked;
        rep["mismatches"] = diff.mismatches;
        rep["notes"] = diff.notes;
        emit(rep, output);
        std::cout << "verify-tables: " << diff.checked << " entries checked, "
                  << diff.mismatches.size() << " mismatches\n";
        for (const auto& m : diff.mismatches) std::cout << "  MISMATCH " << m << "\n";
        for (const auto& n : diff.notes) std::cout << "  note: " << n << "\n";
        return diff.ok() ? 0 : 1;
    }

    GroupSpec spec = load_spec(spec_path, cap);
    FiniteTorusGroup group = close_group(spec.gram, spec.generators, spec.cap);
    Classification cls = classify(group);

    ordered_json rep;
    if (c_classify->parsed()) {
        rep = report_skeleton("classify");
        rep["classification"] = classification_json(cls);
        std::cout << "row: " << cls.cc.str() << "\n"
                  << "point group: " << cls.cc.point_group().str() << "\n"
                  << "conjugator: linear=[[" << cls.conj.linear.a.str() << ","
                  << cls.conj.linear.b.str() << "],[" << cls.conj.linear.c.str() << ","
                  << cls.conj.linear.d.str() << "]] translation=" << cls.conj.translation.str()
                  << "\n";
    } else if (c_cells->parsed()) {
        rep = report_skeleton("cells");
        rep["classification"] = classification_json(cls);
        rep["cells"] = cells_json(cls.cc);
        std::cout << "row: " << cls.cc.str() << "\n"
                  << "i_R=" << rep["cells"]["i_r"] << " j_R=" << rep["cells"]["j_r"]
                  << " |B|=" << rep["cells"]["faces"] << " |V/R|=" << rep["cells"]["vertex_orbits"]
                  << " |E/R|=" << rep["cells"]["edge_orbits"] << "\n"
                  << "tiling: " << (rep["cells"]["tiling_ok"].get<bool>() ? "ok" : "FAILED")
                  << ", 1d domain: "
                  << (rep["cells"]["one_dimensional_domain_ok"].get<bool>() ? "ok" : "FAILED")
                  << "\n";
    } else if (c_iso->parsed()) {
        rep = report_skeleton("isotropy");
        rep["classification"] = classification_json(cls);
        rep["isotropy"] = isotropy_json(cls.cc);
        std::cout << "row: " << cls.cc.str() << "\n"
                  << "face: " << rep["isotropy"]["face"].get<std::string>() << "\n";
        std::cout << "vertices:";
        for (const auto& v : rep["isotropy"]["vertex"]) std::cout << " " << v.get<std::string>();
        std::cout << "\nedges:";
        for (const auto& v : rep["isotropy"]["edge"]) std::cout << " " << v.get<std::string>();
        std::cout << "\ncounting identities: "
                  << (rep["isotropy"]["counting"]["faces_identity"].get<bool>() &&
                              rep["isotropy"]["counting"]["vertex_identity"].get<bool>()
                          ? "ok"
                          : "FAILED")
                  << "\n";
    } else if (c_bundles->parsed()) {
        rep = report_skeleton("bundles");
        rep["classification"] = classification_json(cls);
        rep["bundles"] = bundles_json(cls.cc, rank, rank_cap);
        std::cout << "row: " << cls.cc.str() << "\n"
                  << "theorem case: " << rep["bundles"]["theorem_case"].get<std::string>() << "\n";
        for (const auto& [r, n] : rep["bundles"]["tuple_count_by_rank"].items())
            std::cout << "rank " << r << ": " << n << " tuples\n";
    }
    emit(rep, output);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return e.get_exit_code() == 0 ? 0 : 2;
    } catch (const parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const cap_exceeded& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        std::cerr << "note: " << one_dimensional_out_of_scope().what() << "\n";
        return 3;
    } catch (const rank_cap_exceeded& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const inconsistent_gram& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 4;
    } catch (const unsupported_group& e) {
        std::cerr << "unsupported group: " << e.what() << "\n";
        return 4;
    } catch (const invalid_params& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
