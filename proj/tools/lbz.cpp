// lbz: exact structure-constant toolkit for finite-dimensional Leibniz
// algebras, speaking only through the public C interface.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <leibniz/leibniz.h>

#ifndef LBZ_DEFAULT_DATA_DIR
#define LBZ_DEFAULT_DATA_DIR "data"
#endif

namespace {

using Json = nlohmann::ordered_json;

struct CStr {
    char* s = nullptr;
    ~CStr() { lbz_string_free(s); }
};

using AlgPtr = std::unique_ptr<lbz_algebra, void (*)(lbz_algebra*)>;
using PresPtr = std::unique_ptr<lbz_presentation, void (*)(lbz_presentation*)>;

// Maps an lbz status to the process exit code: domain failures are check
// failures (1), everything else is a usage problem (2).
int exit_for(int rc) { return rc == LBZ_ERR_DOMAIN ? 1 : 2; }

int report_error(int rc) {
    std::cerr << "error: " << lbz_last_error() << "\n";
    return exit_for(rc);
}

bool read_input(const std::string& file, std::string& out) {
    if (file == "-") {
        out.assign(std::istreambuf_iterator<char>(std::cin),
                   std::istreambuf_iterator<char>());
        return true;
    }
    std::ifstream in(file, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read file: " << file << "\n";
        return false;
    }
    out.assign(std::istreambuf_iterator<char>(in),
               std::istreambuf_iterator<char>());
    return true;
}

bool write_output(const std::string& out_file, const std::string& payload) {
    if (out_file.empty()) {
        std::cout << payload;
        return true;
    }
    std::ofstream out(out_file, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write file: " << out_file << "\n";
        return false;
    }
    out << payload;
    return static_cast<bool>(out);
}

AlgPtr parse_algebra_arg(const std::string& text, int& rc) {
    lbz_algebra* raw = nullptr;
    rc = lbz_algebra_parse(text.c_str(), &raw);
    return AlgPtr(raw, lbz_algebra_free);
}

std::string base_dir_of(const std::string& file) {
    if (file == "-")
        return "";
    return std::filesystem::path(file).parent_path().string();
}

std::string join(const std::vector<std::string>& parts,
                 const std::string& sep) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty())
            out += sep;
        out += p;
    }
    return out;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

void print_dims(const std::string& head, const Json& dims) {
    std::cout << head;
    for (const auto& d : dims)
        std::cout << " " << d.get<int>();
    std::cout << "\n";
}

void render_check(const Json& j) {
    const bool leibniz = j["leibniz"].get<bool>();
    if (leibniz) {
        std::cout << "Leibniz: yes\n";
        std::cout << "Lie: " << yesno(j["lie"].get<bool>()) << "\n";
        return;
    }
    const auto& violations = j["violations"];
    std::cout << "Leibniz: no (" << violations.size() << " violation"
              << (violations.size() == 1 ? "" : "s") << ")\n";
    size_t shown = 0;
    for (const auto& v : violations) {
        if (shown == 20) {
            std::cout << "  ... and " << (violations.size() - shown)
                      << " more\n";
            break;
        }
        std::cout << "  defect at (" << v["x"].get<std::string>() << ", "
                  << v["y"].get<std::string>() << ", "
                  << v["z"].get<std::string>()
                  << "): " << v["defect"].get<std::string>() << "\n";
        ++shown;
    }
}

void render_completeness(const Json& c) {
    std::cout << "center dim: " << c["center_dim"].get<int>() << "\n";
    std::cout << "dim Der: " << c["der_dim"].get<int>()
              << ", dim Inner: " << c["inner_dim"].get<int>() << "\n";
    std::cout << "complete: " << yesno(c["complete_def22"].get<bool>())
              << "\n";
    std::cout << "squares ideal dim: " << c["i_dim"].get<int>()
              << ", equals Ann_r: " << yesno(c["i_equals_annr"].get<bool>())
              << "\n";
    std::cout << "center image dim modulo squares ideal: "
              << c["center_mod_i_dim"].get<int>() << "\n";
    std::cout << "Ernie-complete: " << yesno(c["ernie_complete"].get<bool>())
              << "\n";
}

void render_matrix(const Json& m, const std::string& indent) {
    for (const auto& row : m["entries"]) {
        std::cout << indent << "[";
        for (const auto& e : row)
            std::cout << " " << e.get<std::string>();
        std::cout << " ]\n";
    }
}

void render_analyze(const Json& j) {
    std::cout << "dimension: " << j["dim"].get<int>() << "\n";
    std::vector<std::string> basis;
    for (const auto& b : j["basis"])
        basis.push_back(b.get<std::string>());
    std::cout << "basis: " << join(basis, " ") << "\n";
    const auto& check = j["check"];
    if (check["leibniz"].get<bool>()) {
        std::cout << "Leibniz: yes, Lie: " << yesno(check["lie"].get<bool>())
                  << "\n";
    } else {
        render_check(check);
    }
    const auto& series = j["series"];
    print_dims("lower central dims:", series["lower_central_dims"]);
    print_dims("derived dims:", series["derived_dims"]);
    std::cout << "nilpotent: " << yesno(series["nilpotent"].get<bool>());
    if (!series["nilindex"].is_null())
        std::cout << " (index " << series["nilindex"].get<int>() << ")";
    std::cout << ", solvable: " << yesno(series["solvable"].get<bool>())
              << "\n";
    std::cout << "Ann_r dim: " << j["right_annihilator_dim"].get<int>()
              << ", Ann_l dim: " << j["left_annihilator_dim"].get<int>()
              << ", center dim: " << j["center_dim"].get<int>() << "\n";
    std::cout << "squares ideal dim: " << j["squares_ideal_dim"].get<int>()
              << "\n";
    const auto& gen = j["generators"];
    if (gen.contains("error")) {
        std::cout << "generators: " << gen["error"].get<std::string>()
                  << "\n";
    } else {
        std::vector<std::string> labels;
        for (const auto& l : gen["generator_labels"])
            labels.push_back(l.get<std::string>());
        std::cout << "generators: " << join(labels, ", ") << " (k="
                  << gen["k"].get<int>() << ", k1=" << gen["k1"].get<int>()
                  << ")\n";
    }
    render_completeness(j["completeness"]);
    if (j.contains("extension") && j["extension"].is_object()) {
        std::cout << "extension:\n";
        const auto& ext = j["extension"];
        if (ext.contains("error")) {
            std::cout << "  " << ext["error"].get<std::string>() << "\n";
        } else {
            std::cout << "  dim: " << ext["table"]["dim"].get<int>() << "\n";
        }
    }
}

void render_extension_summary(std::ostream& os, const Json& res) {
    const int dim = res["table"]["dim"].get<int>();
    const auto& generators = res["generators"];
    os << "extension built: dim " << dim << " = "
       << dim - static_cast<int>(generators.size()) << " + "
       << generators.size() << "\n";
    os << "generators:";
    for (const auto& g : generators) {
        const std::string name = g.get<std::string>();
        os << " " << name << " (b="
           << res["b_flags"][name].get<int>() << ", partner "
           << res["partners"][name].get<std::string>() << ")";
    }
    os << "\n";
    const auto& comp = res["components"];
    os << "components: " << comp["nonabelian"].size() << " non-abelian, "
       << comp["abelian"].size() << " abelian\n";
    for (const auto& w : res["warnings"])
        os << "warning: " << w.get<std::string>() << "\n";
}

// ----------------------------------------------------------- subcommands

int cmd_check(const std::string& file, bool json_out) {
    std::string text;
    if (!read_input(file, text))
        return 2;
    int rc = 0;
    AlgPtr a = parse_algebra_arg(text, rc);
    if (rc != LBZ_OK)
        return report_error(rc);
    CStr out;
    rc = lbz_check(a.get(), &out.s);
    if (rc != LBZ_OK)
        return report_error(rc);
    const Json j = Json::parse(out.s);
    if (json_out)
        std::cout << out.s;
    else
        render_check(j);
    return j["leibniz"].get<bool>() ? 0 : 1;
}

int cmd_analyze(const std::string& file, bool json_out) {
    std::string text;
    if (!read_input(file, text))
        return 2;
    const Json probe = Json::parse(text, nullptr, false);
    CStr out;
    int rc = 0;
    if (probe.is_object() && probe.contains("generators")) {
        lbz_presentation* raw = nullptr;
        rc = lbz_presentation_parse(text.c_str(), base_dir_of(file).c_str(),
                                    &raw);
        PresPtr p(raw, lbz_presentation_free);
        if (rc != LBZ_OK)
            return report_error(rc);
        rc = lbz_analyze_presentation(p.get(), &out.s);
    } else {
        AlgPtr a = parse_algebra_arg(text, rc);
        if (rc != LBZ_OK)
            return report_error(rc);
        rc = lbz_analyze(a.get(), &out.s);
    }
    if (rc != LBZ_OK)
        return report_error(rc);
    if (json_out)
        std::cout << out.s;
    else
        render_analyze(Json::parse(out.s));
    return 0;
}

int cmd_derivations(const std::string& file, bool json_out) {
    std::string text;
    if (!read_input(file, text))
        return 2;
    int rc = 0;
    AlgPtr a = parse_algebra_arg(text, rc);
    if (rc != LBZ_OK)
        return report_error(rc);
    CStr out;
    rc = lbz_derivations(a.get(), &out.s);
    if (rc != LBZ_OK)
        return report_error(rc);
    if (json_out) {
        std::cout << out.s;
        return 0;
    }
    const Json j = Json::parse(out.s);
    std::cout << "dim Der: " << j["der_dim"].get<int>() << "\n";
    std::cout << "dim Inner: " << j["inner_dim"].get<int>() << "\n";
    int idx = 0;
    for (const auto& m : j["der_basis"]) {
        std::cout << "derivation " << ++idx << ":\n";
        render_matrix(m, "  ");
    }
    idx = 0;
    for (const auto& m : j["inner_basis"]) {
        std::cout << "inner derivation " << ++idx << ":\n";
        render_matrix(m, "  ");
    }
    return 0;
}

int cmd_complete(const std::string& file, bool json_out) {
    std::string text;
    if (!read_input(file, text))
        return 2;
    int rc = 0;
    AlgPtr a = parse_algebra_arg(text, rc);
    if (rc != LBZ_OK)
        return report_error(rc);
    CStr out;
    rc = lbz_completeness(a.get(), &out.s);
    if (rc != LBZ_OK)
        return report_error(rc);
    if (json_out)
        std::cout << out.s;
    else
        render_completeness(Json::parse(out.s));
    return 0;
}

int cmd_extend(const std::string& file, const std::vector<std::string>& flags,
               const std::string& out_file, bool json_out) {
    std::string text;
    if (!read_input(file, text))
        return 2;
    lbz_presentation* raw = nullptr;
    int rc = lbz_presentation_parse(text.c_str(), base_dir_of(file).c_str(),
                                    &raw);
    PresPtr p(raw, lbz_presentation_free);
    if (rc != LBZ_OK)
        return report_error(rc);
    for (const std::string& item : flags) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
            std::cerr << "error: --flags expects generator=0/1, got '" << item
                      << "'\n";
            return 2;
        }
        const std::string name = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        if (value != "0" && value != "1") {
            std::cerr << "error: flag value for '" << name
                      << "' must be 0 or 1, got '" << value << "'\n";
            return 2;
        }
        rc = lbz_presentation_set_flag(p.get(), name.c_str(),
                                       value == "1" ? 1 : 0);
        if (rc != LBZ_OK)
            return report_error(rc);
    }
    CStr out;
    rc = lbz_extend(p.get(), &out.s);
    if (rc != LBZ_OK)
        return report_error(rc);
    const Json res = Json::parse(out.s);
    const std::string payload =
        json_out ? std::string(out.s) : res["table"].dump(2) + "\n";
    if (!write_output(out_file, payload))
        return 2;
    if (!json_out)
        render_extension_summary(std::cerr, res);
    return 0;
}

int cmd_catalog_list(bool json_out) {
    CStr out;
    const int rc = lbz_catalog_list(&out.s);
    if (rc != LBZ_OK)
        return report_error(rc);
    if (json_out) {
        std::cout << out.s;
        return 0;
    }
    for (const auto& e : Json::parse(out.s)) {
        std::cout << e["name"].get<std::string>();
        const std::string params = e["params"].get<std::string>();
        if (!params.empty())
            std::cout << " [" << params << "]";
        std::cout << "\n    " << e["summary"].get<std::string>() << "\n";
    }
    return 0;
}

int cmd_catalog_get(const std::string& name,
                    const std::vector<std::string>& params, bool want_pres,
                    const std::string& out_file, bool json_out) {
    Json pj = Json::object();
    for (const std::string& item : params) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
            std::cerr << "error: --param expects name=value, got '" << item
                      << "'\n";
            return 2;
        }
        pj[item.substr(0, eq)] = item.substr(eq + 1);
    }
    CStr out;
    const int rc = lbz_catalog_get(name.c_str(), pj.dump().c_str(), &out.s);
    if (rc != LBZ_OK)
        return report_error(rc);
    const Json res = Json::parse(out.s);
    std::string payload;
    if (json_out) {
        payload = out.s;
    } else if (want_pres) {
        if (res["presentation"].is_null()) {
            std::cerr << "error: catalog entry '" << name
                      << "' has no word presentation\n";
            return 2;
        }
        payload = res["presentation"].dump(2) + "\n";
    } else {
        payload = res["table"].dump(2) + "\n";
    }
    if (!write_output(out_file, payload))
        return 2;
    return 0;
}

int cmd_basis_change(const std::string& file, const std::string& matrix_file,
                     const std::string& out_file, bool json_out) {
    (void)json_out; // output is a table file either way
    std::string text, mtext;
    if (!read_input(file, text) || !read_input(matrix_file, mtext))
        return 2;
    int rc = 0;
    AlgPtr a = parse_algebra_arg(text, rc);
    if (rc != LBZ_OK)
        return report_error(rc);
    lbz_algebra* raw = nullptr;
    rc = lbz_basis_change(a.get(), mtext.c_str(), &raw);
    AlgPtr changed(raw, lbz_algebra_free);
    if (rc != LBZ_OK)
        return report_error(rc);
    CStr out;
    rc = lbz_algebra_to_json(changed.get(), &out.s);
    if (rc != LBZ_OK)
        return report_error(rc);
    if (!write_output(out_file, out.s))
        return 2;
    return 0;
}

int cmd_compare(const std::string& a_file, const std::string& b_file,
                const std::string& via_file, bool json_out) {
    std::string a_text, b_text;
    if (!read_input(a_file, a_text) || !read_input(b_file, b_text))
        return 2;
    int rc = 0;
    AlgPtr a = parse_algebra_arg(a_text, rc);
    if (rc != LBZ_OK)
        return report_error(rc);
    AlgPtr b = parse_algebra_arg(b_text, rc);
    if (rc != LBZ_OK)
        return report_error(rc);
    int equal = 0;
    if (via_file.empty()) {
        rc = lbz_tables_equal(a.get(), b.get(), &equal);
    } else {
        std::string mtext;
        if (!read_input(via_file, mtext))
            return 2;
        rc = lbz_verify_isomorphism(a.get(), b.get(), mtext.c_str(), &equal);
    }
    if (rc != LBZ_OK)
        return report_error(rc);
    if (json_out) {
        Json j;
        j["equal"] = equal != 0;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (equal != 0 ? "equal" : "different") << "\n";
    }
    return equal != 0 ? 0 : 1;
}

int cmd_regress(const std::string& data_flag, bool json_out) {
    std::string dir = data_flag;
    if (dir.empty()) {
        const char* env = std::getenv("LBZ_DATA_DIR");
        dir = env != nullptr && env[0] != '\0' ? env : LBZ_DEFAULT_DATA_DIR;
    }
    CStr out;
    const int rc = lbz_run_regressions(dir.c_str(), &out.s);
    if (rc != LBZ_OK)
        return report_error(rc);
    const Json j = Json::parse(out.s);
    if (json_out) {
        std::cout << out.s;
    } else {
        for (const auto& c : j["cases"]) {
            if (c["pass"].get<bool>())
                std::cout << "PASS " << c["name"].get<std::string>() << "\n";
            else
                std::cout << "FAIL " << c["name"].get<std::string>() << ": "
                          << c["detail"].get<std::string>() << "\n";
        }
        std::cout << j["passed"].get<int>() << " passed, "
                  << j["failed"].get<int>() << " failed\n";
    }
    return j["failed"].get<int>() == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact structure-constant toolkit for finite-dimensional "
                 "Leibniz algebras"};
    app.require_subcommand(1);
    bool json_out = false;
    app.add_flag("--json", json_out, "machine-readable JSON output");
    const auto add_json = [&json_out](CLI::App* sub) {
        sub->add_flag("--json", json_out, "machine-readable JSON output");
    };

    auto* check = app.add_subcommand(
        "check", "verify the Leibniz identity ('-' reads stdin)");
    std::string check_file;
    check->add_option("file", check_file, "algebra JSON file")->required();
    add_json(check);

    auto* analyze = app.add_subcommand(
        "analyze", "structural report for an algebra or presentation");
    std::string analyze_file;
    analyze->add_option("file", analyze_file, "algebra or presentation JSON")
        ->required();
    add_json(analyze);

    auto* derivations = app.add_subcommand(
        "derivations", "derivation and inner-derivation bases");
    std::string der_file;
    derivations->add_option("file", der_file, "algebra JSON file")
        ->required();
    add_json(derivations);

    auto* complete =
        app.add_subcommand("complete", "completeness report for an algebra");
    std::string complete_file;
    complete->add_option("file", complete_file, "algebra JSON file")
        ->required();
    add_json(complete);

    auto* extend = app.add_subcommand(
        "extend", "build the maximal solvable extension of a presentation");
    std::string extend_file, extend_out;
    std::vector<std::string> extend_flags;
    extend->add_option("presentation", extend_file, "presentation JSON file")
        ->required();
    extend->add_option("--flags", extend_flags,
                       "abelian flag overrides, e.g. e2=0,e5=1")
        ->delimiter(',');
    extend->add_option("-o,--output", extend_out,
                       "write the extension table here instead of stdout");
    add_json(extend);

    auto* catalog = app.add_subcommand("catalog", "built-in algebra tables");
    catalog->require_subcommand(1);
    auto* cat_list = catalog->add_subcommand("list", "list catalog entries");
    add_json(cat_list);
    auto* cat_get =
        catalog->add_subcommand("get", "instantiate a catalog entry");
    std::string cat_name, cat_out;
    std::vector<std::string> cat_params;
    bool cat_pres = false;
    cat_get->add_option("name", cat_name, "catalog entry name")->required();
    cat_get->add_option("--param", cat_params,
                        "parameter assignment name=value (repeatable)");
    cat_get->add_flag("--presentation", cat_pres,
                      "emit the word presentation instead of the table");
    cat_get->add_option("-o,--output", cat_out,
                        "write output here instead of stdout");
    add_json(cat_get);

    auto* basis_change = app.add_subcommand(
        "basis-change", "rewrite a table in a new basis (rows = new basis)");
    std::string bc_file, bc_matrix, bc_out;
    basis_change->add_option("file", bc_file, "algebra JSON file")
        ->required();
    basis_change
        ->add_option("--matrix", bc_matrix, "matrix JSON file, rows = new "
                                            "basis in old coordinates")
        ->required();
    basis_change->add_option("-o,--output", bc_out,
                             "write output here instead of stdout");
    add_json(basis_change);

    auto* compare = app.add_subcommand(
        "compare", "compare two tables, optionally through a basis change");
    std::string cmp_a, cmp_b, cmp_via;
    compare->add_option("a", cmp_a, "first algebra JSON file")->required();
    compare->add_option("b", cmp_b, "second algebra JSON file")->required();
    compare->add_option("--via", cmp_via, "matrix JSON file");
    add_json(compare);

    auto* regress =
        app.add_subcommand("regress", "run the built-in regression suite");
    std::string regress_data;
    regress->add_option("--data", regress_data,
                        "data directory (default: LBZ_DATA_DIR or built-in)");
    add_json(regress);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (*check)
        return cmd_check(check_file, json_out);
    if (*analyze)
        return cmd_analyze(analyze_file, json_out);
    if (*derivations)
        return cmd_derivations(der_file, json_out);
    if (*complete)
        return cmd_complete(complete_file, json_out);
    if (*extend)
        return cmd_extend(extend_file, extend_flags, extend_out, json_out);
    if (*catalog) {
        if (*cat_list)
            return cmd_catalog_list(json_out);
        return cmd_catalog_get(cat_name, cat_params, cat_pres, cat_out,
                               json_out);
    }
    if (*basis_change)
        return cmd_basis_change(bc_file, bc_matrix, bc_out, json_out);
    if (*compare)
        return cmd_compare(cmp_a, cmp_b, cmp_via, json_out);
    if (*regress)
        return cmd_regress(regress_data, json_out);
    return 2;
}
