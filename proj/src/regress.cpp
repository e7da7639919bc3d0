#include "regress.hpp"

#include <functional>
#include <map>

#include "algebra.hpp"
#include "catalog.hpp"
#include "derivations.hpp"
#include "extension.hpp"
#include "json_io.hpp"
#include "matrix.hpp"

namespace leibniz {

namespace {

using ParamMap = std::map<std::string, std::string>;

ParamMap pn(int n) { return {{"n", std::to_string(n)}}; }

ParamMap pnk(int n, int k) {
    return {{"n", std::to_string(n)}, {"k", std::to_string(k)}};
}

void run_case(std::vector<RegressResult>& out, const std::string& name,
              const std::function<std::string()>& fn) {
    RegressResult r;
    r.name = name;
    try {
        r.detail = fn();
        r.pass = r.detail.empty();
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(r));
}

std::string check_complete(const AlgebraTable& t) {
    CompletenessReport r = completeness_report(t);
    std::vector<std::string> bad;
    if (r.center_dim != 0)
        bad.push_back("center has dimension " +
                      std::to_string(r.center_dim));
    if (!r.i_equals_annr)
        bad.push_back("squares ideal differs from the right annihilator");
    if (!r.complete_def22)
        bad.push_back("dim Der = " + std::to_string(r.der_dim) +
                      " but dim Inner = " + std::to_string(r.inner_dim));
    if (!r.ernie_complete)
        bad.push_back("fails the quotient completeness test");
    std::string msg;
    for (const std::string& b : bad) {
        if (!msg.empty())
            msg += "; ";
        msg += b;
    }
    return msg;
}

} // namespace

std::vector<RegressResult> run_regressions(const std::string& data_dir) {
    std::vector<RegressResult> out;

    const auto golden = [&data_dir](const std::string& name) {
        return load_algebra_file(data_dir + "/golden/" + name + ".json");
    };

    const auto case_l1 = [&](int n, const std::string& goldname) {
        CatalogInstance l1 = catalog_get("L1", pn(n));
        ExtensionResult ext = build_extension(*l1.presentation);
        // The recorded base change keeps the nilradical basis and replaces
        // the added vectors by x1 and x1 + x2.
        Mat p = Mat::identity(n + 2);
        p.at(n + 1, n) = 1;
        AlgebraTable changed = basis_change(ext.table, p);
        CatalogInstance qc = catalog_get("q", pn(n));
        if (!tables_equal(changed, qc.table))
            return std::string("constructed extension does not match the "
                               "catalog q table after the base change");
        if (!tables_equal(qc.table, golden(goldname)))
            return "catalog q table differs from golden file " + goldname;
        return std::string();
    };
    run_case(out, "5.1/L1, n=4", [&] { return case_l1(4, "q6_1"); });
    run_case(out, "5.1/L1, n=5", [&] { return case_l1(5, "q7_1"); });

    const auto case_f2 = [&](int n) {
        CatalogInstance f2 = catalog_get("F2", pn(n));
        WordPresentation pres = *f2.presentation;
        const std::string suffix = "_n" + std::to_string(n);
        pres.abelian_flags["e2"] = 0;
        ExtensionResult rb0 = build_extension(pres);
        if (!tables_equal(rb0.table, catalog_get("R1", pn(n)).table))
            return std::string(
                "flag-0 extension does not match the catalog R1 table");
        if (!tables_equal(rb0.table, golden("r1" + suffix)))
            return "flag-0 extension differs from golden file r1" + suffix;
        pres.abelian_flags["e2"] = 1;
        ExtensionResult rb1 = build_extension(pres);
        if (!tables_equal(rb1.table, catalog_get("R2", pn(n)).table))
            return std::string(
                "flag-1 extension does not match the catalog R2 table");
        if (!tables_equal(rb1.table, golden("r2" + suffix)))
            return "flag-1 extension differs from golden file r2" + suffix;
        return std::string();
    };
    run_case(out, "5.2/F5^2, b=0 and b=1", [&] { return case_f2(5); });
    run_case(out, "5.2/F6^2, b=0 and b=1", [&] { return case_f2(6); });

    run_case(out, "5.3/flag family p=2", [&] {
        CatalogInstance ab = catalog_get("abelian", pn(2));
        std::vector<ExtensionResult> family =
            enumerate_flag_family(*ab.presentation);
        if (family.size() != 3)
            return "expected 3 family members, got " +
                   std::to_string(family.size());
        const char* names[3] = {"R42", "R43", "R41"};
        const char* golds[3] = {"r4_2", "r4_3", "r4_1"};
        for (int i = 0; i < 3; ++i) {
            if (!tables_equal(family[static_cast<size_t>(i)].table,
                              catalog_get(names[i], {}).table))
                return std::string("family member ") + std::to_string(i) +
                       " does not match the catalog " + names[i] + " table";
            if (!tables_equal(family[static_cast<size_t>(i)].table,
                              golden(golds[i])))
                return std::string("family member ") + std::to_string(i) +
                       " differs from golden file " + golds[i];
        }
        return std::string();
    });

    run_case(out, "5.4/5-dim", [&] {
        CatalogInstance n54 = catalog_get("N54", {});
        ExtensionResult ext = build_extension(*n54.presentation);
        if (ext.b_flags != std::vector<int>({0, 1}))
            return std::string("forced flags differ from (0, 1)");
        if (!tables_equal(ext.table, catalog_get("R54", {}).table))
            return std::string(
                "constructed extension does not match the catalog R54 table");
        if (!tables_equal(ext.table, golden("r54")))
            return std::string("constructed extension differs from golden "
                               "file r54");
        return std::string();
    });

    run_case(out, "5.5/NF, n=4..8", [&] {
        for (int n = 4; n <= 8; ++n) {
            ExtensionResult ext =
                build_extension(*catalog_get("NF", pn(n)).presentation);
            // Recorded base change: negate the added vector.
            Mat p = Mat::identity(n + 1);
            p.at(n, n) = -1;
            AlgebraTable changed = basis_change(ext.table, p);
            const std::string at = " at n=" + std::to_string(n);
            if (!tables_equal(changed, catalog_get("RNF", pn(n)).table))
                return "constructed extension does not match the catalog "
                       "RNF table" +
                       at;
            if (!tables_equal(changed, golden("rnf" + std::to_string(n))))
                return "constructed extension differs from golden file rnf" +
                       std::to_string(n);
        }
        return std::string();
    });

    run_case(out, "5.6/mu3 extension, n=7 k=1", [&] {
        ExtensionResult ext =
            build_extension(*catalog_get("mu3", pnk(7, 1)).presentation);
        if (!tables_equal(ext.table, catalog_get("Rmu3", pnk(7, 1)).table))
            return std::string(
                "constructed extension does not match the catalog Rmu3 table");
        if (!tables_equal(ext.table, golden("rmu3_n7_k1")))
            return std::string(
                "constructed extension differs from golden file rmu3_n7_k1");
        return std::string();
    });

    run_case(out, "H1 extension and g536", [&] {
        ExtensionResult ext =
            build_extension(*catalog_get("H1", {}).presentation);
        if (!lie_specialize_check(ext))
            return std::string(
                "extension of the Heisenberg algebra is not antisymmetric");
        if (!tables_equal(ext.table, catalog_get("RH1", {}).table))
            return std::string(
                "constructed extension does not match the catalog RH1 table");
        if (!tables_equal(ext.table, golden("rh1")))
            return std::string(
                "constructed extension differs from golden file rh1");
        Mat p = load_matrix_file(data_dir + "/matrices/g536_to_rh1.json");
        if (!verify_isomorphism(golden("g536"), ext.table, p))
            return std::string(
                "recorded base change does not carry g536 to the extension");
        return std::string();
    });

    struct CompCase {
        const char* name;
        const char* entry;
        ParamMap params;
    };
    const CompCase comp_cases[] = {
        {"completeness/q n=4", "q", pn(4)},
        {"completeness/R1 n=5", "R1", pn(5)},
        {"completeness/R2 n=5", "R2", pn(5)},
        {"completeness/R41", "R41", {}},
        {"completeness/R42", "R42", {}},
        {"completeness/R43", "R43", {}},
        {"completeness/R54", "R54", {}},
        {"completeness/RNF n=4", "RNF", pn(4)},
        {"completeness/Rmu3 n=7 k=1", "Rmu3", pnk(7, 1)},
        {"completeness/RH1", "RH1", {}},
    };
    for (const CompCase& c : comp_cases)
        run_case(out, c.name, [&] {
            return check_complete(catalog_get(c.entry, c.params).table);
        });

    return out;
}

} // namespace leibniz
