#include "leibniz/leibniz.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>

#include "algebra.hpp"
#include "catalog.hpp"
#include "derivations.hpp"
#include "errors.hpp"
#include "extension.hpp"
#include "json_io.hpp"
#include "regress.hpp"
#include "structure.hpp"

struct lbz_algebra {
    leibniz::AlgebraTable t;
};

struct lbz_presentation {
    leibniz::WordPresentation p;
};

namespace {

using leibniz::AlgebraTable;
using leibniz::Json;

thread_local std::string g_last_error = "no error";

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int fail_arg(const std::string& msg) {
    g_last_error = msg;
    return LBZ_ERR_ARG;
}

template <typename Fn>
int wrap(Fn&& fn) {
    try {
        return fn();
    } catch (const leibniz::ParseError& e) {
        g_last_error = e.what();
        return LBZ_ERR_PARSE;
    } catch (const leibniz::DomainError& e) {
        g_last_error = e.what();
        return LBZ_ERR_DOMAIN;
    } catch (const leibniz::ArgError& e) {
        g_last_error = e.what();
        return LBZ_ERR_ARG;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return LBZ_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return LBZ_ERR_INTERNAL;
    }
}

int emit(const Json& j, char** out) {
    char* s = dup_string(j.dump(2) + "\n");
    if (s == nullptr) {
        g_last_error = "out of memory";
        return LBZ_ERR_INTERNAL;
    }
    *out = s;
    return LBZ_OK;
}

const std::string& lab(const AlgebraTable& t, int i) {
    return t.labels[static_cast<size_t>(i)];
}

Json check_json(const AlgebraTable& t) {
    Json j = Json::object();
    const auto violations = leibniz::check_leibniz(t);
    j["leibniz"] = violations.empty();
    if (violations.empty())
        j["lie"] = leibniz::is_lie(t);
    else
        j["lie"] = nullptr;
    Json arr = Json::array();
    for (const auto& v : violations) {
        Json e = Json::object();
        e["x"] = lab(t, v.i);
        e["y"] = lab(t, v.j);
        e["z"] = lab(t, v.k);
        e["defect"] = leibniz::format_combo(v.defect, t.labels);
        arr.push_back(std::move(e));
    }
    j["violations"] = std::move(arr);
    return j;
}

Json completeness_json(const AlgebraTable& t) {
    const leibniz::CompletenessReport r = leibniz::completeness_report(t);
    Json j = Json::object();
    j["center_dim"] = r.center_dim;
    j["der_dim"] = r.der_dim;
    j["inner_dim"] = r.inner_dim;
    j["complete_def22"] = r.complete_def22;
    j["i_dim"] = r.i_dim;
    j["i_equals_annr"] = r.i_equals_annr;
    j["center_mod_i_dim"] = r.center_mod_i_dim;
    j["ernie_complete"] = r.ernie_complete;
    return j;
}

Json generators_json(const AlgebraTable& t) {
    Json j = Json::object();
    try {
        const leibniz::GeneratorData gd = leibniz::generator_data(t);
        j["k"] = gd.k;
        j["generator_indices"] = gd.generator_indices;
        Json labels = Json::array();
        for (int i : gd.generator_indices)
            labels.push_back(lab(t, i));
        j["generator_labels"] = std::move(labels);
        j["k1"] = gd.k1;
        j["ann_r_generator_indices"] = gd.ann_r_generator_indices;
    } catch (const leibniz::DomainError& e) {
        j = Json::object();
        j["error"] = e.what();
    }
    return j;
}

Json analyze_json(const AlgebraTable& t) {
    Json j = Json::object();
    j["dim"] = t.n;
    j["basis"] = t.labels;
    j["check"] = check_json(t);
    const leibniz::SeriesProfile sp = leibniz::series_profile(t);
    Json series = Json::object();
    series["lower_central_dims"] = sp.lower_central_dims;
    series["derived_dims"] = sp.derived_dims;
    series["nilpotent"] = sp.nilpotent;
    series["solvable"] = sp.solvable;
    if (sp.nilindex.has_value())
        series["nilindex"] = *sp.nilindex;
    else
        series["nilindex"] = nullptr;
    j["series"] = std::move(series);
    j["right_annihilator_dim"] = leibniz::right_annihilator(t).dim();
    j["left_annihilator_dim"] = leibniz::left_annihilator(t).dim();
    j["center_dim"] = leibniz::center(t).dim();
    j["squares_ideal_dim"] = leibniz::squares_ideal(t).dim();
    j["generators"] = generators_json(t);
    j["completeness"] = completeness_json(t);
    return j;
}

Json derivations_json(const AlgebraTable& t) {
    const leibniz::DerivationSpace der = leibniz::derivation_space(t);
    const leibniz::InnerSpace inner = leibniz::inner_derivations(t);
    Json j = Json::object();
    j["der_dim"] = der.dim();
    j["inner_dim"] = inner.dim();
    Json db = Json::array();
    for (const auto& m : der.basis)
        db.push_back(leibniz::matrix_to_json(m));
    j["der_basis"] = std::move(db);
    Json ib = Json::array();
    for (const auto& m : inner.basis)
        ib.push_back(leibniz::matrix_to_json(m));
    j["inner_basis"] = std::move(ib);
    return j;
}

} // namespace

extern "C" {

const char* lbz_last_error(void) { return g_last_error.c_str(); }

void lbz_string_free(char* s) { std::free(s); }

void lbz_algebra_free(lbz_algebra* a) { delete a; }

void lbz_presentation_free(lbz_presentation* p) { delete p; }

int lbz_algebra_parse(const char* json_text, lbz_algebra** out) {
    if (json_text == nullptr || out == nullptr)
        return fail_arg("lbz_algebra_parse: null argument");
    return wrap([&] {
        auto* handle = new lbz_algebra{leibniz::parse_algebra(json_text)};
        *out = handle;
        return LBZ_OK;
    });
}

int lbz_algebra_to_json(const lbz_algebra* a, char** out_json) {
    if (a == nullptr || out_json == nullptr)
        return fail_arg("lbz_algebra_to_json: null argument");
    return wrap(
        [&] { return emit(leibniz::algebra_to_json(a->t), out_json); });
}

int lbz_algebra_dim(const lbz_algebra* a, int* out_dim) {
    if (a == nullptr || out_dim == nullptr)
        return fail_arg("lbz_algebra_dim: null argument");
    *out_dim = a->t.n;
    return LBZ_OK;
}

int lbz_check(const lbz_algebra* a, char** out_json) {
    if (a == nullptr || out_json == nullptr)
        return fail_arg("lbz_check: null argument");
    return wrap([&] { return emit(check_json(a->t), out_json); });
}

int lbz_analyze(const lbz_algebra* a, char** out_json) {
    if (a == nullptr || out_json == nullptr)
        return fail_arg("lbz_analyze: null argument");
    return wrap([&] {
        Json j = analyze_json(a->t);
        j["extension"] = nullptr;
        return emit(j, out_json);
    });
}

int lbz_derivations(const lbz_algebra* a, char** out_json) {
    if (a == nullptr || out_json == nullptr)
        return fail_arg("lbz_derivations: null argument");
    return wrap([&] { return emit(derivations_json(a->t), out_json); });
}

int lbz_completeness(const lbz_algebra* a, char** out_json) {
    if (a == nullptr || out_json == nullptr)
        return fail_arg("lbz_completeness: null argument");
    return wrap([&] { return emit(completeness_json(a->t), out_json); });
}

int lbz_basis_change(const lbz_algebra* a, const char* matrix_json,
                     lbz_algebra** out) {
    if (a == nullptr || matrix_json == nullptr || out == nullptr)
        return fail_arg("lbz_basis_change: null argument");
    return wrap([&] {
        const leibniz::Mat p = leibniz::parse_matrix(matrix_json);
        auto* handle = new lbz_algebra{leibniz::basis_change(a->t, p)};
        *out = handle;
        return LBZ_OK;
    });
}

int lbz_tables_equal(const lbz_algebra* a, const lbz_algebra* b,
                     int* out_equal) {
    if (a == nullptr || b == nullptr || out_equal == nullptr)
        return fail_arg("lbz_tables_equal: null argument");
    *out_equal = leibniz::tables_equal(a->t, b->t) ? 1 : 0;
    return LBZ_OK;
}

int lbz_verify_isomorphism(const lbz_algebra* a, const lbz_algebra* b,
                           const char* matrix_json, int* out_equal) {
    if (a == nullptr || b == nullptr || matrix_json == nullptr ||
        out_equal == nullptr)
        return fail_arg("lbz_verify_isomorphism: null argument");
    return wrap([&] {
        const leibniz::Mat p = leibniz::parse_matrix(matrix_json);
        *out_equal = leibniz::verify_isomorphism(a->t, b->t, p) ? 1 : 0;
        return LBZ_OK;
    });
}

int lbz_presentation_parse(const char* json_text, const char* base_dir,
                           lbz_presentation** out) {
    if (json_text == nullptr || out == nullptr)
        return fail_arg("lbz_presentation_parse: null argument");
    return wrap([&] {
        const std::string base = base_dir == nullptr ? "" : base_dir;
        auto* handle =
            new lbz_presentation{leibniz::parse_presentation(json_text, base)};
        *out = handle;
        return LBZ_OK;
    });
}

int lbz_presentation_to_json(const lbz_presentation* p, char** out_json) {
    if (p == nullptr || out_json == nullptr)
        return fail_arg("lbz_presentation_to_json: null argument");
    return wrap(
        [&] { return emit(leibniz::presentation_to_json(p->p), out_json); });
}

int lbz_presentation_set_flag(lbz_presentation* p, const char* generator,
                              int value) {
    if (p == nullptr || generator == nullptr)
        return fail_arg("lbz_presentation_set_flag: null argument");
    if (value != 0 && value != 1)
        return fail_arg("lbz_presentation_set_flag: value must be 0 or 1");
    const std::string name = generator;
    bool known = false;
    for (const std::string& g : p->p.generators)
        known = known || g == name;
    if (!known)
        return fail_arg("lbz_presentation_set_flag: '" + name +
                        "' is not a declared generator");
    p->p.abelian_flags[name] = value;
    return LBZ_OK;
}

int lbz_presentation_clear_flags(lbz_presentation* p) {
    if (p == nullptr)
        return fail_arg("lbz_presentation_clear_flags: null argument");
    p->p.abelian_flags.clear();
    return LBZ_OK;
}

int lbz_extend(const lbz_presentation* p, char** out_json) {
    if (p == nullptr || out_json == nullptr)
        return fail_arg("lbz_extend: null argument");
    return wrap([&] {
        const leibniz::ExtensionResult r = leibniz::build_extension(p->p);
        return emit(leibniz::extension_result_to_json(r), out_json);
    });
}

int lbz_analyze_presentation(const lbz_presentation* p, char** out_json) {
    if (p == nullptr || out_json == nullptr)
        return fail_arg("lbz_analyze_presentation: null argument");
    return wrap([&] {
        Json j = analyze_json(p->p.algebra);
        try {
            const leibniz::ExtensionResult r = leibniz::build_extension(p->p);
            j["extension"] = leibniz::extension_result_to_json(r);
        } catch (const leibniz::DomainError& e) {
            Json err = Json::object();
            err["error"] = e.what();
            j["extension"] = std::move(err);
        }
        return emit(j, out_json);
    });
}

int lbz_catalog_list(char** out_json) {
    if (out_json == nullptr)
        return fail_arg("lbz_catalog_list: null argument");
    return wrap([&] {
        Json arr = Json::array();
        for (const auto& e : leibniz::catalog_list()) {
            Json j = Json::object();
            j["name"] = e.name;
            j["summary"] = e.summary;
            j["params"] = e.params_help;
            j["has_presentation"] = e.has_presentation;
            arr.push_back(std::move(j));
        }
        return emit(arr, out_json);
    });
}

int lbz_catalog_get(const char* name, const char* params_json,
                    char** out_json) {
    if (name == nullptr || out_json == nullptr)
        return fail_arg("lbz_catalog_get: null argument");
    return wrap([&] {
        std::map<std::string, std::string> params;
        if (params_json != nullptr && params_json[0] != '\0') {
            Json pj = Json::parse(params_json, nullptr, false);
            if (pj.is_discarded())
                throw leibniz::ParseError(
                    "catalog parameters are not valid JSON");
            if (!pj.is_object())
                throw leibniz::ArgError(
                    "catalog parameters must be a JSON object");
            for (const auto& [key, value] : pj.items()) {
                if (value.is_string())
                    params[key] = value.get<std::string>();
                else if (value.is_number_integer())
                    params[key] =
                        std::to_string(value.get<long long>());
                else
                    throw leibniz::ArgError(
                        "catalog parameter '" + key +
                        "' must be a string or an integer");
            }
        }
        const leibniz::CatalogInstance inst =
            leibniz::catalog_get(name, params);
        Json j = Json::object();
        j["name"] = inst.name;
        j["table"] = leibniz::algebra_to_json(inst.table);
        if (inst.presentation.has_value())
            j["presentation"] =
                leibniz::presentation_to_json(*inst.presentation);
        else
            j["presentation"] = nullptr;
        return emit(j, out_json);
    });
}

int lbz_run_regressions(const char* data_dir, char** out_json) {
    if (data_dir == nullptr || out_json == nullptr)
        return fail_arg("lbz_run_regressions: null argument");
    return wrap([&] {
        const auto results = leibniz::run_regressions(data_dir);
        Json arr = Json::array();
        int passed = 0;
        for (const auto& r : results) {
            Json j = Json::object();
            j["name"] = r.name;
            j["pass"] = r.pass;
            j["detail"] = r.detail;
            arr.push_back(std::move(j));
            if (r.pass)
                ++passed;
        }
        Json top = Json::object();
        top["cases"] = std::move(arr);
        top["passed"] = passed;
        top["failed"] = static_cast<int>(results.size()) - passed;
        return emit(top, out_json);
    });
}

} // extern "C"
