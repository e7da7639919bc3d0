#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>
#include <leibniz/leibniz.h>

using Json = nlohmann::ordered_json;

namespace {

const std::string k_data_dir = LBZ_DATA_DIR;

const char* k_nf4_text = R"({
  "dim": 4,
  "basis": ["e1", "e2", "e3", "e4"],
  "products": [
    {"left": "e1", "right": "e1", "result": [["1", "e2"]]},
    {"left": "e2", "right": "e1", "result": [["1", "e3"]]},
    {"left": "e3", "right": "e1", "result": [["1", "e4"]]}
  ]
})";

const char* k_pres_text = R"({
  "algebra": {
    "dim": 4,
    "basis": ["e1", "e2", "e3", "e4"],
    "products": [
      {"left": "e1", "right": "e1", "result": [["1", "e2"]]},
      {"left": "e2", "right": "e1", "result": [["1", "e3"]]},
      {"left": "e3", "right": "e1", "result": [["1", "e4"]]}
    ]
  },
  "generators": ["e1"],
  "words": {"e2": ["e1", "e1"], "e3": ["e1", "e1", "e1"], "e4": ["e1", "e1", "e1", "e1"]}
})";

struct Str {
    char* p = nullptr;
    ~Str() { lbz_string_free(p); }
    Json json() const { return Json::parse(p); }
};

struct Alg {
    lbz_algebra* p = nullptr;
    ~Alg() { lbz_algebra_free(p); }
};

struct Pres {
    lbz_presentation* p = nullptr;
    ~Pres() { lbz_presentation_free(p); }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("algebra handles parse, expose dims, and round trip") {
    Alg a;
    REQUIRE(lbz_algebra_parse(k_nf4_text, &a.p) == LBZ_OK);
    int dim = 0;
    CHECK(lbz_algebra_dim(a.p, &dim) == LBZ_OK);
    CHECK(dim == 4);

    Str text;
    REQUIRE(lbz_algebra_to_json(a.p, &text.p) == LBZ_OK);
    Json j = text.json();
    CHECK(j["dim"] == 4);
    CHECK(j["basis"].size() == 4);

    Alg b;
    CHECK(lbz_algebra_parse(text.p, &b.p) == LBZ_OK);
    int equal = 0;
    CHECK(lbz_tables_equal(a.p, b.p, &equal) == LBZ_OK);
    CHECK(equal == 1);
}

TEST_CASE("parse failures set the thread error message") {
    lbz_algebra* out = nullptr;
    CHECK(lbz_algebra_parse("{]", &out) == LBZ_ERR_PARSE);
    CHECK(out == nullptr);
    CHECK(std::strlen(lbz_last_error()) > 0);

    CHECK(lbz_algebra_parse("{\"dim\": 1, \"basis\": [\"a\"], \"products\": "
                            "[{\"left\": \"a\", \"right\": \"zz\", \"result\": []}]}",
                            &out) == LBZ_ERR_PARSE);
    CHECK(std::string(lbz_last_error()).find("zz") != std::string::npos);
}

TEST_CASE("identity check reports violations through JSON") {
    Alg a;
    REQUIRE(lbz_algebra_parse(k_nf4_text, &a.p) == LBZ_OK);
    Str check;
    REQUIRE(lbz_check(a.p, &check.p) == LBZ_OK);
    Json j = check.json();
    CHECK(j["leibniz"] == true);
    CHECK(j["lie"] == false);
    CHECK(j["violations"].empty());

    Alg bad;
    std::string corrupted = std::string(k_nf4_text);
    corrupted.replace(corrupted.rfind(']'), 0,
                      ", {\"left\": \"e1\", \"right\": \"e2\", \"result\": [[\"1\", \"e3\"]]}");
    REQUIRE(lbz_algebra_parse(corrupted.c_str(), &bad.p) == LBZ_OK);
    Str bj;
    REQUIRE(lbz_check(bad.p, &bj.p) == LBZ_OK);
    Json b = bj.json();
    CHECK(b["leibniz"] == false);
    CHECK(b["lie"].is_null());
    REQUIRE_FALSE(b["violations"].empty());
    bool found = false;
    for (const auto& v : b["violations"]) {
        if (v["x"] == "e1" && v["y"] == "e1" && v["z"] == "e1") {
            found = true;
            CHECK(v["defect"] == "-e3");
        }
    }
    CHECK(found);
}

TEST_CASE("analyze emits the full report") {
    Alg a;
    REQUIRE(lbz_algebra_parse(k_nf4_text, &a.p) == LBZ_OK);
    Str rep;
    REQUIRE(lbz_analyze(a.p, &rep.p) == LBZ_OK);
    Json j = rep.json();
    CHECK(j["dim"] == 4);
    CHECK(j["check"]["leibniz"] == true);
    CHECK(j["series"]["lower_central_dims"] == Json::array({4, 3, 2, 1, 0}));
    CHECK(j["series"]["nilpotent"] == true);
    CHECK(j["series"]["nilindex"] == 5);
    CHECK(j["right_annihilator_dim"] == 3);
    CHECK(j["center_dim"] == 1);
    CHECK(j["squares_ideal_dim"] == 3);
    CHECK(j["generators"]["k"] == 1);
    CHECK(j["completeness"]["complete_def22"] == false);
    CHECK(j["extension"].is_null());
}

TEST_CASE("derivation bases come back as matrices") {
    Alg a;
    REQUIRE(lbz_algebra_parse(k_nf4_text, &a.p) == LBZ_OK);
    Str der;
    REQUIRE(lbz_derivations(a.p, &der.p) == LBZ_OK);
    Json j = der.json();
    CHECK(j["der_dim"].get<int>() > j["inner_dim"].get<int>());
    CHECK(j["inner_dim"] == 1);
    REQUIRE_FALSE(j["der_basis"].empty());
    CHECK(j["der_basis"][0]["rows"] == 4);
    CHECK(j["der_basis"][0]["cols"] == 4);
    CHECK(j["der_basis"].size() == j["der_dim"].get<size_t>());
    CHECK(j["inner_basis"].size() == 1);
}

TEST_CASE("completeness report fields arrive in order") {
    Str got;
    REQUIRE(lbz_catalog_get("RNF", "{\"n\": 4}", &got.p) == LBZ_OK);
    Str table_text;
    {
        Json table = got.json()["table"];
        std::string dumped = table.dump();
        Alg a;
        REQUIRE(lbz_algebra_parse(dumped.c_str(), &a.p) == LBZ_OK);
        Str rep;
        REQUIRE(lbz_completeness(a.p, &rep.p) == LBZ_OK);
        Json j = rep.json();
        CHECK(j["center_dim"] == 0);
        CHECK(j["der_dim"] == 2);
        CHECK(j["inner_dim"] == 2);
        CHECK(j["complete_def22"] == true);
        CHECK(j["i_dim"] == 3);
        CHECK(j["i_equals_annr"] == true);
        CHECK(j["center_mod_i_dim"] == 0);
        CHECK(j["ernie_complete"] == true);
        std::vector<std::string> keys;
        for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
        CHECK(keys == std::vector<std::string>{
                          "center_dim", "der_dim", "inner_dim", "complete_def22",
                          "i_dim", "i_equals_annr", "center_mod_i_dim",
                          "ernie_complete"});
    }
}

TEST_CASE("basis change and recorded isomorphisms") {
    Str g536;
    REQUIRE(lbz_catalog_get("g536", nullptr, &g536.p) == LBZ_OK);
    std::string g536_table = g536.json()["table"].dump();
    Alg a;
    REQUIRE(lbz_algebra_parse(g536_table.c_str(), &a.p) == LBZ_OK);

    Str rh1;
    REQUIRE(lbz_catalog_get("RH1", nullptr, &rh1.p) == LBZ_OK);
    std::string rh1_table = rh1.json()["table"].dump();
    Alg b;
    REQUIRE(lbz_algebra_parse(rh1_table.c_str(), &b.p) == LBZ_OK);

    std::string matrix = read_file(k_data_dir + "/matrices/g536_to_rh1.json");
    int equal = 0;
    REQUIRE(lbz_verify_isomorphism(a.p, b.p, matrix.c_str(), &equal) == LBZ_OK);
    CHECK(equal == 1);

    Alg changed;
    REQUIRE(lbz_basis_change(a.p, matrix.c_str(), &changed.p) == LBZ_OK);
    REQUIRE(lbz_tables_equal(changed.p, b.p, &equal) == LBZ_OK);
    CHECK(equal == 1);

    // Singular matrices are a domain failure.
    Alg bad;
    CHECK(lbz_basis_change(
              a.p,
              "{\"rows\": 5, \"cols\": 5, \"entries\": [[\"0\",\"0\",\"0\",\"0\",\"0\"],"
              "[\"0\",\"0\",\"0\",\"0\",\"0\"],[\"0\",\"0\",\"0\",\"0\",\"0\"],"
              "[\"0\",\"0\",\"0\",\"0\",\"0\"],[\"0\",\"0\",\"0\",\"0\",\"0\"]]}",
              &bad.p) == LBZ_ERR_DOMAIN);
}

TEST_CASE("presentations build extensions") {
    Pres p;
    REQUIRE(lbz_presentation_parse(k_pres_text, nullptr, &p.p) == LBZ_OK);

    Str round;
    REQUIRE(lbz_presentation_to_json(p.p, &round.p) == LBZ_OK);
    CHECK(round.json()["generators"] == Json::array({"e1"}));

    Str ext;
    REQUIRE(lbz_extend(p.p, &ext.p) == LBZ_OK);
    Json j = ext.json();
    CHECK(j["table"]["dim"] == 5);
    CHECK(j["b_flags"]["e1"] == 0);
    CHECK(j["partners"]["e1"] == "x1");
    CHECK(j["warnings"].empty());

    // The presentation report analyzes the base algebra and carries the
    // built extension alongside it.
    Str rep;
    REQUIRE(lbz_analyze_presentation(p.p, &rep.p) == LBZ_OK);
    Json r = rep.json();
    CHECK(r["dim"] == 4);
    CHECK(r["series"]["nilpotent"] == true);
    REQUIRE_FALSE(r["extension"].is_null());
    CHECK(r["extension"]["table"]["dim"] == 5);
}

TEST_CASE("flag overrides are validated") {
    Str ab;
    REQUIRE(lbz_catalog_get("abelian", "{\"n\": 2}", &ab.p) == LBZ_OK);
    std::string pres_text = ab.json()["presentation"].dump();
    Pres p;
    REQUIRE(lbz_presentation_parse(pres_text.c_str(), nullptr, &p.p) == LBZ_OK);

    CHECK(lbz_presentation_set_flag(p.p, "e1", 2) == LBZ_ERR_ARG);
    CHECK(lbz_presentation_set_flag(p.p, "zz", 1) == LBZ_ERR_ARG);
    REQUIRE(lbz_presentation_set_flag(p.p, "e1", 1) == LBZ_OK);
    REQUIRE(lbz_presentation_set_flag(p.p, "e2", 1) == LBZ_OK);

    Str ext1;
    REQUIRE(lbz_extend(p.p, &ext1.p) == LBZ_OK);
    CHECK(ext1.json()["b_flags"] == Json({{"e1", 1}, {"e2", 1}}));

    REQUIRE(lbz_presentation_clear_flags(p.p) == LBZ_OK);
    REQUIRE(lbz_presentation_set_flag(p.p, "e1", 0) == LBZ_OK);
    REQUIRE(lbz_presentation_set_flag(p.p, "e2", 0) == LBZ_OK);
    Str ext0;
    REQUIRE(lbz_extend(p.p, &ext0.p) == LBZ_OK);
    CHECK(ext0.json()["table"] != ext1.json()["table"]);
}

TEST_CASE("catalog surface") {
    Str list;
    REQUIRE(lbz_catalog_list(&list.p) == LBZ_OK);
    Json j = list.json();
    REQUIRE(j.is_array());
    CHECK(j.size() >= 20);
    bool saw_rmu1 = false;
    for (const auto& e : j) {
        CHECK(e.contains("name"));
        CHECK(e.contains("summary"));
        if (e["name"] == "Rmu1") saw_rmu1 = true;
    }
    CHECK(saw_rmu1);

    lbz_algebra* unused = nullptr;
    (void)unused;
    char* out = nullptr;
    CHECK(lbz_catalog_get("Nope", nullptr, &out) == LBZ_ERR_ARG);
    CHECK(out == nullptr);
    CHECK(lbz_catalog_get("NF", "{\"n\": \"bad\"}", &out) == LBZ_ERR_ARG);
    CHECK(lbz_catalog_get("NF", "not json", &out) == LBZ_ERR_PARSE);

    Str withpres;
    REQUIRE(lbz_catalog_get("NF", "{\"n\": \"6\"}", &withpres.p) == LBZ_OK);
    Json w = withpres.json();
    CHECK(w["name"] == "NF");
    CHECK(w["table"]["dim"] == 6);
    CHECK_FALSE(w["presentation"].is_null());

    Str nopres;
    REQUIRE(lbz_catalog_get("g536", nullptr, &nopres.p) == LBZ_OK);
    CHECK(nopres.json()["presentation"].is_null());
}

TEST_CASE("full regression suite through the C surface") {
    Str out;
    REQUIRE(lbz_run_regressions(k_data_dir.c_str(), &out.p) == LBZ_OK);
    Json j = out.json();
    CHECK(j["failed"] == 0);
    CHECK(j["passed"] == j["cases"].size());
    CHECK(j["cases"].size() == 19);
    for (const auto& c : j["cases"]) {
        CHECK(c["pass"] == true);
        CHECK(c["detail"] == "");
    }
}
