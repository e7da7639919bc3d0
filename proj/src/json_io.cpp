#include "json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "errors.hpp"

namespace leibniz {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError(where.empty() ? what : where + ": " + what);
}

const Json& member(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) fail(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
    return *it;
}

int as_int(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) fail(where, "expected an integer");
    return j.get<int>();
}

std::string as_string(const Json& j, const std::string& where) {
    if (!j.is_string()) fail(where, "expected a string");
    return j.get<std::string>();
}

const Json& as_array(const Json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array");
    return j;
}

Rational as_rational(const Json& j, const std::string& where) {
    try {
        return rat_parse(as_string(j, where));
    } catch (const ParseError& e) {
        fail(where, e.what());
    }
}

Json parse_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
    }
}

} // namespace

AlgebraTable algebra_from_json(const Json& j) {
    AlgebraTable a;
    a.n = as_int(member(j, "dim", "algebra"), "dim");
    if (a.n < 1) fail("dim", "must be at least 1");

    const Json& basis = as_array(member(j, "basis", "algebra"), "basis");
    if (static_cast<int>(basis.size()) != a.n) {
        fail("basis", "expected " + std::to_string(a.n) + " labels, got " +
                          std::to_string(basis.size()));
    }
    for (size_t i = 0; i < basis.size(); ++i) {
        std::string where = "basis[" + std::to_string(i) + "]";
        std::string label = as_string(basis[i], where);
        if (label.empty()) fail(where, "label must be nonempty");
        if (a.index_of(label) >= 0) fail(where, "duplicate label '" + label + "'");
        a.labels.push_back(std::move(label));
    }

    const Json& products = as_array(member(j, "products", "algebra"), "products");
    for (size_t pi = 0; pi < products.size(); ++pi) {
        std::string where = "products[" + std::to_string(pi) + "]";
        const Json& entry = products[pi];
        std::string left = as_string(member(entry, "left", where), where + ".left");
        std::string right = as_string(member(entry, "right", where), where + ".right");
        int li = a.index_of(left);
        int ri = a.index_of(right);
        if (li < 0) fail(where + ".left", "unknown basis label '" + left + "'");
        if (ri < 0) fail(where + ".right", "unknown basis label '" + right + "'");
        if (a.gamma.count({li, ri})) {
            fail(where, "duplicate product for (" + left + ", " + right + ")");
        }
        const Json& result = as_array(member(entry, "result", where), where + ".result");
        SparseVec terms;
        for (size_t ti = 0; ti < result.size(); ++ti) {
            std::string twhere = where + ".result[" + std::to_string(ti) + "]";
            const Json& pair = as_array(result[ti], twhere);
            if (pair.size() != 2) fail(twhere, "expected [coefficient, label]");
            Rational coeff = as_rational(pair[0], twhere);
            std::string label = as_string(pair[1], twhere);
            int idx = a.index_of(label);
            if (idx < 0) fail(twhere, "unknown basis label '" + label + "'");
            for (const auto& [seen, c] : terms) {
                if (seen == idx) fail(twhere, "duplicate term for '" + label + "'");
            }
            terms.emplace_back(idx, std::move(coeff));
        }
        a.set_product(li, ri, std::move(terms));
    }
    return a;
}

Json algebra_to_json(const AlgebraTable& a) {
    Json j;
    j["dim"] = a.n;
    j["basis"] = a.labels;
    Json products = Json::array();
    for (const auto& [key, terms] : a.gamma) {
        Json entry;
        entry["left"] = a.labels[key.first];
        entry["right"] = a.labels[key.second];
        Json result = Json::array();
        for (const auto& [idx, coeff] : terms) {
            result.push_back(Json::array({rat_str(coeff), a.labels[idx]}));
        }
        entry["result"] = std::move(result);
        products.push_back(std::move(entry));
    }
    j["products"] = std::move(products);
    return j;
}

AlgebraTable parse_algebra(const std::string& text) {
    return algebra_from_json(parse_text(text));
}

std::string serialize_algebra(const AlgebraTable& a) {
    return algebra_to_json(a).dump(2) + "\n";
}

Mat matrix_from_json(const Json& j) {
    int rows = as_int(member(j, "rows", "matrix"), "rows");
    int cols = as_int(member(j, "cols", "matrix"), "cols");
    if (rows < 1 || cols < 1) fail("matrix", "rows and cols must be at least 1");
    const Json& entries = as_array(member(j, "entries", "matrix"), "entries");
    if (static_cast<int>(entries.size()) != rows) {
        fail("entries", "expected " + std::to_string(rows) + " rows, got " +
                            std::to_string(entries.size()));
    }
    Mat m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        std::string where = "entries[" + std::to_string(r) + "]";
        const Json& row = as_array(entries[r], where);
        if (static_cast<int>(row.size()) != cols) {
            fail(where, "expected " + std::to_string(cols) + " entries, got " +
                            std::to_string(row.size()));
        }
        for (int c = 0; c < cols; ++c) {
            m.at(r, c) = as_rational(row[c], where + "[" + std::to_string(c) + "]");
        }
    }
    return m;
}

Json matrix_to_json(const Mat& m) {
    Json j;
    j["rows"] = m.rows;
    j["cols"] = m.cols;
    Json entries = Json::array();
    for (int r = 0; r < m.rows; ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols; ++c) {
            row.push_back(rat_str(m.at(r, c)));
        }
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

Mat parse_matrix(const std::string& text) { return matrix_from_json(parse_text(text)); }

std::string serialize_matrix(const Mat& m) { return matrix_to_json(m).dump(2) + "\n"; }

WordPresentation presentation_from_json(const Json& j, const std::string& base_dir) {
    WordPresentation p;
    const Json& alg = member(j, "algebra", "presentation");
    if (alg.is_string()) {
        std::filesystem::path path(alg.get<std::string>());
        if (path.is_relative() && !base_dir.empty()) {
            path = std::filesystem::path(base_dir) / path;
        }
        p.algebra = load_algebra_file(path.string());
    } else {
        p.algebra = algebra_from_json(alg);
    }

    const Json& gens = as_array(member(j, "generators", "presentation"), "generators");
    for (size_t i = 0; i < gens.size(); ++i) {
        p.generators.push_back(as_string(gens[i], "generators[" + std::to_string(i) + "]"));
    }

    const Json& words = member(j, "words", "presentation");
    if (!words.is_object()) fail("words", "expected an object");
    for (auto it = words.begin(); it != words.end(); ++it) {
        std::string where = "words." + it.key();
        const Json& letters = as_array(it.value(), where);
        std::vector<std::string> word;
        for (size_t t = 0; t < letters.size(); ++t) {
            word.push_back(as_string(letters[t], where + "[" + std::to_string(t) + "]"));
        }
        p.words[it.key()] = std::move(word);
    }

    if (auto it = j.find("abelian_flags"); it != j.end()) {
        if (!it->is_object()) fail("abelian_flags", "expected an object");
        for (auto fit = it->begin(); fit != it->end(); ++fit) {
            std::string where = "abelian_flags." + fit.key();
            int value = as_int(fit.value(), where);
            if (value != 0 && value != 1) fail(where, "flag must be 0 or 1");
            p.abelian_flags[fit.key()] = value;
        }
    }
    return p;
}

Json presentation_to_json(const WordPresentation& p) {
    Json j;
    j["algebra"] = algebra_to_json(p.algebra);
    j["generators"] = p.generators;
    Json words = Json::object();
    for (const auto& [label, word] : p.words) {
        words[label] = word;
    }
    j["words"] = std::move(words);
    Json flags = Json::object();
    for (const auto& [label, value] : p.abelian_flags) {
        flags[label] = value;
    }
    j["abelian_flags"] = std::move(flags);
    return j;
}

WordPresentation parse_presentation(const std::string& text, const std::string& base_dir) {
    return presentation_from_json(parse_text(text), base_dir);
}

std::string serialize_presentation(const WordPresentation& p) {
    return presentation_to_json(p).dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot read file '" + path + "'");
    }
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

AlgebraTable load_algebra_file(const std::string& path) {
    try {
        return parse_algebra(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

Mat load_matrix_file(const std::string& path) {
    try {
        return parse_matrix(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

WordPresentation load_presentation_file(const std::string& path) {
    std::string base = std::filesystem::path(path).parent_path().string();
    try {
        return parse_presentation(read_file(path), base);
    } catch (const ParseError& e) {
        std::string what = e.what();
        if (what.rfind(path + ": ", 0) == 0 || what.find(": " + path + ": ") != std::string::npos) {
            throw; // inner loader already prefixed a path
        }
        throw ParseError(path + ": " + what);
    }
}

Json extension_result_to_json(const ExtensionResult& r) {
    const AlgebraTable& nt = r.table; // extended table; N labels are a prefix
    Json j;
    j["table"] = algebra_to_json(r.table);
    Json gens = Json::array();
    Json partners = Json::object();
    Json flags = Json::object();
    for (size_t t = 0; t < r.generator_indices.size(); ++t) {
        const std::string& label = nt.labels[r.generator_indices[t]];
        gens.push_back(label);
        partners[label] = r.partner_labels[t];
        flags[label] = r.b_flags[t];
    }
    j["generators"] = std::move(gens);
    j["partners"] = std::move(partners);
    j["b_flags"] = std::move(flags);
    j["alpha"] = matrix_to_json(r.alpha);
    Json beta = Json::array();
    for (size_t g = 0; g < r.beta.size(); ++g) {
        for (size_t i = 0; i < r.beta[g].size(); ++i) {
            if (r.beta[g][i].empty()) continue;
            Json entry;
            entry["partner"] = r.partner_labels[g];
            entry["basis"] = nt.labels[i];
            Json value = Json::array();
            for (const auto& [idx, coeff] : r.beta[g][i]) {
                value.push_back(Json::array({rat_str(coeff), nt.labels[idx]}));
            }
            entry["value"] = std::move(value);
            beta.push_back(std::move(entry));
        }
    }
    j["beta"] = std::move(beta);
    Json components = Json::object();
    Json nonab = Json::array();
    for (const auto& comp : r.components.nonabelian) {
        Json labels = Json::array();
        for (int i : comp) labels.push_back(nt.labels[i]);
        nonab.push_back(std::move(labels));
    }
    Json ab = Json::array();
    for (int i : r.components.abelian) ab.push_back(nt.labels[i]);
    components["nonabelian"] = std::move(nonab);
    components["abelian"] = std::move(ab);
    j["components"] = std::move(components);
    Json warnings = Json::array();
    for (const auto& d : r.defects) {
        if (d.severity == DefectSeverity::Warning) warnings.push_back(d.message);
    }
    j["warnings"] = std::move(warnings);
    return j;
}

} // namespace leibniz
