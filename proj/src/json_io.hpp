#ifndef LEIBNIZ_JSON_IO_HPP
#define LEIBNIZ_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "algebra.hpp"
#include "extension.hpp"

namespace leibniz {

using Json = nlohmann::ordered_json;

// Algebra file format:
//   { "dim": n, "basis": ["e1", ...],
//     "products": [ {"left": "e2", "right": "e1", "result": [["1","e3"], ...]}, ... ] }
// Missing pairs are zero products; coefficients are "p/q" strings.
AlgebraTable algebra_from_json(const Json& j);
Json algebra_to_json(const AlgebraTable& a);
AlgebraTable parse_algebra(const std::string& text);
std::string serialize_algebra(const AlgebraTable& a);

// Matrix file format: { "rows": r, "cols": c, "entries": [["1","0"], ...] }
// with one inner array per row.
Mat matrix_from_json(const Json& j);
Json matrix_to_json(const Mat& m);
Mat parse_matrix(const std::string& text);
std::string serialize_matrix(const Mat& m);

// Presentation file format:
//   { "algebra": <algebra object or file path>, "generators": ["e1","e3"],
//     "words": {"e2": ["e1","e1"], ...}, "abelian_flags": {"e2": 1} }
// A string "algebra" value is resolved relative to base_dir ("" = cwd).
WordPresentation presentation_from_json(const Json& j, const std::string& base_dir = "");
Json presentation_to_json(const WordPresentation& p);
WordPresentation parse_presentation(const std::string& text, const std::string& base_dir = "");
std::string serialize_presentation(const WordPresentation& p);

std::string read_file(const std::string& path);
AlgebraTable load_algebra_file(const std::string& path);
Mat load_matrix_file(const std::string& path);
WordPresentation load_presentation_file(const std::string& path);

Json extension_result_to_json(const ExtensionResult& r);

} // namespace leibniz

#endif
