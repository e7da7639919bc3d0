#ifndef LEIBNIZ_CATALOG_HPP
#define LEIBNIZ_CATALOG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "extension.hpp"

namespace leibniz {

struct CatalogInstance {
    std::string name;
    AlgebraTable table;
    // Present for the nilpotent entries that come with a canonical
    // right-normed word presentation.
    std::optional<WordPresentation> presentation;
};

struct CatalogEntryInfo {
    std::string name;
    std::string summary;
    std::string params_help; // "" for parameter-free entries
    bool has_presentation = false;
};

const std::vector<CatalogEntryInfo>& catalog_list();

// Instantiates a named entry. Parameter values arrive as strings (integers
// or rationals like "1/2"). Throws ArgError for unknown names, unknown or
// ill-formed parameters, and out-of-domain values.
CatalogInstance catalog_get(const std::string& name,
                            const std::map<std::string, std::string>& params);

} // namespace leibniz

#endif
