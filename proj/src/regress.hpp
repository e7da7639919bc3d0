#ifndef LEIBNIZ_REGRESS_HPP
#define LEIBNIZ_REGRESS_HPP

#include <string>
#include <vector>

namespace leibniz {

struct RegressResult {
    std::string name;
    bool pass = false;
    std::string detail; // empty on pass, explanation on failure
};

// End-to-end regression cases: rebuild every worked extension from its
// presentation, apply the recorded base changes, and compare against the
// catalog builders and the golden table files under data_dir.
// Deterministic: the case list and order never change between runs.
std::vector<RegressResult> run_regressions(const std::string& data_dir);

} // namespace leibniz

#endif
