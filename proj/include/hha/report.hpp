#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace hha {

struct Check {
    std::string name;
    bool pass = false;
    std::string witness;  // optional failure detail
};

// Machine-readable run record for the CLI: parameters, per-check status and
// any embedded tables. Overall status is the conjunction of the checks.
struct RunReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<Check> checks;
    nlohmann::json outputs = nlohmann::json::object();

    void add_check(const std::string& name, bool pass, const std::string& witness = "");
    bool all_pass() const;

    nlohmann::json to_json() const;
    std::string to_text() const;
};

}  // namespace hha
