#include "hha/report.hpp"

namespace hha {

void RunReport::add_check(const std::string& name, bool pass, const std::string& witness) {
    checks.push_back({name, pass, witness});
}

bool RunReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

nlohmann::json RunReport::to_json() const {
    nlohmann::json j;
    j["command"] = command;
    auto& jp = j["parameters"] = nlohmann::json::object();
    for (const auto& [k, v] : parameters) jp[k] = v;
    auto& jc = j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json e{{"name", c.name}, {"status", c.pass ? "pass" : "fail"}};
        if (!c.witness.empty()) e["witness"] = c.witness;
        jc.push_back(std::move(e));
    }
    j["outputs"] = outputs;
    j["status"] = all_pass() ? "pass" : "fail";
    return j;
}

std::string RunReport::to_text() const {
    std::string s = "# " + command + "\n";
    for (const auto& [k, v] : parameters) s += k + " = " + v + "\n";
    for (const auto& c : checks) {
        s += std::string(c.pass ? "[pass] " : "[FAIL] ") + c.name;
        if (!c.witness.empty()) s += "  (" + c.witness + ")";
        s += "\n";
    }
    if (!outputs.empty()) s += outputs.dump(2) + "\n";
    return s;
}

}  // namespace hha
