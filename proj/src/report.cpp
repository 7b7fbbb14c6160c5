#include "racahops/report.hpp"

#include <algorithm>
#include <sstream>

namespace racahops {

bool Report::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

void Report::add(const std::string& name, bool pass, const std::string& witness) {
    checks.push_back({name, pass, pass ? std::string{} : witness});
}

nlohmann::json Report::to_json(bool include_timing) const {
    nlohmann::json j;
    j["suite"] = suite;
    j["params"] = nlohmann::json::array();
    for (const auto& l : params.lambdas)
        j["params"].push_back(l.str());
    j["scope"] = nlohmann::json::object();
    for (const auto& [k, v] : scope)
        j["scope"][k] = v;
    j["seed"] = seed;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        if (!c.pass)
            cj["witness"] = c.witness;
        j["checks"].push_back(cj);
    }
    j["elapsed_ms"] = include_timing ? elapsed_ms : 0;
    return j;
}

std::string Report::to_text(bool include_timing) const {
    std::ostringstream os;
    os << "suite: " << suite << "\n";
    os << "params: [" << params.str() << "]\n";
    os << "scope:";
    for (const auto& [k, v] : scope)
        os << " " << k << "=" << v;
    os << "\n";
    os << "seed: " << seed << "\n";
    for (const auto& c : checks) {
        os << (c.pass ? "  PASS  " : "  FAIL  ") << c.name << "\n";
        if (!c.pass)
            os << "        witness: " << c.witness << "\n";
    }
    os << (all_pass() ? "result: PASS" : "result: FAIL");
    if (include_timing)
        os << " (" << elapsed_ms << " ms)";
    os << "\n";
    return os.str();
}

std::string Report::to_csv(bool include_timing) const {
    std::ostringstream os;
    std::string scope_str;
    for (const auto& [k, v] : scope)
        scope_str += (scope_str.empty() ? "" : " ") + k + "=" + std::to_string(v);
    os << "suite,params,scope,seed,check,pass,witness,elapsed_ms\n";
    for (const auto& c : checks) {
        std::string witness = c.witness;
        std::replace(witness.begin(), witness.end(), ',', ';');
        std::replace(witness.begin(), witness.end(), '\n', ' ');
        os << suite << ",\"" << params.str() << "\"," << scope_str << "," << seed << "," << c.name
           << "," << (c.pass ? "true" : "false") << "," << witness << ","
           << (include_timing ? elapsed_ms : 0) << "\n";
    }
    return os.str();
}

} // namespace racahops
