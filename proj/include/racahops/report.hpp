#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "racahops/exactnum.hpp"

#include "json.hpp"

namespace racahops {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness; // nonempty iff !pass
};

/// Structured verification outcome. Deterministic given
/// (suite, params, scope, seed); elapsed_ms is measured but excluded from the
/// serialised forms unless explicitly requested, so that equal inputs give
/// byte-identical output.
struct Report {
    std::string suite;
    ParameterSet params;
    std::vector<std::pair<std::string, long>> scope; // e.g. {"N", 4}, {"D", 8}
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;
    long elapsed_ms = 0;

    bool all_pass() const;
    void add(const std::string& name, bool pass, const std::string& witness = "");

    nlohmann::json to_json(bool include_timing = false) const;
    std::string to_text(bool include_timing = false) const;
    std::string to_csv(bool include_timing = false) const;
};

} // namespace racahops
