#pragma once

#include "binpart/bignat.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace binpart {

// First failing index of a verification campaign, with enough context to
// diagnose the mismatch.
struct Counterexample {
    u64 index = 0;
    std::string expected;
    std::string actual;
    std::vector<std::pair<std::string, std::string>> context;
};

// Outcome of one verification campaign.
struct Report {
    std::string family;
    std::string module;
    u64 lo = 0;
    u64 hi = 0;  // inclusive
    bool pass = true;
    std::optional<Counterexample> ce;
    std::vector<std::string> notes;

    void fail(u64 index, std::string expected, std::string actual,
              std::vector<std::pair<std::string, std::string>> context = {});
    nlohmann::json to_json() const;
};

}  // namespace binpart
