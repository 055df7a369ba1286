#pragma once

#include "binpart/report.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace binpart {

struct CampaignConfig {
    std::string budget = "small";  // "small" | "full"
    u64 threads = 1;
    u64 seed = 0;
    std::optional<u64> max_override;
    std::optional<u64> k_override;

    u64 range(u64 small_range, u64 full_range) const {
        if (max_override) return *max_override;
        return budget == "full" ? full_range : small_range;
    }
};

struct Family {
    std::string id;
    std::string module;
    std::string summary;
    std::function<Report(const CampaignConfig&)> run;
};

// All registered verification families, in fixed order.
const std::vector<Family>& family_registry();

std::optional<Report> run_family(const std::string& id, const CampaignConfig& cfg);
std::vector<Report> run_all(const CampaignConfig& cfg);

// Aggregate JSON document for a whole campaign (stable key order and
// formatting; no thread count inside, so equal configs give equal bytes).
nlohmann::json campaign_json(const std::vector<Report>& reports, const CampaignConfig& cfg);

}  // namespace binpart
