#include "binpart/report.hpp"

namespace binpart {

void Report::fail(u64 index, std::string expected, std::string actual,
                  std::vector<std::pair<std::string, std::string>> context) {
    // Keep the smallest counterexample only.
    if (!pass && ce && ce->index <= index) return;
    pass = false;
    ce = Counterexample{index, std::move(expected), std::move(actual), std::move(context)};
}

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["family"] = family;
    j["module"] = module;
    j["range"] = {{"lo", lo}, {"hi", hi}};
    j["status"] = pass ? "pass" : "counterexample";
    if (ce) {
        nlohmann::json c;
        c["index"] = ce->index;
        c["expected"] = ce->expected;
        c["actual"] = ce->actual;
        nlohmann::json ctx = nlohmann::json::object();
        for (const auto& [k, v] : ce->context) ctx[k] = v;
        c["context"] = ctx;
        j["counterexample"] = c;
    }
    if (!notes.empty()) j["notes"] = notes;
    return j;
}

}  // namespace binpart
