#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace triweb::webfun {

enum class CheckStatus { Pass, Fail, NotApplicable };

struct Witness {
    std::int64_t row = 0;
    std::int64_t col = 0;
    std::string lhs;
    std::string rhs;
};

/// Outcome of one relation instance. A witness (first differing matrix
/// entry) is present exactly when the check fails.
struct RelationReport {
    std::string relation;
    std::vector<int> labels;
    CheckStatus status = CheckStatus::NotApplicable;
    std::optional<Witness> witness;

    bool pass() const { return status == CheckStatus::Pass; }
    bool applicable() const { return status != CheckStatus::NotApplicable; }
};

inline nlohmann::ordered_json to_json(const RelationReport& r) {
    nlohmann::ordered_json j;
    j["relation"] = r.relation;
    j["labels"] = r.labels;
    j["pass"] = r.pass();
    if (r.witness) {
        j["witness"] = {{"row", r.witness->row},
                        {"col", r.witness->col},
                        {"lhs", r.witness->lhs},
                        {"rhs", r.witness->rhs}};
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

inline nlohmann::ordered_json to_json(const std::vector<RelationReport>& rs) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rs) arr.push_back(to_json(r));
    return arr;
}

} // namespace triweb::webfun
