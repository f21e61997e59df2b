#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace qtorus {

/// Result of one verification run. The verdict is pass iff every recorded
/// identity held; the witness describes the first failure.
struct DecompositionReport {
    struct Degree {
        long n = 0;
        nlohmann::json table = nlohmann::json::array();
        nlohmann::json lhs;
        nlohmann::json rhs;
    };

    nlohmann::json config = nlohmann::json::object();
    std::vector<Degree> degrees;
    nlohmann::json checks = nlohmann::json::object();
    nlohmann::json witness;  // null while passing
    bool pass = true;

    /// Counts one evaluation of a named identity; the first failure becomes the witness.
    bool check(const std::string& name, bool ok, const nlohmann::json& detail = nullptr);

    [[nodiscard]] nlohmann::json to_json() const;
    [[nodiscard]] std::string to_tsv() const;
};

}  // namespace qtorus
