#include "qtorus/report.hpp"

#include <sstream>

namespace qtorus {

bool DecompositionReport::check(const std::string& name, bool ok, const nlohmann::json& detail) {
    auto& entry = checks[name];
    if (entry.is_null()) entry = {{"evaluated", 0}, {"failed", 0}};
    entry["evaluated"] = entry["evaluated"].get<long>() + 1;
    if (!ok) {
        entry["failed"] = entry["failed"].get<long>() + 1;
        if (pass) {
            witness = {{"check", name}, {"detail", detail}};
            pass = false;
        }
    }
    return ok;
}

nlohmann::json DecompositionReport::to_json() const {
    nlohmann::json degs = nlohmann::json::array();
    for (const auto& d : degrees) degs.push_back({{"n", d.n}, {"table", d.table}, {"lhs", d.lhs}, {"rhs", d.rhs}});
    return {{"config", config},
            {"degrees", degs},
            {"checks", checks},
            {"verdict", pass ? "pass" : "fail"},
            {"witness", witness}};
}

namespace {

std::string cell(const nlohmann::json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

}  // namespace

std::string DecompositionReport::to_tsv() const {
    std::ostringstream os;
    os << "# config\t" << config.dump() << "\n";
    os << "n\tweight\tfield\tvalue\n";
    for (const auto& d : degrees) {
        for (const auto& row : d.table)
            for (const auto& [k, v] : row.items())
                if (k != "weight") os << d.n << "\t" << cell(row.value("weight", nlohmann::json(""))) << "\t" << k << "\t" << cell(v) << "\n";
        os << d.n << "\t*\tlhs\t" << cell(d.lhs) << "\n";
        os << d.n << "\t*\trhs\t" << cell(d.rhs) << "\n";
    }
    for (const auto& [name, c] : checks.items())
        os << "check\t" << name << "\t" << c["evaluated"] << "\t" << c["failed"] << "\n";
    os << "verdict\t" << (pass ? "pass" : "fail") << "\n";
    if (!witness.is_null()) os << "witness\t" << witness.dump() << "\n";
    return os.str();
}

}  // namespace qtorus
