#ifndef SPTRI_TOOLS_MANIFEST_HPP
#define SPTRI_TOOLS_MANIFEST_HPP

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "sptri/verify.hpp"

namespace sptri::cli {

/// Record of one certify run: parameters, output digests, per-check
/// reports and wall-clock timings.  Timings are informational only.
struct RunManifest {
    std::string command;
    std::map<std::string, std::string> params;
    std::map<std::string, std::string> output_digests;
    std::vector<VerificationReport> checks;
    std::map<std::string, long long> timings_ms;

    bool all_passed() const {
        for (const auto& c : checks) {
            if (!c.passed) return false;
        }
        return true;
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["command"] = command;
        j["params"] = params;
        j["outputs"] = output_digests;
        nlohmann::json checks_json = nlohmann::json::array();
        for (const auto& c : checks) {
            nlohmann::json cj;
            cj["check"] = c.check;
            cj["passed"] = c.passed;
            if (!c.witness.empty()) cj["witness"] = c.witness;
            if (!c.metrics.empty()) cj["metrics"] = c.metrics;
            checks_json.push_back(cj);
        }
        j["checks"] = checks_json;
        j["timings_ms"] = timings_ms;
        j["passed"] = all_passed();
        return j;
    }
};

} // namespace sptri::cli

#endif
