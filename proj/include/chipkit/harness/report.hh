#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace chipkit::harness {

using json = nlohmann::json;

/// One checked instance. graph6 (or digraph6), params and the report seed replay it.
struct InstanceRecord {
    std::string graph6;
    json params = json::object();
    json measured = json::object();
    json expected = json::object();
    bool pass = false;
    std::optional<json> witness;
};

struct VerificationReport {
    std::string claim;
    std::string name;
    std::string anchor;
    json config = json::object();
    std::vector<InstanceRecord> instances;
    /// suite-specific aggregates, merged into the summary
    json extra = json::object();
    std::uint64_t seed = 0;
    double elapsed_ms = 0;

    auto passed() const -> bool;
    auto failures() const -> std::size_t;
};

auto to_json(const InstanceRecord & r) -> json;

/// Timing is left out when include_timing is false, which makes equal runs byte-identical.
auto to_json(const VerificationReport & r, bool include_timing = true) -> json;

}
