#pragma once

#include <chipkit/harness/report.hh>

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chipkit::harness {

struct SuiteConfig {
    std::uint64_t seed = 1;
    /// overrides a suite's largest corpus order; 0 keeps the suite default
    int cap_n = 0;
    int jobs = 1;
    /// suite parameters as key=value; lists are comma separated
    std::map<std::string, std::string> params;
    std::optional<std::filesystem::path> cache_dir;
};

struct SuiteInfo {
    std::string id;
    std::string name;
    std::string anchor;
    std::function<VerificationReport(const SuiteConfig &)> run;
};

/// No registered suite has this id or name.
class UnknownClaim : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// All suites in id order: S1..S11, then PROPS.
auto registered_suites() -> const std::vector<SuiteInfo> &;

/// Lookup by id ("S4") or name ("chiptm-lower"), case-insensitive. Throws UnknownClaim.
auto find_suite(const std::string & claim) -> const SuiteInfo &;

/// Runs a suite and fills in claim, name, anchor, config, seed and elapsed_ms.
auto run_suite(const std::string & claim, const SuiteConfig & config) -> VerificationReport;

/// Runs tasks on up to `jobs` threads; results keep the task order.
auto run_tasks(const std::vector<std::function<InstanceRecord()>> & tasks, int jobs) -> std::vector<InstanceRecord>;

}
