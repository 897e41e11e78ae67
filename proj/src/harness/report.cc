#include <chipkit/harness/report.hh>

#include <algorithm>

namespace chipkit::harness {

auto VerificationReport::passed() const -> bool { return failures() == 0; }

auto VerificationReport::failures() const -> std::size_t
{
    return static_cast<std::size_t>(std::count_if(instances.begin(), instances.end(), [](const auto & i) { return ! i.pass; }));
}

auto to_json(const InstanceRecord & r) -> json
{
    json j = {
        {"graph6", r.graph6},
        {"params", r.params},
        {"measured", r.measured},
        {"expected", r.expected},
        {"pass", r.pass},
    };
    if (r.witness)
        j["witness"] = *r.witness;
    return j;
}

auto to_json(const VerificationReport & r, bool include_timing) -> json
{
    json instances = json::array();
    for (const auto & i : r.instances)
        instances.push_back(to_json(i));
    json summary = r.extra;
    summary["instances"] = r.instances.size();
    summary["failed"] = r.failures();
    summary["passed"] = r.instances.size() - r.failures();
    summary["pass"] = r.passed();
    json j = {
        {"claim", r.claim},
        {"name", r.name},
        {"anchor", r.anchor},
        {"config", r.config},
        {"instances", std::move(instances)},
        {"summary", std::move(summary)},
        {"seed", r.seed},
    };
    if (include_timing)
        j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

}
