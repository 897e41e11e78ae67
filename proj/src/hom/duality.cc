#include <chipkit/errors.hh>
#include <chipkit/hom.hh>

#include "../invariants/bits.hh"

#include <algorithm>

namespace chipkit {

using detail::bit;
using detail::Mask;

namespace {

auto describe_walk(Vertex v, const std::vector<Vertex> & walk) -> std::string
{
    std::string s = "closed walk of length " + std::to_string(walk.size() - 1) + " at vertex " + std::to_string(v) + ":";
    for (Vertex x : walk)
        s += " " + std::to_string(x);
    return s;
}

}

ClosedWalkError::ClosedWalkError(Vertex vertex, std::vector<Vertex> walk) :
    std::runtime_error(describe_walk(vertex, walk)),
    _vertex(vertex),
    _walk(std::move(walk))
{
}

auto walk_power(const Digraph & d, int len) -> Digraph
{
    if (len < 1)
        throw ParameterError("walk length must be positive");
    int n = d.order();
    if (n > 64)
        throw CapExceeded("walk power", n, 64);
    auto out = d.out_masks();
    // reach[i][u]: vertices at the end of a walk of exactly i arcs from u
    std::vector<std::vector<Mask>> reach(len + 1, std::vector<Mask>(n, 0));
    for (int u = 0; u < n; ++u)
        reach[0][u] = bit(u);
    for (int i = 1; i <= len; ++i)
        for (int u = 0; u < n; ++u)
            detail::for_each_bit(reach[i - 1][u], [&](int v) { reach[i][u] |= out[v]; });

    for (int u = 0; u < n; ++u) {
        if (! (reach[len][u] & bit(u)))
            continue;
        std::vector<Vertex> walk{u};
        Vertex cur = u;
        for (int i = len - 1; i >= 0; --i) {
            Vertex prev = -1;
            detail::for_each_bit(reach[i][u], [&](int p) {
                if (prev < 0 && (out[p] & bit(cur)))
                    prev = p;
            });
            walk.push_back(prev);
            cur = prev;
        }
        std::reverse(walk.begin(), walk.end());
        throw ClosedWalkError(u, std::move(walk));
    }

    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        detail::for_each_bit(reach[len][u], [&](int v) { arcs.emplace_back(u, v); });
    return Digraph(n, arcs);
}

auto outcome_name(DualOutcome o) -> std::string
{
    switch (o) {
    case DualOutcome::maps_to_dual:
        return "maps_to_dual";
    case DualOutcome::contains_obstruction:
        return "contains_obstruction";
    case DualOutcome::violation:
        return "violation";
    }
    return "unknown";
}

auto verify_restricted_dual(const Digraph & f, const Digraph & d, const std::vector<Digraph> & samples, const HomCaps & caps) -> DualityReport
{
    DualityReport report;
    report.obstruction_to_dual = homomorphism(f, d, caps);
    if (report.obstruction_to_dual)
        return report;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        DualSample s;
        s.index = i;
        s.obstruction_map = homomorphism(f, samples[i], caps);
        s.dual_map = homomorphism(samples[i], d, caps);
        if (! s.obstruction_map && s.dual_map)
            s.outcome = DualOutcome::maps_to_dual;
        else if (s.obstruction_map && ! s.dual_map)
            s.outcome = DualOutcome::contains_obstruction;
        report.samples.push_back(std::move(s));
        if (report.samples.back().outcome == DualOutcome::violation) {
            report.violating_sample = i;
            return report;
        }
    }
    report.pass = true;
    return report;
}

}
