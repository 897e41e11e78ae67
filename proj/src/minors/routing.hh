#pragma once

#include "../invariants/bits.hh"

#include <chipkit/errors.hh>
#include <chipkit/minors.hh>

#include <string>

namespace chipkit::detail {

inline void check_minor_caps(const Graph & g, int pattern, const MinorCaps & caps, const char * what)
{
    int order_cap = std::min(caps.order, 64);
    if (g.order() > order_cap)
        throw CapExceeded(what, g.order(), order_cap);
    if (pattern > caps.pattern)
        throw CapExceeded(std::string(what) + " pattern", pattern, caps.pattern);
}

/// Whether a path from a to b exists with at most max_internal internal vertices, none in `blocked`.
inline auto routable(const std::vector<Mask> & adj, int a, int b, int max_internal, Mask blocked) -> bool
{
    if (adj[a] & bit(b))
        return true;
    Mask allowed = ~blocked & ~bit(a) & ~bit(b);
    Mask frontier = adj[a] & allowed, seen = frontier;
    for (int d = 1; d <= max_internal && frontier; ++d) {
        Mask next = 0;
        for_each_bit(frontier, [&](int v) { next |= adj[v]; });
        if (next & bit(b))
            return true;
        frontier = next & allowed & ~seen;
        seen |= frontier;
    }
    return false;
}

/// Calls f(internals) for every a-b path with exactly `internal` internal vertices outside
/// `blocked`, in lexicographic order of the internal sequence. Stops when f returns true.
template <typename F>
auto for_each_path(const std::vector<Mask> & adj, int a, int b, int internal, Mask blocked, F && f) -> bool
{
    int n = static_cast<int>(adj.size());
    Mask allowed = ~blocked & ~bit(a) & ~bit(b);
    if (n < 64)
        allowed &= bit(n) - 1;
    // distance to b through allowed vertices
    std::vector<int> dist(n, 1 << 20);
    dist[b] = 0;
    Mask frontier = bit(b), seen = bit(b);
    for (int d = 1; frontier; ++d) {
        Mask next = 0;
        for_each_bit(frontier, [&](int v) { next |= adj[v]; });
        frontier = next & allowed & ~seen;
        seen |= frontier;
        for_each_bit(frontier, [&](int v) { dist[v] = d; });
    }
    std::vector<int> stack;
    auto dfs = [&](auto & self, int cur, Mask visited) -> bool {
        int depth = static_cast<int>(stack.size());
        if (depth == internal)
            return (adj[cur] & bit(b)) && f(stack);
        bool stop = false;
        for_each_bit(adj[cur] & allowed & ~visited, [&](int w) {
            if (stop || dist[w] > internal - depth)
                return;
            stack.push_back(w);
            stop = self(self, w, visited | bit(w));
            stack.pop_back();
        });
        return stop;
    };
    return dfs(dfs, a, 0);
}

inline auto mask_of(const std::vector<int> & vs) -> Mask
{
    Mask m = 0;
    for (int v : vs)
        m |= bit(v);
    return m;
}

}
