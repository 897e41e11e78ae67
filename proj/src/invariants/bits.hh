#pragma once

#include <chipkit/graph.hh>

#include <bit>
#include <cstdint>
#include <vector>

namespace chipkit::detail {

using Mask = std::uint64_t;

inline auto bit(int v) -> Mask { return Mask{1} << v; }
inline auto popcount(Mask m) -> int { return std::popcount(m); }
inline auto lowest(Mask m) -> int { return std::countr_zero(m); }

template <typename F>
void for_each_bit(Mask m, F && f)
{
    while (m) {
        f(lowest(m));
        m &= m - 1;
    }
}

/// Vertices of `s` reachable from `seed` inside `s`.
inline auto component_from(const std::vector<Mask> & adj, Mask s, Mask seed) -> Mask
{
    Mask seen = seed & s, frontier = seen;
    while (frontier) {
        Mask next = 0;
        for_each_bit(frontier, [&](int v) { next |= adj[v]; });
        frontier = next & s & ~seen;
        seen |= frontier;
    }
    return seen;
}

inline auto component_of_lowest(const std::vector<Mask> & adj, Mask s) -> Mask
{
    return component_from(adj, s, s & (~s + 1));
}

inline auto edges_within(const std::vector<Mask> & adj, Mask s) -> int
{
    int twice = 0;
    for_each_bit(s, [&](int v) { twice += popcount(adj[v] & s); });
    return twice / 2;
}

}
