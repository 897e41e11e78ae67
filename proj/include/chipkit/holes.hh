#pragma once

#include <chipkit/graph.hh>
#include <chipkit/invariants.hh>

#include <optional>
#include <string>
#include <vector>

namespace chipkit {

/// Chordless cycle of length >= 4, stored from its least vertex towards the smaller of its two neighbours.
struct Hole {
    std::vector<Vertex> cycle;

    auto length() const -> int { return static_cast<int>(cycle.size()); }

    friend auto operator<=>(const Hole &, const Hole &) = default;
};

/// Empty if `h` is a canonical chordless cycle of g.
auto validate_hole(const Graph & g, const Hole & h) -> std::optional<std::string>;

struct HoleCaps {
    int order = 40;
    /// enumeration stops with CapExceeded past this many holes
    long long max_holes = 2'000'000;
};

/// Every hole of length 4..max_len, sorted.
auto enumerate_holes(const Graph & g, int max_len, const HoleCaps & caps = {}) -> std::vector<Hole>;

struct EvenHoleCheck {
    bool even_hole_free = true;
    std::optional<Hole> witness;
};

auto is_even_hole_free(const Graph & g, const HoleCaps & caps = {}) -> EvenHoleCheck;

/// h_glen(g): number of holes of length exactly glen.
auto count_holes(const Graph & g, int glen, const HoleCaps & caps = {}) -> long long;

struct HoleDensityReport {
    int g = 0;
    int omega = 0;
    int copies = 0;
    int order = 0;
    long long holes = 0;
    /// (1/g) (omega/2)^(g-1) |G|
    Rational expected;
    int measured_omega = 0;
    bool equal = false;
};

/// Builds `copies` disjoint copies of C_g[K_{omega/2}] and compares h_g with the closed form.
auto verify_hole_density(int g_odd, int omega_even, int copies, const HoleCaps & caps = {}) -> HoleDensityReport;

}
