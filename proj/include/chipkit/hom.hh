#pragma once

#include <chipkit/digraph.hh>
#include <chipkit/graph.hh>

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace chipkit {

/// f[v] is the image of source vertex v.
using HomMapping = std::vector<Vertex>;

struct HomCaps {
    int source = 24;
    int target = 16;
    /// search nodes before BudgetExhausted; 0 means unlimited
    long long node_budget = 0;
};

/// Empty if `f` maps every arc of `from` onto an arc of `to`.
auto validate_homomorphism(const Digraph & from, const Digraph & to, const HomMapping & f) -> std::optional<std::string>;

/// A homomorphism from -> to, or none. Deterministic: the first mapping in search order.
auto homomorphism(const Digraph & from, const Digraph & to, const HomCaps & caps = {}) -> std::optional<HomMapping>;

/// Vertices 0..k-1 with arc (i, j) iff i < j.
auto transitive_tournament(int k) -> Digraph;

/// walk_power found a closed walk, so the power would have a loop.
class ClosedWalkError : public std::runtime_error {
public:
    ClosedWalkError(Vertex vertex, std::vector<Vertex> walk);

    auto vertex() const -> Vertex { return _vertex; }
    /// vertex, ..., vertex: len + 1 entries
    auto walk() const -> const std::vector<Vertex> & { return _walk; }

private:
    Vertex _vertex;
    std::vector<Vertex> _walk;
};

/// Arc (u, v) iff some directed walk of exactly `len` arcs runs from u to v.
/// Throws ClosedWalkError if the walk can return to its start.
auto walk_power(const Digraph & d, int len) -> Digraph;

enum class DualOutcome {
    /// F does not map to G and G maps to D
    maps_to_dual,
    /// F maps to G and G does not map to D
    contains_obstruction,
    violation,
};

auto outcome_name(DualOutcome o) -> std::string;

struct DualSample {
    std::size_t index = 0;
    DualOutcome outcome = DualOutcome::violation;
    std::optional<HomMapping> obstruction_map;
    std::optional<HomMapping> dual_map;
};

struct DualityReport {
    /// F -> D, which disqualifies D outright
    std::optional<HomMapping> obstruction_to_dual;
    /// one entry per sample checked, in sample order; stops after the first violation
    std::vector<DualSample> samples;
    std::optional<std::size_t> violating_sample;
    bool pass = false;
};

auto verify_restricted_dual(const Digraph & f, const Digraph & d, const std::vector<Digraph> & samples, const HomCaps & caps = {}) -> DualityReport;

struct HomObstruction {
    enum class Kind { clique, minimal_subgraph };
    Kind kind = Kind::minimal_subgraph;
    /// G[vertices] admits no homomorphism to H
    std::vector<Vertex> vertices;
};

using HColoring = std::variant<HomMapping, HomObstruction>;

/// Either a homomorphism G -> H or a small vertex set X with G[X] -/-> H.
///
/// Graphs above the degeneracy threshold are searched for a clique of size
/// clique_threshold first; otherwise (or if none is found) the homomorphism
/// search decides, and a failure is shrunk to an inclusion-minimal obstruction.
auto h_coloring_with_witness(const Graph & g, const Digraph & h, int clique_threshold, int degeneracy_threshold, const HomCaps & caps = {}) -> HColoring;

/// Re-checks either shape exhaustively. Empty on success.
auto validate_h_coloring(const Graph & g, const Digraph & h, const HColoring & result) -> std::optional<std::string>;

}
