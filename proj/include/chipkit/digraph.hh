#pragma once

#include <chipkit/graph.hh>

#include <cstdint>
#include <span>
#include <vector>

namespace chipkit {

using Arc = std::pair<Vertex, Vertex>;

/// Loopless directed graph without parallel arcs. Both (u,v) and (v,u) may be
/// present; is_oriented() reports whether no such 2-cycle exists.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int order);

    /// Throws ValidationError on loops, duplicate arcs or out-of-range endpoints.
    Digraph(int order, std::span<const Arc> arcs);
    Digraph(int order, std::initializer_list<Arc> arcs);

    auto order() const -> int { return _order; }
    auto size() const -> int { return static_cast<int>(_arcs.size()); }
    auto arcs() const -> const std::vector<Arc> & { return _arcs; }
    auto out_neighbours(Vertex v) const -> const std::vector<Vertex> & { return _out[v]; }
    auto in_neighbours(Vertex v) const -> const std::vector<Vertex> & { return _in[v]; }
    auto has_arc(Vertex u, Vertex v) const -> bool;

    auto is_oriented() const -> bool;
    auto is_acyclic() const -> bool;

    /// Number of vertices on a longest directed path; requires is_acyclic().
    auto longest_path_vertices() const -> int;

    /// Underlying undirected graph (2-cycles collapse to one edge).
    auto underlying() const -> Graph;

    /// Sub-digraph induced by `vertices`, relabelled in the given order.
    auto induced(std::span<const Vertex> vertices) const -> Digraph;

    /// Requires order() <= 64.
    auto out_masks() const -> std::vector<std::uint64_t>;
    auto in_masks() const -> std::vector<std::uint64_t>;

    friend auto operator==(const Digraph &, const Digraph &) -> bool = default;

private:
    int _order = 0;
    std::vector<Arc> _arcs;
    std::vector<std::vector<Vertex>> _out, _in;
};

/// Each edge becomes a pair of opposite arcs.
auto symmetric_digraph(const Graph & g) -> Digraph;

/// Directed path 0 -> 1 -> ... -> vertices-1.
auto directed_path(int vertices) -> Digraph;

/// Directed cycle 0 -> 1 -> ... -> length-1 -> 0.
auto directed_cycle(int length) -> Digraph;

}
