#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace chipkit {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph on vertices 0..order()-1.
///
/// Immutable after construction. Edges are stored normalised (u < v) and
/// sorted; neighbour lists are sorted ascending.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order);

    /// Throws ValidationError on loops, duplicate edges or out-of-range endpoints.
    Graph(int order, std::span<const Edge> edges);
    Graph(int order, std::initializer_list<Edge> edges);

    auto order() const -> int { return _order; }
    auto size() const -> int { return static_cast<int>(_edges.size()); }

    auto edges() const -> const std::vector<Edge> & { return _edges; }
    auto neighbours(Vertex v) const -> const std::vector<Vertex> & { return _adj[v]; }
    auto degree(Vertex v) const -> int { return static_cast<int>(_adj[v].size()); }
    auto adjacent(Vertex u, Vertex v) const -> bool;

    /// Index of edge {u,v} in edges(), or -1.
    auto edge_index(Vertex u, Vertex v) const -> int;

    /// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
    auto induced(std::span<const Vertex> vertices) const -> Graph;

    /// Vertex sets of the connected components, each sorted, ordered by least vertex.
    auto components() const -> std::vector<std::vector<Vertex>>;

    auto connected() const -> bool;

    /// Neighbourhood bitmasks; requires order() <= 64.
    auto adjacency_masks() const -> std::vector<std::uint64_t>;

    friend auto operator==(const Graph &, const Graph &) -> bool = default;

private:
    int _order = 0;
    std::vector<Edge> _edges;
    std::vector<std::vector<Vertex>> _adj;
};

/// Disjoint union; vertices of `b` are shifted by a.order().
auto disjoint_union(const Graph & a, const Graph & b) -> Graph;

}
