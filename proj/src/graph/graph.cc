#include <chipkit/errors.hh>
#include <chipkit/graph.hh>

#include <algorithm>
#include <string>

namespace chipkit {

Graph::Graph(int order) :
    _order(order),
    _adj(order < 0 ? 0 : order)
{
    if (order < 0)
        throw ValidationError("graph order must be non-negative");
}

Graph::Graph(int order, std::span<const Edge> edges) :
    Graph(order)
{
    _edges.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= order || v >= order)
            throw ValidationError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint outside 0.." + std::to_string(order - 1));
        if (u == v)
            throw ValidationError("loop at vertex " + std::to_string(u));
        _edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(_edges.begin(), _edges.end());
    auto dup = std::adjacent_find(_edges.begin(), _edges.end());
    if (dup != _edges.end())
        throw ValidationError("duplicate edge (" + std::to_string(dup->first) + "," + std::to_string(dup->second) + ")");

    for (auto [u, v] : _edges) {
        _adj[u].push_back(v);
        _adj[v].push_back(u);
    }
    for (auto & a : _adj)
        std::sort(a.begin(), a.end());
}

Graph::Graph(int order, std::initializer_list<Edge> edges) :
    Graph(order, std::span<const Edge>(edges.begin(), edges.size()))
{
}

auto Graph::adjacent(Vertex u, Vertex v) const -> bool
{
    if (u < 0 || v < 0 || u >= _order || v >= _order)
        return false;
    const auto & a = _adj[u].size() <= _adj[v].size() ? _adj[u] : _adj[v];
    Vertex other = _adj[u].size() <= _adj[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), other);
}

auto Graph::edge_index(Vertex u, Vertex v) const -> int
{
    Edge e{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(_edges.begin(), _edges.end(), e);
    if (it == _edges.end() || *it != e)
        return -1;
    return static_cast<int>(it - _edges.begin());
}

auto Graph::induced(std::span<const Vertex> vertices) const -> Graph
{
    std::vector<int> position(_order, -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] < 0 || vertices[i] >= _order || position[vertices[i]] != -1)
            throw ValidationError("induced: vertex list must hold distinct vertices of the graph");
        position[vertices[i]] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (auto w : _adj[vertices[i]])
            if (position[w] > static_cast<int>(i))
                edges.emplace_back(static_cast<int>(i), position[w]);
    return Graph(static_cast<int>(vertices.size()), edges);
}

auto Graph::components() const -> std::vector<std::vector<Vertex>>
{
    std::vector<std::vector<Vertex>> result;
    std::vector<bool> seen(_order, false);
    for (Vertex s = 0; s < _order; ++s) {
        if (seen[s])
            continue;
        std::vector<Vertex> comp{s};
        seen[s] = true;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (auto w : _adj[comp[i]])
                if (! seen[w]) {
                    seen[w] = true;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        result.push_back(std::move(comp));
    }
    return result;
}

auto Graph::connected() const -> bool
{
    return _order <= 1 || components().size() == 1;
}

auto Graph::adjacency_masks() const -> std::vector<std::uint64_t>
{
    if (_order > 64)
        throw ValidationError("adjacency_masks requires at most 64 vertices");
    std::vector<std::uint64_t> masks(_order, 0);
    for (auto [u, v] : _edges) {
        masks[u] |= std::uint64_t{1} << v;
        masks[v] |= std::uint64_t{1} << u;
    }
    return masks;
}

auto disjoint_union(const Graph & a, const Graph & b) -> Graph
{
    std::vector<Edge> edges = a.edges();
    for (auto [u, v] : b.edges())
        edges.emplace_back(u + a.order(), v + a.order());
    return Graph(a.order() + b.order(), edges);
}

}
