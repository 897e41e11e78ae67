#include <chipkit/digraph.hh>
#include <chipkit/errors.hh>

#include <algorithm>
#include <string>

namespace chipkit {

Digraph::Digraph(int order) :
    _order(order),
    _out(order < 0 ? 0 : order),
    _in(order < 0 ? 0 : order)
{
    if (order < 0)
        throw ValidationError("digraph order must be non-negative");
}

Digraph::Digraph(int order, std::span<const Arc> arcs) :
    Digraph(order)
{
    _arcs.assign(arcs.begin(), arcs.end());
    for (auto [u, v] : _arcs) {
        if (u < 0 || v < 0 || u >= order || v >= order)
            throw ValidationError("arc (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint outside 0.." + std::to_string(order - 1));
        if (u == v)
            throw ValidationError("loop at vertex " + std::to_string(u));
    }
    std::sort(_arcs.begin(), _arcs.end());
    auto dup = std::adjacent_find(_arcs.begin(), _arcs.end());
    if (dup != _arcs.end())
        throw ValidationError("duplicate arc (" + std::to_string(dup->first) + "," + std::to_string(dup->second) + ")");
    for (auto [u, v] : _arcs) {
        _out[u].push_back(v);
        _in[v].push_back(u);
    }
    for (auto & a : _in)
        std::sort(a.begin(), a.end());
}

Digraph::Digraph(int order, std::initializer_list<Arc> arcs) :
    Digraph(order, std::span<const Arc>(arcs.begin(), arcs.size()))
{
}

auto Digraph::has_arc(Vertex u, Vertex v) const -> bool
{
    if (u < 0 || u >= _order)
        return false;
    return std::binary_search(_out[u].begin(), _out[u].end(), v);
}

auto Digraph::is_oriented() const -> bool
{
    return std::none_of(_arcs.begin(), _arcs.end(), [&](const Arc & a) { return has_arc(a.second, a.first); });
}

auto Digraph::is_acyclic() const -> bool
{
    std::vector<int> indeg(_order);
    for (auto [u, v] : _arcs)
        ++indeg[v];
    std::vector<Vertex> ready;
    for (Vertex v = 0; v < _order; ++v)
        if (indeg[v] == 0)
            ready.push_back(v);
    int removed = 0;
    while (! ready.empty()) {
        auto v = ready.back();
        ready.pop_back();
        ++removed;
        for (auto w : _out[v])
            if (--indeg[w] == 0)
                ready.push_back(w);
    }
    return removed == _order;
}

auto Digraph::longest_path_vertices() const -> int
{
    if (! is_acyclic())
        throw ValidationError("longest path requested on a digraph with a directed cycle");
    std::vector<int> indeg(_order), best(_order, 1);
    for (auto [u, v] : _arcs)
        ++indeg[v];
    std::vector<Vertex> ready;
    for (Vertex v = 0; v < _order; ++v)
        if (indeg[v] == 0)
            ready.push_back(v);
    int result = 0;
    while (! ready.empty()) {
        auto v = ready.back();
        ready.pop_back();
        result = std::max(result, best[v]);
        for (auto w : _out[v]) {
            best[w] = std::max(best[w], best[v] + 1);
            if (--indeg[w] == 0)
                ready.push_back(w);
        }
    }
    return result;
}

auto Digraph::underlying() const -> Graph
{
    std::vector<Edge> edges;
    for (auto [u, v] : _arcs)
        if (u < v || ! has_arc(v, u))
            edges.emplace_back(u, v);
    return Graph(_order, edges);
}

auto Digraph::induced(std::span<const Vertex> vertices) const -> Digraph
{
    std::vector<int> position(_order, -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] < 0 || vertices[i] >= _order || position[vertices[i]] != -1)
            throw ValidationError("induced: vertex list must hold distinct vertices of the digraph");
        position[vertices[i]] = static_cast<int>(i);
    }
    std::vector<Arc> arcs;
    for (auto [u, v] : _arcs)
        if (position[u] != -1 && position[v] != -1)
            arcs.emplace_back(position[u], position[v]);
    return Digraph(static_cast<int>(vertices.size()), arcs);
}

auto Digraph::out_masks() const -> std::vector<std::uint64_t>
{
    if (_order > 64)
        throw ValidationError("out_masks requires at most 64 vertices");
    std::vector<std::uint64_t> masks(_order, 0);
    for (auto [u, v] : _arcs)
        masks[u] |= std::uint64_t{1} << v;
    return masks;
}

auto Digraph::in_masks() const -> std::vector<std::uint64_t>
{
    if (_order > 64)
        throw ValidationError("in_masks requires at most 64 vertices");
    std::vector<std::uint64_t> masks(_order, 0);
    for (auto [u, v] : _arcs)
        masks[v] |= std::uint64_t{1} << u;
    return masks;
}

auto symmetric_digraph(const Graph & g) -> Digraph
{
    std::vector<Arc> arcs;
    for (auto [u, v] : g.edges()) {
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    }
    return Digraph(g.order(), arcs);
}

auto directed_path(int vertices) -> Digraph
{
    if (vertices < 1)
        throw ParameterError("directed path needs at least one vertex");
    std::vector<Arc> arcs;
    for (int i = 0; i + 1 < vertices; ++i)
        arcs.emplace_back(i, i + 1);
    return Digraph(vertices, arcs);
}

auto directed_cycle(int length) -> Digraph
{
    if (length < 2)
        throw ParameterError("directed cycle needs length at least 2");
    std::vector<Arc> arcs;
    for (int i = 0; i < length; ++i)
        arcs.emplace_back(i, (i + 1) % length);
    return Digraph(length, arcs);
}

}
