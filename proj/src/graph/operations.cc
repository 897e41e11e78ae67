#include <chipkit/errors.hh>
#include <chipkit/operations.hh>

#include <string>

namespace chipkit {

auto subdivide(const Graph & g, const SubdivisionProfile & profile) -> Subdivision
{
    if (profile.size() != g.edges().size())
        throw ValidationError("subdivision profile has " + std::to_string(profile.size()) + " entries for " + std::to_string(g.size()) + " edges");

    Subdivision result;
    result.paths.resize(g.edges().size());
    std::vector<Edge> edges;
    int next = g.order();
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        if (profile[e] < 0)
            throw ValidationError("negative subdivision count on edge " + std::to_string(e));
        auto [u, v] = g.edges()[e];
        Vertex previous = u;
        for (int i = 0; i < profile[e]; ++i) {
            result.paths[e].push_back(next);
            edges.emplace_back(previous, next);
            previous = next++;
        }
        edges.emplace_back(previous, v);
    }
    result.graph = Graph(next, edges);
    return result;
}

auto subdivide_exact(const Graph & g, int p) -> Subdivision
{
    if (p < 0)
        throw ParameterError("subdivision depth must be non-negative");
    return subdivide(g, SubdivisionProfile(g.edges().size(), p));
}

auto blow_up(const Graph & g, int k) -> Graph
{
    if (k < 1)
        throw ParameterError("blow-up factor must be at least 1");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < g.order(); ++v)
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                edges.emplace_back(v * k + i, v * k + j);
    for (auto [u, v] : g.edges())
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                edges.emplace_back(u * k + i, v * k + j);
    return Graph(g.order() * k, edges);
}

auto power(const Graph & g, int d) -> Graph
{
    if (d < 1)
        throw ParameterError("power exponent must be at least 1");
    std::vector<Edge> edges;
    std::vector<int> dist(g.order());
    for (Vertex s = 0; s < g.order(); ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        std::vector<Vertex> queue{s};
        for (std::size_t i = 0; i < queue.size(); ++i) {
            auto v = queue[i];
            if (dist[v] == d)
                continue;
            for (auto w : g.neighbours(v))
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
        }
        for (auto w : queue)
            if (w > s)
                edges.emplace_back(s, w);
    }
    return Graph(g.order(), edges);
}

auto acyclic_orientation(const Graph & g, std::span<const Vertex> order) -> Digraph
{
    if (static_cast<int>(order.size()) != g.order())
        throw ValidationError("orientation order must list every vertex exactly once");
    std::vector<int> rank(g.order(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (order[i] < 0 || order[i] >= g.order() || rank[order[i]] != -1)
            throw ValidationError("orientation order must be a permutation of the vertices");
        rank[order[i]] = static_cast<int>(i);
    }
    std::vector<Arc> arcs;
    for (auto [u, v] : g.edges())
        arcs.emplace_back(rank[u] < rank[v] ? Arc{u, v} : Arc{v, u});
    return Digraph(g.order(), arcs);
}

Orientations::Orientations(const Graph & g) :
    _graph(g)
{
    if (g.size() > orientation_edge_cap)
        throw CapExceeded("orientation enumeration is limited to " + std::to_string(orientation_edge_cap) + " edges", g.size(), orientation_edge_cap);
}

auto Orientations::orientation(std::uint64_t bits) const -> Digraph
{
    std::vector<Arc> arcs;
    arcs.reserve(_graph.edges().size());
    for (std::size_t i = 0; i < _graph.edges().size(); ++i) {
        auto [u, v] = _graph.edges()[i];
        arcs.emplace_back(((bits >> i) & 1u) ? Arc{v, u} : Arc{u, v});
    }
    return Digraph(_graph.order(), arcs);
}

auto orientations(const Graph & g) -> Orientations
{
    return Orientations(g);
}

}
