#include <chipkit/errors.hh>
#include <chipkit/generators.hh>
#include <chipkit/hom.hh>
#include <chipkit/invariants.hh>

#include <algorithm>

namespace chipkit {

namespace {

auto maps_into(const Graph & g, const std::vector<Vertex> & vertices, const Digraph & h, const HomCaps & caps) -> bool
{
    return homomorphism(symmetric_digraph(g.induced(vertices)), h, caps).has_value();
}

// A clique of the requested size inside the core above the threshold, if it fails to map.
auto clique_obstruction(const Graph & g, const Digraph & h, int clique_threshold, int degeneracy_threshold, const HomCaps & caps) -> std::optional<HomObstruction>
{
    auto core = k_core(g, degeneracy_threshold + 1);
    auto inside = g.induced(core);
    auto best = clique_number(inside);
    if (best.value < clique_threshold || clique_threshold < 1)
        return std::nullopt;
    const auto & local = std::get<std::vector<Vertex>>(best.certificate);
    HomObstruction x;
    x.kind = HomObstruction::Kind::clique;
    for (int i = 0; i < clique_threshold; ++i)
        x.vertices.push_back(core[local[i]]);
    std::sort(x.vertices.begin(), x.vertices.end());
    if (homomorphism(symmetric_digraph(complete_graph(clique_threshold)), h, caps))
        return std::nullopt;
    return x;
}

}

auto h_coloring_with_witness(const Graph & g, const Digraph & h, int clique_threshold, int degeneracy_threshold, const HomCaps & caps) -> HColoring
{
    if (degeneracy(g).value > degeneracy_threshold)
        if (auto x = clique_obstruction(g, h, clique_threshold, degeneracy_threshold, caps))
            return *x;

    if (auto f = homomorphism(symmetric_digraph(g), h, caps))
        return *f;

    // drop vertices greedily while the rest still fails to map
    HomObstruction x;
    x.kind = HomObstruction::Kind::minimal_subgraph;
    for (Vertex v = 0; v < g.order(); ++v)
        x.vertices.push_back(v);
    for (Vertex v = 0; v < g.order(); ++v) {
        std::vector<Vertex> rest;
        for (Vertex u : x.vertices)
            if (u != v)
                rest.push_back(u);
        if (! maps_into(g, rest, h, caps))
            x.vertices = std::move(rest);
    }
    return x;
}

auto validate_h_coloring(const Graph & g, const Digraph & h, const HColoring & result) -> std::optional<std::string>
{
    if (const auto * f = std::get_if<HomMapping>(&result))
        return validate_homomorphism(symmetric_digraph(g), h, *f);
    const auto & x = std::get<HomObstruction>(result);
    auto sorted = x.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return "obstruction repeats a vertex";
    for (Vertex v : sorted)
        if (v < 0 || v >= g.order())
            return "obstruction vertex " + std::to_string(v) + " is not in the graph";
    if (x.kind == HomObstruction::Kind::clique)
        for (std::size_t i = 0; i < sorted.size(); ++i)
            for (std::size_t j = i + 1; j < sorted.size(); ++j)
                if (! g.adjacent(sorted[i], sorted[j]))
                    return "obstruction marked as a clique is not one";
    HomCaps unlimited;
    unlimited.source = 64;
    unlimited.target = 64;
    if (homomorphism(symmetric_digraph(g.induced(sorted)), h, unlimited))
        return "obstruction maps to the target";
    return std::nullopt;
}

}
