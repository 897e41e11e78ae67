#pragma once

#include <chipkit/graph.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace chipkit {

enum class Family {
    complete,
    complete_bipartite,
    cycle,
    path,
    star,
    mycielski,
    random_gnp,
    high_girth
};

auto family_name(Family f) -> std::string;
/// Throws ParameterError on an unknown name.
auto family_from_name(const std::string & name) -> Family;

/// Everything needed to reproduce a generated graph.
struct GeneratorSeed {
    std::uint64_t seed = 0;
    Family family = Family::complete;
    /// complete(n) | complete_bipartite(s,t) | cycle(n) | path(n) | star(t) |
    /// mycielski(k) from K_2 | random_gnp(n,p) | high_girth(n,d,g)
    std::vector<double> params;
};

/// Deterministic in the seed and parameters. Throws ParameterError when the
/// parameters are infeasible.
auto generate(const GeneratorSeed & spec) -> Graph;

auto complete_graph(int n) -> Graph;
auto complete_bipartite_graph(int s, int t) -> Graph;
auto cycle_graph(int n) -> Graph;
auto path_graph(int n) -> Graph;
/// K_{1,t} with centre 0.
auto star_graph(int t) -> Graph;
auto petersen_graph() -> Graph;

/// Mycielski construction applied k times, starting from `base`.
auto mycielski(const Graph & base, int k) -> Graph;

auto random_gnp(int n, double p, std::uint64_t seed) -> Graph;

/// Random near-d-regular graph (pairing model, loops and repeats dropped),
/// then one edge of a shortest cycle is deleted while any cycle shorter
/// than `girth` remains. The result has girth >= `girth`.
auto high_girth(int n, int d, int girth, std::uint64_t seed) -> Graph;

/// Vertices of a shortest cycle in cyclic order, or nullopt for a forest.
auto shortest_cycle(const Graph & g) -> std::optional<std::vector<Vertex>>;

/// Length of a shortest cycle, or nullopt for a forest.
auto girth(const Graph & g) -> std::optional<int>;

}
