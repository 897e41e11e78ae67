#pragma once

#include <chipkit/graph.hh>
#include <chipkit/invariants.hh>

#include <optional>
#include <string>
#include <vector>

namespace chipkit {

/// Witness that a subdivision of `pattern` sits inside a host graph.
///
/// paths[e] is the host path for pattern.edges()[e] = (u, v), listed from
/// branch[u] to branch[v] with both endpoints included.
struct TopoMinorEmbedding {
    Graph pattern;
    std::vector<Vertex> branch;
    std::vector<std::vector<Vertex>> paths;
};

enum class EmbeddingMode {
    /// every path has at most r internal vertices; a subgraph, not necessarily induced
    shallow,
    /// every path has exactly r internal vertices and the image induces exactly H^(r)
    induced_exact,
};

/// Checks injectivity, internal disjointness, path lengths and, for induced_exact,
/// that the image induces exactly the subdivision. Empty on success.
auto validate_embedding(const Graph & g, const TopoMinorEmbedding & e, int r, EmbeddingMode mode) -> std::optional<std::string>;

struct MinorCaps {
    /// host graph order
    int order = 40;
    /// pattern order (clique size, branch set size)
    int pattern = 10;
};

/// A (<= r)-subdivision of K_k in g, or none.
auto find_subdivided_clique(const Graph & g, int k, int r, const MinorCaps & caps = {}) -> std::optional<TopoMinorEmbedding>;

struct OmegaTM {
    int value = 0;
    std::optional<TopoMinorEmbedding> witness;
};

/// Largest k such that a (<= r)-subdivision of K_k is a subgraph of g.
auto omega_TM(const Graph & g, int r, const MinorCaps & caps = {}) -> OmegaTM;

/// An induced copy of H^(r) in g, or none.
auto is_induced_exact_subdivision(const Graph & h, int r, const Graph & g, const MinorCaps & caps = {}) -> std::optional<TopoMinorEmbedding>;

struct ItmPatterns {
    /// canonical forms, sorted by graph6
    std::vector<Graph> patterns;
    Rational max_average_degree;
    int max_clique = 0;
    int max_chromatic = 0;
};

/// All H with at most max_pattern_size vertices whose exact r-subdivision is an induced subgraph of g.
auto enumerate_ITM_exact(const Graph & g, int r, int max_pattern_size, const MinorCaps & caps = {}) -> ItmPatterns;

struct ChiTM {
    int value = 0;
    TopoMinorEmbedding witness;
    /// true when max_pattern_size < |g|, so value is only a lower bound on the supremum
    bool cap_active = false;
};

/// max χ(H) over H with at most max_pattern_size vertices and some (<= r)-subdivision a subgraph of g.
auto chi_TM(const Graph & g, int r, int max_pattern_size, const MinorCaps & caps = {}) -> ChiTM;

}
