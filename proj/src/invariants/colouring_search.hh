#pragma once

#include <chipkit/graph.hh>

#include <optional>
#include <vector>

namespace chipkit::detail {

/// Colouring of `g` (at most 64 vertices) with at most k colours in which every
/// union of at most p colour classes induces tree-depth at most the number of
/// classes; p = 1 asks for a proper colouring.
///
/// DSATUR branch and bound: the next vertex has the most distinct neighbour
/// colours, then the highest degree, then the lowest index; a new colour is
/// never more than one above the largest colour used so far.
/// Throws BudgetExhausted after node_budget nodes (0 = unlimited).
auto find_low_td_colouring(const Graph & g, int p, int k, long long node_budget) -> std::optional<std::vector<int>>;

/// Optimal level-p colouring assembled from optimal colourings of the components.
struct LevelSolution {
    int value = 0;
    std::vector<int> colour;
    /// Vertices of a component attaining the value.
    std::vector<Vertex> hardest;
};

/// Throws CapExceeded when a component has more than `cap` vertices.
auto solve_level(const Graph & g, int p, int cap, const char * what, long long node_budget) -> LevelSolution;

}
