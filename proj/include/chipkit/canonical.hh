#pragma once

#include <chipkit/graph.hh>

#include <vector>

namespace chipkit {

inline constexpr int canonical_order_cap = 11;

/// Canonical relabelling: isomorphic graphs map to identical Graph values.
///
/// Vertices are first split into cells by colour refinement; the labelling
/// is the lexicographically greatest adjacency code (graph6 bit order) among
/// all orderings that list the cells in their canonical order. Throws
/// CapExceeded above canonical_order_cap vertices.
auto canonical_form(const Graph & g) -> Graph;

/// canonical_form(g) == g.induced(labelling)
auto canonical_labelling(const Graph & g) -> std::vector<Vertex>;

auto isomorphic(const Graph & a, const Graph & b) -> bool;

}
