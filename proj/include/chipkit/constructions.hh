#pragma once

#include <chipkit/invariants.hh>

#include <map>
#include <vector>

namespace chipkit {

/// Colourings γ_I keyed by a sorted set I of base colours.
///
/// γ_I colours the subgraph induced by the vertices whose base colour lies in
/// I, with vertices in ascending order (as Graph::induced would number them).
using SubsetColorings = std::map<std::vector<int>, Coloring>;

/// The base-colour subsets the product colouring consumes: all subsets of
/// size min(p, k) of the k base colours, in lexicographic order.
auto product_subsets(int base_colours, int p) -> std::vector<std::vector<int>>;

/// Vertex list of G_I for a base colouring, ascending.
auto colour_class_union(const Coloring & base, const std::vector<int> & subset) -> std::vector<Vertex>;

/// ζ(v) = (c(v), (γ_I(v)) for I ∋ c(v)), renumbered by first appearance.
///
/// Throws InputError naming I when γ_I is missing or is not a valid χ_p
/// colouring of G_I, and ValidationError when `base` is not proper.
auto product_chi_p_coloring(const Graph & g, int p, const Coloring & base, const SubsetColorings & sub) -> Coloring;

/// Upper bound k·a^C(k−1, min(p,k)−1) on the colours used by the product colouring.
auto product_colour_bound(int base_colours, int a, int p) -> long long;

/// χ_{p+1} colouring of G^(p) from a proper colouring of G with at most max(k, p+2) colours.
///
/// Branch vertices keep their base colour; the i-th internal vertex of the path
/// for uv (counted from the lower endpoint) takes the i-th smallest colour
/// outside {c(u), c(v)}.
auto subdivision_chi_p_coloring(const Graph & g, int p, const Coloring & base) -> Coloring;

/// χ_p colouring of G^(p) with p+1 colours: branch vertices 0, the i-th internal vertex i.
auto subdivision_position_coloring(const Graph & g, int p) -> Coloring;

}
