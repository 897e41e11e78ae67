#include <chipkit/errors.hh>
#include <chipkit/invariants.hh>

#include <algorithm>

namespace chipkit {

namespace {

auto count_colours(const std::vector<int> & colour) -> int
{
    return colour.empty() ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
}

auto violation(ColoringViolation::Kind kind, std::vector<Vertex> vertices, std::vector<int> colours, std::string message) -> ColoringViolation
{
    return {kind, std::move(vertices), std::move(colours), std::move(message)};
}

auto edge_violation(const Graph & g, const std::vector<int> & colour) -> std::optional<ColoringViolation>
{
    for (auto [u, v] : g.edges())
        if (colour[u] == colour[v])
            return violation(ColoringViolation::Kind::monochromatic_edge, {u, v}, {colour[u]},
                "edge (" + std::to_string(u) + "," + std::to_string(v) + ") is monochromatic");
    return std::nullopt;
}

// Explicit enumeration of paths a-b-c-d over every middle edge bc.
auto p4_violation(const Graph & g, const std::vector<int> & colour) -> std::optional<ColoringViolation>
{
    for (auto [x, y] : g.edges()) {
        for (auto [b, c] : {Edge{x, y}, Edge{y, x}}) {
            for (Vertex a : g.neighbours(b)) {
                if (a == c || colour[a] != colour[c])
                    continue;
                for (Vertex d : g.neighbours(c)) {
                    if (d == b || d == a || colour[d] != colour[b])
                        continue;
                    return violation(ColoringViolation::Kind::bicoloured_p4, {a, b, c, d}, {colour[b], colour[c]},
                        "path " + std::to_string(a) + "-" + std::to_string(b) + "-" + std::to_string(c) + "-" + std::to_string(d) + " uses two colours");
                }
            }
        }
    }
    return std::nullopt;
}

auto subset_violation(const Graph & g, const std::vector<int> & colour, const std::vector<int> & subset) -> std::optional<ColoringViolation>
{
    std::vector<Vertex> members;
    for (Vertex v = 0; v < g.order(); ++v)
        if (std::binary_search(subset.begin(), subset.end(), colour[v]))
            members.push_back(v);
    auto gi = g.induced(members);
    int k = static_cast<int>(subset.size());
    for (const auto & comp : gi.components()) {
        if (static_cast<int>(comp.size()) <= k)
            continue;
        if (tree_depth_at_most(gi.induced(comp), k))
            continue;
        std::vector<Vertex> witness;
        for (Vertex i : comp)
            witness.push_back(members[i]);
        std::string names;
        for (int c : subset)
            names += (names.empty() ? "" : ",") + std::to_string(c);
        return violation(ColoringViolation::Kind::deep_subset, std::move(witness), subset,
            "colour classes {" + names + "} induce tree-depth above " + std::to_string(k));
    }
    return std::nullopt;
}

auto chi_p_violation(const Graph & g, const std::vector<int> & colour, int num_colours, int p) -> std::optional<ColoringViolation>
{
    if (auto v = edge_violation(g, colour))
        return v;
    int top = std::min(p, num_colours);
    std::vector<int> subset;
    std::optional<ColoringViolation> found;
    // subsets of size 2..top in lexicographic order
    auto extend = [&](auto & self, int next) -> void {
        if (found)
            return;
        if (subset.size() >= 2) {
            found = subset_violation(g, colour, subset);
            if (found)
                return;
        }
        if (static_cast<int>(subset.size()) == top)
            return;
        for (int c = next; c < num_colours && ! found; ++c) {
            subset.push_back(c);
            self(self, c + 1);
            subset.pop_back();
        }
    };
    extend(extend, 0);
    return found;
}

}

auto Coloring::proper(std::vector<int> colour) -> Coloring
{
    int k = count_colours(colour);
    return {std::move(colour), k, ColoringKind::proper, 1};
}

auto Coloring::star(std::vector<int> colour) -> Coloring
{
    int k = count_colours(colour);
    return {std::move(colour), k, ColoringKind::star, 2};
}

auto Coloring::chi_p(int p, std::vector<int> colour) -> Coloring
{
    int k = count_colours(colour);
    return {std::move(colour), k, ColoringKind::chi_p, p};
}

auto Coloring::level() const -> int
{
    switch (kind) {
    case ColoringKind::proper:
        return 1;
    case ColoringKind::star:
        return 2;
    case ColoringKind::chi_p:
        return p;
    }
    return p;
}

auto kind_name(const Coloring & c) -> std::string
{
    switch (c.kind) {
    case ColoringKind::proper:
        return "proper";
    case ColoringKind::star:
        return "star";
    case ColoringKind::chi_p:
        return "chi_p(" + std::to_string(c.p) + ")";
    }
    return "unknown";
}

auto validate_coloring(const Graph & g, const Coloring & c) -> std::optional<ColoringViolation>
{
    using K = ColoringViolation::Kind;
    if (static_cast<int>(c.colour.size()) != g.order())
        return violation(K::malformed, {}, {}, "colouring has " + std::to_string(c.colour.size()) + " entries for " + std::to_string(g.order()) + " vertices");
    if (c.kind == ColoringKind::chi_p && c.p < 1)
        return violation(K::malformed, {}, {}, "chi_p level must be at least 1");
    std::vector<char> used(std::max(c.num_colours, 0), 0);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (c.colour[v] < 0 || c.colour[v] >= c.num_colours)
            return violation(K::malformed, {v}, {c.colour[v]}, "vertex " + std::to_string(v) + " has colour outside 0.." + std::to_string(c.num_colours - 1));
        used[c.colour[v]] = 1;
    }
    for (int x = 0; x < c.num_colours; ++x)
        if (! used[x])
            return violation(K::malformed, {}, {x}, "colour " + std::to_string(x) + " is unused");

    switch (c.kind) {
    case ColoringKind::proper:
        return edge_violation(g, c.colour);
    case ColoringKind::star:
        if (auto v = edge_violation(g, c.colour))
            return v;
        return p4_violation(g, c.colour);
    case ColoringKind::chi_p:
        return chi_p_violation(g, c.colour, c.num_colours, c.p);
    }
    return std::nullopt;
}

}
