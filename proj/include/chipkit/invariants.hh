#pragma once

#include <chipkit/graph.hh>

#include <compare>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace chipkit {

enum class ColoringKind { proper, star, chi_p };

/// Vertex colouring together with the guarantee it claims.
///
/// The level is the p of a χ_p colouring: every union of at most p colour
/// classes must induce tree-depth at most the number of classes. A proper
/// colouring is level 1 and a star colouring level 2.
struct Coloring {
    std::vector<int> colour;
    int num_colours = 0;
    ColoringKind kind = ColoringKind::proper;
    int p = 1;

    static auto proper(std::vector<int> colour) -> Coloring;
    static auto star(std::vector<int> colour) -> Coloring;
    static auto chi_p(int p, std::vector<int> colour) -> Coloring;

    auto level() const -> int;
};

auto kind_name(const Coloring & c) -> std::string;

/// Why a colouring failed validation.
struct ColoringViolation {
    enum class Kind { malformed, monochromatic_edge, bicoloured_p4, deep_subset };
    Kind kind = Kind::malformed;
    /// The offending edge or P4 (in path order); the vertices of the offending subgraph for deep_subset.
    std::vector<Vertex> vertices;
    /// Colour subset whose classes induce excessive tree-depth.
    std::vector<int> colours;
    std::string message;
};

/// Checks the colouring against the definition named by its kind. Empty on success.
auto validate_coloring(const Graph & g, const Coloring & c) -> std::optional<ColoringViolation>;

/// Rooted forest whose ancestor closure contains the graph; parent -1 marks a root.
struct EliminationForest {
    std::vector<Vertex> parent;
    int height = 0;
};

/// Checks acyclicity, the ancestor property for every edge and the stated height. Empty on success.
auto validate_elimination_forest(const Graph & g, const EliminationForest & f) -> std::optional<std::string>;

/// Depth of every vertex (roots have depth 1); throws ValidationError on a malformed forest.
auto forest_depths(const EliminationForest & f) -> std::vector<int>;

/// Two disjoint vertex sets with every cross pair adjacent.
struct Biclique {
    std::vector<Vertex> left, right;
};

using Certificate = std::variant<std::monostate, Coloring, EliminationForest, std::vector<Vertex>, Biclique>;

/// Vertex set certifying a lower bound: a clique, or a subgraph that needs `bound` colours.
struct LowerBoundWitness {
    enum class Kind { clique, critical_subgraph, tree_depth };
    Kind kind = Kind::clique;
    std::vector<Vertex> vertices;
    int bound = 0;
};

struct InvariantResult {
    int value = 0;
    Certificate certificate;
    std::optional<LowerBoundWitness> lower_bound;
};

/// Size caps for the exact solvers. Each applies per connected component.
struct InvariantCaps {
    int chromatic = 32;
    int star = 14;
    int chi_p2 = 14;
    int chi_p3 = 12;
    int tree_depth = 16;
    int clique = 64;
    /// Search nodes allowed per colouring decision; 0 means unlimited.
    long long node_budget = 0;
};

constexpr int tree_depth_hard_cap = 24;
/// Largest component accepted by the bounded tree-depth decision.
constexpr int tree_depth_decision_cap = 64;

auto chromatic_number(const Graph & g, const InvariantCaps & caps = {}) -> InvariantResult;
auto clique_number(const Graph & g, const InvariantCaps & caps = {}) -> InvariantResult;
auto biclique_number(const Graph & g, const InvariantCaps & caps = {}) -> InvariantResult;

/// Exact tree-depth with an elimination forest of that height.
auto tree_depth(const Graph & g, const InvariantCaps & caps = {}) -> InvariantResult;

/// Whether td(g) <= k.
auto tree_depth_at_most(const Graph & g, int k) -> bool;

/// An elimination forest of height at most k, if one exists.
auto elimination_forest_within(const Graph & g, int k) -> std::optional<EliminationForest>;

auto star_chromatic_number(const Graph & g, const InvariantCaps & caps = {}) -> InvariantResult;
auto chi_p(const Graph & g, int p, const InvariantCaps & caps = {}) -> InvariantResult;

/// A χ_p colouring with at most k colours, or none if no such colouring exists.
/// The size cap for level p applies; caps.node_budget bounds the search.
auto chi_p_coloring_within(const Graph & g, int p, int k, const InvariantCaps & caps = {}) -> std::optional<Coloring>;

struct Degeneracy {
    int value = 0;
    /// Removal order of repeated minimum-degree peeling.
    std::vector<Vertex> ordering;
};

auto degeneracy(const Graph & g) -> Degeneracy;

/// Vertices of the k-core (largest induced subgraph of minimum degree >= k), sorted.
auto k_core(const Graph & g, int k) -> std::vector<Vertex>;

auto max_degree(const Graph & g) -> int;

/// Exact fraction in lowest terms with positive denominator.
struct Rational {
    long long num = 0, den = 1;

    Rational() = default;
    Rational(long long n, long long d = 1);

    auto to_string() const -> std::string;
    auto to_double() const -> double { return static_cast<double>(num) / static_cast<double>(den); }

    friend auto operator==(const Rational &, const Rational &) -> bool = default;
    friend auto operator<=>(const Rational & a, const Rational & b) -> std::strong_ordering;
};

auto average_degree(const Graph & g) -> Rational;

}
