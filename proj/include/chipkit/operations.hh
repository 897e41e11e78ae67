#pragma once

#include <chipkit/digraph.hh>
#include <chipkit/graph.hh>

#include <cstdint>
#include <iterator>
#include <span>
#include <vector>

namespace chipkit {

/// Number of subdivision vertices placed on each edge, indexed like Graph::edges().
using SubdivisionProfile = std::vector<int>;

/// A subdivided graph together with the location of every new vertex.
///
/// Original vertices keep indices 0..n-1. New vertices follow in edge order
/// (Graph::edges() order), and along each edge from the lower endpoint to the
/// higher one.
struct Subdivision {
    Graph graph;
    /// paths[e] lists the internal vertices of edge e, lower endpoint first.
    std::vector<std::vector<Vertex>> paths;
};

/// Throws ValidationError if the profile does not cover every edge or has a negative entry.
auto subdivide(const Graph & g, const SubdivisionProfile & profile) -> Subdivision;

/// G^(p): every edge replaced by a path with p internal vertices.
auto subdivide_exact(const Graph & g, int p) -> Subdivision;

/// Lexicographic product G[K_k]: vertex (v, i) is v * k + i.
auto blow_up(const Graph & g, int k) -> Graph;

/// G^d: same vertices, adjacent iff distance is at most d.
auto power(const Graph & g, int d) -> Graph;

/// Orient each edge from the vertex appearing earlier in `order` to the later one.
auto acyclic_orientation(const Graph & g, std::span<const Vertex> order) -> Digraph;

inline constexpr int orientation_edge_cap = 20;

/// Lazily enumerates all 2^|E| orientations of a graph. Orientation number
/// `bits` reverses edge i (so it points from the higher to the lower
/// endpoint) iff bit i of `bits` is set.
class Orientations {
public:
    /// Throws CapExceeded when the graph has more than orientation_edge_cap edges.
    explicit Orientations(const Graph & g);

    class iterator {
    public:
        using value_type = Digraph;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        iterator(const Orientations * owner, std::uint64_t bits) :
            _owner(owner), _bits(bits)
        {
        }

        auto operator*() const -> Digraph { return _owner->orientation(_bits); }
        auto operator++() -> iterator &
        {
            ++_bits;
            return *this;
        }
        auto operator++(int) -> iterator
        {
            auto old = *this;
            ++_bits;
            return old;
        }
        friend auto operator==(const iterator & a, const iterator & b) -> bool { return a._bits == b._bits; }

    private:
        const Orientations * _owner = nullptr;
        std::uint64_t _bits = 0;
    };

    auto begin() const -> iterator { return {this, 0}; }
    auto end() const -> iterator { return {this, std::uint64_t{1} << _graph.size()}; }
    auto count() const -> std::uint64_t { return std::uint64_t{1} << _graph.size(); }
    auto orientation(std::uint64_t bits) const -> Digraph;

private:
    Graph _graph;
};

auto orientations(const Graph & g) -> Orientations;

}
