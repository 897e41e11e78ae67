#pragma once

// Brute-force reference implementations used only by the tests. They touch
// nothing but the Graph/Digraph containers, so a bug in a solver cannot hide
// behind a shared helper.

#include <chipkit/digraph.hh>
#include <chipkit/graph.hh>
#include <chipkit/random.hh>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

namespace oracle {

using chipkit::Digraph;
using chipkit::Edge;
using chipkit::Graph;

inline auto adjacency_matrix(const Graph & g) -> std::vector<std::vector<bool>>
{
    std::vector<std::vector<bool>> m(g.order(), std::vector<bool>(g.order(), false));
    for (auto [u, v] : g.edges())
        m[u][v] = m[v][u] = true;
    return m;
}

/// Isomorphism by trying every bijection.
inline auto isomorphic(const Graph & a, const Graph & b) -> bool
{
    if (a.order() != b.order() || a.size() != b.size())
        return false;
    auto ma = adjacency_matrix(a), mb = adjacency_matrix(b);
    std::vector<int> perm(a.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < a.order() && ok; ++u)
            for (int v = u + 1; v < a.order() && ok; ++v)
                ok = ma[u][v] == mb[perm[u]][perm[v]];
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// All-pairs distances by Floyd-Warshall; -1 when unreachable.
inline auto distances(const Graph & g) -> std::vector<std::vector<int>>
{
    int n = g.order();
    const int inf = 1 << 20;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int v = 0; v < n; ++v)
        d[v][v] = 0;
    for (auto [u, v] : g.edges())
        d[u][v] = d[v][u] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    for (auto & row : d)
        for (auto & x : row)
            if (x >= inf)
                x = -1;
    return d;
}

/// Girth: for every edge uv, 1 + distance(u, v) in G - uv; nullopt for a forest.
inline auto girth(const Graph & g) -> std::optional<int>
{
    std::optional<int> best;
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        std::vector<Edge> rest;
        for (std::size_t f = 0; f < g.edges().size(); ++f)
            if (f != e)
                rest.push_back(g.edges()[f]);
        Graph h(g.order(), rest);
        auto [u, v] = g.edges()[e];
        // BFS in h
        std::vector<int> dist(g.order(), -1);
        std::vector<int> queue{u};
        dist[u] = 0;
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (auto w : h.neighbours(queue[i]))
                if (dist[w] == -1) {
                    dist[w] = dist[queue[i]] + 1;
                    queue.push_back(w);
                }
        if (dist[v] != -1 && (! best || dist[v] + 1 < *best))
            best = dist[v] + 1;
    }
    return best;
}

/// Directed cycle detection by DFS colouring.
inline auto has_directed_cycle(const Digraph & d) -> bool
{
    std::vector<int> state(d.order(), 0);
    std::function<bool(int)> visit = [&](int v) {
        state[v] = 1;
        for (auto w : d.out_neighbours(v)) {
            if (state[w] == 1)
                return true;
            if (state[w] == 0 && visit(w))
                return true;
        }
        state[v] = 2;
        return false;
    };
    for (int v = 0; v < d.order(); ++v)
        if (state[v] == 0 && visit(v))
            return true;
    return false;
}

/// Every assignment of k colours; true if one is proper.
inline auto k_colourable(const Graph & g, int k) -> bool
{
    int n = g.order();
    if (n == 0)
        return true;
    if (k <= 0)
        return false;
    std::vector<int> c(n, 0);
    while (true) {
        bool ok = true;
        for (auto [u, v] : g.edges())
            if (c[u] == c[v]) {
                ok = false;
                break;
            }
        if (ok)
            return true;
        int i = 0;
        while (i < n && ++c[i] == k)
            c[i++] = 0;
        if (i == n)
            return false;
    }
}

inline auto chromatic_number(const Graph & g) -> int
{
    int k = 0;
    while (! oracle::k_colourable(g, k))
        ++k;
    return k;
}

/// Largest clique by subset enumeration (n <= 20).
inline auto clique_number(const Graph & g) -> int
{
    int n = g.order(), best = 0;
    auto m = adjacency_matrix(g);
    for (unsigned s = 0; s < (1u << n); ++s) {
        int size = __builtin_popcount(s);
        if (size <= best)
            continue;
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if (((s >> u) & 1u) && ((s >> v) & 1u) && ! m[u][v])
                    ok = false;
        if (ok)
            best = size;
    }
    return best;
}

/// Tree-depth straight from the definition: the height of the elimination
/// forest of an ordering, minimised over all orderings (n <= 8).
inline auto tree_depth(const Graph & g) -> int
{
    int n = g.order();
    if (n == 0)
        return 0;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    int best = n;
    do {
        // eliminate in order: the root of each component is its earliest vertex
        std::function<int(std::vector<int>)> height = [&](std::vector<int> verts) -> int {
            if (verts.empty())
                return 0;
            int root = verts.front();
            for (auto v : verts)
                if (std::find(order.begin(), order.end(), v) < std::find(order.begin(), order.end(), root))
                    root = v;
            std::vector<int> rest;
            for (auto v : verts)
                if (v != root)
                    rest.push_back(v);
            // components of rest
            int result = 0;
            std::vector<bool> done(n, false);
            for (auto s : rest) {
                if (done[s])
                    continue;
                std::vector<int> comp{s};
                done[s] = true;
                for (std::size_t i = 0; i < comp.size(); ++i)
                    for (auto w : g.neighbours(comp[i]))
                        if (! done[w] && std::find(rest.begin(), rest.end(), w) != rest.end()) {
                            done[w] = true;
                            comp.push_back(w);
                        }
                result = std::max(result, height(comp));
            }
            return 1 + result;
        };
        int h = 0;
        std::vector<bool> done(n, false);
        for (int s = 0; s < n; ++s) {
            if (done[s])
                continue;
            std::vector<int> comp{s};
            done[s] = true;
            for (std::size_t i = 0; i < comp.size(); ++i)
                for (auto w : g.neighbours(comp[i]))
                    if (! done[w]) {
                        done[w] = true;
                        comp.push_back(w);
                    }
            h = std::max(h, height(comp));
        }
        best = std::min(best, h);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

/// Subgraph induced by `keep` (vertex i of the result is keep[i]).
inline auto induced(const Graph & g, const std::vector<int> & keep) -> Graph
{
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (g.adjacent(keep[i], keep[j]))
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Graph(static_cast<int>(keep.size()), edges);
}

/// Every union of at most p colour classes induces tree-depth at most the number of classes.
inline auto is_chi_p_colouring(const Graph & g, const std::vector<int> & colour, int p) -> bool
{
    int k = colour.empty() ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
    for (int subset = 1; subset < (1 << k); ++subset) {
        int size = __builtin_popcount(subset);
        if (size > p)
            continue;
        std::vector<int> keep;
        for (int v = 0; v < g.order(); ++v)
            if (subset >> colour[v] & 1)
                keep.push_back(v);
        if (oracle::tree_depth(oracle::induced(g, keep)) > size)
            return false;
    }
    return true;
}

/// Proper and every path on four vertices sees at least three colours, by direct enumeration.
inline auto is_star_colouring(const Graph & g, const std::vector<int> & colour) -> bool
{
    for (auto [u, v] : g.edges())
        if (colour[u] == colour[v])
            return false;
    int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    if (a == c || b == d || a == d || ! g.adjacent(a, b) || ! g.adjacent(b, c) || ! g.adjacent(c, d))
                        continue;
                    if (colour[a] == colour[c] && colour[b] == colour[d])
                        return false;
                }
    return true;
}

/// Least k admitting a colouring that passes `ok`, trying all k^n assignments.
inline auto least_colours(const Graph & g, const std::function<bool(const std::vector<int> &)> & ok) -> int
{
    int n = g.order();
    for (int k = 0;; ++k) {
        std::vector<int> colour(n, 0);
        if (n == 0)
            return 0;
        if (k == 0)
            continue;
        while (true) {
            if (ok(colour))
                return k;
            int i = 0;
            while (i < n && ++colour[i] == k)
                colour[i++] = 0;
            if (i == n)
                break;
        }
    }
}

inline auto star_chromatic_number(const Graph & g) -> int
{
    return oracle::least_colours(g, [&](const std::vector<int> & c) { return oracle::is_star_colouring(g, c); });
}

inline auto chi_p(const Graph & g, int p) -> int
{
    return oracle::least_colours(g, [&](const std::vector<int> & c) { return oracle::is_chi_p_colouring(g, c, p); });
}

/// Largest r with disjoint r-sets A, B and all of A x B adjacent, over all 3^n splits.
inline auto biclique_number(const Graph & g) -> int
{
    int n = g.order(), best = 0;
    std::vector<int> side(n, 0);
    while (true) {
        std::vector<int> a, b;
        for (int v = 0; v < n; ++v) {
            if (side[v] == 1)
                a.push_back(v);
            else if (side[v] == 2)
                b.push_back(v);
        }
        bool full = true;
        for (int x : a)
            for (int y : b)
                full = full && g.adjacent(x, y);
        if (full)
            best = std::max(best, static_cast<int>(std::min(a.size(), b.size())));
        int i = 0;
        while (i < n && ++side[i] == 3)
            side[i++] = 0;
        if (i == n)
            break;
    }
    return best;
}

/// Random relabelling of g.
inline auto shuffled(const Graph & g, chipkit::SplitMix64 & rng) -> Graph
{
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = perm.size(); i > 1; --i)
        std::swap(perm[i - 1], perm[rng.below(i)]);
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        edges.emplace_back(perm[u], perm[v]);
    return Graph(g.order(), edges);
}


/// Holes counted by length: vertex subsets of size >= 4 inducing a connected 2-regular graph.
inline auto holes_by_length(const Graph & g) -> std::map<int, long long>
{
    std::map<int, long long> out;
    int n = g.order();
    for (long subset = 0; subset < (1L << n); ++subset) {
        std::vector<int> keep;
        for (int v = 0; v < n; ++v)
            if (subset >> v & 1)
                keep.push_back(v);
        if (keep.size() < 4)
            continue;
        auto h = oracle::induced(g, keep);
        bool two_regular = true;
        for (int v = 0; v < h.order(); ++v)
            two_regular &= h.degree(v) == 2;
        if (two_regular && h.connected())
            ++out[h.order()];
    }
    return out;
}

/// Whether any of the |to|^|from| maps preserves every arc.
inline auto has_homomorphism(const Digraph & from, const Digraph & to) -> bool
{
    int n = from.order(), m = to.order();
    if (n == 0)
        return true;
    if (m == 0)
        return false;
    std::vector<int> f(n, 0);
    while (true) {
        bool ok = true;
        for (auto [u, v] : from.arcs())
            ok = ok && to.has_arc(f[u], f[v]);
        if (ok)
            return true;
        int i = 0;
        while (i < n && ++f[i] == m)
            f[i++] = 0;
        if (i == n)
            return false;
    }
}

/// Boolean adjacency matrix raised to the power len.
inline auto walk_matrix(const Digraph & d, int len) -> std::vector<std::vector<bool>>
{
    int n = d.order();
    std::vector<std::vector<bool>> result(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        result[i][i] = true;
    for (int step = 0; step < len; ++step) {
        std::vector<std::vector<bool>> next(n, std::vector<bool>(n, false));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                if (result[i][k])
                    for (int j = 0; j < n; ++j)
                        if (d.has_arc(k, j))
                            next[i][j] = true;
        result = next;
    }
    return result;
}

/// Longest directed path by vertex count, by exhaustive DFS (works with cycles present).
inline auto longest_directed_path(const Digraph & d) -> int
{
    int best = 0;
    std::vector<char> on(d.order(), 0);
    std::function<void(int, int)> go = [&](int v, int length) {
        best = std::max(best, length);
        for (int w : d.out_neighbours(v))
            if (! on[w]) {
                on[w] = 1;
                go(w, length + 1);
                on[w] = 0;
            }
    };
    for (int v = 0; v < d.order(); ++v) {
        on[v] = 1;
        go(v, 1);
        on[v] = 0;
    }
    return best;
}
}
