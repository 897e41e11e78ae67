#include <chipkit/errors.hh>
#include <chipkit/invariants.hh>

#include "bits.hh"

#include <algorithm>
#include <unordered_map>

namespace chipkit {

using detail::bit;
using detail::Mask;
using detail::popcount;

namespace {

// Memoised min(td(S), limit + 1) over vertex subsets of one graph with at most 64 vertices.
class DepthSolver {
public:
    explicit DepthSolver(std::vector<Mask> adj) :
        _adj(std::move(adj))
    {
    }

    auto solve(Mask s, int limit) -> int
    {
        if (! s)
            return 0;
        if (limit <= 0)
            return 1;
        int worst = 0;
        while (s) {
            Mask c = detail::component_of_lowest(_adj, s);
            s &= ~c;
            worst = std::max(worst, solve_connected(c, limit));
            if (worst > limit)
                return limit + 1;
        }
        return worst;
    }

    /// Attaches an optimal elimination forest of `s` below `root` (or as roots when root < 0).
    void build(Mask s, Vertex root, std::vector<Vertex> & parent)
    {
        while (s) {
            Mask c = detail::component_of_lowest(_adj, s);
            s &= ~c;
            int t = solve(c, popcount(c));
            for (int v : by_degree(c)) {
                if (solve(c & ~bit(v), t - 1) <= t - 1) {
                    parent[v] = root;
                    build(c & ~bit(v), v, parent);
                    break;
                }
            }
        }
    }

    /// Like build, but only guarantees height at most k (requires td(s) <= k).
    void build_within(Mask s, int k, Vertex root, std::vector<Vertex> & parent)
    {
        while (s) {
            Mask c = detail::component_of_lowest(_adj, s);
            s &= ~c;
            if (popcount(c) <= k) {
                Vertex above = root;
                detail::for_each_bit(c, [&](int v) {
                    parent[v] = above;
                    above = v;
                });
                continue;
            }
            for (int v : by_degree(c)) {
                if (solve(c & ~bit(v), k - 1) <= k - 1) {
                    parent[v] = root;
                    build_within(c & ~bit(v), k - 1, v, parent);
                    break;
                }
            }
        }
    }

private:
    struct Entry {
        int value;
        bool exact;
    };

    // Vertices of s, highest degree inside s first, then lowest index.
    auto by_degree(Mask s) const -> std::vector<int>
    {
        std::vector<int> vs;
        detail::for_each_bit(s, [&](int v) { vs.push_back(v); });
        std::stable_sort(vs.begin(), vs.end(), [&](int a, int b) {
            return popcount(_adj[a] & s) > popcount(_adj[b] & s);
        });
        return vs;
    }

    auto solve_connected(Mask s, int limit) -> int
    {
        int n = popcount(s);
        if (n == 1)
            return 1;
        if (limit == 1)
            return 2;
        int m = detail::edges_within(_adj, s);
        bool star = false;
        if (m == n - 1)
            detail::for_each_bit(s, [&](int v) { star = star || popcount(_adj[v] & s) == n - 1; });
        if (star)
            return 2;
        if (limit == 2)
            return 3;
        // every vertex is adjacent only to its at most td-1 ancestors below it
        if (static_cast<long long>(m) > static_cast<long long>(limit - 1) * n)
            return limit + 1;
        if (m == n * (n - 1) / 2)
            return std::min(n, limit + 1);

        int lb = 3;
        if (auto it = _memo.find(s); it != _memo.end()) {
            if (it->second.exact)
                return std::min(it->second.value, limit + 1);
            if (it->second.value > limit)
                return limit + 1;
            lb = std::max(lb, it->second.value);
        }

        int best = std::min(n, limit + 1);
        for (int v : by_degree(s)) {
            if (best <= lb)
                break;
            int r = solve(s & ~bit(v), best - 2);
            best = std::min(best, 1 + r);
        }
        auto & e = _memo[s];
        if (best <= limit)
            e = {best, true};
        else if (! e.exact)
            e.value = std::max(e.value, limit + 1);
        return best;
    }

    std::vector<Mask> _adj;
    std::unordered_map<Mask, Entry> _memo;
};

auto full_mask(int n) -> Mask
{
    return n == 64 ? ~Mask{0} : bit(n) - 1;
}

auto component_graph(const Graph & g, const std::vector<Vertex> & comp) -> std::vector<Mask>
{
    return g.induced(comp).adjacency_masks();
}

}

auto forest_depths(const EliminationForest & f) -> std::vector<int>
{
    int n = static_cast<int>(f.parent.size());
    for (int v = 0; v < n; ++v)
        if (f.parent[v] < -1 || f.parent[v] >= n || f.parent[v] == v)
            throw ValidationError("elimination forest parent of " + std::to_string(v) + " is invalid");
    std::vector<int> depth(n, 0);
    for (int v = 0; v < n; ++v) {
        // walk up to a vertex of known depth; a chain longer than n means a cycle
        std::vector<int> chain;
        int u = v;
        while (u >= 0 && depth[u] == 0) {
            if (static_cast<int>(chain.size()) >= n)
                throw ValidationError("elimination forest parent pointers contain a cycle");
            chain.push_back(u);
            u = f.parent[u];
        }
        int d = u < 0 ? 0 : depth[u];
        for (auto it = chain.rbegin(); it != chain.rend(); ++it)
            depth[*it] = ++d;
    }
    return depth;
}

auto validate_elimination_forest(const Graph & g, const EliminationForest & f) -> std::optional<std::string>
{
    if (static_cast<int>(f.parent.size()) != g.order())
        return "forest has " + std::to_string(f.parent.size()) + " vertices, graph has " + std::to_string(g.order());
    std::vector<int> depth;
    try {
        depth = forest_depths(f);
    }
    catch (const ValidationError & e) {
        return e.what();
    }
    int height = depth.empty() ? 0 : *std::max_element(depth.begin(), depth.end());
    if (height != f.height)
        return "forest height is " + std::to_string(height) + ", claimed " + std::to_string(f.height);
    for (auto [u, v] : g.edges()) {
        // the deeper endpoint must have the other as an ancestor
        int lo = depth[u] > depth[v] ? u : v, hi = lo == u ? v : u;
        int a = f.parent[lo];
        while (a >= 0 && a != hi)
            a = f.parent[a];
        if (a != hi)
            return "edge (" + std::to_string(u) + "," + std::to_string(v) + ") does not join an ancestor and a descendant";
    }
    return std::nullopt;
}

auto tree_depth(const Graph & g, const InvariantCaps & caps) -> InvariantResult
{
    int cap = std::min(caps.tree_depth, tree_depth_hard_cap);
    auto comps = g.components();
    for (const auto & comp : comps)
        if (static_cast<int>(comp.size()) > cap)
            throw CapExceeded("tree-depth", static_cast<long long>(comp.size()), cap);

    EliminationForest forest{std::vector<Vertex>(g.order(), -1), 0};
    for (const auto & comp : comps) {
        DepthSolver solver(component_graph(g, comp));
        std::vector<Vertex> local(comp.size(), -1);
        solver.build(full_mask(static_cast<int>(comp.size())), -1, local);
        for (std::size_t i = 0; i < comp.size(); ++i)
            forest.parent[comp[i]] = local[i] < 0 ? -1 : comp[local[i]];
    }
    auto depth = forest_depths(forest);
    forest.height = depth.empty() ? 0 : *std::max_element(depth.begin(), depth.end());
    InvariantResult r;
    r.value = forest.height;
    r.certificate = std::move(forest);
    return r;
}

auto tree_depth_at_most(const Graph & g, int k) -> bool
{
    if (k < 0)
        return false;
    for (const auto & comp : g.components()) {
        int n = static_cast<int>(comp.size());
        if (n <= k)
            continue;
        if (n > tree_depth_decision_cap)
            throw CapExceeded("tree-depth decision", n, tree_depth_decision_cap);
        DepthSolver solver(component_graph(g, comp));
        if (solver.solve(full_mask(n), k) > k)
            return false;
    }
    return true;
}

auto elimination_forest_within(const Graph & g, int k) -> std::optional<EliminationForest>
{
    if (! tree_depth_at_most(g, k))
        return std::nullopt;
    EliminationForest forest{std::vector<Vertex>(g.order(), -1), 0};
    for (const auto & comp : g.components()) {
        int n = static_cast<int>(comp.size());
        DepthSolver solver(component_graph(g, comp));
        std::vector<Vertex> local(n, -1);
        solver.build_within(full_mask(n), k, -1, local);
        for (int i = 0; i < n; ++i)
            forest.parent[comp[i]] = local[i] < 0 ? -1 : comp[local[i]];
    }
    auto depth = forest_depths(forest);
    forest.height = depth.empty() ? 0 : *std::max_element(depth.begin(), depth.end());
    return forest;
}

}
