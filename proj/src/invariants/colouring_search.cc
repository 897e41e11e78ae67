#include "colouring_search.hh"

#include "bits.hh"

#include <chipkit/errors.hh>

#include <algorithm>
#include <unordered_map>

namespace chipkit::detail {

namespace {

// Decides td(S) <= k for vertex subsets of the searched graph, caching per subset
// the largest k refuted and the smallest k confirmed.
class DepthBound {
public:
    explicit DepthBound(const std::vector<Mask> & adj) :
        _adj(adj)
    {
    }

    auto at_most(Mask s, int k) -> bool
    {
        while (s) {
            Mask c = component_of_lowest(_adj, s);
            s &= ~c;
            if (! connected_at_most(c, k))
                return false;
        }
        return true;
    }

private:
    struct Known {
        int refuted = 0;
        int confirmed = 1 << 20;
    };

    auto connected_at_most(Mask c, int k) -> bool
    {
        int n = popcount(c);
        if (n <= k)
            return true;
        if (k <= 1)
            return false;
        int m = edges_within(_adj, c);
        if (k == 2) {
            if (m != n - 1)
                return false;
            bool centre = false;
            for_each_bit(c, [&](int v) { centre = centre || popcount(_adj[v] & c) == n - 1; });
            return centre;
        }
        if (static_cast<long long>(m) > static_cast<long long>(k - 1) * n)
            return false;
        auto & known = _memo[c];
        if (k <= known.refuted)
            return false;
        if (k >= known.confirmed)
            return true;
        Mask rest = c;
        while (rest) {
            int v = lowest(rest);
            rest &= rest - 1;
            if (at_most(c & ~bit(v), k - 1)) {
                auto & again = _memo[c];
                again.confirmed = std::min(again.confirmed, k);
                return true;
            }
        }
        auto & again = _memo[c];
        again.refuted = std::max(again.refuted, k);
        return false;
    }

    const std::vector<Mask> & _adj;
    std::unordered_map<Mask, Known> _memo;
};

class Search {
public:
    Search(const Graph & g, int p, int k, long long budget) :
        _n(g.order()),
        _p(p),
        _k(k),
        _budget(budget),
        _adj(g.adjacency_masks()),
        _colour(_n, -1),
        _cnt(static_cast<std::size_t>(_n) * std::max(k, 1), 0),
        _seen(_n, 0),
        _cls(std::max(k, 1), 0),
        _depth(_adj)
    {
        for (int v = 0; v < _n; ++v)
            _deg.push_back(g.degree(v));
    }

    auto run() -> std::optional<std::vector<int>>
    {
        if (_n == 0)
            return std::vector<int>{};
        if (_k <= 0)
            return std::nullopt;
        if (dfs(0, -1))
            return _colour;
        return std::nullopt;
    }

private:
    auto cnt(int v, int x) -> std::uint8_t & { return _cnt[static_cast<std::size_t>(v) * _k + x]; }

    auto select() const -> int
    {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < _n; ++v) {
            if (_colour[v] >= 0)
                continue;
            int sat = popcount(_seen[v]);
            if (sat > best_sat || (sat == best_sat && _deg[v] > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = _deg[v];
            }
        }
        return best;
    }

    void assign(int v, int x)
    {
        _colour[v] = x;
        _cls[x] |= bit(v);
        for_each_bit(_adj[v], [&](int u) {
            if (cnt(u, x)++ == 0)
                _seen[u] |= bit(x);
        });
    }

    void unassign(int v, int x)
    {
        _colour[v] = -1;
        _cls[x] &= ~bit(v);
        for_each_bit(_adj[v], [&](int u) {
            if (--cnt(u, x) == 0)
                _seen[u] &= ~bit(x);
        });
    }

    // A 2-coloured path a-b-c-d exists iff some edge bc has cnt(b, col c) >= 2 and cnt(c, col b) >= 2.
    // Only edges at v or between a neighbour of v and a vertex coloured x can have changed.
    auto star_ok(int v, int x) -> bool
    {
        Mask coloured_nbrs = 0;
        for (int y = 0; y < _k; ++y)
            coloured_nbrs |= _adj[v] & _cls[y];
        bool ok = true;
        for_each_bit(coloured_nbrs, [&](int u) {
            if (! ok)
                return;
            int cu = _colour[u];
            if (cnt(v, cu) >= 2 && cnt(u, x) >= 2)
                ok = false;
            else if (cnt(u, x) >= 2)
                for_each_bit(_adj[u] & _cls[x] & ~bit(v), [&](int w) {
                    if (cnt(w, cu) >= 2)
                        ok = false;
                });
        });
        return ok;
    }

    // Unions of 3..p classes containing x, restricted to the component of v.
    auto depth_ok(int v, int x, int maxused) -> bool
    {
        std::vector<int> others;
        for (int y = 0; y <= maxused; ++y)
            if (y != x && _cls[y])
                others.push_back(y);
        int limit = std::min<int>(_p, static_cast<int>(others.size()) + 1);
        bool ok = true;
        std::vector<int> chosen;
        auto extend = [&](auto & self, std::size_t next, Mask union_mask) -> void {
            if (! ok)
                return;
            int size = static_cast<int>(chosen.size()) + 1;
            if (size >= 3) {
                Mask comp = component_from(_adj, union_mask, bit(v));
                if (popcount(comp) > size && ! _depth.at_most(comp, size)) {
                    ok = false;
                    return;
                }
            }
            if (size == limit)
                return;
            for (std::size_t i = next; i < others.size() && ok; ++i) {
                chosen.push_back(others[i]);
                self(self, i + 1, union_mask | _cls[others[i]]);
                chosen.pop_back();
            }
        };
        extend(extend, 0, _cls[x]);
        return ok;
    }

    auto dfs(int coloured, int maxused) -> bool
    {
        if (coloured == _n)
            return true;
        if (_budget > 0 && ++_nodes > _budget)
            throw BudgetExhausted("colouring search exceeded " + std::to_string(_budget) + " nodes");
        int v = select();
        int top = std::min(maxused + 1, _k - 1);
        for (int x = 0; x <= top; ++x) {
            if (_seen[v] & bit(x))
                continue;
            assign(v, x);
            int used = std::max(maxused, x);
            bool ok = (_p < 2 || star_ok(v, x)) && (_p < 3 || depth_ok(v, x, used));
            if (ok && dfs(coloured + 1, used))
                return true;
            unassign(v, x);
        }
        return false;
    }

    int _n, _p, _k;
    long long _budget, _nodes = 0;
    std::vector<Mask> _adj;
    std::vector<int> _colour, _deg;
    std::vector<std::uint8_t> _cnt;
    std::vector<Mask> _seen, _cls;
    DepthBound _depth;
};

}

auto find_low_td_colouring(const Graph & g, int p, int k, long long node_budget) -> std::optional<std::vector<int>>
{
    if (g.order() > 64)
        throw CapExceeded("colouring search", g.order(), 64);
    if (k > 64)
        k = 64;
    return Search(g, p, k, node_budget).run();
}

}
