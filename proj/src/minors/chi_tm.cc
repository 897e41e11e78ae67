#include <chipkit/minors.hh>

#include "routing.hh"

#include <algorithm>
#include <map>

namespace chipkit {

using detail::bit;
using detail::Mask;
using detail::popcount;

namespace {

// Whether the graph on indices 0..k-1 (neighbour masks) admits a proper c-colouring.
auto colourable(const std::vector<Mask> & a, int c) -> bool
{
    int k = static_cast<int>(a.size());
    if (k == 0)
        return true;
    if (c <= 0)
        return false;
    std::vector<int> order(k);
    for (int i = 0; i < k; ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return popcount(a[x]) > popcount(a[y]); });
    std::vector<Mask> cls(c, 0);
    auto go = [&](auto & self, int i, int used) -> bool {
        if (i == k)
            return true;
        int v = order[i];
        for (int x = 0; x < std::min(used + 1, c); ++x) {
            if (cls[x] & a[v])
                continue;
            cls[x] |= bit(v);
            if (self(self, i + 1, std::max(used, x + 1)))
                return true;
            cls[x] &= ~bit(v);
        }
        return false;
    };
    return go(go, 0, 0);
}

auto min_degree(const std::vector<Mask> & a) -> int
{
    int best = 1 << 20;
    for (Mask m : a)
        best = std::min(best, popcount(m));
    return best;
}

class ChiSearch {
public:
    ChiSearch(const Graph & g, int r, int max_size) :
        _adj(g.adjacency_masks()),
        _n(g.order()),
        _r(r),
        _max(max_size)
    {
    }

    auto run() -> ChiTM
    {
        ChiTM out;
        out.cap_active = _max < _n;
        if (_n == 0 || _max == 0)
            return out;
        out.value = 1;
        out.witness = {Graph(1), {0}, {}};
        for (int target = 2; target <= _max; ++target) {
            if (! search(target))
                break;
            out.value = target;
            out.witness = _witness;
        }
        return out;
    }

private:
    struct Pair {
        int i, j;
    };

    // A target-chromatic pattern contains a target-critical one, whose vertices all have degree >= target-1.
    auto search(int target) -> bool
    {
        std::vector<int> candidates;
        for (int v = 0; v < _n; ++v)
            if (popcount(_adj[v]) >= target - 1)
                candidates.push_back(v);
        int top = std::min<int>(_max, static_cast<int>(candidates.size()));
        for (int size = target; size <= top; ++size) {
            _branch.clear();
            if (choose(candidates, 0, size, target))
                return true;
        }
        return false;
    }

    auto choose(const std::vector<int> & candidates, std::size_t next, int size, int target) -> bool
    {
        if (static_cast<int>(_branch.size()) == size)
            return try_branch(target);
        for (std::size_t i = next; i + (size - _branch.size()) <= candidates.size(); ++i) {
            _branch.push_back(candidates[i]);
            if (choose(candidates, i + 1, size, target))
                return true;
            _branch.pop_back();
        }
        return false;
    }

    auto try_branch(int target) -> bool
    {
        int k = static_cast<int>(_branch.size());
        _branch_mask = detail::mask_of(_branch);
        _fixed.assign(k, 0);
        _optional.clear();
        std::vector<Mask> optimistic(k, 0);
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                int a = _branch[i], b = _branch[j];
                if (_adj[a] & bit(b)) {
                    _fixed[i] |= bit(j);
                    _fixed[j] |= bit(i);
                }
                else if (_r > 0 && detail::routable(_adj, a, b, _r, _branch_mask)) {
                    _optional.push_back({i, j});
                }
                else {
                    continue;
                }
                optimistic[i] |= bit(j);
                optimistic[j] |= bit(i);
            }
        if (min_degree(optimistic) < target - 1 || colourable(optimistic, target - 1))
            return false;
        _realised = _fixed;
        _routes.assign(_optional.size(), {});
        _taken.assign(_optional.size(), 0);
        _used = 0;
        return extend(0, target);
    }

    auto extend(std::size_t i, int target) -> bool
    {
        if (i == _optional.size()) {
            if (colourable(_realised, target - 1))
                return false;
            record();
            return true;
        }
        // optimistic completion: every later pair that can still be routed around what is used
        std::vector<Mask> potential = _realised;
        for (std::size_t j = i; j < _optional.size(); ++j) {
            auto [x, y] = _optional[j];
            if (detail::routable(_adj, _branch[x], _branch[y], _r, _branch_mask | _used)) {
                potential[x] |= bit(y);
                potential[y] |= bit(x);
            }
        }
        if (min_degree(potential) < target - 1 || colourable(potential, target - 1))
            return false;

        auto [x, y] = _optional[i];
        for (int len = 1; len <= _r; ++len) {
            bool done = detail::for_each_path(_adj, _branch[x], _branch[y], len, _branch_mask | _used, [&](const std::vector<int> & internal) {
                Mask m = detail::mask_of(internal);
                _used |= m;
                _realised[x] |= bit(y);
                _realised[y] |= bit(x);
                _routes[i] = internal;
                _taken[i] = 1;
                if (extend(i + 1, target))
                    return true;
                _taken[i] = 0;
                _realised[x] &= ~bit(y);
                _realised[y] &= ~bit(x);
                _used &= ~m;
                return false;
            });
            if (done)
                return true;
        }
        return extend(i + 1, target);
    }

    void record()
    {
        int k = static_cast<int>(_branch.size());
        std::map<std::pair<int, int>, std::vector<Vertex>> path_of;
        std::vector<Edge> edges;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (_fixed[i] & bit(j)) {
                    edges.emplace_back(i, j);
                    path_of[{i, j}] = {_branch[i], _branch[j]};
                }
        for (std::size_t p = 0; p < _optional.size(); ++p) {
            if (! _taken[p])
                continue;
            auto [i, j] = _optional[p];
            edges.emplace_back(i, j);
            std::vector<Vertex> path{_branch[i]};
            path.insert(path.end(), _routes[p].begin(), _routes[p].end());
            path.push_back(_branch[j]);
            path_of[{i, j}] = std::move(path);
        }
        _witness.pattern = Graph(k, edges);
        _witness.branch = _branch;
        _witness.paths.clear();
        for (auto [u, v] : _witness.pattern.edges())
            _witness.paths.push_back(path_of[{u, v}]);
    }

    std::vector<Mask> _adj;
    int _n, _r, _max;
    std::vector<int> _branch;
    Mask _branch_mask = 0, _used = 0;
    std::vector<Mask> _fixed, _realised;
    std::vector<Pair> _optional;
    std::vector<std::vector<int>> _routes;
    std::vector<char> _taken;
    TopoMinorEmbedding _witness;
};

}

auto chi_TM(const Graph & g, int r, int max_pattern_size, const MinorCaps & caps) -> ChiTM
{
    if (r < 0 || max_pattern_size < 0)
        throw ParameterError("chi_TM needs r >= 0 and a non-negative pattern size");
    detail::check_minor_caps(g, std::min(max_pattern_size, g.order()), caps, "chi_TM");
    return ChiSearch(g, r, std::min(max_pattern_size, g.order())).run();
}

}
