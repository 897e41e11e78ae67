#include <chipkit/generators.hh>
#include <chipkit/minors.hh>

#include "routing.hh"

#include <algorithm>

namespace chipkit {

using detail::bit;
using detail::Mask;
using detail::popcount;

namespace {

class CliqueRouter {
public:
    CliqueRouter(const Graph & g, int k, int r) :
        _adj(g.adjacency_masks()),
        _n(g.order()),
        _k(k),
        _r(r)
    {
    }

    auto run() -> std::optional<TopoMinorEmbedding>
    {
        std::vector<int> candidates;
        for (int v = 0; v < _n; ++v)
            if (popcount(_adj[v]) >= _k - 1)
                candidates.push_back(v);
        if (static_cast<int>(candidates.size()) < _k)
            return std::nullopt;
        if (choose(candidates, 0, 0))
            return embedding();
        return std::nullopt;
    }

private:
    // Branch sets in lexicographic order. Each non-adjacent pair needs an internal vertex of its own.
    auto choose(const std::vector<int> & candidates, std::size_t next, int missing) -> bool
    {
        if (static_cast<int>(_branch.size()) == _k)
            return route_all();
        int slots = _k - static_cast<int>(_branch.size());
        for (std::size_t i = next; i + slots <= candidates.size(); ++i) {
            int v = candidates[i];
            int extra = 0;
            for (int b : _branch)
                extra += ! (_adj[v] & bit(b));
            int total = missing + extra;
            if (_r == 0 ? total > 0 : total > _n - _k)
                continue;
            _branch.push_back(v);
            bool done = choose(candidates, i + 1, total);
            if (done)
                return true;
            _branch.pop_back();
        }
        return false;
    }

    auto route_all() -> bool
    {
        _branch_mask = detail::mask_of(_branch);
        _pairs.clear();
        for (int i = 0; i < _k; ++i)
            for (int j = i + 1; j < _k; ++j)
                if (! (_adj[_branch[i]] & bit(_branch[j])))
                    _pairs.emplace_back(i, j);
        _used = 0;
        _routes.assign(_pairs.size(), {});
        return route(0);
    }

    auto feasible(std::size_t from) const -> bool
    {
        Mask blocked = _branch_mask | _used;
        int free = _n - popcount(blocked);
        if (static_cast<int>(_pairs.size() - from) > free)
            return false;
        std::vector<int> need(_k, 0);
        for (std::size_t j = from; j < _pairs.size(); ++j) {
            auto [a, b] = _pairs[j];
            ++need[a];
            ++need[b];
            if (! detail::routable(_adj, _branch[a], _branch[b], _r, blocked))
                return false;
        }
        // every path leaves a branch vertex through its own free neighbour
        for (int i = 0; i < _k; ++i)
            if (need[i] > popcount(_adj[_branch[i]] & ~blocked))
                return false;
        return true;
    }

    auto route(std::size_t i) -> bool
    {
        if (i == _pairs.size())
            return true;
        if (! feasible(i))
            return false;
        auto [a, b] = _pairs[i];
        for (int len = 1; len <= _r; ++len) {
            bool done = detail::for_each_path(_adj, _branch[a], _branch[b], len, _branch_mask | _used, [&](const std::vector<int> & internal) {
                Mask m = detail::mask_of(internal);
                _used |= m;
                _routes[i] = internal;
                if (route(i + 1))
                    return true;
                _used &= ~m;
                return false;
            });
            if (done)
                return true;
        }
        return false;
    }

    auto embedding() const -> TopoMinorEmbedding
    {
        TopoMinorEmbedding e;
        e.pattern = complete_graph(_k);
        e.branch = _branch;
        for (auto [u, v] : e.pattern.edges()) {
            std::vector<Vertex> path{_branch[u]};
            auto it = std::find(_pairs.begin(), _pairs.end(), std::pair<int, int>{u, v});
            if (it != _pairs.end()) {
                const auto & internal = _routes[it - _pairs.begin()];
                path.insert(path.end(), internal.begin(), internal.end());
            }
            path.push_back(_branch[v]);
            e.paths.push_back(std::move(path));
        }
        return e;
    }

    std::vector<Mask> _adj;
    int _n, _k, _r;
    std::vector<int> _branch;
    Mask _branch_mask = 0, _used = 0;
    std::vector<std::pair<int, int>> _pairs;
    std::vector<std::vector<int>> _routes;
};

}

auto find_subdivided_clique(const Graph & g, int k, int r, const MinorCaps & caps) -> std::optional<TopoMinorEmbedding>
{
    if (k < 1 || r < 0)
        throw ParameterError("find_subdivided_clique needs k >= 1 and r >= 0");
    detail::check_minor_caps(g, k, caps, "subdivided clique search");
    if (k > g.order())
        return std::nullopt;
    return CliqueRouter(g, k, r).run();
}

auto omega_TM(const Graph & g, int r, const MinorCaps & caps) -> OmegaTM
{
    OmegaTM out;
    for (int k = 1; k <= g.order(); ++k) {
        auto e = find_subdivided_clique(g, k, r, caps);
        if (! e)
            break;
        out.value = k;
        out.witness = std::move(e);
    }
    return out;
}

}
