#include <chipkit/canonical.hh>
#include <chipkit/codec.hh>
#include <chipkit/minors.hh>
#include <chipkit/operations.hh>

#include "routing.hh"

#include <algorithm>
#include <map>
#include <set>

namespace chipkit {

using detail::bit;
using detail::Mask;
using detail::popcount;

namespace {

// Placement order: most already-placed neighbours first, then higher degree, then lower index.
auto placement_order(const Graph & s) -> std::vector<Vertex>
{
    int n = s.order();
    std::vector<int> placed_nbrs(n, 0);
    std::vector<char> placed(n, 0);
    std::vector<Vertex> order;
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (placed[v])
                continue;
            if (best < 0 || placed_nbrs[v] > placed_nbrs[best] || (placed_nbrs[v] == placed_nbrs[best] && s.degree(v) > s.degree(best)))
                best = v;
        }
        placed[best] = 1;
        order.push_back(best);
        for (Vertex w : s.neighbours(best))
            ++placed_nbrs[w];
    }
    return order;
}

// Induced subgraph isomorphism from s into the host, by backtracking.
auto induced_copy(const Graph & s, const std::vector<Mask> & host) -> std::optional<std::vector<Vertex>>
{
    int n = s.order(), m = static_cast<int>(host.size());
    auto order = placement_order(s);
    std::vector<Vertex> image(n, -1);
    Mask used = 0;
    Mask all = m == 64 ? ~Mask{0} : bit(m) - 1;
    auto place = [&](auto & self, int i) -> bool {
        if (i == n)
            return true;
        Vertex v = order[i];
        Mask required = 0;
        Mask candidates = all & ~used;
        for (Vertex w : s.neighbours(v))
            if (image[w] >= 0) {
                required |= bit(image[w]);
                candidates &= host[image[w]];
            }
        bool found = false;
        detail::for_each_bit(candidates, [&](int c) {
            if (found || popcount(host[c]) < s.degree(v) || (host[c] & used) != required)
                return;
            image[v] = c;
            used |= bit(c);
            found = self(self, i + 1);
            if (! found) {
                used &= ~bit(c);
                image[v] = -1;
            }
        });
        return found;
    };
    if (! place(place, 0))
        return std::nullopt;
    return image;
}

class ItmEnumerator {
public:
    ItmEnumerator(const Graph & g, int r, int max_size) :
        _adj(g.adjacency_masks()),
        _n(g.order()),
        _r(r),
        _max(max_size)
    {
    }

    auto run() -> std::map<std::string, Graph>
    {
        choose(0);
        return std::move(_found);
    }

private:
    void choose(int next)
    {
        if (! _branch.empty())
            realise();
        if (static_cast<int>(_branch.size()) == _max)
            return;
        for (int v = next; v < _n; ++v) {
            // exact subdivisions with r >= 1 keep branch vertices pairwise non-adjacent
            if (_r >= 1 && (_adj[v] & _branch_mask))
                continue;
            _branch.push_back(v);
            _branch_mask |= bit(v);
            choose(v + 1);
            _branch_mask &= ~bit(v);
            _branch.pop_back();
        }
    }

    void realise()
    {
        int k = static_cast<int>(_branch.size());
        _pairs.clear();
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                _pairs.emplace_back(i, j);
        if (_r == 0) {
            Mask edges = 0;
            for (std::size_t p = 0; p < _pairs.size(); ++p)
                if (_adj[_branch[_pairs[p].first]] & bit(_branch[_pairs[p].second]))
                    edges |= bit(static_cast<int>(p));
            record(edges);
            return;
        }
        _seen.clear();
        route(0, _branch_mask, 0);
    }

    void route(std::size_t i, Mask structure, Mask edges)
    {
        if (i == _pairs.size()) {
            if (_seen.insert(edges).second)
                record(edges);
            return;
        }
        route(i + 1, structure, edges);
        int a = _branch[_pairs[i].first], b = _branch[_pairs[i].second];
        Mask near = 0;
        detail::for_each_bit(structure & ~bit(a) & ~bit(b), [&](int v) { near |= _adj[v]; });
        Mask blocked = structure | near;
        detail::for_each_path(_adj, a, b, _r, blocked, [&](const std::vector<int> & internal) {
            if (induced_path(a, internal, b))
                route(i + 1, structure | detail::mask_of(internal), edges | bit(static_cast<int>(i)));
            return false;
        });
    }

    auto induced_path(int a, const std::vector<int> & internal, int b) const -> bool
    {
        std::vector<int> path{a};
        path.insert(path.end(), internal.begin(), internal.end());
        path.push_back(b);
        for (std::size_t x = 0; x < path.size(); ++x)
            for (std::size_t y = x + 2; y < path.size(); ++y)
                if (_adj[path[x]] & bit(path[y]))
                    return false;
        return true;
    }

    void record(Mask edges)
    {
        int k = static_cast<int>(_branch.size());
        std::vector<Edge> list;
        for (std::size_t p = 0; p < _pairs.size(); ++p)
            if (edges & bit(static_cast<int>(p)))
                list.emplace_back(_pairs[p].first, _pairs[p].second);
        auto h = canonical_form(Graph(k, list));
        _found.emplace(to_graph6(h), std::move(h));
    }

    std::vector<Mask> _adj;
    int _n, _r, _max;
    std::vector<int> _branch;
    Mask _branch_mask = 0;
    std::vector<std::pair<int, int>> _pairs;
    std::set<Mask> _seen;
    std::map<std::string, Graph> _found;
};

}

auto is_induced_exact_subdivision(const Graph & h, int r, const Graph & g, const MinorCaps & caps) -> std::optional<TopoMinorEmbedding>
{
    if (r < 0)
        throw ParameterError("subdivision depth must be non-negative");
    detail::check_minor_caps(g, h.order(), caps, "induced subdivision search");
    auto sd = subdivide_exact(h, r);
    if (sd.graph.order() > g.order())
        return std::nullopt;
    auto image = induced_copy(sd.graph, g.adjacency_masks());
    if (! image)
        return std::nullopt;
    TopoMinorEmbedding e;
    e.pattern = h;
    e.branch.assign(image->begin(), image->begin() + h.order());
    for (std::size_t i = 0; i < h.edges().size(); ++i) {
        auto [u, v] = h.edges()[i];
        std::vector<Vertex> path{(*image)[u]};
        for (Vertex x : sd.paths[i])
            path.push_back((*image)[x]);
        path.push_back((*image)[v]);
        e.paths.push_back(std::move(path));
    }
    return e;
}

auto enumerate_ITM_exact(const Graph & g, int r, int max_pattern_size, const MinorCaps & caps) -> ItmPatterns
{
    if (r < 0 || max_pattern_size < 0)
        throw ParameterError("enumerate_ITM_exact needs r >= 0 and a non-negative pattern size");
    detail::check_minor_caps(g, max_pattern_size, caps, "ITM enumeration");
    ItmPatterns out;
    for (auto & [code, h] : ItmEnumerator(g, r, max_pattern_size).run()) {
        out.max_average_degree = std::max(out.max_average_degree, average_degree(h));
        out.max_clique = std::max(out.max_clique, clique_number(h).value);
        out.max_chromatic = std::max(out.max_chromatic, chromatic_number(h).value);
        out.patterns.push_back(std::move(h));
    }
    return out;
}

}
