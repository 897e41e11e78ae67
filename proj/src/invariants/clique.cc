#include <chipkit/errors.hh>
#include <chipkit/invariants.hh>

#include "bits.hh"

#include <algorithm>

namespace chipkit {

using detail::bit;
using detail::Mask;
using detail::popcount;

namespace {

void check_components(const Graph & g, int cap, const char * what)
{
    int limit = std::min(cap, 64);
    for (const auto & comp : g.components())
        if (static_cast<int>(comp.size()) > limit)
            throw CapExceeded(what, static_cast<long long>(comp.size()), limit);
}

// Branch and bound with a greedy colouring bound on the candidate set.
class MaxClique {
public:
    explicit MaxClique(std::vector<Mask> adj) :
        _adj(std::move(adj))
    {
    }

    auto run(Mask all) -> Mask
    {
        expand(0, all);
        return _best;
    }

private:
    void expand(Mask r, Mask candidates)
    {
        if (! candidates) {
            if (popcount(r) > popcount(_best))
                _best = r;
            return;
        }
        // colour classes in order; vertices later in the order carry higher bounds
        std::vector<int> order, bound;
        Mask rest = candidates;
        int colour = 0;
        while (rest) {
            ++colour;
            Mask free = rest;
            while (free) {
                int v = detail::lowest(free);
                free &= ~(bit(v) | _adj[v]);
                rest &= ~bit(v);
                order.push_back(v);
                bound.push_back(colour);
            }
        }
        int base = popcount(r);
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (base + bound[i] <= popcount(_best))
                return;
            int v = order[i];
            expand(r | bit(v), candidates & _adj[v]);
            candidates &= ~bit(v);
        }
    }

    std::vector<Mask> _adj;
    Mask _best = 0;
};

auto to_vertices(Mask m, const std::vector<Vertex> & labels) -> std::vector<Vertex>
{
    std::vector<Vertex> out;
    detail::for_each_bit(m, [&](int v) { out.push_back(labels[v]); });
    std::sort(out.begin(), out.end());
    return out;
}

// Largest r-set A (vertices in increasing order) whose common neighbourhood has at least r vertices.
auto find_biclique(const std::vector<Mask> & adj, int r, Mask & left, Mask & right) -> bool
{
    int n = static_cast<int>(adj.size());
    auto extend = [&](auto & self, Mask chosen, Mask common, int next) -> bool {
        if (popcount(chosen) == r) {
            left = chosen;
            right = common;
            return true;
        }
        for (int v = next; v < n; ++v) {
            Mask c = common & adj[v];
            if (popcount(c) < r)
                continue;
            if (self(self, chosen | bit(v), c, v + 1))
                return true;
        }
        return false;
    };
    Mask everything = n == 64 ? ~Mask{0} : bit(n) - 1;
    return extend(extend, 0, everything, 0);
}

}

auto clique_number(const Graph & g, const InvariantCaps & caps) -> InvariantResult
{
    check_components(g, caps.clique, "clique number");
    std::vector<Vertex> best;
    for (const auto & comp : g.components()) {
        if (comp.size() <= best.size())
            continue;
        auto sub = g.induced(comp);
        Mask all = comp.size() == 64 ? ~Mask{0} : bit(static_cast<int>(comp.size())) - 1;
        auto found = to_vertices(MaxClique(sub.adjacency_masks()).run(all), comp);
        if (found.size() > best.size())
            best = std::move(found);
    }
    InvariantResult r;
    r.value = static_cast<int>(best.size());
    r.certificate = best;
    return r;
}

auto biclique_number(const Graph & g, const InvariantCaps & caps) -> InvariantResult
{
    check_components(g, caps.clique, "biclique number");
    Biclique best;
    int value = 0;
    for (const auto & comp : g.components()) {
        auto adj = g.induced(comp).adjacency_masks();
        for (int r = value + 1; 2 * r <= static_cast<int>(comp.size()); ++r) {
            Mask left, right;
            if (! find_biclique(adj, r, left, right))
                break;
            // trim the common neighbourhood to r vertices
            Mask trimmed = 0;
            for (int i = 0; i < r; ++i) {
                trimmed |= right & (~right + 1);
                right &= right - 1;
            }
            value = r;
            best = {to_vertices(left, comp), to_vertices(trimmed, comp)};
        }
    }
    InvariantResult r;
    r.value = value;
    r.certificate = best;
    return r;
}

}
