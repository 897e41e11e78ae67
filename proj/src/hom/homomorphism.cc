#include <chipkit/errors.hh>
#include <chipkit/hom.hh>

#include "../invariants/bits.hh"

#include <algorithm>

namespace chipkit {

using detail::bit;
using detail::Mask;

namespace {

class HomSearch {
public:
    HomSearch(const Digraph & from, const Digraph & to, long long budget) :
        _from(from),
        _out(to.out_masks()),
        _in(to.in_masks()),
        _budget(budget)
    {
        int n = from.order();
        _order.resize(n);
        for (int v = 0; v < n; ++v)
            _order[v] = v;
        auto degree = [&](int v) { return from.out_neighbours(v).size() + from.in_neighbours(v).size(); };
        std::stable_sort(_order.begin(), _order.end(), [&](int a, int b) { return degree(a) > degree(b); });
    }

    auto run() -> std::optional<HomMapping>
    {
        int n = _from.order(), m = static_cast<int>(_out.size());
        if (n == 0)
            return HomMapping{};
        if (m == 0)
            return std::nullopt;
        Mask all = m == 64 ? ~Mask{0} : bit(m) - 1, has_out = 0, has_in = 0;
        for (int x = 0; x < m; ++x) {
            if (_out[x])
                has_out |= bit(x);
            if (_in[x])
                has_in |= bit(x);
        }
        std::vector<Mask> domain(n, all);
        for (int v = 0; v < n; ++v) {
            if (! _from.out_neighbours(v).empty())
                domain[v] &= has_out;
            if (! _from.in_neighbours(v).empty())
                domain[v] &= has_in;
        }
        _image.assign(n, -1);
        if (! place(0, domain))
            return std::nullopt;
        return _image;
    }

private:
    auto place(int i, const std::vector<Mask> & domain) -> bool
    {
        if (i == _from.order())
            return true;
        if (_budget > 0 && ++_nodes > _budget)
            throw BudgetExhausted("homomorphism search exceeded " + std::to_string(_budget) + " nodes");
        int v = _order[i];
        bool found = false;
        detail::for_each_bit(domain[v], [&](int x) {
            if (found)
                return;
            auto next = domain;
            next[v] = bit(x);
            for (Vertex w : _from.out_neighbours(v))
                if (_image[w] < 0 && ! (next[w] &= _out[x]))
                    return;
            for (Vertex w : _from.in_neighbours(v))
                if (_image[w] < 0 && ! (next[w] &= _in[x]))
                    return;
            _image[v] = x;
            found = place(i + 1, next);
            if (! found)
                _image[v] = -1;
        });
        return found;
    }

    const Digraph & _from;
    std::vector<Mask> _out, _in;
    long long _budget, _nodes = 0;
    std::vector<int> _order;
    HomMapping _image;
};

}

auto validate_homomorphism(const Digraph & from, const Digraph & to, const HomMapping & f) -> std::optional<std::string>
{
    if (static_cast<int>(f.size()) != from.order())
        return "mapping has " + std::to_string(f.size()) + " entries for " + std::to_string(from.order()) + " vertices";
    for (Vertex x : f)
        if (x < 0 || x >= to.order())
            return "image " + std::to_string(x) + " is not a target vertex";
    for (auto [u, v] : from.arcs())
        if (! to.has_arc(f[u], f[v]))
            return "arc (" + std::to_string(u) + "," + std::to_string(v) + ") maps to non-arc (" + std::to_string(f[u]) + "," + std::to_string(f[v]) + ")";
    return std::nullopt;
}

auto homomorphism(const Digraph & from, const Digraph & to, const HomCaps & caps) -> std::optional<HomMapping>
{
    if (from.order() > std::min(caps.source, 64))
        throw CapExceeded("homomorphism source", from.order(), std::min(caps.source, 64));
    if (to.order() > std::min(caps.target, 64))
        throw CapExceeded("homomorphism target", to.order(), std::min(caps.target, 64));
    return HomSearch(from, to, caps.node_budget).run();
}

auto transitive_tournament(int k) -> Digraph
{
    if (k < 0)
        throw ParameterError("tournament order must be non-negative");
    std::vector<Arc> arcs;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            arcs.emplace_back(i, j);
    return Digraph(k, arcs);
}

}
