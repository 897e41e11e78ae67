#include <chipkit/errors.hh>
#include <chipkit/generators.hh>
#include <chipkit/holes.hh>
#include <chipkit/operations.hh>

#include "../invariants/bits.hh"

#include <algorithm>
#include <functional>

namespace chipkit {

using detail::bit;
using detail::Mask;

namespace {

using Visit = std::function<bool(const std::vector<Vertex> &)>;

// Chordless paths grown from the least vertex a of each hole; a cycle is emitted once, when its
// last vertex exceeds the second. Returns true if `visit` asked to stop.
class HoleSearch {
public:
    HoleSearch(const Graph & g, int max_len, const HoleCaps & caps, Visit visit) :
        _adj(g.adjacency_masks()),
        _n(g.order()),
        _max_len(max_len),
        _limit(caps.max_holes),
        _visit(std::move(visit))
    {
    }

    auto run() -> bool
    {
        for (int a = 0; a < _n; ++a) {
            _above = a + 1 >= 64 ? 0 : ~(bit(a + 1) - 1);
            if (_n < 64)
                _above &= bit(_n) - 1;
            _path = {a};
            bool stop = false;
            detail::for_each_bit(_adj[a] & _above, [&](int v1) {
                if (stop)
                    return;
                _path.push_back(v1);
                stop = extend(bit(a) | bit(v1), 0);
                _path.pop_back();
            });
            if (stop)
                return true;
        }
        return false;
    }

private:
    // `inner` is the union of the neighbourhoods of the path vertices strictly between a and the last one.
    auto extend(Mask path_mask, Mask inner) -> bool
    {
        int a = _path.front(), v1 = _path[1], last = _path.back();
        int len = static_cast<int>(_path.size());
        Mask candidates = _adj[last] & _above & ~path_mask & ~inner;
        bool stop = false;
        detail::for_each_bit(candidates, [&](int w) {
            if (stop)
                return;
            if (_adj[a] & bit(w)) {
                if (len >= 3 && w > v1) {
                    _path.push_back(w);
                    if (++_emitted > _limit)
                        throw CapExceeded("hole enumeration", _emitted, _limit);
                    stop = _visit(_path);
                    _path.pop_back();
                }
                return;
            }
            if (len + 1 >= _max_len)
                return;
            _path.push_back(w);
            stop = extend(path_mask | bit(w), inner | _adj[last]);
            _path.pop_back();
        });
        return stop;
    }

    std::vector<Mask> _adj;
    int _n, _max_len;
    long long _limit, _emitted = 0;
    Visit _visit;
    Mask _above = 0;
    std::vector<Vertex> _path;
};

auto search(const Graph & g, int max_len, const HoleCaps & caps, Visit visit) -> bool
{
    int cap = std::min(caps.order, 64);
    if (g.order() > cap)
        throw CapExceeded("hole enumeration", g.order(), cap);
    if (max_len < 4)
        return false;
    return HoleSearch(g, max_len, caps, std::move(visit)).run();
}

}

auto validate_hole(const Graph & g, const Hole & h) -> std::optional<std::string>
{
    const auto & c = h.cycle;
    int len = h.length();
    if (len < 4)
        return "a hole needs at least 4 vertices";
    for (Vertex v : c)
        if (v < 0 || v >= g.order())
            return "vertex " + std::to_string(v) + " is not in the graph";
    auto sorted = c;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return "repeated vertex";
    for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j) {
            bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
            if (g.adjacent(c[i], c[j]) != consecutive)
                return consecutive ? "cycle edge (" + std::to_string(c[i]) + "," + std::to_string(c[j]) + ") is missing"
                                   : "chord (" + std::to_string(c[i]) + "," + std::to_string(c[j]) + ")";
        }
    if (c.front() != sorted.front() || c[1] > c.back())
        return "cycle is not in canonical rotation";
    return std::nullopt;
}

auto enumerate_holes(const Graph & g, int max_len, const HoleCaps & caps) -> std::vector<Hole>
{
    std::vector<Hole> out;
    search(g, max_len, caps, [&](const std::vector<Vertex> & c) {
        out.push_back({c});
        return false;
    });
    std::sort(out.begin(), out.end());
    return out;
}

auto is_even_hole_free(const Graph & g, const HoleCaps & caps) -> EvenHoleCheck
{
    EvenHoleCheck out;
    search(g, g.order(), caps, [&](const std::vector<Vertex> & c) {
        if (c.size() % 2)
            return false;
        out.even_hole_free = false;
        out.witness = Hole{c};
        return true;
    });
    return out;
}

auto count_holes(const Graph & g, int glen, const HoleCaps & caps) -> long long
{
    long long count = 0;
    search(g, glen, caps, [&](const std::vector<Vertex> & c) {
        count += static_cast<int>(c.size()) == glen;
        return false;
    });
    return count;
}

auto verify_hole_density(int g_odd, int omega_even, int copies, const HoleCaps & caps) -> HoleDensityReport
{
    if (g_odd <= 3 || g_odd % 2 == 0)
        throw ParameterError("hole length must be odd and greater than 3");
    if (omega_even < 2 || omega_even % 2)
        throw ParameterError("clique number must be even and at least 2");
    if (copies < 1)
        throw ParameterError("need at least one copy");
    int k = omega_even / 2;
    auto block = blow_up(cycle_graph(g_odd), k);
    Graph g = block;
    for (int i = 1; i < copies; ++i)
        g = disjoint_union(g, block);

    HoleDensityReport out;
    out.g = g_odd;
    out.omega = omega_even;
    out.copies = copies;
    out.order = g.order();
    out.holes = count_holes(g, g_odd, caps);
    long long power = 1;
    for (int i = 0; i < g_odd - 1; ++i)
        power *= k;
    out.expected = Rational(power * out.order, g_odd);
    out.measured_omega = clique_number(g).value;
    out.equal = out.expected == Rational(out.holes) && out.measured_omega == omega_even;
    return out;
}

}
