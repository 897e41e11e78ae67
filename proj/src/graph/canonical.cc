#include <chipkit/canonical.hh>
#include <chipkit/errors.hh>

#include <algorithm>
#include <cstdint>
#include <map>

namespace chipkit {

namespace {

    auto refine(const Graph & g) -> std::vector<int>
    {
        int n = g.order();
        std::vector<int> colour(n);
        for (Vertex v = 0; v < n; ++v)
            colour[v] = g.degree(v);

        int classes = -1;
        while (true) {
            std::vector<std::pair<int, std::vector<int>>> signature(n);
            for (Vertex v = 0; v < n; ++v) {
                signature[v].first = colour[v];
                for (auto w : g.neighbours(v))
                    signature[v].second.push_back(colour[w]);
                std::sort(signature[v].second.begin(), signature[v].second.end());
            }
            auto sorted = signature;
            std::sort(sorted.begin(), sorted.end());
            sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
            for (Vertex v = 0; v < n; ++v)
                colour[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), signature[v]) - sorted.begin());
            if (static_cast<int>(sorted.size()) == classes)
                return colour;
            classes = static_cast<int>(sorted.size());
        }
    }

    struct Search {
        int n;
        std::vector<std::uint64_t> adj;
        std::vector<int> cell_of_position;
        std::vector<int> colour;
        std::vector<Vertex> current, best;
        std::uint64_t best_code = 0;
        bool have_best = false;

        // bit for pair (i, j), i < j, in graph6 column order
        static auto bit(int i, int j) -> std::uint64_t { return std::uint64_t{1} << (63 - (j * (j - 1) / 2 + i)); }

        auto run(int position, std::uint64_t code, bool ahead) -> void
        {
            if (position == n) {
                if (! have_best || code > best_code) {
                    best_code = code;
                    best = current;
                    have_best = true;
                }
                return;
            }
            for (Vertex v = 0; v < n; ++v) {
                if (colour[v] != cell_of_position[position] || std::find(current.begin(), current.end(), v) != current.end())
                    continue;
                auto next = code;
                for (int i = 0; i < position; ++i)
                    if ((adj[v] >> current[i]) & 1u)
                        next |= bit(i, position);
                bool next_ahead = ahead;
                if (have_best && ! ahead) {
                    int prefix = position * (position + 1) / 2;
                    std::uint64_t mask = prefix == 0 ? 0 : ~std::uint64_t{0} << (64 - prefix);
                    if ((next & mask) < (best_code & mask))
                        continue;
                    if ((next & mask) > (best_code & mask))
                        next_ahead = true;
                }
                current.push_back(v);
                run(position + 1, next, next_ahead);
                current.pop_back();
            }
        }
    };
}

auto canonical_labelling(const Graph & g) -> std::vector<Vertex>
{
    if (g.order() > canonical_order_cap)
        throw CapExceeded("canonical form", g.order(), canonical_order_cap);
    Search s;
    s.n = g.order();
    s.adj = g.adjacency_masks();
    s.colour = refine(g);
    s.cell_of_position = s.colour;
    std::sort(s.cell_of_position.begin(), s.cell_of_position.end());
    s.run(0, 0, false);
    return s.best;
}

auto canonical_form(const Graph & g) -> Graph
{
    auto labelling = canonical_labelling(g);
    return g.induced(labelling);
}

auto isomorphic(const Graph & a, const Graph & b) -> bool
{
    return a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

}
