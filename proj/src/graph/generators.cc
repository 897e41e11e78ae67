#include <chipkit/errors.hh>
#include <chipkit/generators.hh>
#include <chipkit/random.hh>

#include <algorithm>
#include <cmath>
#include <set>

namespace chipkit {

namespace {
    auto int_param(const GeneratorSeed & spec, std::size_t i, const char * what) -> int
    {
        if (i >= spec.params.size())
            throw ParameterError(family_name(spec.family) + " needs parameter " + what);
        double x = spec.params[i];
        if (x != std::floor(x) || x < 0 || x > 1e6)
            throw ParameterError(family_name(spec.family) + " parameter " + what + " must be a non-negative integer");
        return static_cast<int>(x);
    }

    auto expect_params(const GeneratorSeed & spec, std::size_t count) -> void
    {
        if (spec.params.size() != count)
            throw ParameterError(family_name(spec.family) + " takes " + std::to_string(count) + " parameter(s), got " + std::to_string(spec.params.size()));
    }
}

auto family_name(Family f) -> std::string
{
    switch (f) {
    case Family::complete: return "complete";
    case Family::complete_bipartite: return "complete_bipartite";
    case Family::cycle: return "cycle";
    case Family::path: return "path";
    case Family::star: return "star";
    case Family::mycielski: return "mycielski";
    case Family::random_gnp: return "random_gnp";
    case Family::high_girth: return "high_girth";
    }
    return "unknown";
}

auto family_from_name(const std::string & name) -> Family
{
    for (auto f : {Family::complete, Family::complete_bipartite, Family::cycle, Family::path, Family::star,
             Family::mycielski, Family::random_gnp, Family::high_girth})
        if (family_name(f) == name)
            return f;
    throw ParameterError("unknown generator family '" + name + "'");
}

auto generate(const GeneratorSeed & spec) -> Graph
{
    switch (spec.family) {
    case Family::complete:
        expect_params(spec, 1);
        return complete_graph(int_param(spec, 0, "n"));
    case Family::complete_bipartite:
        expect_params(spec, 2);
        return complete_bipartite_graph(int_param(spec, 0, "s"), int_param(spec, 1, "t"));
    case Family::cycle:
        expect_params(spec, 1);
        return cycle_graph(int_param(spec, 0, "n"));
    case Family::path:
        expect_params(spec, 1);
        return path_graph(int_param(spec, 0, "n"));
    case Family::star:
        expect_params(spec, 1);
        return star_graph(int_param(spec, 0, "t"));
    case Family::mycielski:
        expect_params(spec, 1);
        return mycielski(complete_graph(2), int_param(spec, 0, "k"));
    case Family::random_gnp: {
        expect_params(spec, 2);
        double p = spec.params[1];
        if (! (p >= 0.0 && p <= 1.0))
            throw ParameterError("random_gnp edge probability must lie in [0,1]");
        return random_gnp(int_param(spec, 0, "n"), p, spec.seed);
    }
    case Family::high_girth:
        expect_params(spec, 3);
        return high_girth(int_param(spec, 0, "n"), int_param(spec, 1, "d"), int_param(spec, 2, "g"), spec.seed);
    }
    throw ParameterError("unknown generator family");
}

auto complete_graph(int n) -> Graph
{
    if (n < 0)
        throw ParameterError("complete graph order must be non-negative");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph(n, edges);
}

auto complete_bipartite_graph(int s, int t) -> Graph
{
    if (s < 0 || t < 0)
        throw ParameterError("complete bipartite sides must be non-negative");
    std::vector<Edge> edges;
    for (int u = 0; u < s; ++u)
        for (int v = 0; v < t; ++v)
            edges.emplace_back(u, s + v);
    return Graph(s + t, edges);
}

auto cycle_graph(int n) -> Graph
{
    if (n < 3)
        throw ParameterError("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

auto path_graph(int n) -> Graph
{
    if (n < 1)
        throw ParameterError("path needs at least 1 vertex");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

auto star_graph(int t) -> Graph
{
    return complete_bipartite_graph(1, t);
}

auto petersen_graph() -> Graph
{
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, edges);
}

auto mycielski(const Graph & base, int k) -> Graph
{
    if (k < 0)
        throw ParameterError("mycielski iteration count must be non-negative");
    Graph g = base;
    for (int step = 0; step < k; ++step) {
        int n = g.order();
        std::vector<Edge> edges = g.edges();
        for (auto [u, v] : g.edges()) {
            edges.emplace_back(u, n + v);
            edges.emplace_back(v, n + u);
        }
        for (int i = 0; i < n; ++i)
            edges.emplace_back(n + i, 2 * n);
        g = Graph(2 * n + 1, edges);
    }
    return g;
}

auto random_gnp(int n, double p, std::uint64_t seed) -> Graph
{
    if (n < 0)
        throw ParameterError("random_gnp order must be non-negative");
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(p))
                edges.emplace_back(u, v);
    return Graph(n, edges);
}

auto high_girth(int n, int d, int girth_bound, std::uint64_t seed) -> Graph
{
    if (n < 1 || d < 0)
        throw ParameterError("high_girth needs n >= 1 and d >= 0");
    if ((static_cast<long long>(n) * d) % 2 != 0)
        throw ParameterError("high_girth needs n*d even");
    if (d >= n)
        throw ParameterError("high_girth needs d < n");
    if (girth_bound < 3)
        throw ParameterError("high_girth needs girth bound at least 3");

    SplitMix64 rng(seed);
    std::vector<Vertex> points;
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < d; ++i)
            points.push_back(v);
    for (std::size_t i = points.size(); i > 1; --i)
        std::swap(points[i - 1], points[rng.below(i)]);

    std::set<Edge> edges;
    for (std::size_t i = 0; i + 1 < points.size(); i += 2) {
        auto u = points[i], v = points[i + 1];
        if (u != v)
            edges.emplace(std::min(u, v), std::max(u, v));
    }

    Graph g(n, std::vector<Edge>(edges.begin(), edges.end()));
    while (true) {
        auto cycle = shortest_cycle(g);
        if (! cycle || static_cast<int>(cycle->size()) >= girth_bound)
            break;
        auto i = rng.below(cycle->size());
        auto u = (*cycle)[i], v = (*cycle)[(i + 1) % cycle->size()];
        edges.erase({std::min(u, v), std::max(u, v)});
        g = Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
    }
    return g;
}

auto shortest_cycle(const Graph & g) -> std::optional<std::vector<Vertex>>
{
    int n = g.order();
    int best = -1;
    Vertex best_root = -1, best_v = -1, best_w = -1;
    std::vector<int> dist(n), parent(n);

    auto bfs = [&](Vertex s, auto && on_cross) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        dist[s] = 0;
        std::vector<Vertex> queue{s};
        for (std::size_t i = 0; i < queue.size(); ++i) {
            auto v = queue[i];
            for (auto w : g.neighbours(v)) {
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                }
                else if (w != parent[v])
                    on_cross(v, w);
            }
        }
    };

    for (Vertex s = 0; s < n; ++s)
        bfs(s, [&](Vertex v, Vertex w) {
            int len = dist[v] + dist[w] + 1;
            if (best == -1 || len < best) {
                best = len;
                best_root = s;
                best_v = v;
                best_w = w;
            }
        });

    if (best == -1)
        return std::nullopt;

    bfs(best_root, [](Vertex, Vertex) {});
    std::vector<Vertex> left, right;
    for (auto x = best_v; x != -1; x = parent[x])
        left.push_back(x);
    for (auto x = best_w; x != -1; x = parent[x])
        right.push_back(x);
    // left: v .. root, right: w .. root; the cycle is root .. v w .. (before root)
    std::vector<Vertex> cycle(left.rbegin(), left.rend());
    for (std::size_t i = 0; i + 1 < right.size(); ++i)
        cycle.push_back(right[i]);
    return cycle;
}

auto girth(const Graph & g) -> std::optional<int>
{
    auto c = shortest_cycle(g);
    if (! c)
        return std::nullopt;
    return static_cast<int>(c->size());
}

}
