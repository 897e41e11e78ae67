#include <chipkit/errors.hh>
#include <chipkit/invariants.hh>

#include <algorithm>
#include <numeric>

namespace chipkit {

auto degeneracy(const Graph & g) -> Degeneracy
{
    int n = g.order();
    std::vector<int> deg(n);
    int top = 0;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        top = std::max(top, deg[v]);
    }
    // bucket queue; buckets hold stale entries that are skipped when popped
    std::vector<std::vector<Vertex>> bucket(top + 1);
    for (Vertex v = n - 1; v >= 0; --v)
        bucket[deg[v]].push_back(v);
    std::vector<char> removed(n, 0);
    Degeneracy out;
    out.ordering.reserve(n);
    int d = 0;
    while (static_cast<int>(out.ordering.size()) < n) {
        d = std::max(d - 1, 0);
        while (bucket[d].empty())
            ++d;
        Vertex v = bucket[d].back();
        bucket[d].pop_back();
        if (removed[v] || deg[v] != d)
            continue;
        removed[v] = 1;
        out.ordering.push_back(v);
        out.value = std::max(out.value, d);
        for (Vertex w : g.neighbours(v)) {
            if (removed[w])
                continue;
            bucket[--deg[w]].push_back(w);
        }
    }
    return out;
}

auto k_core(const Graph & g, int k) -> std::vector<Vertex>
{
    int n = g.order();
    std::vector<int> deg(n);
    std::vector<char> removed(n, 0);
    std::vector<Vertex> queue;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] < k) {
            removed[v] = 1;
            queue.push_back(v);
        }
    }
    while (! queue.empty()) {
        Vertex v = queue.back();
        queue.pop_back();
        for (Vertex w : g.neighbours(v))
            if (! removed[w] && --deg[w] < k) {
                removed[w] = 1;
                queue.push_back(w);
            }
    }
    std::vector<Vertex> core;
    for (Vertex v = 0; v < n; ++v)
        if (! removed[v])
            core.push_back(v);
    return core;
}

auto max_degree(const Graph & g) -> int
{
    int best = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        best = std::max(best, g.degree(v));
    return best;
}

Rational::Rational(long long n, long long d)
{
    if (d == 0)
        throw ParameterError("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    long long k = std::gcd(n, d);
    num = n / k;
    den = d / k;
}

auto Rational::to_string() const -> std::string
{
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

auto operator<=>(const Rational & a, const Rational & b) -> std::strong_ordering
{
    return static_cast<__int128>(a.num) * b.den <=> static_cast<__int128>(b.num) * a.den;
}

auto average_degree(const Graph & g) -> Rational
{
    if (g.order() == 0)
        return Rational(0);
    return Rational(2LL * g.size(), g.order());
}

}
