#include <chipkit/constructions.hh>
#include <chipkit/errors.hh>
#include <chipkit/operations.hh>

#include <algorithm>
#include <limits>

namespace chipkit {

namespace {

auto subset_name(const std::vector<int> & subset) -> std::string
{
    std::string s = "{";
    for (std::size_t i = 0; i < subset.size(); ++i)
        s += (i ? "," : "") + std::to_string(subset[i]);
    return s + "}";
}

void require_proper(const Graph & g, const Coloring & base)
{
    Coloring as_proper = base;
    as_proper.kind = ColoringKind::proper;
    as_proper.p = 1;
    if (auto v = validate_coloring(g, as_proper))
        throw ValidationError("base colouring is not proper: " + v->message);
}

// Renumbers colours to 0..k-1 in increasing order of the original values.
auto compact(std::vector<int> colour) -> std::vector<int>
{
    std::vector<int> values = colour;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (int & c : colour)
        c = static_cast<int>(std::lower_bound(values.begin(), values.end(), c) - values.begin());
    return colour;
}

}

auto product_subsets(int base_colours, int p) -> std::vector<std::vector<int>>
{
    int q = std::min(p, base_colours);
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    auto extend = [&](auto & self, int next) -> void {
        if (static_cast<int>(current.size()) == q) {
            out.push_back(current);
            return;
        }
        for (int c = next; c < base_colours; ++c) {
            current.push_back(c);
            self(self, c + 1);
            current.pop_back();
        }
    };
    extend(extend, 0);
    return out;
}

auto colour_class_union(const Coloring & base, const std::vector<int> & subset) -> std::vector<Vertex>
{
    std::vector<Vertex> members;
    for (Vertex v = 0; v < static_cast<int>(base.colour.size()); ++v)
        if (std::find(subset.begin(), subset.end(), base.colour[v]) != subset.end())
            members.push_back(v);
    return members;
}

auto product_chi_p_coloring(const Graph & g, int p, const Coloring & base, const SubsetColorings & sub) -> Coloring
{
    if (p < 1)
        throw ParameterError("product colouring needs p >= 1");
    require_proper(g, base);
    auto subsets = product_subsets(base.num_colours, p);

    // position of each vertex inside every G_I that contains it
    std::vector<std::vector<int>> parts(g.order());
    for (const auto & subset : subsets) {
        auto it = sub.find(subset);
        if (it == sub.end())
            throw InputError("no sub-colouring supplied for colour subset " + subset_name(subset));
        auto members = colour_class_union(base, subset);
        if (it->second.colour.size() != members.size())
            throw InputError("sub-colouring for colour subset " + subset_name(subset) + " has " + std::to_string(it->second.colour.size()) + " entries, G_I has " + std::to_string(members.size()) + " vertices");
        Coloring gamma = it->second;
        gamma.kind = ColoringKind::chi_p;
        gamma.p = p;
        if (auto v = validate_coloring(g.induced(members), gamma))
            throw InputError("sub-colouring for colour subset " + subset_name(subset) + " is not a chi_p colouring: " + v->message);
        for (std::size_t i = 0; i < members.size(); ++i)
            parts[members[i]].push_back(gamma.colour[i]);
    }

    std::map<std::vector<int>, int> index;
    std::vector<int> colour(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        std::vector<int> key{base.colour[v]};
        key.insert(key.end(), parts[v].begin(), parts[v].end());
        auto [it, fresh] = index.emplace(std::move(key), static_cast<int>(index.size()));
        colour[v] = it->second;
    }
    return Coloring::chi_p(p, std::move(colour));
}

auto product_colour_bound(int base_colours, int a, int p) -> long long
{
    if (base_colours <= 0)
        return 0;
    int q = std::min(p, base_colours);
    // C(k-1, q-1)
    long long exponent = 1;
    for (int i = 1; i <= q - 1; ++i)
        exponent = exponent * (base_colours - q + i) / i;
    long double bound = base_colours;
    for (long long i = 0; i < exponent; ++i) {
        bound *= a;
        if (bound > static_cast<long double>(std::numeric_limits<long long>::max()))
            return std::numeric_limits<long long>::max();
    }
    return static_cast<long long>(bound);
}

auto subdivision_chi_p_coloring(const Graph & g, int p, const Coloring & base) -> Coloring
{
    if (p < 0)
        throw ParameterError("subdivision depth must be non-negative");
    require_proper(g, base);
    auto sd = subdivide_exact(g, p);
    int palette = std::max(base.num_colours, p + 2);
    std::vector<int> colour(sd.graph.order(), 0);
    std::copy(base.colour.begin(), base.colour.end(), colour.begin());
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        auto [u, v] = g.edges()[e];
        std::size_t i = 0;
        for (int c = 0; c < palette && i < sd.paths[e].size(); ++c)
            if (c != base.colour[u] && c != base.colour[v])
                colour[sd.paths[e][i++]] = c;
    }
    return Coloring::chi_p(p + 1, compact(std::move(colour)));
}

auto subdivision_position_coloring(const Graph & g, int p) -> Coloring
{
    if (p < 1)
        throw ParameterError("position colouring needs p >= 1");
    auto sd = subdivide_exact(g, p);
    std::vector<int> colour(sd.graph.order(), 0);
    for (const auto & path : sd.paths)
        for (std::size_t i = 0; i < path.size(); ++i)
            colour[path[i]] = static_cast<int>(i) + 1;
    return Coloring::chi_p(p, std::move(colour));
}

}
