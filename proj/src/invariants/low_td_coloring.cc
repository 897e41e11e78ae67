#include <chipkit/errors.hh>
#include <chipkit/invariants.hh>

#include "colouring_search.hh"

#include <algorithm>

namespace chipkit {

namespace detail {

auto solve_level(const Graph & g, int p, int cap, const char * what, long long node_budget) -> LevelSolution
{
    LevelSolution out;
    out.colour.assign(g.order(), 0);
    for (const auto & comp : g.components()) {
        if (static_cast<int>(comp.size()) > cap)
            throw CapExceeded(what, static_cast<long long>(comp.size()), cap);
        auto sub = g.induced(comp);
        std::vector<int> local;
        if (p >= 2 && tree_depth_at_most(sub, p)) {
            // with at most p colours the union of all classes is the whole graph, so χ_p = td here
            int t = 1;
            while (! tree_depth_at_most(sub, t))
                ++t;
            for (int d : forest_depths(*elimination_forest_within(sub, t)))
                local.push_back(d - 1);
        }
        else {
            int lb = clique_number(sub).value;
            if (p >= 2)
                lb = std::max({lb, p + 1, solve_level(sub, 1, cap, what, node_budget).value});
            for (int k = lb;; ++k) {
                if (auto found = find_low_td_colouring(sub, p, k, node_budget)) {
                    local = std::move(*found);
                    break;
                }
            }
        }
        int value = local.empty() ? 0 : *std::max_element(local.begin(), local.end()) + 1;
        for (std::size_t i = 0; i < comp.size(); ++i)
            out.colour[comp[i]] = local[i];
        if (value > out.value) {
            out.value = value;
            out.hardest = comp;
        }
    }
    return out;
}

}

namespace {

auto level_cap(int p, const InvariantCaps & caps) -> int
{
    return p <= 1 ? caps.chromatic : p == 2 ? caps.chi_p2 : caps.chi_p3;
}

auto clique_witness(const Graph & g, const std::vector<Vertex> & hardest, int value) -> std::optional<LowerBoundWitness>
{
    auto cl = clique_number(g.induced(hardest));
    if (cl.value != value)
        return std::nullopt;
    std::vector<Vertex> vs;
    for (Vertex i : std::get<std::vector<Vertex>>(cl.certificate))
        vs.push_back(hardest[i]);
    return LowerBoundWitness{LowerBoundWitness::Kind::clique, std::move(vs), value};
}

auto level_result(const Graph & g, int p, const detail::LevelSolution & sol, Coloring certificate) -> InvariantResult
{
    InvariantResult r;
    r.value = sol.value;
    r.certificate = std::move(certificate);
    if (sol.value > 0) {
        r.lower_bound = clique_witness(g, sol.hardest, sol.value);
        if (! r.lower_bound && p >= 2 && sol.value == p + 1)
            r.lower_bound = LowerBoundWitness{LowerBoundWitness::Kind::tree_depth, sol.hardest, p + 1};
    }
    return r;
}

}

auto star_chromatic_number(const Graph & g, const InvariantCaps & caps) -> InvariantResult
{
    auto sol = detail::solve_level(g, 2, caps.star, "star chromatic number", caps.node_budget);
    return level_result(g, 2, sol, Coloring::star(sol.colour));
}

auto chi_p(const Graph & g, int p, const InvariantCaps & caps) -> InvariantResult
{
    if (p < 1)
        throw ParameterError("chi_p needs p >= 1");
    if (p == 1)
        return chromatic_number(g, caps);
    auto sol = detail::solve_level(g, p, level_cap(p, caps), "chi_p", caps.node_budget);
    return level_result(g, p, sol, Coloring::chi_p(p, sol.colour));
}

auto chi_p_coloring_within(const Graph & g, int p, int k, const InvariantCaps & caps) -> std::optional<Coloring>
{
    if (p < 1)
        throw ParameterError("chi_p needs p >= 1");
    int cap = level_cap(p, caps);
    std::vector<int> colour(g.order(), 0);
    for (const auto & comp : g.components()) {
        if (static_cast<int>(comp.size()) > cap)
            throw CapExceeded("chi_p", static_cast<long long>(comp.size()), cap);
        auto found = detail::find_low_td_colouring(g.induced(comp), p, k, caps.node_budget);
        if (! found)
            return std::nullopt;
        for (std::size_t i = 0; i < comp.size(); ++i)
            colour[comp[i]] = (*found)[i];
    }
    return Coloring::chi_p(p, std::move(colour));
}

}
