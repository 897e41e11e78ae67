#include <chipkit/invariants.hh>

#include "colouring_search.hh"

#include <algorithm>

namespace chipkit {

auto chromatic_number(const Graph & g, const InvariantCaps & caps) -> InvariantResult
{
    auto sol = detail::solve_level(g, 1, caps.chromatic, "chromatic number", caps.node_budget);
    InvariantResult r;
    r.value = sol.value;
    r.certificate = Coloring::proper(sol.colour);
    if (sol.value == 0)
        return r;

    auto cl = clique_number(g.induced(sol.hardest));
    if (cl.value == sol.value) {
        std::vector<Vertex> vs;
        for (Vertex i : std::get<std::vector<Vertex>>(cl.certificate))
            vs.push_back(sol.hardest[i]);
        r.lower_bound = LowerBoundWitness{LowerBoundWitness::Kind::clique, std::move(vs), sol.value};
        return r;
    }
    // shrink to a vertex-critical subgraph: drop vertices while value-1 colours still fail
    std::vector<Vertex> keep = sol.hardest;
    for (std::size_t i = 0; i < keep.size();) {
        std::vector<Vertex> trial = keep;
        trial.erase(trial.begin() + static_cast<long>(i));
        if (! detail::find_low_td_colouring(g.induced(trial), 1, sol.value - 1, caps.node_budget))
            keep = std::move(trial);
        else
            ++i;
    }
    r.lower_bound = LowerBoundWitness{LowerBoundWitness::Kind::critical_subgraph, std::move(keep), sol.value};
    return r;
}

}
