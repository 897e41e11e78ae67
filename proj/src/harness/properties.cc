#include <chipkit/codec.hh>
#include <chipkit/generators.hh>
#include <chipkit/holes.hh>
#include <chipkit/hom.hh>

#include "common.hh"

#include <algorithm>

namespace chipkit::harness::detail {

namespace {

auto is_clique(const Graph & g, const std::vector<Vertex> & vs) -> bool
{
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (vs[i] == vs[j] || ! g.adjacent(vs[i], vs[j]))
                return false;
    return true;
}

auto biclique_ok(const Graph & g, const Biclique & b, int value) -> bool
{
    for (Vertex u : b.left) {
        if (std::find(b.right.begin(), b.right.end(), u) != b.right.end())
            return false;
        for (Vertex v : b.right)
            if (! g.adjacent(u, v))
                return false;
    }
    return static_cast<int>(std::min(b.left.size(), b.right.size())) == value;
}

auto degeneracy_ok(const Graph & g, const Degeneracy & d) -> bool
{
    if (static_cast<int>(d.ordering.size()) != g.order())
        return false;
    std::vector<char> gone(g.order(), 0);
    int worst = 0;
    for (Vertex v : d.ordering) {
        int live = 0;
        for (Vertex w : g.neighbours(v))
            live += ! gone[w];
        worst = std::max(worst, live);
        gone[v] = 1;
    }
    return worst == d.value;
}

auto coloured_ok(const Graph & g, const InvariantResult & r) -> bool
{
    const auto & c = std::get<Coloring>(r.certificate);
    if (validate_coloring(g, c) || c.num_colours != r.value)
        return false;
    if (r.lower_bound && r.lower_bound->kind == LowerBoundWitness::Kind::clique)
        return is_clique(g, r.lower_bound->vertices) && static_cast<int>(r.lower_bound->vertices.size()) == r.value;
    return true;
}

// Each edge becomes one arc, the reverse arc, or both.
auto random_orientation(const Graph & g, std::uint64_t seed) -> Digraph
{
    SplitMix64 rng(seed);
    std::vector<Arc> arcs;
    for (auto [u, v] : g.edges()) {
        auto pick = rng.below(3);
        if (pick != 1)
            arcs.emplace_back(u, v);
        if (pick != 0)
            arcs.emplace_back(v, u);
    }
    return Digraph(g.order(), arcs);
}

// Walk counts by repeated boolean matrix products.
auto walk_power_agrees(const Digraph & d, int len) -> bool
{
    int n = d.order();
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
        reach[i][i] = 1;
    for (int step = 0; step < len; ++step) {
        std::vector<std::vector<char>> next(n, std::vector<char>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                if (reach[i][k])
                    for (Vertex j : d.out_neighbours(k))
                        next[i][j] = 1;
        reach = std::move(next);
    }
    bool closed = false;
    for (int i = 0; i < n; ++i)
        closed |= reach[i][i] != 0;
    try {
        auto power = walk_power(d, len);
        if (closed)
            return false;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && power.has_arc(i, j) != (reach[i][j] != 0))
                    return false;
        return true;
    }
    catch (const ClosedWalkError & e) {
        const auto & w = e.walk();
        if (! closed || static_cast<int>(w.size()) != len + 1 || w.front() != e.vertex() || w.back() != e.vertex())
            return false;
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (! d.has_arc(w[i], w[i + 1]))
                return false;
        return true;
    }
}

auto check(const Graph & g, std::uint64_t seed) -> json
{
    auto caps = suite_caps();
    auto mcaps = suite_minor_caps();
    json m;

    auto chi = chromatic_number(g, caps);
    m["chromatic"] = coloured_ok(g, chi);
    auto star = star_chromatic_number(g, caps);
    m["star"] = coloured_ok(g, star) && std::get<Coloring>(star.certificate).level() == 2;
    auto level3 = chi_p(g, 3, caps);
    m["chi_3"] = coloured_ok(g, level3);

    auto omega = clique_number(g, caps);
    const auto & clique = std::get<std::vector<Vertex>>(omega.certificate);
    m["clique"] = is_clique(g, clique) && static_cast<int>(clique.size()) == omega.value;
    auto bw = biclique_number(g, caps);
    m["biclique"] = biclique_ok(g, std::get<Biclique>(bw.certificate), bw.value) && bw.value >= omega.value / 2;
    auto td = tree_depth(g, caps);
    const auto & forest = std::get<EliminationForest>(td.certificate);
    m["elimination_forest"] = ! validate_elimination_forest(g, forest) && forest.height == td.value;
    m["chi_chain"] = chi.value <= star.value && star.value <= level3.value && level3.value <= td.value;
    m["degeneracy"] = degeneracy_ok(g, degeneracy(g));

    auto w1 = omega_TM(g, 1, mcaps);
    m["omega_tm_embedding"] = w1.value == 0 || (w1.witness && ! validate_embedding(g, *w1.witness, 1, EmbeddingMode::shallow) && w1.witness->pattern.size() == w1.value * (w1.value - 1) / 2);
    auto tm = chi_TM(g, 1, std::min(g.order(), 7), mcaps);
    m["chi_tm_embedding"] = tm.value == 0 || (! validate_embedding(g, tm.witness, 1, EmbeddingMode::shallow) && chromatic_number(tm.witness.pattern, caps).value == tm.value);
    bool itm_ok = true;
    for (const auto & h : enumerate_ITM_exact(g, 1, 4, mcaps).patterns) {
        auto e = is_induced_exact_subdivision(h, 1, g, mcaps);
        itm_ok &= e && ! validate_embedding(g, *e, 1, EmbeddingMode::induced_exact);
    }
    m["itm_embeddings"] = itm_ok;

    bool holes_ok = true;
    auto holes = enumerate_holes(g, g.order());
    for (const auto & h : holes)
        holes_ok &= ! validate_hole(g, h);
    auto even = is_even_hole_free(g);
    bool has_even = std::any_of(holes.begin(), holes.end(), [](const Hole & h) { return h.length() % 2 == 0; });
    holes_ok &= even.even_hole_free == ! has_even && (! even.witness || ! validate_hole(g, *even.witness));
    m["holes"] = holes_ok;

    auto d = random_orientation(g, seed);
    bool walks_ok = true;
    for (int len = 1; len <= 4; ++len)
        walks_ok &= walk_power_agrees(d, len);
    m["walk_power"] = walks_ok;

    auto sym = symmetric_digraph(g);
    HomCaps hcaps;
    hcaps.source = 64;
    auto to_k = homomorphism(sym, symmetric_digraph(complete_graph(chi.value)), hcaps);
    bool hom_ok = to_k && ! validate_homomorphism(sym, symmetric_digraph(complete_graph(chi.value)), *to_k);
    if (chi.value > 1)
        hom_ok &= ! homomorphism(sym, symmetric_digraph(complete_graph(chi.value - 1)), hcaps);
    m["homomorphism"] = hom_ok;
    return m;
}

}

auto properties_suite(const SuiteConfig & c) -> VerificationReport
{
    VerificationReport report;
    int max_n = corpus_order(c, 7);
    int count = int_param(c, "random", 500);
    report.config = {{"max_n", max_n}, {"random", count}, {"random_order", {4, 10}}};
    std::vector<std::pair<Graph, json>> instances;
    auto graphs = corpus(c, max_n);
    for (std::size_t i = 0; i < graphs.size(); ++i)
        instances.push_back({graphs[i], {{"source", "corpus"}, {"index", i}}});
    auto extra = random_graphs(c, 12, count, 4, 10);
    for (std::size_t i = 0; i < extra.size(); ++i)
        instances.push_back({extra[i], {{"source", "random"}, {"index", i}}});

    SplitMix64 rng(c.seed ^ 0x9090);
    std::vector<Task> tasks;
    for (const auto & inst : instances) {
        std::uint64_t seed = rng.next();
        tasks.push_back([&inst, seed] {
            InstanceRecord rec;
            rec.graph6 = to_graph6(inst.first);
            rec.params = inst.second;
            rec.params["orientation_seed"] = seed;
            rec.measured = check(inst.first, seed);
            rec.expected = json::object();
            for (const auto & [key, value] : rec.measured.items())
                rec.expected[key] = true;
            rec.pass = rec.measured == rec.expected;
            return rec;
        });
    }
    report.instances = run_tasks(tasks, c.jobs);
    return report;
}

}
