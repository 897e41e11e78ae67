#include <doctest.h>

#include <chipkit/corpus.hh>
#include <chipkit/errors.hh>
#include <chipkit/generators.hh>
#include <chipkit/hom.hh>
#include <chipkit/operations.hh>
#include <chipkit/random.hh>

#include "support/oracles.hh"

using namespace chipkit;

namespace {

auto random_digraph(int n, double p, SplitMix64 & rng) -> Digraph
{
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && rng.unit() < p)
                arcs.emplace_back(u, v);
    return Digraph(n, arcs);
}

auto oriented_samples(int max_n) -> std::vector<Digraph>
{
    std::vector<Digraph> out;
    for (int n = 1; n <= max_n; ++n)
        for (const auto & g : all_graphs(n))
            for (auto d : orientations(g))
                out.push_back(d);
    return out;
}

}

TEST_CASE("homomorphism examples")
{
    CHECK_FALSE(homomorphism(directed_path(3), transitive_tournament(2)));
    auto f = homomorphism(directed_path(3), transitive_tournament(3));
    REQUIRE(f);
    CHECK_FALSE(validate_homomorphism(directed_path(3), transitive_tournament(3), *f));
    for (int k = 1; k <= 6; ++k)
        CHECK_FALSE(homomorphism(directed_cycle(5), transitive_tournament(k)));

    SplitMix64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        auto d = random_digraph(static_cast<int>(rng.between(1, 8)), 0.3, rng);
        auto id = homomorphism(d, d);
        REQUIRE(id);
        CHECK_FALSE(validate_homomorphism(d, d, *id));
    }

    CHECK(homomorphism(Digraph(0), Digraph(0)));
    CHECK_FALSE(homomorphism(Digraph(1), Digraph(0)));
    CHECK_THROWS_AS(homomorphism(directed_path(25), directed_path(3)), CapExceeded);
    CHECK_THROWS_AS(homomorphism(directed_path(3), directed_path(17)), CapExceeded);

    HomCaps tiny;
    tiny.node_budget = 3;
    CHECK_THROWS_AS(homomorphism(symmetric_digraph(complete_graph(6)), symmetric_digraph(complete_graph(5)), tiny), BudgetExhausted);
}

TEST_CASE("homomorphism search agrees with exhaustive maps")
{
    SplitMix64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        auto a = random_digraph(static_cast<int>(rng.between(1, 6)), rng.unit() * 0.5, rng);
        auto b = random_digraph(static_cast<int>(rng.between(1, 5)), rng.unit(), rng);
        auto f = homomorphism(a, b);
        CHECK(f.has_value() == oracle::has_homomorphism(a, b));
        if (f)
            CHECK_FALSE(validate_homomorphism(a, b, *f));
    }
    // undirected colouring through symmetric digraphs
    for (int n = 1; n <= 6; ++n)
        for (const auto & g : all_graphs(n)) {
            int chi = oracle::chromatic_number(g);
            CHECK(homomorphism(symmetric_digraph(g), symmetric_digraph(complete_graph(chi))));
            if (chi > 1)
                CHECK_FALSE(homomorphism(symmetric_digraph(g), symmetric_digraph(complete_graph(chi - 1))));
        }
}

TEST_CASE("homomorphisms compose")
{
    SplitMix64 rng(29);
    int composed = 0;
    for (int trial = 0; trial < 300; ++trial) {
        auto a = random_digraph(static_cast<int>(rng.between(1, 6)), 0.25, rng);
        auto b = random_digraph(static_cast<int>(rng.between(1, 6)), 0.5, rng);
        auto c = random_digraph(static_cast<int>(rng.between(1, 6)), 0.6, rng);
        auto f = homomorphism(a, b);
        auto g = homomorphism(b, c);
        if (! f || ! g)
            continue;
        HomMapping h(a.order());
        for (int v = 0; v < a.order(); ++v)
            h[v] = (*g)[(*f)[v]];
        CHECK_FALSE(validate_homomorphism(a, c, h));
        ++composed;
    }
    CHECK(composed > 20);
}

TEST_CASE("transitive tournaments")
{
    CHECK(transitive_tournament(1).order() == 1);
    CHECK(transitive_tournament(1).size() == 0);
    CHECK(transitive_tournament(3).size() == 3);
    for (int k = 0; k <= 8; ++k) {
        auto t = transitive_tournament(k);
        CHECK(t.is_acyclic());
        CHECK(t.size() == k * (k - 1) / 2);
        CHECK(oracle::longest_directed_path(t) == k);
    }
    CHECK_THROWS_AS(transitive_tournament(-1), ParameterError);
}

TEST_CASE("maps to transitive tournaments follow the longest path")
{
    auto check = [](const Digraph & d) {
        for (int k = 1; k <= 6; ++k) {
            bool expected = ! oracle::has_directed_cycle(d) && oracle::longest_directed_path(d) <= k;
            CHECK(homomorphism(d, transitive_tournament(k)).has_value() == expected);
        }
    };
    for (const auto & d : oriented_samples(4))
        check(d);
    SplitMix64 rng(41);
    for (int trial = 0; trial < 400; ++trial)
        check(random_digraph(static_cast<int>(rng.between(1, 6)), rng.unit() * 0.4, rng));
}

TEST_CASE("walk powers")
{
    try {
        walk_power(directed_cycle(3), 3);
        FAIL("expected a closed walk");
    }
    catch (const ClosedWalkError & e) {
        CHECK(e.vertex() == 0);
        CHECK(e.walk() == std::vector<Vertex>{0, 1, 2, 0});
    }
    auto c4 = walk_power(directed_cycle(4), 3);
    CHECK(c4.arcs() == std::vector<Arc>{{0, 3}, {1, 0}, {2, 1}, {3, 2}});
    auto t3 = walk_power(transitive_tournament(3), 2);
    CHECK(t3.arcs() == std::vector<Arc>{{0, 2}});
    CHECK_THROWS_AS(walk_power(directed_cycle(4), 0), ParameterError);

    SplitMix64 rng(53);
    for (int trial = 0; trial < 300; ++trial) {
        auto d = random_digraph(static_cast<int>(rng.between(1, 8)), rng.unit() * 0.4, rng);
        int len = static_cast<int>(rng.between(1, 5));
        auto m = oracle::walk_matrix(d, len);
        bool closed = false;
        for (int v = 0; v < d.order(); ++v)
            closed |= m[v][v];
        try {
            auto p = walk_power(d, len);
            CHECK_FALSE(closed);
            for (int u = 0; u < d.order(); ++u)
                for (int v = 0; v < d.order(); ++v)
                    if (u != v)
                        CHECK(p.has_arc(u, v) == m[u][v]);
        }
        catch (const ClosedWalkError & e) {
            CHECK(closed);
            const auto & w = e.walk();
            REQUIRE(static_cast<int>(w.size()) == len + 1);
            CHECK(w.front() == e.vertex());
            CHECK(w.back() == e.vertex());
            for (std::size_t i = 0; i + 1 < w.size(); ++i)
                CHECK(d.has_arc(w[i], w[i + 1]));
        }
    }
}

TEST_CASE("restricted duals")
{
    auto samples = oriented_samples(4);
    for (int k = 1; k <= 4; ++k) {
        auto r = verify_restricted_dual(directed_path(k + 1), transitive_tournament(k), samples);
        CHECK(r.pass);
        CHECK_FALSE(r.obstruction_to_dual);
        CHECK(r.samples.size() == samples.size());
        for (const auto & s : r.samples) {
            CHECK(s.outcome != DualOutcome::violation);
            CHECK(s.obstruction_map.has_value() != s.dual_map.has_value());
            if (s.obstruction_map)
                CHECK_FALSE(validate_homomorphism(directed_path(k + 1), samples[s.index], *s.obstruction_map));
            if (s.dual_map)
                CHECK_FALSE(validate_homomorphism(samples[s.index], transitive_tournament(k), *s.dual_map));
        }
    }

    auto self = verify_restricted_dual(directed_cycle(3), directed_cycle(3), samples);
    CHECK_FALSE(self.pass);
    CHECK(self.obstruction_to_dual);
    CHECK(self.samples.empty());

    auto bad = verify_restricted_dual(directed_cycle(3), transitive_tournament(2), {transitive_tournament(3)});
    CHECK_FALSE(bad.pass);
    REQUIRE(bad.violating_sample);
    CHECK(*bad.violating_sample == 0);
    CHECK(bad.samples[0].outcome == DualOutcome::violation);
    CHECK(outcome_name(DualOutcome::maps_to_dual) == "maps_to_dual");
}

TEST_CASE("H-colouring with witness")
{
    auto k4 = symmetric_digraph(complete_graph(4));
    auto r = h_coloring_with_witness(complete_graph(5), k4, 5, 3);
    REQUIRE(std::holds_alternative<HomObstruction>(r));
    CHECK(std::get<HomObstruction>(r).kind == HomObstruction::Kind::clique);
    CHECK(std::get<HomObstruction>(r).vertices == std::vector<Vertex>{0, 1, 2, 3, 4});
    CHECK_FALSE(validate_h_coloring(complete_graph(5), k4, r));

    auto k3 = symmetric_digraph(complete_graph(3));
    auto c5 = h_coloring_with_witness(cycle_graph(5), k3, 4, 2);
    REQUIRE(std::holds_alternative<HomMapping>(c5));
    CHECK_FALSE(validate_h_coloring(cycle_graph(5), k3, c5));

    auto k2 = symmetric_digraph(complete_graph(2));
    auto tree = Graph(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}});
    auto t = h_coloring_with_witness(tree, k2, 3, 1);
    REQUIRE(std::holds_alternative<HomMapping>(t));
    CHECK_FALSE(validate_h_coloring(tree, k2, t));

    // an odd cycle below the thresholds shrinks to itself
    auto c7 = h_coloring_with_witness(cycle_graph(7), k2, 3, 2);
    REQUIRE(std::holds_alternative<HomObstruction>(c7));
    CHECK(std::get<HomObstruction>(c7).vertices.size() == 7);
    CHECK_FALSE(validate_h_coloring(cycle_graph(7), k2, c7));

    HomObstruction fake{HomObstruction::Kind::minimal_subgraph, {0, 1}};
    CHECK(validate_h_coloring(cycle_graph(5), k3, fake));
    CHECK(validate_h_coloring(cycle_graph(5), k3, HomMapping{0, 0, 1, 2, 1}));
}

TEST_CASE("H-colouring outputs always re-validate")
{
    SplitMix64 rng(61);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = random_gnp(static_cast<int>(rng.between(3, 12)), rng.unit() * 0.6, rng.next());
        int k = static_cast<int>(rng.between(2, 4));
        auto h = symmetric_digraph(complete_graph(k));
        auto r = h_coloring_with_witness(g, h, k + 1, static_cast<int>(rng.between(1, 4)));
        CHECK_FALSE(validate_h_coloring(g, h, r));
        bool colourable = oracle::k_colourable(g, k);
        CHECK(std::holds_alternative<HomMapping>(r) == colourable);
        if (auto * x = std::get_if<HomObstruction>(&r)) {
            // inclusion-minimal: every single deletion maps
            for (std::size_t i = 0; i < x->vertices.size() && x->kind == HomObstruction::Kind::minimal_subgraph; ++i) {
                auto rest = x->vertices;
                rest.erase(rest.begin() + static_cast<long>(i));
                CHECK(oracle::k_colourable(g.induced(rest), k));
            }
        }
    }
}
