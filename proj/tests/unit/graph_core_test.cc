#include <doctest.h>

#include <chipkit/canonical.hh>
#include <chipkit/codec.hh>
#include <chipkit/corpus.hh>
#include <chipkit/errors.hh>
#include <chipkit/generators.hh>
#include <chipkit/operations.hh>
#include <chipkit/random.hh>

#include "support/oracles.hh"

using namespace chipkit;

TEST_CASE("graph rejects loops, duplicates and bad endpoints")
{
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), ValidationError);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), ValidationError);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), ValidationError);
    CHECK_THROWS_AS(Digraph(3, {{1, 1}}), ValidationError);
    CHECK_THROWS_AS(Digraph(3, {{1, 2}, {1, 2}}), ValidationError);
    CHECK(Digraph(2, {{0, 1}, {1, 0}}).is_oriented() == false);
    CHECK(Digraph(2, {{0, 1}}).is_oriented());
}

TEST_CASE("graph6 values agree with an independent reference encoder")
{
    // expected strings produced by networkx.to_graph6_bytes
    CHECK(to_graph6(complete_graph(3)) == "Bw");
    CHECK(to_graph6(complete_graph(2)) == "A_");
    CHECK(to_graph6(Graph(1)) == "@");
    CHECK(to_graph6(Graph(0)) == "?");
    CHECK(to_graph6(petersen_graph()) == "IheA@GUAo");
    CHECK(to_graph6(cycle_graph(5)) == "Dhc");
    CHECK(to_graph6(complete_bipartite_graph(2, 3)) == "D]o");
    auto long_path = to_graph6(path_graph(70));
    CHECK(long_path.size() == 407);
    CHECK(long_path.starts_with("~?@EhCGGC@?G"));
    CHECK(to_graph6(complete_graph(63)).starts_with("~??~~~~~"));

    auto k3 = parse_graph("Bw");
    CHECK(k3.order() == 3);
    CHECK(k3.size() == 3);
    CHECK(parse_graph(">>graph6<<Bw\n") == k3);
    CHECK(parse_graph6("IheA@GUAo") == petersen_graph());
    // order 60 makes graph6 start with '{'
    CHECK(parse_graph(to_graph6(cycle_graph(60))) == cycle_graph(60));
}

TEST_CASE("edge-list JSON")
{
    auto k2 = parse_graph(R"({"n":2,"edges":[[0,1]]})");
    CHECK(k2 == complete_graph(2));
    CHECK_THROWS_AS(parse_graph(R"({"n":3,"edges":[[0,0]]})"), ValidationError);
    CHECK_THROWS_AS(parse_graph(R"({"n":3,"edges":[[0,1],[1,0]]})"), ValidationError);
    CHECK_THROWS_AS(parse_graph(R"({"n":3,"edges":[[0,5]]})"), ValidationError);
    CHECK_THROWS_AS(parse_graph(R"({"n":3,"edges":[[0,1]})"), ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"edges":[]})"), ParseError);
    CHECK(to_graph_json(complete_graph(2)) == R"({"edges":[[0,1]],"n":2})");
}

TEST_CASE("graph6 parse errors carry the byte offset")
{
    try {
        parse_graph6("B");
        FAIL("expected a parse error");
    }
    catch (const ParseError & e) {
        CHECK(e.offset() == 1);
    }
    try {
        parse_graph6("Bw!");
        FAIL("expected a parse error");
    }
    catch (const ParseError & e) {
        CHECK(e.offset() == 2);
    }
    CHECK_THROWS_AS(parse_graph6("Bww"), ParseError);
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(serialize_graph(Graph(graph6_max_order + 1), GraphFormat::graph6), ParameterError);
}

TEST_CASE("digraph6 and arc JSON")
{
    Digraph d(2, {{0, 1}});
    CHECK(to_digraph6(d) == "&AO");
    CHECK(parse_digraph("&AO") == d);
    CHECK(parse_digraph(R"({"n":2,"arcs":[[0,1]]})") == d);
    CHECK_THROWS_AS(parse_digraph(R"({"n":2,"arcs":[[1,1]]})"), ValidationError);
    CHECK_THROWS_AS(parse_digraph("AO"), ParseError);
}

TEST_CASE("serialisation round-trips on generated graphs and digraphs")
{
    SplitMix64 rng(20240611);
    for (int trial = 0; trial < 300; ++trial) {
        int n = static_cast<int>(rng.between(0, 80));
        auto g = random_gnp(n, rng.unit(), rng.next());
        CHECK(parse_graph(serialize_graph(g, GraphFormat::graph6)) == g);
        CHECK(parse_graph(serialize_graph(g, GraphFormat::json)) == g);

        std::vector<Arc> arcs;
        for (auto [u, v] : g.edges())
            arcs.emplace_back(rng.bernoulli(0.5) ? Arc{u, v} : Arc{v, u});
        if (n >= 2 && rng.bernoulli(0.5) && ! g.adjacent(0, 1)) {
            arcs.emplace_back(0, 1);
            arcs.emplace_back(1, 0);
        }
        Digraph d(n, arcs);
        CHECK(parse_digraph(serialize_digraph(d, GraphFormat::graph6)) == d);
        CHECK(parse_digraph(serialize_digraph(d, GraphFormat::json)) == d);
    }
}

TEST_CASE("subdivision")
{
    auto k4 = subdivide_exact(complete_graph(4), 1).graph;
    CHECK(k4.order() == 10);
    CHECK(k4.size() == 12);

    auto petersen = petersen_graph();
    CHECK(subdivide(petersen, SubdivisionProfile(15, 0)).graph == petersen);

    auto c5 = subdivide(complete_graph(3), {1, 1, 0}).graph;
    CHECK(oracle::isomorphic(c5, cycle_graph(5)));
    CHECK(oracle::isomorphic(subdivide_exact(complete_graph(3), 1).graph, cycle_graph(6)));
    CHECK(subdivide_exact(cycle_graph(5), 0).graph == cycle_graph(5));

    CHECK_THROWS_AS(subdivide(complete_graph(3), {1, 1}), ValidationError);

    SUBCASE("new vertices follow edge order then path position")
    {
        auto s = subdivide_exact(path_graph(3), 2);
        CHECK(s.paths == std::vector<std::vector<Vertex>>{{3, 4}, {5, 6}});
        CHECK(s.graph.adjacent(0, 3));
        CHECK(s.graph.adjacent(4, 1));
        CHECK(s.graph.adjacent(1, 5));
        CHECK(s.graph.adjacent(6, 2));
    }

    SUBCASE("closed-form vertex and edge counts")
    {
        SplitMix64 rng(7);
        for (int trial = 0; trial < 50; ++trial) {
            auto g = random_gnp(static_cast<int>(rng.between(1, 12)), 0.4, rng.next());
            int p = static_cast<int>(rng.between(0, 4));
            auto s = subdivide_exact(g, p).graph;
            CHECK(s.order() == g.order() + p * g.size());
            CHECK(s.size() == (p + 1) * g.size());
        }
        for (int n = 2; n <= 6; ++n)
            for (int p = 0; p <= 3; ++p)
                CHECK(subdivide_exact(complete_graph(n), p).graph.order() == n + p * n * (n - 1) / 2);
    }
}

TEST_CASE("blow-up")
{
    CHECK(blow_up(cycle_graph(5), 1) == cycle_graph(5));
    auto b = blow_up(cycle_graph(5), 2);
    CHECK(b.order() == 10);
    CHECK(b.size() == 25);
    CHECK(oracle::clique_number(b) == 4);
    CHECK_THROWS_AS(blow_up(cycle_graph(5), 0), ParameterError);
}

TEST_CASE("power")
{
    CHECK(power(path_graph(3), 2) == complete_graph(3));
    auto p = petersen_graph();
    CHECK(power(p, 1) == p);
    auto c6 = power(cycle_graph(6), 2);
    auto d = oracle::distances(cycle_graph(6));
    for (int v = 0; v < 6; ++v) {
        CHECK(c6.degree(v) == 4);
        for (int w = 0; w < 6; ++w)
            if (v != w)
                CHECK(c6.adjacent(v, w) == (d[v][w] <= 2));
    }
}

TEST_CASE("generators")
{
    auto k23 = generate({0, Family::complete_bipartite, {2, 3}});
    CHECK(k23.order() == 5);
    CHECK(k23.size() == 6);
    CHECK(girth(cycle_graph(5)) == 5);
    CHECK(! girth(path_graph(6)).has_value());
    CHECK(girth(petersen_graph()) == 5);
    CHECK(mycielski(complete_graph(2), 2).order() == 11);
    CHECK(mycielski(complete_graph(2), 2).size() == 20);

    auto hg = high_girth(64, 3, 6, 1);
    REQUIRE(oracle::girth(hg).has_value());
    CHECK(*oracle::girth(hg) >= 6);
    CHECK(girth(hg) == oracle::girth(hg));

    CHECK_THROWS_AS(high_girth(7, 3, 5, 1), ParameterError);
    CHECK_THROWS_AS(generate({0, Family::cycle, {2}}), ParameterError);
    CHECK_THROWS_AS(generate({0, Family::random_gnp, {5, 1.5}}), ParameterError);
    CHECK_THROWS_AS(family_from_name("nope"), ParameterError);

    SUBCASE("same seed, same graph")
    {
        GeneratorSeed spec{99, Family::random_gnp, {30, 0.3}};
        CHECK(generate(spec) == generate(spec));
        GeneratorSeed hspec{5, Family::high_girth, {40, 4, 5}};
        CHECK(to_graph6(generate(hspec)) == to_graph6(generate(hspec)));
        CHECK(generate({1, Family::random_gnp, {30, 0.3}}) != generate({2, Family::random_gnp, {30, 0.3}}));
    }

    SUBCASE("girth of high-girth output checked by exhaustive search")
    {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            auto g = high_girth(30, 3, 5, seed);
            auto gg = oracle::girth(g);
            CHECK((! gg || *gg >= 5));
            CHECK(girth(g) == gg);
        }
    }
}

TEST_CASE("orientations")
{
    CHECK(orientations(complete_graph(2)).count() == 2);
    CHECK(orientations(path_graph(3)).count() == 4);
    int total = 0, cyclic = 0;
    for (auto d : orientations(complete_graph(3))) {
        ++total;
        CHECK(d.is_oriented());
        CHECK(d.size() == 3);
        if (oracle::has_directed_cycle(d))
            ++cyclic;
    }
    CHECK(total == 8);
    CHECK(cyclic == 2);
    CHECK_THROWS_AS(orientations(complete_graph(7)), CapExceeded);

    auto petersen = petersen_graph();
    int seen = 0;
    for (auto d : orientations(petersen)) {
        if (++seen > 64)
            break;
        for (auto [u, v] : petersen.edges())
            CHECK(d.has_arc(u, v) != d.has_arc(v, u));
    }
}

TEST_CASE("acyclic orientation")
{
    std::vector<Vertex> order{0, 1, 2};
    CHECK(acyclic_orientation(complete_graph(3), order) == Digraph(3, {{0, 1}, {0, 2}, {1, 2}}));
    std::vector<Vertex> c4order{0, 1, 2, 3};
    auto c4 = acyclic_orientation(cycle_graph(4), c4order);
    CHECK(! oracle::has_directed_cycle(c4));
    CHECK(c4.is_acyclic());

    SplitMix64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        // random tree by attaching each vertex to an earlier one
        int n = static_cast<int>(rng.between(2, 15));
        std::vector<Edge> edges;
        for (int v = 1; v < n; ++v)
            edges.emplace_back(static_cast<int>(rng.below(v)), v);
        Graph tree(n, edges);
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (std::size_t i = perm.size(); i > 1; --i)
            std::swap(perm[i - 1], perm[rng.below(i)]);
        CHECK(! oracle::has_directed_cycle(acyclic_orientation(tree, perm)));
    }
    CHECK_THROWS_AS(acyclic_orientation(complete_graph(3), std::vector<Vertex>{0, 0, 1}), ValidationError);
}

TEST_CASE("canonical form identifies isomorphic graphs")
{
    SplitMix64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = random_gnp(static_cast<int>(rng.between(1, 8)), rng.unit(), rng.next());
        auto h = oracle::shuffled(g, rng);
        CHECK(canonical_form(g) == canonical_form(h));
        CHECK(isomorphic(g, h));
        auto other = random_gnp(g.order(), rng.unit(), rng.next());
        CHECK(isomorphic(g, other) == oracle::isomorphic(g, other));
    }
}

TEST_CASE("small-graph corpus has the known counts")
{
    std::vector<long long> all_counts{1, 1, 2, 4, 11, 34, 156};
    for (int n = 0; n <= 6; ++n)
        CHECK(static_cast<long long>(all_graphs(n).size()) == all_counts[n]);
    auto connected = connected_graphs(7);
    CHECK(connected.size() == 1 + 1 + 2 + 6 + 21 + 112 + 853);
    for (const auto & g : connected)
        CHECK(g.connected());

    auto dir = std::filesystem::temp_directory_path() / "chipkit-corpus-test";
    std::filesystem::remove_all(dir);
    auto first = connected_graphs(6, dir);
    CHECK(std::filesystem::exists(dir / "connected-upto-6.g6"));
    auto second = connected_graphs(6, dir);
    CHECK(first == second);
    std::filesystem::remove_all(dir);
}
