#include <chipkit/codec.hh>
#include <chipkit/constructions.hh>
#include <chipkit/generators.hh>
#include <chipkit/holes.hh>
#include <chipkit/hom.hh>
#include <chipkit/operations.hh>

#include "common.hh"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace chipkit::harness {

namespace detail {

auto int_param(const SuiteConfig & c, const std::string & key, int fallback) -> int
{
    auto it = c.params.find(key);
    if (it == c.params.end())
        return fallback;
    try {
        std::size_t used = 0;
        int v = std::stoi(it->second, &used);
        if (used != it->second.size())
            throw std::invalid_argument(key);
        return v;
    }
    catch (const std::logic_error &) {
        throw ParameterError("parameter " + key + " expects an integer, got '" + it->second + "'");
    }
}

auto int_list(const SuiteConfig & c, const std::string & key, std::vector<int> fallback) -> std::vector<int>
{
    auto it = c.params.find(key);
    if (it == c.params.end())
        return fallback;
    std::vector<int> out;
    std::stringstream in(it->second);
    std::string item;
    while (std::getline(in, item, ',')) {
        SuiteConfig one;
        one.params[key] = item;
        out.push_back(int_param(one, key, 0));
    }
    if (out.empty())
        throw ParameterError("parameter " + key + " is empty");
    return out;
}

auto corpus_order(const SuiteConfig & c, int fallback) -> int
{
    int n = c.cap_n > 0 ? c.cap_n : fallback;
    if (n > corpus_order_cap - 1)
        throw CapExceeded("corpus order", n, corpus_order_cap - 1);
    return n;
}

auto corpus(const SuiteConfig & c, int max_n) -> std::vector<Graph>
{
    if (max_n > corpus_order_cap - 1)
        throw CapExceeded("corpus order", max_n, corpus_order_cap - 1);
    return connected_graphs(max_n, c.cache_dir);
}

auto random_graphs(const SuiteConfig & c, std::uint64_t salt, int count, int lo, int hi) -> std::vector<Graph>
{
    SplitMix64 rng(c.seed ^ (salt * 0x9e3779b97f4a7c15ULL));
    std::vector<Graph> out;
    for (int i = 0; i < count; ++i) {
        int n = static_cast<int>(rng.between(lo, hi));
        double p = rng.unit();
        out.push_back(random_gnp(n, p, rng.next()));
    }
    return out;
}

auto colouring_json(const Coloring & c) -> json
{
    return {{"kind", kind_name(c)}, {"p", c.p}, {"colour", c.colour}};
}

auto embedding_json(const TopoMinorEmbedding & e) -> json
{
    return {{"pattern", to_graph6(e.pattern)}, {"branch", e.branch}, {"paths", e.paths}};
}

auto int_power(long long b, long long e) -> long long
{
    long long r = 1;
    for (long long i = 0; i < e; ++i) {
        if (b != 0 && r > (1LL << 62) / b)
            return 1LL << 62;
        r *= b;
    }
    return r;
}

}

using namespace detail;

namespace {

auto binomial(long long n, long long k) -> long long
{
    if (k < 0 || k > n)
        return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

auto colour_of(const InvariantResult & r) -> const Coloring & { return std::get<Coloring>(r.certificate); }

// Corpus graphs followed by seeded random graphs, tagged for replay.
struct Instance {
    Graph graph;
    json params;
};

auto corpus_and_random(const SuiteConfig & c, int max_n, std::uint64_t salt, int count, int lo, int hi) -> std::vector<Instance>
{
    std::vector<Instance> out;
    auto graphs = corpus(c, max_n);
    for (std::size_t i = 0; i < graphs.size(); ++i)
        out.push_back({graphs[i], {{"source", "corpus"}, {"index", i}}});
    auto extra = random_graphs(c, salt, count, lo, hi);
    for (std::size_t i = 0; i < extra.size(); ++i)
        out.push_back({extra[i], {{"source", "random"}, {"index", i}}});
    return out;
}

auto s1(const SuiteConfig & c) -> VerificationReport
{
    VerificationReport report;
    auto ps = int_list(c, "p", {1, 2, 3});
    auto ns = int_list(c, "n", {3, 4, 5});
    report.config = {{"p", ps}, {"n", ns}};
    std::vector<Task> tasks;
    for (int p : ps)
        for (int n : ns)
            tasks.push_back([p, n] {
                if (p < 1 || n < 3)
                    throw ParameterError("S1 needs p >= 1 and n >= 3");
                auto base = complete_graph(n);
                auto g = subdivide_exact(base, p).graph;
                auto caps = suite_caps();
                auto mcaps = suite_minor_caps();
                InstanceRecord rec;
                rec.graph6 = to_graph6(g);
                rec.params = {{"p", p}, {"n", n}};

                auto exact = chi_p(g, p, caps);
                auto position = subdivision_position_coloring(base, p);
                bool position_valid = ! validate_coloring(g, position);
                bool p_colours = chi_p_coloring_within(g, p, p, caps).has_value();
                bool deep = ! tree_depth_at_most(g, p);
                auto top = omega_TM(g, p, mcaps);
                auto below = omega_TM(g, p - 1, mcaps);
                bool embedding_valid = top.witness && ! validate_embedding(g, *top.witness, p, EmbeddingMode::shallow);

                rec.measured = {
                    {"chi_p", exact.value},
                    {"constructive_colours", position.num_colours},
                    {"constructive_valid", position_valid},
                    {"p_colouring_found", p_colours},
                    {"tree_depth_exceeds_p", deep},
                    {"omega_tm_p", top.value},
                    {"omega_tm_p_minus_1", below.value},
                    {"embedding_valid", embedding_valid},
                };
                rec.expected = {
                    {"chi_p", p + 1},
                    {"constructive_colours", p + 1},
                    {"constructive_valid", true},
                    {"p_colouring_found", false},
                    {"tree_depth_exceeds_p", true},
                    {"omega_tm_p", n},
                    {"omega_tm_p_minus_1", 2},
                    {"embedding_valid", true},
                };
                rec.pass = rec.measured == rec.expected;
                if (! rec.pass) {
                    json w = {{"colouring", colouring_json(colour_of(exact))}, {"position_colouring", colouring_json(position)}};
                    if (top.witness)
                        w["embedding"] = embedding_json(*top.witness);
                    rec.witness = w;
                }
                return rec;
            });
    report.instances = run_tasks(tasks, c.jobs);
    return report;
}

auto s2(const SuiteConfig & c) -> VerificationReport
{
    VerificationReport report;
    int max_n = corpus_order(c, 7);
    int count = int_param(c, "random", 50);
    report.config = {{"max_n", max_n}, {"random", count}, {"random_order", {5, 9}}};
    auto instances = corpus_and_random(c, max_n, 2, count, 5, 9);
    std::vector<Task> tasks;
    for (const auto & inst : instances)
        tasks.push_back([&inst] {
            const auto & g = inst.graph;
            auto caps = suite_caps();
            auto sub = subdivide_exact(g, 1).graph;
            auto chi = chromatic_number(g, caps);
            auto star = star_chromatic_number(sub, caps);
            bool valid = ! validate_coloring(sub, colour_of(star));
            int upper = std::max(chi.value, 3);
            InstanceRecord rec;
            rec.graph6 = to_graph6(g);
            rec.params = inst.params;
            rec.measured = {{"chi", chi.value}, {"chi_s_subdivision", star.value}, {"chi_s_squared", star.value * star.value}, {"star_colouring_valid", valid}};
            rec.expected = {{"chi_s_squared_at_least", chi.value}, {"chi_s_subdivision_at_most", upper}};
            rec.pass = star.value * star.value >= chi.value && star.value <= upper && valid;
            if (! rec.pass)
                rec.witness = json{{"star_colouring", colouring_json(colour_of(star))}, {"colouring", colouring_json(colour_of(chi))}};
            return rec;
        });
    report.instances = run_tasks(tasks, c.jobs);
    return report;
}

auto s3(const SuiteConfig & c) -> VerificationReport
{
    VerificationReport report;
    int max_n = corpus_order(c, 5);
    auto ps = int_list(c, "p", {1, 2});
    report.config = {{"max_n", max_n}, {"p", ps}};
    auto graphs = corpus(c, max_n);
    std::vector<Task> tasks;
    for (int p : ps)
        for (std::size_t i = 0; i < graphs.size(); ++i)
            tasks.push_back([&g = graphs[i], i, p] {
                if (p < 1)
                    throw ParameterError("S3 needs p >= 1");
                auto caps = suite_caps();
                auto sub = subdivide_exact(g, p).graph;
                auto chi = chromatic_number(g, caps);
                auto level = chi_p(sub, p + 1, caps);
                auto built = subdivision_chi_p_coloring(g, p, colour_of(chi));
                bool built_valid = ! validate_coloring(sub, built) && built.p == p + 1;
                int upper = std::max(chi.value, p + 2);
                InstanceRecord rec;
                rec.graph6 = to_graph6(g);
                rec.params = {{"p", p}, {"index", i}};
                rec.measured = {
                    {"chi", chi.value},
                    {"chi_p_plus_1_subdivision", level.value},
                    {"constructive_colours", built.num_colours},
                    {"constructive_valid", built_valid},
                };
                rec.expected = {{"chi_at_most", int_power(level.value, p + 1)}, {"upper", upper}};
                rec.pass = chi.value <= int_power(level.value, p + 1) && level.value <= upper && built_valid && built.num_colours <= upper;
                if (! rec.pass)
                    rec.witness = json{{"constructive", colouring_json(built)}, {"exact", colouring_json(colour_of(level))}};
                return rec;
            });
    report.instances = run_tasks(tasks, c.jobs);
    return report;
}

auto s4(const SuiteConfig & c) -> VerificationReport
{
    VerificationReport report;
    int n2 = int_param(c, "n2", corpus_order(c, 8));
    int n3 = int_param(c, "n3", corpus_order(c, 7));
    report.config = {{"max_n_p2", n2}, {"max_n_p3", n3}};
    auto graphs = corpus(c, std::max(n2, n3));
    std::vector<Task> tasks;
    for (int p : {2, 3})
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            if (graphs[i].order() > (p == 2 ? n2 : n3))
                continue;
            tasks.push_back([&g = graphs[i], i, p] {
                auto caps = suite_caps();
                auto level = chi_p(g, p, caps);
                auto tm = chi_TM(g, p - 1, g.order(), suite_minor_caps());
                bool colouring_valid = ! validate_coloring(g, colour_of(level));
                bool witness_valid = ! validate_embedding(g, tm.witness, p - 1, EmbeddingMode::shallow) && chromatic_number(tm.witness.pattern, caps).value == tm.value;
                long long power = int_power(level.value, p);
                InstanceRecord rec;
                rec.graph6 = to_graph6(g);
                rec.params = {{"p", p}, {"index", i}};
                rec.measured = {
                    {"chi_p", level.value},
                    {"chi_p_power", power},
                    {"chi_tm", tm.value},
                    {"colouring_valid", colouring_valid},
                    {"embedding_valid", witness_valid},
                };
                rec.expected = {{"chi_p_power_at_least", tm.value}};
                rec.pass = power >= tm.value && colouring_valid && witness_valid;
                if (! rec.pass)
                    rec.witness = json{{"colouring", colouring_json(colour_of(level))}, {"embedding", embedding_json(tm.witness)}};
                return rec;
            });
        }
    report.instances = run_tasks(tasks, c.jobs);
    return report;
}

// Whether some vertex has t pairwise non-adjacent neighbours.
auto has_induced_star(const Graph & g, int t) -> bool
{
    for (Vertex v = 0; v < g.order(); ++v) {
        const auto & nb = g.neighbours(v);
        std::vector<Vertex> chosen;
        auto grow = [&](auto & self, std::size_t from) -> bool {
            if (static_cast<int>(chosen.size()) == t)
                return true;
            for (std::size_t i = from; i < nb.size(); ++i) {
                bool free = std::none_of(chosen.begin(), chosen.end(), [&](Vertex u) { return g.adjacent(u, nb[i]); });
                if (! free)
                    continue;
                chosen.push_back(nb[i]);
                if (self(self, i + 1))
                    return true;
                chosen.pop_back();
            }
            return false;
        };
        if (grow(grow, 0))
            return true;
    }
    return false;
}

auto s5(const SuiteConfig & c) -> VerificationReport
{
    VerificationReport report;
    auto ts = int_list(c, "t", {3, 4});
    int count = int_param(c, "count", 200);
    int lo = int_param(c, "n_min", 5), hi = int_param(c, "n_max", 14);
    report.config = {{"t", ts}, {"count", count}, {"order", {lo, hi}}};
    SplitMix64 rng(c.seed ^ 0x5005);
    std::vector<Task> tasks;
    for (int t : ts)
        for (int i = 0; i < count; ++i) {
            std::uint64_t seed = rng.next();
            tasks.push_back([=] {
                if (t < 2 || lo < 1 || hi < lo)
                    throw ParameterError("S5 needs t >= 2 and 1 <= n_min <= n_max");
                SplitMix64 local(seed);
                Graph g;
                int attempts = 0;
                do {
                    ++attempts;
                    int n = static_cast<int>(local.between(lo, hi));
                    g = random_gnp(n, 0.3 + 0.65 * local.unit(), local.next());
                } while (has_induced_star(g, t));
                int omega = clique_number(g, suite_caps()).value;
                int delta = max_degree(g);
                long long bound = binomial(omega + t - 2, t - 1);
                InstanceRecord rec;
                rec.graph6 = to_graph6(g);
                rec.params = {{"t", t}, {"index", i}, {"seed", seed}, {"attempts", attempts}};
                rec.measured = {{"max_degree", delta}, {"omega", omega}};
                rec.expected = {{"max_degree_below", bound}};
                rec.pass = delta < bound;
                return rec;
            });
        }
    report.instances = run_tasks(tasks, c.jobs);
    return report;
}

auto s6(const SuiteConfig & c) -> VerificationReport
{
    VerificationReport report;
    int s_max = int_param(c, "s_max", 4), t_max = int_param(c, "t_max", 5);
    auto ps = int_list(c, "p", {2, 3, 4});
    report.config = {{"s_max", s_max}, {"t_max", t_max}, {"p", ps}};
    std::vector<Task> tasks;
    for (int s = 1; s <= s_max; ++s)
        for (int t = s; t <= t_max; ++t)
            for (int p : ps)
                tasks.push_back([=] {
                    if (p < 2)
                        throw ParameterError("S6 needs p >= 2");
                    auto g = complete_bipartite_graph(s, t);
                    auto caps = suite_caps();
                    auto level = chi_p(g, p, caps);
                    int omega_tm = omega_TM(g, 1, suite_minor_caps()).value;
                    int td = tree_depth(g, caps).value;
                    InstanceRecord rec;
                    rec.graph6 = to_graph6(g);
                    rec.params = {{"s", s}, {"t", t}, {"p", p}};
                    rec.measured = {{"chi_p", level.value}, {"omega_tm_1", omega_tm}, {"tree_depth", td}};
                    rec.expected = {{"chi_p_at_most_s_plus_1", s + 1}, {"chi_p_at_most_omega_tm_squared", omega_tm * omega_tm}, {"tree_depth_at_most", s + 1}};
                    rec.pass = level.value <= s + 1 && level.value <= omega_tm * omega_tm && td <= s + 1 && ! validate_coloring(g, colour_of(level));
                    if (! rec.pass)
                        rec.witness = json{{"colouring", colouring_json(colour_of(level))}};
                    return rec;
                });
    report.instances = run_tasks(tasks, c.jobs);
    return report;
}

auto s7(const SuiteConfig & c) -> VerificationReport
{
    VerificationReport report;
    auto gs = int_list(c, "g", {5, 7});
    auto omegas = int_list(c, "omega", {2, 4});
    auto copies_list = int_list(c, "copies", {1, 2, 3});
    report.config = {{"g", gs}, {"omega", omegas}, {"copies", copies_list}};
    // hole counts of single blocks C_g[K_k], counted independently of the closed form
    const std::map<std::pair<int, int>, long long> frozen = {{{5, 1}, 1}, {{5, 2}, 32}, {{7, 2}, 128}};
    std::vector<Task> tasks;
    for (int g : gs)
        for (int omega : omegas)
            for (int copies : copies_list)
                tasks.push_back([=, &frozen] {
                    HoleCaps caps;
                    caps.order = 64;
                    auto r = verify_hole_density(g, omega, copies, caps);
                    int k = omega / 2;
                    Graph block = blow_up(cycle_graph(g), k), host = block;
                    for (int i = 1; i < copies; ++i)
                        host = disjoint_union(host, block);
                    auto even = is_even_hole_free(host, caps);
                    Rational closed(int_power(k, g - 1) * host.order(), g);
                    InstanceRecord rec;
                    rec.graph6 = to_graph6(host);
                    rec.params = {{"g", g}, {"omega", omega}, {"copies", copies}};
                    rec.measured = {
                        {"holes", r.holes},
                        {"order", host.order()},
                        {"omega", r.measured_omega},
                        {"even_hole_free", even.even_hole_free},
                    };
                    rec.expected = {
                        {"holes", closed.to_string()},
                        {"order", copies * g * k},
                        {"omega", omega},
                        {"even_hole_free", true},
                    };
                    bool frozen_ok = true;
                    if (auto it = frozen.find({g, k}); it != frozen.end()) {
                        rec.expected["holes_per_block"] = it->second;
                        rec.measured["holes_per_block"] = r.holes / copies;
                        frozen_ok = r.holes == it->second * copies;
                    }
                    rec.pass = closed == Rational(r.holes) && r.equal && host.order() == copies * g * k && r.measured_omega == omega && even.even_hole_free && frozen_ok;
                    if (even.witness)
                        rec.witness = json{{"even_hole", even.witness->cycle}};
                    return rec;
                });
    report.instances = run_tasks(tasks, c.jobs);
    return report;
}

auto s8(const SuiteConfig & c) -> VerificationReport
{
    VerificationReport report;
    int max_n = corpus_order(c, 6);
    int p = int_param(c, "p", 2);
    report.config = {{"max_n", max_n}, {"p", p}};
    auto graphs = corpus(c, max_n);
    std::vector<Task> tasks;
    for (std::size_t i = 0; i < graphs.size(); ++i)
        tasks.push_back([&g = graphs[i], i, p] {
            if (p < 1)
                throw ParameterError("S8 needs p >= 1");
            auto caps = suite_caps();
            auto base = colour_of(chromatic_number(g, caps));
            int k = base.num_colours;
            SubsetColorings parts;
            int a = 0;
            for (const auto & subset : product_subsets(k, p)) {
                auto part = g.induced(colour_class_union(base, subset));
                auto gamma = colour_of(chi_p(part, p, caps));
                a = std::max(a, gamma.num_colours);
                parts.emplace(subset, Coloring::chi_p(p, gamma.colour));
            }
            auto zeta = product_chi_p_coloring(g, p, base, parts);
            bool valid = ! validate_coloring(g, Coloring::chi_p(p, zeta.colour));
            long long bound = k * int_power(a, binomial(k - 1, std::min(p, k) - 1));
            long long library_bound = product_colour_bound(k, a, p);
            InstanceRecord rec;
            rec.graph6 = to_graph6(g);
            rec.params = {{"p", p}, {"index", i}};
            rec.measured = {{"chi", k}, {"a", a}, {"colours", zeta.num_colours}, {"valid", valid}, {"library_bound", library_bound}};
            rec.expected = {{"colours_at_most", bound}, {"valid", true}};
            rec.pass = valid && zeta.num_colours <= bound && library_bound == bound;
            if (! rec.pass)
                rec.witness = json{{"base", colouring_json(base)}, {"zeta", colouring_json(zeta)}};
            return rec;
        });
    report.instances = run_tasks(tasks, c.jobs);
    return report;
}

auto s9(const SuiteConfig & c) -> VerificationReport
{
    VerificationReport report;
    auto ks = int_list(c, "k", {1, 2, 3});
    int sample_n = int_param(c, "sample_n", 4);
    if (sample_n > 5)
        throw CapExceeded("orientation samples order", sample_n, 5);
    report.config = {{"k", ks}, {"sample_n", sample_n}};
    auto samples = std::make_shared<std::vector<Digraph>>();
    for (int n = 1; n <= sample_n; ++n)
        for (const auto & g : all_graphs(n))
            for (auto d : orientations(g))
                samples->push_back(d);
    std::vector<Task> tasks;
    for (int k : ks)
        tasks.push_back([k, samples] {
            if (k < 1)
                throw ParameterError("S9 needs k >= 1");
            auto f = directed_path(k + 1);
            auto d = transitive_tournament(k);
            auto r = verify_restricted_dual(f, d, *samples);
            int to_dual = 0, obstruction = 0, bad_maps = 0;
            for (const auto & s : r.samples) {
                to_dual += s.outcome == DualOutcome::maps_to_dual;
                obstruction += s.outcome == DualOutcome::contains_obstruction;
                if (s.obstruction_map && validate_homomorphism(f, (*samples)[s.index], *s.obstruction_map))
                    ++bad_maps;
                if (s.dual_map && validate_homomorphism((*samples)[s.index], d, *s.dual_map))
                    ++bad_maps;
            }
            InstanceRecord rec;
            rec.graph6 = to_digraph6(d);
            rec.params = {{"k", k}, {"obstruction", to_digraph6(f)}};
            rec.measured = {
                {"samples", r.samples.size()},
                {"maps_to_dual", to_dual},
                {"contains_obstruction", obstruction},
                {"violations", r.violating_sample ? 1 : 0},
                {"obstruction_maps_to_dual", r.obstruction_to_dual.has_value()},
                {"invalid_maps", bad_maps},
            };
            rec.expected = {{"samples", samples->size()}, {"violations", 0}, {"obstruction_maps_to_dual", false}, {"invalid_maps", 0}};
            rec.pass = r.pass && bad_maps == 0 && r.samples.size() == samples->size();
            if (r.violating_sample)
                rec.witness = json{{"sample", to_digraph6((*samples)[*r.violating_sample])}, {"sample_index", *r.violating_sample}};
            else if (r.obstruction_to_dual)
                rec.witness = json{{"obstruction_to_dual", *r.obstruction_to_dual}};
            return rec;
        });
    report.instances = run_tasks(tasks, c.jobs);
    return report;
}

auto s10(const SuiteConfig & c) -> VerificationReport
{
    VerificationReport report;
    auto ns = int_list(c, "n", {10, 12, 14});
    auto ds = int_list(c, "d", {3, 4, 5});
    int girth = int_param(c, "girth", 5);
    int seeds = int_param(c, "seeds", 2);
    report.config = {{"n", ns}, {"d", ds}, {"girth", girth}, {"seeds", seeds}};
    SplitMix64 rng(c.seed ^ 0x1010);
    std::vector<Task> tasks;
    for (int n : ns)
        for (int d : ds)
            for (int s = 0; s < seeds; ++s) {
                std::uint64_t seed = rng.next();
                tasks.push_back([=] {
                    auto g = high_girth(n, d, girth, seed);
                    auto caps = suite_caps();
                    auto chi = chromatic_number(g, caps);
                    auto sub = subdivide_exact(g, 1).graph;
                    auto star = star_chromatic_number(sub, caps);
                    bool valid = ! validate_coloring(sub, colour_of(star));
                    auto measured_girth = chipkit::girth(g);
                    InstanceRecord rec;
                    rec.graph6 = to_graph6(g);
                    rec.params = {{"n", n}, {"d", d}, {"girth", girth}, {"seed", seed}};
                    rec.measured = {{"chi", chi.value}, {"chi_s_subdivision", star.value}, {"girth", measured_girth ? *measured_girth : 0}, {"star_colouring_valid", valid}};
                    rec.expected = {{"chi_s_squared_at_least", chi.value}, {"girth_at_least", girth}};
                    rec.pass = star.value * star.value >= chi.value && valid && (! measured_girth || *measured_girth >= girth);
                    if (! rec.pass)
                        rec.witness = json{{"star_colouring", colouring_json(colour_of(star))}};
                    return rec;
                });
            }
    report.instances = run_tasks(tasks, c.jobs);

    // trend: star chromatic number of the subdivision grouped by chromatic number of the base
    std::map<int, std::vector<int>> by_chi;
    for (const auto & rec : report.instances)
        by_chi[rec.measured["chi"].get<int>()].push_back(rec.measured["chi_s_subdivision"].get<int>());
    json trend = json::array();
    int previous_min = 0;
    bool monotone = true;
    for (const auto & [chi, values] : by_chi) {
        int lo = *std::min_element(values.begin(), values.end());
        int hi = *std::max_element(values.begin(), values.end());
        long long total = 0;
        for (int v : values)
            total += v;
        trend.push_back({{"chi", chi}, {"instances", values.size()}, {"min_chi_s", lo}, {"max_chi_s", hi}, {"mean_chi_s", Rational(total, static_cast<long long>(values.size())).to_string()}});
        monotone &= lo >= previous_min;
        previous_min = lo;
    }
    report.extra = {{"trend", trend}, {"min_chi_s_non_decreasing", monotone}};
    return report;
}

auto s11(const SuiteConfig & c) -> VerificationReport
{
    VerificationReport report;
    int max_n = corpus_order(c, 7);
    int count = int_param(c, "random", 500);
    report.config = {{"max_n", max_n}, {"random", count}, {"random_order", {4, 10}}};
    auto instances = corpus_and_random(c, max_n, 11, count, 4, 10);
    std::vector<Task> tasks;
    for (const auto & inst : instances)
        tasks.push_back([&inst] {
            const auto & g = inst.graph;
            auto caps = suite_caps();
            int n = std::max(g.order(), 1);
            int chi1 = chi_p(g, 1, caps).value;
            int chi2 = chi_p(g, 2, caps).value;
            int chi3 = chi_p(g, 3, caps).value;
            int chin = chi_p(g, n, caps).value;
            int td = tree_depth(g, caps).value;
            int omega = clique_number(g, caps).value;
            int bw = biclique_number(g, caps).value;
            InstanceRecord rec;
            rec.graph6 = to_graph6(g);
            rec.params = inst.params;
            rec.measured = {{"chi_1", chi1}, {"chi_2", chi2}, {"chi_3", chi3}, {"chi_n", chin}, {"td", td}, {"omega", omega}, {"biclique", bw}};
            rec.expected = {{"chain", "chi_1 <= chi_2 <= chi_3 <= td = chi_n"}, {"biclique_at_least", omega / 2}};
            rec.pass = chi1 <= chi2 && chi2 <= chi3 && chi3 <= td && td == chin && bw >= omega / 2;
            return rec;
        });
    report.instances = run_tasks(tasks, c.jobs);
    return report;
}

auto lower(std::string s) -> std::string
{
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    return s;
}

}

auto run_tasks(const std::vector<std::function<InstanceRecord()>> & tasks, int jobs) -> std::vector<InstanceRecord>
{
    std::vector<InstanceRecord> out(tasks.size());
    int workers = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i)
            out[i] = tasks[i]();
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_lock;
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < tasks.size();) {
                try {
                    out[i] = tasks[i]();
                }
                catch (...) {
                    std::lock_guard lock(error_lock);
                    if (! error)
                        error = std::current_exception();
                    next = tasks.size();
                }
            }
        });
    for (auto & t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
    return out;
}

auto registered_suites() -> const std::vector<SuiteInfo> &
{
    static const std::vector<SuiteInfo> suites = {
        {"S1", "chip-subdivided-clique", "chi_p(K_n^(p)) = p+1; omega(TM_p(K_n^(p))) = n; omega(TM_(p-1)(K_n^(p))) = 2", s1},
        {"S2", "wood", "sqrt(chi(G)) <= chi_s(G^(1)) <= max(chi(G), 3)", s2},
        {"S3", "chip-sub-sandwich", "chi(G)^(1/(p+1)) <= chi_(p+1)(G^(p)) <= max(chi(G), p+2)", s3},
        {"S4", "chiptm-lower", "chi_p(G) >= chi(TM_(p-1)(G))^(1/p)", s4},
        {"S5", "k1t-degree", "G K_(1,t)-free => Delta(G) < binom(omega(G)+t-2, t-1)", s5},
        {"S6", "bipartite-weak", "chi_p(K_(s,t)) <= s+1; chi_p(K_(s,t)) <= omega(TM_1(K_(s,t)))^2; td(K_(s,t)) <= s+1", s6},
        {"S7", "hole-density", "h_g(G) = (1/g) (omega/2)^(g-1) |G| for G a disjoint union of copies of C_g[K_(omega/2)]", s7},
        {"S8", "product-coloring", "colours(zeta) <= k a^binom(k-1, min(p,k)-1), k = chi(G), a = max_I colours(gamma_I)", s8},
        {"S9", "gallai-roy-dual", "F -/-> G <=> G -> D, F = directed path on k+1 vertices, D = T_k", s9},
        {"S10", "girth-growth", "chi_s(G^(1)) >= sqrt(chi(G)), G of large girth", s10},
        {"S11", "chi-chain", "chi_1(G) <= chi_2(G) <= chi_3(G) <= ... = td(G); bw(G) >= floor(omega(G)/2)", s11},
        {"PROPS", "properties", "certificates, embeddings, holes and walk powers re-validate", properties_suite},
    };
    return suites;
}

auto find_suite(const std::string & claim) -> const SuiteInfo &
{
    auto key = lower(claim);
    for (const auto & s : registered_suites())
        if (lower(s.id) == key || s.name == key)
            return s;
    throw UnknownClaim("unknown claim '" + claim + "'");
}

auto run_suite(const std::string & claim, const SuiteConfig & config) -> VerificationReport
{
    const auto & suite = find_suite(claim);
    auto start = std::chrono::steady_clock::now();
    auto report = suite.run(config);
    report.claim = suite.id;
    report.name = suite.name;
    report.anchor = suite.anchor;
    report.seed = config.seed;
    if (config.cap_n > 0)
        report.config["cap_n"] = config.cap_n;
    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}
