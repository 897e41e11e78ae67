#include <chipkit/codec.hh>
#include <chipkit/corpus.hh>
#include <chipkit/digraph.hh>
#include <chipkit/errors.hh>
#include <chipkit/generators.hh>
#include <chipkit/harness/suites.hh>
#include <chipkit/holes.hh>
#include <chipkit/hom.hh>
#include <chipkit/invariants.hh>
#include <chipkit/minors.hh>
#include <chipkit/operations.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace chipkit;
using json = nlohmann::json;

namespace {

enum Exit { ok = 0, claim_failed = 1, usage = 2, cap = 3, io = 4 };

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A literal, @path for a file, or - for standard input. A bare @ is the one-vertex graph6.
auto read_input(const std::string & arg) -> std::string
{
    std::string text;
    if (arg == "-") {
        std::stringstream s;
        s << std::cin.rdbuf();
        text = s.str();
    }
    else if (arg.size() > 1 && arg[0] == '@') {
        std::ifstream in(arg.substr(1), std::ios::binary);
        if (! in)
            throw IoError("cannot read " + arg.substr(1));
        std::stringstream s;
        s << in.rdbuf();
        text = s.str();
    }
    else {
        text = arg;
    }
    while (! text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.pop_back();
    return text;
}

auto load_graph(const std::string & arg) -> Graph { return parse_graph(read_input(arg)); }

// digraph6 and arc JSON load as given; a graph becomes its symmetric digraph.
auto load_digraph(const std::string & arg) -> Digraph
{
    auto text = read_input(arg);
    auto start = text.find_first_not_of(" \t\r\n");
    bool directed = start != std::string::npos && (text[start] == '&' || text.find("\"arcs\"") != std::string::npos);
    return directed ? parse_digraph(text) : symmetric_digraph(parse_graph(text));
}

void emit(const std::string & text, const std::string & out)
{
    if (out.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (! f || ! (f << text << "\n"))
        throw IoError("cannot write " + out);
}

auto format_of(const std::string & name) -> GraphFormat { return name == "json" ? GraphFormat::json : GraphFormat::graph6; }

auto certificate_json(const Certificate & c) -> json
{
    struct Visit {
        auto operator()(std::monostate) const -> json { return nullptr; }
        auto operator()(const Coloring & c) const -> json { return {{"kind", kind_name(c)}, {"p", c.p}, {"colour", c.colour}}; }
        auto operator()(const EliminationForest & f) const -> json { return {{"parent", f.parent}, {"height", f.height}}; }
        auto operator()(const std::vector<Vertex> & vs) const -> json { return vs; }
        auto operator()(const Biclique & b) const -> json { return {{"left", b.left}, {"right", b.right}}; }
    };
    return std::visit(Visit{}, c);
}

auto result_json(const InvariantResult & r) -> json
{
    json j = {{"value", r.value}, {"certificate", certificate_json(r.certificate)}};
    if (r.lower_bound) {
        static const char * kinds[] = {"clique", "critical_subgraph", "tree_depth"};
        j["lower_bound"] = {{"kind", kinds[static_cast<int>(r.lower_bound->kind)]}, {"vertices", r.lower_bound->vertices}, {"bound", r.lower_bound->bound}};
    }
    return j;
}

auto embedding_json(const TopoMinorEmbedding & e) -> json
{
    return {{"pattern", to_graph6(e.pattern)}, {"branch", e.branch}, {"paths", e.paths}};
}

auto caps_for(int cap_n) -> InvariantCaps
{
    InvariantCaps c;
    if (cap_n > 0) {
        c.chromatic = c.star = c.chi_p2 = c.chi_p3 = c.clique = cap_n;
        c.tree_depth = std::min(cap_n, tree_depth_hard_cap);
    }
    return c;
}

auto split(const std::string & s, char sep) -> std::vector<std::string>
{
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, sep))
        if (! item.empty())
            out.push_back(item);
    return out;
}

auto invariant_cmd(const Graph & g, const std::string & which, const std::vector<int> & ps, int r, int max_pattern, int cap_n) -> json
{
    auto caps = caps_for(cap_n);
    MinorCaps mcaps;
    if (cap_n > 0)
        mcaps.order = cap_n;
    json results = json::object();
    for (const auto & name : split(which, ',')) {
        auto start = std::chrono::steady_clock::now();
        json j;
        if (name == "chromatic")
            j = result_json(chromatic_number(g, caps));
        else if (name == "clique")
            j = result_json(clique_number(g, caps));
        else if (name == "biclique")
            j = result_json(biclique_number(g, caps));
        else if (name == "tree_depth")
            j = result_json(tree_depth(g, caps));
        else if (name == "star")
            j = result_json(star_chromatic_number(g, caps));
        else if (name == "chi_p") {
            for (int p : ps)
                j[std::to_string(p)] = result_json(chi_p(g, p, caps));
        }
        else if (name == "degeneracy") {
            auto d = degeneracy(g);
            j = {{"value", d.value}, {"ordering", d.ordering}};
        }
        else if (name == "max_degree")
            j = {{"value", max_degree(g)}};
        else if (name == "average_degree")
            j = {{"value", average_degree(g).to_string()}};
        else if (name == "omega_tm") {
            auto w = omega_TM(g, r, mcaps);
            j = {{"value", w.value}, {"r", r}};
            if (w.witness)
                j["witness"] = embedding_json(*w.witness);
        }
        else if (name == "chi_tm") {
            int m = max_pattern > 0 ? max_pattern : g.order();
            auto c = chi_TM(g, r, m, mcaps);
            j = {{"value", c.value}, {"r", r}, {"max_pattern_size", m}, {"cap_active", c.cap_active}, {"witness", embedding_json(c.witness)}};
        }
        else
            throw ParameterError("unknown invariant '" + name + "'");
        j["elapsed_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        results[name] = j;
    }
    return {{"graph6", to_graph6(g)}, {"order", g.order()}, {"size", g.size()}, {"results", results}};
}

auto hole_json(const Hole & h) -> json { return h.cycle; }

struct VerifyOptions {
    std::string claim;
    bool all = false;
    std::vector<std::string> params;
    std::string out;
    bool timing = true;
    std::string cache_dir;
};

auto verify_cmd(const VerifyOptions & o, harness::SuiteConfig config) -> int
{
    for (const auto & kv : o.params) {
        auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ParameterError("--param expects key=value, got '" + kv + "'");
        config.params[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    if (! o.cache_dir.empty())
        config.cache_dir = o.cache_dir;

    std::vector<std::string> claims;
    if (o.all) {
        if (! config.params.empty())
            throw ParameterError("--param applies to a single claim, not --all");
        for (const auto & s : harness::registered_suites())
            claims.push_back(s.id);
    }
    else if (! o.claim.empty()) {
        claims.push_back(harness::find_suite(o.claim).id);
    }
    else {
        throw ParameterError("verify needs a claim id or --all");
    }

    bool all_pass = true;
    json combined = json::array();
    for (const auto & id : claims) {
        auto report = harness::run_suite(id, config);
        all_pass &= report.passed();
        std::cerr << report.claim << " " << report.name << " " << (report.passed() ? "PASS" : "FAIL") << " " << (report.instances.size() - report.failures()) << "/" << report.instances.size() << " (" << static_cast<long long>(report.elapsed_ms) << " ms)\n";
        auto j = harness::to_json(report, o.timing);
        if (o.all && ! o.out.empty()) {
            std::filesystem::create_directories(o.out);
            emit(j.dump(2), (std::filesystem::path(o.out) / (id + ".json")).string());
        }
        else {
            combined.push_back(std::move(j));
        }
    }
    if (! combined.empty())
        emit((o.all ? combined : combined[0]).dump(2), o.all ? "" : o.out);
    return all_pass ? ok : claim_failed;
}

auto default_cache_dir() -> std::string
{
    if (const char * env = std::getenv("CHIPKIT_CACHE_DIR"))
        return env;
    if (const char * xdg = std::getenv("XDG_CACHE_HOME"))
        return std::string(xdg) + "/chipkit";
    if (const char * home = std::getenv("HOME"))
        return std::string(home) + "/.cache/chipkit";
    return "";
}

}

int main(int argc, char ** argv)
{
    CLI::App app{"chipkit: graph invariants, shallow topological minors, holes, homomorphisms and claim suites"};
    app.require_subcommand(1);

    std::uint64_t seed = 1;
    int cap_n = 0, jobs = 1;
    std::string format = "graph6", out;
    auto add_common = [&](CLI::App * sub) {
        sub->add_option("--seed", seed, "random seed");
        sub->add_option("--cap-n", cap_n, "size cap (solver component size, or largest corpus order for verify)")->check(CLI::NonNegativeNumber);
        sub->add_option("--format", format, "graph output format")->check(CLI::IsMember({"graph6", "json"}));
        sub->add_option("--out", out, "output file (directory for verify --all)");
        sub->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    };

    std::string graph_arg, which = "chromatic,clique,biclique,tree_depth,star,degeneracy";
    std::vector<int> ps{3};
    int r = 1, max_pattern = 0;
    auto * inv = app.add_subcommand("invariant", "compute invariants with certificates (JSON)");
    inv->add_option("graph", graph_arg, "graph6 or JSON text, @file, or - for stdin")->required();
    inv->add_option("--which", which, "comma-separated: chromatic,clique,biclique,tree_depth,star,chi_p,degeneracy,max_degree,average_degree,omega_tm,chi_tm");
    inv->add_option("--p", ps, "levels for chi_p");
    inv->add_option("--r", r, "depth for omega_tm and chi_tm")->check(CLI::NonNegativeNumber);
    inv->add_option("--max-pattern", max_pattern, "pattern size cap for chi_tm (default: graph order)");
    add_common(inv);

    std::string family;
    std::vector<double> params;
    auto * gen = app.add_subcommand("generate", "generate a graph from a family");
    gen->add_option("family", family, "complete, complete_bipartite, cycle, path, star, mycielski, random_gnp, high_girth")->required();
    gen->add_option("params", params, "family parameters");
    add_common(gen);

    std::string op;
    int t_p = 1, t_k = 2, t_d = 2;
    long long t_index = -1;
    auto * tr = app.add_subcommand("transform", "subdivide, blow up, power or orient a graph");
    tr->add_option("op", op, "subdivide | blowup | power | orient")->required()->check(CLI::IsMember({"subdivide", "blowup", "power", "orient"}));
    tr->add_option("graph", graph_arg, "graph6 or JSON text, @file, or -")->required();
    tr->add_option("--p", t_p, "subdivision depth")->check(CLI::NonNegativeNumber);
    tr->add_option("--k", t_k, "blow-up clique size")->check(CLI::NonNegativeNumber);
    tr->add_option("--d", t_d, "power distance")->check(CLI::NonNegativeNumber);
    tr->add_option("--index", t_index, "orientation number (default: acyclic, low to high index)");
    add_common(tr);

    int max_len = 0, length = 0;
    auto * holes = app.add_subcommand("holes", "enumerate holes and test even-hole-freeness (JSON)");
    holes->add_option("graph", graph_arg, "graph6 or JSON text, @file, or -")->required();
    holes->add_option("--max-len", max_len, "longest hole to list (default: graph order)");
    holes->add_option("--length", length, "report h_length only");
    add_common(holes);

    std::string target_arg;
    auto * hom = app.add_subcommand("hom", "find a homomorphism between digraphs (graphs become symmetric digraphs)");
    hom->add_option("from", graph_arg, "digraph6, graph6 or JSON, @file, or -")->required();
    hom->add_option("to", target_arg, "digraph6, graph6 or JSON, @file, or -")->required();
    add_common(hom);

    std::string samples_arg;
    int sample_n = 4;
    auto * dual = app.add_subcommand("dual-verify", "check that D is a restricted dual of F on a sample set");
    dual->add_option("F", graph_arg, "obstruction digraph")->required();
    dual->add_option("D", target_arg, "candidate dual")->required();
    dual->add_option("--samples", samples_arg, "file with one digraph per line (default: all orientations of graphs with at most --sample-n vertices)");
    dual->add_option("--sample-n", sample_n, "order bound for orientation samples")->check(CLI::Range(1, 5));
    add_common(dual);

    VerifyOptions vo;
    auto * ver = app.add_subcommand("verify", "run claim suites and write JSON reports");
    ver->add_option("claim", vo.claim, "claim id (S1..S11, PROPS) or name");
    ver->add_flag("--all", vo.all, "run every registered suite");
    ver->add_option("--param", vo.params, "suite parameter key=value (lists comma separated)");
    ver->add_flag("!--no-timing", vo.timing, "omit elapsed_ms so reports are byte-identical");
    ver->add_option("--cache-dir", vo.cache_dir, "corpus cache directory");
    add_common(ver);

    auto * list = app.add_subcommand("list", "list registered claim suites");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        if (*inv) {
            emit(invariant_cmd(load_graph(graph_arg), which, ps, r, max_pattern, cap_n).dump(2), out);
        }
        else if (*gen) {
            GeneratorSeed spec{seed, family_from_name(family), params};
            emit(serialize_graph(generate(spec), format_of(format)), out);
        }
        else if (*tr) {
            auto g = load_graph(graph_arg);
            if (op == "subdivide")
                emit(serialize_graph(subdivide_exact(g, t_p).graph, format_of(format)), out);
            else if (op == "blowup")
                emit(serialize_graph(blow_up(g, t_k), format_of(format)), out);
            else if (op == "power")
                emit(serialize_graph(power(g, t_d), format_of(format)), out);
            else if (t_index >= 0) {
                auto all = orientations(g);
                if (static_cast<std::uint64_t>(t_index) >= all.count())
                    throw ParameterError("orientation index out of range");
                emit(serialize_digraph(all.orientation(static_cast<std::uint64_t>(t_index)), format_of(format)), out);
            }
            else {
                std::vector<Vertex> order(g.order());
                for (int v = 0; v < g.order(); ++v)
                    order[v] = v;
                emit(serialize_digraph(acyclic_orientation(g, order), format_of(format)), out);
            }
        }
        else if (*holes) {
            auto g = load_graph(graph_arg);
            HoleCaps hcaps;
            if (cap_n > 0)
                hcaps.order = cap_n;
            json j = {{"graph6", to_graph6(g)}};
            if (length > 0) {
                j["length"] = length;
                j["count"] = count_holes(g, length, hcaps);
            }
            else {
                auto found = enumerate_holes(g, max_len > 0 ? max_len : g.order(), hcaps);
                json list = json::array(), counts = json::object();
                for (const auto & h : found) {
                    list.push_back(hole_json(h));
                    counts[std::to_string(h.length())] = counts.value(std::to_string(h.length()), 0) + 1;
                }
                auto even = is_even_hole_free(g, hcaps);
                j["holes"] = list;
                j["counts"] = counts;
                j["even_hole_free"] = even.even_hole_free;
                if (even.witness)
                    j["even_hole"] = hole_json(*even.witness);
            }
            emit(j.dump(2), out);
        }
        else if (*hom) {
            auto from = load_digraph(graph_arg), to = load_digraph(target_arg);
            HomCaps hcaps;
            if (cap_n > 0)
                hcaps.source = hcaps.target = cap_n;
            auto f = homomorphism(from, to, hcaps);
            json j = {{"exists", f.has_value()}};
            j["mapping"] = f ? json(*f) : json(nullptr);
            emit(j.dump(2), out);
        }
        else if (*dual) {
            auto f = load_digraph(graph_arg), d = load_digraph(target_arg);
            std::vector<Digraph> samples;
            if (! samples_arg.empty()) {
                std::ifstream in(samples_arg);
                if (! in)
                    throw IoError("cannot read " + samples_arg);
                std::string line;
                while (std::getline(in, line))
                    if (line.find_first_not_of(" \t\r") != std::string::npos)
                        samples.push_back(load_digraph(line));
            }
            else {
                for (int n = 1; n <= sample_n; ++n)
                    for (const auto & g : all_graphs(n))
                        for (auto o : orientations(g))
                            samples.push_back(o);
            }
            auto rep = verify_restricted_dual(f, d, samples);
            json j = {{"pass", rep.pass}, {"samples_checked", rep.samples.size()}, {"samples", samples.size()}};
            j["obstruction_to_dual"] = rep.obstruction_to_dual ? json(*rep.obstruction_to_dual) : json(nullptr);
            if (rep.violating_sample) {
                const auto & s = rep.samples.back();
                j["violation"] = {{"index", *rep.violating_sample}, {"sample", to_digraph6(samples[*rep.violating_sample])}, {"obstruction_maps", s.obstruction_map.has_value()}, {"maps_to_dual", s.dual_map.has_value()}};
            }
            emit(j.dump(2), out);
            return rep.pass ? ok : claim_failed;
        }
        else if (*ver) {
            harness::SuiteConfig config;
            config.seed = seed;
            config.cap_n = cap_n;
            config.jobs = jobs;
            vo.out = out;
            if (vo.cache_dir.empty())
                vo.cache_dir = default_cache_dir();
            return verify_cmd(vo, config);
        }
        else if (*list) {
            for (const auto & s : harness::registered_suites())
                std::cout << s.id << "\t" << s.name << "\t" << s.anchor << "\n";
        }
        return ok;
    }
    catch (const CapExceeded & e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return cap;
    }
    catch (const BudgetExhausted & e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return cap;
    }
    catch (const ParseError & e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return io;
    }
    catch (const ValidationError & e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return io;
    }
    catch (const IoError & e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return io;
    }
    catch (const std::filesystem::filesystem_error & e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return io;
    }
    catch (const harness::UnknownClaim & e) {
        std::cerr << e.what() << "\n";
        return usage;
    }
    catch (const std::invalid_argument & e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return usage;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << "\n";
        return io;
    }
}
