#include <chipkit/canonical.hh>
#include <chipkit/codec.hh>
#include <chipkit/corpus.hh>
#include <chipkit/errors.hh>

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <string>

namespace chipkit {

namespace {
    auto extend(const std::vector<Graph> & smaller, int n) -> std::vector<Graph>
    {
        std::set<std::string> seen;
        std::vector<std::pair<std::string, Graph>> found;
        for (const auto & h : smaller) {
            for (std::uint64_t nbrs = 0; nbrs < (std::uint64_t{1} << (n - 1)); ++nbrs) {
                std::vector<Edge> edges = h.edges();
                for (int v = 0; v < n - 1; ++v)
                    if ((nbrs >> v) & 1u)
                        edges.emplace_back(v, n - 1);
                auto canon = canonical_form(Graph(n, edges));
                auto key = to_graph6(canon);
                if (seen.insert(key).second)
                    found.emplace_back(std::move(key), std::move(canon));
            }
        }
        std::sort(found.begin(), found.end(), [](const auto & a, const auto & b) { return a.first < b.first; });
        std::vector<Graph> result;
        for (auto & [k, g] : found)
            result.push_back(std::move(g));
        return result;
    }

    auto cache_file(const std::filesystem::path & dir, int max_n) -> std::filesystem::path
    {
        return dir / ("connected-upto-" + std::to_string(max_n) + ".g6");
    }

    auto counts_match(const std::vector<Graph> & graphs, int max_n) -> bool
    {
        std::map<int, long long> counts;
        for (const auto & g : graphs)
            ++counts[g.order()];
        for (int n = 1; n <= max_n; ++n)
            if (counts[n] != expected_connected_count(n))
                return false;
        return static_cast<long long>(graphs.size()) == [&] {
            long long total = 0;
            for (int n = 1; n <= max_n; ++n)
                total += expected_connected_count(n);
            return total;
        }();
    }
}

auto all_graphs(int n) -> std::vector<Graph>
{
    if (n < 0 || n > corpus_order_cap)
        throw CapExceeded("graph enumeration", n, corpus_order_cap);
    std::vector<Graph> graphs{Graph(0)};
    for (int k = 1; k <= n; ++k)
        graphs = extend(graphs, k);
    return graphs;
}

auto expected_connected_count(int n) -> long long
{
    // unlabelled connected graphs by order
    static constexpr long long counts[] = {1, 1, 1, 2, 6, 21, 112, 853, 11117, 261080};
    if (n < 0 || n > 9)
        throw CapExceeded("connected graph count table", n, 9);
    return counts[n];
}

auto connected_graphs(int max_n, const std::optional<std::filesystem::path> & cache_dir) -> std::vector<Graph>
{
    if (max_n < 1 || max_n > corpus_order_cap - 1)
        throw CapExceeded("connected graph corpus", max_n, corpus_order_cap - 1);

    if (cache_dir) {
        std::ifstream in(cache_file(*cache_dir, max_n));
        if (in) {
            std::vector<Graph> cached;
            std::string line;
            try {
                while (std::getline(in, line))
                    if (! line.empty() && line.front() != '#')
                        cached.push_back(parse_graph6(line));
                if (counts_match(cached, max_n))
                    return cached;
            }
            catch (const std::exception &) {
                // unreadable cache: regenerate below
            }
        }
    }

    std::vector<Graph> result;
    std::vector<Graph> level{Graph(0)};
    for (int n = 1; n <= max_n; ++n) {
        level = extend(level, n);
        for (const auto & g : level)
            if (g.connected())
                result.push_back(g);
    }

    if (cache_dir) {
        std::error_code ec;
        std::filesystem::create_directories(*cache_dir, ec);
        auto target = cache_file(*cache_dir, max_n);
        auto temp = target;
        temp += ".tmp";
        std::ofstream out(temp);
        if (out) {
            out << "# connected graphs on 1.." << max_n << " vertices, canonical graph6\n";
            for (const auto & g : result)
                out << to_graph6(g) << '\n';
            out.close();
            std::filesystem::rename(temp, target, ec);
        }
    }
    return result;
}

}
