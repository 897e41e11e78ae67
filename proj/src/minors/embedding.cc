#include <chipkit/minors.hh>

#include <algorithm>
#include <set>

namespace chipkit {

auto validate_embedding(const Graph & g, const TopoMinorEmbedding & e, int r, EmbeddingMode mode) -> std::optional<std::string>
{
    const auto & h = e.pattern;
    if (static_cast<int>(e.branch.size()) != h.order())
        return "branch map has " + std::to_string(e.branch.size()) + " entries for " + std::to_string(h.order()) + " pattern vertices";
    if (static_cast<int>(e.paths.size()) != h.size())
        return "path map has " + std::to_string(e.paths.size()) + " entries for " + std::to_string(h.size()) + " pattern edges";

    std::vector<int> owner(g.order(), -1);
    for (Vertex u = 0; u < h.order(); ++u) {
        Vertex b = e.branch[u];
        if (b < 0 || b >= g.order())
            return "branch vertex " + std::to_string(b) + " is not a host vertex";
        if (owner[b] >= 0)
            return "branch map is not injective at host vertex " + std::to_string(b);
        owner[b] = 0;
    }

    std::set<std::pair<Vertex, Vertex>> image_edges;
    for (std::size_t i = 0; i < e.paths.size(); ++i) {
        auto [u, v] = h.edges()[i];
        const auto & path = e.paths[i];
        std::string name = "path for pattern edge (" + std::to_string(u) + "," + std::to_string(v) + ")";
        if (path.size() < 2 || path.front() != e.branch[u] || path.back() != e.branch[v])
            return name + " does not join the branch vertices";
        int internal = static_cast<int>(path.size()) - 2;
        if (mode == EmbeddingMode::shallow ? internal > r : internal != r)
            return name + " has " + std::to_string(internal) + " internal vertices";
        for (std::size_t j = 0; j + 1 < path.size(); ++j) {
            if (! g.adjacent(path[j], path[j + 1]))
                return name + " uses a non-edge";
            image_edges.emplace(std::min(path[j], path[j + 1]), std::max(path[j], path[j + 1]));
        }
        for (std::size_t j = 1; j + 1 < path.size(); ++j) {
            Vertex x = path[j];
            if (x < 0 || x >= g.order())
                return name + " leaves the host graph";
            if (owner[x] >= 0)
                return name + " reuses host vertex " + std::to_string(x);
            owner[x] = 1;
        }
    }

    if (mode == EmbeddingMode::induced_exact) {
        std::vector<Vertex> image;
        for (Vertex x = 0; x < g.order(); ++x)
            if (owner[x] >= 0)
                image.push_back(x);
        for (std::size_t i = 0; i < image.size(); ++i)
            for (std::size_t j = i + 1; j < image.size(); ++j) {
                bool expected = image_edges.count({image[i], image[j]}) > 0;
                if (g.adjacent(image[i], image[j]) != expected)
                    return "image is not induced: host pair (" + std::to_string(image[i]) + "," + std::to_string(image[j]) + ") differs from the subdivision";
            }
    }
    return std::nullopt;
}

}
