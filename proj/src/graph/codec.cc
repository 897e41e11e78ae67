#include <chipkit/codec.hh>
#include <chipkit/errors.hh>

#include <json.hpp>

#include <algorithm>
#include <cctype>

namespace chipkit {

namespace {

    constexpr std::string_view graph6_header = ">>graph6<<";
    constexpr std::string_view digraph6_header = ">>digraph6<<";

    auto trim(std::string_view text, std::size_t & offset) -> std::string_view
    {
        offset = 0;
        while (offset < text.size() && std::isspace(static_cast<unsigned char>(text[offset])))
            ++offset;
        auto end = text.size();
        while (end > offset && std::isspace(static_cast<unsigned char>(text[end - 1])))
            --end;
        return text.substr(offset, end - offset);
    }

    auto sextet(std::string_view text, std::size_t pos, std::size_t base) -> unsigned
    {
        if (pos >= text.size())
            throw ParseError("unexpected end of graph6 data", base + pos);
        auto c = static_cast<unsigned char>(text[pos]);
        if (c < 63 || c > 126)
            throw ParseError("byte outside the printable graph6 range 63..126", base + pos);
        return c - 63;
    }

    // N(n) of the graph6 family; advances pos.
    auto read_order(std::string_view text, std::size_t & pos, std::size_t base) -> long long
    {
        auto first = sextet(text, pos, base);
        if (first != 63) {
            ++pos;
            return first;
        }
        if (sextet(text, pos + 1, base) == 63) {
            long long n = 0;
            for (int i = 0; i < 6; ++i)
                n = (n << 6) | sextet(text, pos + 2 + i, base);
            if (n > graph6_max_order)
                throw ParseError("order " + std::to_string(n) + " exceeds supported limit " + std::to_string(graph6_max_order), base + pos);
            pos += 8;
            return n;
        }
        long long n = 0;
        for (int i = 0; i < 3; ++i)
            n = (n << 6) | sextet(text, pos + 1 + i, base);
        pos += 4;
        return n;
    }

    auto write_order(long long n, std::string & out) -> void
    {
        if (n < 0 || n > graph6_max_order)
            throw ParameterError("order " + std::to_string(n) + " exceeds graph6 limit " + std::to_string(graph6_max_order));
        if (n <= 62)
            out.push_back(static_cast<char>(n + 63));
        else {
            out.push_back(126);
            for (int shift = 12; shift >= 0; shift -= 6)
                out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
        }
    }

    // Packs a bit sequence six bits per byte, most significant first, zero padded.
    class BitWriter {
    public:
        explicit BitWriter(std::string & out) :
            _out(out)
        {
        }

        auto push(bool bit) -> void
        {
            _acc = (_acc << 1) | (bit ? 1u : 0u);
            if (++_count == 6)
                flush_byte();
        }

        auto finish() -> void
        {
            if (_count > 0) {
                _acc <<= (6 - _count);
                flush_byte();
            }
        }

    private:
        auto flush_byte() -> void
        {
            _out.push_back(static_cast<char>(_acc + 63));
            _acc = 0;
            _count = 0;
        }

        std::string & _out;
        unsigned _acc = 0;
        int _count = 0;
    };

    class BitReader {
    public:
        BitReader(std::string_view text, std::size_t pos, std::size_t base) :
            _text(text), _pos(pos), _base(base)
        {
        }

        auto next() -> bool
        {
            if (_bit == 0)
                _current = sextet(_text, _pos, _base);
            bool result = (_current >> (5 - _bit)) & 1u;
            if (++_bit == 6) {
                _bit = 0;
                ++_pos;
            }
            return result;
        }

        // Position of the first byte not consumed by whole sextets read so far.
        auto end_position() const -> std::size_t { return _bit == 0 ? _pos : _pos + 1; }

    private:
        std::string_view _text;
        std::size_t _pos, _base;
        unsigned _current = 0;
        int _bit = 0;
    };

    auto expect_end(std::string_view body, std::size_t pos, std::size_t base) -> void
    {
        if (pos != body.size())
            throw ParseError("trailing bytes after graph data", base + pos);
    }

    auto parse_pairs(const nlohmann::json & doc, const char * key, std::string_view text) -> std::pair<int, std::vector<std::pair<int, int>>>
    {
        if (! doc.is_object())
            throw ParseError("JSON graph must be an object", 0);
        if (! doc.contains("n") || ! doc["n"].is_number_integer())
            throw ParseError("JSON graph needs an integer field \"n\"", text.find('{'));
        if (! doc.contains(key) || ! doc[key].is_array())
            throw ParseError(std::string("JSON graph needs an array field \"") + key + "\"", text.find('{'));
        auto n = doc["n"].get<long long>();
        if (n < 0 || n > graph6_max_order)
            throw ValidationError("vertex count " + std::to_string(n) + " out of range");
        std::vector<std::pair<int, int>> pairs;
        for (const auto & item : doc[key]) {
            if (! item.is_array() || item.size() != 2 || ! item[0].is_number_integer() || ! item[1].is_number_integer())
                throw ParseError(std::string("each entry of \"") + key + "\" must be a pair of integers", text.find(key));
            auto u = item[0].get<long long>(), v = item[1].get<long long>();
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw ValidationError("pair (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint outside 0.." + std::to_string(n - 1));
            pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
        }
        return {static_cast<int>(n), std::move(pairs)};
    }

    auto load_json(std::string_view text) -> nlohmann::json
    {
        try {
            return nlohmann::json::parse(text.begin(), text.end());
        }
        catch (const nlohmann::json::parse_error & e) {
            throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
        }
    }
}

auto parse_graph6(std::string_view text) -> Graph
{
    std::size_t base;
    auto body = trim(text, base);
    if (body.starts_with(graph6_header)) {
        body.remove_prefix(graph6_header.size());
        base += graph6_header.size();
    }
    if (body.empty())
        throw ParseError("empty graph6 string", base);
    if (body.front() == ':' || body.front() == ';' || body.front() == '&')
        throw ParseError("sparse6/incremental/digraph6 data is not graph6", base);

    std::size_t pos = 0;
    auto n = read_order(body, pos, base);
    std::vector<Edge> edges;
    BitReader bits(body, pos, base);
    long long total = n * (n - 1) / 2;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (bits.next())
                edges.emplace_back(u, v);
    auto end = total == 0 ? pos : bits.end_position();
    expect_end(body, end, base);
    return Graph(static_cast<int>(n), edges);
}

auto parse_graph_json(std::string_view text) -> Graph
{
    auto [n, pairs] = parse_pairs(load_json(text), "edges", text);
    return Graph(n, pairs);
}

namespace {

// graph6 of order 60 also starts with '{', but graph6 never contains bytes outside 63..126
auto looks_like_json(std::string_view body) -> bool
{
    if (body.empty() || body.front() != '{')
        return false;
    return std::any_of(body.begin(), body.end(), [](char c) { return c < 63 || c > 126; });
}

}

auto parse_graph(std::string_view text) -> Graph
{
    std::size_t offset;
    auto body = trim(text, offset);
    if (looks_like_json(body))
        return parse_graph_json(text);
    return parse_graph6(text);
}

auto to_graph6(const Graph & g) -> std::string
{
    std::string out;
    write_order(g.order(), out);
    BitWriter bits(out);
    for (int v = 1; v < g.order(); ++v)
        for (int u = 0; u < v; ++u)
            bits.push(g.adjacent(u, v));
    bits.finish();
    return out;
}

auto to_graph_json(const Graph & g) -> std::string
{
    nlohmann::json doc;
    doc["n"] = g.order();
    doc["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges())
        doc["edges"].push_back({u, v});
    return doc.dump();
}

auto serialize_graph(const Graph & g, GraphFormat format) -> std::string
{
    return format == GraphFormat::graph6 ? to_graph6(g) : to_graph_json(g);
}

auto parse_digraph6(std::string_view text) -> Digraph
{
    std::size_t base;
    auto body = trim(text, base);
    if (body.starts_with(digraph6_header)) {
        body.remove_prefix(digraph6_header.size());
        base += digraph6_header.size();
    }
    if (body.empty() || body.front() != '&')
        throw ParseError("digraph6 data must start with '&'", base);
    body.remove_prefix(1);
    ++base;

    std::size_t pos = 0;
    auto n = read_order(body, pos, base);
    std::vector<Arc> arcs;
    BitReader bits(body, pos, base);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (bits.next()) {
                if (u == v)
                    throw ValidationError("loop at vertex " + std::to_string(u));
                arcs.emplace_back(u, v);
            }
    auto end = n == 0 ? pos : bits.end_position();
    expect_end(body, end, base);
    return Digraph(static_cast<int>(n), arcs);
}

auto parse_digraph_json(std::string_view text) -> Digraph
{
    auto [n, pairs] = parse_pairs(load_json(text), "arcs", text);
    return Digraph(n, pairs);
}

auto parse_digraph(std::string_view text) -> Digraph
{
    std::size_t offset;
    auto body = trim(text, offset);
    if (looks_like_json(body))
        return parse_digraph_json(text);
    return parse_digraph6(text);
}

auto to_digraph6(const Digraph & d) -> std::string
{
    std::string out = "&";
    write_order(d.order(), out);
    BitWriter bits(out);
    for (int u = 0; u < d.order(); ++u)
        for (int v = 0; v < d.order(); ++v)
            bits.push(d.has_arc(u, v));
    bits.finish();
    return out;
}

auto to_digraph_json(const Digraph & d) -> std::string
{
    nlohmann::json doc;
    doc["n"] = d.order();
    doc["arcs"] = nlohmann::json::array();
    for (auto [u, v] : d.arcs())
        doc["arcs"].push_back({u, v});
    return doc.dump();
}

auto serialize_digraph(const Digraph & d, GraphFormat format) -> std::string
{
    return format == GraphFormat::graph6 ? to_digraph6(d) : to_digraph_json(d);
}

}
