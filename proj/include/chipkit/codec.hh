#pragma once

#include <chipkit/digraph.hh>
#include <chipkit/graph.hh>

#include <string>
#include <string_view>

namespace chipkit {

enum class GraphFormat { graph6, json };

/// Largest order representable in the 4-byte graph6 size field.
inline constexpr int graph6_max_order = 258047;

/// Parses graph6 (with or without the ">>graph6<<" header) or the edge-list
/// JSON {"n": int, "edges": [[u,v],...]}. Format is detected from the first
/// non-blank byte: '{' selects JSON. Throws ParseError on malformed text and
/// ValidationError on loops or duplicate edges.
auto parse_graph(std::string_view text) -> Graph;

auto parse_graph6(std::string_view text) -> Graph;
auto parse_graph_json(std::string_view text) -> Graph;

/// Throws ParameterError when the order exceeds graph6_max_order.
auto serialize_graph(const Graph & g, GraphFormat format) -> std::string;

auto to_graph6(const Graph & g) -> std::string;
auto to_graph_json(const Graph & g) -> std::string;

/// digraph6 ('&'-prefixed) or arc-list JSON {"n": int, "arcs": [[u,v],...]}.
auto parse_digraph(std::string_view text) -> Digraph;
auto parse_digraph6(std::string_view text) -> Digraph;
auto parse_digraph_json(std::string_view text) -> Digraph;

auto serialize_digraph(const Digraph & d, GraphFormat format) -> std::string;
auto to_digraph6(const Digraph & d) -> std::string;
auto to_digraph_json(const Digraph & d) -> std::string;

}
