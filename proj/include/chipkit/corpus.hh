#pragma once

#include <chipkit/graph.hh>

#include <filesystem>
#include <optional>
#include <vector>

namespace chipkit {

inline constexpr int corpus_order_cap = 9;

/// All graphs on exactly n vertices up to isomorphism, generated by adding
/// one vertex at a time to each smaller graph and keeping canonical forms.
/// Ordered by canonical graph6 string.
auto all_graphs(int n) -> std::vector<Graph>;

/// All connected graphs with 1..max_n vertices up to isomorphism, by order
/// then canonical graph6. When `cache_dir` is given, the list is read from
/// (or written to) a graph6 file there; a cache whose per-order counts do not
/// match is regenerated.
auto connected_graphs(int max_n, const std::optional<std::filesystem::path> & cache_dir = std::nullopt) -> std::vector<Graph>;

/// Number of connected graphs on n unlabelled vertices, for n <= 9.
auto expected_connected_count(int n) -> long long;

}
