#pragma once

#include <chipkit/corpus.hh>
#include <chipkit/errors.hh>
#include <chipkit/harness/suites.hh>
#include <chipkit/invariants.hh>
#include <chipkit/minors.hh>
#include <chipkit/random.hh>

#include <string>
#include <vector>

namespace chipkit::harness::detail {

using Task = std::function<InstanceRecord()>;

/// Caps wide enough for every suite instance (bitmask solvers stop at 64 vertices).
inline auto suite_caps() -> InvariantCaps
{
    InvariantCaps c;
    c.chromatic = 64;
    c.star = 64;
    c.chi_p2 = 64;
    c.chi_p3 = 64;
    c.clique = 64;
    c.tree_depth = 24;
    return c;
}

inline auto suite_minor_caps() -> MinorCaps { return {64, 12}; }

auto int_param(const SuiteConfig & c, const std::string & key, int fallback) -> int;
auto int_list(const SuiteConfig & c, const std::string & key, std::vector<int> fallback) -> std::vector<int>;

/// Largest corpus order: --cap-n when given, else the suite default.
auto corpus_order(const SuiteConfig & c, int fallback) -> int;

/// Connected graphs with at most max_n vertices.
auto corpus(const SuiteConfig & c, int max_n) -> std::vector<Graph>;

/// `count` G(n, p) graphs with n in [lo, hi] and p uniform, from the suite seed and a salt.
auto random_graphs(const SuiteConfig & c, std::uint64_t salt, int count, int lo, int hi) -> std::vector<Graph>;

auto colouring_json(const Coloring & c) -> json;
auto embedding_json(const TopoMinorEmbedding & e) -> json;

/// b^e for small non-negative integers, saturating at 2^62.
auto int_power(long long b, long long e) -> long long;

auto properties_suite(const SuiteConfig & c) -> VerificationReport;

}
