#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "galileo/error.hpp"

namespace galileo {

/// Bounded enumeration of positive, non-decreasing, integer prefixes that
/// satisfy a_{2n-1} + a_{2n} = k a_n.
struct SearchSpec {
  std::int64_t k = 2;
  std::int64_t a1 = 1;
  Index length = 2;
  std::optional<std::int64_t> value_cap;  // prune and flag any term above this
  std::size_t max_survivors = 1000;        // emission cap; counting is unaffected
  std::uint64_t node_budget = 200'000'000; // DFS nodes before giving up (incomplete)
  bool lookahead = true;                   // one-level child-feasibility prune
  bool stop_at_first_survivor = false;     // existence mode: counts become lower bounds

  void validate() const;
};

struct SearchOutcome {
  /// prefixes_at_length[L-1] = number of valid prefixes of length L (L = 1..N).
  /// A valid prefix of odd length L also leaves room for its sibling: a_L <= k a_{(L+1)/2} / 2.
  std::vector<std::uint64_t> prefixes_at_length;
  std::uint64_t survivors = 0;                           // count at length N
  std::vector<std::vector<std::int64_t>> emitted;        // lexicographic, up to max_survivors
  std::optional<Index> extinction_depth;                 // smallest L with zero prefixes
  bool complete = true;
  bool cap_hit = false;
  bool budget_exhausted = false;
  bool stopped_early = false;  // existence mode found a survivor
  std::uint64_t nodes_visited = 0;
};

/// Depth-first search in index order. a_2 = (k-1) a_1 is forced; each free
/// choice x = a_{2n-1} ranges over a_{2n-2} <= x <= k a_n - x, and the
/// sibling a_{2n} = k a_n - x follows from the local identity.
SearchOutcome enumerate_monotone(const SearchSpec& spec);

struct ExtinctionEntry {
  std::int64_t a1 = 1;
  std::optional<Index> depth;  // none: survivors at every length <= N_max
  bool complete = true;
};

std::vector<ExtinctionEntry> extinction_depth(std::int64_t k, std::int64_t a1_max, Index length_max,
                                              std::optional<std::int64_t> value_cap = std::nullopt);

}  // namespace galileo
