#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "geoburn/detail/bitset.hpp"

namespace geoburn::detail {

// Unweighted set cover over elements 0..universe-1. Both the dominating-set
// and the disk-cover solvers reduce to this.
struct SetSystem {
  std::size_t universe = 0;
  std::vector<Bitset> sets;
  // element -> indices of the sets containing it
  std::vector<std::vector<int>> containing;

  SetSystem(std::size_t universe_size, std::vector<Bitset> family);

  bool feasible() const;
  bool is_cover(std::span<const int> chosen) const;
  Bitset coverage(std::span<const int> chosen) const;
};

// Most-new-elements-first, ties to the lowest set index. Result sorted.
// Precondition: feasible().
std::vector<int> greedy_cover(const SetSystem& sys);

// Minimum cover of size <= cap, or empty. Iterative deepening over the
// cover size, bounded above by the greedy cover. Result sorted.
std::optional<std::vector<int>> exact_cover(const SetSystem& sys, int cap, std::size_t* nodes = nullptr);

// Repeatedly removes t chosen sets (t <= swap_size) and inserts at most t-1
// others while the result stays a cover. Precondition: start is a cover.
// Result sorted, duplicates dropped.
std::vector<int> local_search_cover(const SetSystem& sys, std::vector<int> start, int swap_size);

}  // namespace geoburn::detail
