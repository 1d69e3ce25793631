#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "geoburn/geometry.hpp"

namespace geoburn {

/// Threshold graph G_k: an edge joins two points at distance <= k, i.e. the
/// radius-k/2 disks around them touch or overlap.
struct UnitDiskGraph {
  double k = 0.0;
  /// Sorted neighbor lists, no self loops.
  std::vector<std::vector<int>> adjacency;

  std::size_t size() const { return adjacency.size(); }
  std::size_t edge_count() const;
  bool adjacent(int u, int v) const;
};

struct DominatingSet {
  std::vector<int> vertices;  // sorted
  bool exact = false;

  std::size_t size() const { return vertices.size(); }
};

UnitDiskGraph build_udg(const PointSet& P, double k);

bool is_dominating(const UnitDiskGraph& G, const std::vector<int>& vertices);

DominatingSet greedy_dominating_set(const UnitDiskGraph& G);

/// Minimum dominating set when one of size <= size_cap exists. Branches on
/// an undominated vertex over its closed neighborhood; the greedy set bounds
/// the search from above.
std::optional<DominatingSet> exact_dominating_set(const UnitDiskGraph& G, int size_cap);
/// Same with size_cap = n, which always succeeds.
DominatingSet exact_dominating_set(const UnitDiskGraph& G);

/// Swap-based improvement of a valid dominating set.
DominatingSet local_search_dominating_set(const UnitDiskGraph& G, const DominatingSet& start, int swap_size = 2);

}  // namespace geoburn
