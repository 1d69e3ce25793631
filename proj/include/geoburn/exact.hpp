#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "geoburn/burning.hpp"
#include "geoburn/geometry.hpp"

namespace geoburn {

struct ExactResult {
  int burning_number = 0;
  Schedule schedule;  // witness; covers P at burning_number
  std::uint64_t nodes_explored = 0;
};

/// Smallest b <= b_max admitting sources at points of P with radii
/// b-1, b-2, ..., 0 that cover P. Empty if the burning number exceeds b_max.
std::optional<ExactResult> exact_point_burning(const PointSet& P, int b_max);
ExactResult exact_point_burning(const PointSet& P);

/// As above with sources drawn from candidate_centers(P).
std::optional<ExactResult> exact_anywhere_burning(const PointSet& P, int b_max);
ExactResult exact_anywhere_burning(const PointSet& P);

/// Shared search: sources restricted to `domain`. The returned schedule
/// carries `model`.
std::optional<ExactResult> exact_burning(const PointSet& P, std::span<const Point> domain, Model model, int b_max);

/// Plain graph burning number by BFS distances and exhaustive enumeration
/// of source sequences. Exponential; meant for graphs of about ten vertices.
int graph_burning_number(const std::vector<std::vector<int>>& adjacency);

/// Disjoint union of paths with the given vertex counts, vertices numbered
/// path by path, left to right.
std::vector<std::vector<int>> path_forest_graph(std::span<const int> path_lengths);

}  // namespace geoburn
