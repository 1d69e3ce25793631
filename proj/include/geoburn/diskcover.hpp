#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "geoburn/geometry.hpp"

namespace geoburn {

/// Choose the fewest of `centers` whose radius-rho disks cover `points`.
/// Point/center incidence is computed once on construction.
class CoverInstance {
 public:
  CoverInstance(PointSet points, std::vector<Point> centers, double rho);

  const PointSet& points() const { return points_; }
  const std::vector<Point>& centers() const { return centers_; }
  double rho() const { return rho_; }

  /// Points inside the disk of center c.
  const std::vector<int>& covered_by(std::size_t c) const { return covered_by_[c]; }
  /// Centers whose disk contains point p.
  const std::vector<int>& eligible(std::size_t p) const { return eligible_[p]; }

  /// Every point lies in at least one candidate disk.
  bool feasible() const;
  std::optional<std::size_t> first_unreachable() const;

 private:
  PointSet points_;
  std::vector<Point> centers_;
  double rho_;
  std::vector<std::vector<int>> covered_by_;
  std::vector<std::vector<int>> eligible_;
};

struct Cover {
  std::vector<int> chosen;  // sorted center indices
  bool exact = false;

  std::size_t size() const { return chosen.size(); }
};

bool is_cover(const CoverInstance& inst, const std::vector<int>& chosen);

/// Most-uncovered-points-first, ties to the lowest center index.
/// Throws std::domain_error when the instance is infeasible.
Cover greedy_cover(const CoverInstance& inst);

/// Improves `start` by swaps that drop t chosen centers for at most t-1 new
/// ones (t <= swap_size) until none applies.
Cover local_search_cover(const CoverInstance& inst, const Cover& start, int swap_size = 2);

/// Minimum cover when one of size <= size_cap exists.
/// Throws std::domain_error when the instance is infeasible.
std::optional<Cover> exact_cover(const CoverInstance& inst, int size_cap);

}  // namespace geoburn
