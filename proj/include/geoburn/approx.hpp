#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "geoburn/burning.hpp"
#include "geoburn/geometry.hpp"

namespace geoburn {

enum class Subsolver { Exact, Greedy, LocalSearch };

std::string_view to_string(Subsolver s);
Subsolver parse_subsolver(std::string_view s);

struct ApproxConfig {
  /// Slack of the sub-solver guarantee. Zero only makes sense for Exact.
  double epsilon = 0.0;
  Subsolver subsolver = Subsolver::Exact;
  /// Stop spreading as soon as everything is burnt.
  bool early_stop = true;
  /// Local-search swap size.
  int swap_size = 2;

  /// Throws std::invalid_argument on a negative epsilon, a zero epsilon with
  /// a heuristic sub-solver, or swap_size < 1.
  void validate() const;
};

/// One δ of the guess loop. `subsolution_size` is empty when the exact
/// sub-solver proved the optimum exceeds the acceptance bound.
struct GuessRecord {
  int delta = 0;
  std::optional<std::size_t> subsolution_size;
  bool accepted = false;
};

struct ApproxResult {
  Schedule schedule;
  int steps_used = 0;
  int guess_delta = 0;
  /// 2 + epsilon when the sub-solver is exact; empty means heuristic.
  std::optional<double> certified_ratio;
  std::vector<GuessRecord> trace;
};

/// Guess δ = 1, 2, ...; dominate G_{δ-1}; accept once the dominating set has
/// at most (1+ε)δ vertices. Those vertices are the sources, followed by up to
/// δ-1 spread-only steps. Throws std::invalid_argument on an empty P.
ApproxResult approx_point_burning(const PointSet& P, const ApproxConfig& cfg = {});

/// Same loop over radius-(δ-1) disks centred at candidate_centers(P).
ApproxResult approx_anywhere_burning(const PointSet& P, const ApproxConfig& cfg = {});

}  // namespace geoburn
