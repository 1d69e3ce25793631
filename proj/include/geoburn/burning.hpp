#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "geoburn/geometry.hpp"

namespace geoburn {

enum class Model { Point, Anywhere };

std::string_view to_string(Model m);
/// Accepts "point" and "anywhere". Throws std::invalid_argument otherwise.
Model parse_model(std::string_view s);

/// Source j (1-based) ignites at step j. Steps past the last source only
/// spread the fire.
struct Schedule {
  Model model = Model::Point;
  std::vector<Point> sources;
};

/// Raised by simulate() for schedules that break the rules of their model.
class InvalidSchedule : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Step-by-step record of a burning run. Vectors indexed by step - 1.
struct BurnReport {
  int steps = 0;
  /// First step at which point i burned; empty if it never did.
  std::vector<std::optional<int>> burned_at;
  /// Number of sources ignited so far (B_i).
  std::vector<int> sources_started;
  /// Largest burning radius (R_i).
  std::vector<int> max_radius;

  bool all_burned() const;
};

struct SimulateOptions {
  /// Reject a source that is already burnt when it ignites.
  bool strict_sources = false;
};

/// True when `s` respects its model: point-model sources must be points of P.
bool is_model_valid(const PointSet& P, const Schedule& s);

/// Runs the burning process for at most max_steps steps, stopping at the
/// first step by which every point is burnt.
/// Throws InvalidSchedule for model violations (and, in strict mode, for
/// sources igniting on burnt ground), std::invalid_argument if
/// max_steps < 1 or max_steps < |sources|.
BurnReport simulate(const PointSet& P, const Schedule& s, int max_steps, SimulateOptions opts = {});

/// Coverage form of "burns everything within b steps": each point is within
/// b - j of sources[j-1] for some j. Throws if |sources| > b.
bool covers(const PointSet& P, std::span<const Point> sources, int b);

/// Index of the first point not covered at step b, if any.
std::optional<std::size_t> first_uncovered(const PointSet& P, std::span<const Point> sources, int b);

/// Model-valid and fully burnt within b steps. Never throws.
bool verify_schedule(const PointSet& P, const Schedule& s, int b);

/// B_i <= i and R_i = i - 1 for every recorded step.
bool satisfies_step_invariants(const BurnReport& r);

}  // namespace geoburn
