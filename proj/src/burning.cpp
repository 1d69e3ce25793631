#include "geoburn/burning.hpp"

#include <algorithm>
#include <string>

namespace geoburn {

std::string_view to_string(Model m) { return m == Model::Point ? "point" : "anywhere"; }

Model parse_model(std::string_view s) {
  if (s == "point") return Model::Point;
  if (s == "anywhere") return Model::Anywhere;
  throw std::invalid_argument("unknown model '" + std::string(s) + "' (expected point|anywhere)");
}

bool BurnReport::all_burned() const {
  return std::all_of(burned_at.begin(), burned_at.end(), [](const auto& t) { return t.has_value(); });
}

bool is_model_valid(const PointSet& P, const Schedule& s) {
  if (s.model == Model::Anywhere) return true;
  return std::all_of(s.sources.begin(), s.sources.end(), [&](const Point& p) { return P.find(p).has_value(); });
}

BurnReport simulate(const PointSet& P, const Schedule& s, int max_steps, SimulateOptions opts) {
  const int k = static_cast<int>(s.sources.size());
  if (max_steps < 1) throw std::invalid_argument("simulate: max_steps must be positive");
  if (max_steps < k) throw std::invalid_argument("simulate: more sources than steps");
  if (!is_model_valid(P, s)) throw InvalidSchedule("point-model source is not a point of the instance");

  BurnReport r;
  r.burned_at.assign(P.size(), std::nullopt);
  std::size_t remaining = P.size();

  for (int t = 1; t <= max_steps; ++t) {
    const int active = std::min(t, k);
    if (opts.strict_sources && t <= k) {
      // after this step's spread, earlier source i has radius t - i
      const Point& src = s.sources[static_cast<std::size_t>(t - 1)];
      for (int i = 1; i < t; ++i) {
        if (within(src, s.sources[static_cast<std::size_t>(i - 1)], t - i)) {
          throw InvalidSchedule("source " + std::to_string(t) + " ignites on already burnt ground");
        }
      }
    }
    for (std::size_t q = 0; q < P.size(); ++q) {
      if (r.burned_at[q]) continue;
      for (int j = 1; j <= active; ++j) {
        if (within(P[q], s.sources[static_cast<std::size_t>(j - 1)], t - j)) {
          r.burned_at[q] = t;
          --remaining;
          break;
        }
      }
    }
    r.steps = t;
    r.sources_started.push_back(active);
    r.max_radius.push_back(t - 1);
    if (remaining == 0) break;
  }
  return r;
}

std::optional<std::size_t> first_uncovered(const PointSet& P, std::span<const Point> sources, int b) {
  if (static_cast<long>(sources.size()) > b) throw std::invalid_argument("covers: more sources than steps");
  for (std::size_t q = 0; q < P.size(); ++q) {
    bool hit = false;
    for (std::size_t j = 0; j < sources.size() && !hit; ++j) {
      hit = within(P[q], sources[j], b - static_cast<int>(j) - 1);
    }
    if (!hit) return q;
  }
  return std::nullopt;
}

bool covers(const PointSet& P, std::span<const Point> sources, int b) { return !first_uncovered(P, sources, b); }

bool verify_schedule(const PointSet& P, const Schedule& s, int b) {
  if (b < 1 || static_cast<long>(s.sources.size()) > b) return false;
  if (!is_model_valid(P, s)) return false;
  return simulate(P, s, b).all_burned();
}

bool satisfies_step_invariants(const BurnReport& r) {
  if (static_cast<int>(r.sources_started.size()) != r.steps) return false;
  if (static_cast<int>(r.max_radius.size()) != r.steps) return false;
  for (int i = 1; i <= r.steps; ++i) {
    const auto idx = static_cast<std::size_t>(i - 1);
    if (r.sources_started[idx] > i || r.max_radius[idx] != i - 1) return false;
    if (idx > 0 && r.sources_started[idx] < r.sources_started[idx - 1]) return false;
  }
  for (const auto& t : r.burned_at) {
    if (t && (*t < 1 || *t > r.steps)) return false;
  }
  return true;
}

}  // namespace geoburn
