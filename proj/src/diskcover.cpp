#include "geoburn/diskcover.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "geoburn/detail/setcover.hpp"

namespace geoburn {

namespace {

detail::SetSystem as_set_system(const CoverInstance& inst) {
  const std::size_t n = inst.points().size();
  std::vector<detail::Bitset> sets;
  sets.reserve(inst.centers().size());
  for (std::size_t c = 0; c < inst.centers().size(); ++c) {
    detail::Bitset s(n);
    for (int p : inst.covered_by(c)) s.set(static_cast<std::size_t>(p));
    sets.push_back(std::move(s));
  }
  return detail::SetSystem(n, std::move(sets));
}

void require_feasible(const CoverInstance& inst) {
  if (auto p = inst.first_unreachable()) {
    throw std::domain_error("cover instance infeasible: point " + std::to_string(*p) + " is outside every candidate disk");
  }
}

}  // namespace

CoverInstance::CoverInstance(PointSet points, std::vector<Point> centers, double rho)
    : points_(std::move(points)), centers_(std::move(centers)), rho_(rho) {
  if (!(rho_ >= 0.0)) throw std::invalid_argument("CoverInstance: radius must be nonnegative");
  covered_by_.resize(centers_.size());
  eligible_.resize(points_.size());

  // sweep over x so each center only looks at points in its vertical slab
  std::vector<int> by_x(points_.size());
  for (std::size_t i = 0; i < by_x.size(); ++i) by_x[i] = static_cast<int>(i);
  std::sort(by_x.begin(), by_x.end(), [&](int a, int b) { return points_[static_cast<std::size_t>(a)].x < points_[static_cast<std::size_t>(b)].x; });
  const double reach = rho_ + kDistanceTolerance;

  for (std::size_t c = 0; c < centers_.size(); ++c) {
    const Point& ctr = centers_[c];
    auto lo = std::lower_bound(by_x.begin(), by_x.end(), ctr.x - reach,
                               [&](int i, double v) { return points_[static_cast<std::size_t>(i)].x < v; });
    for (auto it = lo; it != by_x.end() && points_[static_cast<std::size_t>(*it)].x <= ctr.x + reach; ++it) {
      if (within(points_[static_cast<std::size_t>(*it)], ctr, rho_)) covered_by_[c].push_back(*it);
    }
    std::sort(covered_by_[c].begin(), covered_by_[c].end());
    for (int p : covered_by_[c]) eligible_[static_cast<std::size_t>(p)].push_back(static_cast<int>(c));
  }
}

bool CoverInstance::feasible() const { return !first_unreachable(); }

std::optional<std::size_t> CoverInstance::first_unreachable() const {
  for (std::size_t p = 0; p < eligible_.size(); ++p) {
    if (eligible_[p].empty()) return p;
  }
  return std::nullopt;
}

bool is_cover(const CoverInstance& inst, const std::vector<int>& chosen) {
  std::vector<char> hit(inst.points().size(), 0);
  for (int c : chosen) {
    if (c < 0 || static_cast<std::size_t>(c) >= inst.centers().size()) return false;
    for (int p : inst.covered_by(static_cast<std::size_t>(c))) hit[static_cast<std::size_t>(p)] = 1;
  }
  return std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
}

Cover greedy_cover(const CoverInstance& inst) {
  require_feasible(inst);
  return {detail::greedy_cover(as_set_system(inst)), false};
}

Cover local_search_cover(const CoverInstance& inst, const Cover& start, int swap_size) {
  return {detail::local_search_cover(as_set_system(inst), start.chosen, swap_size), false};
}

std::optional<Cover> exact_cover(const CoverInstance& inst, int size_cap) {
  require_feasible(inst);
  auto best = detail::exact_cover(as_set_system(inst), size_cap);
  if (!best) return std::nullopt;
  return Cover{std::move(*best), true};
}

}  // namespace geoburn
