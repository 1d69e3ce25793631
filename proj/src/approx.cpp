#include "geoburn/approx.hpp"

#include <cassert>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "geoburn/diskcover.hpp"
#include "geoburn/domset.hpp"

namespace geoburn {

std::string_view to_string(Subsolver s) {
  switch (s) {
    case Subsolver::Exact: return "exact";
    case Subsolver::Greedy: return "greedy";
    case Subsolver::LocalSearch: return "localsearch";
  }
  return "?";
}

Subsolver parse_subsolver(std::string_view s) {
  if (s == "exact") return Subsolver::Exact;
  if (s == "greedy") return Subsolver::Greedy;
  if (s == "localsearch") return Subsolver::LocalSearch;
  throw std::invalid_argument("unknown subsolver '" + std::string(s) + "' (expected exact|greedy|localsearch)");
}

void ApproxConfig::validate() const {
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) throw std::invalid_argument("epsilon must be a nonnegative number");
  if (epsilon == 0.0 && subsolver != Subsolver::Exact) {
    throw std::invalid_argument("epsilon = 0 requires the exact subsolver");
  }
  if (swap_size < 1) throw std::invalid_argument("swap size must be positive");
}

namespace {

// Sub-solution for guess δ as indices into the source domain. Empty when the
// solver proved nothing of size <= cap exists.
using GuessSolver = std::function<std::optional<std::vector<int>>(int delta, int cap)>;

ApproxResult guess_and_stop(const PointSet& P, std::span<const Point> domain, Model model, const ApproxConfig& cfg,
                            const GuessSolver& solve) {
  const int n = static_cast<int>(P.size());
  const double slack = 1.0 + cfg.epsilon;

  ApproxResult res;
  if (cfg.subsolver == Subsolver::Exact) res.certified_ratio = 2.0 + cfg.epsilon;

  for (int delta = 1; delta <= n; ++delta) {
    const double bound = slack * delta;
    const int cap = static_cast<int>(std::floor(bound + 1e-9));
    auto chosen = solve(delta, cap);

    GuessRecord rec{delta, std::nullopt, false};
    if (chosen) rec.subsolution_size = chosen->size();
    rec.accepted = chosen && static_cast<double>(chosen->size()) <= bound + 1e-9;
    res.trace.push_back(rec);
    if (!rec.accepted) continue;

    res.guess_delta = delta;
    res.schedule.model = model;
    for (int idx : *chosen) res.schedule.sources.push_back(domain[static_cast<std::size_t>(idx)]);

    // every point is within δ-1 of a source, so δ-1 more steps finish it
    const int budget = static_cast<int>(chosen->size()) + delta - 1;
    if (cfg.early_stop) {
      const BurnReport report = simulate(P, res.schedule, budget);
      assert(report.all_burned());
      res.steps_used = report.steps;
      if (static_cast<int>(res.schedule.sources.size()) > report.steps) {
        res.schedule.sources.resize(static_cast<std::size_t>(report.steps));
      }
    } else {
      res.steps_used = budget;
    }
    return res;
  }
  // At δ = n every point can be its own source, so some guess was accepted.
  assert(false && "guess loop ran past delta = n");
  throw std::logic_error("guess loop ran past delta = n");
}

}  // namespace

ApproxResult approx_point_burning(const PointSet& P, const ApproxConfig& cfg) {
  if (P.empty()) throw std::invalid_argument("approx_point_burning: empty point set");
  cfg.validate();

  return guess_and_stop(P, P.points(), Model::Point, cfg, [&](int delta, int cap) -> std::optional<std::vector<int>> {
    const UnitDiskGraph G = build_udg(P, delta - 1);
    switch (cfg.subsolver) {
      case Subsolver::Exact: {
        auto d = exact_dominating_set(G, std::max(cap, 1));
        if (!d) return std::nullopt;
        return d->vertices;
      }
      case Subsolver::Greedy:
        return greedy_dominating_set(G).vertices;
      case Subsolver::LocalSearch:
        return local_search_dominating_set(G, greedy_dominating_set(G), cfg.swap_size).vertices;
    }
    return std::nullopt;
  });
}

ApproxResult approx_anywhere_burning(const PointSet& P, const ApproxConfig& cfg) {
  if (P.empty()) throw std::invalid_argument("approx_anywhere_burning: empty point set");
  cfg.validate();

  const std::vector<Point> centers = candidate_centers(P);
  return guess_and_stop(P, centers, Model::Anywhere, cfg, [&](int delta, int cap) -> std::optional<std::vector<int>> {
    const CoverInstance inst(P, centers, delta - 1);
    switch (cfg.subsolver) {
      case Subsolver::Exact: {
        auto c = exact_cover(inst, std::max(cap, 1));
        if (!c) return std::nullopt;
        return c->chosen;
      }
      case Subsolver::Greedy:
        return greedy_cover(inst).chosen;
      case Subsolver::LocalSearch:
        return local_search_cover(inst, greedy_cover(inst), cfg.swap_size).chosen;
    }
    return std::nullopt;
  });
}

}  // namespace geoburn
