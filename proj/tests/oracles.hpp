#pragma once

// Brute-force references for the tests. Nothing here calls the solvers it
// is used to check; only geometry primitives are shared.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "geoburn/geometry.hpp"
#include "geoburn/instances.hpp"

namespace oracle {

using geoburn::Point;
using geoburn::PointSet;

inline bool near(const Point& a, const Point& b, double r) { return std::hypot(a.x - b.x, a.y - b.y) <= r + 1e-9; }

// Smallest circle among pair diameters and triple circumcircles that covers
// every point. Radius only.
inline double sec_radius(const std::vector<Point>& pts) {
  if (pts.size() == 1) return 0.0;
  double best = INFINITY;
  auto consider = [&](Point c, double r) {
    for (const Point& p : pts) {
      if (std::hypot(p.x - c.x, p.y - c.y) > r + 1e-9 * std::max(1.0, r)) return;
    }
    best = std::min(best, r);
  };
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Point m{(pts[i].x + pts[j].x) / 2, (pts[i].y + pts[j].y) / 2};
      consider(m, std::hypot(pts[i].x - m.x, pts[i].y - m.y));
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        const Point &a = pts[i], &b = pts[j], &c = pts[k];
        const double d = 2 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
        if (std::abs(d) < 1e-12) continue;
        const double a2 = a.x * a.x + a.y * a.y, b2 = b.x * b.x + b.y * b.y, c2 = c.x * c.x + c.y * c.y;
        Point o{(a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d,
                (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d};
        consider(o, std::max({std::hypot(a.x - o.x, a.y - o.y), std::hypot(b.x - o.x, b.y - o.y),
                              std::hypot(c.x - o.x, c.y - o.y)}));
      }
    }
  }
  return best;
}

// Coverage check written out directly from the definition.
inline bool sequence_burns(const PointSet& P, const std::vector<Point>& seq, int b) {
  for (const Point& q : P) {
    bool hit = false;
    for (std::size_t j = 0; j < seq.size() && !hit; ++j) hit = near(q, seq[j], b - 1.0 - static_cast<double>(j));
    if (!hit) return false;
  }
  return true;
}

// Burning number by enumerating every length-b sequence over `domain`.
inline int burning_number_by_enumeration(const PointSet& P, const std::vector<Point>& domain) {
  const std::size_t m = domain.size();
  for (int b = 1;; ++b) {
    std::vector<std::size_t> idx(static_cast<std::size_t>(b), 0);
    std::vector<Point> seq(static_cast<std::size_t>(b));
    while (true) {
      for (int j = 0; j < b; ++j) seq[static_cast<std::size_t>(j)] = domain[idx[static_cast<std::size_t>(j)]];
      if (sequence_burns(P, seq, b)) return b;
      int pos = b - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - 1) idx[static_cast<std::size_t>(pos--)] = 0;
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
    }
  }
}

// Candidate centres spelled out independently of geoburn::candidate_centers.
inline std::vector<Point> all_centers(const PointSet& P) {
  std::vector<Point> c(P.begin(), P.end());
  const std::size_t n = P.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      c.push_back({(P[i].x + P[j].x) / 2, (P[i].y + P[j].y) / 2});
      for (std::size_t k = j + 1; k < n; ++k) {
        const Point &a = P[i], &b = P[j], &d = P[k];
        const double den = 2 * (a.x * (b.y - d.y) + b.x * (d.y - a.y) + d.x * (a.y - b.y));
        if (std::abs(den) < 1e-12) continue;
        const double a2 = a.x * a.x + a.y * a.y, b2 = b.x * b.x + b.y * b.y, d2 = d.x * d.x + d.y * d.y;
        c.push_back({(a2 * (b.y - d.y) + b2 * (d.y - a.y) + d2 * (a.y - b.y)) / den,
                     (a2 * (d.x - b.x) + b2 * (a.x - d.x) + d2 * (b.x - a.x)) / den});
      }
    }
  }
  return c;
}

// Minimum number of sets whose union is everything, by enumerating
// combinations of increasing size. Masks over <= 64 elements.
inline std::optional<int> min_cover_by_enumeration(std::vector<std::uint64_t> sets, int universe) {
  const std::uint64_t all = universe == 64 ? ~0ULL : ((1ULL << universe) - 1);
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::uint64_t reach = 0;
  for (auto s : sets) reach |= s;
  if (reach != all) return std::nullopt;
  if (universe == 0) return 0;
  const int m = static_cast<int>(sets.size());
  for (int k = 1; k <= m; ++k) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
      std::uint64_t u = 0;
      for (int i : idx) u |= sets[static_cast<std::size_t>(i)];
      if (u == all) return k;
      int i = k - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return std::nullopt;
}

// Minimum dominating set of the threshold graph on P at distance k, over
// all 2^n vertex subsets.
inline int min_dominating_set_by_enumeration(const PointSet& P, double k) {
  const int n = static_cast<int>(P.size());
  std::vector<std::uint64_t> closed(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v || near(P[static_cast<std::size_t>(u)], P[static_cast<std::size_t>(v)], k)) {
        closed[static_cast<std::size_t>(u)] |= 1ULL << v;
      }
    }
  }
  const std::uint64_t all = (1ULL << n) - 1;
  int best = n;
  for (std::uint64_t sub = 1; sub <= all; ++sub) {
    const int size = __builtin_popcountll(sub);
    if (size >= best) continue;
    std::uint64_t dom = 0;
    for (int v = 0; v < n; ++v) {
      if (sub >> v & 1) dom |= closed[static_cast<std::size_t>(v)];
    }
    if (dom == all) best = size;
  }
  return best;
}

inline std::uint64_t disk_mask(const PointSet& P, const Point& c, double r) {
  std::uint64_t m = 0;
  for (std::size_t q = 0; q < P.size(); ++q) {
    if (near(P[q], c, r)) m |= 1ULL << q;
  }
  return m;
}

// Can radii b-1..0, each used at most once, be placed on the given per-radius
// coverage masks so everything is covered?
inline bool radii_cover(const std::vector<std::vector<std::uint64_t>>& masks_by_radius, std::uint64_t uncovered,
                        std::vector<char>& used) {
  if (!uncovered) return true;
  const int q = __builtin_ctzll(uncovered);
  for (std::size_t r = 0; r < masks_by_radius.size(); ++r) {
    if (used[r]) continue;
    used[r] = 1;
    for (std::uint64_t m : masks_by_radius[r]) {
      if ((m >> q & 1) && radii_cover(masks_by_radius, uncovered & ~m, used)) {
        used[r] = 0;
        return true;
      }
    }
    used[r] = 0;
  }
  return false;
}

// Anywhere burning within b steps with sources on a square grid of the given
// pitch over the bounding box of P.
inline bool grid_burns(const PointSet& P, int b, double pitch) {
  double x0 = P[0].x, x1 = P[0].x, y0 = P[0].y, y1 = P[0].y;
  for (const Point& p : P) {
    x0 = std::min(x0, p.x), x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y), y1 = std::max(y1, p.y);
  }
  std::vector<std::vector<std::uint64_t>> masks(static_cast<std::size_t>(b));
  for (int r = 0; r < b; ++r) {
    std::set<std::uint64_t> distinct;
    for (double x = x0; x <= x1 + 1e-12; x += pitch) {
      for (double y = y0; y <= y1 + 1e-12; y += pitch) {
        if (auto m = disk_mask(P, {x, y}, r)) distinct.insert(m);
      }
    }
    masks[static_cast<std::size_t>(r)].assign(distinct.begin(), distinct.end());
  }
  std::vector<char> used(static_cast<std::size_t>(b), 0);
  const std::uint64_t all = (1ULL << P.size()) - 1;
  return radii_cover(masks, all, used);
}

// Random point set for property tests.
inline PointSet random_points(geoburn::Rng& rng, int n, double box) {
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) {
    const double x = rng.uniform(0, box);
    const double y = rng.uniform(0, box);
    pts.push_back({x, y});
  }
  return PointSet(std::move(pts));
}

inline PointSet line7() {
  std::vector<Point> pts;
  for (int k = 0; k <= 6; ++k) pts.push_back({static_cast<double>(k), 0.0});
  return PointSet(pts);
}

}  // namespace oracle
