#include "geoburn/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace geoburn {

namespace {

// Hash grid used for dedup. Cells are much wider than the tolerance, so
// near-duplicates always sit in the same or an adjacent cell.
class ProximityGrid {
 public:
  explicit ProximityGrid(double cell) : cell_(cell) {}

  // Returns true (and does not insert) if a stored point is within the
  // dedup tolerance of p.
  bool insert_unless_near(const Point& p) {
    const auto cx = cell_of(p.x);
    const auto cy = cell_of(p.y);
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        auto it = cells_.find(key(cx + dx, cy + dy));
        if (it == cells_.end()) continue;
        for (const Point& q : it->second) {
          if (same_point(p, q)) return true;
        }
      }
    }
    cells_[key(cx, cy)].push_back(p);
    return false;
  }

 private:
  std::int64_t cell_of(double v) const { return static_cast<std::int64_t>(std::floor(v / cell_)); }

  static std::uint64_t key(std::int64_t a, std::int64_t b) {
    // splitmix-style mixing of the two cell coordinates
    std::uint64_t h = static_cast<std::uint64_t>(a) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(b) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    return h;
  }

  double cell_;
  std::unordered_map<std::uint64_t, std::vector<Point>> cells_;
};

double grid_cell_for(std::span<const Point> pts) {
  double max_abs = 0.0;
  for (const Point& p : pts) max_abs = std::max({max_abs, std::abs(p.x), std::abs(p.y)});
  // keep cell indices well inside int64 range
  return std::max(1e-6, max_abs * 1e-9);
}

Circle circle_from(const Point& a, const Point& b) {
  const Point c = midpoint(a, b);
  return {c, std::max(distance(c, a), distance(c, b))};
}

Circle circle_from(const Point& a, const Point& b, const Point& c) {
  if (auto center = circumcenter(a, b, c)) {
    return {*center, std::max({distance(*center, a), distance(*center, b), distance(*center, c)})};
  }
  // collinear: the farthest pair spans the other point
  Circle best = circle_from(a, b);
  for (const Circle& cand : {circle_from(a, c), circle_from(b, c)}) {
    if (cand.radius > best.radius) best = cand;
  }
  return best;
}

bool inside(const Circle& c, const Point& p) {
  return distance(c.center, p) <= c.radius + 1e-12 * std::max(1.0, c.radius);
}

}  // namespace

bool Circle::contains(const Point& p, double tolerance) const {
  return distance(center, p) <= radius + tolerance;
}

double distance_squared(const Point& p, const Point& q) {
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  return dx * dx + dy * dy;
}

double distance(const Point& p, const Point& q) { return std::hypot(p.x - q.x, p.y - q.y); }

bool within(const Point& p, const Point& q, double r) { return distance(p, q) <= r + kDistanceTolerance; }

bool same_point(const Point& p, const Point& q) { return distance(p, q) <= kDedupTolerance; }

Point midpoint(const Point& a, const Point& b) { return {(a.x + b.x) / 2.0, (a.y + b.y) / 2.0}; }

std::optional<Point> circumcenter(const Point& a, const Point& b, const Point& c) {
  const double bx = b.x - a.x;
  const double by = b.y - a.y;
  const double cx = c.x - a.x;
  const double cy = c.y - a.y;
  const double cross = bx * cy - by * cx;
  if (std::abs(cross) / 2.0 <= kCollinearArea) return std::nullopt;
  const double b2 = bx * bx + by * by;
  const double c2 = cx * cx + cy * cy;
  const double d = 2.0 * cross;
  return Point{a.x + (cy * b2 - by * c2) / d, a.y + (bx * c2 - cx * b2) / d};
}

Circle smallest_enclosing_circle(std::span<const Point> pts) {
  if (pts.empty()) throw std::invalid_argument("smallest_enclosing_circle: empty point list");

  std::vector<Point> p(pts.begin(), pts.end());
  std::mt19937_64 rng(0x5EC0C1C1E5EEDULL);
  std::shuffle(p.begin(), p.end(), rng);

  Circle c{p[0], 0.0};
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (inside(c, p[i])) continue;
    c = {p[i], 0.0};
    for (std::size_t j = 0; j < i; ++j) {
      if (inside(c, p[j])) continue;
      c = circle_from(p[i], p[j]);
      for (std::size_t k = 0; k < j; ++k) {
        if (!inside(c, p[k])) c = circle_from(p[i], p[j], p[k]);
      }
    }
    // move-to-front: the new support point is checked first from now on
    std::rotate(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(i), p.begin() + static_cast<std::ptrdiff_t>(i) + 1);
  }
  return c;
}

std::vector<Point> dedup_points(std::span<const Point> pts, std::size_t* removed) {
  ProximityGrid grid(grid_cell_for(pts));
  std::vector<Point> out;
  out.reserve(pts.size());
  for (const Point& p : pts) {
    if (!grid.insert_unless_near(p)) out.push_back(p);
  }
  if (removed) *removed = pts.size() - out.size();
  return out;
}

PointSet::PointSet(std::vector<Point> points, std::size_t* duplicates_removed) {
  for (const Point& p : points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw std::invalid_argument("PointSet: non-finite coordinate");
    }
  }
  points_ = dedup_points(points, duplicates_removed);
}

std::optional<std::size_t> PointSet::find(const Point& p) const {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (same_point(points_[i], p)) return i;
  }
  return std::nullopt;
}

std::vector<Point> candidate_centers(const PointSet& P) {
  const std::size_t n = P.size();
  std::vector<Point> all(P.begin(), P.end());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) all.push_back(midpoint(P[i], P[j]));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (auto c = circumcenter(P[i], P[j], P[k])) all.push_back(*c);
      }
    }
  }
  return dedup_points(all);
}

}  // namespace geoburn
