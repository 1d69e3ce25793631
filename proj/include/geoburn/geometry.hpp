#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace geoburn {

/// Two points closer than this are the same point.
inline constexpr double kDedupTolerance = 1e-9;
/// Slack on every "within distance r" test.
inline constexpr double kDistanceTolerance = 1e-9;
/// Triples whose signed area is at most this are treated as collinear.
inline constexpr double kCollinearArea = 1e-12;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

struct Circle {
  Point center;
  double radius = 0.0;

  bool contains(const Point& p, double tolerance = kDistanceTolerance) const;
};

double distance(const Point& p, const Point& q);
double distance_squared(const Point& p, const Point& q);

/// Within `r` of each other, closed ball plus the usual slack.
bool within(const Point& p, const Point& q, double r);

bool same_point(const Point& p, const Point& q);

Point midpoint(const Point& a, const Point& b);

/// Center of the circle through a, b and c. Empty for collinear triples.
std::optional<Point> circumcenter(const Point& a, const Point& b, const Point& c);

/// Minimum enclosing circle, randomized incremental with move-to-front.
/// The shuffle uses a fixed seed, so the result is a pure function of `pts`.
/// Throws std::invalid_argument on empty input.
Circle smallest_enclosing_circle(std::span<const Point> pts);

/// Removes near-duplicates (kDedupTolerance), keeping first occurrences in
/// input order. Runs in expected O(n) using a hash grid.
std::vector<Point> dedup_points(std::span<const Point> pts, std::size_t* removed = nullptr);

/// An ordered, duplicate-free set of finite points. Index i is the identity
/// of point i everywhere else in the library.
class PointSet {
 public:
  PointSet() = default;

  /// Validates finiteness (std::invalid_argument otherwise) and deduplicates.
  explicit PointSet(std::vector<Point> points, std::size_t* duplicates_removed = nullptr);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  std::span<const Point> points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  /// Index of the member coinciding with `p`, if any.
  std::optional<std::size_t> find(const Point& p) const;

 private:
  std::vector<Point> points_;
};

/// Every point of P, midpoints of all pairs and circumcenters of all
/// non-collinear triples, deduplicated. Order: points, then pairs (i<j)
/// lexicographically, then triples (i<j<k).
std::vector<Point> candidate_centers(const PointSet& P);

}  // namespace geoburn
