#include "geoburn/exact.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "geoburn/detail/bitset.hpp"

namespace geoburn {

namespace {

using detail::Bitset;

struct Disk {
  Bitset mask;
  int center = 0;  // index into the domain
};

// Disks of one radius with duplicate and dominated coverage sets removed.
std::vector<Disk> reduced_disks(const PointSet& P, std::span<const Point> domain, int radius) {
  std::vector<Disk> all;
  all.reserve(domain.size());
  for (std::size_t c = 0; c < domain.size(); ++c) {
    Bitset m(P.size());
    for (std::size_t q = 0; q < P.size(); ++q) {
      if (within(P[q], domain[c], radius)) m.set(q);
    }
    if (m.any()) all.push_back({std::move(m), static_cast<int>(c)});
  }
  // larger sets first so a kept disk can only be dominated by an earlier one
  std::stable_sort(all.begin(), all.end(), [](const Disk& a, const Disk& b) { return a.mask.count() > b.mask.count(); });
  std::vector<Disk> kept;
  for (Disk& d : all) {
    const bool dominated =
        std::any_of(kept.begin(), kept.end(), [&](const Disk& k) { return d.mask.is_subset_of(k.mask); });
    if (!dominated) kept.push_back(std::move(d));
  }
  return kept;
}

class BurnSearch {
 public:
  BurnSearch(const PointSet& P, std::span<const Point> domain, int b) : P_(P), b_(b), assigned_(static_cast<std::size_t>(b), -1) {
    disks_.reserve(static_cast<std::size_t>(b));
    for (int r = 0; r < b; ++r) {
      disks_.push_back(reduced_disks(P, domain, r));
      std::size_t best = 0;
      for (const Disk& d : disks_.back()) best = std::max(best, d.mask.count());
      max_cover_.push_back(best);
    }
  }

  bool run() { return expand(Bitset::full(P_.size())); }

  // radius -> domain index, -1 where unused
  const std::vector<int>& assignment() const { return assigned_; }
  std::uint64_t nodes = 0;

 private:
  bool expand(const Bitset& uncovered) {
    ++nodes;
    if (uncovered.none()) return true;

    std::size_t capacity = 0;
    for (int r = 0; r < b_; ++r) {
      if (assigned_[static_cast<std::size_t>(r)] < 0) capacity += max_cover_[static_cast<std::size_t>(r)];
    }
    if (uncovered.count() > capacity) return false;

    // the lowest uncovered point must end up in one of the free disks
    const std::size_t q = uncovered.first();
    for (int r = b_ - 1; r >= 0; --r) {
      const auto ri = static_cast<std::size_t>(r);
      if (assigned_[ri] >= 0) continue;

      std::vector<std::pair<std::size_t, const Disk*>> branches;
      for (const Disk& d : disks_[ri]) {
        if (d.mask.test(q)) branches.emplace_back(d.mask.intersect_count(uncovered), &d);
      }
      std::stable_sort(branches.begin(), branches.end(), [](const auto& a, const auto& c) { return a.first > c.first; });

      for (const auto& [gain, disk] : branches) {
        Bitset rest = uncovered;
        rest.subtract(disk->mask);
        assigned_[ri] = disk->center;
        if (expand(rest)) return true;
        assigned_[ri] = -1;
      }
    }
    return false;
  }

  const PointSet& P_;
  int b_;
  std::vector<std::vector<Disk>> disks_;
  std::vector<std::size_t> max_cover_;
  std::vector<int> assigned_;
};

}  // namespace

std::optional<ExactResult> exact_burning(const PointSet& P, std::span<const Point> domain, Model model, int b_max) {
  if (P.empty()) throw std::invalid_argument("exact burning: empty point set");
  if (b_max < 1) throw std::invalid_argument("exact burning: b_max must be positive");

  std::uint64_t nodes = 0;
  for (int b = 1; b <= b_max; ++b) {
    BurnSearch search(P, domain, b);
    const bool found = search.run();
    nodes += search.nodes;
    if (!found) continue;

    // Used disks go to the earliest steps, largest first. Moving a source to
    // an earlier step only grows its final radius.
    ExactResult res;
    res.burning_number = b;
    res.schedule.model = model;
    for (int r = b - 1; r >= 0; --r) {
      const int c = search.assignment()[static_cast<std::size_t>(r)];
      if (c >= 0) res.schedule.sources.push_back(domain[static_cast<std::size_t>(c)]);
    }
    res.nodes_explored = nodes;
    assert(covers(P, res.schedule.sources, b));
    return res;
  }
  return std::nullopt;
}

std::optional<ExactResult> exact_point_burning(const PointSet& P, int b_max) {
  return exact_burning(P, P.points(), Model::Point, b_max);
}

ExactResult exact_point_burning(const PointSet& P) {
  return *exact_point_burning(P, static_cast<int>(P.size()));
}

std::optional<ExactResult> exact_anywhere_burning(const PointSet& P, int b_max) {
  const std::vector<Point> domain = candidate_centers(P);
  return exact_burning(P, domain, Model::Anywhere, b_max);
}

ExactResult exact_anywhere_burning(const PointSet& P) {
  return *exact_anywhere_burning(P, static_cast<int>(P.size()));
}

std::vector<std::vector<int>> path_forest_graph(std::span<const int> path_lengths) {
  std::vector<std::vector<int>> adj;
  for (int len : path_lengths) {
    if (len < 1) throw std::invalid_argument("path_forest_graph: path lengths must be positive");
    const int base = static_cast<int>(adj.size());
    adj.resize(adj.size() + static_cast<std::size_t>(len));
    for (int i = 0; i + 1 < len; ++i) {
      adj[static_cast<std::size_t>(base + i)].push_back(base + i + 1);
      adj[static_cast<std::size_t>(base + i + 1)].push_back(base + i);
    }
  }
  return adj;
}

int graph_burning_number(const std::vector<std::vector<int>>& adjacency) {
  const int n = static_cast<int>(adjacency.size());
  if (n == 0) throw std::invalid_argument("graph_burning_number: empty graph");

  constexpr int kUnreachable = 1 << 29;
  std::vector<std::vector<int>> dist(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), kUnreachable));
  for (int s = 0; s < n; ++s) {
    auto& d = dist[static_cast<std::size_t>(s)];
    std::deque<int> queue{s};
    d[static_cast<std::size_t>(s)] = 0;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : adjacency[static_cast<std::size_t>(u)]) {
        if (d[static_cast<std::size_t>(v)] == kUnreachable) {
          d[static_cast<std::size_t>(v)] = d[static_cast<std::size_t>(u)] + 1;
          queue.push_back(v);
        }
      }
    }
  }

  // Sequences of exactly b sources suffice: extra sources never hurt.
  for (int b = 1;; ++b) {
    std::vector<int> seq(static_cast<std::size_t>(b), 0);
    while (true) {
      bool all = true;
      for (int v = 0; v < n && all; ++v) {
        bool hit = false;
        for (int j = 0; j < b && !hit; ++j) {
          hit = dist[static_cast<std::size_t>(seq[static_cast<std::size_t>(j)])][static_cast<std::size_t>(v)] <= b - 1 - j;
        }
        all = hit;
      }
      if (all) return b;
      int pos = b - 1;
      while (pos >= 0 && seq[static_cast<std::size_t>(pos)] == n - 1) seq[static_cast<std::size_t>(pos--)] = 0;
      if (pos < 0) break;
      ++seq[static_cast<std::size_t>(pos)];
    }
  }
}

}  // namespace geoburn
