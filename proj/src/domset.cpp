#include "geoburn/domset.hpp"

#include <algorithm>
#include <stdexcept>

#include "geoburn/detail/setcover.hpp"

namespace geoburn {

namespace {

detail::SetSystem closed_neighborhoods(const UnitDiskGraph& G) {
  const std::size_t n = G.size();
  std::vector<detail::Bitset> sets;
  sets.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    detail::Bitset nb(n);
    nb.set(v);
    for (int u : G.adjacency[v]) nb.set(static_cast<std::size_t>(u));
    sets.push_back(std::move(nb));
  }
  return detail::SetSystem(n, std::move(sets));
}

}  // namespace

std::size_t UnitDiskGraph::edge_count() const {
  std::size_t deg = 0;
  for (const auto& nb : adjacency) deg += nb.size();
  return deg / 2;
}

bool UnitDiskGraph::adjacent(int u, int v) const {
  const auto& nb = adjacency.at(static_cast<std::size_t>(u));
  return std::binary_search(nb.begin(), nb.end(), v);
}

UnitDiskGraph build_udg(const PointSet& P, double k) {
  if (!(k >= 0.0)) throw std::invalid_argument("build_udg: threshold must be nonnegative");
  UnitDiskGraph G;
  G.k = k;
  G.adjacency.resize(P.size());
  for (std::size_t u = 0; u < P.size(); ++u) {
    for (std::size_t v = u + 1; v < P.size(); ++v) {
      if (within(P[u], P[v], k)) {
        G.adjacency[u].push_back(static_cast<int>(v));
        G.adjacency[v].push_back(static_cast<int>(u));
      }
    }
  }
  // v is visited in increasing order for both endpoints, so lists are sorted
  return G;
}

bool is_dominating(const UnitDiskGraph& G, const std::vector<int>& vertices) {
  std::vector<char> dominated(G.size(), 0);
  for (int v : vertices) {
    if (v < 0 || static_cast<std::size_t>(v) >= G.size()) return false;
    dominated[static_cast<std::size_t>(v)] = 1;
    for (int u : G.adjacency[static_cast<std::size_t>(v)]) dominated[static_cast<std::size_t>(u)] = 1;
  }
  return std::all_of(dominated.begin(), dominated.end(), [](char c) { return c != 0; });
}

DominatingSet greedy_dominating_set(const UnitDiskGraph& G) {
  return {detail::greedy_cover(closed_neighborhoods(G)), false};
}

std::optional<DominatingSet> exact_dominating_set(const UnitDiskGraph& G, int size_cap) {
  if (size_cap < 1) throw std::invalid_argument("exact_dominating_set: size cap must be positive");
  auto best = detail::exact_cover(closed_neighborhoods(G), size_cap);
  if (!best) return std::nullopt;
  return DominatingSet{std::move(*best), true};
}

DominatingSet exact_dominating_set(const UnitDiskGraph& G) {
  return *exact_dominating_set(G, std::max<int>(1, static_cast<int>(G.size())));
}

DominatingSet local_search_dominating_set(const UnitDiskGraph& G, const DominatingSet& start, int swap_size) {
  return {detail::local_search_cover(closed_neighborhoods(G), start.vertices, swap_size), false};
}

}  // namespace geoburn
