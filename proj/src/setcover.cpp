#include "geoburn/detail/setcover.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <stdexcept>

namespace geoburn::detail {

SetSystem::SetSystem(std::size_t universe_size, std::vector<Bitset> family)
    : universe(universe_size), sets(std::move(family)), containing(universe_size) {
  for (std::size_t s = 0; s < sets.size(); ++s) {
    if (sets[s].size() != universe) throw std::invalid_argument("SetSystem: set width does not match universe");
    for (std::size_t e = sets[s].first(); e < universe; e = sets[s].next(e)) {
      containing[e].push_back(static_cast<int>(s));
    }
  }
}

bool SetSystem::feasible() const {
  return std::none_of(containing.begin(), containing.end(), [](const auto& c) { return c.empty(); });
}

Bitset SetSystem::coverage(std::span<const int> chosen) const {
  Bitset cov(universe);
  for (int s : chosen) cov |= sets[static_cast<std::size_t>(s)];
  return cov;
}

bool SetSystem::is_cover(std::span<const int> chosen) const { return coverage(chosen).count() == universe; }

std::vector<int> greedy_cover(const SetSystem& sys) {
  assert(sys.feasible());
  Bitset uncovered = Bitset::full(sys.universe);
  std::vector<int> chosen;
  while (uncovered.any()) {
    int best = -1;
    std::size_t best_gain = 0;
    for (std::size_t s = 0; s < sys.sets.size(); ++s) {
      const std::size_t gain = sys.sets[s].intersect_count(uncovered);
      if (gain > best_gain) {
        best_gain = gain;
        best = static_cast<int>(s);
      }
    }
    chosen.push_back(best);
    uncovered.subtract(sys.sets[static_cast<std::size_t>(best)]);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

namespace {

class DepthLimitedSearch {
 public:
  explicit DepthLimitedSearch(const SetSystem& sys) : sys_(sys) {}

  bool run(const Bitset& uncovered, int budget, std::vector<int>& picked) {
    ++nodes;
    if (uncovered.none()) return true;
    if (budget == 0) return false;

    std::size_t best_gain = 0;
    for (const Bitset& s : sys_.sets) best_gain = std::max(best_gain, s.intersect_count(uncovered));
    if (best_gain == 0) return false;
    if ((uncovered.count() + best_gain - 1) / best_gain > static_cast<std::size_t>(budget)) return false;

    // branch on the uncovered element with the fewest covering sets
    std::size_t pivot = uncovered.first();
    for (std::size_t e = pivot; e < sys_.universe; e = uncovered.next(e)) {
      if (sys_.containing[e].size() < sys_.containing[pivot].size()) pivot = e;
    }

    std::vector<std::pair<std::size_t, int>> branches;
    for (int s : sys_.containing[pivot]) {
      branches.emplace_back(sys_.sets[static_cast<std::size_t>(s)].intersect_count(uncovered), s);
    }
    std::stable_sort(branches.begin(), branches.end(), [](const auto& a, const auto& b) { return a.first > b.first; });

    for (const auto& [gain, s] : branches) {
      Bitset rest = uncovered;
      rest.subtract(sys_.sets[static_cast<std::size_t>(s)]);
      picked.push_back(s);
      if (run(rest, budget - 1, picked)) return true;
      picked.pop_back();
    }
    return false;
  }

  std::size_t nodes = 0;

 private:
  const SetSystem& sys_;
};

}  // namespace

std::optional<std::vector<int>> exact_cover(const SetSystem& sys, int cap, std::size_t* nodes) {
  if (cap < 1) throw std::invalid_argument("exact_cover: size cap must be positive");
  if (!sys.feasible()) throw std::invalid_argument("exact_cover: some element is in no set");
  if (sys.universe == 0) return std::vector<int>{};

  const std::vector<int> upper = greedy_cover(sys);
  const int greedy_size = static_cast<int>(upper.size());

  std::size_t max_set = 0;
  for (const Bitset& s : sys.sets) max_set = std::max(max_set, s.count());
  const int lower = static_cast<int>((sys.universe + max_set - 1) / max_set);

  DepthLimitedSearch search(sys);
  const Bitset all = Bitset::full(sys.universe);
  std::optional<std::vector<int>> result;
  for (int size = lower; size < greedy_size && size <= cap; ++size) {
    std::vector<int> picked;
    if (search.run(all, size, picked)) {
      std::sort(picked.begin(), picked.end());
      result = std::move(picked);
      break;
    }
  }
  if (!result && greedy_size <= cap) result = upper;
  if (nodes) *nodes = search.nodes;
  return result;
}

namespace {

// Cover `target` with at most `budget` sets, none of them in `banned`.
bool small_cover(const SetSystem& sys, const Bitset& target, int budget, const std::vector<char>& banned,
                 std::vector<int>& picked) {
  if (target.none()) return true;
  if (budget == 0) return false;
  const std::size_t pivot = target.first();
  for (int s : sys.containing[pivot]) {
    if (banned[static_cast<std::size_t>(s)]) continue;
    Bitset rest = target;
    rest.subtract(sys.sets[static_cast<std::size_t>(s)]);
    picked.push_back(s);
    if (small_cover(sys, rest, budget - 1, banned, picked)) return true;
    picked.pop_back();
  }
  return false;
}

// Calls visit(indices) for every t-combination of 0..n-1 until it returns true.
bool for_each_combination(int n, int t, const std::function<bool(const std::vector<int>&)>& visit) {
  if (t > n) return false;
  std::vector<int> idx(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (visit(idx)) return true;
    int i = t - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - t + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < t; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

std::vector<int> local_search_cover(const SetSystem& sys, std::vector<int> start, int swap_size) {
  if (swap_size < 1) throw std::invalid_argument("local_search_cover: swap size must be positive");
  if (!sys.is_cover(start)) throw std::invalid_argument("local_search_cover: start is not a cover");

  std::vector<int> chosen = std::move(start);
  bool improved = true;
  while (improved) {
    improved = false;
    for (int t = 1; t <= swap_size && !improved; ++t) {
      const int m = static_cast<int>(chosen.size());
      improved = for_each_combination(m, t, [&](const std::vector<int>& removed) {
        std::vector<int> kept;
        std::vector<char> banned(sys.sets.size(), 0);
        for (int i = 0, r = 0; i < m; ++i) {
          if (r < t && removed[static_cast<std::size_t>(r)] == i) {
            ++r;
          } else {
            kept.push_back(chosen[static_cast<std::size_t>(i)]);
          }
          banned[static_cast<std::size_t>(chosen[static_cast<std::size_t>(i)])] = 1;
        }
        Bitset exposed = Bitset::full(sys.universe);
        exposed.subtract(sys.coverage(kept));
        std::vector<int> inserted;
        if (!small_cover(sys, exposed, t - 1, banned, inserted)) return false;
        kept.insert(kept.end(), inserted.begin(), inserted.end());
        chosen = std::move(kept);
        return true;
      });
    }
  }
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  return chosen;
}

}  // namespace geoburn::detail
