#include <doctest.h>

#include "../oracles.hpp"
#include "geoburn/approx.hpp"
#include "geoburn/exact.hpp"

using namespace geoburn;

TEST_CASE("approx point burning examples") {
  auto r = approx_point_burning(PointSet({{0, 0}}));
  CHECK(r.guess_delta == 1);
  CHECK(r.steps_used == 1);
  CHECK(r.schedule.sources == std::vector<Point>{{0, 0}});
  REQUIRE(r.certified_ratio);
  CHECK(*r.certified_ratio == 2.0);

  // G_0 needs 7, G_1 (the 7-path) needs 3, G_2 needs 2
  const PointSet line = oracle::line7();
  CHECK(oracle::min_dominating_set_by_enumeration(line, 0) == 7);
  CHECK(oracle::min_dominating_set_by_enumeration(line, 1) == 3);
  r = approx_point_burning(line);
  REQUIRE(r.trace.size() == 3);
  CHECK_FALSE(r.trace[0].accepted);
  CHECK_FALSE(r.trace[1].accepted);
  CHECK(r.trace[2].accepted);
  CHECK(r.trace[2].subsolution_size == 2U);
  CHECK(r.guess_delta == 3);
  CHECK(r.schedule.sources.size() == 2);
  CHECK(r.steps_used <= 2 * 3 - 1);
  CHECK(r.steps_used == simulate(line, r.schedule, 2 + 3 - 1).steps);
  CHECK(verify_schedule(line, r.schedule, r.steps_used));

  const PointSet far({{0, 0}, {100, 0}});
  r = approx_point_burning(far);
  CHECK(r.guess_delta == 2);
  CHECK(r.schedule.sources.size() == 2);
  CHECK(r.steps_used == 2);
}

TEST_CASE("approx anywhere burning examples") {
  auto r = approx_anywhere_burning(PointSet({{0, 0}}));
  CHECK(r.guess_delta == 1);
  CHECK(r.steps_used == 1);

  const PointSet line = oracle::line7();
  r = approx_anywhere_burning(line);
  REQUIRE(r.trace.size() == 3);
  CHECK_FALSE(r.trace[1].accepted);
  CHECK(r.guess_delta == 3);
  CHECK(r.trace[2].subsolution_size == 2U);
  CHECK(r.steps_used <= 4);
  CHECK(r.steps_used == simulate(line, r.schedule, 4).steps);
  CHECK(verify_schedule(line, r.schedule, r.steps_used));

  r = approx_anywhere_burning(PointSet({{1, 1}, {1, 1 + 1e-12}}));
  CHECK(r.guess_delta == 1);
  CHECK(r.steps_used == 1);
}

TEST_CASE("approx config validation") {
  const PointSet P({{0, 0}});
  CHECK_THROWS_AS(approx_point_burning(P, {.epsilon = 0.0, .subsolver = Subsolver::Greedy}), std::invalid_argument);
  CHECK_THROWS_AS(approx_point_burning(P, {.epsilon = -1.0}), std::invalid_argument);
  CHECK_THROWS_AS(approx_point_burning(PointSet{}), std::invalid_argument);
  CHECK_THROWS_AS(approx_anywhere_burning(PointSet{}), std::invalid_argument);
  CHECK_NOTHROW(approx_point_burning(P, {.epsilon = 0.25, .subsolver = Subsolver::Exact}));
  CHECK(parse_subsolver("localsearch") == Subsolver::LocalSearch);
  CHECK_THROWS_AS(parse_subsolver("ptas"), std::invalid_argument);
}

TEST_CASE("without early stop the full idle phase is spent") {
  const PointSet line = oracle::line7();
  const auto r = approx_point_burning(line, {.early_stop = false});
  CHECK(r.steps_used == static_cast<int>(r.schedule.sources.size()) + r.guess_delta - 1);
  CHECK(verify_schedule(line, r.schedule, r.steps_used));
}

TEST_CASE("exact sub-solver: bound 2*opt - 1 and smallest accepted guess") {
  Rng rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng.uniform() * 9);
    const PointSet P = oracle::random_points(rng, n, 5.0);

    const auto pa = approx_point_burning(P);
    const int popt = exact_point_burning(P).burning_number;
    CHECK(verify_schedule(P, pa.schedule, pa.steps_used));
    CHECK(pa.steps_used <= 2 * popt - 1);
    CHECK(pa.guess_delta <= popt);
    for (int d = 1; d < pa.guess_delta; ++d) {
      CHECK(oracle::min_dominating_set_by_enumeration(P, d - 1) > d);
    }
    CHECK(static_cast<int>(pa.schedule.sources.size()) <= pa.guess_delta);

    if (n <= 7) {
      const auto aa = approx_anywhere_burning(P);
      const int aopt = exact_anywhere_burning(P).burning_number;
      CHECK(verify_schedule(P, aa.schedule, aa.steps_used));
      CHECK(aa.steps_used <= 2 * aopt - 1);
      CHECK(aa.guess_delta <= aopt);
    }
  }
}

TEST_CASE("heuristic sub-solvers still give certified schedules") {
  Rng rng(78);
  for (int trial = 0; trial < 30; ++trial) {
    const PointSet P = oracle::random_points(rng, 12, 6.0);
    for (Subsolver s : {Subsolver::Greedy, Subsolver::LocalSearch}) {
      const ApproxConfig cfg{.epsilon = 0.5, .subsolver = s};
      const auto pa = approx_point_burning(P, cfg);
      CHECK_FALSE(pa.certified_ratio);
      CHECK(verify_schedule(P, pa.schedule, pa.steps_used));
      for (const auto& g : pa.trace) {
        if (g.accepted) CHECK(static_cast<double>(*g.subsolution_size) <= 1.5 * g.delta + 1e-9);
      }
      const auto aa = approx_anywhere_burning(P, cfg);
      CHECK(verify_schedule(P, aa.schedule, aa.steps_used));
    }
  }
}
