#include <doctest.h>

#include "oracles.hpp"
#include "tamp1d/random_instances.hpp"
#include "tamp1d/tamping.hpp"

using namespace tamp1d;

namespace {

StepFunction cells(std::vector<Rational> values) { return StepFunction::from_cells(1, values); }

StepFunction by_voxels(const StepFunction& fn) {
  return voxel_to_step(tamp_voxel(exact_voxelization(fn)).voxels);
}

}  // namespace

TEST_CASE("hollows of a function") {
  const auto fn = cells({2, 1, 3});
  CHECK(hollows(fn) == IntervalSet{{1, 2}});
  CHECK(hollows(fn, 1).empty());
  CHECK(hollows(fn, 2) == IntervalSet{{1, 2}});
  CHECK(hollows(fn, Rational(3, 2)) == IntervalSet{{1, 2}});
  CHECK(hollows(cells({1, 3, 3, 2})).empty());
  CHECK(hollows(StepFunction()).empty());
  // a gap with a deeper notch inside
  CHECK(hollows(cells({3, 1, 2, 0, 3})) == IntervalSet{{1, 4}});
}

TEST_CASE("hollows match the cell oracle") {
  Rng rng(23);
  for (int round = 0; round < 300; ++round) {
    const auto fn = random_step_function(rng);
    const auto v = oracle::cells(fn, 4);
    const auto holes = oracle::hollow_cells(v);
    const IntervalSet h = hollows(fn);
    for (std::size_t k = 0; k < v.size(); ++k) {
      REQUIRE(h.contains(Rational(2 * static_cast<long>(k) + 1, 8)) == holes[k]);
    }
  }
}

TEST_CASE("level anchors") {
  const auto fn = cells({2, 1, 3});
  auto a = level_anchor(fn, Rational(5, 2));
  CHECK(*a.x == 2);
  CHECK(*a.y == 1);
  a = level_anchor(fn, Rational(1, 2));
  CHECK(*a.x == 0);
  CHECK(*a.y == 0);
  a = level_anchor(StepFunction::indicator(1, 2), 1);
  CHECK(*a.x == 1);
  CHECK(*a.y == 1);
  a = level_anchor(fn, 4);
  CHECK_FALSE(a.x.has_value());
  CHECK_FALSE(a.y.has_value());
}

TEST_CASE("tamp on the worked instances") {
  CHECK(tamp(StepFunction::indicator(1, 2) + StepFunction::indicator(3, 5)) == StepFunction::indicator(1, 4));
  CHECK(tamp(StepFunction::indicator(0, Rational(1, 4)) + StepFunction::indicator(1, 2)) ==
        StepFunction::indicator(0, Rational(5, 4)));
  CHECK(tamp(cells({2, 1, 3})) == cells({2, 3, 1}));
  CHECK(tamp(cells({1, 3, 2})) == cells({1, 3, 2}));
  CHECK(tamp(StepFunction()).is_zero());
}

TEST_CASE("double Schwarz formula") {
  const auto fn = StepFunction::indicator(0, 1) + StepFunction::indicator(2, 3, 2);
  CHECK(tamp_double_schwarz(fn) == StepFunction::indicator(0, 1) + StepFunction::indicator(1, 2, 2));
  CHECK(tamp_double_schwarz(cells({1, 3, 2})) == cells({1, 3, 2}));
  CHECK_THROWS_AS(tamp_double_schwarz(StepFunction()), std::invalid_argument);
}

TEST_CASE("routes agree with the cell oracle on random step functions") {
  Rng rng(29);
  for (int round = 0; round < 400; ++round) {
    const auto fn = random_step_function(rng);
    const auto level = tamp(fn);
    CAPTURE(fn);
    REQUIRE(oracle::cells(level, 4) == [&] {
      auto t = oracle::tamp_cells(oracle::cells(fn, 4));
      while (!t.empty() && t.back() == 0) t.pop_back();
      return t;
    }());
    if (!fn.is_zero()) CHECK(tamp_double_schwarz(fn) == level);
    CHECK(by_voxels(fn) == level);
    CHECK(is_rearrangement_of(fn, level));
    CHECK(is_unimodal(level));
    CHECK(tamp(level) == level);
  }
}

TEST_CASE("anchors and nesting") {
  Rng rng(31);
  for (int round = 0; round < 200; ++round) {
    const auto fn = random_step_function(rng);
    const auto out = tamp(fn);
    std::optional<Interval> previous;
    for (const auto& level : fn.levels()) {
      const auto anchor = level_anchor(fn, level);
      CHECK(*anchor.y <= *anchor.x);
      CHECK((*anchor.y == *anchor.x) == (measure_within(hollows(fn), 0, *anchor.x) == 0));
      const auto set = superlevel(out, level);
      REQUIRE(set.size() == 1);
      CHECK(set.front().lo == *anchor.y);
      CHECK(set.front().length() == measure(superlevel(fn, level)));
      if (previous) CHECK((previous->lo <= set.front().lo && set.front().hi <= previous->hi));
      previous = set.front();
      // Dirichlet at step level
      if (superlevel(fn, level).front().lo == 0) CHECK(set.front().lo == 0);
    }
  }
}

TEST_CASE("voxel functions") {
  CHECK_THROWS_AS(VoxelFunction({3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(VoxelFunction({-1, 1}), std::invalid_argument);
  const VoxelFunction v({2, 1, 3});
  CHECK(v.height(0) == 0);
  CHECK(v.height(4) == 0);
  CHECK(v.moment() == 2 + 2 + 9);
  CHECK(voxel_to_step(v) == cells({2, 1, 3}));
  CHECK(voxel_to_step(VoxelFunction({0, 0})).is_zero());
  CHECK(voxel_to_step(VoxelFunction({1, 2}, Rational(1, 2), 2)) ==
        StepFunction::from_pieces({{0, Rational(1, 2), 2}, {Rational(1, 2), 1, 4}}));
}

TEST_CASE("pivots, eta and elementary steps") {
  CHECK(pivot_set(VoxelFunction({2, 1, 3})) == std::vector<Column>{2});
  CHECK(pivot_set(VoxelFunction({1, 0, 1})) == std::vector<Column>{2});
  CHECK(pivot_set(VoxelFunction({0, 2, 1})).empty());
  CHECK(pivot_set(VoxelFunction({3, 1, 2, 0, 3})) == std::vector<Column>{2, 4});
  CHECK(eta(VoxelFunction({2, 1, 3}), 2) == 4);
  CHECK(eta(VoxelFunction({1, 0, 1}), 2) == 4);
  CHECK(eta(VoxelFunction({1, 0, 2, 0}), 2) == 4);
  CHECK(elementary_tamp(VoxelFunction({2, 1, 3}), 2).heights() == std::vector<int>{2, 3, 1});
  CHECK(elementary_tamp(VoxelFunction({1, 0, 1}), 2).heights() == std::vector<int>{1, 1, 0});
  CHECK_THROWS_AS(eta(VoxelFunction({0, 2, 1}), 1), std::invalid_argument);
  CHECK_THROWS_AS(elementary_tamp(VoxelFunction({2, 1, 3}), 1), std::invalid_argument);
  const VoxelFunction v({4, 1, 3, 2});
  const auto step = elementary_tamp(v, 2);
  CHECK(step.moment() < v.moment());
}

TEST_CASE("tamp_voxel traces") {
  const auto r = tamp_voxel(VoxelFunction({2, 1, 3}));
  CHECK(r.voxels.heights() == std::vector<int>{2, 3, 1});
  REQUIRE(r.trace.steps.size() == 1);
  CHECK(r.trace.steps[0].pivot == 2);
  CHECK(r.trace.steps[0].eta == 4);
  CHECK(r.trace.steps[0].heights == std::vector<int>{2, 3, 1});
  CHECK(r.trace.invariant_n == std::vector<long long>{13, 11});

  const auto u = tamp_voxel(VoxelFunction({1, 3, 2}));
  CHECK(u.voxels.heights() == std::vector<int>{1, 3, 2});
  CHECK(u.trace.steps.empty());

  const auto quiet = tamp_voxel(VoxelFunction({3, 1, 2, 0, 3}), {PivotPolicy::Leftmost, 0, false});
  CHECK(quiet.voxels.heights() == std::vector<int>{3, 3, 2, 1, 0});
  for (const auto& s : quiet.trace.steps) CHECK(s.heights.empty());
}

TEST_CASE("exhaustive small grids: voxel route, level sets and double Schwarz") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> h(static_cast<std::size_t>(n), 0);
    while (true) {
      const VoxelFunction v(h);
      const auto fn = voxel_to_step(v);
      const auto expected = tamp(fn);
      for (auto policy : {PivotPolicy::Leftmost, PivotPolicy::Rightmost, PivotPolicy::Random}) {
        const auto r = tamp_voxel(v, {policy, 99, false});
        REQUIRE(voxel_to_step(r.voxels) == expected);
        for (std::size_t i = 1; i < r.trace.invariant_n.size(); ++i) {
          REQUIRE(r.trace.invariant_n[i] < r.trace.invariant_n[i - 1]);
        }
      }
      if (!fn.is_zero()) REQUIRE(tamp_double_schwarz(fn) == expected);
      int i = 0;
      while (i < n && h[static_cast<std::size_t>(i)] == n) h[static_cast<std::size_t>(i++)] = 0;
      if (i == n) break;
      ++h[static_cast<std::size_t>(i)];
    }
  }
}

TEST_CASE("step_to_voxel marks cells meeting the hypograph") {
  CHECK(step_to_voxel(StepFunction::indicator(0, 1), 4, Rational(1, 4), Rational(1, 4)).heights() ==
        std::vector<int>{4, 4, 4, 4});
  const auto grid = cells({2, 1, 3});
  CHECK(voxel_to_step(step_to_voxel(grid, 3, 1, 1)) == grid);
  CHECK(step_to_voxel(StepFunction(), 3).heights() == std::vector<int>{0, 0, 0});

  // oracle: cell (i, j) is full iff some piece overlapping column i in
  // positive length exceeds (j - 1) mu
  Rng rng(37);
  for (int round = 0; round < 100; ++round) {
    const auto fn = random_step_function(rng);
    if (fn.is_zero()) continue;
    const std::size_t n = 5 + static_cast<std::size_t>(round % 20);
    const auto v = step_to_voxel(fn, n);
    const Rational lambda = fn.support_end() / static_cast<unsigned long>(n);
    const Rational mu = fn.max_value() / static_cast<unsigned long>(n);
    for (std::size_t i = 1; i <= n; ++i) {
      const Rational lo = lambda * static_cast<unsigned long>(i - 1), hi = lambda * static_cast<unsigned long>(i);
      for (std::size_t j = 1; j <= n; ++j) {
        bool meets = false;
        for (const auto& p : fn.pieces()) {
          const Rational a = std::max(lo, p.lo), b = std::min(hi, p.hi);
          if (a < b && p.value > mu * static_cast<unsigned long>(j - 1)) meets = true;
        }
        REQUIRE(meets == (static_cast<std::size_t>(v.height(i)) >= j));
      }
    }
  }
}

TEST_CASE("exact voxelization is lossless") {
  Rng rng(41);
  for (int round = 0; round < 100; ++round) {
    const auto fn = random_step_function(rng);
    CHECK(voxel_to_step(exact_voxelization(fn)) == fn);
  }
  CHECK_THROWS_AS(exact_voxelization(StepFunction::indicator(0, 1) + StepFunction::indicator(1, Rational(5001, 5000), 2)), std::length_error);
}
