#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "tamp1d/norms.hpp"
#include "tamp1d/random_instances.hpp"

using namespace tamp1d;

TEST_CASE("linear interpolation of voxels") {
  const auto f = linear_interpolate(VoxelFunction({1, 0, 1}));
  CHECK(f.nodes() == std::vector<Rational>{0, 1, 0, 1, 0});
  CHECK(f.grid_step() == 1);
  CHECK(f(Rational(1, 2)) == Rational(1, 2));
  CHECK(f(4) == 0);
  CHECK(f(7) == 0);

  const auto flat = linear_interpolate(VoxelFunction({2, 2, 2}, Rational(1, 3), Rational(1, 2)));
  CHECK(flat.nodes() == std::vector<Rational>{0, 1, 1, 1, 0});
  CHECK(flat(Rational(1, 2)) == 1);
  CHECK(w1p_halfnorm_pow(flat, 2) == doctest::Approx(2.0 / (1.0 / 3.0)));

  CHECK_THROWS_AS(PiecewiseLinear(1, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(PiecewiseLinear(0, {0, 0}), std::invalid_argument);
}

TEST_CASE("W1p half-norms") {
  const auto tent = linear_interpolate(VoxelFunction({1, 0, 1}));
  CHECK(w1p_halfnorm(tent, 2) == doctest::Approx(2.0));
  const auto tamped = linear_interpolate(VoxelFunction({1, 1, 0}));
  CHECK(w1p_halfnorm(tamped, 2) == doctest::Approx(std::sqrt(2.0)));
  CHECK(w1p_halfnorm(PiecewiseLinear(1, {0, 0, 0}), 3) == 0);
  CHECK_THROWS_AS(w1p_halfnorm(tent, 0.5), std::invalid_argument);
  // slope 1/(1/2) on four segments of length 1/2
  const auto fine = linear_interpolate(VoxelFunction({1, 0, 1}, Rational(1, 2)));
  CHECK(w1p_halfnorm_pow(fine, 2) == doctest::Approx(4 * 4 * 0.5));
}

TEST_CASE("hollows of piecewise-linear functions") {
  CHECK(hollows(linear_interpolate(VoxelFunction({1, 0, 1}))) == IntervalSet{{1, 3}});
  CHECK(hollows(linear_interpolate(VoxelFunction({1, 3, 2}))).empty());
  // [2,1,3]: nodes 0,2,1,3,0; the dip sits below 2 from x=1 to x=5/2
  CHECK(hollows(linear_interpolate(VoxelFunction({2, 1, 3}))) == IntervalSet{{1, Rational(5, 2)}});

  // oracle: sample strictly inside segments and compare with the sup-based definition
  Rng rng(43);
  for (int round = 0; round < 200; ++round) {
    const auto f = linear_interpolate(random_voxels(rng, 1, 10));
    const IntervalSet h = hollows(f);
    const Rational end = f.support_end();
    const long den = 64;
    for (long k = 0; Rational(k, den) < end; ++k) {
      const Rational x(2 * k + 1, 2 * den);
      Rational left = 0, right = 0;
      for (std::size_t i = 0; i < f.nodes().size(); ++i) {
        const Rational xi = f.grid_step() * static_cast<unsigned long>(i);
        if (xi < x) left = std::max(left, f.nodes()[i]);
        if (xi > x) right = std::max(right, f.nodes()[i]);
      }
      const bool expected = f(x) < left && f(x) < right;
      // boundary crossings sit on multiples of 1/(2n) at worst; skip those cells
      if (h.contains(x) != expected) {
        bool near_edge = false;
        for (const auto& part : h.parts()) {
          near_edge = near_edge || abs(Rational(part.lo - x)) < Rational(1, den) ||
                      abs(Rational(part.hi - x)) < Rational(1, den);
        }
        REQUIRE(near_edge);
      }
    }
  }
}

TEST_CASE("elementary residual") {
  const VoxelFunction tent({1, 0, 1});
  CHECK(elementary_residual(tent, 2, 2) == doctest::Approx(2.0));
  CHECK(elementary_residual_bound(tent, 2, 2) == doctest::Approx(2.0));

  const VoxelFunction v({2, 1, 3});
  // before: 0,2,1,3,0 -> 4+1+4+9 = 18; after 0,2,3,1,0 -> 4+1+4+1 = 10
  CHECK(elementary_residual(v, 2, 2) == doctest::Approx(8.0));
  CHECK(elementary_residual_bound(v, 2, 2) == doctest::Approx(1.0 + 4.0 - 1.0));
  CHECK(elementary_residual(v, 2, 1) >= elementary_residual_bound(v, 2, 1) - 1e-12);
  CHECK_THROWS_AS(elementary_residual(v, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(elementary_residual_bound(v, 3, 2), std::invalid_argument);
}

TEST_CASE("residuals along a trace telescope") {
  Rng rng(47);
  for (int round = 0; round < 200; ++round) {
    const VoxelFunction v = random_voxels(rng, 2, 14);
    const auto result = tamp_voxel(v);
    for (double p : {1.0, 2.0, 3.0}) {
      double sum = 0;
      VoxelFunction current = v;
      for (const auto& step : result.trace.steps) {
        const double r = elementary_residual(current, step.pivot, p);
        CHECK(r >= elementary_residual_bound(current, step.pivot, p) - 1e-9);
        CHECK(r >= -1e-9);
        sum += r;
        current = VoxelFunction(step.heights);
      }
      const double total = w1p_halfnorm_pow(linear_interpolate(v), p) -
                           w1p_halfnorm_pow(linear_interpolate(result.voxels), p);
      CHECK(sum == doctest::Approx(total).epsilon(1e-9));
    }
  }
}

TEST_CASE("Polya-Szego for tamping and Schwarz on voxels") {
  Rng rng(53);
  for (int round = 0; round < 300; ++round) {
    const VoxelFunction v = random_voxels(rng, 1, 20);
    const auto before = linear_interpolate(v);
    const auto after = linear_interpolate(tamp_voxel(v).voxels);
    // Schwarz lives on the half-line without a boundary condition at 0, so
    // compare interpolants whose first node is h_1 instead of 0.
    const auto free_start = [](std::vector<int> h) {
      std::vector<Rational> nodes(h.begin(), h.end());
      nodes.push_back(Rational(0));
      return PiecewiseLinear(1, nodes);
    };
    auto sorted = v.heights();
    std::sort(sorted.rbegin(), sorted.rend());
    const auto star = free_start(sorted);
    const auto plain = free_start(v.heights());
    for (double p : {1.0, 1.5, 2.0, 3.0}) {
      const double b = w1p_halfnorm_pow(before, p), a = w1p_halfnorm_pow(after, p);
      CHECK(hollows_gradient_integral(before, p) <= b - a + 1e-9 * std::max(1.0, b));
      CHECK(w1p_halfnorm_pow(star, p) <= w1p_halfnorm_pow(plain, p) + 1e-9 * std::max(1.0, b));
    }
    const bool tamped = pivot_set(v).empty();
    CHECK(tamped == hollows(before).empty());
    if (tamped) CHECK(w1p_halfnorm_pow(before, 2) == w1p_halfnorm_pow(after, 2));
    else CHECK(w1p_halfnorm_pow(after, 2) < w1p_halfnorm_pow(before, 2));
  }
}

TEST_CASE("Lp distance between piecewise-linear and step functions") {
  const auto f = linear_interpolate(VoxelFunction({1}));  // tent 0 -> 1 -> 0 on [0, 2]
  // int_0^2 tent^2 = 2/3
  CHECK(lp_distance(f, StepFunction(), 2) == doctest::Approx(std::sqrt(2.0 / 3.0)));
  // |tent - 1| on [0,2]: two triangles of area 1/2
  CHECK(lp_distance(f, StepFunction::indicator(0, 2), 1) == doctest::Approx(1.0));
  // crossing inside a piece: tent - 1/2 changes sign
  const double expected = 2 * (std::pow(0.5, 3) / 3 + std::pow(0.5, 3) / 3);
  CHECK(lp_distance(f, StepFunction::indicator(0, 2, Rational(1, 2)), 2) == doctest::Approx(std::sqrt(expected)));
}

TEST_CASE("H^s half-norm closed form") {
  CHECK(hs_halfnorm(StepFunction(), 0.25) == 0);
  CHECK_THROWS_AS(hs_halfnorm(StepFunction::indicator(0, 1), 0.5), std::invalid_argument);
  CHECK_THROWS_AS(hs_halfnorm(StepFunction::indicator(0, 1), 0.0), std::invalid_argument);

  // 1_[0,1]: 2 * int_0^1 int_1^inf (y-x)^(-1-2s) = 2 * int_0^1 (1-x)^(-2s)/(2s) = 1/(s(1-2s))
  for (double s : {0.1, 0.25, 0.4}) {
    CHECK(hs_halfnorm(StepFunction::indicator(0, 1), s) == doctest::Approx(1.0 / (s * (1 - 2 * s))).epsilon(1e-12));
  }

  const auto psi = StepFunction::indicator(1, 2) + StepFunction::indicator(17, 32) + StepFunction::indicator(0, 52);
  CHECK(hs_halfnorm(psi, 0.25) == doctest::Approx(124.07).epsilon(0.01 / 124.07));

  Rng rng(59);
  for (int round = 0; round < 30; ++round) {
    const auto fn = random_step_function(rng);
    for (double s : {0.1, 0.25, 0.4}) {
      CHECK(hs_halfnorm(fn, s) == doctest::Approx(oracle::hs_quadrature(fn, s)).epsilon(1e-6));
      CHECK(hs_halfnorm(fn.translated(3), s) == doctest::Approx(hs_halfnorm(fn, s)).epsilon(1e-12));
      CHECK(hs_halfnorm(fn.dilated(Rational(5, 2)), s) ==
            doctest::Approx(std::pow(2.5, 1 - 2 * s) * hs_halfnorm(fn, s)).epsilon(1e-12));
    }
  }
}
