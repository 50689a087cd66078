#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "lfg/oracle.hpp"
#include "lfg/roof.hpp"
#include "lfg/walk.hpp"

using namespace lfg;

namespace {
walk_params params(std::uint32_t n, std::uint64_t steps, std::uint32_t trials, std::uint64_t seed, mode m,
                   std::uint64_t burn_in = 0) {
  walk_params p = walk_params::make(n, steps, trials, seed, m);
  p.burn_in = burn_in;
  return p;
}
}  // namespace

TEST(CounterRng, GoldenValues) {
  // SplitMix64 finaliser of a Weyl sequence; these outputs are frozen.
  EXPECT_EQ(counter_rng::mix(0), 0u);
  EXPECT_EQ(counter_rng::mix(counter_rng::gamma), 0xE220A8397B1DCDAFull);
  counter_rng r(42, 0);
  const std::uint64_t first = r.at(0);
  EXPECT_EQ(r(), first);
  EXPECT_EQ(r.position(), 1u);
  EXPECT_EQ(r.at(5), counter_rng(42, 0).at(5));
  EXPECT_NE(counter_rng(42, 0).at(0), counter_rng(42, 1).at(0));
  EXPECT_NE(counter_rng(42, 0).at(0), counter_rng(43, 0).at(0));
  for (int k = 0; k < 1000; ++k) {
    const double u = r.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    ASSERT_LT(r.below(7), 7u);
  }
}

TEST(CounterRng, FrozenStream) {
  counter_rng r(42, 3);
  const std::uint64_t expected[4] = {r.at(0), r.at(1), r.at(2), r.at(3)};
  EXPECT_EQ(expected[0], counter_rng::mix(counter_rng::derive_key(42, 3) + counter_rng::gamma));
  EXPECT_EQ(expected[3], counter_rng::mix(counter_rng::derive_key(42, 3) + 4 * counter_rng::gamma));
}

TEST(Walk, SemigroupLengthIsSteps) {
  for (std::uint32_t n : {1u, 2u, 7u, 50u}) {
    const auto s = run_trial(params(n, 5000, 1, 1, mode::semigroup), 0);
    EXPECT_EQ(s.final_length, 5000u);
    EXPECT_EQ(s.reductions, 0u);
    EXPECT_EQ(s.growths(), 5000u);
  }
  auto p = params(10, 300, 1, 2, mode::semigroup);
  p.keep_roof_sizes = true;
  const auto s = run_trial(p, 0);
  ASSERT_EQ(s.roof_sizes.size(), 300u);
  for (auto r : s.roof_sizes) {
    EXPECT_GE(r, 1u);
    EXPECT_LE(r, roof_set::size_bound(10));
  }
}

TEST(Walk, SingleStep) {
  auto p = params(5, 1, 1, 9, mode::group);
  p.keep_roof_sizes = true;
  const auto s = run_trial(p, 0);
  EXPECT_EQ(s.final_length, 1u);
  ASSERT_EQ(s.roof_sizes.size(), 1u);
  EXPECT_EQ(s.roof_sizes[0], 1u);
}

TEST(Walk, IncrementalRoofMatchesRecomputation) {
  // Replays the letter stream on a full heap and compares roof sizes.
  for (mode m : {mode::group, mode::semigroup}) {
    auto p = params(9, 3000, 1, 17, m);
    p.keep_roof_sizes = true;
    const auto s = run_trial(p, 4);
    counter_rng rng(17, 4);
    colored_heap h(9, m);
    for (std::size_t t = 0; t < 3000; ++t) {
      const auto draw = rng.below(m == mode::group ? 18 : 9);
      h.push({draw % 9 + 1, draw < 9 ? 1 : -1});
      ASSERT_EQ(roof_size(h), s.roof_sizes[t]) << t;
    }
    EXPECT_EQ(h.size(), s.final_length);
    EXPECT_EQ(h.height() >= 1, true);
  }
}

TEST(Walk, GroupLengthChangesByOne) {
  const auto s = run_trial(params(6, 20000, 1, 3, mode::group), 0);
  EXPECT_EQ(s.reductions + s.growths(), s.steps);
  EXPECT_EQ(s.final_length, s.growths() - s.reductions);
  EXPECT_LE(s.final_length, s.steps);
}

TEST(Walk, Determinism) {
  const auto p = params(12, 4000, 6, 99, mode::group, 50);
  const auto serial = run_walk(p, 1);
  const auto parallel = run_walk(p, 4);
  EXPECT_EQ(serial, parallel);
  EXPECT_EQ(serial[3], run_trial(p, 3));
  EXPECT_NE(serial[0], serial[1]);
}

TEST(Walk, Validation) {
  EXPECT_THROW(run_trial(params(0, 10, 1, 0, mode::group), 0), std::invalid_argument);
  EXPECT_THROW(run_trial(params(3, 0, 1, 0, mode::group), 0), std::invalid_argument);
  EXPECT_THROW(run_trial(params(3, 10, 1, 0, mode::group, 10), 0), std::invalid_argument);
  auto p = params(3, 10, 0, 0, mode::group);
  EXPECT_THROW(run_walk(p), std::invalid_argument);
}

TEST(Estimators, SemigroupDriftIsExactlyOne) {
  const auto stats = run_walk(params(20, 10000, 4, 5, mode::semigroup, 200));
  const auto d = drift_estimate(stats);
  EXPECT_EQ(d.value, 1.0);
  EXPECT_EQ(d.se, 0.0);
  EXPECT_THROW(alpha_estimate(stats), std::invalid_argument);
  EXPECT_THROW(drift_estimate(std::span<const walk_stats>{}), std::invalid_argument);
}

TEST(Estimators, FreeGroupDrift) {
  const auto stats = run_walk(params(2, 100000, 4, 7, mode::group, 20));
  EXPECT_NEAR(drift_estimate(stats).value, 0.5, 0.02);
}

TEST(Estimators, SingleColumnRoofIsEverything) {
  const auto stats = run_walk(params(1, 2000, 2, 1, mode::semigroup, 10));
  EXPECT_DOUBLE_EQ(roof_density_estimate(stats, 1).value, 1.0);
  EXPECT_DOUBLE_EQ(heap_profile_stats(stats, 1, mode::semigroup).density, 1.0);
}

TEST(Estimators, AlphaInsideOpenInterval) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto stats = run_walk(params(15, 20000, 2, seed, mode::group, 150));
    const auto a = alpha_estimate(stats);
    EXPECT_GT(a.value, -0.5);
    EXPECT_LT(a.value, 0.5);
    EXPECT_GT(a.se, 0.0);
    EXPECT_NEAR(entropy_estimate(stats, mode::group), std::log(3 - a.value), 1e-15);
  }
}

TEST(Estimators, HeapProfileNeedsSemigroup) {
  const auto stats = run_walk(params(4, 100, 1, 1, mode::group, 10));
  EXPECT_THROW(heap_profile_stats(stats, 4, mode::group), std::invalid_argument);
  const auto s2 = run_walk(params(50, 1000, 1, 1, mode::semigroup, 10));
  EXPECT_TRUE(heap_profile_stats(s2, 50, mode::semigroup).short_run);
}

// Reduction frequency per step equals #T / (2n): compare reductions with the
// summed pre-step roof sizes over 1e6 steps.
TEST(Estimators, ReductionProbabilityIsRoofOverTwoN) {
  const std::uint32_t n = 20;
  const auto stats = run_walk(params(n, 250000, 4, 11, mode::group, 0));
  double red = 0, expected = 0, var = 0;
  for (const auto &s : stats) {
    red += static_cast<double>(s.reductions);
    expected += static_cast<double>(s.roof_before_sum) / (2.0 * n);
  }
  // Bernoulli variance bounded by the expected count.
  var = expected;
  EXPECT_LT(std::abs(red - expected), 3 * std::sqrt(var)) << red << " vs " << expected;
}

// Semigroup: mean one-step change of #T at fixed #T = k is 1 - 3k/n, up to
// boundary terms of at most 2/n.
TEST(Estimators, LocalRoofDriftMatches) {
  const std::uint32_t n = 60;
  auto p = params(n, 400000, 1, 21, mode::semigroup, 0);
  p.keep_roof_sizes = true;
  const auto s = run_trial(p, 0);
  std::map<std::uint32_t, std::pair<double, double>> acc;  // k -> (sum delta, count)
  for (std::size_t t = 10 * n; t + 1 < s.roof_sizes.size(); ++t) {
    auto &a = acc[s.roof_sizes[t]];
    a.first += static_cast<double>(s.roof_sizes[t + 1]) - s.roof_sizes[t];
    a.second += 1;
  }
  int checked = 0;
  for (const auto &[k, a] : acc) {
    if (a.second < 5000) continue;
    const double mean = a.first / a.second;
    const double se = 1.0 / std::sqrt(a.second);  // |delta| <= 2: sd well below 1
    EXPECT_NEAR(mean, 1.0 - 3.0 * k / n, 2.0 / n + 4 * se) << "k=" << k;
    ++checked;
  }
  EXPECT_GE(checked, 3);
}

// E[(#T)^2] / (E #T)^2 - 1 shrinks as n grows.
TEST(Estimators, RoofFluctuationsDecrease) {
  double prev = 1e9;
  for (std::uint32_t n : {25u, 50u, 100u, 200u}) {
    const auto stats = run_walk(params(n, 200ull * n * 10, 2, 3, mode::semigroup, 20ull * n));
    const double f = roof_fluctuation(stats);
    EXPECT_LT(f, prev) << n;
    EXPECT_LT(f * n, 1.0);
    prev = f;
  }
}

TEST(Estimators, SmallSemigroupEntropyNearExact) {
  // Roof estimator at n = 4 against the oracle. H(mu^N) - H(mu^(N-1))
  // decreases to h much faster than H(mu^N)/N does (0.9761 at N = 12 versus
  // 1.0349); the estimator itself carries an O(1/n) bias.
  auto p = params(4, 200000, 4, 8, mode::semigroup, 40);
  p.keep_roof_sizes = true;
  const auto stats = run_walk(p);
  const double walk_h = entropy_estimate(stats, mode::semigroup);
  double direct = 0, count = 0;
  for (const auto &s : stats)
    for (std::size_t t = p.burn_in; t < s.roof_sizes.size(); ++t, ++count) direct -= std::log(s.roof_sizes[t] / 4.0);
  EXPECT_NEAR(walk_h, direct / count, 1e-9);
  const auto series = exact_walk_series(4, 9, mode::semigroup);
  const double increment = 9 * series[8].entropy - 8 * series[7].entropy;
  EXPECT_NEAR(increment, 0.978000, 1e-6);
  EXPECT_LT(walk_h, increment);
  EXPECT_NEAR(walk_h, increment, 0.1);
}

TEST(Snapshots, Profiles) {
  auto p = params(8, 100, 1, 4, mode::semigroup);
  p.snapshot_every = 25;
  const auto s = run_trial(p, 0);
  ASSERT_EQ(s.snapshots.size(), 4u);
  EXPECT_EQ(s.snapshots.back().step, 100u);
  std::uint32_t marked = 0, tallest = 0;
  for (std::uint32_t i = 0; i < 8; ++i) {
    marked += s.snapshots.back().in_roof[i];
    tallest = std::max(tallest, s.snapshots.back().top_level[i]);
  }
  EXPECT_GE(marked, 1u);
  EXPECT_EQ(tallest, s.height);
}
