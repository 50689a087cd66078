#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "lfg/roof.hpp"
#include "lfg/roof_chain.hpp"
#include "lfg/walk.hpp"

using namespace lfg;

TEST(RoofChain, GrowthRules) {
  // All zero: r becomes marked.
  EXPECT_EQ(roof_chain_step({0, 0, 0, 0, 0}, 3, 1, mode::semigroup), (roof_state{0, 0, 1, 0, 0}));
  // Both neighbours marked: r marked, neighbours cleared.
  EXPECT_EQ(roof_chain_step({0, 1, 0, 1, 0}, 3, 1, mode::semigroup), (roof_state{0, 0, 1, 0, 0}));
  // One neighbour marked.
  EXPECT_EQ(roof_chain_step({1, 0, 0, 0, 1}, 2, 1, mode::semigroup), (roof_state{0, 1, 0, 0, 1}));
  EXPECT_EQ(roof_chain_step({0, 0, 0, 1, 0}, 3, 1, mode::semigroup), (roof_state{0, 0, 1, 0, 0}));
  // r already marked: unchanged.
  EXPECT_EQ(roof_chain_step({1, 0, 1, 0, 0}, 3, 1, mode::semigroup), (roof_state{1, 0, 1, 0, 0}));
}

TEST(RoofChain, GroupRules) {
  // Growth with color; reduction clears r.
  EXPECT_EQ(roof_chain_step({0, 0, 0}, 2, -1, mode::group), (roof_state{0, -1, 0}));
  EXPECT_EQ(roof_chain_step({1, 0, -1}, 3, 1, mode::group), (roof_state{1, 0, 0}));
  EXPECT_EQ(roof_chain_step({1, 0, 1}, 3, 1, mode::group), (roof_state{1, 0, 1}));
  EXPECT_EQ(roof_chain_step({1, 0, 1}, 2, -1, mode::group), (roof_state{0, -1, 0}));
}

TEST(RoofChain, Boundaries) {
  // Column 5 neighbours column 1 only when periodic.
  EXPECT_EQ(roof_chain_step({1, 0, 1, 0, 0}, 5, 1, mode::semigroup, boundary::periodic), (roof_state{0, 0, 1, 0, 1}));
  EXPECT_EQ(roof_chain_step({1, 0, 1, 0, 0}, 5, 1, mode::semigroup, boundary::open), (roof_state{1, 0, 1, 0, 1}));
  EXPECT_THROW(roof_chain_step({1, 0, 0, 0, 1}, 3, 1, mode::semigroup, boundary::periodic), std::invalid_argument);
  EXPECT_TRUE(roof_state_violation({1, 0, 0, 0, 1}, boundary::open).empty());
  EXPECT_FALSE(roof_state_violation({1, 0, 0, 0, 1}, boundary::periodic).empty());
}

TEST(RoofChain, Errors) {
  EXPECT_THROW(roof_chain_step({1, 1, 0}, 3, 1, mode::semigroup), std::invalid_argument);
  EXPECT_THROW(roof_chain_step({0, 0, 0}, 4, 1, mode::semigroup), std::invalid_argument);
  EXPECT_THROW(roof_chain_step({0, 0, 0}, 0, 1, mode::semigroup), std::invalid_argument);
  EXPECT_THROW(roof_chain_step({0, 0, 0}, 1, -1, mode::semigroup), std::invalid_argument);
  EXPECT_THROW(roof_chain_step({0, -1, 0}, 1, 1, mode::semigroup), std::invalid_argument);
  EXPECT_THROW(roof_chain_step({}, 1, 1, mode::semigroup), std::invalid_argument);
}

// In the semigroup the chain is an exact image of the heap dynamics.
TEST(RoofChain, ReproducesHeapRoofsExactly) {
  std::mt19937_64 gen(6);
  for (int t = 0; t < 100; ++t) {
    const std::uint32_t n = 1 + gen() % 12;
    heap_front h(n, mode::semigroup);
    roof_state eps(n, 0);
    for (int k = 0; k < 300; ++k) {
      const std::uint32_t r = 1 + gen() % n;
      h.push({r, 1});
      eps = roof_chain_step(eps, r, 1, mode::semigroup);
      const auto roof = roof_of(h);
      for (std::uint32_t i = 1; i <= n; ++i) ASSERT_EQ(roof.marked(i), eps[i - 1] != 0);
    }
  }
}

TEST(RoofChain, ExpectedDeltaFormula) {
  // Periodic: exactly 1 - 3 #T / n; open: within 2/n.
  std::mt19937_64 gen(8);
  for (int t = 0; t < 500; ++t) {
    const std::uint32_t n = 3 + gen() % 20;
    roof_state eps(n, 0);
    for (int k = 0; k < 40; ++k) eps = roof_chain_step(eps, 1 + gen() % n, 1, mode::semigroup, boundary::periodic);
    const double k = static_cast<double>(roof_state_size(eps));
    EXPECT_NEAR(roof_chain_expected_delta(eps, boundary::periodic), 1 - 3 * k / n, 1e-12);
    EXPECT_NEAR(roof_chain_expected_delta(eps, boundary::open), 1 - 3 * k / n, 2.0 / n + 1e-12);
  }
}

TEST(RoofChain, StationaryDensityPeriodic) {
  const auto d = roof_chain_density(99, 3'000'000, 10'000, 12, mode::semigroup, boundary::periodic);
  EXPECT_NEAR(d.density, 1.0 / 3, 0.01);
}

TEST(RoofChain, AgreesWithWalkEngine) {
  const std::uint32_t n = 100;
  const auto chain = roof_chain_density(n, 2'000'000, 1000, 5, mode::semigroup, boundary::open);
  walk_params p = walk_params::make(n, 500'000, 4, 5, mode::semigroup);
  const auto walk = roof_density_estimate(run_walk(p), n);
  EXPECT_NEAR(chain.density, walk.value, 0.01);
}

TEST(RoofChain, DensityErrors) {
  EXPECT_THROW(roof_chain_density(2, 100, 10, 1, mode::semigroup, boundary::periodic), std::invalid_argument);
  EXPECT_THROW(roof_chain_density(5, 100, 100, 1, mode::semigroup, boundary::open), std::invalid_argument);
}

TEST(RoofSupport, SmallCounts) {
  EXPECT_EQ(roof_support_enumerate(3, false).count, 5);
  EXPECT_EQ(roof_support_enumerate(3, true).count, 11);
  EXPECT_EQ(roof_support_enumerate(1, false).count, 2);
  EXPECT_EQ(roof_support_enumerate(1, true).count, 3);
  // Fibonacci and Jacobsthal-type recurrences: c_n = c_{n-1} + c_{n-2} (x2 when colored).
  for (std::uint32_t n = 3; n <= 20; ++n) {
    EXPECT_EQ(roof_support_enumerate(n, false).count,
              roof_support_enumerate(n - 1, false).count + roof_support_enumerate(n - 2, false).count);
    EXPECT_EQ(roof_support_enumerate(n, true).count,
              roof_support_enumerate(n - 1, true).count + 2 * roof_support_enumerate(n - 2, true).count);
  }
}

TEST(RoofSupport, GrowthRatios) {
  EXPECT_NEAR(roof_support_enumerate(25, false).growth_ratio, (1 + std::sqrt(5.0)) / 2, 0.005);
  EXPECT_NEAR(roof_support_enumerate(25, true).growth_ratio, 2.0, 0.005);
  EXPECT_THROW(roof_support_enumerate(31, false), std::invalid_argument);
  EXPECT_THROW(roof_support_enumerate(0, false), std::invalid_argument);
}
