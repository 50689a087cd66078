#include <gtest/gtest.h>

#include <cmath>

#include "lfg/counting.hpp"
#include "lfg/oracle.hpp"
#include "lfg/spectrum.hpp"

using namespace lfg;

TEST(TransferMatrix, SmallCases) {
  const transfer_matrix t1(1);
  EXPECT_EQ(t1(1, 1), 0);
  const transfer_matrix t2(2);
  EXPECT_EQ(t2(1, 1), 0);
  EXPECT_EQ(t2(1, 2), 1);
  EXPECT_EQ(t2(2, 1), 1);
  EXPECT_EQ(t2(2, 2), 0);
  const transfer_matrix t3(3);
  const int expected[3][3] = {{0, 1, 1}, {1, 0, 1}, {0, 1, 0}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_EQ(t3(i + 1, j + 1), expected[i][j]);
  EXPECT_THROW(transfer_matrix(0), std::invalid_argument);
}

TEST(TransferMatrix, RowSums) {
  for (std::uint32_t n = 2; n <= 12; ++n) {
    const transfer_matrix t(n);
    for (std::uint32_t i = 1; i <= n; ++i) {
      int s = 0;
      for (std::uint32_t j = 1; j <= n; ++j) s += t(i, j);
      const int expected = i == 1 ? n - 1 : (i == n ? 1 : n - i + 1);
      EXPECT_EQ(s, expected) << "n=" << n << " row " << i;
    }
  }
}

TEST(Theta, Examples) {
  for (std::uint32_t s = 1; s <= 40; ++s) EXPECT_EQ(theta_exact(2, s), 2);
  EXPECT_EQ(theta_exact(3, 2), 5);
  EXPECT_EQ(theta_exact(3, 3), 8);
  EXPECT_THROW(theta_exact(3, 0), std::invalid_argument);
  const auto seq = theta_sequence(7, 30);
  for (std::uint32_t s = 1; s <= 30; ++s) EXPECT_EQ(seq[s - 1], theta_exact(7, s));
}

TEST(CountWords, Examples) {
  EXPECT_EQ(count_words(2, 2, count_variant::group()), 12);
  EXPECT_EQ(count_words(3, 2, count_variant::group()), 26);
  EXPECT_EQ(count_words(2, 3, count_variant::semigroup()), 8);
  EXPECT_EQ(count_words(3, 3, count_variant::projective()), 8);
  for (std::uint32_t n = 1; n <= 10; ++n) {
    EXPECT_EQ(count_words(n, 1, count_variant::group()), 2 * n);
    EXPECT_EQ(count_words(n, 1, count_variant::semigroup()), n);
  }
  EXPECT_THROW(count_words(0, 3, count_variant::group()), std::invalid_argument);
  EXPECT_THROW(count_words(3, 0, count_variant::group()), std::invalid_argument);
  EXPECT_THROW(count_variant::restricted(1), std::invalid_argument);
}

TEST(CountWords, FreeGroupAndSemigroup) {
  const auto g = count_series(2, 256, count_variant::group());
  const auto s = count_series(2, 256, count_variant::semigroup());
  big_count p3 = 1, p2 = 2;
  for (std::uint32_t K = 1; K <= 256; ++K) {
    ASSERT_EQ(g[K - 1], 4 * p3) << K;
    ASSERT_EQ(s[K - 1], p2) << K;
    p3 *= 3;
    p2 *= 2;
  }
}

TEST(CountWords, MatrixPowerAgreesWithIteration) {
  for (auto v : {count_variant::group(), count_variant::semigroup(), count_variant::projective(),
                 count_variant::restricted(3), count_variant::restricted(6)})
    for (std::uint32_t n = 1; n <= 9; ++n) {
      const auto series = count_series(n, 25, v);
      for (std::uint32_t K = 1; K <= 25; K += 3) EXPECT_EQ(series[K - 1], count_words(n, K, v));
    }
}

// Semigroup: sum_s C(K-1, s-1) theta(s) equals v (T + I)^{K-1} v.
TEST(CountWords, SemigroupBinomialForm) {
  for (std::uint32_t n = 1; n <= 8; ++n) {
    const auto theta = theta_sequence(n, 20);
    for (std::uint32_t K = 1; K <= 20; ++K) {
      big_count total = 0, binom = 1;  // C(K-1, s-1)
      for (std::uint32_t s = 1; s <= K; ++s) {
        total += binom * theta[s - 1];
        binom = binom * (K - s) / s;
      }
      EXPECT_EQ(total, count_words(n, K, count_variant::semigroup()));
    }
  }
}

TEST(CountWords, NoOverflowAtTheLargestSupportedSize) {
  const auto v = count_words(64, 512, count_variant::group());
  EXPECT_GT(v, 0);
  EXPECT_EQ(from_decimal(to_decimal(v)), v);
  EXPECT_GT(to_decimal(v).size(), 400u);
}

TEST(Restricted, SyllableCounts) {
  for (std::uint32_t K = 1; K <= 12; ++K)
    for (std::uint32_t s = 1; s <= K; ++s) EXPECT_EQ(restricted_syllable_count(2, K, s), K == s ? 1 : 0);
  EXPECT_EQ(restricted_syllable_count(3, 2, 2), 4);
  EXPECT_EQ(restricted_syllable_count(4, 3, 2), 4);
  EXPECT_EQ(restricted_syllable_count(5, 2, 1), 2);
  EXPECT_THROW(restricted_syllable_count(1, 3, 2), std::invalid_argument);
  EXPECT_THROW(restricted_syllable_count(3, 2, 3), std::invalid_argument);
  EXPECT_THROW(restricted_syllable_count(3, 2, 0), std::invalid_argument);
}

TEST(Restricted, GeneratingFunctions) {
  // g_2 = 1; g_{2m} = 2 + ... + 2 z^{m-2} + z^{m-1}; g_{2m+1} = 2 (1 + ... + z^{m-1}).
  EXPECT_EQ(syllable_length_polynomial(2), (std::vector<big_count>{1}));
  EXPECT_EQ(syllable_length_polynomial(3), (std::vector<big_count>{2}));
  EXPECT_EQ(syllable_length_polynomial(4), (std::vector<big_count>{2, 1}));
  EXPECT_EQ(syllable_length_polynomial(5), (std::vector<big_count>{2, 2}));
  EXPECT_EQ(syllable_length_polynomial(6), (std::vector<big_count>{2, 2, 1}));
  EXPECT_EQ(syllable_length_polynomial(7), (std::vector<big_count>{2, 2, 2}));
}

TEST(Restricted, AgreesWithBruteForce) {
  for (std::uint32_t r = 2; r <= 7; ++r) {
    const auto table = restricted_syllable_table(r, 12);
    for (std::uint32_t K = 1; K <= 12; ++K)
      for (std::uint32_t s = 1; s <= K; ++s) {
        ASSERT_EQ(restricted_syllable_count(r, K, s), brute_restricted(r, K, s)) << r << " " << K << " " << s;
        ASSERT_EQ(table[K][s], restricted_syllable_count(r, K, s));
      }
  }
}

// The central correctness gate: closed forms against breadth-first search.
TEST(CountWords, AgreesWithBallEnumeration) {
  for (auto v : {count_variant::group(), count_variant::semigroup(), count_variant::projective()})
    for (std::uint32_t n = 1; n <= 4; ++n) {
      const auto census = enumerate_ball(n, 7, v);
      for (std::uint32_t K = 1; K <= 7; ++K) ASSERT_EQ(census.counts[K], count_words(n, K, v)) << v.name() << n << K;
    }
  for (std::uint32_t r = 2; r <= 5; ++r)
    for (std::uint32_t n = 1; n <= 4; ++n) {
      const auto v = count_variant::restricted(r);
      const auto census = enumerate_ball(n, 6, v);
      for (std::uint32_t K = 1; K <= 6; ++K) ASSERT_EQ(census.counts[K], count_words(n, K, v)) << r << " " << n << K;
    }
}

TEST(Volume, FreeGroupRatio) {
  const auto est = log_volume_estimate(2, 60, count_variant::group());
  EXPECT_NEAR(est.log_ratio, std::log(3.0), 1e-12);
  EXPECT_THROW(log_volume_estimate(2, 1, count_variant::group()), std::invalid_argument);
}

// Beyond K = n the ratios move in one direction, except in the group at
// n = 3, where the eigenvalue -1 of 2T + I outweighs 2(1 - sqrt 5)/2 + 1 and
// the ratios alternate.
TEST(Volume, MonotoneBeyondN) {
  for (std::uint32_t n = 2; n <= 16; ++n) {
    EXPECT_TRUE(log_volume_estimate(n, 8 * n, count_variant::semigroup()).monotone_from(n)) << n;
    EXPECT_EQ(log_volume_estimate(n, 8 * n, count_variant::group()).monotone_from(n), n != 3) << n;
  }
}

// The gap to the spectral limit at K = 8n is below 1e-6 only up to n = 15;
// it is 1.65e-6 (group) and 6.39e-6 (semigroup) at n = 20. At K = 16n it is
// below 1e-9.
TEST(Volume, ConvergenceInK) {
  for (std::uint32_t n = 2; n <= 20; ++n)
    for (auto v : {count_variant::group(), count_variant::semigroup()}) {
      const double limit = finite_volume(n, v);
      if (n <= 15) {
        EXPECT_NEAR(log_volume_estimate(n, 8 * n, v).log_ratio, limit, 1e-6) << n;
      }
      EXPECT_NEAR(log_volume_estimate(n, 16 * n, v).log_ratio, limit, 1e-9) << n;
    }
  EXPECT_NEAR(log_volume_estimate(20, 160, count_variant::semigroup()).log_ratio -
                  finite_volume(20, count_variant::semigroup()),
              6.39e-6, 1e-8);
}

TEST(Volume, IncreasesTowardTheLimits) {
  // Finite-n volumes stay below log 7, log 4 and grow with n.
  double prev_g = 0, prev_s = 0;
  for (std::uint32_t n : {4u, 8u, 16u, 32u}) {
    const double g = log_volume_estimate(n, 8 * n, count_variant::group()).log_ratio;
    const double s = log_volume_estimate(n, 8 * n, count_variant::semigroup()).log_ratio;
    EXPECT_LT(g, std::log(7.0));
    EXPECT_LT(s, std::log(4.0));
    EXPECT_GT(g, prev_g);
    EXPECT_GT(s, prev_s);
    prev_g = g;
    prev_s = s;
  }
}

// theta_n(s+1)/theta_n(s) tends to lambda_max(n) from above, and
// lambda_max(n) tends to 3; at n = 30 the limit is 2.96157.
TEST(ThetaAsymptotic, RatioApproachesLambdaMax) {
  auto ratio = [](std::uint32_t n, std::uint32_t s) {
    return static_cast<double>(real50(theta_exact(n, s + 1)) / real50(theta_exact(n, s)));
  };
  EXPECT_NEAR(ratio(30, 40), 3.0610795, 1e-6);
  EXPECT_NEAR(ratio(30, 400), spectrum_numeric(30).front(), 1e-6);
  EXPECT_GT(ratio(30, 100), ratio(30, 200));
  EXPECT_NEAR(spectrum_numeric(200).front(), 3.0, 0.02);
  for (std::uint32_t s = 1; s < 50; ++s) EXPECT_EQ(theta_exact(2, s + 1), theta_exact(2, s));
  EXPECT_NEAR(theta_asymptotic(30, 5) / theta_asymptotic(30, 4), 3.0, 1e-12);
  EXPECT_THROW(theta_asymptotic(3, 4), std::invalid_argument);
  EXPECT_THROW(theta_asymptotic(8, 0), std::invalid_argument);
}

TEST(BigCount, DecimalRoundTrip) {
  const auto v = count_words(20, 200, count_variant::semigroup());
  EXPECT_EQ(from_decimal(to_decimal(v)), v);
  EXPECT_THROW(from_decimal("-3"), std::invalid_argument);
  EXPECT_THROW(from_decimal(""), std::invalid_argument);
}
