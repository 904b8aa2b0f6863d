#include <gtest/gtest.h>

#include <cmath>

#include "romanoff/lemmas.hpp"

using namespace romanoff;

namespace {

const PrimeList& primes() {
  static const PrimeList pl(1'000'000);
  return pl;
}

}  // namespace

TEST(Gamma, Examples) {
  EXPECT_NEAR(incomplete_gamma(1, 0).value, 1.0, 1e-15);
  EXPECT_NEAR(incomplete_gamma(1, 2).value, std::exp(-2.0), 1e-15);
  EXPECT_NEAR(incomplete_gamma(2, 1).value, 2 * std::exp(-1.0), 1e-15);
  EXPECT_NEAR(incomplete_gamma(3, 1).value, 5 * std::exp(-1.0), 1e-14);
  EXPECT_FALSE(incomplete_gamma(3, 0.5).bound.has_value());
  ASSERT_TRUE(incomplete_gamma(3, 1).bound.has_value());
  EXPECT_NEAR(*incomplete_gamma(3, 1).bound, 6 * std::exp(-1.0), 1e-14);
  EXPECT_THROW(incomplete_gamma(0, 1), ParameterError);
  EXPECT_THROW(incomplete_gamma(2, -1), ParameterError);
}

TEST(Gamma, AtZeroIsFactorial) {
  for (unsigned s = 1; s <= 15; ++s) EXPECT_NEAR(incomplete_gamma(s, 0).value, factorial(s - 1), 1e-12 * factorial(s - 1));
}

TEST(Gamma, BoundGrid) {
  for (unsigned s = 1; s <= 12; ++s) {
    for (int i = 0; i <= 196; ++i) {
      const double x = 1 + 0.25 * i;
      const GammaValue g = incomplete_gamma(s, x);
      ASSERT_LE(g.value, *g.bound * (1 + 1e-12)) << s << ' ' << x;
    }
  }
}

TEST(Gamma, Recurrence) {
  for (unsigned s = 2; s <= 12; ++s) {
    for (double x : {0.0, 0.3, 1.0, 4.5, 20.0}) {
      const double lhs = incomplete_gamma(s, x).value;
      const double rhs = (s - 1) * incomplete_gamma(s - 1, x).value + std::pow(x, s - 1.0) * std::exp(-x);
      ASSERT_NEAR(lhs, rhs, 1e-10 * std::max(1.0, lhs));
    }
  }
}

TEST(Gamma, MatchesQuadrature) {
  // int_x^inf t^{s-1} e^{-t} dt by Simpson on [x, x + 80]
  for (unsigned s : {1u, 3u, 6u}) {
    for (double x : {0.5, 2.0, 7.0}) {
      const int n = 20000;
      const double h = 80.0 / n;
      auto f = [s](double t) { return std::pow(t, s - 1.0) * std::exp(-t); };
      double sum = f(x) + f(x + 80);
      for (int i = 1; i < n; ++i) sum += (i % 2 ? 4 : 2) * f(x + i * h);
      EXPECT_NEAR(incomplete_gamma(s, x).value, sum * h / 3, 1e-8);
    }
  }
}

TEST(PrimeLogPower, Examples) {
  const PrimeLogPowerSums one = prime_log_power_sums(1, 1, primes(), 100);
  EXPECT_EQ(one.head, 0.0);
  EXPECT_EQ(one.head_ratio, 0.0);
  const PrimeLogPowerSums two = prime_log_power_sums(2, 1, primes(), 100);
  EXPECT_NEAR(two.head, std::log(2.0) / 2, 1e-15);
  EXPECT_NEAR(two.head_ratio, 0.5, 1e-15);
  const PrimeLogPowerSums five = prime_log_power_sums(5, 2, primes(), 1000);
  const double l2 = std::log(2.0), l3 = std::log(3.0), l5 = std::log(5.0);
  EXPECT_NEAR(five.head, l2 * l2 / 2 + l3 * l3 / 3 + l5 * l5 / 5, 1e-14);
  double tail = 0;
  for (u64 p : primes().primes()) {
    if (p > 1000) break;
    if (p > 5) tail += std::pow(std::log(static_cast<double>(p)), 2) / (static_cast<double>(p) * p);
  }
  EXPECT_NEAR(five.tail_partial, tail, 1e-13);
  EXPECT_THROW(prime_log_power_sums(0, 1, primes(), 10), ParameterError);
  EXPECT_THROW(prime_log_power_sums(10, 1, primes(), 5), ParameterError);
  EXPECT_THROW(prime_log_power_sums(10, 1, primes(), 2e6), RangeError);
}

TEST(PrimeLogPower, RatiosStayBounded) {
  for (unsigned s = 1; s <= 4; ++s) {
    double worst = 0;
    for (u64 k : {10ULL, 100ULL, 1000ULL, 10'000ULL}) {
      const PrimeLogPowerSums r = prime_log_power_sums(k, s, primes(), 1e6);
      worst = std::max({worst, r.head_ratio, r.tail_ratio});
    }
    EXPECT_LT(worst, 10.0) << s;
  }
}

TEST(TailBound, DominatesPartialSums) {
  for (unsigned s = 1; s <= 6; ++s) {
    for (double T : {1.0, 2.5, 10.0, 1000.0}) {
      double partial = 0;
      for (u64 n = static_cast<u64>(std::floor(T)) + 1; n <= 2'000'000; ++n) {
        const double ln = std::log(static_cast<double>(n));
        partial += std::pow(ln, static_cast<double>(s)) / (static_cast<double>(n) * n);
      }
      ASSERT_LE(partial, log_power_tail_bound(s, T)) << s << ' ' << T;
    }
  }
  EXPECT_THROW(log_power_tail_bound(1, 0.5), ParameterError);
}

TEST(MinPk, ReducesAtOne) {
  const MinPkSum m = min_pk_sum(1, 2, primes(), 1e5);
  double expect = 1;
  for (u64 p : primes().primes()) {
    if (p > 100'000) break;
    expect += std::pow(std::log(static_cast<double>(p)), 2) / (static_cast<double>(p) * p);
  }
  EXPECT_NEAR(m.value, expect, 1e-12);
}

TEST(MinPk, SplitAtK) {
  const u64 k = 2;
  const MinPkSum m = min_pk_sum(k, 1, primes(), 1e4);
  double expect = 1 + 2 * std::log(2.0) / 4;
  for (u64 p : primes().primes()) {
    if (p > 10'000) break;
    if (p > 2) expect += 2 * std::log(static_cast<double>(p)) / (static_cast<double>(p) * p);
  }
  EXPECT_NEAR(m.value, expect, 1e-12);
}

TEST(MinPk, MonotoneInK) {
  for (unsigned s = 1; s <= 3; ++s) {
    double prev = 0;
    for (u64 k = 1; k <= 200; k += 7) {
      const MinPkSum m = min_pk_sum(k, s, primes(), 1e5);
      ASSERT_GE(m.value, prev);
      ASSERT_TRUE(std::isfinite(m.normalized));
      prev = m.value;
    }
  }
}

TEST(MinPk, RemainderCoversFarTail) {
  const MinPkSum near = min_pk_sum(50, 2, primes(), 1e3);
  const MinPkSum far = min_pk_sum(50, 2, primes(), 1e6);
  EXPECT_LE(far.value - near.value, near.remainder_bound);
  EXPECT_GE(far.value, near.value);
}

TEST(Abel, ZerosAndSingle) {
  const std::vector<double> zeros(20, 0.0);
  const AbelCheck z = abel_check(zeros, AbelKernel::Reciprocal);
  EXPECT_EQ(z.direct, 0.0);
  EXPECT_EQ(z.abel, 0.0);
  EXPECT_TRUE(z.agree);
  std::vector<double> one(10, 0.0);
  one[2] = 3.0;
  const AbelCheck o = abel_check(one, AbelKernel::ReciprocalSquare);
  EXPECT_NEAR(o.direct, 3.0 / 9, 1e-15);
  EXPECT_NEAR(o.abel, 3.0 / 9, 1e-14);
  EXPECT_TRUE(abel_check(std::vector<double>{}, AbelKernel::Reciprocal).agree);
}

TEST(Abel, PrimeWeights) {
  std::vector<double> w(1000, 0.0);
  for (u64 p : primes().primes()) {
    if (p > 1000) break;
    w[p - 1] = std::log(static_cast<double>(p));
  }
  for (AbelKernel k : {AbelKernel::Reciprocal, AbelKernel::ReciprocalSquare}) {
    const AbelCheck c = abel_check(w, k);
    EXPECT_TRUE(c.agree);
    EXPECT_NEAR(c.direct, c.abel, 1e-10);
  }
}

TEST(Abel, RandomVectors) {
  SplitMix64 rng(77);
  for (int t = 0; t < 100; ++t) {
    std::vector<double> w(rng.uniform(1, 300));
    for (auto& v : w) v = static_cast<double>(rng.uniform_signed(-1000, 1000)) / 37.0;
    ASSERT_TRUE(abel_check(w, t % 2 ? AbelKernel::Reciprocal : AbelKernel::ReciprocalSquare).agree);
  }
}

TEST(Abel, KernelNames) {
  EXPECT_EQ(parse_abel_kernel("reciprocal"), AbelKernel::Reciprocal);
  EXPECT_EQ(parse_abel_kernel("reciprocal_square"), AbelKernel::ReciprocalSquare);
  EXPECT_THROW(parse_abel_kernel("cosine"), DomainError);
}
