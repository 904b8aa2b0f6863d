#include <gtest/gtest.h>

#include <cmath>

#include "romanoff/elliptic.hpp"

using namespace romanoff;

namespace {

const PrimeList& primes() {
  static const PrimeList pl(200'000);
  return pl;
}

}  // namespace

TEST(Curve, DiscriminantAndParse) {
  EXPECT_THROW(EllipticCurve(0, 0), DomainError);
  EXPECT_THROW(EllipticCurve(-3, 2), DomainError);  // 4(-27) + 27*4 = 0
  const EllipticCurve E(1, 1);
  EXPECT_EQ(E.discriminant(), 31);
  EXPECT_EQ(EllipticCurve::parse("1,1"), E);
  EXPECT_EQ(EllipticCurve::parse(EllipticCurve(-7, 10).to_string()), EllipticCurve(-7, 10));
  EXPECT_THROW(EllipticCurve::parse("1"), ParameterError);
  EXPECT_THROW(EllipticCurve::parse("1,x"), ParameterError);
  EXPECT_THROW(EllipticCurve::parse(",1"), ParameterError);
}

TEST(Legendre, Examples) {
  EXPECT_EQ(legendre_symbol(0, 7), 0);
  EXPECT_EQ(legendre_symbol(1, 7), 1);
  EXPECT_EQ(legendre_symbol(2, 5), -1);
  EXPECT_EQ(legendre_symbol(-1, 5), 1);
  EXPECT_EQ(legendre_symbol(-1, 7), -1);
  EXPECT_THROW(legendre_symbol(1, 2), DomainError);
  EXPECT_THROW(legendre_symbol(1, 9), DomainError);
}

TEST(Legendre, MatchesSquares) {
  for (u64 p : {3ULL, 5ULL, 11ULL, 101ULL}) {
    std::vector<bool> sq(p, false);
    for (u64 y = 1; y < p; ++y) sq[y * y % p] = true;
    for (u64 a = 1; a < p; ++a) ASSERT_EQ(legendre_symbol(static_cast<i64>(a), p), sq[a] ? 1 : -1);
  }
}

TEST(CountPoints, Examples) {
  EXPECT_EQ(count_points(EllipticCurve(0, 1), 2), 3u);
  EXPECT_EQ(count_points(EllipticCurve(1, 1), 5), 9u);
  EXPECT_THROW(count_points(EllipticCurve(1, 1), 9), DomainError);
}

TEST(CountPoints, AgreesWithEnumeration) {
  auto [first, last] = primes().up_to(200);
  for (i64 A = -5; A <= 5; ++A) {
    for (i64 B = -5; B <= 5; ++B) {
      if (4 * A * A * A + 27 * B * B == 0) continue;
      const EllipticCurve E(A, B);
      for (auto it = first; it != last; ++it) {
        const u64 n = count_points(E, *it);
        ASSERT_EQ(n, count_points_enumerate(E, *it)) << A << ',' << B << " p=" << *it;
        ASSERT_GE(n, 1u);
        ASSERT_LE(n, 1 + 2 * *it);
      }
    }
  }
}

TEST(Hasse, Examples) {
  EXPECT_NEAR(hasse_margin(EllipticCurve(1, 1), 5), 2 * std::sqrt(5.0) - 3, 1e-12);
  EXPECT_NEAR(hasse_margin(EllipticCurve(0, 1), 2), 2 * std::sqrt(2.0), 1e-12);
}

TEST(Hasse, FamilySweep) {
  double min_margin = INFINITY;
  auto [first, last] = primes().up_to(1000);
  for (i64 A = -3; A <= 3; ++A) {
    for (i64 B = -3; B <= 3; ++B) {
      if (4 * A * A * A + 27 * B * B == 0) continue;
      const EllipticCurve E(A, B);
      for (auto it = first; it != last; ++it) {
        min_margin = std::min(min_margin, hasse_margin(E, *it));
        ASSERT_TRUE(within_hasse_interval(count_points(E, *it), *it));
      }
    }
  }
  EXPECT_GT(min_margin, 0.0);
}

TEST(OrderSequence, Examples) {
  const EllipticCurve E(1, 1);
  const OrderSequence two = order_sequence(E, 2, primes());
  ASSERT_EQ(two.entries.size(), 1u);
  EXPECT_EQ(two.entries[0].p, 2u);
  const OrderSequence ten = order_sequence(E, 10, primes());
  ASSERT_EQ(ten.entries.size(), 4u);
  for (const auto& e : ten.entries) EXPECT_EQ(e.order, count_points_enumerate(E, e.p));
  EXPECT_EQ(ten.to_csv().substr(0, 8), "p,order\n");
  EXPECT_THROW(order_sequence(E, 1e6, primes()), RangeError);
}

TEST(OrderSequence, ThreadIndependent) {
  const EllipticCurve E(2, -3);
  set_thread_count(1);
  const auto one = order_sequence(E, 20'000, primes()).entries;
  set_thread_count(4);
  const auto four = order_sequence(E, 20'000, primes()).entries;
  set_thread_count(1);
  EXPECT_EQ(one, four);
}

TEST(Census, SumsToPi) {
  const EllipticCurve E(1, 1);
  const CongruenceCensus c1 = congruence_class_census(E, 1000, 1, primes());
  ASSERT_EQ(c1.counts.size(), 1u);
  EXPECT_EQ(c1.counts[0], primes().pi(1000));
  const CongruenceCensus c2 = congruence_class_census(E, 100, 2, primes());
  EXPECT_EQ(c2.counts[0] + c2.counts[1], 25u);
  const CongruenceCensus c7 = congruence_class_census(E, 1e5, 7, primes());
  u64 total = 0;
  for (u64 v : c7.counts) total += v;
  EXPECT_EQ(total, c7.pi_x);
  EXPECT_NEAR(c7.expected_per_unit, c7.pi_x / 6.0, 1e-9);
}

TEST(Theorem5, LowerSide) {
  const FactorSieve sieve(250'000);
  const EllipticCurve E(1, 1);
  const MomentReport r2 = theorem5_report(E, 2, 1, sieve, primes());
  EXPECT_GE(r2.lhs, 1.0);
  double prev = 0;
  for (unsigned s = 1; s <= 3; ++s) {
    const MomentReport r = theorem5_report(E, 1e4, s, sieve, primes());
    EXPECT_GE(r.lhs, r.rhs_core);
    EXPECT_GE(r.lhs, prev);
    EXPECT_FALSE(r.notes.empty());
    prev = r.lhs;
  }
  const double a = theorem5_report(E, 1e4, 1, sieve, primes()).implied_constant;
  const double b = theorem5_report(E, 1e5, 1, sieve, primes()).implied_constant;
  EXPECT_LT(std::fabs(b / a - 1), 0.2);
  EXPECT_THROW(theorem5_report(E, 2e5, 1, sieve, primes()), RangeError);
}
