#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "romanoff/sequences.hpp"

using namespace romanoff;

namespace {

const PrimeList& primes() {
  static const PrimeList pl(1'000'000);
  return pl;
}

std::vector<u64> terms(const std::string& spec, double x) { return enumerate_terms(SequenceSpec::parse(spec), x); }

// Ordered pairs a_k < a_j <= x with p | a_j - a_k, by a triple loop.
double pair_sum_oracle(const std::vector<u64>& a, double cutoff) {
  double raw = 0;
  for (u64 p = 2; static_cast<double>(p) <= cutoff; ++p) {
    if (!is_prime_u64(p)) continue;
    for (u64 ak : a) {
      for (u64 aj : a) {
        if (ak < aj && (aj - ak) % p == 0) raw += std::log(static_cast<double>(p)) / static_cast<double>(p);
      }
    }
  }
  return raw;
}

}  // namespace

TEST(SequenceSpec, RoundTrip) {
  for (const char* text : {"geom:2:start=0", "geom:3:start=1", "tower:2:3", "poly:1,0,0", "poly:2,-3,7",
                           "ecorders:1,1", "ecorders:-2,5", "explicit:1,1,2", "explicit:"}) {
    const SequenceSpec s = SequenceSpec::parse(text);
    EXPECT_EQ(s.to_string(), text);
    EXPECT_EQ(SequenceSpec::parse(s.to_string()), s);
  }
  EXPECT_EQ(SequenceSpec::parse("geom:2").to_string(), "geom:2:start=0");
}

TEST(SequenceSpec, ParseErrors) {
  for (const char* text : {"", "geom", "geom:1", "geom:2:start=2", "geom:2:begin=0", "tower:2", "tower:1:2",
                           "tower:2:1", "poly:", "poly:1,,0", "ecorders:0,0", "explicit:1,0", "explicit:1,-2",
                           "explicit:@/nonexistent/file", "cubes:3"}) {
    EXPECT_ANY_THROW(SequenceSpec::parse(text)) << text;
  }
  EXPECT_THROW(SequenceSpec::parse("nope:1"), ParameterError);
  EXPECT_THROW(SequenceSpec::parse("ecorders:0,0"), DomainError);
}

TEST(SequenceSpec, ExplicitFromFile) {
  const std::string path = testing::TempDir() + "romanoff_explicit.txt";
  {
    std::ofstream f(path);
    f << "5\n1\n\n  3 \n1\n";
  }
  const SequenceSpec s = SequenceSpec::parse("explicit:@" + path);
  EXPECT_EQ(enumerate_terms(s, 10), (std::vector<u64>{1, 1, 3, 5}));
  EXPECT_EQ(SequenceSpec::parse(s.to_string()), s);
  std::remove(path.c_str());
}

TEST(Enumerate, Examples) {
  EXPECT_EQ(terms("geom:2:start=0", 5), (std::vector<u64>{1, 2, 4}));
  EXPECT_EQ(terms("geom:2:start=1", 5), (std::vector<u64>{2, 4}));
  EXPECT_EQ(terms("tower:2:2", 20), (std::vector<u64>{1, 2, 16}));
  EXPECT_EQ(terms("poly:1,0,0", 10), (std::vector<u64>{1, 4, 9}));
  EXPECT_EQ(terms("poly:1,-5,0", 20), (std::vector<u64>{6, 14}));  // j^2 - 5j > 0 from j = 6
  EXPECT_EQ(terms("poly:-1,10,0", 100), (std::vector<u64>{9, 9, 16, 16, 21, 21, 24, 24, 25}));
  EXPECT_EQ(terms("explicit:", 10), std::vector<u64>{});
  EXPECT_EQ(terms("geom:10:start=0", 1.8e19).size(), 20u);
  EXPECT_EQ(terms("tower:3:3", 1e18), (std::vector<u64>{1, 3, 6561, 7625597484987ULL}));
  EXPECT_THROW(terms("poly:5", 10), DomainError);
  EXPECT_THROW(terms("geom:2", 0.5), ParameterError);
}

TEST(Enumerate, EllipticOrders) {
  const SequenceSpec s = SequenceSpec::parse("ecorders:1,1");
  const double x = 5000;
  const auto t = enumerate_terms(s, x, &primes());
  EXPECT_EQ(t, enumerate_terms(s, x));  // local prime table gives the same answer
  std::vector<u64> brute;
  for (u64 q : primes().primes()) {
    if (q > 3 * x) break;
    const u64 n = count_points(EllipticCurve(1, 1), q);
    if (n <= x) brute.push_back(n);
  }
  std::sort(brute.begin(), brute.end());
  EXPECT_EQ(t, brute);
  EXPECT_LE(static_cast<double>(max_multiplicity(t)), 9 * std::sqrt(2 * x));
}

TEST(Counting, Examples) {
  const SequenceSpec g = SequenceSpec::parse("geom:2:start=0");
  EXPECT_EQ(N_A(g, 5), 3u);
  EXPECT_EQ(ord_A(g, 4), 1u);
  EXPECT_EQ(ord_A(g, 3), 0u);
  EXPECT_EQ(rho_A(g, 5), 1u);
  const SequenceSpec e = SequenceSpec::parse("explicit:1,1,2");
  EXPECT_EQ(ord_A(e, 1), 2u);
  EXPECT_EQ(rho_A(e, 2), 2u);
  const SequenceSpec sq = SequenceSpec::parse("poly:1,0,0");
  for (u64 m = 1; m <= 500; ++m) ASSERT_LE(ord_A(sq, m), 1u);
}

TEST(Counting, Identities) {
  for (const char* spec : {"geom:3:start=0", "tower:2:2", "poly:1,0,1", "explicit:4,4,4,9,1", "ecorders:2,3"}) {
    const SequenceSpec s = SequenceSpec::parse(spec);
    u64 prev = 0;
    for (double x : {1.0, 10.0, 100.0, 1000.0}) {
      const u64 n = N_A(s, x);
      ASSERT_GE(n, prev);
      prev = n;
      u64 total = 0;
      for (u64 m = 1; m <= static_cast<u64>(x); ++m) {
        const u64 o = ord_A(s, m);
        ASSERT_LE(o, rho_A(s, x));
        total += o;
      }
      ASSERT_EQ(total, n) << spec << ' ' << x;
    }
  }
  for (double x : {10.0, 1e4, 1e12}) {
    EXPECT_EQ(rho_A(SequenceSpec::parse("geom:7:start=0"), x), 1u);
    EXPECT_EQ(rho_A(SequenceSpec::parse("tower:2:3"), x), 1u);
  }
}

TEST(Doubling, Examples) {
  EXPECT_EQ(doubling_ratio(SequenceSpec::parse("explicit:1"), 4), 1.0);
  EXPECT_EQ(doubling_ratio(SequenceSpec::parse("geom:2:start=0"), 16), 0.8);
  const double r = doubling_ratio(SequenceSpec::parse("poly:1,0,0"), 1e4);
  EXPECT_NEAR(r, 1 / std::sqrt(2.0), 0.05 / std::sqrt(2.0));
  EXPECT_THROW(doubling_ratio(SequenceSpec::parse("explicit:50"), 10), DomainError);
}

TEST(PairSum, EmptyPrimeRange) {
  const auto t = terms("geom:2:start=0", 100);
  const CongruencePairSum c = congruence_pair_sum(t, 100, 0.1, primes());  // (ln 100)^0.1 < 2
  EXPECT_EQ(c.raw, 0.0);
}

TEST(PairSum, SmallExplicit) {
  const std::vector<u64> a{1, 2, 3, 4, 5, 6};
  const double x = 7;
  const double alpha = std::log(3.5) / std::log(std::log(x));  // cutoff 3.5: primes {2, 3}
  const CongruencePairSum c = congruence_pair_sum(a, x, alpha, primes());
  EXPECT_NEAR(c.prime_cutoff, 3.5, 1e-12);
  EXPECT_NEAR(c.raw, pair_sum_oracle(a, 3.5), 1e-12);
  EXPECT_NEAR(c.raw, 6 * std::log(2.0) / 2 + 3 * std::log(3.0) / 3, 1e-12);
}

TEST(PairSum, MatchesTripleLoop) {
  SplitMix64 rng(21);
  for (int t = 0; t < 40; ++t) {
    std::vector<u64> a(rng.uniform(1, 200));
    for (auto& v : a) v = rng.uniform(1, 5000);
    std::sort(a.begin(), a.end());
    const double alpha = 0.5 + 0.1 * static_cast<double>(rng.uniform(0, 15));
    const CongruencePairSum c = congruence_pair_sum(a, 5000, alpha, primes());
    ASSERT_NEAR(c.raw, pair_sum_oracle(a, c.prime_cutoff), 1e-9 * (1 + c.raw));
    ASSERT_NEAR(c.normalized, c.raw / (a.size() * static_cast<double>(a.size())), 1e-15 * (1 + c.raw));
  }
}

TEST(PairSum, GeometricTwoScales) {
  const SequenceSpec g = SequenceSpec::parse("geom:2:start=0");
  const double a = congruence_pair_sum(g, std::ldexp(1.0, 16), 1.0, primes()).normalized;
  const double b = congruence_pair_sum(g, std::ldexp(1.0, 20), 1.0, primes()).normalized;
  EXPECT_GT(a, 0);
  EXPECT_LT(std::max(a, b) / std::min(a, b), 2.0);
}
