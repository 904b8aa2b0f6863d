#pragma once

// Smallest-prime-factor sieve, prime tables and the elementary arithmetic
// functions built on them: phi, n/phi(n), nu, P+, P-, squarefree tests,
// Mertens products and Chebyshev's theta.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "romanoff/arith.hpp"
#include "romanoff/errors.hpp"

namespace romanoff {

inline constexpr u64 kDefaultSieveLimit = 100'000'000;
inline constexpr u64 kDefaultSieveCap = 1'000'000'000;

class FactorSieve {
 public:
  FactorSieve() = default;

  // Linear sieve; every composite is crossed off exactly once by its smallest prime.
  explicit FactorSieve(u64 limit, u64 cap = kDefaultSieveCap) : limit_(limit) {
    if (limit < 2 || limit > cap || limit > std::numeric_limits<u32>::max()) {
      throw CapacityError("sieve limit " + std::to_string(limit) + " outside [2, " + std::to_string(cap) + "]");
    }
    spf_.assign(limit + 1, 0);
    spf_[1] = 1;
    for (u64 i = 2; i <= limit; ++i) {
      if (spf_[i] == 0) {
        spf_[i] = static_cast<u32>(i);
        primes_.push_back(static_cast<u32>(i));
      }
      const u32 si = spf_[i];
      for (u32 p : primes_) {
        if (p > si || static_cast<u64>(p) * i > limit) break;
        spf_[p * i] = p;
      }
    }
  }

  // Adopts a previously computed table (used by the on-disk cache).
  static FactorSieve from_table(std::vector<u32> spf) {
    FactorSieve s;
    if (spf.size() < 3) throw CapacityError("spf table too small");
    s.limit_ = spf.size() - 1;
    s.spf_ = std::move(spf);
    for (u64 i = 2; i <= s.limit_; ++i) {
      if (s.spf_[i] == i) s.primes_.push_back(static_cast<u32>(i));
    }
    return s;
  }

  u64 limit() const { return limit_; }
  const std::vector<u32>& table() const { return spf_; }
  const std::vector<u32>& primes() const { return primes_; }

  u32 spf(u64 n) const {
    check(n);
    return spf_[n];
  }
  bool is_prime(u64 n) const { return n >= 2 && n <= limit_ && spf_[n] == n; }

  // (p, e) pairs in ascending p.
  std::vector<std::pair<u64, u32>> factor(u64 n) const {
    check(n);
    std::vector<std::pair<u64, u32>> out;
    while (n > 1) {
      const u32 p = spf_[n];
      u32 e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
    return out;
  }

  std::vector<u64> distinct_primes(u64 n) const {
    check(n);
    std::vector<u64> out;
    while (n > 1) {
      const u32 p = spf_[n];
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
    return out;
  }

  void check(u64 n) const {
    if (n < 1 || n > limit_) {
      throw RangeError("argument " + std::to_string(n) + " outside sieve range [1, " + std::to_string(limit_) + "]");
    }
  }

 private:
  u64 limit_ = 0;
  std::vector<u32> spf_;
  std::vector<u32> primes_;
};

inline FactorSieve build_sieve(u64 limit, u64 cap = kDefaultSieveCap) { return FactorSieve(limit, cap); }

// All primes <= limit, ascending.
class PrimeList {
 public:
  PrimeList() = default;

  explicit PrimeList(u64 limit) : limit_(limit) {
    if (limit > kDefaultSieveCap * 4) throw CapacityError("prime list limit too large");
    if (limit < 2) return;
    std::vector<bool> composite(limit + 1, false);
    for (u64 i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      primes_.push_back(i);
      for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
    }
  }

  static PrimeList from_sieve(const FactorSieve& sieve) {
    PrimeList pl;
    pl.limit_ = sieve.limit();
    pl.primes_.assign(sieve.primes().begin(), sieve.primes().end());
    return pl;
  }

  u64 limit() const { return limit_; }
  const std::vector<u64>& primes() const { return primes_; }
  std::size_t size() const { return primes_.size(); }

  // pi(x) for real x; requires x <= limit.
  u64 pi(double x) const {
    require(x);
    if (x < 2) return 0;
    const u64 xi = static_cast<u64>(std::floor(x));
    return static_cast<u64>(std::upper_bound(primes_.begin(), primes_.end(), xi) - primes_.begin());
  }

  bool is_prime(u64 n) const {
    if (n > limit_) throw RangeError("primality query " + std::to_string(n) + " beyond prime list limit");
    return std::binary_search(primes_.begin(), primes_.end(), n);
  }

  // Primes p <= x.
  std::pair<std::vector<u64>::const_iterator, std::vector<u64>::const_iterator> up_to(double x) const {
    return {primes_.begin(), primes_.begin() + static_cast<std::ptrdiff_t>(pi(x))};
  }

  void require(double x) const {
    if (x > static_cast<double>(limit_)) {
      throw RangeError("x=" + std::to_string(x) + " exceeds prime list limit " + std::to_string(limit_));
    }
  }

 private:
  u64 limit_ = 0;
  std::vector<u64> primes_;
};

inline u64 totient(u64 n, const FactorSieve& sieve) {
  u64 phi = n;
  for (u64 p : sieve.distinct_primes(n)) phi = phi / p * (p - 1);
  return phi;
}

// n / phi(n), reduced. Depends only on the radical of n.
inline Ratio totient_ratio(u64 n, const FactorSieve& sieve) {
  u64 rad = 1;
  u64 phi_rad = 1;
  for (u64 p : sieve.distinct_primes(n)) {
    rad *= p;
    phi_rad *= p - 1;
  }
  return Ratio::make(rad, phi_rad);
}

inline u32 nu(u64 n, const FactorSieve& sieve) { return static_cast<u32>(sieve.distinct_primes(n).size()); }

inline u64 P_plus(u64 n, const FactorSieve& sieve) {
  const auto ps = sieve.distinct_primes(n);
  return ps.empty() ? 1 : ps.back();
}

// Least prime factor with P-(1) = +infinity carried as a tag, not a number.
struct LeastPrimeFactor {
  std::optional<u64> prime;  // empty means +infinity

  bool is_infinite() const { return !prime.has_value(); }
  // True when every prime factor exceeds y (vacuous for n = 1).
  bool exceeds(double y) const { return is_infinite() || static_cast<double>(*prime) > y; }
  friend bool operator==(const LeastPrimeFactor&, const LeastPrimeFactor&) = default;
};

inline LeastPrimeFactor P_minus(u64 n, const FactorSieve& sieve) {
  sieve.check(n);
  if (n == 1) return {};
  return {sieve.spf(n)};
}

inline bool is_squarefree(u64 n, const FactorSieve& sieve) {
  for (auto [p, e] : sieve.factor(n)) {
    if (e > 1) return false;
  }
  return true;
}

struct MertensProducts {
  double plus_product = 1.0;   // prod_{p<=x} (1 + 1/p)
  double minus_product = 1.0;  // prod_{p<=x} (1 - 1/p)^{-1}
  double plus_over_lnx = 0.0;
  double minus_over_lnx = 0.0;
};

inline MertensProducts mertens_products(double x, const PrimeList& primes) {
  if (!(x >= 2)) throw ParameterError("mertens_products requires x >= 2");
  primes.require(x);
  // Accumulate in log space to keep 10^6-factor products well conditioned.
  CompensatedSum log_plus;
  CompensatedSum log_minus;
  auto [first, last] = primes.up_to(x);
  for (auto it = first; it != last; ++it) {
    const double p = static_cast<double>(*it);
    log_plus += std::log1p(1.0 / p);
    log_minus += -std::log1p(-1.0 / p);
  }
  MertensProducts m;
  m.plus_product = std::exp(log_plus.value());
  m.minus_product = std::exp(log_minus.value());
  m.plus_over_lnx = m.plus_product / std::log(x);
  m.minus_over_lnx = m.minus_product / std::log(x);
  return m;
}

inline double chebyshev_theta(double x, const PrimeList& primes) {
  if (!(x >= 2)) throw ParameterError("chebyshev_theta requires x >= 2");
  primes.require(x);
  CompensatedSum theta;
  auto [first, last] = primes.up_to(x);
  for (auto it = first; it != last; ++it) theta += std::log(static_cast<double>(*it));
  return theta.value();
}

}  // namespace romanoff
