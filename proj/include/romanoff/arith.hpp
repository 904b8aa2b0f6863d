#pragma once

// Small integer and floating-point helpers shared by every module.

#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "romanoff/errors.hpp"

namespace romanoff {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

// Deterministic Miller-Rabin for the full 64-bit range.
inline bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++r;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Prime factorization by trial division; returns (p, e) ascending.
inline std::vector<std::pair<u64, u32>> trial_factor(u64 n) {
  std::vector<std::pair<u64, u32>> out;
  for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    u32 e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline u64 totient_by_trial(u64 n) {
  u64 phi = n;
  for (auto [p, e] : trial_factor(n)) phi = phi / p * (p - 1);
  return phi;
}

// Checked 128-bit arithmetic for polynomial and product evaluation.
inline i128 checked_mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw CapacityError("128-bit multiplication overflow");
  return r;
}

inline i128 checked_add(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) throw CapacityError("128-bit addition overflow");
  return r;
}

inline u64 to_u64_checked(i128 v, const char* what) {
  if (v < 0 || v > static_cast<i128>(std::numeric_limits<u64>::max())) {
    throw CapacityError(std::string(what) + " does not fit in 64 bits");
  }
  return static_cast<u64>(v);
}

inline i128 abs128(i128 v) { return v < 0 ? -v : v; }

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  CompensatedSum& operator+=(double v) {
    add(v);
    return *this;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Reduced non-negative fraction with 64-bit parts.
struct Ratio {
  u64 num = 0;
  u64 den = 1;

  static Ratio make(u64 n, u64 d) {
    const u64 g = std::gcd(n, d);
    return g == 0 ? Ratio{0, 1} : Ratio{n / g, d / g};
  }
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  BigRational to_big() const { return BigRational(BigInt(num), BigInt(den)); }
  friend bool operator==(const Ratio&, const Ratio&) = default;
};

inline double to_double(const BigRational& q) { return q.convert_to<double>(); }

// Exact sum of many rationals by pairwise reduction, keeping operand sizes balanced.
inline BigRational pairwise_sum(std::vector<BigRational> terms) {
  if (terms.empty()) return BigRational(0);
  while (terms.size() > 1) {
    std::vector<BigRational> next;
    next.reserve((terms.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < terms.size(); i += 2) next.push_back(terms[i] + terms[i + 1]);
    if (terms.size() % 2 == 1) next.push_back(std::move(terms.back()));
    terms = std::move(next);
  }
  return terms.front();
}

inline double factorial(unsigned n) {
  double f = 1.0;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

// splitmix64: portable, seedable generator for randomized checks.
class SplitMix64 {
 public:
  explicit SplitMix64(u64 seed) : state_(seed) {}
  u64 next() {
    u64 z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31U);
  }
  // Uniform in [lo, hi]; modulo bias is negligible for the ranges used here.
  u64 uniform(u64 lo, u64 hi) { return lo + next() % (hi - lo + 1); }
  i64 uniform_signed(i64 lo, i64 hi) {
    return lo + static_cast<i64>(next() % static_cast<u64>(hi - lo + 1));
  }

 private:
  u64 state_;
};

}  // namespace romanoff
