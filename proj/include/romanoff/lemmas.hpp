#pragma once

// Incomplete gamma at integer shape, prime log-power sums with certified tail
// bounds, the min(p, k)-weighted prime sum, and an exact Abel summation check.

#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "romanoff/arith.hpp"
#include "romanoff/errors.hpp"
#include "romanoff/sieve.hpp"

namespace romanoff {

struct GammaValue {
  unsigned s = 1;
  double x = 0.0;
  double value = 0.0;           // Gamma(s, x)
  std::optional<double> bound;  // s! x^{s-1} e^{-x}, populated for x >= 1
};

// Gamma(s, x) = (s-1)! e^{-x} sum_{i<s} x^i / i!.
inline GammaValue incomplete_gamma(unsigned s, double x) {
  if (s == 0) throw ParameterError("incomplete_gamma needs s >= 1");
  if (!(x >= 0)) throw ParameterError("incomplete_gamma needs x >= 0");
  double term = 1.0;
  double series = 1.0;
  for (unsigned i = 1; i < s; ++i) {
    term *= x / i;
    series += term;
  }
  GammaValue g;
  g.s = s;
  g.x = x;
  g.value = factorial(s - 1) * std::exp(-x) * series;
  if (x >= 1) g.bound = factorial(s) * std::pow(x, s - 1.0) * std::exp(-x);
  return g;
}

// Upper bound for sum_{n > T} (ln n)^s / n^2 with T0 = floor(T): the integral from T0 is
// Gamma(s+1, ln T0), plus the peak value (s/2)^s e^{-s} unless the summand already
// decreases on [T0, inf), i.e. T0 >= e^{s/2}.
inline double log_power_tail_bound(unsigned s, double T) {
  const double T0 = std::floor(T);
  if (T0 < 1) throw ParameterError("tail bound needs T >= 1");
  const double integral = incomplete_gamma(s + 1, std::log(T0)).value;
  if (T0 >= std::exp(s / 2.0)) return integral;
  return integral + std::pow(s / 2.0, static_cast<double>(s)) * std::exp(-static_cast<double>(s));
}

struct PrimeLogPowerSums {
  double head = 0.0;          // sum_{p <= k} (ln p)^s / p
  double tail_partial = 0.0;  // sum_{k < p <= T} (ln p)^s / p^2
  double tail_remainder_bound = 0.0;  // bound on sum_{p > T} (ln p)^s / p^2
  double head_ratio = 0.0;    // head / (ln k)^s, k >= 2
  double tail_ratio = 0.0;    // tail_partial k / (s! (ln(k+2))^{s-1})
};

inline PrimeLogPowerSums prime_log_power_sums(u64 k, unsigned s, const PrimeList& primes, double tail_limit) {
  if (k == 0 || s == 0) throw ParameterError("prime_log_power_sums needs k, s >= 1");
  if (tail_limit < static_cast<double>(k)) throw ParameterError("tail limit must be >= k");
  primes.require(tail_limit);
  CompensatedSum head;
  CompensatedSum tail;
  auto [first, last] = primes.up_to(tail_limit);
  for (auto it = first; it != last; ++it) {
    const double p = static_cast<double>(*it);
    const double lp = std::pow(std::log(p), static_cast<double>(s));
    if (*it <= k) {
      head += lp / p;
    } else {
      tail += lp / (p * p);
    }
  }
  PrimeLogPowerSums out;
  out.head = head.value();
  out.tail_partial = tail.value();
  out.tail_remainder_bound = log_power_tail_bound(s, tail_limit);
  if (k >= 2) out.head_ratio = out.head / std::pow(std::log(static_cast<double>(k)), static_cast<double>(s));
  out.tail_ratio = out.tail_partial * static_cast<double>(k) /
                   (factorial(s) * std::pow(std::log(static_cast<double>(k) + 2.0), s - 1.0));
  return out;
}

struct MinPkSum {
  double value = 0.0;             // 1 + sum_{p <= T} min(p, k) (ln p)^s / p^2
  double remainder_bound = 0.0;   // bound on k sum_{p > T} (ln p)^s / p^2
  double normalized = 0.0;        // value / (s! (ln(k+1))^s)
};

inline MinPkSum min_pk_sum(u64 k, unsigned s, const PrimeList& primes, double tail_limit) {
  if (k == 0 || s == 0) throw ParameterError("min_pk_sum needs k, s >= 1");
  if (tail_limit < static_cast<double>(k)) throw ParameterError("tail limit must be >= k");
  primes.require(tail_limit);
  CompensatedSum sum;
  sum += 1.0;
  auto [first, last] = primes.up_to(tail_limit);
  for (auto it = first; it != last; ++it) {
    const double p = static_cast<double>(*it);
    const double w = static_cast<double>(std::min<u64>(*it, k));
    sum += w * std::pow(std::log(p), static_cast<double>(s)) / (p * p);
  }
  MinPkSum out;
  out.value = sum.value();
  out.remainder_bound = static_cast<double>(k) * log_power_tail_bound(s, tail_limit);
  out.normalized = out.value / (factorial(s) * std::pow(std::log(static_cast<double>(k) + 1.0), static_cast<double>(s)));
  return out;
}

enum class AbelKernel { Reciprocal, ReciprocalSquare };

inline AbelKernel parse_abel_kernel(const std::string& name) {
  if (name == "reciprocal") return AbelKernel::Reciprocal;
  if (name == "reciprocal_square") return AbelKernel::ReciprocalSquare;
  throw DomainError("unknown Abel kernel '" + name + "'");
}

struct AbelCheck {
  double direct = 0.0;
  double abel = 0.0;
  bool agree = true;
};

// direct = sum a_n f(n); abel = A(N) f(N) - int_1^N A(t) f'(t) dt, where A is
// constant on each [n, n+1) so the integral is sum A(n) (f(n+1) - f(n)).
inline AbelCheck abel_check(std::span<const double> weights, AbelKernel kernel) {
  auto f = [kernel](double t) { return kernel == AbelKernel::Reciprocal ? 1.0 / t : 1.0 / (t * t); };
  AbelCheck out;
  const std::size_t N = weights.size();
  if (N == 0) return out;
  CompensatedSum direct;
  CompensatedSum integral;
  double A = 0.0;
  for (std::size_t n = 1; n <= N; ++n) {
    const double fn = f(static_cast<double>(n));
    direct += weights[n - 1] * fn;
    A += weights[n - 1];
    if (n < N) integral += A * (f(static_cast<double>(n + 1)) - fn);
  }
  out.direct = direct.value();
  out.abel = A * f(static_cast<double>(N)) - integral.value();
  out.agree = std::fabs(out.direct - out.abel) <= 1e-9 * std::fabs(out.direct) + 1e-12;
  return out;
}

}  // namespace romanoff
