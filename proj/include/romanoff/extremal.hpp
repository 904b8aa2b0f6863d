#pragma once

// Sets A of n <= M that avoid every prime <= y but are divisible by every
// prime in (y, z]. Their mean n/phi(n) is forced up to prod_{y<p<=z} p/(p-1).

#include <cmath>
#include <map>
#include <span>
#include <vector>

#include "romanoff/arith.hpp"
#include "romanoff/errors.hpp"
#include "romanoff/sieve.hpp"

namespace romanoff {

struct ExtremalSet {
  u64 M = 0;
  double y = 0.0;
  double z = 0.0;
  BigInt Q = 1;                    // product of the primes in (y, z]
  std::vector<u64> forced_primes;  // primes in (y, z]
  std::vector<u64> members;        // ascending
  BigRational mean_ratio = 0;      // (sum_{n in A} n/phi(n)) / #A; 0 when empty
  bool empty = true;               // Q > M

  // Q / phi(Q) = prod_{y<p<=z} (1 - 1/p)^{-1}.
  BigRational forced_ratio() const {
    BigInt num = 1;
    BigInt den = 1;
    for (u64 p : forced_primes) {
      num *= p;
      den *= p - 1;
    }
    return BigRational(num, den);
  }
};

inline ExtremalSet construct_extremal_set(u64 M, double y, double z, const FactorSieve& sieve) {
  if (M == 0) throw ParameterError("M must be positive");
  if (!(y >= 2)) throw ParameterError("y must be >= 2");
  if (!(z > y)) throw ParameterError("z must exceed y");
  if (z > static_cast<double>(sieve.limit())) throw RangeError("z exceeds the sieve limit");

  ExtremalSet set;
  set.M = M;
  set.y = y;
  set.z = z;
  std::vector<u64> small_primes;
  for (u64 p : sieve.primes()) {
    const double pd = static_cast<double>(p);
    if (pd > z) break;
    if (pd <= y) {
      small_primes.push_back(p);
    } else {
      set.forced_primes.push_back(p);
      set.Q *= p;
    }
  }
  if (set.forced_primes.empty()) throw ConstructionError("no prime in (y, z]");
  if (set.Q > M) return set;
  if (M > sieve.limit()) throw RangeError("M exceeds the sieve limit");

  const u64 q = set.Q.convert_to<u64>();
  std::map<std::pair<u64, u64>, u64> groups;
  for (u64 n = q; n <= M; n += q) {
    bool coprime = true;
    for (u64 p : small_primes) {
      if (n % p == 0) {
        coprime = false;
        break;
      }
    }
    if (!coprime) continue;
    set.members.push_back(n);
    const Ratio r = totient_ratio(n, sieve);
    ++groups[{r.num, r.den}];
  }
  set.empty = set.members.empty();
  if (!set.empty) {
    std::vector<BigRational> terms;
    terms.reserve(groups.size());
    for (const auto& [key, count] : groups) terms.push_back(BigRational(BigInt(key.first), BigInt(key.second)) * count);
    set.mean_ratio = pairwise_sum(std::move(terms)) / BigRational(set.members.size());
  }
  return set;
}

struct AlphaSweepRow {
  double alpha = 0.0;
  double y = 0.0;
  double z = 0.0;
  BigInt Q = 1;
  double mean_ratio = 0.0;
  u64 count = 0;
  double empirical_c = 0.0;  // alpha * mean_ratio
};

// y = (ln M)^alpha and z = (ln M)/2 per alpha.
inline std::vector<AlphaSweepRow> alpha_sweep(u64 M, std::span<const double> alphas, const FactorSieve& sieve) {
  std::vector<AlphaSweepRow> rows;
  const double ln_m = std::log(static_cast<double>(M));
  for (double alpha : alphas) {
    if (!(alpha > 0 && alpha <= 0.5)) throw ParameterError("alpha must lie in (0, 1/2]");
    const double y = std::pow(ln_m, alpha);
    const double z = ln_m / 2.0;
    if (!(y >= 2) || !(z > y)) throw ParameterError("alpha gives y outside [2, z)");
    const ExtremalSet set = construct_extremal_set(M, y, z, sieve);
    AlphaSweepRow row;
    row.alpha = alpha;
    row.y = y;
    row.z = z;
    row.Q = set.Q;
    row.count = set.members.size();
    row.mean_ratio = to_double(set.mean_ratio);
    row.empirical_c = alpha * row.mean_ratio;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace romanoff
