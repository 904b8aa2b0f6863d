#pragma once

// Representation counts r(n) = #{(p, j) : p + a_j = n}, their moments and
// density counts, the hypothesis/conclusion constants of the general Romanoff
// machinery, the shifted-prime counts pi_2(x, a), multiplicative orders and
// the order statistics behind the a^(j^b) sequences, and congruence root counts.

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "romanoff/arith.hpp"
#include "romanoff/errors.hpp"
#include "romanoff/parallel.hpp"
#include "romanoff/polynomial.hpp"
#include "romanoff/sequences.hpp"
#include "romanoff/sieve.hpp"

namespace romanoff {

inline constexpr u64 kDefaultPairBudget = 1'000'000'000;

struct RepresentationProfile {
  SequenceSpec spec;
  u64 x = 0;
  std::vector<u64> terms;  // a_j <= x, ascending with multiplicity
  std::vector<u32> r;      // r[n] for n in [0, x]; r[0] = 0

  u64 total() const {
    u64 t = 0;
    for (u32 v : r) t += v;
    return t;
  }

  std::string to_csv() const {
    std::ostringstream os;
    os << "n,r\n";
    for (u64 n = 1; n <= x; ++n) os << n << ',' << r[n] << '\n';
    return os.str();
  }
};

enum class Direction { LowerBound, UpperBound, Measured };

inline const char* to_string(Direction d) {
  switch (d) {
    case Direction::LowerBound: return "lower";
    case Direction::UpperBound: return "upper";
    case Direction::Measured: return "measured";
  }
  return "measured";
}

struct ConstantEstimate {
  std::string name;
  double value = 0.0;
  std::map<std::string, double> parameters;
  Direction direction = Direction::Measured;
};

// Outer loop over terms, inner over primes p <= x - a_j; per-chunk tables are
// summed in chunk order.
inline RepresentationProfile representation_counts(const SequenceSpec& spec, u64 x, const PrimeList& primes,
                                                   u64 budget = kDefaultPairBudget) {
  if (x < 1) throw ParameterError("representation_counts needs x >= 1");
  primes.require(static_cast<double>(x));
  RepresentationProfile prof;
  prof.spec = spec;
  prof.x = x;
  prof.terms = enumerate_terms(spec, static_cast<double>(x), &primes);
  prof.r.assign(x + 1, 0);
  if (x < 3) return prof;
  const u64 pi_x = primes.pi(static_cast<double>(x));
  if (static_cast<double>(prof.terms.size()) * static_cast<double>(pi_x) > static_cast<double>(budget)) {
    throw CapacityError("N_A(x) * pi(x) exceeds the pair budget");
  }
  std::vector<u64> active;
  for (u64 a : prof.terms) {
    if (a + 2 <= x) active.push_back(a);
  }
  const auto& ps = primes.primes();
  const std::size_t chunks = chunk_count(active.size());
  if (chunks <= 1) {
    for (u64 a : active) {
      const u64 cap = x - a;
      for (u64 p : ps) {
        if (p > cap) break;
        ++prof.r[p + a];
      }
    }
    return prof;
  }
  std::vector<std::vector<u32>> partial(chunks, std::vector<u32>(x + 1, 0));
  parallel_chunks(active.size(), [&](std::size_t begin, std::size_t end, std::size_t w) {
    auto& table = partial[w];
    for (std::size_t i = begin; i < end; ++i) {
      const u64 cap = x - active[i];
      for (u64 p : ps) {
        if (p > cap) break;
        ++table[p + active[i]];
      }
    }
  });
  for (const auto& table : partial) {
    for (u64 n = 0; n <= x; ++n) prof.r[n] += table[n];
  }
  return prof;
}

inline u64 second_moment(const std::vector<u32>& r) {
  u64 sum = 0;
  for (u32 v : r) sum += static_cast<u64>(v) * v;
  return sum;
}

inline u64 second_moment(const RepresentationProfile& prof) { return second_moment(prof.r); }

// #{1 <= n <= x : r(n) >= threshold}.
inline u64 density_count(const RepresentationProfile& prof, double threshold) {
  u64 count = 0;
  for (u64 n = 1; n <= prof.x; ++n) count += static_cast<double>(prof.r[n]) >= threshold;
  return count;
}

// (sum r)^2 <= #{n : r(n) >= 1} * sum r^2, checked in exact 128-bit arithmetic.
inline bool cauchy_schwarz_holds(const RepresentationProfile& prof) {
  const u128 total = prof.total();
  return total * total <= static_cast<u128>(density_count(prof, 1)) * second_moment(prof);
}

inline std::vector<double> default_c1_grid() {
  std::vector<double> grid;
  for (int k = 0; k <= 10; ++k) grid.push_back(std::ldexp(1.0, -k));
  return grid;
}

inline std::vector<ConstantEstimate> theorem6_report(const SequenceSpec& spec, u64 x, double alpha,
                                                     const PrimeList& primes,
                                                     const std::vector<double>& c1_grid = default_c1_grid(),
                                                     u64 budget = kDefaultPairBudget) {
  if (x < 3) throw ParameterError("theorem6_report needs x >= 3");
  const RepresentationProfile prof = representation_counts(spec, x, primes, budget);
  if (prof.terms.empty()) throw DomainError("N_A(x) = 0");
  const double xd = static_cast<double>(x);
  const double ln_x = std::log(xd);
  const double n_a = static_cast<double>(prof.terms.size());
  const double rho = static_cast<double>(max_multiplicity(prof.terms));

  std::vector<ConstantEstimate> out;
  const std::map<std::string, double> base{{"x", xd}, {"alpha", alpha}, {"N_A", n_a}, {"rho_A", rho}};
  auto with = [&](std::map<std::string, double> extra) {
    extra.insert(base.begin(), base.end());
    return extra;
  };
  out.push_back({"gamma1", doubling_ratio(spec, xd), base, Direction::LowerBound});
  const CongruencePairSum cps = congruence_pair_sum(prof.terms, xd, alpha, primes);
  out.push_back({"gamma2", cps.normalized, with({{"raw", cps.raw}, {"prime_cutoff", cps.prime_cutoff}}),
                 Direction::UpperBound});
  const double sm = static_cast<double>(second_moment(prof));
  out.push_back({"second_moment_normalized", sm * ln_x * ln_x / (xd * n_a * (rho * ln_x + n_a)),
                 with({{"second_moment", sm}}), Direction::UpperBound});
  const double representable = static_cast<double>(density_count(prof, 1));
  out.push_back({"representable_density", representable / xd, with({{"count", representable}}),
                 Direction::LowerBound});
  for (double c1 : c1_grid) {
    const double threshold = c1 * n_a / ln_x;
    const double dens = static_cast<double>(density_count(prof, threshold)) / xd;
    out.push_back({"c2_at_c1", dens, with({{"c1", c1}, {"threshold", threshold}}), Direction::LowerBound});
  }
  return out;
}

struct ShiftedPrimeCount {
  u64 count = 0;
  double normalized = 0.0;  // count (ln x)^2 phi(a) / (x a)
};

// pi_2(x, a) = #{p <= x : p + a prime}.
inline ShiftedPrimeCount schnirelmann_pi2(double x, u64 a, const PrimeList& primes) {
  if (a == 0) throw ParameterError("shift a must be positive");
  if (!(x >= 2)) throw ParameterError("schnirelmann_pi2 needs x >= 2");
  primes.require(x + static_cast<double>(a));
  ShiftedPrimeCount out;
  auto [first, last] = primes.up_to(x);
  for (auto it = first; it != last; ++it) out.count += primes.is_prime(*it + a);
  const double ln_x = std::log(x);
  out.normalized = static_cast<double>(out.count) * ln_x * ln_x * static_cast<double>(totient_by_trial(a)) /
                   (x * static_cast<double>(a));
  return out;
}

// Least h >= 1 with a^h = 1 (mod p): start from p - 1 and strip prime factors.
inline u64 multiplicative_order(u64 a, u64 p, const FactorSieve* sieve = nullptr) {
  if (p < 2 || !is_prime_u64(p)) throw DomainError("multiplicative_order needs a prime modulus");
  if (a % p == 0) throw DomainError("multiplicative_order needs gcd(a, p) = 1");
  const u64 n = p - 1;
  if (n == 1) return 1;
  std::vector<std::pair<u64, u32>> fac =
      (sieve != nullptr && n <= sieve->limit()) ? sieve->factor(n) : trial_factor(n);
  u64 h = n;
  for (auto [q, e] : fac) {
    for (u32 i = 0; i < e && h % q == 0; ++i) {
      if (pow_mod(a, h / q, p) != 1) break;
      h /= q;
    }
  }
  return h;
}

// sum_{p <= P, p does not divide a} ln p / (p h_a(p)^{1/b}).
inline double order_weighted_sum(u64 a, unsigned b, double P, const PrimeList& primes,
                                 const FactorSieve* sieve = nullptr) {
  if (a < 2 || b < 2) throw ParameterError("order_weighted_sum needs a >= 2 and b >= 2");
  if (P < 2) return 0.0;
  primes.require(P);
  CompensatedSum sum;
  auto [first, last] = primes.up_to(P);
  for (auto it = first; it != last; ++it) {
    const u64 p = *it;
    if (a % p == 0) continue;
    const double h = static_cast<double>(multiplicative_order(a, p, sieve));
    sum += std::log(static_cast<double>(p)) / (static_cast<double>(p) * std::pow(h, 1.0 / b));
  }
  return sum.value();
}

inline constexpr unsigned kDefaultExponentCap = 40;

struct OrderDistributionRow {
  unsigned n = 0;
  double d_n = 0.0;
  std::vector<u64> primes;  // primes with h_a(p) = n found in a^n - 1
  bool exact = true;        // false: an unfactored composite cofactor remains
};

struct OrderDistribution {
  u64 a = 2;
  unsigned z = 0;
  std::vector<OrderDistributionRow> rows;
  double D = 0.0;             // sum_{n <= z} d_n
  double D_over_log = 0.0;    // D / ln(z + 1)
  bool exact = true;
};

// d_n = sum over primes p with h_a(p) = n of ln p / p, from the factorization of a^n - 1.
inline OrderDistribution order_distribution(u64 a, unsigned z, u64 trial_cap,
                                            unsigned exponent_cap = kDefaultExponentCap) {
  if (a < 2) throw ParameterError("order_distribution needs a >= 2");
  if (z > exponent_cap) throw CapacityError("z exceeds the exponent cap " + std::to_string(exponent_cap));
  if (trial_cap < 2) throw ParameterError("trial cap must be >= 2");
  OrderDistribution out;
  out.a = a;
  out.z = z;
  const PrimeList small(trial_cap);
  CompensatedSum total;
  for (unsigned n = 1; n <= z; ++n) {
    OrderDistributionRow row;
    row.n = n;
    BigInt value = pow(BigInt(a), n) - 1;
    std::vector<u64> found;
    for (u64 p : small.primes()) {
      if (value == 1) break;
      if (value % p == 0) {
        found.push_back(p);
        while (value % p == 0) value /= p;
      }
    }
    if (value > 1) {
      if (value <= std::numeric_limits<u64>::max() && is_prime_u64(value.convert_to<u64>())) {
        found.push_back(value.convert_to<u64>());
      } else {
        row.exact = false;
      }
    }
    CompensatedSum dn;
    for (u64 p : found) {
      if (a % p == 0) continue;
      // p | a^n - 1 and order exactly n iff a^(n/q) != 1 for every prime q | n.
      bool exact_order = true;
      for (auto [q, e] : trial_factor(n)) {
        if (pow_mod(a % p, n / q, p) == 1) {
          exact_order = false;
          break;
        }
      }
      if (!exact_order) continue;
      row.primes.push_back(p);
      dn += std::log(static_cast<double>(p)) / static_cast<double>(p);
    }
    row.d_n = dn.value();
    total += row.d_n;
    out.exact = out.exact && row.exact;
    out.rows.push_back(std::move(row));
  }
  out.D = total.value();
  out.D_over_log = out.D / std::log(static_cast<double>(z) + 1.0);
  return out;
}

inline constexpr u64 kMaxRootModulus = 10'000'000;

struct RootCount {
  u64 count = 0;
  double konyagin_ratio = 0.0;  // count / (n m^{1 - 1/n}), n = degree
};

// #{x in [0, m) : f(x) = 0 (mod m)} by exhaustive scan.
inline RootCount root_count(const PolynomialSpec& f, u64 m) {
  if (m == 0) throw ParameterError("modulus must be positive");
  if (m > kMaxRootModulus) throw CapacityError("root_count modulus exceeds 10^7");
  if (std::gcd(f.content(), m) != 1) throw DomainError("content of f must be coprime to m");
  RootCount out;
  for (u64 x = 0; x < m; ++x) out.count += f.eval_mod(x, m) == 0;
  if (f.degree() >= 1) {
    const double n = f.degree();
    out.konyagin_ratio = static_cast<double>(out.count) / (n * std::pow(static_cast<double>(m), 1.0 - 1.0 / n));
  }
  return out;
}

// Representable count for p + a^(j^b) with both normalizations by x/(ln x)^{1-1/b}.
inline std::vector<ConstantEstimate> theorem9_report(u64 a, unsigned b, u64 x, const PrimeList& primes,
                                                     u64 budget = kDefaultPairBudget) {
  if (a < 2 || b < 2) throw ParameterError("theorem9_report needs a >= 2 and b >= 2");
  const SequenceSpec spec{PowerTower{a, b}};
  const RepresentationProfile prof = representation_counts(spec, x, primes, budget);
  const double xd = static_cast<double>(x);
  const double count = static_cast<double>(density_count(prof, 1));
  const double scale = x >= 3 ? std::pow(std::log(xd), 1.0 - 1.0 / b) / xd : 0.0;
  const double pi_x = static_cast<double>(primes.pi(xd));
  const double n_a = static_cast<double>(prof.terms.size());
  const std::map<std::string, double> params{{"a", static_cast<double>(a)}, {"b", static_cast<double>(b)},
                                             {"x", xd}, {"N_A", n_a}, {"pi_x", pi_x}};
  std::vector<ConstantEstimate> out;
  out.push_back({"representable_count", count, params, Direction::Measured});
  out.push_back({"c1_lower_normalized", count * scale, params, Direction::LowerBound});
  out.push_back({"upper_comparison_normalized", pi_x * n_a * scale, params, Direction::UpperBound});
  return out;
}

}  // namespace romanoff
