#pragma once

// Totient-ratio moment sums sum (a_n/phi(a_n))^s and the measured constants of
// the moment bounds: the omega(p)-weighted bound for arbitrary lists, the
// polynomial-value bound, and the Delta_L bound for linear systems.

#include <cmath>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "romanoff/arith.hpp"
#include "romanoff/errors.hpp"
#include "romanoff/polynomial.hpp"
#include "romanoff/sieve.hpp"

namespace romanoff {

struct MomentReport {
  double lhs = 0.0;
  double rhs_core = 0.0;
  double implied_constant = 0.0;
  std::map<std::string, double> parameters;
  std::vector<std::string> notes;
};

inline u64 omega_count(std::span<const u64> a, u64 d) {
  if (a.empty()) throw DomainError("omega_count needs a nonempty list");
  if (d == 0) throw DomainError("omega_count needs d >= 1");
  u64 count = 0;
  for (u64 v : a) count += (v % d == 0);
  return count;
}

namespace detail {

inline BigRational ratio_power(const Ratio& r, unsigned s) {
  BigInt num = 1;
  BigInt den = 1;
  for (unsigned i = 0; i < s; ++i) {
    num *= r.num;
    den *= r.den;
  }
  return BigRational(num, den);
}

inline void require_positive_list(std::span<const u64> a) {
  for (u64 v : a) {
    if (v == 0) throw DomainError("moment sums need positive integers");
  }
}

}  // namespace detail

// Exact sum (a_n / phi(a_n))^s. Terms are grouped by their (radical-determined)
// ratio before the exact pairwise reduction.
inline BigRational moment_sum(std::span<const u64> a, unsigned s, const FactorSieve& sieve) {
  if (s == 0) throw ParameterError("moment order s must be >= 1");
  detail::require_positive_list(a);
  std::map<std::pair<u64, u64>, u64> groups;
  for (u64 v : a) {
    const Ratio r = totient_ratio(v, sieve);
    ++groups[{r.num, r.den}];
  }
  std::vector<BigRational> terms;
  terms.reserve(groups.size());
  for (const auto& [key, count] : groups) {
    terms.push_back(detail::ratio_power(Ratio{key.first, key.second}, s) * BigRational(count));
  }
  return pairwise_sum(std::move(terms));
}

// Floating-point moment sum with compensated accumulation, for report sizes.
inline double moment_sum_real(std::span<const u64> a, unsigned s, const FactorSieve& sieve) {
  if (s == 0) throw ParameterError("moment order s must be >= 1");
  detail::require_positive_list(a);
  CompensatedSum sum;
  for (u64 v : a) sum += std::pow(totient_ratio(v, sieve).to_double(), static_cast<double>(s));
  return sum.value();
}

inline MomentReport theorem1_report(std::span<const u64> a, unsigned s, double alpha, double M,
                                    const FactorSieve& sieve) {
  if (a.empty()) throw DomainError("theorem1_report needs a nonempty list");
  if (!(alpha > 0 && alpha < 1)) throw ParameterError("alpha must lie in (0, 1)");
  if (s == 0) throw ParameterError("moment order s must be >= 1");
  u64 max_a = 0;
  for (u64 v : a) max_a = std::max(max_a, v);
  if (M < static_cast<double>(max_a)) throw ParameterError("M must be at least max(a)");

  MomentReport rep;
  rep.lhs = moment_sum_real(a, s, sieve);
  const double cutoff = std::pow(std::log(M), alpha);
  CompensatedSum core;
  core += static_cast<double>(a.size());
  for (u64 p : sieve.primes()) {
    if (static_cast<double>(p) > cutoff) break;
    const double w = static_cast<double>(omega_count(a, p));
    core += w * std::pow(std::log(static_cast<double>(p)), s) / static_cast<double>(p);
  }
  rep.rhs_core = core.value();
  rep.implied_constant = std::pow(rep.lhs / rep.rhs_core, 1.0 / s);
  rep.parameters = {{"s", s}, {"alpha", alpha}, {"M", M}, {"N", static_cast<double>(a.size())}, {"prime_cutoff", cutoff}};
  return rep;
}

struct Lemma1Result {
  double product = 1.0;
  double bound = 1.0;
};

// prod_{p | n, p > y} (1 + 1/p) against exp(nu(n) / y).
inline Lemma1Result lemma1_product(u64 n, double y, const FactorSieve& sieve) {
  if (n <= 1) throw DomainError("lemma1_product needs n > 1");
  if (!(y > 0)) throw ParameterError("lemma1_product needs y > 0");
  Lemma1Result r;
  const auto ps = sieve.distinct_primes(n);
  for (u64 p : ps) {
    if (static_cast<double>(p) > y) r.product *= 1.0 + 1.0 / static_cast<double>(p);
  }
  r.bound = std::exp(static_cast<double>(ps.size()) / y);
  return r;
}

// prod_{p | n, p > ln n} (1 + 1/p); bounded by 5.
inline double lemma2_check(u64 n, const FactorSieve& sieve) {
  if (n == 1) return 1.0;
  const double ln_n = std::log(static_cast<double>(n));
  double product = 1.0;
  for (u64 p : sieve.distinct_primes(n)) {
    if (static_cast<double>(p) > ln_n) product *= 1.0 + 1.0 / static_cast<double>(p);
  }
  return product;
}

struct Lemma3Result {
  double ratio = 1.0;
  double product = 1.0;
  double implied_constant = 1.0;
};

inline Lemma3Result lemma3_report(u64 n, double alpha, const FactorSieve& sieve) {
  if (!(alpha > 0 && alpha < 1)) throw ParameterError("alpha must lie in (0, 1)");
  Lemma3Result r;
  r.ratio = totient_ratio(n, sieve).to_double();
  if (n > 1) {
    const double cutoff = std::pow(std::log(static_cast<double>(n)), alpha);
    for (u64 p : sieve.distinct_primes(n)) {
      if (static_cast<double>(p) <= cutoff) r.product *= 1.0 + 1.0 / static_cast<double>(p);
    }
  }
  r.implied_constant = r.ratio / r.product;
  return r;
}

namespace detail {

inline u64 sieve_index(i128 v, const FactorSieve& sieve, const char* what) {
  const i128 mag = abs128(v);
  if (mag > static_cast<i128>(sieve.limit())) {
    throw CapacityError(std::string(what) + " exceeds the sieve limit " + std::to_string(sieve.limit()));
  }
  return static_cast<u64>(mag);
}

inline void finish_scaled_report(MomentReport& rep, unsigned s, double z, double scale) {
  // rhs_core = (scale * ln(k+1))^s * s! * z; constant = (lhs/(s! z))^{1/s} / (scale * ln(k+1)).
  rep.rhs_core = std::pow(scale, s) * factorial(s) * z;
  rep.implied_constant = std::pow(rep.lhs / (factorial(s) * z), 1.0 / s) / scale;
}

}  // namespace detail

// Sum over -z <= n <= z with R(n) != 0 of (|R(n)|/phi(|R(n)|))^s.
inline MomentReport poly_moment_report(const PolynomialSpec& R, double z, unsigned s, const FactorSieve& sieve) {
  if (!(z >= 1)) throw ParameterError("poly_moment_report needs z >= 1");
  if (s == 0) throw ParameterError("moment order s must be >= 1");
  const i64 zi = static_cast<i64>(std::floor(z));
  MomentReport rep;
  CompensatedSum lhs;
  u64 terms = 0;
  for (i64 n = -zi; n <= zi; ++n) {
    const i128 v = R.eval(n);
    if (v == 0) continue;
    const u64 m = detail::sieve_index(v, sieve, "|R(n)|");
    lhs += std::pow(totient_ratio(m, sieve).to_double(), static_cast<double>(s));
    ++terms;
  }
  rep.lhs = lhs.value();
  const u64 delta = R.content();
  const double delta_ratio = static_cast<double>(delta) / static_cast<double>(totient_by_trial(delta));
  const double scale = delta_ratio * std::log(static_cast<double>(R.degree()) + 1.0);
  if (scale <= 0) throw DomainError("poly_moment_report needs degree >= 1");
  detail::finish_scaled_report(rep, s, z, scale);
  rep.parameters = {{"s", s},
                    {"z", z},
                    {"k", R.degree()},
                    {"delta", static_cast<double>(delta)},
                    {"delta_ratio", delta_ratio},
                    {"terms", static_cast<double>(terms)}};
  return rep;
}

// Delta_L = a^{k+1} prod |b_i - b|.
inline u64 delta_L(u64 a, i64 b, std::span<const i64> bs) {
  if (a == 0) throw DomainError("delta_L needs a >= 1");
  i128 v = 1;
  for (std::size_t i = 0; i <= bs.size(); ++i) v = checked_mul(v, a);
  for (i64 bi : bs) v = checked_mul(v, abs128(static_cast<i128>(bi) - b));
  return to_u64_checked(v, "Delta_L");
}

inline constexpr double kDefaultEpsilon = 0.5;

inline MomentReport delta_moment_report(u64 a, std::span<const i64> bs, double z, unsigned s, double x,
                                        const FactorSieve& sieve, double epsilon = kDefaultEpsilon) {
  if (a == 0) throw DomainError("delta_moment_report needs a >= 1");
  if (bs.empty()) throw ParameterError("delta_moment_report needs at least one linear form");
  if (!(z >= 1)) throw ParameterError("delta_moment_report needs z >= 1");
  if (s == 0) throw ParameterError("moment order s must be >= 1");
  for (i64 bi : bs) {
    if (static_cast<double>(std::llabs(bi)) > x) throw ParameterError("every |b_i| must be <= x");
  }
  MomentReport rep;
  if (x < 3 || z < std::pow(std::log(x), epsilon) || z > x) {
    rep.notes.push_back("z outside the window (ln x)^eps <= z <= x, x >= 3");
  }
  const i64 zi = static_cast<i64>(std::floor(z));
  CompensatedSum lhs;
  u64 terms = 0;
  for (i64 b = -zi; b <= zi; ++b) {
    const u64 d = delta_L(a, b, bs);
    if (d == 0) continue;
    if (d > sieve.limit()) throw CapacityError("Delta_L exceeds the sieve limit");
    lhs += std::pow(totient_ratio(d, sieve).to_double(), static_cast<double>(s));
    ++terms;
  }
  rep.lhs = lhs.value();
  const double a_ratio = static_cast<double>(a) / static_cast<double>(totient_by_trial(a));
  const double k = static_cast<double>(bs.size());
  detail::finish_scaled_report(rep, s, z, a_ratio * std::log(k + 1.0));
  rep.parameters = {{"s", s}, {"z", z}, {"x", x}, {"k", k}, {"a", static_cast<double>(a)},
                    {"a_ratio", a_ratio}, {"epsilon", epsilon}, {"terms", static_cast<double>(terms)}};
  return rep;
}

}  // namespace romanoff
