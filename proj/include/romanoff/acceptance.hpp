#pragma once

// The desk-scale verification suite behind `romanoff-lab verify-all` and the
// acceptance test binary. Every check compares against an independent oracle
// or an exact inequality; measured constants are reported in each detail block.

#include <chrono>
#include <cmath>
#include <functional>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "romanoff/arith.hpp"
#include "romanoff/elliptic.hpp"
#include "romanoff/extremal.hpp"
#include "romanoff/lemmas.hpp"
#include "romanoff/moments.hpp"
#include "romanoff/romanoff.hpp"
#include "romanoff/sequences.hpp"
#include "romanoff/serialize.hpp"
#include "romanoff/sieve.hpp"

namespace romanoff::acceptance {

// Representable densities measured for p + n^2 and p + n^3 at x = 10^5.
inline constexpr double kPinnedDensitySquares = 0.99762;
inline constexpr double kPinnedDensityCubes = 0.97005;
// Largest rho / (n m^{1-1/n}) over the seeded root-count family.
inline constexpr double kKonyaginFamilyMax = 1.0;

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  Json details = Json::object();
  double seconds = 0.0;  // wall time; kept out of the rendered report
};

// Shared tables, built on first use.
class Context {
 public:
  explicit Context(u64 seed) : seed_(seed) {}

  u64 seed() const { return seed_; }

  const FactorSieve& sieve() {
    if (!sieve_) sieve_ = std::make_unique<FactorSieve>(2'000'000);
    return *sieve_;
  }
  const PrimeList& primes() {
    if (!primes_) primes_ = std::make_unique<PrimeList>(PrimeList::from_sieve(sieve()));
    return *primes_;
  }

 private:
  u64 seed_;
  std::unique_ptr<FactorSieve> sieve_;
  std::unique_ptr<PrimeList> primes_;
};

namespace oracle {

inline bool is_prime_trial(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline u64 totient_gcd_count(u64 n) {
  u64 c = 0;
  for (u64 m = 1; m <= n; ++m) c += std::gcd(m, n) == 1;
  return c;
}

// r(n) by looping over every (p, a_j) pair with p prime by trial division.
inline std::vector<u32> representation_pairs(const std::vector<u64>& terms, u64 x) {
  std::vector<u32> r(x + 1, 0);
  for (u64 p = 2; p <= x; ++p) {
    if (!is_prime_trial(p)) continue;
    for (u64 a : terms) {
      if (p + a <= x) ++r[p + a];
    }
  }
  return r;
}

// Roots of f mod m assembled from the prime-power factors of m by CRT.
inline u64 root_count_crt(const PolynomialSpec& f, u64 m) {
  u64 total = 1;
  for (auto [p, e] : trial_factor(m)) {
    u64 q = 1;
    for (u32 i = 0; i < e; ++i) q *= p;
    u64 c = 0;
    for (u64 x = 0; x < q; ++x) c += f.eval_mod(x, q) == 0;
    total *= c;
  }
  return total;
}

}  // namespace oracle

namespace detail {

inline bool same_profile(const RepresentationProfile& prof, const std::vector<u32>& r) { return prof.r == r; }

}  // namespace detail

inline CriterionResult c01_totient(Context& ctx) {
  CriterionResult res{1, "totient oracle"};
  const auto& sieve = ctx.sieve();
  u64 brute_mismatch = 0;
  for (u64 n = 1; n <= 10'000; ++n) brute_mismatch += totient(n, sieve) != oracle::totient_gcd_count(n);
  // phi(n) prod p == n prod (p - 1), primes found by trial division over p <= 1000.
  const PrimeList small(1000);
  u64 product_mismatch = 0;
  for (u64 n = 1; n <= 1'000'000; ++n) {
    u64 m = n;
    u128 pp = 1;
    u128 pm = 1;
    for (u64 p : small.primes()) {
      if (p * p > m) break;
      if (m % p != 0) continue;
      pp *= p;
      pm *= p - 1;
      while (m % p == 0) m /= p;
    }
    if (m > 1) {
      pp *= m;
      pm *= m - 1;
    }
    product_mismatch += static_cast<u128>(totient(n, sieve)) * pp != static_cast<u128>(n) * pm;
  }
  res.details = {{"gcd_count_mismatches", brute_mismatch}, {"product_formula_mismatches", product_mismatch}};
  res.passed = brute_mismatch == 0 && product_mismatch == 0;
  return res;
}

inline CriterionResult c02_theorem1(Context& ctx) {
  CriterionResult res{2, "moment sum lower side and implied-constant stability"};
  const auto& sieve = ctx.sieve();
  SplitMix64 rng(ctx.seed() ^ 0x02);
  u64 violations = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<u64> a(rng.uniform(1, 64));
    for (auto& v : a) v = rng.uniform(1, 1'000'000);
    const unsigned s = static_cast<unsigned>(rng.uniform(1, 6));
    violations += moment_sum(a, s, sieve) < BigRational(a.size());
  }
  Json stability = Json::array();
  bool stable = true;
  for (unsigned s = 1; s <= 3; ++s) {
    double lo = INFINITY;
    double hi = 0.0;
    Json row{{"s", s}};
    for (u64 N : {1'000ULL, 10'000ULL, 100'000ULL}) {
      std::vector<u64> a(N);
      std::iota(a.begin(), a.end(), 1);
      const double c = theorem1_report(a, s, 0.9, static_cast<double>(N), sieve).implied_constant;
      row["N=" + std::to_string(N)] = c;
      if (!std::isfinite(c) || c <= 0) stable = false;
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    row["spread"] = hi / lo;
    stable = stable && hi / lo <= 2.0;
    stability.push_back(row);
  }
  res.details = {{"random_inputs", 1000}, {"violations", violations}, {"alpha", 0.9}, {"implied_constants", stability}};
  res.passed = violations == 0 && stable;
  return res;
}

inline CriterionResult c03_lemma2(Context& ctx) {
  CriterionResult res{3, "large-prime totient product below 5"};
  const auto& sieve = ctx.sieve();
  double best = 0.0;
  u64 argmax = 1;
  for (u64 n = 1; n <= 1'000'000; ++n) {
    const double v = lemma2_check(n, sieve);
    if (v > best) {
      best = v;
      argmax = n;
    }
  }
  res.details = {{"max", best}, {"argmax", argmax}};
  res.passed = best < 5.0;
  return res;
}

inline CriterionResult c04_gamma(Context&) {
  CriterionResult res{4, "incomplete gamma bound"};
  u64 checked = 0;
  u64 violations = 0;
  double worst = 0.0;  // largest value / bound
  for (unsigned s = 1; s <= 12; ++s) {
    for (int i = 0; i <= 196; ++i) {
      const double x = 1.0 + 0.25 * i;
      const GammaValue g = incomplete_gamma(s, x);
      ++checked;
      if (!g.bound || g.value > *g.bound) ++violations;
      if (g.bound) worst = std::max(worst, g.value / *g.bound);
    }
  }
  res.details = {{"points", checked}, {"violations", violations}, {"max_value_over_bound", worst}};
  res.passed = violations == 0;
  return res;
}

inline CriterionResult c05_extremal(Context& ctx) {
  CriterionResult res{5, "extremal construction at (10^6, 2.2, 6.9)"};
  const ExtremalSet set = construct_extremal_set(1'000'000, 2.2, 6.9, ctx.sieve());
  u64 even = 0;
  u64 missing_3_or_5 = 0;
  for (u64 n : set.members) {
    even += n % 2 == 0;
    missing_3_or_5 += (n % 3 != 0 || n % 5 != 0);
  }
  const bool mean_ok = set.mean_ratio >= BigRational(15, 8);
  res.details = {{"Q", set.Q.str()},
                 {"count", set.members.size()},
                 {"even_members", even},
                 {"members_missing_3_or_5", missing_3_or_5},
                 {"mean_ratio", to_double(set.mean_ratio)},
                 {"mean_ratio_at_least_15_8", mean_ok}};
  res.passed = set.Q == 15 && set.members.size() == 33333 && even == 0 && missing_3_or_5 == 0 && mean_ok;
  return res;
}

inline CriterionResult c06_elliptic(Context& ctx) {
  CriterionResult res{6, "point counts against enumeration, Hasse interval"};
  u64 curves = 0;
  u64 mismatches = 0;
  u64 margin_failures = 0;
  u64 interval_failures = 0;
  double min_margin = INFINITY;
  auto [first, last] = ctx.primes().up_to(200);
  for (i64 A = -5; A <= 5; ++A) {
    for (i64 B = -5; B <= 5; ++B) {
      if (4 * A * A * A + 27 * B * B == 0) continue;
      const EllipticCurve E(A, B);
      ++curves;
      for (auto it = first; it != last; ++it) {
        const u64 p = *it;
        const u64 n = count_points(E, p);
        mismatches += n != count_points_enumerate(E, p);
        const double margin = hasse_margin(E, p);
        min_margin = std::min(min_margin, margin);
        margin_failures += !(margin > 0);
        interval_failures += !within_hasse_interval(n, p);
      }
    }
  }
  res.details = {{"curves", curves},
                 {"primes", last - first},
                 {"mismatches", mismatches},
                 {"min_hasse_margin", min_margin},
                 {"margin_failures", margin_failures},
                 {"interval_failures", interval_failures}};
  res.passed = curves > 0 && mismatches == 0 && margin_failures == 0 && interval_failures == 0;
  return res;
}

inline CriterionResult c07_theorem5(Context& ctx) {
  CriterionResult res{7, "curve-order moments against pi(x)"};
  const EllipticCurve E(1, 1);
  bool ok = true;
  Json rows = Json::array();
  for (unsigned s = 1; s <= 2; ++s) {
    double ratio[2] = {0, 0};
    int idx = 0;
    for (double x : {1e4, 1e5}) {
      const OrderSequence seq = order_sequence(E, x, ctx.primes());
      std::vector<u64> orders;
      for (const auto& e : seq.entries) orders.push_back(e.order);
      const BigRational lhs = moment_sum(orders, s, ctx.sieve());
      const BigRational pi_x(orders.size());
      const bool holds = lhs >= pi_x;
      ok = ok && holds;
      ratio[idx++] = to_double(lhs / pi_x);
      rows.push_back({{"s", s}, {"x", x}, {"pi_x", orders.size()}, {"lhs", to_double(lhs)},
                      {"ratio", to_double(lhs / pi_x)}, {"lhs_at_least_pi_x", holds}});
    }
    const double change = std::fabs(ratio[1] / ratio[0] - 1.0);
    rows.push_back({{"s", s}, {"relative_change", change}});
    ok = ok && change < 0.2;
  }
  res.details = {{"curve", E.to_string()}, {"rows", rows}};
  res.passed = ok;
  return res;
}

inline CriterionResult c08_profiles(Context& ctx) {
  CriterionResult res{8, "representation counts against the pair loop"};
  SplitMix64 rng(ctx.seed() ^ 0x08);
  std::vector<u64> random_values(40);
  for (auto& v : random_values) v = rng.uniform(1, 500);
  struct Case {
    SequenceSpec spec;
    std::function<std::vector<u64>(u64)> terms;  // independent term generator
  };
  std::vector<Case> cases;
  cases.push_back({SequenceSpec::parse("geom:2:start=0"), [](u64 x) {
                     std::vector<u64> t;
                     for (u64 v = 1; v <= x; v *= 2) t.push_back(v);
                     return t;
                   }});
  cases.push_back({SequenceSpec::parse("tower:2:2"), [](u64 x) {
                     std::vector<u64> t;
                     for (u64 j = 0; j < 8; ++j) {
                       if (j * j < 63 && (1ULL << (j * j)) <= x) t.push_back(1ULL << (j * j));
                     }
                     return t;
                   }});
  cases.push_back({SequenceSpec::parse("poly:1,0,0"), [](u64 x) {
                     std::vector<u64> t;
                     for (u64 j = 1; j * j <= x; ++j) t.push_back(j * j);
                     return t;
                   }});
  cases.push_back({SequenceSpec{Explicit{random_values}}, [random_values](u64 x) {
                     std::vector<u64> t;
                     for (u64 v : random_values) {
                       if (v <= x) t.push_back(v);
                     }
                     return t;
                   }});
  u64 profiles = 0;
  u64 mismatches = 0;
  for (const auto& c : cases) {
    for (u64 x = 1; x <= 500; ++x) {
      const RepresentationProfile prof = representation_counts(c.spec, x, ctx.primes());
      ++profiles;
      mismatches += !detail::same_profile(prof, oracle::representation_pairs(c.terms(x), x));
    }
  }
  // sum_n r(n) = sum_{a_j <= x-2} pi(x - a_j) at x = 10^5.
  const u64 X = 100'000;
  const RepresentationProfile big = representation_counts(SequenceSpec::parse("geom:2:start=0"), X, ctx.primes());
  u64 expected = 0;
  for (u64 a : big.terms) {
    if (a + 2 <= X) expected += ctx.primes().pi(static_cast<double>(X - a));
  }
  res.details = {{"profiles", profiles}, {"mismatches", mismatches}, {"total_pairs", big.total()},
                 {"pi_shift_sum", expected}};
  res.passed = mismatches == 0 && big.total() == expected;
  return res;
}

inline CriterionResult c09_polynomial_witness(Context& ctx) {
  CriterionResult res{9, "polynomial sequences: 3 representable, density witness"};
  bool ok = true;
  Json rows = Json::array();
  const double pinned[2] = {kPinnedDensitySquares, kPinnedDensityCubes};
  for (unsigned k = 2; k <= 3; ++k) {
    const SequenceSpec spec{Polynomial{PolynomialSpec::monomial(k)}};
    const RepresentationProfile prof = representation_counts(spec, 100'000, ctx.primes());
    const double density = static_cast<double>(density_count(prof, 1)) / 1e5;
    const double pin = pinned[k - 2];
    const bool within_pin = std::fabs(density - pin) <= 0.1 * pin;
    ok = ok && prof.r[3] >= 1 && density >= 0.2 && within_pin;
    rows.push_back({{"k", k}, {"r3", prof.r[3]}, {"density", density}, {"pinned", pin}, {"within_10_percent", within_pin}});
  }
  res.details = {{"x", 100'000}, {"rows", rows}};
  res.passed = ok;
  return res;
}

inline CriterionResult c10_schnirelmann(Context& ctx) {
  CriterionResult res{10, "shifted prime counts"};
  auto brute = [](u64 x, u64 a) {
    u64 c = 0;
    for (u64 p = 2; p <= x; ++p) c += oracle::is_prime_trial(p) && oracle::is_prime_trial(p + a);
    return c;
  };
  const auto& primes = ctx.primes();
  const u64 c100 = schnirelmann_pi2(100, 2, primes).count;
  const u64 c10 = schnirelmann_pi2(10, 2, primes).count;
  bool ok = c100 == 8 && c10 == 2 && brute(100, 2) == 8 && brute(10, 2) == 2;
  Json constants = Json::object();
  for (u64 a : {2ULL, 4ULL, 6ULL, 30ULL}) {
    const double v = schnirelmann_pi2(1e6, a, primes).normalized;
    constants["a=" + std::to_string(a)] = v;
    ok = ok && std::isfinite(v) && v > 0;
  }
  res.details = {{"pi2_100_2", c100}, {"pi2_10_2", c10}, {"normalized_x_1e6", constants}};
  res.passed = ok;
  return res;
}

inline CriterionResult c11_orders(Context& ctx) {
  CriterionResult res{11, "multiplicative orders"};
  const auto& primes = ctx.primes();
  const auto& ps = primes.primes();
  const std::size_t up_to_1e6 = primes.pi(1e6);
  SplitMix64 rng(ctx.seed() ^ 0x11);
  u64 failures = 0;
  for (int trial = 0; trial < 10'000; ++trial) {
    const u64 p = ps[rng.uniform(0, up_to_1e6 - 1)];
    u64 a = rng.uniform(2, 1'000'000'000);
    if (a % p == 0) ++a;
    const u64 h = multiplicative_order(a, p, &ctx.sieve());
    bool ok = (p - 1) % h == 0 && pow_mod(a, h, p) == 1;
    for (auto [q, e] : trial_factor(h)) ok = ok && pow_mod(a, h / q, p) != 1;
    failures += !ok;
  }
  const u64 h27 = multiplicative_order(2, 7);
  const u64 h37 = multiplicative_order(3, 7);
  const double s4 = order_weighted_sum(2, 2, 1e4, primes, &ctx.sieve());
  const double s5 = order_weighted_sum(2, 2, 1e5, primes, &ctx.sieve());
  const double growth = (s5 - s4) / s4;
  res.details = {{"random_pairs", 10'000}, {"failures", failures}, {"h_2_7", h27}, {"h_3_7", h37},
                 {"sum_P_1e4", s4},       {"sum_P_1e5", s5},       {"relative_growth", growth}};
  res.passed = failures == 0 && h27 == 3 && h37 == 6 && growth >= 0 && growth < 0.1;
  return res;
}

inline CriterionResult c12_konyagin(Context& ctx) {
  CriterionResult res{12, "root counts against CRT composition"};
  SplitMix64 rng(ctx.seed() ^ 0x12);
  u64 mismatches = 0;
  double family_max = 0.0;
  Json argmax;
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned deg = static_cast<unsigned>(rng.uniform(1, 4));
    std::vector<i64> c(deg + 1);
    for (auto& v : c) v = rng.uniform_signed(-20, 20);
    if (c[deg] == 0) c[deg] = 1;
    const PolynomialSpec f(c);
    u64 m = rng.uniform(2, 10'000);
    while (std::gcd(f.content(), m) != 1) m = rng.uniform(2, 10'000);
    const RootCount rc = root_count(f, m);
    mismatches += rc.count != oracle::root_count_crt(f, m);
    if (rc.konyagin_ratio > family_max) {
      family_max = rc.konyagin_ratio;
      argmax = {{"f", f.to_string()}, {"m", m}, {"roots", rc.count}};
    }
  }
  const bool bounded = family_max <= kKonyaginFamilyMax * (1.0 + 1e-12);
  res.details = {{"pairs", 100},
                 {"mismatches", mismatches},
                 {"family_max_ratio", family_max},
                 {"recorded_max", kKonyaginFamilyMax},
                 {"argmax", argmax}};
  res.passed = mismatches == 0 && bounded;
  return res;
}

inline CriterionResult c13_cauchy_schwarz(Context& ctx) {
  CriterionResult res{13, "Cauchy-Schwarz on every generated profile"};
  u64 profiles = 0;
  u64 failures = 0;
  for (const char* spec : {"geom:2:start=0", "geom:3:start=1", "tower:2:2", "tower:2:3", "poly:1,0,0", "poly:1,0,0,0",
                           "poly:1,0,1", "ecorders:1,1", "explicit:1", "explicit:2,4,8,16"}) {
    for (u64 x : {3ULL, 50ULL, 500ULL, 5'000ULL, 100'000ULL}) {
      const RepresentationProfile prof = representation_counts(SequenceSpec::parse(spec), x, ctx.primes());
      ++profiles;
      failures += !cauchy_schwarz_holds(prof);
    }
  }
  res.details = {{"profiles", profiles}, {"failures", failures}};
  res.passed = failures == 0;
  return res;
}

inline Json criterion_json(const CriterionResult& r) {
  return Json{{"id", r.id}, {"title", r.title}, {"pass", r.passed}, {"details", r.details}};
}

inline std::vector<std::function<CriterionResult(Context&)>> criteria_1_to_13() {
  return {c01_totient, c02_theorem1, c03_lemma2,         c04_gamma,  c05_extremal, c06_elliptic,      c07_theorem5,
          c08_profiles, c09_polynomial_witness, c10_schnirelmann, c11_orders, c12_konyagin, c13_cauchy_schwarz};
}

template <typename F>
CriterionResult timed(F&& f, Context& ctx) {
  const auto t0 = std::chrono::steady_clock::now();
  CriterionResult r = f(ctx);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

// In-process determinism: the seeded criteria rerun on fresh tables render the same bytes.
inline CriterionResult c14_determinism(Context& ctx) {
  CriterionResult res{14, "seeded reruns render identical bytes"};
  auto render_seeded = [&]() {
    Context fresh(ctx.seed());
    Json arr = Json::array();
    for (auto f : {c02_theorem1, c08_profiles, c11_orders, c12_konyagin}) arr.push_back(criterion_json(f(fresh)));
    return arr.dump();
  };
  const std::string first = render_seeded();
  const std::string second = render_seeded();
  res.details = {{"criteria_rerun", Json::array({2, 8, 11, 12})}, {"bytes", first.size()}};
  res.passed = first == second;
  return res;
}

// Runs the whole suite; on_result fires after each criterion.
inline std::vector<CriterionResult> run_all(u64 seed, const std::function<void(const CriterionResult&)>& on_result = {}) {
  Context ctx(seed);
  std::vector<CriterionResult> out;
  auto list = criteria_1_to_13();
  list.push_back(c14_determinism);
  for (auto& f : list) {
    out.push_back(timed(f, ctx));
    if (on_result) on_result(out.back());
  }
  return out;
}

inline Json report_json(u64 seed, const std::vector<CriterionResult>& results) {
  Json arr = Json::array();
  bool all = true;
  for (const auto& r : results) {
    arr.push_back(criterion_json(r));
    all = all && r.passed;
  }
  return Json{{"seed", seed}, {"criteria", arr}, {"all_passed", all}};
}

}  // namespace romanoff::acceptance
