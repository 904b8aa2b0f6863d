// romanoff-lab: command-line front end.
// Exit codes: 0 ok, 1 failed verification or internal error, 2 bad parameters, 3 capacity/range.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "romanoff.hpp"
#include "romanoff/acceptance.hpp"

namespace {

using namespace romanoff;

struct RunConfig {
  u64 sieve_limit = 10'000'000;
  u64 prime_limit = 0;  // 0: same as sieve_limit
  u64 budget = kDefaultPairBudget;
  unsigned threads = 0;
  std::string format = "json";
  std::string out;
  u64 seed = 0;

  u64 primes_cap() const { return prime_limit == 0 ? sieve_limit : prime_limit; }
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty() || cfg.out == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary | std::ios::trunc);
  if (!f) throw ParameterError("cannot open output file '" + cfg.out + "'");
  f << text;
}

void require_json(const RunConfig& cfg, const char* what) {
  if (cfg.format != "json") throw ParameterError(std::string(what) + " is only available as json");
}

u64 as_count(double v, const char* name) {
  if (!(v >= 0) || v != std::floor(v) || v > 1.8e19) throw ParameterError(std::string(name) + " must be a non-negative integer");
  return static_cast<u64>(v);
}

FactorSieve make_sieve(const RunConfig& cfg, u64 needed) {
  if (needed > cfg.sieve_limit) {
    throw RangeError("needs a sieve up to " + std::to_string(needed) + " but --sieve-limit is " +
                     std::to_string(cfg.sieve_limit));
  }
  return load_or_build_sieve(std::max<u64>(needed, 2));
}

PrimeList make_primes(const RunConfig& cfg, double needed) {
  const u64 n = static_cast<u64>(std::max(2.0, std::ceil(needed)));
  if (n > cfg.primes_cap()) {
    throw RangeError("needs primes up to " + std::to_string(n) + " but the prime limit is " +
                     std::to_string(cfg.primes_cap()));
  }
  return PrimeList(n);
}

std::vector<i64> parse_int_list(const std::string& text) {
  std::vector<i64> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    char* end = nullptr;
    const long long v = std::strtoll(tok.c_str(), &end, 10);
    if (tok.empty() || *end != '\0') throw ParameterError("bad integer '" + tok + "' in list '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw ParameterError("empty integer list");
  return out;
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (tok.empty() || *end != '\0') throw ParameterError("bad number '" + tok + "' in list '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw ParameterError("empty number list");
  return out;
}

Json lemma_record(const std::string& lemma, Json parameters, double witness, double bound, bool pass) {
  return Json{{"lemma", lemma}, {"parameters", std::move(parameters)}, {"witness_value", witness}, {"bound", bound},
              {"pass", pass}};
}

// ---- sieve ----

struct SieveOpts {
  std::optional<double> x;
};

int run_sieve(const RunConfig& cfg, const SieveOpts& o) {
  require_json(cfg, "sieve");
  const FactorSieve sieve = make_sieve(cfg, cfg.sieve_limit);
  const PrimeList primes = PrimeList::from_sieve(sieve);
  const double x = o.x.value_or(static_cast<double>(sieve.limit()));
  if (!(x >= 2)) throw ParameterError("--x must be >= 2");
  const MertensProducts m = mertens_products(x, primes);
  const double theta = chebyshev_theta(x, primes);
  Json j{{"limit", sieve.limit()},
         {"x", x},
         {"pi_x", primes.pi(x)},
         {"theta", theta},
         {"theta_over_x", theta / x},
         {"mertens", to_json(m)},
         {"minus_over_plus", m.minus_product / m.plus_product}};
  emit(cfg, render(j));
  return 0;
}

// ---- moments ----

struct MomentOpts {
  std::string report = "theorem1";
  std::string seq = "poly:1,0";
  double x = 1000;
  unsigned s = 1;
  double alpha = 0.9;
  std::optional<double> M;
  std::string poly = "1,0";
  double z = 10;
  u64 a = 1;
  std::string bs = "0";
  double epsilon = kDefaultEpsilon;
};

int run_moments(const RunConfig& cfg, const MomentOpts& o) {
  require_json(cfg, "moments");
  Json out;
  if (o.report == "theorem1") {
    const SequenceSpec spec = SequenceSpec::parse(o.seq);
    const auto terms = enumerate_terms(spec, o.x);
    if (terms.empty()) throw DomainError("the sequence has no terms <= x");
    const FactorSieve sieve = make_sieve(cfg, terms.back());
    const double M = o.M.value_or(static_cast<double>(terms.back()));
    out = to_json(theorem1_report(terms, o.s, o.alpha, M, sieve));
    out["seq"] = spec.to_string();
  } else if (o.report == "poly") {
    const PolynomialSpec R = PolynomialSpec::parse_descending(o.poly);
    // largest |R(n)| on [-z, z] decides the sieve size
    const i64 zi = static_cast<i64>(std::floor(o.z));
    u64 need = 2;
    for (i64 n = -zi; n <= zi; ++n) need = std::max<u64>(need, to_u64_checked(abs128(R.eval(n)), "|R(n)|"));
    const FactorSieve sieve = make_sieve(cfg, need);
    out = to_json(poly_moment_report(R, o.z, o.s, sieve));
    out["poly"] = R.to_string();
  } else if (o.report == "delta") {
    const std::vector<i64> bs = parse_int_list(o.bs);
    const i64 zi = static_cast<i64>(std::floor(o.z));
    u64 need = 2;
    for (i64 b = -zi; b <= zi; ++b) need = std::max(need, delta_L(o.a, b, bs));
    const FactorSieve sieve = make_sieve(cfg, need);
    out = to_json(delta_moment_report(o.a, bs, o.z, o.s, o.x, sieve, o.epsilon));
    out["bs"] = bs;
  } else if (o.report == "lemma2") {
    const u64 n_max = as_count(o.x, "--x");
    const FactorSieve sieve = make_sieve(cfg, n_max);
    double best = 0.0;
    u64 arg = 1;
    for (u64 n = 1; n <= n_max; ++n) {
      const double v = lemma2_check(n, sieve);
      if (v > best) best = v, arg = n;
    }
    out = lemma_record("large_prime_product", Json{{"n_max", n_max}, {"argmax", arg}}, best, 5.0, best <= 5.0);
  } else if (o.report == "lemma3") {
    const u64 n_max = as_count(o.x, "--x");
    const FactorSieve sieve = make_sieve(cfg, n_max);
    double best = 0.0;
    u64 arg = 1;
    for (u64 n = 1; n <= n_max; ++n) {
      const double v = lemma3_report(n, o.alpha, sieve).implied_constant;
      if (v > best) best = v, arg = n;
    }
    out = Json{{"n_max", n_max}, {"alpha", o.alpha}, {"max_implied_constant", best}, {"argmax", arg}};
  } else {
    throw ParameterError("unknown moments report '" + o.report + "'");
  }
  emit(cfg, render(out));
  return 0;
}

// ---- extremal ----

struct ExtremalOpts {
  double M = 1e6;
  double y = 2.2;
  double z = 6.9;
  std::string alphas;
  bool members = false;
};

int run_extremal(const RunConfig& cfg, const ExtremalOpts& o) {
  const u64 M = as_count(o.M, "--M");
  if (M == 0) throw ParameterError("--M must be positive");
  const FactorSieve sieve = make_sieve(cfg, M);
  if (!o.alphas.empty()) {
    const auto alphas = parse_real_list(o.alphas);
    const auto rows = alpha_sweep(M, alphas, sieve);
    if (cfg.format == "csv") {
      emit(cfg, alpha_sweep_csv(rows));
    } else {
      Json arr = Json::array();
      for (const auto& r : rows) arr.push_back(to_json(r));
      emit(cfg, render(Json{{"M", M}, {"sweep", arr}}));
    }
    return 0;
  }
  const ExtremalSet set = construct_extremal_set(M, o.y, o.z, sieve);
  if (cfg.format == "csv") {
    std::ostringstream os;
    os << "n\n";
    for (u64 n : set.members) os << n << '\n';
    emit(cfg, os.str());
    return 0;
  }
  Json j = to_json(set);
  if (o.members) j["members"] = set.members;
  emit(cfg, render(j));
  return 0;
}

// ---- elliptic ----

struct EllipticOpts {
  std::string curve = "1,1";
  double x = 1e4;
  std::string report = "moments";
  unsigned s = 1;
  u64 t = 2;
};

int run_elliptic(const RunConfig& cfg, const EllipticOpts& o) {
  if (!(o.x >= 2)) throw ParameterError("--x must be >= 2");
  const EllipticCurve E = EllipticCurve::parse(o.curve);
  const PrimeList primes = make_primes(cfg, o.x);
  if (o.report == "orders") {
    const OrderSequence seq = order_sequence(E, o.x, primes);
    if (cfg.format == "csv") {
      emit(cfg, seq.to_csv());
    } else {
      Json arr = Json::array();
      for (const auto& e : seq.entries) arr.push_back(Json{{"p", e.p}, {"order", e.order}});
      emit(cfg, render(Json{{"curve", E.to_string()}, {"x", o.x}, {"entries", arr}}));
    }
  } else if (o.report == "census") {
    const CongruenceCensus c = congruence_class_census(E, o.x, o.t, primes);
    if (cfg.format == "csv") {
      emit(cfg, census_csv(c));
    } else {
      Json j = to_json(c);
      j["curve"] = E.to_string();
      j["x"] = o.x;
      emit(cfg, render(j));
    }
  } else if (o.report == "moments") {
    require_json(cfg, "the moments report");
    const FactorSieve sieve = make_sieve(cfg, 1 + 2 * static_cast<u64>(std::floor(o.x)));
    Json j = to_json(theorem5_report(E, o.x, o.s, sieve, primes));
    j["curve"] = E.to_string();
    emit(cfg, render(j));
  } else if (o.report == "hasse") {
    require_json(cfg, "the hasse report");
    double min_margin = INFINITY;
    u64 argmin = 0;
    auto [first, last] = primes.up_to(o.x);
    for (auto it = first; it != last; ++it) {
      const double m = hasse_margin(E, *it);
      if (m < min_margin) min_margin = m, argmin = *it;
    }
    emit(cfg, render(Json{{"curve", E.to_string()}, {"x", o.x}, {"min_margin", min_margin}, {"argmin", argmin},
                          {"pass", min_margin > 0}}));
  } else {
    throw ParameterError("unknown elliptic report '" + o.report + "'");
  }
  return 0;
}

// ---- romanoff ----

struct RomanoffOpts {
  std::string report = "frontier";
  std::string seq = "geom:2:start=0";
  double x = 65536;
  double alpha = 1.0;
  u64 a = 2;
  unsigned b = 2;
  double P = 1e4;
  unsigned z = 20;
  u64 trial_cap = 1'000'000;
  std::string poly = "1,0,-1";
  u64 m = 8;
};

int run_romanoff(const RunConfig& cfg, const RomanoffOpts& o) {
  const std::string& r = o.report;
  if (r == "frontier" || r == "profile" || r == "stats" || r == "theorem9") {
    const u64 x = as_count(o.x, "--x");
    if (x < 1) throw ParameterError("--x must be >= 1");
    const PrimeList primes = make_primes(cfg, static_cast<double>(x));
    if (r == "frontier") {
      require_json(cfg, "the frontier report");
      const SequenceSpec spec = SequenceSpec::parse(o.seq);
      Json j{{"seq", spec.to_string()}, {"x", x}, {"estimates", to_json(theorem6_report(spec, x, o.alpha, primes, default_c1_grid(), cfg.budget))}};
      emit(cfg, render(j));
    } else if (r == "profile") {
      const SequenceSpec spec = SequenceSpec::parse(o.seq);
      const RepresentationProfile prof = representation_counts(spec, x, primes, cfg.budget);
      if (cfg.format == "csv") {
        emit(cfg, prof.to_csv());
      } else {
        std::vector<u32> r1(prof.r.begin() + 1, prof.r.end());
        emit(cfg, render(Json{{"seq", spec.to_string()}, {"x", x}, {"r", r1}, {"second_moment", second_moment(prof)},
                              {"representable", density_count(prof, 1)}, {"cauchy_schwarz", cauchy_schwarz_holds(prof)}}));
      }
    } else if (r == "stats") {
      require_json(cfg, "the stats report");
      const SequenceSpec spec = SequenceSpec::parse(o.seq);
      const auto terms = enumerate_terms(spec, static_cast<double>(x), &primes);
      Json j{{"seq", spec.to_string()}, {"x", x}, {"N_A", terms.size()}, {"rho_A", max_multiplicity(terms)}};
      if (!terms.empty()) {
        const CongruencePairSum cps = congruence_pair_sum(terms, static_cast<double>(x), o.alpha, primes);
        j["doubling_ratio"] = doubling_ratio(spec, static_cast<double>(x));
        j["pair_sum_raw"] = cps.raw;
        j["pair_sum_normalized"] = cps.normalized;
        j["prime_cutoff"] = cps.prime_cutoff;
      }
      emit(cfg, render(j));
    } else {
      require_json(cfg, "the theorem9 report");
      Json j{{"a", o.a}, {"b", o.b}, {"x", x}, {"estimates", to_json(theorem9_report(o.a, o.b, x, primes, cfg.budget))}};
      emit(cfg, render(j));
    }
    return 0;
  }
  require_json(cfg, ("the " + r + " report").c_str());
  if (r == "schnirelmann") {
    if (!(o.x >= 2)) throw ParameterError("--x must be >= 2");
    const PrimeList primes = make_primes(cfg, o.x + static_cast<double>(o.a));
    const ShiftedPrimeCount c = schnirelmann_pi2(o.x, o.a, primes);
    emit(cfg, render(Json{{"x", o.x}, {"a", o.a}, {"count", c.count}, {"normalized", c.normalized}}));
  } else if (r == "order-sum") {
    const PrimeList primes = make_primes(cfg, o.P);
    const FactorSieve sieve = make_sieve(cfg, static_cast<u64>(std::max(2.0, o.P)));
    emit(cfg, render(Json{{"a", o.a}, {"b", o.b}, {"P", o.P}, {"value", order_weighted_sum(o.a, o.b, o.P, primes, &sieve)}}));
  } else if (r == "order-dist") {
    emit(cfg, render(to_json(order_distribution(o.a, o.z, o.trial_cap))));
  } else if (r == "roots") {
    const PolynomialSpec f = PolynomialSpec::parse_descending(o.poly);
    const RootCount rc = root_count(f, o.m);
    emit(cfg, render(Json{{"poly", f.to_string()}, {"m", o.m}, {"count", rc.count}, {"konyagin_ratio", rc.konyagin_ratio}}));
  } else {
    throw ParameterError("unknown romanoff report '" + r + "'");
  }
  return 0;
}

// ---- lemmas ----

struct LemmaOpts {
  bool gamma = false;
  unsigned s_max = 12;
  bool primes = false;
  bool minpk = false;
  std::string abel;
  u64 k = 100;
  unsigned s = 1;
  double tail = 1e6;
};

int run_lemmas(const RunConfig& cfg, const LemmaOpts& o) {
  require_json(cfg, "lemmas");
  if (o.s_max == 0) throw ParameterError("--s-max must be >= 1");
  const bool all = !o.gamma && !o.primes && !o.minpk && o.abel.empty();
  Json records = Json::array();
  if (all || o.gamma) {
    for (unsigned s = 1; s <= o.s_max; ++s) {
      double worst = 0.0;
      double worst_rec = 0.0;
      for (int i = 0; i <= 196; ++i) {
        const double x = 1.0 + 0.25 * i;
        const GammaValue g = incomplete_gamma(s, x);
        worst = std::max(worst, g.value / *g.bound);
        if (s >= 2) {
          const double rec = std::pow(x, s - 1.0) * std::exp(-x) + (s - 1) * incomplete_gamma(s - 1, x).value;
          worst_rec = std::max(worst_rec, std::fabs(rec - g.value) / g.value);
        }
      }
      const Json params{{"s", s}, {"x_min", 1.0}, {"x_max", 50.0}, {"step", 0.25}};
      records.push_back(lemma_record("incomplete_gamma_bound", params, worst, 1.0, worst <= 1.0));
      if (s >= 2) records.push_back(lemma_record("incomplete_gamma_recurrence", params, worst_rec, 1e-10, worst_rec <= 1e-10));
    }
  }
  if (all || o.primes || o.minpk || !o.abel.empty()) {
    const PrimeList pl = make_primes(cfg, std::max(o.tail, 100.0));
    if (all || o.primes) {
      const PrimeLogPowerSums r = prime_log_power_sums(o.k, o.s, pl, o.tail);
      Json params{{"k", o.k}, {"s", o.s}, {"tail_limit", o.tail}};
      Json rec = lemma_record("prime_log_power_sums", params, r.head_ratio, 0.0, std::isfinite(r.head_ratio));
      rec["sums"] = to_json(r);
      records.push_back(rec);
    }
    if (all || o.minpk) {
      const MinPkSum r = min_pk_sum(o.k, o.s, pl, o.tail);
      Json params{{"k", o.k}, {"s", o.s}, {"tail_limit", o.tail}};
      Json rec = lemma_record("min_pk_sum", params, r.normalized, 0.0, std::isfinite(r.normalized));
      rec["value"] = r.value;
      rec["remainder_bound"] = r.remainder_bound;
      records.push_back(rec);
    }
    const std::vector<std::string> kernels =
        o.abel.empty() ? std::vector<std::string>{"reciprocal", "reciprocal_square"} : std::vector<std::string>{o.abel};
    if (all || !o.abel.empty()) {
      for (const auto& name : kernels) {
        const AbelKernel kernel = parse_abel_kernel(name);
        std::vector<double> w(100, 0.0);
        for (u64 p : pl.primes()) {
          if (p > 100) break;
          w[p - 1] = std::pow(std::log(static_cast<double>(p)), static_cast<double>(o.s));
        }
        const AbelCheck c = abel_check(w, kernel);
        Json rec = lemma_record("abel_summation", Json{{"kernel", name}, {"N", 100}, {"s", o.s}},
                                std::fabs(c.direct - c.abel), 1e-9 * std::fabs(c.direct) + 1e-12, c.agree);
        rec["direct"] = c.direct;
        rec["abel"] = c.abel;
        records.push_back(rec);
      }
    }
  }
  emit(cfg, render(records));
  return 0;
}

// ---- verify-all ----

int run_verify_all(const RunConfig& cfg) {
  require_json(cfg, "verify-all");
  const auto results = acceptance::run_all(cfg.seed, [](const acceptance::CriterionResult& r) {
    std::cerr << "criterion " << r.id << ": " << (r.passed ? "PASS" : "FAIL") << "  " << r.title << " ("
              << r.seconds << " s)\n";
  });
  const Json report = acceptance::report_json(cfg.seed, results);
  emit(cfg, render(report));
  return report["all_passed"].get<bool>() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"romanoff-lab: totient moments, representation counts and elliptic orders at desk scale"};
  app.name("romanoff-lab");
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--sieve-limit", cfg.sieve_limit, "largest factor-sieve index")->capture_default_str()
      ->check(CLI::Range(u64{2}, kDefaultSieveCap));
  app.add_option("--prime-limit", cfg.prime_limit, "largest prime-table index (default: sieve limit)");
  app.add_option("--budget", cfg.budget, "max (term, prime) pairs for representation counts")->capture_default_str();
  app.add_option("--threads", cfg.threads, "worker threads, 0 for all cores")->capture_default_str();
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  app.add_option("--out", cfg.out, "output file (default stdout)");
  app.add_option("--seed", cfg.seed, "seed for randomized checks")->capture_default_str();

  SieveOpts sieve_o;
  auto* sieve_cmd = app.add_subcommand("sieve", "prime counts, theta and Mertens products");
  sieve_cmd->add_option("--x", sieve_o.x, "evaluation point (default: sieve limit)");

  MomentOpts mom;
  auto* mom_cmd = app.add_subcommand("moments", "totient-ratio moment sums");
  mom_cmd->add_option("--report", mom.report, "theorem1 | poly | delta | lemma2 | lemma3")->capture_default_str();
  mom_cmd->add_option("--seq", mom.seq, "sequence supplying the list a_n")->capture_default_str();
  mom_cmd->add_option("--x", mom.x, "term bound, or sweep bound for lemma2/lemma3")->capture_default_str();
  mom_cmd->add_option("--s", mom.s, "moment order")->capture_default_str();
  mom_cmd->add_option("--alpha", mom.alpha, "prime cutoff exponent")->capture_default_str();
  mom_cmd->add_option("--M", mom.M, "upper bound for the list (default: largest term)");
  mom_cmd->add_option("--poly", mom.poly, "coefficients a_k..a_0")->capture_default_str();
  mom_cmd->add_option("--z", mom.z, "summation range [-z, z]")->capture_default_str();
  mom_cmd->add_option("--a", mom.a, "common slope of the linear forms")->capture_default_str();
  mom_cmd->add_option("--bs", mom.bs, "offsets b_1,..,b_k")->capture_default_str();
  mom_cmd->add_option("--epsilon", mom.epsilon, "window exponent for z")->capture_default_str();

  ExtremalOpts ext;
  auto* ext_cmd = app.add_subcommand("extremal", "sets with forced large totient ratio");
  ext_cmd->add_option("--M", ext.M, "upper bound for members")->capture_default_str();
  ext_cmd->add_option("--y", ext.y, "excluded primes are <= y")->capture_default_str();
  ext_cmd->add_option("--z", ext.z, "forced primes lie in (y, z]")->capture_default_str();
  ext_cmd->add_option("--alphas", ext.alphas, "comma list; sweep y = (ln M)^alpha, z = ln M / 2");
  ext_cmd->add_flag("--members", ext.members, "include the member list");

  EllipticOpts ell;
  auto* ell_cmd = app.add_subcommand("elliptic", "curve orders over F_p");
  ell_cmd->add_option("--curve", ell.curve, "A,B")->capture_default_str();
  ell_cmd->add_option("--x", ell.x, "prime bound")->capture_default_str();
  ell_cmd->add_option("--report", ell.report, "moments | orders | census | hasse")->capture_default_str();
  ell_cmd->add_option("--s", ell.s, "moment order")->capture_default_str();
  ell_cmd->add_option("--t", ell.t, "census modulus")->capture_default_str();

  RomanoffOpts rom;
  auto* rom_cmd = app.add_subcommand("romanoff", "representation counts p + a_j = n and order statistics");
  rom_cmd->add_option("--report", rom.report,
                      "frontier | profile | stats | theorem9 | schnirelmann | order-sum | order-dist | roots")
      ->capture_default_str();
  rom_cmd->add_option("--seq", rom.seq, "sequence spec")->capture_default_str();
  rom_cmd->add_option("--x", rom.x, "bound")->capture_default_str();
  rom_cmd->add_option("--alpha", rom.alpha, "prime cutoff exponent for the pair sum")->capture_default_str();
  rom_cmd->add_option("--a", rom.a, "base, or shift for schnirelmann")->capture_default_str();
  rom_cmd->add_option("--b", rom.b, "tower exponent")->capture_default_str();
  rom_cmd->add_option("--P", rom.P, "prime bound for order-sum")->capture_default_str();
  rom_cmd->add_option("--z", rom.z, "exponent range for order-dist")->capture_default_str();
  rom_cmd->add_option("--trial-cap", rom.trial_cap, "trial division bound for order-dist")->capture_default_str();
  rom_cmd->add_option("--poly", rom.poly, "coefficients a_k..a_0 for roots")->capture_default_str();
  rom_cmd->add_option("--m", rom.m, "modulus for roots")->capture_default_str();

  LemmaOpts lem;
  auto* lem_cmd = app.add_subcommand("lemmas", "incomplete gamma, prime log-power sums, partial summation");
  lem_cmd->add_flag("--gamma", lem.gamma, "incomplete gamma bound and recurrence");
  lem_cmd->add_option("--s-max", lem.s_max, "largest s for --gamma")->capture_default_str();
  lem_cmd->add_flag("--primes", lem.primes, "prime log-power sums");
  lem_cmd->add_flag("--minpk", lem.minpk, "min(p, k) weighted prime sum");
  lem_cmd->add_option("--abel", lem.abel, "reciprocal | reciprocal_square");
  lem_cmd->add_option("--k", lem.k, "cutoff k")->capture_default_str();
  lem_cmd->add_option("--s", lem.s, "log power s")->capture_default_str();
  lem_cmd->add_option("--tail", lem.tail, "prime bound for the tail sums")->capture_default_str();

  auto* ver_cmd = app.add_subcommand("verify-all", "run the full verification suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    set_thread_count(cfg.threads);
    if (sieve_cmd->parsed()) return run_sieve(cfg, sieve_o);
    if (mom_cmd->parsed()) return run_moments(cfg, mom);
    if (ext_cmd->parsed()) return run_extremal(cfg, ext);
    if (ell_cmd->parsed()) return run_elliptic(cfg, ell);
    if (rom_cmd->parsed()) return run_romanoff(cfg, rom);
    if (lem_cmd->parsed()) return run_lemmas(cfg, lem);
    if (ver_cmd->parsed()) return run_verify_all(cfg);
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << '\n';
    return 3;
  } catch (const RangeError& e) {
    std::cerr << "range: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
