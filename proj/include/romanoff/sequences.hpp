#pragma once

// Sequence families A = {a_j} and the counting statistics N_A, ord_A, rho_A,
// the doubling ratio N_A(x/2)/N_A(x) and the congruence-pair sum.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "romanoff/arith.hpp"
#include "romanoff/elliptic.hpp"
#include "romanoff/errors.hpp"
#include "romanoff/polynomial.hpp"
#include "romanoff/sieve.hpp"

namespace romanoff {

inline constexpr u64 kMaxGeneratedTerms = 100'000'000;

// a^j for j >= start_exponent.
struct Geometric {
  u64 a = 2;
  unsigned start_exponent = 0;
  friend bool operator==(const Geometric&, const Geometric&) = default;
};

// a^(j^b) for j >= 0.
struct PowerTower {
  u64 a = 2;
  unsigned b = 2;
  friend bool operator==(const PowerTower&, const PowerTower&) = default;
};

// R(j) for j >= 1 with R(j) > 0.
struct Polynomial {
  PolynomialSpec R;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

// #E(F_q) over primes q ascending.
struct EllipticOrders {
  EllipticCurve curve;
  friend bool operator==(const EllipticOrders&, const EllipticOrders&) = default;
};

struct Explicit {
  std::vector<u64> values;
  friend bool operator==(const Explicit&, const Explicit&) = default;
};

struct SequenceSpec {
  std::variant<Geometric, PowerTower, Polynomial, EllipticOrders, Explicit> family;

  friend bool operator==(const SequenceSpec&, const SequenceSpec&) = default;

  // Canonical textual form: geom:2:start=0, tower:2:3, poly:1,0,0 (a_k..a_0),
  // ecorders:1,1, explicit:1,1,2 (or explicit:@file on input).
  std::string to_string() const {
    struct Printer {
      std::string operator()(const Geometric& g) const {
        return "geom:" + std::to_string(g.a) + ":start=" + std::to_string(g.start_exponent);
      }
      std::string operator()(const PowerTower& t) const {
        return "tower:" + std::to_string(t.a) + ":" + std::to_string(t.b);
      }
      std::string operator()(const Polynomial& p) const { return "poly:" + p.R.to_string(); }
      std::string operator()(const EllipticOrders& e) const { return "ecorders:" + e.curve.to_string(); }
      std::string operator()(const Explicit& e) const {
        std::string s = "explicit:";
        for (std::size_t i = 0; i < e.values.size(); ++i) s += (i ? "," : "") + std::to_string(e.values[i]);
        return s;
      }
    };
    return std::visit(Printer{}, family);
  }

  static SequenceSpec parse(const std::string& text);
};

namespace detail {

inline u64 parse_u64(const std::string& tok, const std::string& context) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
    throw ParameterError("expected a non-negative integer in '" + context + "', got '" + tok + "'");
  }
  return std::stoull(tok);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::stringstream ss(s);
  while (std::getline(ss, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

inline std::vector<u64> read_values(std::istream& in, const std::string& context) {
  std::vector<u64> values;
  std::string line;
  while (std::getline(in, line)) {
    line.erase(0, line.find_first_not_of(" \t\r"));
    line.erase(line.find_last_not_of(" \t\r") + 1);
    if (line.empty()) continue;
    const u64 v = parse_u64(line, context);
    if (v == 0) throw ParameterError("sequence terms must be positive");
    values.push_back(v);
  }
  return values;
}

}  // namespace detail

inline SequenceSpec SequenceSpec::parse(const std::string& text) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string body = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (kind == "geom") {
    const auto parts = detail::split(body, ':');
    if (parts.empty() || parts.size() > 2) throw ParameterError("geom spec is geom:a[:start=0|1]");
    Geometric g{detail::parse_u64(parts[0], text), 0};
    if (parts.size() == 2) {
      if (parts[1].rfind("start=", 0) != 0) throw ParameterError("geom option must be start=0 or start=1");
      const u64 st = detail::parse_u64(parts[1].substr(6), text);
      if (st > 1) throw ParameterError("geom start exponent must be 0 or 1");
      g.start_exponent = static_cast<unsigned>(st);
    }
    if (g.a < 2) throw ParameterError("geom base must be >= 2");
    return {g};
  }
  if (kind == "tower") {
    const auto parts = detail::split(body, ':');
    if (parts.size() != 2) throw ParameterError("tower spec is tower:a:b");
    PowerTower t{detail::parse_u64(parts[0], text), static_cast<unsigned>(detail::parse_u64(parts[1], text))};
    if (t.a < 2 || t.b < 2) throw ParameterError("tower needs a >= 2 and b >= 2");
    return {t};
  }
  if (kind == "poly") return {Polynomial{PolynomialSpec::parse_descending(body)}};
  if (kind == "ecorders") return {EllipticOrders{EllipticCurve::parse(body)}};
  if (kind == "explicit") {
    if (!body.empty() && body[0] == '@') {
      std::ifstream in(body.substr(1));
      if (!in) throw ParameterError("cannot open sequence file '" + body.substr(1) + "'");
      return {Explicit{detail::read_values(in, text)}};
    }
    Explicit e;
    if (!body.empty()) {
      for (const auto& tok : detail::split(body, ',')) {
        const u64 v = detail::parse_u64(tok, text);
        if (v == 0) throw ParameterError("sequence terms must be positive");
        e.values.push_back(v);
      }
    }
    return {e};
  }
  throw ParameterError("unknown sequence family '" + kind + "'");
}

namespace detail {

// Largest q with #E(F_q) <= x possible: (sqrt(q) - 1)^2 < #E forces q < (sqrt(x) + 1)^2.
inline u64 elliptic_prime_bound(double x) {
  const double r = std::sqrt(x) + 1.0;
  return static_cast<u64>(std::ceil(r * r));
}

inline void guard_terms(u64 count) {
  if (count > kMaxGeneratedTerms) throw CapacityError("sequence generation exceeds 10^8 terms");
}

}  // namespace detail

// Terms a_j <= x with multiplicity, ascending.
inline std::vector<u64> enumerate_terms(const SequenceSpec& spec, double x, const PrimeList* primes = nullptr) {
  if (!(x >= 1)) throw ParameterError("enumerate_terms needs x >= 1");
  const u64 xi = static_cast<u64>(std::floor(std::min(x, 1.8e19)));
  std::vector<u64> out;
  struct Visitor {
    u64 xi;
    double x;
    const PrimeList* primes;
    std::vector<u64>& out;

    void operator()(const Geometric& g) const {
      u128 v = 1;
      for (unsigned j = 0; j < g.start_exponent; ++j) v *= g.a;
      while (v <= xi) {
        out.push_back(static_cast<u64>(v));
        v *= g.a;
      }
    }
    void operator()(const PowerTower& t) const {
      // exponent j^b grows, so stop once a^(j^b) > x.
      for (u64 j = 0;; ++j) {
        // Saturate j^b at 128: a^128 > x for every a >= 2.
        u64 e = j == 0 ? 0 : 1;
        for (unsigned i = 0; i < t.b && e < 128; ++i) e = std::min<u64>(e * j, 128);
        u128 v = 1;
        bool over = false;
        for (u64 i = 0; i < e; ++i) {
          v *= t.a;
          if (v > xi) {
            over = true;
            break;
          }
        }
        if (over) break;
        out.push_back(static_cast<u64>(v));
      }
    }
    void operator()(const Polynomial& p) const {
      const auto& c = p.R.coeffs();
      const unsigned k = p.R.degree();
      if (k == 0) {
        if (c[0] > 0 && static_cast<u64>(c[0]) <= xi) throw DomainError("constant sequence has infinite multiplicity");
        return;
      }
      // Cauchy bounds: beyond j0, R has no roots and R' has no roots, so R is monotone with the sign of a_k.
      const double lead = std::fabs(static_cast<double>(p.R.leading()));
      double bound_r = 0.0;
      double bound_d = 0.0;
      for (unsigned i = 0; i < k; ++i) {
        bound_r = std::max(bound_r, std::fabs(static_cast<double>(c[i])) / lead);
        if (i >= 1) bound_d = std::max(bound_d, i * std::fabs(static_cast<double>(c[i])) / (k * lead));
      }
      const double j0_real = std::ceil(std::max(bound_r, bound_d)) + 2;
      if (j0_real > static_cast<double>(kMaxGeneratedTerms)) throw CapacityError("polynomial monotonicity bound too large");
      const u64 j0 = static_cast<u64>(j0_real);
      for (u64 j = 1;; ++j) {
        const i128 v = p.R.eval(static_cast<i128>(j));
        if (v > 0 && v <= static_cast<i128>(xi)) {
          out.push_back(static_cast<u64>(v));
          detail::guard_terms(out.size());
        }
        if (j >= j0 && (p.R.leading() < 0 || v > static_cast<i128>(xi))) break;
      }
      std::sort(out.begin(), out.end());
    }
    void operator()(const EllipticOrders& e) const {
      const u64 qmax = detail::elliptic_prime_bound(x);
      PrimeList local;
      const PrimeList* pl = primes;
      if (pl == nullptr || pl->limit() < qmax) {
        local = PrimeList(qmax);
        pl = &local;
      }
      for (u64 q : pl->primes()) {
        if (q > qmax) break;
        const u64 n = count_points(e.curve, q);
        if (n <= xi) out.push_back(n);
      }
      std::sort(out.begin(), out.end());
    }
    void operator()(const Explicit& e) const {
      for (u64 v : e.values) {
        if (v <= xi) out.push_back(v);
      }
      std::sort(out.begin(), out.end());
    }
  };
  std::visit(Visitor{xi, x, primes, out}, spec.family);
  detail::guard_terms(out.size());
  return out;
}

inline u64 N_A(const SequenceSpec& spec, double x) { return x < 1 ? 0 : enumerate_terms(spec, x).size(); }

inline u64 ord_A(const SequenceSpec& spec, u64 n) {
  if (n == 0) return 0;
  const auto terms = enumerate_terms(spec, static_cast<double>(n));
  return static_cast<u64>(std::count(terms.begin(), terms.end(), n));
}

// Max multiplicity over a sorted multiset.
inline u64 max_multiplicity(const std::vector<u64>& sorted_terms) {
  u64 best = 0;
  for (std::size_t i = 0; i < sorted_terms.size();) {
    std::size_t j = i;
    while (j < sorted_terms.size() && sorted_terms[j] == sorted_terms[i]) ++j;
    best = std::max<u64>(best, j - i);
    i = j;
  }
  return best;
}

inline u64 rho_A(const SequenceSpec& spec, double x) {
  return x < 1 ? 0 : max_multiplicity(enumerate_terms(spec, x));
}

// N_A(x/2) / N_A(x), the empirical doubling constant.
inline double doubling_ratio(const SequenceSpec& spec, double x) {
  const auto terms = enumerate_terms(spec, x);
  if (terms.empty()) throw DomainError("N_A(x) = 0");
  const double half = x / 2.0;
  const auto below = std::upper_bound(terms.begin(), terms.end(), static_cast<u64>(std::floor(half)));
  return static_cast<double>(below - terms.begin()) / static_cast<double>(terms.size());
}

struct CongruencePairSum {
  double raw = 0.0;
  double normalized = 0.0;  // raw / N_A(x)^2
  u64 n_terms = 0;
  double prime_cutoff = 0.0;
};

// Ordered pairs with a_k < a_j <= x sharing a residue mod p, weighted by ln p / p.
// Per prime, pairs in one residue class number C(n,2) minus the equal-value pairs.
inline CongruencePairSum congruence_pair_sum(const std::vector<u64>& terms, double x, double alpha,
                                             const PrimeList& primes) {
  if (!(alpha > 0)) throw ParameterError("alpha must be positive");
  if (terms.empty()) throw DomainError("N_A(x) = 0");
  CongruencePairSum out;
  out.n_terms = terms.size();
  out.prime_cutoff = x > 1 ? std::pow(std::log(x), alpha) : 0.0;
  if (out.prime_cutoff < 2) return out;
  primes.require(out.prime_cutoff);
  std::map<u64, u64> multiplicity;
  for (u64 v : terms) ++multiplicity[v];
  CompensatedSum raw;
  auto [first, last] = primes.up_to(out.prime_cutoff);
  for (auto it = first; it != last; ++it) {
    const u64 p = *it;
    std::map<u64, std::pair<u64, u64>> classes;  // residue -> (size, equal-value pairs)
    for (const auto& [v, m] : multiplicity) {
      auto& cls = classes[v % p];
      cls.first += m;
      cls.second += m * (m - 1) / 2;
    }
    u64 pairs = 0;
    for (const auto& [r, cls] : classes) pairs += cls.first * (cls.first - 1) / 2 - cls.second;
    raw += static_cast<double>(pairs) * std::log(static_cast<double>(p)) / static_cast<double>(p);
  }
  out.raw = raw.value();
  const double n = static_cast<double>(terms.size());
  out.normalized = out.raw / (n * n);
  return out;
}

inline CongruencePairSum congruence_pair_sum(const SequenceSpec& spec, double x, double alpha,
                                             const PrimeList& primes) {
  return congruence_pair_sum(enumerate_terms(spec, x, &primes), x, alpha, primes);
}

}  // namespace romanoff
