#pragma once

// Point counts #E(F_p) for y^2 = x^3 + Ax + B, Hasse margins, order sequences,
// residue-class censuses of the orders and their totient moments.

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "romanoff/arith.hpp"
#include "romanoff/errors.hpp"
#include "romanoff/moments.hpp"
#include "romanoff/parallel.hpp"
#include "romanoff/sieve.hpp"

namespace romanoff {

class EllipticCurve {
 public:
  EllipticCurve(i64 A, i64 B) : A_(A), B_(B) {
    constexpr i64 kMaxCoeff = 1'000'000'000'000LL;
    if (std::llabs(A) > kMaxCoeff || std::llabs(B) > kMaxCoeff) throw CapacityError("curve coefficient too large");
    disc_ = 4 * static_cast<i128>(A) * A * A + 27 * static_cast<i128>(B) * B;
    if (disc_ == 0) throw DomainError("singular curve: 4A^3 + 27B^2 = 0");
  }

  i64 A() const { return A_; }
  i64 B() const { return B_; }
  i128 discriminant() const { return disc_; }
  bool singular_mod(u64 p) const { return disc_ % static_cast<i128>(p) == 0; }

  // "A,B"
  std::string to_string() const { return std::to_string(A_) + "," + std::to_string(B_); }

  static EllipticCurve parse(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw ParameterError("curve must be written as A,B: '" + text + "'");
    auto field = [&](const std::string& tok) {
      char* end = nullptr;
      const long long v = std::strtoll(tok.c_str(), &end, 10);
      if (tok.empty() || *end != '\0') throw ParameterError("bad curve coefficient '" + tok + "'");
      return static_cast<i64>(v);
    };
    return EllipticCurve(field(text.substr(0, comma)), field(text.substr(comma + 1)));
  }

  friend bool operator==(const EllipticCurve& l, const EllipticCurve& r) { return l.A_ == r.A_ && l.B_ == r.B_; }

 private:
  i64 A_;
  i64 B_;
  i128 disc_;
};

inline u64 mod_signed(i64 v, u64 p) {
  const i64 r = v % static_cast<i64>(p);
  return static_cast<u64>(r < 0 ? r + static_cast<i64>(p) : r);
}

// Legendre symbol via Euler's criterion.
inline int legendre_symbol(i64 a, u64 p) {
  if (p < 3 || p % 2 == 0 || !is_prime_u64(p)) throw DomainError("legendre_symbol needs an odd prime");
  const u64 r = mod_signed(a, p);
  if (r == 0) return 0;
  return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

// #E(F_p) by enumerating all p^2 pairs; test oracle and the p in {2, 3} path.
inline u64 count_points_enumerate(const EllipticCurve& E, u64 p) {
  const u64 a = mod_signed(E.A(), p);
  const u64 b = mod_signed(E.B(), p);
  u64 count = 1;
  for (u64 x = 0; x < p; ++x) {
    const u64 rhs = (mul_mod(mul_mod(x, x, p), x, p) + mul_mod(a, x, p) + b) % p;
    for (u64 y = 0; y < p; ++y) count += (mul_mod(y, y, p) == rhs);
  }
  return count;
}

// 1 + sum_x (1 + chi(x^3 + Ax + B)); the character is read off a table of
// square-root counts, which is exactly 1 + chi(v).
inline u64 count_points(const EllipticCurve& E, u64 p) {
  if (!is_prime_u64(p)) throw DomainError("count_points needs a prime modulus");
  if (p <= 3) return count_points_enumerate(E, p);
  if (p > (1ULL << 31)) throw CapacityError("count_points is limited to p < 2^31");
  std::vector<std::uint8_t> roots(p, 0);
  // (y+1)^2 = y^2 + 2y + 1
  for (u64 y = 0, sq = 0; y < p; ++y) {
    ++roots[sq];
    sq = (sq + 2 * y + 1) % p;
  }
  const u64 a = mod_signed(E.A(), p);
  const u64 b = mod_signed(E.B(), p);
  u64 count = 1;
  for (u64 x = 0; x < p; ++x) {
    const u64 x2 = x * x % p;
    const u64 rhs = ((x2 + a) % p * x + b) % p;
    count += roots[rhs];
  }
  return count;
}

// 2 sqrt(p) - |#E(F_p) - (p + 1)|.
inline double hasse_margin(const EllipticCurve& E, u64 p) {
  const double dev = std::fabs(static_cast<double>(count_points(E, p)) - static_cast<double>(p + 1));
  return 2.0 * std::sqrt(static_cast<double>(p)) - dev;
}

// (sqrt p - 1)^2 < N < (sqrt p + 1)^2, decided in integers as (N - p - 1)^2 < 4p.
inline bool within_hasse_interval(u64 order, u64 p) {
  const i128 dev = static_cast<i128>(order) - static_cast<i128>(p) - 1;
  return dev * dev < 4 * static_cast<i128>(p);
}

struct OrderEntry {
  u64 p = 0;
  u64 order = 0;
  friend bool operator==(const OrderEntry&, const OrderEntry&) = default;
};

struct OrderSequence {
  EllipticCurve curve;
  double x = 0.0;
  std::vector<OrderEntry> entries;  // ascending in p

  std::string to_csv() const {
    std::ostringstream os;
    os << "p,order\n";
    for (const auto& e : entries) os << e.p << ',' << e.order << '\n';
    return os.str();
  }
};

inline OrderSequence order_sequence(const EllipticCurve& E, double x, const PrimeList& primes) {
  if (!(x >= 2)) throw ParameterError("order_sequence needs x >= 2");
  primes.require(x);
  auto [first, last] = primes.up_to(x);
  const std::vector<u64> ps(first, last);
  std::vector<OrderEntry> entries(ps.size());
  parallel_chunks(ps.size(), [&](std::size_t begin, std::size_t end, std::size_t) {
    for (std::size_t i = begin; i < end; ++i) entries[i] = {ps[i], count_points(E, ps[i])};
  });
  return OrderSequence{E, x, std::move(entries)};
}

struct CongruenceCensus {
  u64 modulus = 1;
  u64 pi_x = 0;
  std::vector<u64> counts;  // counts[a] = #{p <= x : #E(F_p) = a mod t}
  double expected_per_unit = 0.0;  // pi(x) / phi(t)
};

inline CongruenceCensus congruence_class_census(const EllipticCurve& E, double x, u64 t, const PrimeList& primes) {
  if (t == 0) throw ParameterError("census modulus must be >= 1");
  const OrderSequence seq = order_sequence(E, x, primes);
  CongruenceCensus c;
  c.modulus = t;
  c.pi_x = seq.entries.size();
  c.counts.assign(t, 0);
  for (const auto& e : seq.entries) ++c.counts[e.order % t];
  c.expected_per_unit = static_cast<double>(c.pi_x) / static_cast<double>(totient_by_trial(t));
  return c;
}

// Moment sum of the curve orders against pi(x); lhs >= pi(x) always.
inline MomentReport theorem5_report(const EllipticCurve& E, double x, unsigned s, const FactorSieve& sieve,
                                    const PrimeList& primes) {
  if (s == 0) throw ParameterError("moment order s must be >= 1");
  if (!(x >= 2)) throw ParameterError("theorem5_report needs x >= 2");
  if (1.0 + 2.0 * std::floor(x) > static_cast<double>(sieve.limit())) {
    throw RangeError("curve orders up to 1 + 2x exceed the sieve limit");
  }
  const OrderSequence seq = order_sequence(E, x, primes);
  std::vector<u64> orders;
  orders.reserve(seq.entries.size());
  u64 singular = 0;
  for (const auto& e : seq.entries) {
    orders.push_back(e.order);
    singular += E.singular_mod(e.p);
  }
  MomentReport rep;
  rep.lhs = moment_sum_real(orders, s, sieve);
  rep.rhs_core = static_cast<double>(orders.size());
  rep.implied_constant = rep.lhs / rep.rhs_core;
  rep.parameters = {{"s", s}, {"x", x}, {"pi_x", rep.rhs_core}, {"A", static_cast<double>(E.A())},
                    {"B", static_cast<double>(E.B())}, {"singular_primes", static_cast<double>(singular)}};
  rep.notes.push_back("absence of complex multiplication is assumed, not checked");
  if (singular > 0) rep.notes.push_back("primes dividing the discriminant are counted by the raw congruence definition");
  return rep;
}

}  // namespace romanoff
