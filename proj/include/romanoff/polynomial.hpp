#pragma once

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "romanoff/arith.hpp"
#include "romanoff/errors.hpp"

namespace romanoff {

// Integer polynomial a_0 + a_1 n + ... + a_k n^k with a_k != 0.
class PolynomialSpec {
 public:
  PolynomialSpec() = default;

  // Coefficients in ascending order a_0..a_k.
  explicit PolynomialSpec(std::vector<i64> ascending) : coeffs_(std::move(ascending)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.empty()) throw DomainError("polynomial must have a nonzero leading coefficient");
    content_ = 0;
    for (i64 c : coeffs_) content_ = std::gcd(content_, static_cast<u64>(c < 0 ? -static_cast<i128>(c) : c));
  }

  // Coefficients in descending order a_k..a_0, as written on the command line.
  static PolynomialSpec from_descending(std::vector<i64> descending) {
    return PolynomialSpec(std::vector<i64>(descending.rbegin(), descending.rend()));
  }

  static PolynomialSpec monomial(unsigned k, i64 lead = 1) {
    std::vector<i64> c(k + 1, 0);
    c[k] = lead;
    return PolynomialSpec(std::move(c));
  }

  const std::vector<i64>& coeffs() const { return coeffs_; }
  unsigned degree() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  i64 leading() const { return coeffs_.back(); }
  // delta = gcd(a_0, ..., a_k).
  u64 content() const { return content_; }

  // Horner evaluation with overflow checks.
  i128 eval(i128 n) const {
    i128 acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = checked_add(checked_mul(acc, n), *it);
    return acc;
  }

  // f(n) mod m in [0, m).
  u64 eval_mod(u64 n, u64 m) const {
    u64 acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      const i64 c = *it;
      const u64 cm = c >= 0 ? static_cast<u64>(c) % m : (m - static_cast<u64>(-static_cast<i128>(c) % m)) % m;
      acc = (mul_mod(acc, n % m, m) + cm) % m;
    }
    return acc;
  }

  // Canonical descending textual form, e.g. "1,0,-1" for n^2 - 1.
  std::string to_string() const {
    std::ostringstream os;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      if (it != coeffs_.rbegin()) os << ',';
      os << *it;
    }
    return os.str();
  }

  static PolynomialSpec parse_descending(const std::string& text) {
    std::vector<i64> desc;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) throw ParameterError("empty coefficient in polynomial '" + text + "'");
      char* end = nullptr;
      const long long v = std::strtoll(tok.c_str(), &end, 10);
      if (*end != '\0') throw ParameterError("bad coefficient '" + tok + "'");
      desc.push_back(v);
    }
    if (desc.empty()) throw ParameterError("polynomial needs at least one coefficient");
    return from_descending(std::move(desc));
  }

  friend bool operator==(const PolynomialSpec& a, const PolynomialSpec& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<i64> coeffs_;
  u64 content_ = 0;
};

}  // namespace romanoff
