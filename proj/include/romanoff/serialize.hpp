#pragma once

// JSON and CSV renderings of the report types. Keys come out sorted, doubles in
// shortest round-trip form, so identical inputs give identical bytes.

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "romanoff/elliptic.hpp"
#include "romanoff/extremal.hpp"
#include "romanoff/lemmas.hpp"
#include "romanoff/moments.hpp"
#include "romanoff/romanoff.hpp"
#include "romanoff/sieve.hpp"

namespace romanoff {

using Json = nlohmann::json;

inline Json to_json(const MomentReport& r) {
  return Json{{"lhs", r.lhs},
              {"rhs_core", r.rhs_core},
              {"implied_constant", r.implied_constant},
              {"parameters", r.parameters},
              {"notes", r.notes}};
}

inline Json to_json(const ConstantEstimate& c) {
  return Json{{"name", c.name}, {"value", c.value}, {"parameters", c.parameters}, {"direction", to_string(c.direction)}};
}

inline Json to_json(const std::vector<ConstantEstimate>& cs) {
  Json arr = Json::array();
  for (const auto& c : cs) arr.push_back(to_json(c));
  return arr;
}

inline Json to_json(const GammaValue& g) {
  Json j{{"s", g.s}, {"x", g.x}, {"value", g.value}};
  j["bound"] = g.bound ? Json(*g.bound) : Json(nullptr);
  return j;
}

inline Json to_json(const MertensProducts& m) {
  return Json{{"plus_product", m.plus_product},
              {"minus_product", m.minus_product},
              {"plus_over_lnx", m.plus_over_lnx},
              {"minus_over_lnx", m.minus_over_lnx}};
}

inline std::string rational_text(const BigRational& q) {
  std::ostringstream os;
  os << numerator(q) << '/' << denominator(q);
  return os.str();
}

inline Json to_json(const ExtremalSet& s) {
  return Json{{"M", s.M},
              {"y", s.y},
              {"z", s.z},
              {"Q", s.Q.str()},
              {"forced_primes", s.forced_primes},
              {"count", s.members.size()},
              {"empty", s.empty},
              {"mean_ratio", to_double(s.mean_ratio)},
              {"mean_ratio_exact", rational_text(s.mean_ratio)},
              {"forced_ratio", to_double(s.forced_ratio())}};
}

inline Json to_json(const AlphaSweepRow& r) {
  return Json{{"alpha", r.alpha}, {"y", r.y},         {"z", r.z},
              {"Q", r.Q.str()},   {"count", r.count}, {"mean_ratio", r.mean_ratio},
              {"empirical_c", r.empirical_c}};
}

inline Json to_json(const CongruenceCensus& c) {
  return Json{{"modulus", c.modulus}, {"pi_x", c.pi_x}, {"counts", c.counts}, {"expected_per_unit", c.expected_per_unit}};
}

inline Json to_json(const OrderDistribution& d) {
  Json rows = Json::array();
  for (const auto& r : d.rows) rows.push_back(Json{{"n", r.n}, {"d_n", r.d_n}, {"primes", r.primes}, {"exact", r.exact}});
  return Json{{"a", d.a}, {"z", d.z}, {"rows", rows}, {"D", d.D}, {"D_over_log", d.D_over_log}, {"exact", d.exact}};
}

inline Json to_json(const PrimeLogPowerSums& p) {
  return Json{{"head", p.head},
              {"tail_partial", p.tail_partial},
              {"tail_remainder_bound", p.tail_remainder_bound},
              {"head_ratio", p.head_ratio},
              {"tail_ratio", p.tail_ratio}};
}

inline std::string census_csv(const CongruenceCensus& c) {
  std::ostringstream os;
  os << "residue,count\n";
  for (std::size_t a = 0; a < c.counts.size(); ++a) os << a << ',' << c.counts[a] << '\n';
  return os.str();
}

inline std::string alpha_sweep_csv(const std::vector<AlphaSweepRow>& rows) {
  // numbers go through the JSON formatter so both formats print the same digits
  std::ostringstream os;
  os << "alpha,y,z,Q,count,mean_ratio,empirical_c\n";
  for (const auto& r : rows) {
    os << Json(r.alpha).dump() << ',' << Json(r.y).dump() << ',' << Json(r.z).dump() << ',' << r.Q << ','
       << r.count << ',' << Json(r.mean_ratio).dump() << ',' << Json(r.empirical_c).dump() << '\n';
  }
  return os.str();
}

// Two-space indented JSON with a trailing newline.
inline std::string render(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace romanoff
