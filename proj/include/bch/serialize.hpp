#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>

#include <bch/bicomplex.hpp>
#include <bch/identities.hpp>
#include <bch/params.hpp>
#include <bch/quad_ext.hpp>
#include <bch/rational.hpp>

namespace bch {

// JSON forms. Rationals are string-encoded ("num" or "num/den"); no
// floating point appears anywhere. ordered_json keeps key order stable so
// repeated runs serialize byte-identically.
using json = nlohmann::ordered_json;

inline json to_json(const Bicomplex<Rational>& b) {
  return {{"1", b.w().to_string()},
          {"i", b.x().to_string()},
          {"j", b.y().to_string()},
          {"k", b.z().to_string()}};
}

inline Bicomplex<Rational> bicomplex_from_json(const json& j) {
  return {Rational::from_string(j.at("1").get<std::string>()),
          Rational::from_string(j.at("i").get<std::string>()),
          Rational::from_string(j.at("j").get<std::string>()),
          Rational::from_string(j.at("k").get<std::string>())};
}

inline json to_json(const QuadExt& x) {
  return {{"u", x.u().to_string()},
          {"v", x.v().to_string()},
          {"delta", x.delta().to_string()}};
}

inline json to_json(const HoradamParams& params) {
  return {{"a", params.a.to_string()},
          {"b", params.b.to_string()},
          {"p", params.p.to_string()},
          {"q", params.q.to_string()}};
}

inline json to_json(const IdentityReport& report) {
  const IdentityArity ar = arity(report.id);
  json range{{"n_min", report.bounds.n_min}, {"n_max", report.bounds.n_max}};
  if (ar == IdentityArity::NR) {
    range["r_min"] = report.bounds.second_min;
    range["r_max"] = report.bounds.second_max;
  } else if (ar == IdentityArity::NM) {
    range["m_min"] = report.bounds.second_min;
    range["m_max"] = report.bounds.second_max;
  }

  json cex = json::array();
  for (const auto& c : report.counterexamples) {
    json indices{{"n", c.indices.n}};
    if (c.indices.second)
      indices[ar == IdentityArity::NR ? "r" : "m"] = *c.indices.second;
    cex.push_back({{"indices", indices},
                   {"lhs", to_json(c.lhs)},
                   {"rhs", to_json(c.rhs)},
                   {"difference", to_json(c.difference)}});
  }

  return {{"identity", identity_name(report.id)},
          {"params", to_json(report.params)},
          {"range", range},
          {"verdict", report.verdict()},
          {"counterexamples", cex}};
}

}  // namespace bch
