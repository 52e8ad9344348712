#pragma once

// JSON for the result payloads.  Integers beyond 2^53 and all rationals are
// strings.

#include "spingrass/arith.hpp"
#include "spingrass/dirac.hpp"
#include "spingrass/lie_algebra.hpp"
#include "spingrass/partition.hpp"
#include "spingrass/report.hpp"
#include "spingrass/spinor_decomp.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace spingrass {

using json = nlohmann::json;

inline json big_to_json(const BigInt& v) {
  static const BigInt limit = pow2(53);
  if (abs(v) <= limit) return static_cast<long long>(v);
  return v.str();
}

inline BigInt big_from_json(const json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  require(j.is_number_integer(), "expected an integer, got " + j.dump());
  return BigInt(j.get<long long>());
}

inline json rational_to_json(const BigRational& q) { return to_string(q); }
inline BigRational rational_from_json(const json& j) {
  if (j.is_number_integer()) return BigRational(j.get<long long>());
  return parse_rational(j.get<std::string>());
}

inline json to_json(const Partition& p) { return p.normalized().parts(); }
inline Partition partition_from_json(const json& j) { return Partition(j.get<std::vector<int>>()); }

inline json to_json(const Weight& w) { return {{"algebra", w.algebra().name()}, {"weight", w.to_string()}}; }
inline Weight weight_from_json(const json& j) {
  return Weight::parse(AlgebraId::parse(j.at("algebra").get<std::string>()), j.at("weight").get<std::string>());
}

inline Chirality chirality_from_string(const std::string& s) {
  if (s == "+") return Chirality::PLUS;
  if (s == "-") return Chirality::MINUS;
  require(s == "none", "unknown chirality '" + s + "'");
  return Chirality::NONE;
}

/// factor1, dim1, factor2, dim2, ... plus multiplicity, chirality and the
/// summand dimension.
inline json to_json(const Summand& s) {
  json j = {{"label", s.label()},
            {"multiplicity", big_to_json(s.multiplicity)},
            {"chirality", to_string(s.chirality)},
            {"dimension", big_to_json(s.dimension())}};
  for (std::size_t i = 0; i < s.factors.size(); ++i) {
    j["factor" + std::to_string(i + 1)] = s.factors[i].to_string();
    j["dim" + std::to_string(i + 1)] = big_to_json(s.dims.at(i));
  }
  return j;
}

inline Summand summand_from_json(const json& j, const ProductAlgebra& alg) {
  Summand s;
  for (std::size_t i = 0; i < alg.factors.size(); ++i) {
    const std::string n = std::to_string(i + 1);
    s.factors.push_back(Weight::parse(alg.factors[i], j.at("factor" + n).get<std::string>()));
    s.dims.push_back(big_from_json(j.at("dim" + n)));
  }
  s.multiplicity = big_from_json(j.at("multiplicity"));
  s.chirality = chirality_from_string(j.at("chirality").get<std::string>());
  return s;
}

inline json to_json(const Decomposition& d) {
  json alg = json::array(), summands = json::array();
  for (const auto& a : d.algebra.factors) alg.push_back(a.name());
  for (const auto& s : d.summands) summands.push_back(to_json(s));
  return {{"algebra", alg},
          {"summands", summands},
          {"total", big_to_json(d.total_dim())},
          {"total_plus", big_to_json(d.total_dim(Chirality::PLUS))},
          {"total_minus", big_to_json(d.total_dim(Chirality::MINUS))}};
}

inline Decomposition decomposition_from_json(const json& j) {
  Decomposition d;
  for (const auto& a : j.at("algebra")) d.algebra.factors.push_back(AlgebraId::parse(a.get<std::string>()));
  for (const auto& s : j.at("summands")) d.summands.push_back(summand_from_json(s, d.algebra));
  return d;
}

inline json to_json(const SpectrumEntry& e) {
  json w = json::array();
  for (const auto& x : e.witnesses) {
    w.push_back({{"mu", to_json(x.mu)}, {"lambda_prime", to_json(x.lambda_prime)}, {"two_kappa", to_json(x.two_kappa)}});
  }
  return {{"lambda", to_json(e.lambda)},
          {"casimir_eucl", big_to_json(e.casimir_eucl)},
          {"casimir_b", rational_to_json(e.casimir_b)},
          {"eigenvalue_sq", rational_to_json(e.eigenvalue_sq)},
          {"witnesses", w}};
}

inline SpectrumEntry spectrum_entry_from_json(const json& j) {
  SpectrumEntry e;
  e.lambda = partition_from_json(j.at("lambda"));
  e.casimir_eucl = big_from_json(j.at("casimir_eucl"));
  e.casimir_b = rational_from_json(j.at("casimir_b"));
  e.eigenvalue_sq = rational_from_json(j.at("eigenvalue_sq"));
  for (const auto& x : j.at("witnesses")) {
    e.witnesses.push_back({partition_from_json(x.at("mu")), partition_from_json(x.at("lambda_prime")),
                           partition_from_json(x.at("two_kappa"))});
  }
  return e;
}

inline json to_json(const IdentityReport& r) {
  return {{"name", r.name},
          {"parameters", r.parameters},
          {"lhs", big_to_json(r.lhs)},
          {"rhs", big_to_json(r.rhs)},
          {"pass", r.pass}};
}

inline IdentityReport identity_report_from_json(const json& j) {
  IdentityReport r;
  r.name = j.at("name").get<std::string>();
  r.parameters = j.at("parameters").get<std::string>();
  r.lhs = big_from_json(j.at("lhs"));
  r.rhs = big_from_json(j.at("rhs"));
  r.pass = j.at("pass").get<bool>();
  return r;
}

}  // namespace spingrass
