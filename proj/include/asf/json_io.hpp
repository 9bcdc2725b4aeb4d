#pragma once

#include <string>

#include <json.hpp>

#include "asf/domain.hpp"

namespace asf {

using nlohmann::json;

namespace detail {

inline int int_from_string(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument(what + ": not an integer: '" + s + "'");
  }
  require(pos == s.size(), what + ": trailing characters in '" + s + "'");
  return v;
}

}  // namespace detail

inline Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(Int(j.get<long long>()));
  require(j.is_string(), "expected a rational as a string or integer");
  return rat_parse(j.get<std::string>());
}

/// {"e": {"<root index>": "p/q", ...}, "h": {"<cartan index>": "p/q", ...}};
/// both keys always present.
inline json lie_to_json(const LieElt& x) {
  json e = json::object();
  json h = json::object();
  for (const auto& [k, c] : x.terms()) {
    if (k >= 0)
      e[std::to_string(k)] = rat_str(c);
    else
      h[std::to_string(-1 - k)] = rat_str(c);
  }
  return json{{"e", e}, {"h", h}};
}

inline LieElt lie_from_json(const RootSystem& rs, const json& j) {
  require(j.is_object(), "LieElt: expected a JSON object");
  for (const auto& [key, _] : j.items())
    require(key == "e" || key == "h", "LieElt: unknown key '" + key + "'");
  LieElt x;
  if (j.contains("e")) {
    require(j["e"].is_object(), "LieElt: 'e' must be an object");
    for (const auto& [key, val] : j["e"].items()) {
      int idx = detail::int_from_string(key, "LieElt root index");
      require(idx >= 0 && idx < rs.num_roots(),
              "LieElt: root index " + key + " out of range");
      x.add(idx, rat_from_json(val));
    }
  }
  if (j.contains("h")) {
    require(j["h"].is_object(), "LieElt: 'h' must be an object");
    for (const auto& [key, val] : j["h"].items()) {
      int idx = detail::int_from_string(key, "LieElt cartan index");
      require(idx >= 0 && idx < rs.rank(),
              "LieElt: cartan index " + key + " out of range");
      x.add(-1 - idx, rat_from_json(val));
    }
  }
  return x;
}

/// {"<exponent>": <LieElt>, ...}
inline json laurent_to_json(const LaurentLie& x) {
  json out = json::object();
  for (const auto& [k, c] : x.terms()) out[std::to_string(k)] = lie_to_json(c);
  return out;
}

inline LaurentLie laurent_from_json(const RootSystem& rs, const json& j) {
  require(j.is_object(), "LaurentLie: expected a JSON object");
  LaurentLie x;
  for (const auto& [key, val] : j.items())
    x.add(detail::int_from_string(key, "LaurentLie exponent"), lie_from_json(rs, val));
  return x;
}

inline json cartan_to_json(const CartanElt& h) {
  json out = json::array();
  for (const Rat& v : h.simple_values) out.push_back(rat_str(v));
  return out;
}

inline CartanElt cartan_from_json(const RootSystem& rs, const json& j) {
  require(j.is_array(), "h: expected an array of rationals");
  require(static_cast<int>(j.size()) == rs.rank(),
          "h: expected " + std::to_string(rs.rank()) + " entries");
  CartanElt h;
  for (const json& v : j) h.simple_values.push_back(rat_from_json(v));
  return h;
}

inline json eseq_to_json(const ESequence& s) {
  json terms = json::array();
  for (const LieElt& e : s.e_terms) terms.push_back(lie_to_json(e));
  return json{{"E_seq", terms}, {"h", cartan_to_json(s.h)}};
}

inline ESequence eseq_from_json(const RootSystem& rs, const json& j) {
  require(j.is_object() && j.contains("h") && j.contains("E_seq"),
          "ESequence: expected an object with 'h' and 'E_seq'");
  ESequence s{cartan_from_json(rs, j["h"]), {}};
  require(j["E_seq"].is_array(), "ESequence: 'E_seq' must be an array");
  for (const json& v : j["E_seq"]) s.e_terms.push_back(lie_from_json(rs, v));
  return s;
}

struct SolveInput {
  CartanElt h;
  LieElt e;
};

/// {type, h: [rationals], E: LieElt}; the type field must match rs.
inline SolveInput solve_input_from_json(const RootSystem& rs, const json& j) {
  require(j.is_object(), "solve input: expected a JSON object");
  require(j.contains("type") && j["type"].is_string(), "solve input: missing type string");
  require(j["type"].get<std::string>() == rs.type().str(),
          "solve input: type '" + j["type"].get<std::string>() + "' does not match " +
              rs.type().str());
  require(j.contains("h"), "solve input: missing h");
  require(j.contains("E"), "solve input: missing E");
  SolveInput in{cartan_from_json(rs, j["h"]), lie_from_json(rs, j["E"])};
  require(supported_in_n(in.e, rs.nu()), "solve input: E must be supported on positive roots");
  return in;
}

/// {E_seq: [LieElt], phi_inverse: LaurentLie, leading_term: LieElt,
///  omega_check: bool}
inline json solve_output_to_json(const StructureTable& st, const SolveInput& in) {
  ESequence seq = solve_incremental(st, in.h, in.e);
  LaurentLie phi = principal_part(seq);
  json terms = json::array();
  for (const LieElt& e : seq.e_terms) terms.push_back(lie_to_json(e));
  return json{{"E_seq", terms},
              {"leading_term", lie_to_json(leading_term(st, in.h, in.e))},
              {"omega_check", verify_omega(st, in.h, phi)},
              {"phi_inverse", laurent_to_json(phi)}};
}

}  // namespace asf
