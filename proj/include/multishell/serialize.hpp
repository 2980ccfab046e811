#pragma once

// JSON documents. Every input document carries a "kind" discriminator:
//
//   {"kind": "ideal",        "n": 2, "generators": ["x1^2", "x1*x2"]}
//   {"kind": "multicomplex", "n": 2, "faces": [[0, "inf"], [2, 0]]}
//   {"kind": "simplicial",   "n": 3, "facets": [[1, 2], [2, 3]]}
//   {"kind": "filtration",   "n": 2, "base": ["x1^2", "x1*x2"],
//    "steps": [{"before": [...], "witness": "x1", "prime": [1, 2], "shift": [1, 0]}, ...]}
//
// Variables and vertices are 1-based; "inf" is the only infinity literal.

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "multishell/core.hpp"
#include "multishell/filtration.hpp"
#include "multishell/io.hpp"
#include "multishell/multicomplex.hpp"

namespace multishell {

using json = nlohmann::ordered_json;

class schema_error : public error {
 public:
  using error::error;
};

// ---------------------------------------------------------------------------
// writers

inline json to_json(const ext_exp& e) {
  if (e.is_infinite()) return "inf";
  return e.value();
}

inline json to_json(const face& a) {
  json j = json::array();
  for (const auto& e : a) j.push_back(to_json(e));
  return j;
}

inline json to_json(const std::vector<face>& faces) {
  json j = json::array();
  for (const auto& f : faces) j.push_back(to_json(f));
  return j;
}

inline json exponent_json(const exponent& e) { return json(e.coords()); }

inline json to_json(const monomial_prime& p) {
  json j = json::array();
  for (auto v : p.vars()) j.push_back(v + 1);
  return j;
}

inline json generators_json(const monomial_ideal& ideal) {
  json j = json::array();
  for (const auto& g : ideal.generators()) j.push_back(to_string(g));
  return j;
}

inline json ideal_document(const monomial_ideal& ideal) {
  return {{"kind", "ideal"}, {"n", ideal.nvars()}, {"generators", generators_json(ideal)}};
}

inline json multicomplex_document(const multicomplex& gamma) {
  return {{"kind", "multicomplex"}, {"n", gamma.nvars()}, {"faces", to_json(gamma.maximal_facets())}};
}

inline json to_json(const filtration_step& st) {
  return {{"before", generators_json(st.before)},
          {"witness", to_string(st.witness)},
          {"prime", to_json(st.prime)},
          {"shift", exponent_json(st.shift)}};
}

inline json filtration_document(const prime_filtration& f) {
  json steps = json::array();
  for (const auto& st : f.steps) steps.push_back(to_json(st));
  return {{"kind", "filtration"}, {"n", f.base.nvars()}, {"base", generators_json(f.base)}, {"steps", steps}};
}

// ---------------------------------------------------------------------------
// readers

namespace detail {

inline std::size_t read_n(const json& doc) {
  if (!doc.contains("n")) throw schema_error("document lacks \"n\"");
  if (!doc["n"].is_number_unsigned()) throw schema_error("\"n\" must be a non-negative integer");
  return doc["n"].get<std::size_t>();
}

inline ext_exp read_ext(const json& v) {
  if (v.is_string()) {
    if (v.get<std::string>() != "inf") throw schema_error("the only string entry allowed in a face is \"inf\"");
    return inf;
  }
  if (v.is_number_unsigned()) {
    auto x = v.get<std::uint64_t>();
    if (x > 0xFFFFFFFFull) throw schema_error("face entry too large");
    return ext_exp(static_cast<ext_exp::value_type>(x));
  }
  if (v.is_number_integer()) throw schema_error("negative entry in a face");
  throw schema_error("face entries must be naturals or \"inf\"");
}

inline monomial_ideal read_generators(const json& arr, std::size_t n) {
  if (!arr.is_array()) throw schema_error("generators must be an array of monomial strings");
  std::vector<exponent> gens;
  for (const auto& g : arr) {
    if (!g.is_string()) throw schema_error("generators must be monomial strings");
    gens.push_back(parse_monomial(g.get<std::string>(), n));
  }
  return {n, std::move(gens)};
}

}  // namespace detail

inline face face_from_json(const json& row) {
  if (!row.is_array()) throw schema_error("a face must be an array");
  std::vector<ext_exp> v;
  for (const auto& e : row) v.push_back(detail::read_ext(e));
  return face(std::move(v));
}

inline std::vector<face> faces_from_json(const json& arr, std::optional<std::size_t> n = std::nullopt) {
  if (!arr.is_array()) throw schema_error("expected an array of faces");
  std::vector<face> faces;
  for (const auto& row : arr) {
    faces.push_back(face_from_json(row));
    const std::size_t len = faces.back().size();
    if (!n) n = len;
    if (len != *n) throw schema_error("ragged face list: rows of length " + std::to_string(*n) + " and " +
                                      std::to_string(len));
  }
  return faces;
}

// Accepts either a bare array of faces or a multicomplex document.
inline multicomplex parse_multicomplex(const json& j) {
  if (j.is_array()) {
    auto faces = faces_from_json(j);
    if (faces.empty()) throw schema_error("a multicomplex needs at least one face");
    const std::size_t n = faces.front().size();
    return {n, std::move(faces)};
  }
  if (!j.is_object() || j.value("kind", "") != "multicomplex") throw schema_error("expected a multicomplex document");
  const std::size_t n = detail::read_n(j);
  if (!j.contains("faces")) throw schema_error("multicomplex document lacks \"faces\"");
  auto faces = faces_from_json(j["faces"], n);
  if (faces.empty()) throw schema_error("a multicomplex needs at least one face");
  return {n, std::move(faces)};
}

inline multicomplex parse_multicomplex(const std::string& text) { return parse_multicomplex(json::parse(text)); }

inline monomial_ideal ideal_from_document(const json& j) {
  if (j.value("kind", "") != "ideal") throw schema_error("expected an ideal document");
  const std::size_t n = detail::read_n(j);
  if (!j.contains("generators")) throw schema_error("ideal document lacks \"generators\"");
  return detail::read_generators(j["generators"], n);
}

inline std::vector<vertex_set> vertex_sets_from_json(const json& arr, std::size_t n) {
  if (!arr.is_array()) throw schema_error("expected an array of vertex sets");
  std::vector<vertex_set> out;
  for (const auto& f : arr) {
    if (!f.is_array()) throw schema_error("a vertex set must be an array");
    vertex_set s;
    for (const auto& v : f) {
      if (!v.is_number_unsigned() || v.get<std::size_t>() == 0 || v.get<std::size_t>() > n)
        throw schema_error("vertices must be integers in 1.." + std::to_string(n));
      s.push_back(v.get<std::size_t>() - 1);
    }
    std::sort(s.begin(), s.end());
    out.push_back(std::move(s));
  }
  return out;
}

struct simplicial_document {
  std::size_t n;
  std::vector<vertex_set> facets;
};

inline simplicial_document simplicial_from_document(const json& j) {
  if (j.value("kind", "") != "simplicial") throw schema_error("expected a simplicial document");
  const std::size_t n = detail::read_n(j);
  if (!j.contains("facets")) throw schema_error("simplicial document lacks \"facets\"");
  return {n, vertex_sets_from_json(j["facets"], n)};
}

inline prime_filtration filtration_from_document(const json& j) {
  if (j.value("kind", "") != "filtration") throw schema_error("expected a filtration document");
  const std::size_t n = detail::read_n(j);
  if (!j.contains("base") || !j.contains("steps")) throw schema_error("filtration document needs base and steps");
  prime_filtration f;
  f.base = detail::read_generators(j["base"], n);
  for (const auto& s : j["steps"]) {
    if (!s.is_object()) throw schema_error("filtration steps must be objects");
    for (const char* key : {"before", "witness", "prime", "shift"})
      if (!s.contains(key)) throw schema_error(std::string("filtration step lacks \"") + key + "\"");
    filtration_step st;
    st.before = detail::read_generators(s["before"], n);
    if (!s["witness"].is_string()) throw schema_error("witness must be a monomial string");
    st.witness = parse_monomial(s["witness"].get<std::string>(), n);
    std::vector<std::size_t> vars;
    for (const auto& v : s["prime"]) {
      if (!v.is_number_unsigned() || v.get<std::size_t>() == 0 || v.get<std::size_t>() > n)
        throw schema_error("prime variables must be integers in 1.." + std::to_string(n));
      vars.push_back(v.get<std::size_t>() - 1);
    }
    st.prime = monomial_prime(n, std::move(vars));
    if (!s["shift"].is_array() || s["shift"].size() != n) throw schema_error("shift must be an exponent vector");
    std::vector<exponent::value_type> shift;
    for (const auto& v : s["shift"]) {
      if (!v.is_number_unsigned()) throw schema_error("shift entries must be naturals");
      shift.push_back(v.get<exponent::value_type>());
    }
    st.shift = exponent(std::move(shift));
    f.steps.push_back(std::move(st));
  }
  return f;
}

}  // namespace multishell
