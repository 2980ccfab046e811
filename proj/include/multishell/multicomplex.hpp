#pragma once

// Multicomplexes in (N ∪ {inf})^n, represented by their maximal facets, and
// the correspondence with monomial ideals. A face is any point below some
// maximal facet; a facet is a face whose infinite part agrees with that of
// every maximal facet above it.

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "multishell/core.hpp"
#include "multishell/decomposition.hpp"

namespace multishell {

inline std::vector<std::size_t> infinite_part(const face& a) {
  std::vector<std::size_t> ip;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].is_infinite()) ip.push_back(i);
  return ip;
}

// P_a: the variables outside the infinite part.
inline monomial_prime face_prime(const face& a) {
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].is_finite()) vars.push_back(i);
  return {a.size(), std::move(vars)};
}

// Replaces every infinity by 0.
inline exponent flatten(const face& a) {
  exponent e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) e[i] = a[i].is_infinite() ? 0 : a[i].value();
  return e;
}

class multicomplex {
 public:
  multicomplex() = default;

  // Normalizes to the maximal antichain; dominated faces are dropped.
  multicomplex(std::size_t n, std::vector<face> faces) : n_(n) {
    if (faces.empty()) throw error("a multicomplex needs at least one maximal facet");
    for (const auto& f : faces)
      if (f.size() != n) throw dimension_mismatch(n, f.size());
    maximal_ = maximal_antichain(std::move(faces));
  }

  std::size_t nvars() const { return n_; }
  const std::vector<face>& maximal_facets() const { return maximal_; }

  bool contains(const face& a) const {
    return std::any_of(maximal_.begin(), maximal_.end(), [&](const face& m) { return leq(a, m); });
  }
  bool contains(const exponent& a) const {
    return std::any_of(maximal_.begin(), maximal_.end(), [&](const face& m) { return leq(a, m); });
  }

  // Per-coordinate maximum finite entry over the maximal facets.
  exponent finite_bound() const {
    exponent b(n_);
    for (const auto& m : maximal_)
      for (std::size_t i = 0; i < n_; ++i)
        if (m[i].is_finite()) b[i] = std::max(b[i], m[i].value());
    return b;
  }

  friend bool operator==(const multicomplex&, const multicomplex&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<face> maximal_;
};

// The irreducible ideal (x_j^{m(j)+1} : m(j) < inf) of the faces below m.
inline monomial_ideal ideal_of_face(const face& m) {
  std::vector<exponent> g;
  for (std::size_t j = 0; j < m.size(); ++j)
    if (m[j].is_finite()) g.push_back(unit_vector(m.size(), j, m[j].value() + 1));
  return {m.size(), std::move(g)};
}

inline monomial_ideal ideal_from_multicomplex(const multicomplex& gamma) {
  monomial_ideal r = monomial_ideal::unit(gamma.nvars());
  for (const auto& m : gamma.maximal_facets()) r = intersection(r, ideal_of_face(m));
  return r;
}

// The face an irreducible ideal cuts out: e_j - 1 on the variables with a
// pure power generator x_j^{e_j}, infinity elsewhere.
inline face face_of_irreducible(const monomial_ideal& q) {
  face m(q.nvars());
  for (std::size_t j = 0; j < q.nvars(); ++j) m[j] = inf;
  for (const auto& g : q.generators()) {
    auto v = pure_power_var(g);
    if (!v) throw error("face_of_irreducible: ideal is not irreducible");
    m[*v] = ext_exp(g[*v] - 1);
  }
  return m;
}

inline multicomplex multicomplex_from_ideal(const monomial_ideal& ideal) {
  if (ideal.is_unit()) throw improper_ideal("unit ideal has the empty multicomplex");
  const std::size_t n = ideal.nvars();
  if (ideal.is_zero()) return {n, {face_of_irreducible(ideal)}};
  std::vector<face> faces;
  for (const auto& q : irreducible_decomposition(ideal)) faces.push_back(face_of_irreducible(q));
  return {n, std::move(faces)};
}

// Γ1 ∩ Γ2: the maximal elements of the pairwise componentwise minima.
inline multicomplex intersect(const multicomplex& a, const multicomplex& b) {
  if (a.nvars() != b.nvars()) throw dimension_mismatch(a.nvars(), b.nvars());
  std::vector<face> mins;
  for (const auto& u : a.maximal_facets())
    for (const auto& v : b.maximal_facets()) mins.push_back(componentwise_min(u, v));
  return {a.nvars(), std::move(mins)};
}

// ---------------------------------------------------------------------------
// facets

inline bool is_facet(const multicomplex& gamma, const face& a) {
  bool below_some = false;
  const auto ip = infinite_part(a);
  for (const auto& m : gamma.maximal_facets()) {
    if (!leq(a, m)) continue;
    below_some = true;
    if (infinite_part(m) != ip) return false;
  }
  return below_some;
}

struct facet_set {
  std::vector<face> facets;  // canonical lex order, infinity greatest
  std::map<monomial_prime, std::vector<face>> by_prime;
};

inline facet_set enumerate_facets(const multicomplex& gamma) {
  const std::size_t n = gamma.nvars();
  std::map<std::vector<std::size_t>, exponent> boxes;
  for (const auto& m : gamma.maximal_facets()) {
    auto ip = infinite_part(m);
    auto [it, fresh] = boxes.try_emplace(ip, exponent(n));
    for (std::size_t k = 0; k < n; ++k)
      if (m[k].is_finite()) it->second[k] = std::max(it->second[k], m[k].value());
  }

  facet_set out;
  for (const auto& [ip, bound] : boxes) {
    for_each_in_box(bound, [&](const exponent& e) {
      face a(e);
      for (auto k : ip) a[k] = inf;
      if (is_facet(gamma, a)) out.facets.push_back(std::move(a));
    });
  }
  std::sort(out.facets.begin(), out.facets.end());
  for (const auto& f : out.facets) out.by_prime[face_prime(f)].push_back(f);
  return out;
}

// u is a facet iff (I(Γ) : x^ũ), with the variables of ip(u) inverted, is
// primary to P_u.
inline bool facet_test_algebraic(const multicomplex& gamma, const face& u) {
  if (!gamma.contains(u)) throw error("facet_test_algebraic: not a face of the multicomplex");
  const auto ip = infinite_part(u);
  const auto local = substitute_ones(colon_monomial(ideal_from_multicomplex(gamma), flatten(u)), ip);
  if (local.is_unit()) return false;
  std::vector<bool> has_pure(gamma.nvars(), false);
  for (const auto& g : local.generators())
    if (auto v = pure_power_var(g)) has_pure[*v] = true;
  for (std::size_t k = 0; k < gamma.nvars(); ++k) {
    if (std::binary_search(ip.begin(), ip.end(), k)) continue;
    if (!has_pure[k]) return false;
  }
  return true;
}

// Facet count per prime; the total is the arithmetic degree of S/I(Γ).
struct arithmetic_degree {
  std::map<monomial_prime, std::size_t> by_prime;
  std::size_t total = 0;
};

inline arithmetic_degree arithmetic_degree_report(const multicomplex& gamma) {
  arithmetic_degree out;
  for (const auto& [p, fs] : enumerate_facets(gamma).by_prime) {
    out.by_prime[p] = fs.size();
    out.total += fs.size();
  }
  return out;
}

}  // namespace multishell
