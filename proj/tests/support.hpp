#pragma once

// Test-side oracles. These work from membership tests on explicit boxes of
// exponents and never call the library's colon, decomposition or facet code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "multishell/multishell.hpp"

namespace oracle {

using namespace multishell;

// ---------------------------------------------------------------------------
// generators

// Random proper nonzero ideal with 1..max_gens generators, entries 0..max_exp.
inline monomial_ideal random_ideal(std::mt19937& rng, std::size_t n, std::uint32_t max_exp, std::size_t max_gens) {
  std::uniform_int_distribution<std::uint32_t> e(0, max_exp);
  std::uniform_int_distribution<std::size_t> k(1, max_gens);
  const std::size_t count = k(rng);
  std::vector<exponent> gens;
  while (gens.size() < count) {
    exponent g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = e(rng);
    if (!g.is_zero()) gens.push_back(g);
  }
  return {n, gens};
}

inline monomial_ideal random_ideal(std::mt19937& rng, std::size_t max_n, std::uint32_t max_exp) {
  std::uniform_int_distribution<std::size_t> nd(1, max_n);
  return random_ideal(rng, nd(rng), max_exp, 4);
}

// Intersection of 1..max_comps random irreducible ideals (x_j^{e_j} : j in A)
// with nonempty A and 1 <= e_j <= max_exp.
inline monomial_ideal random_irreducible_intersection(std::mt19937& rng, std::size_t n, std::uint32_t max_exp,
                                                      std::size_t max_comps) {
  std::uniform_int_distribution<std::uint32_t> e(1, max_exp);
  std::uniform_int_distribution<std::size_t> k(1, max_comps);
  std::bernoulli_distribution pick(0.5);
  monomial_ideal out = monomial_ideal::unit(n);
  const std::size_t count = k(rng);
  for (std::size_t c = 0; c < count; ++c) {
    std::vector<exponent> gens;
    while (gens.empty())
      for (std::size_t j = 0; j < n; ++j)
        if (pick(rng)) gens.push_back(unit_vector(n, j, e(rng)));
    out = intersection(out, monomial_ideal(n, gens));
  }
  return out;
}

// Mixed corpus source: random generator sets in three or four variables,
// random component intersections in four, and squarefree ones (where most of the
// non-shellable small cases live).
inline monomial_ideal random_corpus_ideal(std::mt19937& rng, std::uint32_t max_exp) {
  std::uniform_int_distribution<std::size_t> nd(3, 4);
  const std::size_t n = nd(rng);
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0:
      return random_ideal(rng, n, max_exp, 6);
    case 1:
      return random_irreducible_intersection(rng, 4, max_exp, 4);
    default:
      return random_irreducible_intersection(rng, 4, 1, 4);
  }
}

// Random multicomplex from random faces with entries in 0..max_exp or inf.
inline multicomplex random_multicomplex(std::mt19937& rng, std::size_t n, std::uint32_t max_exp, std::size_t max_faces) {
  std::uniform_int_distribution<std::uint32_t> e(0, max_exp + 1);
  std::uniform_int_distribution<std::size_t> k(1, max_faces);
  std::vector<face> faces;
  const std::size_t count = k(rng);
  for (std::size_t j = 0; j < count; ++j) {
    std::vector<ext_exp> v;
    for (std::size_t i = 0; i < n; ++i) {
      auto x = e(rng);
      v.push_back(x > max_exp ? inf : ext_exp(x));
    }
    faces.emplace_back(std::move(v));
  }
  return {n, faces};
}

// ---------------------------------------------------------------------------
// membership primitives

inline bool member(const monomial_ideal& ideal, const exponent& b) {
  for (const auto& g : ideal.generators()) {
    bool div = true;
    for (std::size_t i = 0; i < b.size(); ++i)
      if (g[i] > b[i]) div = false;
    if (div) return true;
  }
  return false;
}

// Largest exponent per variable, plus one: membership is constant beyond it.
inline exponent horizon(const monomial_ideal& ideal) {
  exponent h(ideal.nvars());
  for (const auto& g : ideal.generators())
    for (std::size_t i = 0; i < h.size(); ++i) h[i] = std::max(h[i], g[i]);
  for (std::size_t i = 0; i < h.size(); ++i) h[i] += 1;
  return h;
}

inline std::vector<exponent> box_points(const exponent& bound) {
  std::vector<exponent> out;
  const std::size_t n = bound.size();
  exponent e(n);
  while (true) {
    out.push_back(e);
    std::size_t i = 0;
    while (i < n && e[i] == bound[i]) e[i++] = 0;
    if (i == n) break;
    ++e[i];
  }
  return out;
}

// Ideals agree iff they agree on every point of a common horizon box.
inline bool same_ideal_on_box(const monomial_ideal& a, const monomial_ideal& b) {
  exponent h = horizon(a), hb = horizon(b);
  for (std::size_t i = 0; i < h.size(); ++i) h[i] = std::max(h[i], hb[i]);
  for (const auto& p : box_points(h))
    if (member(a, p) != member(b, p)) return false;
  return true;
}

inline bool is_antichain(const monomial_ideal& ideal) {
  const auto& g = ideal.generators();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (i != j && g[i].divides(g[j])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// associated primes: P = (I : x^b) exactly, tested by membership only

inline bool colon_is_prime(const monomial_ideal& ideal, const exponent& b, const std::vector<std::size_t>& p) {
  const std::size_t n = b.size();
  if (member(ideal, b)) return false;
  for (auto j : p) {
    exponent c = b;
    c[j] += 1;
    if (!member(ideal, c)) return false;
  }
  // nothing supported off P may enter the colon
  const auto h = horizon(ideal);
  exponent far = b;
  for (std::size_t k = 0; k < n; ++k)
    if (std::find(p.begin(), p.end(), k) == p.end()) far[k] += h[k];
  return !member(ideal, far);
}

inline std::vector<std::vector<std::size_t>> all_subsets(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    out.push_back(s);
  }
  return out;
}

inline std::set<std::vector<std::size_t>> brute_ass(const monomial_ideal& ideal) {
  std::set<std::vector<std::size_t>> out;
  const auto pts = box_points(horizon(ideal));
  for (const auto& p : all_subsets(ideal.nvars()))
    for (const auto& b : pts)
      if (colon_is_prime(ideal, b, p)) {
        out.insert(p);
        break;
      }
  return out;
}

// ---------------------------------------------------------------------------
// H^0 count per prime: monomials m in the variables of P, not in the
// localization I_P, such that (I_P : m) contains a power of every x_j in P.

inline std::map<std::vector<std::size_t>, std::size_t> brute_h0_counts(const monomial_ideal& ideal) {
  std::map<std::vector<std::size_t>, std::size_t> out;
  const std::size_t n = ideal.nvars();
  const auto h = horizon(ideal);
  for (const auto& p : brute_ass(ideal)) {
    // localized generators: exponents outside P set to zero
    std::vector<exponent> loc;
    for (const auto& g : ideal.generators()) {
      exponent l(n);
      for (auto j : p) l[j] = g[j];
      loc.push_back(l);
    }
    monomial_ideal ip(n, loc);
    exponent bound(n);
    for (auto j : p) bound[j] = h[j];
    std::size_t count = 0;
    for (const auto& m : box_points(bound)) {
      if (member(ip, m)) continue;
      bool primary = true;
      for (auto j : p) {
        exponent c = m;
        c[j] += h[j];
        if (!member(ip, c)) primary = false;
      }
      if (primary) ++count;
    }
    if (count) out[p] = count;
  }
  return out;
}

// ---------------------------------------------------------------------------
// multicomplex oracles

// Truncated Γ: the points of Γ with every coordinate <= cap.
inline std::set<exponent> truncated_points(const multicomplex& gamma, const exponent& cap) {
  std::set<exponent> out;
  for (const auto& p : box_points(cap))
    if (gamma.contains(p)) out.insert(p);
  return out;
}

// Facets by the definition: a face a with ip a = ip m for every maximal m >= a.
// Candidates are faces whose finite coordinates stay below the finite bound.
inline std::set<face> brute_facets(const multicomplex& gamma) {
  const std::size_t n = gamma.nvars();
  const auto bound = gamma.finite_bound();
  std::set<face> out;
  for (const auto& ipset : all_subsets(n)) {
    exponent cap(n);
    for (std::size_t i = 0; i < n; ++i) cap[i] = bound[i];
    for (const auto& p : box_points(cap)) {
      std::vector<ext_exp> v;
      for (std::size_t i = 0; i < n; ++i)
        v.push_back(std::find(ipset.begin(), ipset.end(), i) != ipset.end() ? inf : ext_exp(p[i]));
      face a(v);
      // skip duplicates generated by nonzero values on infinite coordinates
      bool canonical = true;
      for (auto i : ipset)
        if (p[i] != 0) canonical = false;
      if (!canonical || !gamma.contains(a)) continue;
      bool facet = true;
      for (const auto& m : gamma.maximal_facets())
        if (leq(a, m) && infinite_part(a) != infinite_part(m)) facet = false;
      if (facet) out.insert(a);
    }
  }
  return out;
}

}  // namespace oracle

namespace oracle {

// S_i = Γ(a_i) \ Γ(a_1..a_{i-1}) truncated at B+1 is a Stanley set: a box
// whose free directions are exactly the coordinates where it reaches B+1,
// all of them infinite in a_i.
inline bool stanley_at(const multicomplex& gamma, const std::vector<face>& order, std::size_t i) {
  auto cap = gamma.finite_bound();
  for (std::size_t k = 0; k < cap.size(); ++k) cap[k] += 1;
  std::vector<exponent> pts;
  for (const auto& p : box_points(cap)) {
    if (!leq(p, order[i])) continue;
    bool covered = false;
    for (std::size_t j = 0; j < i; ++j)
      if (leq(p, order[j])) covered = true;
    if (!covered) pts.push_back(p);
  }
  if (pts.empty()) return false;
  exponent lo = pts.front(), hi = pts.front();
  for (const auto& p : pts)
    for (std::size_t k = 0; k < p.size(); ++k) {
      lo[k] = std::min(lo[k], p[k]);
      hi[k] = std::max(hi[k], p[k]);
    }
  std::size_t volume = 1;
  for (std::size_t k = 0; k < lo.size(); ++k) {
    if (lo[k] == hi[k]) continue;
    if (hi[k] != cap[k] || !order[i][k].is_infinite()) return false;
    volume *= hi[k] - lo[k] + 1;
  }
  return volume == pts.size();
}

inline bool ip_condition(const std::vector<face>& order) {
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      const auto a = infinite_part(order[j]), b = infinite_part(order[i]);
      if (a != b && std::includes(b.begin(), b.end(), a.begin(), a.end())) return false;
    }
  return true;
}

// Shellable by brute force over all facet permutations.
inline bool brute_shellable(const multicomplex& gamma) {
  auto facets = enumerate_facets(gamma).facets;
  std::sort(facets.begin(), facets.end());
  do {
    bool ok = ip_condition(facets);
    for (std::size_t i = 0; ok && i < facets.size(); ++i) ok = stanley_at(gamma, facets, i);
    if (ok) return true;
  } while (std::next_permutation(facets.begin(), facets.end()));
  return false;
}

}  // namespace oracle

namespace multishell {

// gtest printers
inline void PrintTo(const exponent& e, std::ostream* os) { *os << exponent_vector_string(e); }
inline void PrintTo(const face& a, std::ostream* os) { *os << to_string(a); }
inline void PrintTo(const monomial_ideal& i, std::ostream* os) { *os << "(" << to_string(i) << ")"; }
inline void PrintTo(const monomial_prime& p, std::ostream* os) { *os << to_string(p); }

}  // namespace multishell
