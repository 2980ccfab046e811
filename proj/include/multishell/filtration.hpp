#pragma once

// Multigraded prime filtrations of S/I for monomial ideals I.
//
// A filtration is stored as the ascending chain of ideals
//   I = I_0 ⊂ I_1 ⊂ ... ⊂ I_r = S,   I_k = I_{k-1} + (x^{b_k}),
// so that I_k / I_{k-1} ≅ S/P_k(-b_k) with P_k = (I_{k-1} : x^{b_k}).

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "multishell/core.hpp"
#include "multishell/decomposition.hpp"
#include "multishell/multicomplex.hpp"
#include "multishell/shellability.hpp"

namespace multishell {

struct filtration_step {
  monomial_ideal before;
  exponent witness;
  monomial_prime prime;
  exponent shift;

  monomial_ideal after() const { return sum(before, witness); }
  friend bool operator==(const filtration_step&, const filtration_step&) = default;
};

struct filtration_flags {
  bool prime = false;
  bool clean = false;
  bool pretty_clean = false;
  bool almost_clean = false;
};

struct prime_filtration {
  monomial_ideal base;
  std::vector<filtration_step> steps;
  filtration_flags classification;

  std::size_t length() const { return steps.size(); }
};

struct primary_step {
  monomial_ideal before;
  exponent witness;
  monomial_ideal primary;  // (before : x^witness)
  monomial_prime prime;
};

struct primary_filtration {
  monomial_ideal base;
  std::vector<primary_step> steps;
};

// Ass and Min of S/I, with the zero ideal allowed (S itself has Ass = {0}).
inline std::pair<std::vector<monomial_prime>, std::vector<monomial_prime>> ass_and_min(const monomial_ideal& ideal) {
  if (ideal.is_zero()) {
    monomial_prime zero(ideal.nvars(), {});
    return {{zero}, {zero}};
  }
  auto rep = primary_decomposition(ideal);
  return {rep.ass, rep.min_primes};
}

namespace detail {

inline bool contains_prime(const std::vector<monomial_prime>& v, const monomial_prime& p) {
  return std::find(v.begin(), v.end(), p) != v.end();
}

inline bool pretty_clean_order(const std::vector<filtration_step>& steps) {
  for (std::size_t i = 0; i < steps.size(); ++i)
    for (std::size_t j = i + 1; j < steps.size(); ++j)
      if (steps[i].prime.subset_of(steps[j].prime) && steps[i].prime != steps[j].prime) return false;
  return true;
}

// Radical of a primary ideal, treating the zero ideal as primary to 0.
inline monomial_prime primary_radical(const monomial_ideal& q) {
  if (q.is_zero()) return {q.nvars(), {}};
  if (!is_primary(q)) throw error("ideal is not primary");
  return *is_prime(radical(q));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// verification

struct filtration_report {
  std::vector<std::string> violations;
  filtration_flags flags;
  std::size_t length = 0;
  std::optional<std::size_t> facet_count;  // |F(Γ(base))|, checked when pretty clean

  bool valid() const { return violations.empty(); }
};

inline filtration_report verify_filtration(const prime_filtration& f) {
  filtration_report rep;
  rep.length = f.steps.size();
  const std::size_t n = f.base.nvars();
  auto at = [](std::size_t i) { return "step " + std::to_string(i + 1) + ": "; };

  if (f.base.is_unit()) {
    rep.violations.push_back("base ideal is the unit ideal");
    return rep;
  }
  if (f.steps.empty()) rep.violations.push_back("filtration has no steps");

  bool chain_ok = true;
  monomial_ideal cur = f.base;
  for (std::size_t i = 0; i < f.steps.size(); ++i) {
    const auto& st = f.steps[i];
    if (st.before.nvars() != n || st.witness.size() != n || st.prime.nvars() != n || st.shift.size() != n) {
      rep.violations.push_back(at(i) + "ambient dimension mismatch");
      chain_ok = false;
      break;
    }
    if (st.before != cur) {
      rep.violations.push_back(at(i) + "ideal does not continue the chain");
      chain_ok = false;
    }
    if (st.before.contains(st.witness)) {
      rep.violations.push_back(at(i) + "witness already lies in the ideal");
      chain_ok = false;
    }
    if (colon_monomial(st.before, st.witness) != monomial_ideal::of(st.prime)) {
      rep.violations.push_back(at(i) + "colon ideal differs from the recorded prime");
      chain_ok = false;
    }
    if (st.shift != st.witness) rep.violations.push_back(at(i) + "shift differs from the witness degree");
    cur = sum(st.before, st.witness);
  }
  if (chain_ok && !f.steps.empty() && !cur.is_unit()) {
    rep.violations.push_back("chain does not reach the unit ideal");
    chain_ok = false;
  }
  rep.flags.prime = chain_ok && !f.steps.empty();
  if (!rep.flags.prime) return rep;

  const auto [ass, mins] = ass_and_min(f.base);
  std::vector<monomial_prime> supp;
  for (const auto& st : f.steps)
    if (!detail::contains_prime(supp, st.prime)) supp.push_back(st.prime);

  rep.flags.clean = std::all_of(supp.begin(), supp.end(), [&](const auto& p) { return detail::contains_prime(mins, p); });
  rep.flags.almost_clean =
      std::all_of(supp.begin(), supp.end(), [&](const auto& p) { return detail::contains_prime(ass, p); });
  rep.flags.pretty_clean = detail::pretty_clean_order(f.steps);

  for (const auto& p : ass)
    if (!detail::contains_prime(supp, p)) rep.violations.push_back("an associated prime is missing from Supp(F)");
  for (const auto& p : supp)
    if (std::none_of(mins.begin(), mins.end(), [&](const auto& q) { return q.subset_of(p); }))
      rep.violations.push_back("a prime of the filtration does not contain I");

  if (rep.flags.pretty_clean) {
    rep.facet_count = enumerate_facets(multicomplex_from_ideal(f.base)).facets.size();
    if (*rep.facet_count != rep.length)
      rep.violations.push_back("pretty clean filtration of length " + std::to_string(rep.length) +
                               " but the multicomplex has " + std::to_string(*rep.facet_count) + " facets");
  }
  return rep;
}

inline filtration_flags classify(const prime_filtration& f) { return verify_filtration(f).flags; }

// ---------------------------------------------------------------------------
// refinement of a primary quotient

// Refines the cyclic quotient (before + (x^shift)) / before ≅ S/Q(-shift),
// Q = (before : x^shift) primary, into quotients S/rad(Q). The standard
// monomials of Q are adjoined in decreasing total degree, lex descending on
// ties.
inline std::vector<filtration_step> refine_primary_to_clean(const monomial_ideal& q, const monomial_ideal& before,
                                                            const exponent& shift) {
  if (!q.is_zero() && (q.is_unit() || !is_primary(q))) throw error("refine_primary_to_clean: ideal is not primary");
  if (colon_monomial(before, shift) != q) throw error("refine_primary_to_clean: Q is not the colon at this position");
  const auto p = detail::primary_radical(q);
  const auto p_ideal = monomial_ideal::of(p);

  exponent bound = q.max_exponents();
  for (auto v : p.vars()) bound[v] -= 1;
  std::vector<exponent> basis;
  for_each_in_box(bound, [&](const exponent& b) {
    if (!q.contains(b)) basis.push_back(b);
  });
  std::sort(basis.begin(), basis.end(), [](const exponent& a, const exponent& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() > b.total_degree();
    return a > b;
  });

  std::vector<filtration_step> steps;
  monomial_ideal cur = before;
  for (const auto& b : basis) {
    exponent w = shift + b;
    if (colon_monomial(cur, w) != p_ideal) throw std::logic_error("refine_primary_to_clean: colon is not the radical");
    steps.push_back({cur, w, p, w});
    cur = sum(cur, w);
  }
  return steps;
}

inline std::vector<filtration_step> refine_primary_to_clean(const monomial_ideal& q) {
  return refine_primary_to_clean(q, q, exponent(q.nvars()));
}

// ---------------------------------------------------------------------------
// maximal shellings: f_i monomials and the primary filtration they induce

struct f_monomial_result {
  exponent t;                                      // f_i = x^t
  std::vector<std::pair<face, std::size_t>> table;  // (w, lambda), lambda 0-based
  std::vector<face> rejected;                      // w differing from u_i in != 1 coordinate
};

// For the maximal facets w of <u_1..u_{i-1}> ∩ <u_i> (i is a 0-based
// position), lambda is the unique coordinate with w(lambda) < u_i(lambda) and
// f_i multiplies x_lambda^{w(lambda)+1}. With diagnostic set, facets that
// differ in more than one coordinate are listed instead of raising.
inline f_monomial_result f_monomial(const std::vector<face>& order, std::size_t i, bool diagnostic = false) {
  if (i == 0 || i >= order.size()) throw error("f_monomial: position out of range");
  const face& u = order[i];
  std::vector<face> prefix(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(i));
  f_monomial_result out{exponent(u.size()), {}, {}};
  for (const auto& w : prefix_intersection(prefix, u)) {
    if (differing_coordinates(w, u) != 1) {
      if (!diagnostic) throw error("f_monomial: an intersection facet differs from u_i in more than one coordinate");
      out.rejected.push_back(w);
      continue;
    }
    std::size_t lambda = 0;
    while (w[lambda] == u[lambda]) ++lambda;
    out.table.emplace_back(w, lambda);
    out.t[lambda] += w[lambda].value() + 1;
  }
  return out;
}

inline f_monomial_result f_monomial(const multicomplex& gamma, const std::vector<face>& order, std::size_t split,
                                    std::size_t i, bool diagnostic = false) {
  detail::require_permutation(order, gamma.maximal_facets(), "maximal facets");
  if (i < split) throw error("f_monomial: position lies inside the primary prefix");
  return f_monomial(order, i, diagnostic);
}

namespace detail {
inline monomial_ideal prefix_ideal(const std::vector<face>& order, std::size_t count) {
  monomial_ideal r = monomial_ideal::unit(order.front().size());
  for (std::size_t j = 0; j < count; ++j) r = intersection(r, ideal_of_face(order[j]));
  return r;
}
}  // namespace detail

// ⋂_{j<i} I(Γ(u_j)) + I(Γ(u_i)) == I(Γ(u_i)) + (f_i)
inline bool verify_colon_identity(const multicomplex& gamma, const std::vector<face>& order, std::size_t i) {
  detail::require_permutation(order, gamma.maximal_facets(), "maximal facets");
  const auto f = f_monomial(order, i);
  const auto own = ideal_of_face(order[i]);
  return sum(detail::prefix_ideal(order, i), own) == sum(own, f.t);
}

// Chain I = M_r ⊂ M_{r-1} ⊂ ... ⊂ M_s ⊂ S with M_k = ⋂_{j<=k} I(Γ(u_j)).
// Steps are listed bottom-up; the last one is the primary ideal M_s itself.
inline primary_filtration build_maximal_shelling_filtration(const multicomplex& gamma, const std::vector<face>& order,
                                                            std::size_t split) {
  const auto verdict = check_maximal_shelling(gamma, order, split);
  if (!verdict.overall) throw error("order and split do not form a maximal shelling");
  const std::size_t r = order.size();

  primary_filtration out;
  out.base = ideal_from_multicomplex(gamma);
  for (std::size_t k = r; k > split; --k) {
    const auto before = detail::prefix_ideal(order, k);
    const auto t = f_monomial(order, k - 1).t;
    const auto j = colon_monomial(before, t);
    const auto p = face_prime(order[k - 1]);
    if (j != colon_monomial(ideal_of_face(order[k - 1]), t) || !is_irreducible(j) || *is_prime(radical(j)) != p)
      throw std::logic_error("maximal shelling step does not yield an irreducible primary quotient");
    if (sum(before, t) != detail::prefix_ideal(order, k - 1))
      throw std::logic_error("maximal shelling step does not reach the next chain member");
    out.steps.push_back({before, t, j, p});
  }
  const auto terminal = detail::prefix_ideal(order, split);
  out.steps.push_back({terminal, exponent(gamma.nvars()), terminal, detail::primary_radical(terminal)});
  return out;
}

inline prime_filtration refine_to_prime_filtration(const primary_filtration& pf) {
  prime_filtration out;
  out.base = pf.base;
  for (const auto& st : pf.steps) {
    auto refined = refine_primary_to_clean(st.primary, st.before, st.witness);
    out.steps.insert(out.steps.end(), refined.begin(), refined.end());
  }
  out.classification = classify(out);
  return out;
}

// ---------------------------------------------------------------------------
// pretty clean search

namespace detail {

class pretty_clean_search {
 public:
  pretty_clean_search(exponent box, std::uint64_t max_nodes) : max_nodes_(max_nodes) {
    for_each_in_box(box, [&](const exponent& b) { points_.push_back(b); });
    std::sort(points_.begin(), points_.end(), [](const exponent& a, const exponent& b) {
      if (a.total_degree() != b.total_degree()) return a.total_degree() > b.total_degree();
      return a > b;
    });
  }

  // Every pretty clean filtration of S/J uses each prime P exactly as often
  // as the facets of Γ(J) with prime P. After a step with prime P the counts
  // of the next quotient must therefore drop by one at P and nowhere else.
  bool run(const monomial_ideal& cur, std::vector<monomial_prime>& used, std::vector<filtration_step>& steps) {
    if (cur.is_unit()) return true;
    if (++nodes_ > max_nodes_) throw search_cap_exceeded("pretty clean search exceeded the node cap");
    if (dead_.count(cur.generators())) return false;
    const auto counts = prime_counts(cur);

    struct candidate {
      monomial_prime prime;
      exponent witness;
    };
    std::vector<candidate> cands;
    for (const auto& b : points_) {
      if (cur.contains(b)) continue;
      auto p = as_prime(colon_monomial(cur, b));
      if (!p || !counts.count(*p) || !admissible(*p, used)) continue;
      cands.push_back({*p, b});
    }
    std::stable_sort(cands.begin(), cands.end(),
                     [](const candidate& a, const candidate& b) { return prime_report_order(a.prime, b.prime); });

    for (const auto& c : cands) {
      auto next = sum(cur, c.witness);
      auto expect = counts;
      if (--expect[c.prime] == 0) expect.erase(c.prime);
      const auto got = next.is_unit() ? std::map<monomial_prime, std::size_t>{} : prime_counts(next);
      if (got != expect) continue;
      used.push_back(c.prime);
      bool later_ok = true;
      for (const auto& [q, k] : got)
        if (!admissible(q, used)) later_ok = false;
      if (later_ok) {
        steps.push_back({cur, c.witness, c.prime, c.witness});
        if (run(next, used, steps)) return true;
        steps.pop_back();
      }
      used.pop_back();
    }
    dead_.insert(cur.generators());
    return false;
  }

 private:
  static std::map<monomial_prime, std::size_t> prime_counts(const monomial_ideal& j) {
    return arithmetic_degree_report(multicomplex_from_ideal(j)).by_prime;
  }

  // A prime may not properly contain a prime used below it.
  static bool admissible(const monomial_prime& p, const std::vector<monomial_prime>& used) {
    return std::none_of(used.begin(), used.end(), [&](const monomial_prime& q) { return q != p && q.subset_of(p); });
  }

  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  std::vector<exponent> points_;
  std::set<std::vector<exponent>> dead_;
};

}  // namespace detail

// Per-variable witness bound B_k: the largest pure power exponent of x_k among
// the irreducible components. Membership in I does not change once a
// coordinate passes B_k, so a Stanley offset never needs more than B_k.
inline exponent pretty_clean_witness_box(const monomial_ideal& ideal) {
  exponent box(ideal.nvars());
  if (ideal.is_zero()) return box;
  for (const auto& q : irreducible_decomposition(ideal))
    for (const auto& g : q.generators()) {
      auto v = *pure_power_var(g);
      box[v] = std::max(box[v], g[v]);
    }
  return box;
}

// Backtracking search for a multigraded pretty clean filtration of S/I, with
// witnesses restricted to the box above.
inline std::optional<prime_filtration> find_pretty_clean_filtration(const monomial_ideal& ideal,
                                                                    std::uint64_t max_nodes = 50'000'000) {
  if (ideal.is_unit()) throw improper_ideal("unit ideal");
  detail::pretty_clean_search search(pretty_clean_witness_box(ideal), max_nodes);
  std::vector<filtration_step> steps;
  std::vector<monomial_prime> used;
  if (!search.run(ideal, used, steps)) return std::nullopt;
  prime_filtration out{ideal, std::move(steps), {}};
  out.classification = classify(out);
  return out;
}

// ---------------------------------------------------------------------------
// simplicial complexes

struct simplicial_filtration {
  prime_filtration filtration;
  // For the facet at each position of the shelling order: the number of
  // facets of <F_1..F_{i-1}> ∩ <F_i> (0 for the first), and the total degree
  // of the witness found for its quotient.
  std::vector<std::size_t> shelling_numbers;
  std::vector<std::uint64_t> shift_degrees;

  bool degrees_match() const {
    if (shelling_numbers.size() != shift_degrees.size()) return false;
    for (std::size_t i = 0; i < shelling_numbers.size(); ++i)
      if (shelling_numbers[i] != shift_degrees[i]) return false;
    return true;
  }
};

using vertex_set = std::vector<std::size_t>;

// Face of (N ∪ {inf})^n for a simplex: inf on its vertices, 0 elsewhere.
inline face simplex_face(std::size_t n, const vertex_set& f) {
  face a(n);
  for (auto v : f) {
    if (v >= n) throw error("vertex index out of range");
    a[v] = inf;
  }
  return a;
}

// P_F = (x_j : j not in F)
inline monomial_prime simplex_prime(std::size_t n, const vertex_set& f) { return face_prime(simplex_face(n, f)); }

inline simplicial_filtration simplicial_clean_filtration(std::size_t n, const std::vector<vertex_set>& facets,
                                                         const std::vector<vertex_set>& order) {
  auto normalize = [](std::vector<vertex_set> v) {
    for (auto& f : v) std::sort(f.begin(), f.end());
    std::sort(v.begin(), v.end());
    return v;
  };
  if (normalize(facets) != normalize(order)) throw invalid_order("order is not a permutation of the facets");

  std::vector<face> faces;
  for (const auto& f : order) faces.push_back(simplex_face(n, f));
  const multicomplex gamma(n, faces);
  if (gamma.maximal_facets().size() != faces.size()) throw error("facet list contains comparable simplices");
  if (!check_shelling_order(gamma, faces).overall) throw invalid_order("order is not a shelling of the complex");

  const std::size_t r = order.size();
  std::vector<monomial_prime> primes;
  for (const auto& f : order) primes.push_back(simplex_prime(n, f));
  auto chain = [&](std::size_t k) {  // ⋂_{j<k} P_j, k = count
    monomial_ideal m = monomial_ideal::unit(n);
    for (std::size_t j = 0; j < k; ++j) m = intersection(m, monomial_ideal::of(primes[j]));
    return m;
  };

  simplicial_filtration out;
  out.shelling_numbers.resize(r, 0);
  out.shift_degrees.resize(r, 0);
  for (std::size_t k = 1; k < r; ++k) {
    std::vector<face> prefix(faces.begin(), faces.begin() + static_cast<std::ptrdiff_t>(k));
    out.shelling_numbers[k] = prefix_intersection(prefix, faces[k]).size();
  }

  out.filtration.base = chain(r);
  exponent all_ones(n);
  for (std::size_t i = 0; i < n; ++i) all_ones[i] = 1;
  for (std::size_t k = r; k >= 1; --k) {
    const auto before = chain(k);
    const auto next = chain(k - 1);
    const auto target = monomial_ideal::of(primes[k - 1]);
    std::optional<exponent> witness;
    std::vector<exponent> candidates;
    for_each_in_box(all_ones, [&](const exponent& b) { candidates.push_back(b); });
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const exponent& a, const exponent& b) { return a.total_degree() < b.total_degree(); });
    for (const auto& b : candidates) {
      if (before.contains(b) || sum(before, b) != next || colon_monomial(before, b) != target) continue;
      witness = b;
      break;
    }
    if (!witness)
      throw error("no squarefree monomial generates quotient " + std::to_string(r - k + 1) + " of the filtration");
    out.filtration.steps.push_back({before, *witness, primes[k - 1], *witness});
    out.shift_degrees[k - 1] = witness->total_degree();
  }
  out.filtration.classification = classify(out.filtration);
  return out;
}

}  // namespace multishell
