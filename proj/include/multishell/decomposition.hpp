#pragma once

// Irreducible and irredundant primary decomposition of monomial ideals,
// associated primes by dimension, the dimension filtration and the
// sufficient criteria for pretty cleanness.

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "multishell/core.hpp"

namespace multishell {

struct primary_component {
  monomial_ideal ideal;
  monomial_prime prime;

  friend bool operator==(const primary_component&, const primary_component&) = default;
};

struct decomposition_report {
  std::vector<monomial_ideal> irreducible_components;
  // Sorted by descending height, ties lexicographic on the variable sets.
  std::vector<primary_component> primary_components;
  std::vector<monomial_prime> ass;
  std::vector<monomial_prime> min_primes;
  std::map<std::size_t, std::vector<monomial_prime>> ass_by_dim;
};

// Descending |J_P|, then lexicographic on the variable set.
inline bool prime_report_order(const monomial_prime& a, const monomial_prime& b) {
  if (a.height() != b.height()) return a.height() > b.height();
  return a.vars() < b.vars();
}

namespace detail {

inline void split_irreducible(const monomial_ideal& ideal, std::vector<monomial_ideal>& out) {
  // Generators are sorted lexicographically, so this finds the lex-first
  // generator that is not a pure power.
  for (const auto& g : ideal.generators()) {
    if (pure_power_var(g)) continue;
    std::size_t j = 0;
    while (g[j] == 0) ++j;
    exponent head = unit_vector(g.size(), j, g[j]);
    exponent rest = g;
    rest[j] = 0;
    split_irreducible(sum(ideal, head), out);
    split_irreducible(sum(ideal, rest), out);
    return;
  }
  out.push_back(ideal);
}

// Drops components until none is redundant. Containment pruning first, then
// a sweep that removes any component whose removal leaves the intersection
// unchanged.
template <typename T, typename Ideal>
std::vector<T> prune_redundant(std::size_t n, std::vector<T> comps, const monomial_ideal& target, Ideal ideal_of) {
  std::vector<T> kept;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < comps.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& a = ideal_of(comps[i]);
      const auto& b = ideal_of(comps[j]);
      // b ⊆ a makes a redundant; among equal ones keep the first.
      if (b.subset_of(a) && (!(a.subset_of(b)) || j < i)) redundant = true;
    }
    if (!redundant) kept.push_back(comps[i]);
  }
  for (std::size_t i = 0; i < kept.size();) {
    std::vector<monomial_ideal> others;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(ideal_of(kept[j]));
    if (kept.size() > 1 && intersection(n, others) == target) {
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  return kept;
}

}  // namespace detail

inline std::vector<monomial_ideal> irreducible_decomposition(const monomial_ideal& ideal) {
  detail::require_proper(ideal);
  std::vector<monomial_ideal> leaves;
  detail::split_irreducible(ideal, leaves);
  std::sort(leaves.begin(), leaves.end(), [](const monomial_ideal& a, const monomial_ideal& b) {
    return a.generators() < b.generators();
  });
  leaves.erase(std::unique(leaves.begin(), leaves.end()), leaves.end());
  return detail::prune_redundant(ideal.nvars(), std::move(leaves), ideal,
                                 [](const monomial_ideal& q) -> const monomial_ideal& { return q; });
}

inline decomposition_report primary_decomposition(const monomial_ideal& ideal) {
  const std::size_t n = ideal.nvars();
  decomposition_report rep;
  rep.irreducible_components = irreducible_decomposition(ideal);

  std::map<monomial_prime, monomial_ideal> grouped;
  for (const auto& q : rep.irreducible_components) {
    auto p = *is_prime(radical(q));
    auto it = grouped.find(p);
    if (it == grouped.end())
      grouped.emplace(p, q);
    else
      it->second = intersection(it->second, q);
  }
  std::vector<primary_component> comps;
  for (auto& [p, q] : grouped) comps.push_back({q, p});
  comps = detail::prune_redundant(n, std::move(comps), ideal,
                                  [](const primary_component& c) -> const monomial_ideal& { return c.ideal; });
  std::sort(comps.begin(), comps.end(), [](const primary_component& a, const primary_component& b) {
    return prime_report_order(a.prime, b.prime);
  });
  rep.primary_components = std::move(comps);

  for (const auto& c : rep.primary_components) {
    rep.ass.push_back(c.prime);
    rep.ass_by_dim[c.prime.dimension()].push_back(c.prime);
  }
  for (const auto& p : rep.ass) {
    bool minimal = std::none_of(rep.ass.begin(), rep.ass.end(),
                                [&](const monomial_prime& q) { return q != p && q.subset_of(p); });
    if (minimal) rep.min_primes.push_back(p);
  }
  return rep;
}

inline std::vector<monomial_prime> associated_primes(const monomial_ideal& ideal) {
  return primary_decomposition(ideal).ass;
}

// ---------------------------------------------------------------------------
// criteria

struct pret_level {
  std::size_t dimension;
  std::vector<std::size_t> var_union;  // ⋃ J_P over Ass^d
  std::size_t bound;                   // n - d + 1
  bool holds;
};

struct pret_report {
  bool holds = true;
  std::vector<pret_level> levels;  // descending dimension
};

// For every d > 0 with Ass^d nonempty: |⋃_{P ∈ Ass^d} J_P| <= n - d + 1.
inline pret_report pret_criterion(const monomial_ideal& ideal) {
  const auto rep = primary_decomposition(ideal);
  const std::size_t n = ideal.nvars();
  pret_report out;
  for (auto it = rep.ass_by_dim.rbegin(); it != rep.ass_by_dim.rend(); ++it) {
    const std::size_t d = it->first;
    if (d == 0) continue;
    std::set<std::size_t> u;
    for (const auto& p : it->second) u.insert(p.vars().begin(), p.vars().end());
    pret_level lvl{d, {u.begin(), u.end()}, n - d + 1, u.size() <= n - d + 1};
    out.holds = out.holds && lvl.holds;
    out.levels.push_back(std::move(lvl));
  }
  return out;
}

struct dimension_level {
  std::size_t dimension;
  monomial_ideal ideal;  // intersection of the components of larger dimension
};

// Levels ascend in dimension; the last level is always the unit ideal.
inline std::vector<dimension_level> dimension_filtration(const monomial_ideal& ideal) {
  const auto rep = primary_decomposition(ideal);
  std::vector<dimension_level> out;
  for (const auto& [d, primes] : rep.ass_by_dim) {
    std::vector<monomial_ideal> above;
    for (const auto& c : rep.primary_components)
      if (c.prime.dimension() > d) above.push_back(c.ideal);
    out.push_back({d, intersection(ideal.nvars(), above)});
  }
  return out;
}

// I : (x_1..x_j)^inf == I : x_j^inf for every j.
inline bool is_borel_type(const monomial_ideal& ideal) {
  detail::require_proper(ideal);
  std::vector<std::size_t> prefix;
  for (std::size_t j = 0; j < ideal.nvars(); ++j) {
    prefix.push_back(j);
    if (saturation_ideal(ideal, prefix) != saturation_var(ideal, j)) return false;
  }
  return true;
}

inline bool ass_totally_ordered(const monomial_ideal& ideal) {
  const auto ass = associated_primes(ideal);
  for (std::size_t i = 0; i < ass.size(); ++i)
    for (std::size_t j = i + 1; j < ass.size(); ++j)
      if (!ass[i].subset_of(ass[j]) && !ass[j].subset_of(ass[i])) return false;
  return true;
}

// U_t ⊂ ... ⊂ U_1 ⊂ U_0 = S with U_j the intersection of the first j primary
// components in report order. Returned bottom-up: front() is the input ideal,
// back() is the unit ideal.
inline std::vector<monomial_ideal> almost_clean_chain(const monomial_ideal& ideal) {
  const auto rep = primary_decomposition(ideal);
  std::vector<monomial_ideal> chain;
  monomial_ideal u = monomial_ideal::unit(ideal.nvars());
  chain.push_back(u);
  for (const auto& c : rep.primary_components) {
    u = intersection(u, c.ideal);
    chain.push_back(u);
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

}  // namespace multishell
