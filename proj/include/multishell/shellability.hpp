#pragma once

// Shellability of multicomplexes.
//
// A shelling is an order a_1..a_r of all facets. It is checked through four
// local conditions on each a_i:
//   (1) a_1 lies in {0, inf}^n;
//   (2) every maximal facet of <a_1..a_{i-1}> ∩ <a_i> is a lower neighbour
//       of a_i;
//   (3) for every finite coordinate k with a_i(k) > 0 some maximal facet w of
//       that intersection has w(k) < a_i(k);
//   (4) for j < i, ip(a_j) ⊆ ip(a_i) forces equality.
// (1)-(3) together say that Γ(a_i) \ Γ(a_1..a_{i-1}) is a Stanley set; a
// truncated brute-force oracle for that is provided as well.
//
// A maximal shelling orders only the maximal facets u_1..u_r, with a prefix
// u_1..u_s of equal infinite part, after which every maximal facet of
// <u_1..u_{i-1}> ∩ <u_i> differs from u_i in a single coordinate.

#include <algorithm>
#include <cstdint>
#include <future>
#include <optional>
#include <string>
#include <set>
#include <utility>
#include <vector>

#include "multishell/core.hpp"
#include "multishell/multicomplex.hpp"

namespace multishell {

class search_cap_exceeded : public error {
 public:
  using error::error;
};

class invalid_order : public error {
 public:
  using error::error;
};

enum class check : std::uint8_t { na, pass, fail };

inline const char* to_string(check c) {
  switch (c) {
    case check::na: return "n/a";
    case check::pass: return "pass";
    case check::fail: return "fail";
  }
  return "?";
}

inline bool is_lower_neighbour(const face& a, const face& b) {
  if (a.size() != b.size()) throw dimension_mismatch(a.size(), b.size());
  std::optional<std::size_t> k;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    if (k) return false;
    k = i;
  }
  if (!k) return false;
  const ext_exp& x = a[*k];
  const ext_exp& y = b[*k];
  if (x.is_infinite()) return false;
  if (y.is_infinite()) return true;
  return x.value() + 1 == y.value();
}

// Maximal facets of <prefix> ∩ <a>.
inline std::vector<face> prefix_intersection(const std::vector<face>& prefix, const face& a) {
  std::vector<face> mins;
  mins.reserve(prefix.size());
  for (const auto& p : prefix) mins.push_back(componentwise_min(p, a));
  return maximal_antichain(std::move(mins));
}

inline bool ip_subset(const face& a, const face& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].is_infinite() && b[i].is_finite()) return false;
  return true;
}

inline bool same_ip(const face& a, const face& b) { return ip_subset(a, b) && ip_subset(b, a); }

// ---------------------------------------------------------------------------
// shelling orders of facets

struct shelling_step {
  std::vector<face> intersection;  // empty at the first index
  check cond1 = check::na;
  check cond2 = check::na;
  std::vector<face> cond2_offenders;  // intersection facets that are not lower neighbours
  check cond3 = check::na;
  std::vector<std::size_t> cond3_offenders;  // coordinates without a witness w
  check cond4 = check::pass;
  std::vector<std::pair<std::size_t, std::size_t>> cond4_offenders;  // (j, i), 0-based

  bool passes_local() const {
    return cond1 != check::fail && cond2 != check::fail && cond3 != check::fail;
  }
  bool passes() const { return passes_local() && cond4 != check::fail; }
};

struct shelling_verdict {
  std::vector<face> order;
  std::vector<shelling_step> steps;
  bool overall = false;
};

// Evaluates conditions (1)-(4) for order[i] against order[0..i).
inline shelling_step evaluate_shelling_step(const std::vector<face>& order, std::size_t i) {
  shelling_step st;
  const face& a = order[i];
  if (i == 0) {
    bool corner = std::all_of(a.begin(), a.end(), [](const ext_exp& e) { return e.is_infinite() || e == ext_exp(0); });
    st.cond1 = corner ? check::pass : check::fail;
    return st;
  }
  std::vector<face> prefix(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(i));
  st.intersection = prefix_intersection(prefix, a);

  st.cond2 = check::pass;
  for (const auto& w : st.intersection)
    if (!is_lower_neighbour(w, a)) {
      st.cond2 = check::fail;
      st.cond2_offenders.push_back(w);
    }

  st.cond3 = check::pass;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].is_infinite() || a[k] == ext_exp(0)) continue;
    bool witnessed = std::any_of(st.intersection.begin(), st.intersection.end(),
                                 [&](const face& w) { return w[k] < a[k]; });
    if (!witnessed) {
      st.cond3 = check::fail;
      st.cond3_offenders.push_back(k);
    }
  }

  for (std::size_t j = 0; j < i; ++j)
    if (ip_subset(order[j], a) && !same_ip(order[j], a)) {
      st.cond4 = check::fail;
      st.cond4_offenders.emplace_back(j, i);
    }
  return st;
}

namespace detail {
inline void require_permutation(std::vector<face> order, std::vector<face> expected, const char* what) {
  std::sort(order.begin(), order.end());
  std::sort(expected.begin(), expected.end());
  if (order != expected) throw invalid_order(std::string("order is not a permutation of the ") + what);
}
}  // namespace detail

inline shelling_verdict check_shelling_order(const multicomplex& gamma, const std::vector<face>& order) {
  detail::require_permutation(order, enumerate_facets(gamma).facets, "facets");
  shelling_verdict v;
  v.order = order;
  v.overall = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    v.steps.push_back(evaluate_shelling_step(order, i));
    v.overall = v.overall && v.steps.back().passes();
  }
  return v;
}

// ---------------------------------------------------------------------------
// Stanley sets

struct stanley_set {
  exponent offset;
  std::vector<std::size_t> directions;

  std::size_t dimension() const { return directions.size(); }
  friend bool operator==(const stanley_set&, const stanley_set&) = default;
};

struct stanley_result {
  std::optional<stanley_set> set;
  std::string reason;  // why S_i is not a Stanley set
};

// Materializes S_i = Γ(a_i) \ Γ(a_1..a_{i-1}) in the box where each
// coordinate is truncated at B_k + 1 (B = largest finite entry of a maximal
// facet), then tests whether it is a product of points and full rays.
inline stanley_result stanley_set_at(const multicomplex& gamma, const std::vector<face>& order, std::size_t i) {
  if (i >= order.size()) throw error("stanley_set_at: index out of range");
  exponent top = gamma.finite_bound();
  for (std::size_t k = 0; k < top.size(); ++k) top[k] += 1;

  const face& a = order[i];
  std::vector<exponent> points;
  for_each_in_box(top, [&](const exponent& p) {
    if (!leq(p, a)) return;
    for (std::size_t j = 0; j < i; ++j)
      if (leq(p, order[j])) return;
    points.push_back(p);
  });
  if (points.empty()) return {std::nullopt, "not a Stanley set, empty"};

  const std::size_t n = a.size();
  exponent lo = points.front(), hi = points.front();
  for (const auto& p : points) {
    lo = gcd(lo, p);
    hi = lcm(hi, p);
  }
  stanley_set s{lo, {}};
  std::uint64_t volume = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (lo[k] == hi[k]) continue;
    if (hi[k] != top[k] || a[k].is_finite())
      return {std::nullopt, "coordinate " + std::to_string(k + 1) + " spans a bounded range"};
    s.directions.push_back(k);
    volume *= hi[k] - lo[k] + 1;
  }
  if (volume != points.size()) return {std::nullopt, "not a product set"};
  return {std::move(s), {}};
}

inline bool stanley_oracle(const multicomplex& gamma, const std::vector<face>& order, std::size_t i) {
  return stanley_set_at(gamma, order, i).set.has_value();
}

inline std::vector<stanley_set> stanley_sets_of_order(const multicomplex& gamma, const std::vector<face>& order) {
  detail::require_permutation(order, enumerate_facets(gamma).facets, "facets");
  std::vector<stanley_set> out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto r = stanley_set_at(gamma, order, i);
    if (!r.set) throw error("S_" + std::to_string(i + 1) + ": " + r.reason);
    out.push_back(std::move(*r.set));
  }
  return out;
}

// ---------------------------------------------------------------------------
// search

enum class shell_strategy : std::uint8_t { exhaustive, dimension };

struct search_options {
  std::size_t max_facets = 9;
  std::uint64_t max_nodes = 50'000'000;
  unsigned threads = 1;
};

struct shelling_found {
  std::vector<face> order;
  shelling_verdict verdict;
};

namespace detail {

class shelling_search {
 public:
  shelling_search(const std::vector<face>& facets, shell_strategy strategy, std::uint64_t max_nodes)
      : facets_(facets), strategy_(strategy), max_nodes_(max_nodes) {}

  // Explores orders whose first element is `first` (or all, if none).
  std::optional<std::vector<std::size_t>> run(std::optional<std::size_t> first) {
    std::vector<std::size_t> idx;
    std::vector<face> prefix;
    if (first) {
      if (!extend(prefix, *first)) return std::nullopt;
      idx.push_back(*first);
      if (descend(idx, prefix, std::uint64_t{1} << *first)) return idx;
      return std::nullopt;
    }
    if (descend(idx, prefix, 0)) return idx;
    return std::nullopt;
  }

 private:
  bool extend(std::vector<face>& prefix, std::size_t c) {
    if (++nodes_ > max_nodes_) throw search_cap_exceeded("shelling search exceeded the node cap");
    prefix.push_back(facets_[c]);
    if (evaluate_shelling_step(prefix, prefix.size() - 1).passes()) return true;
    prefix.pop_back();
    return false;
  }

  // Whether a prefix can be completed depends only on the set of facets it
  // uses, so failing sets are remembered.
  bool descend(std::vector<std::size_t>& idx, std::vector<face>& prefix, std::uint64_t used) {
    if (idx.size() == facets_.size()) return true;
    const auto key = memo_key(used, prefix);
    if (dead_.count(key)) return false;
    for (std::size_t c = 0; c < facets_.size(); ++c) {
      if (used & (std::uint64_t{1} << c)) continue;
      if (strategy_ == shell_strategy::dimension && !prefix.empty() &&
          infinite_part(facets_[c]).size() > infinite_part(prefix.back()).size())
        continue;
      if (!extend(prefix, c)) continue;
      idx.push_back(c);
      if (descend(idx, prefix, used | (std::uint64_t{1} << c))) return true;
      idx.pop_back();
      prefix.pop_back();
    }
    dead_.insert(key);
    return false;
  }

  // Under the dimension strategy feasibility also depends on the dimension
  // of the last element.
  std::pair<std::uint64_t, std::size_t> memo_key(std::uint64_t used, const std::vector<face>& prefix) const {
    if (strategy_ == shell_strategy::exhaustive || prefix.empty()) return {used, 0};
    return {used, infinite_part(prefix.back()).size() + 1};
  }

  const std::vector<face>& facets_;
  shell_strategy strategy_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  std::set<std::pair<std::uint64_t, std::size_t>> dead_;
};

}  // namespace detail

// Returns the lexicographically least passing order (facets indexed in
// canonical order), or nothing if Γ has no shelling.
inline std::optional<shelling_found> find_shelling(const multicomplex& gamma,
                                                   shell_strategy strategy = shell_strategy::exhaustive,
                                                   const search_options& opts = {}) {
  const auto facets = enumerate_facets(gamma).facets;
  if (facets.size() > opts.max_facets || facets.size() > 63)
    throw search_cap_exceeded("multicomplex has " + std::to_string(facets.size()) +
                              " facets, above the search cap of " + std::to_string(opts.max_facets));

  std::optional<std::vector<std::size_t>> hit;
  if (opts.threads <= 1) {
    hit = detail::shelling_search(facets, strategy, opts.max_nodes).run(std::nullopt);
  } else {
    std::vector<std::future<std::optional<std::vector<std::size_t>>>> branches;
    for (std::size_t c = 0; c < facets.size(); ++c)
      branches.push_back(std::async(std::launch::async, [&, c] {
        return detail::shelling_search(facets, strategy, opts.max_nodes).run(c);
      }));
    for (auto& b : branches) {
      auto r = b.get();
      if (!hit && r) hit = std::move(r);
    }
  }
  if (!hit) return std::nullopt;
  shelling_found out;
  for (auto c : *hit) out.order.push_back(facets[c]);
  out.verdict = check_shelling_order(gamma, out.order);
  return out;
}

// ---------------------------------------------------------------------------
// maximal shellings

struct maximal_shelling_step {
  std::vector<face> intersection;
  check cond1 = check::na;  // equal ip with u_1, positions <= s
  check cond2 = check::na;  // single-coordinate difference, positions > s
  std::vector<face> cond2_offenders;
  check cond3 = check::na;  // ip ordering, positions >= s
  std::vector<std::pair<std::size_t, std::size_t>> cond3_offenders;  // (j, i), 0-based

  bool passes() const { return cond1 != check::fail && cond2 != check::fail && cond3 != check::fail; }
};

struct maximal_shelling_verdict {
  std::vector<face> order;
  std::size_t split = 0;  // s, 1-based
  std::vector<maximal_shelling_step> steps;
  bool overall = false;
};

inline std::size_t differing_coordinates(const face& a, const face& b) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

inline maximal_shelling_verdict check_maximal_shelling(const multicomplex& gamma, const std::vector<face>& order,
                                                       std::size_t split) {
  detail::require_permutation(order, gamma.maximal_facets(), "maximal facets");
  const std::size_t r = order.size();
  if (split < 1 || split > r) throw invalid_order("split index must lie in 1..r");

  maximal_shelling_verdict v;
  v.order = order;
  v.split = split;
  v.overall = true;
  for (std::size_t i = 0; i < r; ++i) {
    maximal_shelling_step st;
    const std::size_t pos = i + 1;
    if (pos <= split) st.cond1 = same_ip(order[0], order[i]) ? check::pass : check::fail;
    if (i > 0) {
      std::vector<face> prefix(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(i));
      st.intersection = prefix_intersection(prefix, order[i]);
    }
    if (pos > split) {
      st.cond2 = check::pass;
      for (const auto& w : st.intersection)
        if (differing_coordinates(w, order[i]) != 1) {
          st.cond2 = check::fail;
          st.cond2_offenders.push_back(w);
        }
      st.cond3 = check::pass;
      for (std::size_t j = split - 1; j < i; ++j)
        if (ip_subset(order[j], order[i]) && !same_ip(order[j], order[i])) {
          st.cond3 = check::fail;
          st.cond3_offenders.emplace_back(j, i);
        }
    }
    v.overall = v.overall && st.passes();
    v.steps.push_back(std::move(st));
  }
  return v;
}

struct maximal_shelling_found {
  std::vector<face> order;
  std::size_t split;
  maximal_shelling_verdict verdict;
};

namespace detail {

class maximal_shelling_search {
 public:
  maximal_shelling_search(const std::vector<face>& facets, std::uint64_t max_nodes)
      : m_(facets), max_nodes_(max_nodes) {}

  std::optional<std::pair<std::vector<std::size_t>, std::size_t>> run() {
    std::vector<std::size_t> idx;
    std::vector<bool> viable(m_.size() + 1, true);
    viable[0] = false;
    if (descend(idx, 0, viable)) return std::make_pair(found_, split_);
    return std::nullopt;
  }

 private:
  // viable[s]: the prefix so far is consistent with split index s.
  bool descend(std::vector<std::size_t>& idx, std::uint64_t used, const std::vector<bool>& viable) {
    const std::size_t r = m_.size();
    if (idx.size() == r) {
      for (std::size_t s = r; s >= 1; --s)
        if (viable[s]) {
          found_ = idx;
          split_ = s;
          return true;
        }
      return false;
    }
    for (std::size_t c = 0; c < r; ++c) {
      if (used & (std::uint64_t{1} << c)) continue;
      if (++nodes_ > max_nodes_) throw search_cap_exceeded("maximal shelling search exceeded the node cap");
      idx.push_back(c);
      auto next = advance(idx, viable);
      if (std::any_of(next.begin(), next.end(), [](bool b) { return b; }) &&
          descend(idx, used | (std::uint64_t{1} << c), next))
        return true;
      idx.pop_back();
    }
    return false;
  }

  std::vector<bool> advance(const std::vector<std::size_t>& idx, std::vector<bool> viable) const {
    const std::size_t pos = idx.size();  // 1-based position of the new element
    const face& u = m_[idx.back()];
    bool single_diff = true;
    if (pos > 1) {
      std::vector<face> prefix;
      for (std::size_t t = 0; t + 1 < pos; ++t) prefix.push_back(m_[idx[t]]);
      for (const auto& w : prefix_intersection(prefix, u))
        if (differing_coordinates(w, u) != 1) {
          single_diff = false;
          break;
        }
    }
    const bool same_as_first = same_ip(m_[idx.front()], u);
    for (std::size_t s = 1; s < viable.size(); ++s) {
      if (!viable[s]) continue;
      if (pos <= s) {
        viable[s] = same_as_first;
        continue;
      }
      bool ok = single_diff;
      for (std::size_t j = s - 1; ok && j + 1 < pos; ++j) {
        const face& uj = m_[idx[j]];
        if (ip_subset(uj, u) && !same_ip(uj, u)) ok = false;
      }
      viable[s] = ok;
    }
    return viable;
  }

  const std::vector<face>& m_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> found_;
  std::size_t split_ = 0;
};

}  // namespace detail

// First passing order in lexicographic order of permutations of the
// canonical maximal facet list; for that order the largest valid s.
inline std::optional<maximal_shelling_found> find_maximal_shelling(const multicomplex& gamma,
                                                                   const search_options& opts = {}) {
  const auto& m = gamma.maximal_facets();
  if (m.size() > opts.max_facets || m.size() > 63)
    throw search_cap_exceeded("multicomplex has " + std::to_string(m.size()) +
                              " maximal facets, above the search cap of " + std::to_string(opts.max_facets));
  auto hit = detail::maximal_shelling_search(m, opts.max_nodes).run();
  if (!hit) return std::nullopt;
  maximal_shelling_found out;
  for (auto c : hit->first) out.order.push_back(m[c]);
  out.split = hit->second;
  out.verdict = check_maximal_shelling(gamma, out.order, out.split);
  return out;
}

}  // namespace multishell
