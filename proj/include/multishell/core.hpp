#pragma once

// Exponent vectors over N and N ∪ {inf}, and monomial ideals stored as
// minimal generating antichains. The coefficient field never appears: every
// operation here is pure exponent combinatorics.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace multishell {

// ---------------------------------------------------------------------------
// errors

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class dimension_mismatch : public error {
 public:
  dimension_mismatch(std::size_t expected, std::size_t got)
      : error("dimension mismatch: expected " + std::to_string(expected) +
              " coordinates, got " + std::to_string(got)) {}
};

class improper_ideal : public error {
 public:
  improper_ideal() : error("improper ideal") {}
  explicit improper_ideal(const std::string& what) : error("improper ideal: " + what) {}
};

// ---------------------------------------------------------------------------
// ext_exp: a natural number or infinity

class ext_exp {
 public:
  using value_type = std::uint32_t;

  constexpr ext_exp() = default;
  constexpr ext_exp(value_type v) : kind_(kind::finite), value_(v) {}  // NOLINT: implicit by intent

  static constexpr ext_exp infinity() {
    ext_exp e;
    e.kind_ = kind::infinite;
    return e;
  }

  constexpr bool is_infinite() const { return kind_ == kind::infinite; }
  constexpr bool is_finite() const { return kind_ == kind::finite; }

  constexpr value_type value() const {
    if (is_infinite()) throw error("value() called on infinity");
    return value_;
  }

  friend constexpr bool operator==(const ext_exp& a, const ext_exp& b) {
    return a.kind_ == b.kind_ && (a.is_infinite() || a.value_ == b.value_);
  }

  friend constexpr std::strong_ordering operator<=>(const ext_exp& a, const ext_exp& b) {
    if (a.is_infinite() || b.is_infinite()) {
      return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
    }
    return a.value_ <=> b.value_;
  }

  friend constexpr ext_exp operator+(const ext_exp& a, const ext_exp& b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return ext_exp(a.value_ + b.value_);
  }

 private:
  enum class kind : std::uint8_t { finite, infinite };
  kind kind_ = kind::finite;
  value_type value_ = 0;
};

inline constexpr ext_exp inf = ext_exp::infinity();

// ---------------------------------------------------------------------------
// exponent: a point of N^n, i.e. the monomial x^a

class exponent {
 public:
  using value_type = std::uint32_t;

  exponent() = default;
  explicit exponent(std::size_t n) : c_(n, 0) {}
  exponent(std::initializer_list<value_type> il) : c_(il) {}
  explicit exponent(std::vector<value_type> v) : c_(std::move(v)) {}

  std::size_t size() const { return c_.size(); }
  value_type operator[](std::size_t i) const { return c_[i]; }
  value_type& operator[](std::size_t i) { return c_[i]; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }
  const std::vector<value_type>& coords() const { return c_; }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (auto v : c_) d += v;
    return d;
  }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](value_type v) { return v == 0; });
  }

  // x^this divides x^other
  bool divides(const exponent& other) const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] > other.c_[i]) return false;
    return true;
  }

  // Number of variables with a positive exponent.
  std::size_t support_size() const {
    return static_cast<std::size_t>(
        std::count_if(c_.begin(), c_.end(), [](value_type v) { return v > 0; }));
  }

  friend bool operator==(const exponent&, const exponent&) = default;
  friend auto operator<=>(const exponent&, const exponent&) = default;

 private:
  std::vector<value_type> c_;
};

inline exponent unit_vector(std::size_t n, std::size_t k, exponent::value_type power = 1) {
  exponent e(n);
  e[k] = power;
  return e;
}

inline exponent lcm(const exponent& a, const exponent& b) {
  if (a.size() != b.size()) throw dimension_mismatch(a.size(), b.size());
  exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline exponent gcd(const exponent& a, const exponent& b) {
  if (a.size() != b.size()) throw dimension_mismatch(a.size(), b.size());
  exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

inline exponent operator+(const exponent& a, const exponent& b) {
  if (a.size() != b.size()) throw dimension_mismatch(a.size(), b.size());
  exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

// Componentwise max(a - b, 0): the exponent of x^a / gcd(x^a, x^b).
inline exponent monus(const exponent& a, const exponent& b) {
  if (a.size() != b.size()) throw dimension_mismatch(a.size(), b.size());
  exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] - b[i] : 0;
  return r;
}

// ---------------------------------------------------------------------------
// face: a point of (N ∪ {inf})^n

class face {
 public:
  face() = default;
  explicit face(std::size_t n) : c_(n, ext_exp(0)) {}
  face(std::initializer_list<ext_exp> il) : c_(il) {}
  explicit face(std::vector<ext_exp> v) : c_(std::move(v)) {}
  explicit face(const exponent& e) {
    c_.reserve(e.size());
    for (auto v : e) c_.emplace_back(v);
  }

  std::size_t size() const { return c_.size(); }
  const ext_exp& operator[](std::size_t i) const { return c_[i]; }
  ext_exp& operator[](std::size_t i) { return c_[i]; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }

  bool is_finite() const {
    return std::none_of(c_.begin(), c_.end(), [](const ext_exp& e) { return e.is_infinite(); });
  }

  // Lossless projection for all-finite faces.
  exponent to_exponent() const {
    exponent r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i].value();
    return r;
  }

  friend bool operator==(const face&, const face&) = default;
  // Lexicographic, infinity greatest.
  friend auto operator<=>(const face&, const face&) = default;

 private:
  std::vector<ext_exp> c_;
};

// Componentwise a <= b.
inline bool leq(const face& a, const face& b) {
  if (a.size() != b.size()) throw dimension_mismatch(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] < a[i]) return false;
  return true;
}

inline bool leq(const exponent& a, const face& b) {
  if (a.size() != b.size()) throw dimension_mismatch(b.size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] < ext_exp(a[i])) return false;
  return true;
}

inline face componentwise_min(const face& a, const face& b) {
  if (a.size() != b.size()) throw dimension_mismatch(a.size(), b.size());
  face r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

// Reduce to the <=-maximal elements, sorted and deduplicated.
inline std::vector<face> maximal_antichain(std::vector<face> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  std::vector<face> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < v.size() && !dominated; ++j)
      dominated = j != i && leq(v[i], v[j]);
    if (!dominated) out.push_back(v[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// monomial_prime: the ideal (x_j : j in vars)

class monomial_prime {
 public:
  monomial_prime() = default;
  monomial_prime(std::size_t n, std::vector<std::size_t> vars) : n_(n), vars_(std::move(vars)) {
    std::sort(vars_.begin(), vars_.end());
    vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
    for (auto v : vars_)
      if (v >= n_) throw error("variable index " + std::to_string(v + 1) + " out of range");
  }

  static monomial_prime maximal(std::size_t n) {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    return {n, std::move(all)};
  }

  std::size_t nvars() const { return n_; }
  const std::vector<std::size_t>& vars() const { return vars_; }
  std::size_t height() const { return vars_.size(); }
  std::size_t dimension() const { return n_ - vars_.size(); }
  bool contains_var(std::size_t j) const { return std::binary_search(vars_.begin(), vars_.end(), j); }

  // this ⊆ other
  bool subset_of(const monomial_prime& other) const {
    return std::includes(other.vars_.begin(), other.vars_.end(), vars_.begin(), vars_.end());
  }

  friend bool operator==(const monomial_prime&, const monomial_prime&) = default;
  friend auto operator<=>(const monomial_prime&, const monomial_prime&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> vars_;
};

// ---------------------------------------------------------------------------
// monomial_ideal

class monomial_ideal {
 public:
  monomial_ideal() = default;

  // Minimalizes: the stored generators are the <=-minimal elements, sorted.
  monomial_ideal(std::size_t n, std::vector<exponent> gens) : n_(n) {
    for (const auto& g : gens)
      if (g.size() != n) throw dimension_mismatch(n, g.size());
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    // Sorting by total degree first lets each generator be tested only
    // against already accepted ones.
    std::stable_sort(gens.begin(), gens.end(), [](const exponent& a, const exponent& b) {
      return a.total_degree() < b.total_degree();
    });
    for (auto& g : gens) {
      bool dominated = false;
      for (const auto& h : gens_)
        if (h.divides(g)) {
          dominated = true;
          break;
        }
      if (!dominated) gens_.push_back(std::move(g));
    }
    std::sort(gens_.begin(), gens_.end());
  }

  static monomial_ideal zero(std::size_t n) { return monomial_ideal(n, {}); }
  static monomial_ideal unit(std::size_t n) { return monomial_ideal(n, {exponent(n)}); }
  static monomial_ideal principal(const exponent& e) { return monomial_ideal(e.size(), {e}); }
  static monomial_ideal of(const monomial_prime& p) {
    std::vector<exponent> g;
    for (auto j : p.vars()) g.push_back(unit_vector(p.nvars(), j));
    return {p.nvars(), std::move(g)};
  }

  std::size_t nvars() const { return n_; }
  const std::vector<exponent>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_zero(); }
  bool is_proper() const { return !is_zero() && !is_unit(); }

  bool contains(const exponent& b) const {
    if (b.size() != n_) throw dimension_mismatch(n_, b.size());
    return std::any_of(gens_.begin(), gens_.end(), [&](const exponent& g) { return g.divides(b); });
  }

  // Ideal containment this ⊆ other.
  bool subset_of(const monomial_ideal& other) const {
    if (other.n_ != n_) throw dimension_mismatch(n_, other.n_);
    return std::all_of(gens_.begin(), gens_.end(), [&](const exponent& g) { return other.contains(g); });
  }

  // Per-variable maximum exponent over the generators.
  exponent max_exponents() const {
    exponent m(n_);
    for (const auto& g : gens_)
      for (std::size_t i = 0; i < n_; ++i) m[i] = std::max(m[i], g[i]);
    return m;
  }

  friend bool operator==(const monomial_ideal&, const monomial_ideal&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<exponent> gens_;
};

inline bool membership(const monomial_ideal& ideal, const exponent& b) { return ideal.contains(b); }

inline monomial_ideal minimalize(std::size_t n, std::vector<exponent> gens) {
  return monomial_ideal(n, std::move(gens));
}

namespace detail {
inline void require_same_ring(const monomial_ideal& a, const monomial_ideal& b) {
  if (a.nvars() != b.nvars()) throw dimension_mismatch(a.nvars(), b.nvars());
}
inline void require_proper(const monomial_ideal& a) {
  if (a.is_unit()) throw improper_ideal("unit ideal");
  if (a.is_zero()) throw improper_ideal("zero ideal");
}
}  // namespace detail

inline monomial_ideal sum(const monomial_ideal& a, const monomial_ideal& b) {
  detail::require_same_ring(a, b);
  std::vector<exponent> g = a.generators();
  g.insert(g.end(), b.generators().begin(), b.generators().end());
  return {a.nvars(), std::move(g)};
}

inline monomial_ideal sum(const monomial_ideal& a, const exponent& b) {
  return sum(a, monomial_ideal::principal(b));
}

inline monomial_ideal intersection(const monomial_ideal& a, const monomial_ideal& b) {
  detail::require_same_ring(a, b);
  std::vector<exponent> g;
  g.reserve(a.size() * b.size());
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) g.push_back(lcm(x, y));
  return {a.nvars(), std::move(g)};
}

// Intersection of a list of ideals; the empty intersection is the unit ideal.
inline monomial_ideal intersection(std::size_t n, const std::vector<monomial_ideal>& ideals) {
  monomial_ideal r = monomial_ideal::unit(n);
  for (const auto& q : ideals) r = intersection(r, q);
  return r;
}

inline monomial_ideal colon_monomial(const monomial_ideal& ideal, const exponent& b) {
  if (b.size() != ideal.nvars()) throw dimension_mismatch(ideal.nvars(), b.size());
  std::vector<exponent> g;
  g.reserve(ideal.size());
  for (const auto& x : ideal.generators()) g.push_back(monus(x, b));
  return {ideal.nvars(), std::move(g)};
}

inline monomial_ideal colon_ideal(const monomial_ideal& a, const monomial_ideal& b) {
  detail::require_same_ring(a, b);
  monomial_ideal r = monomial_ideal::unit(a.nvars());
  for (const auto& g : b.generators()) r = intersection(r, colon_monomial(a, g));
  return r;
}

// I : x_j^inf
inline monomial_ideal saturation_var(const monomial_ideal& ideal, std::size_t j) {
  if (j >= ideal.nvars()) throw error("variable index out of range");
  std::vector<exponent> g = ideal.generators();
  for (auto& x : g) x[j] = 0;
  return {ideal.nvars(), std::move(g)};
}

// I : J^inf for J = (x_k : k in vars), computed as the intersection of the
// single-variable saturations.
inline monomial_ideal saturation_ideal(const monomial_ideal& ideal, const std::vector<std::size_t>& vars) {
  monomial_ideal r = monomial_ideal::unit(ideal.nvars());
  for (auto k : vars) r = intersection(r, saturation_var(ideal, k));
  return r;
}

// I : J^inf for an ideal J generated by variables.
inline monomial_ideal saturation_ideal(const monomial_ideal& ideal, const monomial_ideal& by) {
  detail::require_same_ring(ideal, by);
  std::vector<std::size_t> vars;
  for (const auto& g : by.generators()) {
    if (g.total_degree() != 1) throw error("saturation_ideal: J must be generated by variables");
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g[i] == 1) vars.push_back(i);
  }
  return saturation_ideal(ideal, vars);
}

inline monomial_ideal radical(const monomial_ideal& ideal) {
  std::vector<exponent> g = ideal.generators();
  for (auto& x : g)
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::min<exponent::value_type>(x[i], 1);
  return {ideal.nvars(), std::move(g)};
}

// Variables occurring in some generator.
inline std::vector<std::size_t> support(const monomial_ideal& ideal) {
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < ideal.nvars(); ++i)
    for (const auto& g : ideal.generators())
      if (g[i] > 0) {
        vars.push_back(i);
        break;
      }
  return vars;
}

// Index of the variable x^g is a pure power of, if any.
inline std::optional<std::size_t> pure_power_var(const exponent& g) {
  std::optional<std::size_t> var;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] == 0) continue;
    if (var) return std::nullopt;
    var = i;
  }
  return var;
}

inline bool is_irreducible(const monomial_ideal& ideal) {
  detail::require_proper(ideal);
  return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                     [](const exponent& g) { return pure_power_var(g).has_value(); });
}

inline bool is_primary(const monomial_ideal& ideal) {
  detail::require_proper(ideal);
  std::vector<bool> has_pure(ideal.nvars(), false);
  for (const auto& g : ideal.generators())
    if (auto v = pure_power_var(g)) has_pure[*v] = true;
  for (auto v : support(ideal))
    if (!has_pure[v]) return false;
  return true;
}

inline std::optional<monomial_prime> is_prime(const monomial_ideal& ideal) {
  detail::require_proper(ideal);
  std::vector<std::size_t> vars;
  for (const auto& g : ideal.generators()) {
    auto v = pure_power_var(g);
    if (!v || g[*v] != 1) return std::nullopt;
    vars.push_back(*v);
  }
  return monomial_prime(ideal.nvars(), std::move(vars));
}

// As is_prime, but the unit and zero ideal are simply "not prime" rather than
// an error; the zero ideal is reported as the zero prime.
inline std::optional<monomial_prime> as_prime(const monomial_ideal& ideal) {
  if (ideal.is_unit()) return std::nullopt;
  if (ideal.is_zero()) return monomial_prime(ideal.nvars(), {});
  return is_prime(ideal);
}

// Sets the exponents of the given variables to zero: extension of the ideal
// to the localization inverting those variables, contracted back.
inline monomial_ideal substitute_ones(const monomial_ideal& ideal, const std::vector<std::size_t>& vars) {
  std::vector<exponent> g = ideal.generators();
  for (auto v : vars) {
    if (v >= ideal.nvars()) throw error("variable index out of range");
    for (auto& x : g) x[v] = 0;
  }
  return {ideal.nvars(), std::move(g)};
}

// Per-coordinate brute-force box bound: (max exponent of x_k) + 1.
inline exponent degree_box(const monomial_ideal& ideal) {
  exponent b = ideal.max_exponents();
  for (std::size_t i = 0; i < b.size(); ++i) b[i] += 1;
  return b;
}

// Calls fn(e) for every e with 0 <= e <= bound componentwise, in lex order.
template <typename Fn>
void for_each_in_box(const exponent& bound, Fn&& fn) {
  const std::size_t n = bound.size();
  exponent e(n);
  while (true) {
    fn(static_cast<const exponent&>(e));
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (e[i] < bound[i]) {
        ++e[i];
        break;
      }
      e[i] = 0;
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

}  // namespace multishell
