#pragma once

// Text syntax for monomials, ideals, faces and primes. Variables are x1..xn.
//
//   ideal     := "0" | generator ("," generator)*
//   generator := "1" | factor ("*" factor)*
//   factor    := "x" INDEX ("^" NAT)?
//
// Whitespace is insignificant. The number of variables is the largest index
// seen unless given explicitly.

#include <cctype>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "multishell/core.hpp"

namespace multishell {

class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : error("syntax error at position " + std::to_string(position + 1) + ": " + what), position_(position) {}

  // 0-based offset into the input
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

class ideal_lexer {
 public:
  explicit ideal_lexer(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  std::size_t pos() const { return pos_; }

  std::uint64_t natural(const char* what) {
    skip_ws();
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
      if (v > 0xFFFFFFFFull) throw parse_error(std::string(what) + " too large", start);
      ++pos_;
    }
    if (pos_ == start) throw parse_error(std::string("expected ") + what, start);
    return v;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

// Sparse monomial: (index, power) pairs with 0-based indices.
using sparse_monomial = std::vector<std::pair<std::size_t, std::uint32_t>>;

inline sparse_monomial parse_generator(ideal_lexer& lx) {
  sparse_monomial m;
  if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
    const std::size_t at = lx.pos();
    if (lx.natural("monomial") != 1) throw parse_error("the only constant generator is 1", at);
    return m;
  }
  do {
    if (!lx.accept('x')) {
      lx.skip_ws();
      throw parse_error("expected variable 'x<index>'", lx.pos());
    }
    const std::size_t idx_at = lx.pos();
    auto idx = lx.natural("variable index");
    if (idx == 0) throw parse_error("variable index 0 (variables are x1..xn)", idx_at);
    std::uint64_t power = 1;
    lx.skip_ws();
    const std::size_t caret = lx.pos();
    if (lx.accept('^')) {
      lx.skip_ws();
      const std::size_t pw_at = lx.pos();
      lx.skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(lx.peek()))) throw parse_error("'^' without an exponent", caret);
      power = lx.natural("exponent");
      if (power == 0) throw parse_error("exponent 0", pw_at);
    }
    m.emplace_back(static_cast<std::size_t>(idx - 1), static_cast<std::uint32_t>(power));
  } while (lx.accept('*'));
  return m;
}

}  // namespace detail

inline monomial_ideal parse_ideal(std::string_view text, std::optional<std::size_t> nvars = std::nullopt) {
  detail::ideal_lexer lx(text);
  std::vector<detail::sparse_monomial> gens;
  bool zero = false;
  if (lx.peek() == '0') {
    const std::size_t at = lx.pos();
    if (lx.natural("ideal") != 0) throw parse_error("unexpected number", at);
    zero = true;
  } else if (!lx.at_end()) {
    do {
      gens.push_back(detail::parse_generator(lx));
    } while (lx.accept(','));
  }
  if (!lx.at_end()) throw parse_error("unexpected character", lx.pos());

  std::size_t n = 0;
  for (const auto& g : gens)
    for (const auto& [i, p] : g) n = std::max(n, i + 1);
  if (nvars) {
    if (*nvars < n) throw error("ideal mentions x" + std::to_string(n) + " but only " + std::to_string(*nvars) +
                                " variables were declared");
    n = *nvars;
  }
  if (zero) return monomial_ideal::zero(n);
  std::vector<exponent> out;
  for (const auto& g : gens) {
    exponent e(n);
    for (const auto& [i, p] : g) e[i] += p;
    out.push_back(std::move(e));
  }
  return {n, std::move(out)};
}

// Parses a single monomial ("x1^2*x3" or "1") in n variables.
inline exponent parse_monomial(std::string_view text, std::size_t n) {
  detail::ideal_lexer lx(text);
  auto g = detail::parse_generator(lx);
  if (!lx.at_end()) throw parse_error("unexpected character", lx.pos());
  exponent e(n);
  for (const auto& [i, p] : g) {
    if (i >= n) throw error("monomial mentions x" + std::to_string(i + 1) + " beyond the " + std::to_string(n) +
                            " declared variables");
    e[i] += p;
  }
  return e;
}

// ---------------------------------------------------------------------------
// printing

inline std::string to_string(const exponent& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(i + 1);
    if (e[i] > 1) s += '^' + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

inline std::string to_string(const monomial_ideal& ideal) {
  if (ideal.is_zero()) return "0";
  std::string s;
  for (const auto& g : ideal.generators()) {
    if (!s.empty()) s += ", ";
    s += to_string(g);
  }
  return s;
}

inline std::string to_string(const ext_exp& e) { return e.is_infinite() ? "inf" : std::to_string(e.value()); }

inline std::string to_string(const face& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ',';
    s += to_string(a[i]);
  }
  return s + ")";
}

inline std::string to_string(const monomial_prime& p) {
  if (p.vars().empty()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < p.vars().size(); ++i) {
    if (i) s += ',';
    s += 'x' + std::to_string(p.vars()[i] + 1);
  }
  return s + ")";
}

inline std::string exponent_vector_string(const exponent& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(e[i]);
  }
  return s + ")";
}

}  // namespace multishell
