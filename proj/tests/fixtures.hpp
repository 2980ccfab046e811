#pragma once

// Named instances shared by the unit and acceptance tests.

#include <vector>

#include "multishell/multishell.hpp"

namespace fixtures {

using namespace multishell;

inline constexpr const char* four_var_text = "x1^2, x1*x2^2*x3, x1*x3^2, x2^2*x4^2, x2*x3^2*x4";

inline monomial_ideal four_var_ideal() { return parse_ideal(four_var_text); }

// <(0,inf),(2,0)>, the multicomplex of (x1^3, x1*x2)
inline multicomplex corner_gamma() { return {2, {face{0, inf}, face{2, 0}}}; }

inline multicomplex inclusion_gamma() {
  return {4, {face{inf, 0, inf, inf}, face{1, 1, inf, 0}, face{0, 2, inf, inf}}};
}

inline std::vector<face> inclusion_order() {
  return {face{inf, 0, inf, inf}, face{0, 1, inf, inf}, face{1, 1, inf, 0}, face{0, 2, inf, inf}};
}

inline multicomplex mixed_dim_gamma() {
  return {4, {face{0, inf, 1, inf}, face{0, 0, 2, inf}, face{inf, inf, 1, 0}}};
}

// d, e, a, b, c
inline std::vector<face> mixed_dim_order() {
  return {face{inf, inf, 0, 0}, face{0, inf, 0, inf}, face{0, inf, 1, inf}, face{0, 0, 2, inf},
          face{inf, inf, 1, 0}};
}

inline monomial_ideal j_part(std::size_t n) {
  return intersection(parse_ideal("x1^2, x2^2, x3, x4", n), parse_ideal("x1, x2, x3^2, x4^2", n));
}

inline monomial_ideal six_var_ideal() { return intersection(j_part(6), parse_ideal("x1, x2, x5^2, x6^2", 6)); }
inline monomial_ideal shell_only_ideal() { return intersection(j_part(5), parse_ideal("x1^2, x2, x3, x5^2", 5)); }
inline monomial_ideal maxshell_ideal() { return intersection(j_part(5), parse_ideal("x1, x2, x3, x5^2", 5)); }

inline std::vector<face> maxshell_order() {
  return {face{1, 1, 0, 0, inf}, face{0, 0, 1, 1, inf}, face{0, 0, 0, inf, 1}};
}

inline std::vector<face> shell_only_order() {
  return {face{1, 1, 0, 0, inf}, face{0, 0, 1, 1, inf}, face{1, 0, 0, inf, 1}};
}

inline std::vector<face> six_var_order() {
  return {face{1, 1, 0, 0, inf, inf}, face{0, 0, 1, 1, inf, inf}, face{0, 0, inf, inf, 1, 1}};
}

inline monomial_ideal two_planes() {
  return intersection(parse_ideal("x1, x2", 4), parse_ideal("x3, x4", 4));
}

inline exponent mono(const char* text, std::size_t n) { return parse_monomial(text, n); }

// 0 ⊂ (x) ⊂ R over S/(x^2, xy)
inline prime_filtration good_filtration() {
  const auto base = parse_ideal("x1^2, x1*x2");
  prime_filtration f;
  f.base = base;
  f.steps.push_back({base, mono("x1", 2), monomial_prime(2, {0, 1}), mono("x1", 2)});
  f.steps.push_back({parse_ideal("x1", 2), mono("1", 2), monomial_prime(2, {0}), mono("1", 2)});
  return f;
}

// 0 ⊂ (y) ⊂ (x,y) ⊂ R over S/(x^2, xy)
inline prime_filtration bad_filtration() {
  const auto base = parse_ideal("x1^2, x1*x2");
  prime_filtration f;
  f.base = base;
  f.steps.push_back({base, mono("x2", 2), monomial_prime(2, {0}), mono("x2", 2)});
  f.steps.push_back({parse_ideal("x1^2, x2", 2), mono("x1", 2), monomial_prime(2, {0, 1}), mono("x1", 2)});
  f.steps.push_back({parse_ideal("x1, x2", 2), mono("1", 2), monomial_prime(2, {0, 1}), mono("1", 2)});
  return f;
}

}  // namespace fixtures
