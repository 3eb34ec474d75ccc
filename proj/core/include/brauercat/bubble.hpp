#pragma once

#include <map>

#include "brauercat/config.hpp"
#include "brauercat/diagram.hpp"
#include "brauercat/scalar.hpp"

namespace brauercat {

// Value of a configuration of closed loops: a polynomial in the even formal
// bubbles Delta_0, Delta_2, ... (a bare constant under specialized configs).
struct BubblePoly {
  std::map<BubbleMonomial, Rational> terms;

  static BubblePoly constant(Rational c);
  static BubblePoly monomial(BubbleMonomial mono, Rational c = Rational(1));

  bool is_zero() const { return terms.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // throws unless constant

  BubblePoly& operator+=(const BubblePoly& other);
  BubblePoly operator*(const BubblePoly& other) const;
  BubblePoly operator*(const Rational& c) const;
};

bool operator==(const BubblePoly& a, const BubblePoly& b);
std::string to_string(const BubblePoly& p);

// Delta_k as a polynomial in even Delta's, via the odd-index recursion
//   2 Delta_k = -Delta_{k-1} + sum_{j=1}^{k} (-1)^{j-1} Delta_{j-1} Delta_{k-j}.
BubblePoly delta_even_poly(int k);

// Value of a closed loop carrying c dots (counted on its left boundary) in
// the given configuration: even-reduced, index-reduced mod f when cyclotomic,
// and specialized to a scalar when the config fixes omega.
BubblePoly reduce_bubble(int c, const CategoryConfig& config);

// Re-normalizes an arbitrary even monomial for the config (used when basis
// keys from different sources are multiplied).
BubblePoly normalize_monomial(const BubbleMonomial& mono, const CategoryConfig& config);

}  // namespace brauercat
