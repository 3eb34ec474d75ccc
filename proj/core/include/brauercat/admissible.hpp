#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "brauercat/scalar.hpp"

namespace brauercat {

// Roots u_1..u_a of the monic polynomial f(t) cutting out a cyclotomic quotient.
struct RootList {
  std::vector<Rational> u;
  int degree() const { return static_cast<int>(u.size()); }
};

// Coefficients b_0..b_{a-1} with f(t) = t^a + sum_j b_j t^j, i.e.
// b_j = (-1)^{a-j} e_{a-j}(u).
std::vector<Rational> f_coefficients(const RootList& roots);

// k-th coefficient of prod_i (1 + u_i t)/(1 - u_i t).
Rational schur_q(const RootList& roots, int k);

// A parameter sequence omega_0, omega_1, ...; values are memoized.
class OmegaSequence {
 public:
  enum class Provenance { FromU, Explicit, FunctorSpecialized };

  OmegaSequence(std::function<Rational(int)> eval, Provenance provenance);

  // Explicit finite sequence; entries beyond the vector are zero.
  static std::shared_ptr<const OmegaSequence> explicit_values(std::vector<Rational> values);

  Rational at(int k) const;
  Provenance provenance() const { return provenance_; }

 private:
  std::function<Rational(int)> eval_;
  Provenance provenance_;
  mutable std::map<int, Rational> memo_;
};

// omega_k = q_{k+1}(u) - (1/2)(-1)^a q_k(u) + (1/2) delta_{k,0}.
std::shared_ptr<const OmegaSequence> omega_from_u(const RootList& roots);

// 2*omega_k = -omega_{k-1} + sum_{j=1}^{k} (-1)^{j-1} omega_{j-1} omega_{k-j}
// for all odd k <= depth.
bool check_admissible(const OmegaSequence& omega, int depth);

// The above plus omega_k = -sum_{j=1}^{a} b_{a-j} omega_{k-j} for a <= k <= depth.
bool check_weakly_admissible(const OmegaSequence& omega, const RootList& roots, int depth);

// Compares the Laurent expansions of
//   sum_i omega_i u^{-i} + u - 1/2   and   (u - (1/2)(-1)^a) prod_i (u+u_i)/(u-u_i)
// coefficient by coefficient up to the given order.
bool check_u_admissible_series(const RootList& roots, const OmegaSequence& omega, int order);

enum class LieKind { SoEven, SoOdd, Sp };
enum class ParabolicFamily { I1, I2 };

// Root lists of the polynomials attached to the parabolic parameter data
// (q_1..q_k block sizes, c_1..c_k weights). For I2 the last weight must be 0.
RootList lie_parameters(LieKind kind, const std::vector<int>& q, const std::vector<Rational>& c,
                        ParabolicFamily which);

// Serialization as JSON arrays of exact "p/q" strings.
std::string roots_to_json(const RootList& roots);
std::string omega_to_json(const OmegaSequence& omega, int count);

}  // namespace brauercat
