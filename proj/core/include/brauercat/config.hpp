#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "brauercat/admissible.hpp"
#include "brauercat/scalar.hpp"

namespace brauercat {

// Which quotient of the dotted diagram category is in force.
enum class CategoryKind {
  B,     // no dots, Delta_0 formal
  B0,    // no dots, Delta_0 = omega_0
  AB,    // dots, all even Delta_k formal
  AB0,   // dots, Delta_0 = omega_0, Delta_2, Delta_4, ... formal
  ABW,   // dots, Delta_k = omega_k for an admissible sequence
  CBF,   // dots bounded by deg f, Delta's formal reduced mod f
  CBFW,  // dots bounded by deg f, Delta_k = omega_k (u-admissible)
};

std::string to_string(CategoryKind kind);

struct CategoryConfig {
  CategoryKind kind = CategoryKind::AB;
  std::optional<Rational> omega0;                 // B0, AB0
  std::shared_ptr<const OmegaSequence> omega;     // ABW, CBFW
  RootList roots;                                 // CBF, CBFW
  std::vector<Rational> b;                        // f(t) = t^a + sum b_j t^j
  bool omega_admissible = true;                   // CBFW: result of the u-check

  static CategoryConfig brauer();
  static CategoryConfig brauer_specialized(Rational omega0);
  static CategoryConfig affine();
  static CategoryConfig affine_specialized(Rational omega0);
  // omega must satisfy the odd-degree recursion; validated to `depth`.
  static CategoryConfig affine_omega(std::shared_ptr<const OmegaSequence> omega, int depth = 16);
  static CategoryConfig cyclotomic(RootList roots);
  // omega defaults to the u-admissible sequence determined by the roots; an
  // explicit non-admissible sequence is accepted but flagged.
  static CategoryConfig cyclotomic_specialized(
      RootList roots, std::shared_ptr<const OmegaSequence> omega = nullptr);

  bool dots_allowed() const;
  // deg f when the quotient bounds dots per strand, otherwise empty.
  std::optional<int> dot_bound() const;
  bool bubbles_specialized() const;  // every Delta_k evaluates to a scalar
  Rational omega_value(int k) const;

  bool operator==(const CategoryConfig& other) const;
  // Stable identity for caches.
  std::string cache_key() const;
};

}  // namespace brauercat
