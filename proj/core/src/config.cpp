#include "brauercat/config.hpp"

#include <sstream>
#include <stdexcept>

namespace brauercat {

std::string to_string(CategoryKind kind) {
  switch (kind) {
    case CategoryKind::B: return "b";
    case CategoryKind::B0: return "b0";
    case CategoryKind::AB: return "ab";
    case CategoryKind::AB0: return "ab0";
    case CategoryKind::ABW: return "abw";
    case CategoryKind::CBF: return "cbf";
    case CategoryKind::CBFW: return "cbfw";
  }
  return "?";
}

CategoryConfig CategoryConfig::brauer() { return CategoryConfig{CategoryKind::B}; }

CategoryConfig CategoryConfig::brauer_specialized(Rational omega0) {
  CategoryConfig c{CategoryKind::B0};
  c.omega0 = std::move(omega0);
  return c;
}

CategoryConfig CategoryConfig::affine() { return CategoryConfig{CategoryKind::AB}; }

CategoryConfig CategoryConfig::affine_specialized(Rational omega0) {
  CategoryConfig c{CategoryKind::AB0};
  c.omega0 = std::move(omega0);
  return c;
}

CategoryConfig CategoryConfig::affine_omega(std::shared_ptr<const OmegaSequence> omega,
                                            int depth) {
  if (!omega) throw std::invalid_argument("null omega sequence");
  if (!check_admissible(*omega, depth))
    throw std::invalid_argument("omega sequence fails the admissibility recursion");
  CategoryConfig c{CategoryKind::ABW};
  c.omega = std::move(omega);
  return c;
}

CategoryConfig CategoryConfig::cyclotomic(RootList roots) {
  if (roots.degree() < 1) throw std::invalid_argument("f must have degree >= 1");
  CategoryConfig c{CategoryKind::CBF};
  c.b = f_coefficients(roots);
  c.roots = std::move(roots);
  return c;
}

CategoryConfig CategoryConfig::cyclotomic_specialized(
    RootList roots, std::shared_ptr<const OmegaSequence> omega) {
  if (roots.degree() < 1) throw std::invalid_argument("f must have degree >= 1");
  CategoryConfig c{CategoryKind::CBFW};
  c.b = f_coefficients(roots);
  if (!omega) omega = omega_from_u(roots);
  c.omega_admissible =
      check_u_admissible_series(roots, *omega, 2 * roots.degree() + 8);
  c.roots = std::move(roots);
  c.omega = std::move(omega);
  return c;
}

bool CategoryConfig::dots_allowed() const {
  return kind != CategoryKind::B && kind != CategoryKind::B0;
}

std::optional<int> CategoryConfig::dot_bound() const {
  if (kind == CategoryKind::CBF || kind == CategoryKind::CBFW) return roots.degree();
  return std::nullopt;
}

bool CategoryConfig::bubbles_specialized() const {
  return kind == CategoryKind::ABW || kind == CategoryKind::CBFW;
}

Rational CategoryConfig::omega_value(int k) const {
  if (!bubbles_specialized()) throw std::logic_error("config has formal bubbles");
  return omega->at(k);
}

bool CategoryConfig::operator==(const CategoryConfig& other) const {
  if (kind != other.kind) return false;
  if (omega0 != other.omega0) return false;
  if (roots.u != other.roots.u) return false;
  if ((omega == nullptr) != (other.omega == nullptr)) return false;
  if (omega && omega != other.omega) {
    // Distinct sequence objects still match if they agree on a prefix long
    // enough to pin any weakly admissible sequence for this degree.
    int depth = 2 * roots.degree() + 8;
    for (int k = 0; k <= depth; ++k)
      if (omega->at(k) != other.omega->at(k)) return false;
  }
  return true;
}

std::string CategoryConfig::cache_key() const {
  std::ostringstream os;
  os << to_string(kind);
  if (omega0) os << ";w0=" << to_string(*omega0);
  if (!roots.u.empty()) {
    os << ";u=";
    for (const auto& u : roots.u) os << to_string(u) << ",";
  }
  if (omega) {
    os << ";w=";
    int depth = 2 * std::max(1, roots.degree()) + 8;
    for (int k = 0; k <= depth; ++k) os << to_string(omega->at(k)) << ",";
  }
  return os.str();
}

}  // namespace brauercat
