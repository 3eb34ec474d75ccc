#include "brauercat/bubble.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace brauercat {

BubblePoly BubblePoly::constant(Rational c) {
  BubblePoly p;
  if (c != 0) p.terms.emplace(BubbleMonomial{}, std::move(c));
  return p;
}

BubblePoly BubblePoly::monomial(BubbleMonomial mono, Rational c) {
  BubblePoly p;
  if (c != 0) p.terms.emplace(std::move(mono), std::move(c));
  return p;
}

bool BubblePoly::is_constant() const {
  return terms.empty() || (terms.size() == 1 && terms.begin()->first.empty());
}

Rational BubblePoly::constant_value() const {
  if (terms.empty()) return Rational(0);
  if (!is_constant()) throw std::logic_error("bubble value is not a scalar");
  return terms.begin()->second;
}

BubblePoly& BubblePoly::operator+=(const BubblePoly& other) {
  for (const auto& [mono, c] : other.terms) {
    auto it = terms.find(mono);
    if (it == terms.end()) {
      terms.emplace(mono, c);
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
  return *this;
}

BubblePoly BubblePoly::operator*(const BubblePoly& other) const {
  BubblePoly out;
  for (const auto& [m1, c1] : terms)
    for (const auto& [m2, c2] : other.terms) {
      BubbleMonomial mono = m1;
      for (auto [k, e] : m2) mono[k] += e;
      out += BubblePoly::monomial(std::move(mono), c1 * c2);
    }
  return out;
}

BubblePoly BubblePoly::operator*(const Rational& c) const {
  BubblePoly out;
  if (c == 0) return out;
  for (const auto& [mono, coeff] : terms) out.terms.emplace(mono, coeff * c);
  return out;
}

bool operator==(const BubblePoly& a, const BubblePoly& b) { return a.terms == b.terms; }

std::string to_string(const BubblePoly& p) {
  if (p.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : p.terms) {
    if (!first) os << " + ";
    os << to_string(c);
    for (auto [k, e] : mono) {
      os << "*D" << k;
      if (e > 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

BubblePoly delta_even_poly(int k) {
  if (k < 0) throw std::invalid_argument("negative bubble index");
  static std::mutex mu;
  static std::unordered_map<int, BubblePoly> memo;
  std::scoped_lock lock(mu);
  auto compute = [](auto&& self, int n) -> BubblePoly {
    if (n % 2 == 0) return BubblePoly::monomial({{n, 1}});
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    // 2 Delta_n = -Delta_{n-1} + sum_{j=1}^{n} (-1)^{j-1} Delta_{j-1} Delta_{n-j}
    BubblePoly acc = self(self, n - 1) * Rational(-1);
    for (int j = 1; j <= n; ++j) {
      Rational sign = (j % 2 == 1) ? Rational(1) : Rational(-1);
      acc += (self(self, j - 1) * self(self, n - j)) * sign;
    }
    BubblePoly result = acc * Rational(1, 2);
    memo.emplace(n, result);
    return result;
  };
  return compute(compute, k);
}

namespace {

// Delta_k reduced for a cyclotomic config: indices below a, all even.
BubblePoly delta_cyclotomic_poly(int k, const std::vector<Rational>& b) {
  const int a = static_cast<int>(b.size());
  auto reduce = [&](auto&& self, int n) -> BubblePoly {
    if (n < a) {
      if (n % 2 == 0) return BubblePoly::monomial({{n, 1}});
      // Odd small index: expand via the even recursion, then re-reduce each
      // even factor that still reaches past a.
      BubblePoly even = delta_even_poly(n);
      BubblePoly out;
      for (const auto& [mono, c] : even.terms) {
        BubblePoly piece = BubblePoly::constant(c);
        for (auto [i, e] : mono)
          for (int rep = 0; rep < e; ++rep) piece = piece * self(self, i);
        out += piece;
      }
      return out;
    }
    // Delta_n = -sum_{j=1}^{a} b_{a-j} Delta_{n-j}
    BubblePoly acc;
    for (int j = 1; j <= a; ++j) acc += self(self, n - j) * (-b[a - j]);
    return acc;
  };
  return reduce(reduce, k);
}

}  // namespace

BubblePoly reduce_bubble(int c, const CategoryConfig& config) {
  if (c < 0) throw std::invalid_argument("negative dot count");
  if (c > 0 && !config.dots_allowed())
    throw std::logic_error("dotted loop in a dot-free category");
  if (config.bubbles_specialized()) return BubblePoly::constant(config.omega_value(c));

  BubblePoly p;
  if (config.kind == CategoryKind::CBF)
    p = delta_cyclotomic_poly(c, config.b);
  else
    p = delta_even_poly(c);

  if (config.kind == CategoryKind::B0 || config.kind == CategoryKind::AB0) {
    // Specialize Delta_0 at omega_0, keep higher even bubbles formal.
    BubblePoly out;
    for (const auto& [mono, coeff] : p.terms) {
      BubbleMonomial m2 = mono;
      Rational c2 = coeff;
      auto it = m2.find(0);
      if (it != m2.end()) {
        for (int rep = 0; rep < it->second; ++rep) c2 *= *config.omega0;
        m2.erase(it);
      }
      out += BubblePoly::monomial(std::move(m2), std::move(c2));
    }
    return out;
  }
  return p;
}

BubblePoly normalize_monomial(const BubbleMonomial& mono, const CategoryConfig& config) {
  BubblePoly acc = BubblePoly::constant(Rational(1));
  for (auto [k, e] : mono)
    for (int rep = 0; rep < e; ++rep) acc = acc * reduce_bubble(k, config);
  return acc;
}

}  // namespace brauercat
