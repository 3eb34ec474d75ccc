#include "brauercat/admissible.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace brauercat {

namespace {

// Dense truncated power series in one variable, exact coefficients.
struct Series {
  std::vector<Rational> c;  // c[i] = coefficient of t^i

  static Series one(int order) {
    Series s;
    s.c.assign(order + 1, Rational(0));
    s.c[0] = 1;
    return s;
  }

  int order() const { return static_cast<int>(c.size()) - 1; }

  Series mul(const Series& other) const {
    Series out;
    out.c.assign(order() + 1, Rational(0));
    for (int i = 0; i <= order(); ++i) {
      if (c[i] == 0) continue;
      for (int j = 0; i + j <= order() && j <= other.order(); ++j)
        out.c[i + j] += c[i] * other.c[j];
    }
    return out;
  }

  // Division when other has invertible constant term.
  Series div(const Series& other) const {
    if (other.c.empty() || other.c[0] == 0)
      throw std::invalid_argument("series division by non-unit");
    Series out;
    out.c.assign(order() + 1, Rational(0));
    for (int i = 0; i <= order(); ++i) {
      Rational acc = c[i];
      for (int j = 1; j <= i && j <= other.order(); ++j) acc -= other.c[j] * out.c[i - j];
      out.c[i] = acc / other.c[0];
    }
    return out;
  }
};

// prod_i (1 + u_i t)/(1 - u_i t) expanded to the given order.
Series schur_q_series(const RootList& roots, int order) {
  Series s = Series::one(order);
  for (const Rational& u : roots.u) {
    Series num = Series::one(order);
    Series den = Series::one(order);
    if (order >= 1) {
      num.c[1] = u;
      den.c[1] = -u;
    }
    s = s.mul(num).div(den);
  }
  return s;
}

}  // namespace

std::vector<Rational> f_coefficients(const RootList& roots) {
  // Expand prod(t - u_i) and drop the leading 1.
  std::vector<Rational> poly{Rational(1)};  // coefficients, low degree first
  for (const Rational& u : roots.u) {
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= u * poly[i];
    }
    poly = std::move(next);
  }
  poly.pop_back();
  return poly;
}

Rational schur_q(const RootList& roots, int k) {
  if (k < 0) throw std::invalid_argument("negative index");
  return schur_q_series(roots, k).c[k];
}

OmegaSequence::OmegaSequence(std::function<Rational(int)> eval, Provenance provenance)
    : eval_(std::move(eval)), provenance_(provenance) {}

std::shared_ptr<const OmegaSequence> OmegaSequence::explicit_values(std::vector<Rational> values) {
  return std::make_shared<OmegaSequence>(
      [values = std::move(values)](int k) {
        return k < static_cast<int>(values.size()) ? values[k] : Rational(0);
      },
      Provenance::Explicit);
}

Rational OmegaSequence::at(int k) const {
  if (k < 0) throw std::invalid_argument("negative index");
  static std::mutex mu;
  std::scoped_lock lock(mu);
  auto it = memo_.find(k);
  if (it != memo_.end()) return it->second;
  Rational v = eval_(k);
  memo_.emplace(k, v);
  return v;
}

std::shared_ptr<const OmegaSequence> omega_from_u(const RootList& roots) {
  const int a = roots.degree();
  const Rational half(1, 2);
  const Rational sign = (a % 2 == 0) ? Rational(1) : Rational(-1);
  return std::make_shared<OmegaSequence>(
      [roots, half, sign](int k) {
        Rational w = schur_q(roots, k + 1) - half * sign * schur_q(roots, k);
        if (k == 0) w += half;
        return w;
      },
      OmegaSequence::Provenance::FromU);
}

bool check_admissible(const OmegaSequence& omega, int depth) {
  for (int k = 1; k <= depth; k += 2) {
    Rational rhs = -omega.at(k - 1);
    for (int j = 1; j <= k; ++j) {
      Rational term = omega.at(j - 1) * omega.at(k - j);
      rhs += (j % 2 == 1) ? term : -term;
    }
    if (Rational(2) * omega.at(k) != rhs) return false;
  }
  return true;
}

bool check_weakly_admissible(const OmegaSequence& omega, const RootList& roots, int depth) {
  if (!check_admissible(omega, depth)) return false;
  const auto b = f_coefficients(roots);
  const int a = roots.degree();
  for (int k = a; k <= depth; ++k) {
    Rational rhs(0);
    for (int j = 1; j <= a; ++j) rhs -= b[a - j] * omega.at(k - j);
    if (omega.at(k) != rhs) return false;
  }
  return true;
}

bool check_u_admissible_series(const RootList& roots, const OmegaSequence& omega, int order) {
  // Substitute v = 1/u and compare coefficients of v^0..v^order of
  //   v * LHS = 1 - v/2 + sum_i omega_i v^{i+1}
  //   v * RHS = (1 - (1/2)(-1)^a v) prod_i (1 + u_i v)/(1 - u_i v).
  Series lhs = Series::one(order);
  if (order >= 1) lhs.c[1] = Rational(-1, 2);
  for (int i = 0; i + 1 <= order; ++i) lhs.c[i + 1] += omega.at(i);

  Series factor = Series::one(order);
  if (order >= 1)
    factor.c[1] = (roots.degree() % 2 == 0) ? Rational(-1, 2) : Rational(1, 2);
  Series rhs = schur_q_series(roots, order).mul(factor);
  return lhs.c == rhs.c;
}

RootList lie_parameters(LieKind kind, const std::vector<int>& q, const std::vector<Rational>& c,
                        ParabolicFamily which) {
  const int k = static_cast<int>(q.size());
  if (k == 0) throw std::invalid_argument("need at least one block");
  if (c.size() != q.size()) throw std::invalid_argument("length mismatch between q and c");
  for (int qi : q)
    if (qi <= 0) throw std::invalid_argument("block sizes must be positive");
  if (which == ParabolicFamily::I2 && c.back() != 0)
    throw std::invalid_argument("last weight must vanish for the I2 family");

  std::vector<int> p(k + 1, 0);  // partial sums, p[0] = 0
  for (int j = 1; j <= k; ++j) p[j] = p[j - 1] + q[j - 1];
  const int n = p[k];

  std::vector<Rational> u;
  const Rational half(1, 2);
  if (kind == LieKind::SoOdd) {
    // Degrees 2k+1 (I1) with u_{k+1} = 0, or 2k-1 (I2) dropping u_{k+1}, u_{k+2}.
    for (int j = 1; j <= 2 * k + 1; ++j) {
      Rational uj;
      if (j <= k)
        uj = c[j - 1] - p[j - 1] + n;
      else if (j == k + 1)
        uj = 0;
      else
        uj = -c[2 * k - j + 1] + p[2 * k - j + 2] - n;
      u.push_back(uj);
    }
    if (which == ParabolicFamily::I2) u.erase(u.begin() + k, u.begin() + k + 2);
  } else {
    const Rational eps = (kind == LieKind::Sp) ? Rational(-1) : Rational(1);
    for (int j = 1; j <= 2 * k; ++j) {
      Rational uj;
      if (j <= k)
        uj = eps * (c[j - 1] - p[j - 1] + half * (2 * n - eps));
      else
        uj = eps * (-c[2 * k - j] + p[2 * k - j + 1] - half * (2 * n - eps));
      u.push_back(uj);
    }
    if (which == ParabolicFamily::I2) u.erase(u.begin() + k);
  }
  return RootList{std::move(u)};
}

std::string roots_to_json(const RootList& roots) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < roots.u.size(); ++i)
    os << (i ? "," : "") << "\"" << to_string(roots.u[i]) << "\"";
  os << "]";
  return os.str();
}

std::string omega_to_json(const OmegaSequence& omega, int count) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < count; ++i) os << (i ? "," : "") << "\"" << to_string(omega.at(i)) << "\"";
  os << "]";
  return os.str();
}

}  // namespace brauercat
