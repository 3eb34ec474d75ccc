#include "brauercat/lie_oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace brauercat {

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m{n, n, {}};
  for (int i = 0; i < n; ++i) m.entries.emplace(std::make_pair(i, i), Rational(1));
  return m;
}

Rational ExactMatrix::at(int r, int c) const {
  auto it = entries.find({r, c});
  return it == entries.end() ? Rational(0) : it->second;
}

void ExactMatrix::add_at(int r, int c, const Rational& v) {
  if (v == 0) return;
  auto it = entries.find({r, c});
  if (it == entries.end()) {
    entries.emplace(std::make_pair(r, c), v);
  } else {
    it->second += v;
    if (it->second == 0) entries.erase(it);
  }
}

ExactMatrix ExactMatrix::mul(const ExactMatrix& other) const {
  if (cols != other.rows) throw std::invalid_argument("matrix size mismatch");
  // Group the right factor by row for the sparse product.
  std::map<int, std::vector<std::pair<int, Rational>>> by_row;
  for (const auto& [rc, v] : other.entries) by_row[rc.first].emplace_back(rc.second, v);
  ExactMatrix out{rows, other.cols, {}};
  for (const auto& [rc, v] : entries) {
    auto it = by_row.find(rc.second);
    if (it == by_row.end()) continue;
    for (const auto& [c2, v2] : it->second) out.add_at(rc.first, c2, v * v2);
  }
  return out;
}

ExactMatrix ExactMatrix::kron(const ExactMatrix& other) const {
  ExactMatrix out{rows * other.rows, cols * other.cols, {}};
  for (const auto& [rc1, v1] : entries)
    for (const auto& [rc2, v2] : other.entries)
      out.entries.emplace(std::make_pair(rc1.first * other.rows + rc2.first,
                                         rc1.second * other.cols + rc2.second),
                          v1 * v2);
  return out;
}

ExactMatrix ExactMatrix::plus(const ExactMatrix& other, const Rational& scale) const {
  if (rows != other.rows || cols != other.cols)
    throw std::invalid_argument("matrix size mismatch");
  ExactMatrix out = *this;
  for (const auto& [rc, v] : other.entries) out.add_at(rc.first, rc.second, v * scale);
  return out;
}

ExactMatrix ExactMatrix::scaled(const Rational& c) const {
  ExactMatrix out{rows, cols, {}};
  if (c == 0) return out;
  for (const auto& [rc, v] : entries) out.entries.emplace(rc, v * c);
  return out;
}

bool ExactMatrix::operator==(const ExactMatrix& other) const {
  return rows == other.rows && cols == other.cols && entries == other.entries;
}

LieData::LieData(LieFamily kind, int N) : kind_(kind), N_(N) {
  if (N < 2) throw std::invalid_argument("need dim V >= 2");
  if (kind == LieFamily::Sp && N % 2 != 0)
    throw std::invalid_argument("sp_N needs even N");
  n_ = N / 2;
  eps_ = (kind == LieFamily::So) ? 1 : -1;
  for (int i = 1; i <= n_; ++i) indices_.push_back(i);
  if (N % 2 == 1) indices_.push_back(0);
  for (int i = n_; i >= 1; --i) indices_.push_back(-i);

  omega_pair_ = ExactMatrix::zero(N * N, N * N);
  for (int i : indices_)
    for (int j : indices_) {
      ExactMatrix a = F(i, j);
      ExactMatrix b = F(j, i);
      for (const auto& [rc1, v1] : a.entries)
        for (const auto& [rc2, v2] : b.entries)
          omega_pair_.add_at(rc1.first * N + rc2.first, rc1.second * N + rc2.second,
                             v1 * v2 * Rational(1, 2));
    }
}

int LieData::position(int index) const {
  for (size_t k = 0; k < indices_.size(); ++k)
    if (indices_[k] == index) return static_cast<int>(k);
  throw std::out_of_range("index not in underline-N");
}

Rational LieData::theta(int i, int j) const {
  if (kind_ == LieFamily::So) return Rational(1);
  auto sgn = [](int x) { return x >= 0 ? 1 : -1; };
  return Rational(sgn(i) * sgn(j));
}

ExactMatrix LieData::F(int i, int j) const {
  ExactMatrix m = ExactMatrix::zero(N_, N_);
  m.add_at(position(i), position(j), Rational(1));
  m.add_at(position(-j), position(-i), -theta(i, j));
  return m;
}

Rational LieData::gram(int i, int j) const {
  if (i + j != 0) return Rational(0);
  if (i >= 0) return Rational(1);
  return Rational(eps_);
}

Rational LieData::dual_coeff(int i) const { return i > 0 ? Rational(eps_) : Rational(1); }

LieData build_lie(LieFamily kind, int N) { return LieData(kind, N); }

namespace {

int int_pow(int base, int exp) {
  int out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

// Places a two-site operator on tensor factors (l, k), l < k, of V^{(x)w}.
ExactMatrix place_two_site(const ExactMatrix& op, int l, int k, int w, int N) {
  const int total = int_pow(N, w);
  ExactMatrix out = ExactMatrix::zero(total, total);
  const int left = int_pow(N, l - 1);
  const int mid = int_pow(N, k - l - 1);
  const int right = int_pow(N, w - k);
  for (const auto& [rc, v] : op.entries) {
    int r1 = rc.first / N, r2 = rc.first % N;
    int c1 = rc.second / N, c2 = rc.second % N;
    for (int a = 0; a < left; ++a)
      for (int b = 0; b < mid; ++b)
        for (int c = 0; c < right; ++c) {
          int row = ((a * N + r1) * mid + b) * N + r2;
          int col = ((a * N + c1) * mid + b) * N + c2;
          out.add_at(row * right + c, col * right + c, v);
        }
  }
  return out;
}

ExactMatrix cup_column(const LieData& lie) {
  const int N = lie.dim();
  ExactMatrix col = ExactMatrix::zero(N * N, 1);
  for (int i : lie.index_set())
    col.add_at(lie.position(i) * N + lie.position(-i), 0, lie.dual_coeff(i));
  return col;
}

ExactMatrix cap_row(const LieData& lie) {
  const int N = lie.dim();
  ExactMatrix row = ExactMatrix::zero(1, N * N);
  for (int i : lie.index_set())
    for (int j : lie.index_set())
      row.add_at(0, lie.position(i) * N + lie.position(j), lie.gram(i, j));
  return row;
}

ExactMatrix swap_matrix(const LieData& lie) {
  const int N = lie.dim();
  ExactMatrix m = ExactMatrix::zero(N * N, N * N);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) m.add_at(b * N + a, a * N + b, Rational(lie.eps()));
  return m;
}

}  // namespace

ExactMatrix x_matrix(int k, int r, const LieData& lie) {
  if (k < 1 || k > r) throw std::out_of_range("strand index");
  const int N = lie.dim();
  const int total = int_pow(N, r);
  Rational shift = Rational(N - lie.eps(), 2);
  ExactMatrix acc = ExactMatrix::identity(total).scaled(shift);
  for (int l = 1; l < k; ++l) acc = acc.plus(place_two_site(lie.omega_pair(), l, k, r, N));
  return acc.scaled(Rational(lie.eps()));
}

ExactMatrix phi_matrix(const Slice& slice, int width, const LieData& lie) {
  const int N = lie.dim();
  const int p = slice.pos;
  auto pad = [&](const ExactMatrix& local, int legs_in) {
    ExactMatrix left = ExactMatrix::identity(int_pow(N, p - 1));
    ExactMatrix right = ExactMatrix::identity(int_pow(N, width - p + 1 - legs_in));
    return left.kron(local).kron(right);
  };
  switch (slice.kind) {
    case Slice::Kind::Cup:
      return pad(cup_column(lie), 0);
    case Slice::Kind::Cap:
      return pad(cap_row(lie), 2);
    case Slice::Kind::Cross:
      return pad(swap_matrix(lie), 2);
    case Slice::Kind::Dot:
      return x_matrix(p, width, lie);
  }
  throw std::logic_error("bad slice");
}

Rational delta_specialization(int k, const LieData& lie) {
  Rational base = Rational(lie.eps()) * Rational(lie.dim() - lie.eps(), 2);
  Rational out = Rational(lie.eps() * lie.dim());
  for (int i = 0; i < k; ++i) out *= base;
  return out;
}

ExactMatrix psi_word(const GeneratorWord& word, const LieData& lie) {
  validate_word(word);
  int width = word.input_width;
  ExactMatrix acc = ExactMatrix::identity(int_pow(lie.dim(), width));
  for (const Slice& slice : word.slices) {
    acc = phi_matrix(slice, width, lie).mul(acc);
    if (slice.kind == Slice::Kind::Cup) width += 2;
    if (slice.kind == Slice::Kind::Cap) width -= 2;
  }
  return acc;
}

ExactMatrix psi(const Morphism& f, const LieData& lie) {
  const int N = lie.dim();
  ExactMatrix acc = ExactMatrix::zero(int_pow(N, f.target), int_pow(N, f.source));
  for (const auto& [key, c] : f.terms) {
    NormalDiagram bare = key;
    bare.bubbles.clear();
    Rational coeff = c;
    for (auto [k, e] : key.bubbles)
      for (int i = 0; i < e; ++i) coeff *= delta_specialization(k, lie);
    acc = acc.plus(psi_word(diagram_word(bare), lie), coeff);
  }
  return acc;
}

bool functor_check_compose(const Morphism& g, const Morphism& f, const LieData& lie) {
  return psi(compose(g, f), lie) == psi(g, lie).mul(psi(f, lie));
}

bool functor_check_tensor(const Morphism& f, const Morphism& g, const LieData& lie) {
  return psi(tensor(f, g), lie) == psi(f, lie).kron(psi(g, lie));
}

std::shared_ptr<const OmegaSequence> omega_from_lie(const LieData& lie) {
  const int eps = lie.eps();
  const int N = lie.dim();
  return std::make_shared<OmegaSequence>(
      [eps, N](int k) {
        Rational base = Rational(eps) * Rational(N - eps, 2);
        Rational out(eps * N);
        for (int i = 0; i < k; ++i) out *= base;
        return out;
      },
      OmegaSequence::Provenance::FunctorSpecialized);
}

}  // namespace brauercat
