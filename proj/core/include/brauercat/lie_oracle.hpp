#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "brauercat/admissible.hpp"
#include "brauercat/diagram.hpp"
#include "brauercat/engine.hpp"
#include "brauercat/scalar.hpp"

namespace brauercat {

// Sparse exact matrix; rows/cols indexed from 0.
struct ExactMatrix {
  int rows = 0;
  int cols = 0;
  std::map<std::pair<int, int>, Rational> entries;

  static ExactMatrix identity(int n);
  static ExactMatrix zero(int r, int c) { return ExactMatrix{r, c, {}}; }

  Rational at(int r, int c) const;
  void add_at(int r, int c, const Rational& v);

  ExactMatrix mul(const ExactMatrix& other) const;
  ExactMatrix kron(const ExactMatrix& other) const;
  ExactMatrix plus(const ExactMatrix& other, const Rational& scale = Rational(1)) const;
  ExactMatrix scaled(const Rational& c) const;

  bool operator==(const ExactMatrix& other) const;
};

enum class LieFamily { So, Sp };

// The data of so_N or sp_N acting on its natural module V: the index set,
// the spanning matrices F_{i,j}, and the invariant bilinear form.
class LieData {
 public:
  LieData(LieFamily kind, int N);

  LieFamily family() const { return kind_; }
  int dim() const { return N_; }
  int rank() const { return n_; }
  int eps() const { return eps_; }
  const std::vector<int>& index_set() const { return indices_; }

  int position(int index) const;        // basis slot of v_index
  Rational theta(int i, int j) const;   // sign in F_{i,j} = E_{i,j} - theta E_{-j,-i}
  ExactMatrix F(int i, int j) const;
  Rational gram(int i, int j) const;    // (v_i, v_j)
  Rational dual_coeff(int i) const;     // v_i^* = dual_coeff(i) * v_{-i}

  // Two-site Casimir pairing Omega = (1/2) sum F_{i,j} (x) F_{j,i} on V (x) V.
  const ExactMatrix& omega_pair() const { return omega_pair_; }

 private:
  LieFamily kind_;
  int N_;
  int n_;
  int eps_;
  std::vector<int> indices_;
  ExactMatrix omega_pair_;
};

LieData build_lie(LieFamily kind, int N);

// Matrix of one generator layer on tensor powers of V.
ExactMatrix phi_matrix(const Slice& slice, int width, const LieData& lie);

// X_k on V^{(x)r} over the trivial base module:
// eps * (sum_{l<k} Omega_{l,k} + (1/2)(N - eps)).
ExactMatrix x_matrix(int k, int r, const LieData& lie);

// Scalar action of Delta_k: eps*N*(eps(N-eps)/2)^k.
Rational delta_specialization(int k, const LieData& lie);

// Evaluates a generator word slice by slice, bottom to top.
ExactMatrix psi_word(const GeneratorWord& word, const LieData& lie);

// Evaluates a normalized morphism term by term (bubbles specialize to scalars).
ExactMatrix psi(const Morphism& f, const LieData& lie);

bool functor_check_compose(const Morphism& g, const Morphism& f, const LieData& lie);
bool functor_check_tensor(const Morphism& f, const Morphism& g, const LieData& lie);

// The omega sequence this functor realizes.
std::shared_ptr<const OmegaSequence> omega_from_lie(const LieData& lie);

}  // namespace brauercat
