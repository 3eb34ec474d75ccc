#pragma once

#include <string>
#include <vector>

#include "brauercat/engine.hpp"

namespace brauercat {

// A word in the endomorphism-algebra generators of End(r): e_i, s_i, x_j and
// scalars, read bottom to top.
struct NWLetter {
  enum class Kind { E, S, X, Scalar } kind;
  int index = 0;  // e/s: 1..r-1, x: 1..r
  Rational scalar = Rational(1);
};

struct NWWord {
  int r = 0;
  std::vector<NWLetter> letters;

  NWWord& e(int i);
  NWWord& s(int i);
  NWWord& x(int j);
  NWWord& times(Rational c);
};

Morphism nw_element(const NWWord& word, const CategoryConfig& config);

// Multiplies every term by a bubble polynomial (a central scalar of End(0)).
Morphism bubble_scale(const Morphism& f, const BubblePoly& value);

struct RelationResult {
  std::string name;
  bool holds = false;
  bool expected = true;  // whether the presentation asserts this relation
  std::string detail;    // normal form of the difference when it fails
};

struct NWReport {
  std::vector<RelationResult> results;
  bool all_expected_hold = true;
  // Which of the two candidate forms of the e e e relations is an identity.
  std::string triple_e_resolution;
};

// Evaluates the defining relations of the r-strand algebra through the
// engine, including both candidate forms of the e_i e_{i+1} e_i relations.
NWReport verify_nw_relations(int r, const CategoryConfig& config);

// One word per basis diagram of End(r) with < a dots per strand; evaluating
// the word reproduces the diagram exactly.
std::vector<NWWord> regular_monomials(int a, int r);

struct MultiplicationTable {
  std::vector<NormalDiagram> basis;
  // table[i][j] = coefficients of basis[i] o basis[j] over the basis.
  std::vector<std::vector<std::vector<Rational>>> table;
  bool closed = true;             // every product stayed inside the basis
  bool admissibility_warning = false;
};

MultiplicationTable multiplication_table(int a, int r, const CategoryConfig& config);

std::string table_to_json(const MultiplicationTable& table);

}  // namespace brauercat
