#pragma once

#include <map>
#include <string>
#include <vector>

#include "brauercat/bubble.hpp"
#include "brauercat/config.hpp"
#include "brauercat/diagram.hpp"
#include "brauercat/scalar.hpp"

namespace brauercat {

// A Hom(m,s) element written in the normally ordered basis with exact
// rational coefficients. Zero morphisms have an empty term map.
struct Morphism {
  int source = 0;
  int target = 0;
  CategoryConfig config;
  std::map<NormalDiagram, Rational> terms;

  bool is_zero() const { return terms.empty(); }
  int term_count() const { return static_cast<int>(terms.size()); }
};

bool operator==(const Morphism& a, const Morphism& b);
std::string to_string(const Morphism& f);

enum class Generator { Cup, Cap, Cross, Dot };

Morphism generator(Generator kind, const CategoryConfig& config);
Morphism identity(int n, const CategoryConfig& config);
Morphism zero_morphism(int m, int s, const CategoryConfig& config);
// Hom(0,0) element given by a bubble polynomial (re-normalized for config).
Morphism scalar_morphism(const BubblePoly& value, const CategoryConfig& config);

Morphism add(const Morphism& f, const Morphism& g);
Morphism scale(const Morphism& f, const Rational& c);

// Horizontal juxtaposition; bilinear.
Morphism tensor(const Morphism& f, const Morphism& g);

// g after f (vertical stacking, f at the bottom). Requires f.target == g.source.
Morphism compose(const Morphism& g, const Morphism& f);

// Composes one generator layer onto the top row of the morphism.
Morphism apply_slice(const Morphism& f, const Slice& slice);

// Folds a generator word over the identity of its input width.
Morphism normal_form(const GeneratorWord& word, const CategoryConfig& config);

// Mutually inverse isomorphisms Hom(m,s) ~ Hom(0,m+s) given by composing
// with nested cups/caps on the bottom row.
Morphism bend_up(const Morphism& f);
Morphism bend_down(const Morphism& g, int m);

// Largest total dot degree over the terms (-1 for the zero morphism).
int degree(const Morphism& f);

}  // namespace brauercat
