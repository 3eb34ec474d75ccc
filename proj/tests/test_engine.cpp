#include <vector>

#include "brauercat/engine.hpp"
#include "brauercat/expr.hpp"
#include "doctest.h"
#include "test_helpers.hpp"

using namespace brauercat;
using brauercat::testing::rand_int;
using brauercat::testing::random_morphism;
using brauercat::testing::random_word;

namespace {

Morphism ev(const std::string& text, const CategoryConfig& cfg) {
  return evaluate(parse(text), cfg);
}

Morphism minus(const Morphism& a, const Morphism& b) { return add(a, scale(b, Rational(-1))); }

// Nested cups eta_m in Hom(0,2m) and caps eps_m in Hom(2m,0).
Morphism eta(int m, const CategoryConfig& cfg) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= m; ++i) pairs.emplace_back(i, 2 * m + 1 - i);
  Morphism out = zero_morphism(0, 2 * m, cfg);
  out.terms.emplace(make_diagram(canonicalize(pairs, 0, 2 * m)), Rational(1));
  return out;
}

Morphism epsilon(int m, const CategoryConfig& cfg) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= m; ++i) pairs.emplace_back(i, 2 * m + 1 - i);
  Morphism out = zero_morphism(2 * m, 0, cfg);
  out.terms.emplace(make_diagram(canonicalize(pairs, 2 * m, 0)), Rational(1));
  return out;
}

std::vector<CategoryConfig> test_configs() {
  return {
      CategoryConfig::affine(),
      CategoryConfig::affine_specialized(Rational(1, 3)),
      CategoryConfig::affine_omega(omega_from_u(RootList{{Rational(1), Rational(2)}})),
      CategoryConfig::cyclotomic_specialized(RootList{{Rational(1), Rational(2)}}),
  };
}

}  // namespace

TEST_CASE("defining relations hold in the affine category") {
  auto ab = CategoryConfig::affine();

  CHECK(ev("S ; S", ab) == identity(2, ab));
  CHECK(ev("S*id(1) ; id(1)*S ; S*id(1)", ab) == ev("id(1)*S ; S*id(1) ; id(1)*S", ab));
  CHECK(ev("U*id(1) ; id(1)*A", ab) == identity(1, ab));
  CHECK(ev("id(1)*U ; A*id(1)", ab) == identity(1, ab));
  CHECK(ev("U ; S", ab) == ev("U", ab));
  CHECK(ev("S ; A", ab) == ev("A", ab));
  CHECK(ev("id(1)*S ; A*id(1)", ab) == ev("S*id(1) ; id(1)*A", ab));
  CHECK(ev("id(1)*U ; S*id(1)", ab) == ev("U*id(1) ; id(1)*S", ab));

  // (X x 1) S - S (1 x X) = U A - 1
  CHECK(minus(ev("S ; X*id(1)", ab), ev("id(1)*X ; S", ab)) ==
        minus(ev("A ; U", ab), identity(2, ab)));
  // (1 x A)(1 x X x 1)(U x 1) = -X = (A x 1)(1 x X x 1)(1 x U)
  CHECK(ev("U*id(1) ; id(1)*X*id(1) ; id(1)*A", ab) == scale(ev("X", ab), Rational(-1)));
  CHECK(ev("id(1)*U ; id(1)*X*id(1) ; A*id(1)", ab) == scale(ev("X", ab), Rational(-1)));
}

TEST_CASE("dot sign rules on cups and caps") {
  auto ab = CategoryConfig::affine();
  CHECK(ev("U ; X*id(1)", ab) == scale(ev("U ; id(1)*X", ab), Rational(-1)));
  CHECK(ev("X*id(1) ; A", ab) == scale(ev("id(1)*X ; A", ab), Rational(-1)));
}

TEST_CASE("slide relations, both forms") {
  auto ab = CategoryConfig::affine();
  // S (X x 1) - (1 x X) S = U A - 1
  CHECK(minus(ev("X*id(1) ; S", ab), ev("S ; id(1)*X", ab)) ==
        minus(ev("A ; U", ab), identity(2, ab)));
  // (1 x X) = S (X x 1) S + S - U A
  CHECK(ev("id(1)*X", ab) ==
        add(ev("S ; X*id(1) ; S", ab), minus(ev("S", ab), ev("A ; U", ab))));
}

TEST_CASE("zig-zag contractions up to three strands") {
  for (const auto& cfg : test_configs()) {
    for (int m = 1; m <= 3; ++m) {
      Morphism id_m = identity(m, cfg);
      CHECK(compose(tensor(id_m, epsilon(m, cfg)), tensor(eta(m, cfg), id_m)) == id_m);
      CHECK(compose(tensor(epsilon(m, cfg), id_m), tensor(id_m, eta(m, cfg))) == id_m);
    }
  }
}

TEST_CASE("loops become bubbles") {
  auto ab = CategoryConfig::affine();
  CHECK(ev("U ; A", ab) == scalar_morphism(BubblePoly::monomial({{0, 1}}), ab));

  auto b5 = CategoryConfig::brauer_specialized(Rational(5));
  CHECK(ev("U ; A", b5) == scale(identity(0, b5), Rational(5)));

  // Bubbles are central: Delta_0 id_1 (x) U carries the bubble on the key.
  Morphism d0_id = zero_morphism(1, 1, ab);
  d0_id.terms.emplace(make_diagram(canonicalize({{1, 2}}, 1, 1), {0}, {0}, {{0, 1}}),
                      Rational(1));
  Morphism lhs = tensor(d0_id, ev("U", ab));
  CHECK(lhs.term_count() == 1);
  CHECK(lhs.terms.begin()->first.bubbles == BubbleMonomial{{0, 1}});
  CHECK(lhs.terms.begin()->first.matching.pairs ==
        std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});
}

TEST_CASE("generator construction") {
  auto ab = CategoryConfig::affine();
  Morphism cup = generator(Generator::Cup, ab);
  CHECK(cup.source == 0);
  CHECK(cup.target == 2);
  CHECK(to_string(cup) == "1 * [pairs=[(1,2)] top=[0,0]]");
  Morphism dot = generator(Generator::Dot, ab);
  CHECK(to_string(dot) == "1 * [pairs=[(1,2)] top=[1] bot=[0]]");
  Morphism id3 = identity(3, ab);
  CHECK(id3.terms.begin()->first.matching.pairs ==
        std::vector<std::pair<int, int>>{{1, 4}, {2, 5}, {3, 6}});

  // Degree-one quotient: the dot is already a scalar.
  auto cbf1 = CategoryConfig::cyclotomic_specialized(RootList{{Rational(7, 3)}});
  CHECK(generator(Generator::Dot, cbf1) == scale(identity(1, cbf1), Rational(7, 3)));
}

TEST_CASE("composition examples") {
  auto ab = CategoryConfig::affine();
  CHECK(compose(generator(Generator::Cross, ab), generator(Generator::Cross, ab)) ==
        identity(2, ab));
  CHECK(compose(generator(Generator::Cross, ab), generator(Generator::Cup, ab)) ==
        generator(Generator::Cup, ab));
  CHECK(ev("U ; A", ab) == scalar_morphism(reduce_bubble(0, ab), ab));
  CHECK_THROWS_AS(compose(generator(Generator::Cup, ab), generator(Generator::Cup, ab)),
                  std::invalid_argument);
}

TEST_CASE("tensor examples") {
  auto ab = CategoryConfig::affine();
  CHECK(tensor(identity(1, ab), identity(1, ab)) == identity(2, ab));
  Morphism uu = tensor(generator(Generator::Cup, ab), generator(Generator::Cup, ab));
  CHECK(uu.terms.begin()->first.matching.pairs ==
        std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});
  auto b = CategoryConfig::brauer();
  CHECK_THROWS_AS(tensor(identity(1, ab), identity(1, b)), std::invalid_argument);
}

TEST_CASE("dot relocation across interleaved cups, oracle-frozen") {
  auto ab = CategoryConfig::affine();
  // x_1 on pairs {(1,3),(2,4)}: the correction terms carry no dots.
  Morphism d = ev("U*U ; id(1)*S*id(1)", ab);
  Morphism got = apply_slice(d, {Slice::Kind::Dot, 1});

  Morphism expect = zero_morphism(0, 4, ab);
  expect.terms.emplace(make_diagram(canonicalize({{1, 3}, {2, 4}}, 0, 4), {0, 0, 1, 0}),
                       Rational(-1));
  expect.terms.emplace(make_diagram(canonicalize({{1, 2}, {3, 4}}, 0, 4)), Rational(1));
  expect.terms.emplace(make_diagram(canonicalize({{1, 4}, {2, 3}}, 0, 4)), Rational(-1));
  CHECK(got == expect);

  // Dot already at its home just increments.
  Morphism at_home = apply_slice(d, {Slice::Kind::Dot, 3});
  CHECK(at_home.term_count() == 1);
  CHECK(at_home.terms.begin()->second == 1);

  // Adjacent cup: a single sign flip.
  Morphism cup = generator(Generator::Cup, ab);
  CHECK(apply_slice(cup, {Slice::Kind::Dot, 1}) ==
        scale(apply_slice(cup, {Slice::Kind::Dot, 2}), Rational(-1)));
}

TEST_CASE("cap slices over dotted strands") {
  auto ab = CategoryConfig::affine();
  // Closing the dotted cup from the left leg gives Delta_1 exactly.
  GeneratorWord w;
  w.input_width = 0;
  w.append({Slice::Kind::Cup, 1});
  w.append({Slice::Kind::Dot, 1});
  w.append({Slice::Kind::Cap, 1});
  CHECK(normal_form(w, ab) == scalar_morphism(delta_even_poly(1), ab));

  // Closing from the right leg flips the sign.
  GeneratorWord w2;
  w2.input_width = 0;
  w2.append({Slice::Kind::Cup, 1});
  w2.append({Slice::Kind::Dot, 2});
  w2.append({Slice::Kind::Cap, 1});
  CHECK(normal_form(w2, ab) == scalar_morphism(delta_even_poly(1) * Rational(-1), ab));

  // Cap over a vertical-vertical pair routes dots to the bottom-left home.
  auto got = apply_slice(apply_slice(identity(2, ab), {Slice::Kind::Dot, 2}),
                         {Slice::Kind::Cap, 1});
  Morphism expect = zero_morphism(2, 0, ab);
  expect.terms.emplace(make_diagram(canonicalize({{1, 2}}, 2, 0), {}, {1, 0}), Rational(-1));
  CHECK(got == expect);
}

TEST_CASE("cyclotomic dot overflow") {
  auto a1 = CategoryConfig::cyclotomic_specialized(RootList{{Rational(4)}});
  CHECK(ev("X", a1) == scale(identity(1, a1), Rational(4)));

  auto a2 = CategoryConfig::cyclotomic_specialized(RootList{{Rational(1), Rational(2)}});
  CHECK(ev("X ; X", a2) == minus(scale(ev("X", a2), Rational(3)),
                                 scale(identity(1, a2), Rational(2))));

  // x_2^2 in End(2) stays inside the 12-element basis.
  Morphism x2sq = ev("id(1)*X ; id(1)*X", a2);
  auto basis = enumerate_nd_basis(2, 2, 2, false);
  for (const auto& [key, c] : x2sq.terms)
    CHECK(std::find(basis.begin(), basis.end(), key) != basis.end());
  CHECK_FALSE(x2sq.is_zero());
}

TEST_CASE("bending is inverse and degree-preserving") {
  auto ab = CategoryConfig::affine();
  CHECK(bend_up(identity(1, ab)) == generator(Generator::Cup, ab));
  CHECK(bend_down(generator(Generator::Cup, ab), 1) == identity(1, ab));

  Morphism bent_dot = bend_up(ev("X", ab));
  Morphism expect = zero_morphism(0, 2, ab);
  expect.terms.emplace(make_diagram(canonicalize({{1, 2}}, 0, 2), {0, 1}), Rational(-1));
  CHECK(bent_dot == expect);

  for (int trial = 0; trial < 30; ++trial) {
    int total = 2 * rand_int(1, 3);
    int m = rand_int(1, total);
    int s = total - m;
    Morphism f = random_morphism(m, s, ab, 3, 3);
    Morphism up = bend_up(f);
    CHECK(degree(up) == degree(f));
    CHECK(bend_down(up, m) == f);
  }
}

TEST_CASE("associativity on random basis triples") {
  for (const auto& cfg : test_configs()) {
    for (int trial = 0; trial < 60; ++trial) {
      int a = rand_int(0, 3), b = rand_int(0, 3), c = rand_int(0, 3), d = rand_int(0, 3);
      if ((a + b) % 2 || (b + c) % 2 || (c + d) % 2) continue;
      Morphism f = random_morphism(a, b, cfg);
      Morphism g = random_morphism(b, c, cfg);
      Morphism h = random_morphism(c, d, cfg);
      CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
    }
  }
}

TEST_CASE("interchange law on random quadruples") {
  for (const auto& cfg : test_configs()) {
    for (int trial = 0; trial < 40; ++trial) {
      int a = rand_int(0, 2), b = rand_int(0, 2), c = rand_int(0, 2);
      int m = rand_int(0, 2), n = rand_int(0, 2), t = rand_int(0, 2);
      if ((a + b) % 2 || (b + c) % 2 || (m + n) % 2 || (n + t) % 2) continue;
      Morphism k = random_morphism(a, b, cfg);
      Morphism f = random_morphism(b, c, cfg);
      Morphism h = random_morphism(m, n, cfg);
      Morphism g = random_morphism(n, t, cfg);
      CHECK(compose(tensor(f, g), tensor(k, h)) == tensor(compose(f, k), compose(g, h)));
    }
  }
}

TEST_CASE("normalization never raises the dot degree") {
  auto ab = CategoryConfig::affine();
  for (int trial = 0; trial < 60; ++trial) {
    GeneratorWord w = random_word(rand_int(0, 2) * 2, rand_int(2, 8), 6, 4);
    int dots = 0;
    for (const auto& s : w.slices)
      if (s.kind == Slice::Kind::Dot) ++dots;
    CHECK(degree(normal_form(w, ab)) <= dots);
  }
}

TEST_CASE("two slicings of every small matching normalize identically") {
  auto ab = CategoryConfig::affine();
  for (int total = 2; total <= 6; total += 2)
    for (int m = 0; m <= total; ++m) {
      int s = total - m;
      for (const Matching& mt : enumerate_matchings(m, s)) {
        GeneratorWord w1 = slice_matching(mt);
        GeneratorWord w2 = slice_matching_alt(mt);
        Morphism a = normal_form(w1, ab);
        CHECK(a == normal_form(w2, ab));
        REQUIRE(a.term_count() == 1);
        CHECK(a.terms.begin()->first.matching == mt);
        CHECK(a.terms.begin()->second == 1);
      }
    }
}

TEST_CASE("odd hom spaces vanish") {
  auto ab = CategoryConfig::affine();
  Morphism z = zero_morphism(1, 2, ab);
  CHECK(z.is_zero());
  CHECK(compose(zero_morphism(2, 1, ab), z).is_zero());
  CHECK(tensor(z, identity(1, ab)).is_zero());
  CHECK(apply_slice(z, {Slice::Kind::Cup, 1}).is_zero());
}
