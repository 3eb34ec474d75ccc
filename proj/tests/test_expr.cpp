#include "brauercat/expr.hpp"
#include "doctest.h"

using namespace brauercat;

TEST_CASE("grammar and arity") {
  CHECK(arity(parse("U ; S")) == std::pair<int, int>{0, 2});
  CHECK(arity(parse("X^3")) == std::pair<int, int>{1, 1});
  CHECK(arity(parse("id(2) * A")) == std::pair<int, int>{4, 2});
  CHECK(arity(parse("(U * U) ; (id(1) * S * id(1))")) == std::pair<int, int>{0, 4});
  CHECK(arity(parse("  U;S  ")) == std::pair<int, int>{0, 2});  // whitespace-insensitive

  CHECK_THROWS_AS(arity(parse("id(1) * A ; A")), ArityError);
  CHECK_THROWS_AS(arity(parse("U^2")), ArityError);  // not an endomorphism
}

TEST_CASE("parse errors carry positions") {
  try {
    parse("U ; ; S");
    FAIL("expected throw");
  } catch (const ParseError& e) {
    CHECK(e.position == 4);
  }
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("U @"), ParseError);
  CHECK_THROWS_AS(parse("(U ; S"), ParseError);
  CHECK_THROWS_AS(parse("id(x)"), ParseError);
}

TEST_CASE("format round-trips through the evaluator") {
  auto ab = CategoryConfig::affine();
  for (const char* text : {"U ; S", "X^3", "U * U ; id(1) * S * id(1)", "id(3)",
                           "(U ; A)^2", "U * (X ; X)"}) {
    Expr e = parse(text);
    Expr round = parse(format(e));
    CHECK(evaluate(e, ab) == evaluate(round, ab));
  }
}

TEST_CASE("evaluation matches the engine") {
  auto ab = CategoryConfig::affine();
  CHECK(evaluate(parse("X^3"), ab) ==
        compose(generator(Generator::Dot, ab),
                compose(generator(Generator::Dot, ab), generator(Generator::Dot, ab))));
  CHECK(evaluate(parse("S ; S"), ab) == identity(2, ab));
  CHECK(evaluate(parse("X^0"), ab) == identity(1, ab));
}
