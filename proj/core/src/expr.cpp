#include "brauercat/expr.hpp"

#include <cctype>
#include <sstream>

namespace brauercat {

namespace {

struct Parser {
  const std::string& text;
  size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  int integer() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected integer", start);
    return std::stoi(text.substr(start, pos - start));
  }

  Expr expr() {
    Expr left = term();
    while (eat(';')) {
      Expr right = term();
      Expr seq{Expr::Kind::Seq};
      seq.lhs = std::make_shared<Expr>(std::move(left));
      seq.rhs = std::make_shared<Expr>(std::move(right));
      left = std::move(seq);
    }
    return left;
  }

  Expr term() {
    Expr left = factor();
    while (eat('*')) {
      Expr right = factor();
      Expr t{Expr::Kind::Tensor};
      t.lhs = std::make_shared<Expr>(std::move(left));
      t.rhs = std::make_shared<Expr>(std::move(right));
      left = std::move(t);
    }
    return left;
  }

  Expr factor() {
    Expr base = primary();
    while (eat('^')) {
      Expr p{Expr::Kind::Power};
      p.exponent = integer();
      p.lhs = std::make_shared<Expr>(std::move(base));
      base = std::move(p);
    }
    return base;
  }

  Expr primary() {
    skip_ws();
    if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
    char c = text[pos];
    if (c == '(') {
      ++pos;
      Expr inner = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos);
      return inner;
    }
    if (c == 'U' || c == 'A' || c == 'S' || c == 'X') {
      ++pos;
      switch (c) {
        case 'U': return Expr{Expr::Kind::U};
        case 'A': return Expr{Expr::Kind::A};
        case 'S': return Expr{Expr::Kind::S};
        default: return Expr{Expr::Kind::X};
      }
    }
    if (text.compare(pos, 2, "id") == 0) {
      pos += 2;
      if (!eat('(')) throw ParseError("expected '(' after id", pos);
      Expr e{Expr::Kind::Id};
      e.id_width = integer();
      if (e.id_width < 0) throw ParseError("negative width", pos);
      if (!eat(')')) throw ParseError("expected ')'", pos);
      return e;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos);
  }
};

}  // namespace

Expr parse(const std::string& text) {
  Parser p(text);
  Expr e = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) throw ParseError("trailing input", p.pos);
  return e;
}

std::pair<int, int> arity(const Expr& expr) {
  switch (expr.kind) {
    case Expr::Kind::U: return {0, 2};
    case Expr::Kind::A: return {2, 0};
    case Expr::Kind::S: return {2, 2};
    case Expr::Kind::X: return {1, 1};
    case Expr::Kind::Id: return {expr.id_width, expr.id_width};
    case Expr::Kind::Tensor: {
      auto [m1, s1] = arity(*expr.lhs);
      auto [m2, s2] = arity(*expr.rhs);
      return {m1 + m2, s1 + s2};
    }
    case Expr::Kind::Seq: {
      auto [m1, s1] = arity(*expr.lhs);
      auto [m2, s2] = arity(*expr.rhs);
      if (s1 != m2)
        throw ArityError("arity mismatch: '" + format(*expr.lhs) + "' has target width " +
                         std::to_string(s1) + " but '" + format(*expr.rhs) +
                         "' expects source width " + std::to_string(m2));
      return {m1, s2};
    }
    case Expr::Kind::Power: {
      auto [m, s] = arity(*expr.lhs);
      if (m != s)
        throw ArityError("'" + format(*expr.lhs) + "' is not an endomorphism (" +
                         std::to_string(m) + " -> " + std::to_string(s) + ")");
      return {m, s};
    }
  }
  throw std::logic_error("bad expression node");
}

Morphism evaluate(const Expr& expr, const CategoryConfig& config) {
  arity(expr);
  switch (expr.kind) {
    case Expr::Kind::U: return generator(Generator::Cup, config);
    case Expr::Kind::A: return generator(Generator::Cap, config);
    case Expr::Kind::S: return generator(Generator::Cross, config);
    case Expr::Kind::X: return generator(Generator::Dot, config);
    case Expr::Kind::Id: return identity(expr.id_width, config);
    case Expr::Kind::Tensor:
      return tensor(evaluate(*expr.lhs, config), evaluate(*expr.rhs, config));
    case Expr::Kind::Seq:
      // a ; b stacks b on top of a.
      return compose(evaluate(*expr.rhs, config), evaluate(*expr.lhs, config));
    case Expr::Kind::Power: {
      Morphism base = evaluate(*expr.lhs, config);
      Morphism acc = identity(base.source, config);
      for (int i = 0; i < expr.exponent; ++i) acc = compose(base, acc);
      return acc;
    }
  }
  throw std::logic_error("bad expression node");
}

std::string format(const Expr& expr) {
  switch (expr.kind) {
    case Expr::Kind::U: return "U";
    case Expr::Kind::A: return "A";
    case Expr::Kind::S: return "S";
    case Expr::Kind::X: return "X";
    case Expr::Kind::Id: return "id(" + std::to_string(expr.id_width) + ")";
    case Expr::Kind::Tensor: {
      auto wrap = [](const Expr& e) {
        std::string s = format(e);
        return e.kind == Expr::Kind::Seq ? "(" + s + ")" : s;
      };
      return wrap(*expr.lhs) + " * " + wrap(*expr.rhs);
    }
    case Expr::Kind::Seq: return format(*expr.lhs) + " ; " + format(*expr.rhs);
    case Expr::Kind::Power: {
      std::string base = format(*expr.lhs);
      if (expr.lhs->kind == Expr::Kind::Seq || expr.lhs->kind == Expr::Kind::Tensor)
        base = "(" + base + ")";
      return base + "^" + std::to_string(expr.exponent);
    }
  }
  return "?";
}

}  // namespace brauercat
