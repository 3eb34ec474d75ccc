#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "brauercat/engine.hpp"

namespace brauercat {

// Raised on malformed expression text; position is a 0-based byte offset.
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position(position) {}
  size_t position;
};

// Raised when widths do not line up; carries the offending widths.
struct ArityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Diagram expression tree: atoms U, A, S, X, id(n); `*` tensor; `;` is
// chronological composition (a ; b means b after a); `^` iterates an
// endomorphism.
struct Expr {
  enum class Kind { U, A, S, X, Id, Tensor, Seq, Power } kind;
  int id_width = 0;   // Id
  int exponent = 0;   // Power
  std::shared_ptr<Expr> lhs, rhs;
};

Expr parse(const std::string& text);

// (source, target) widths; throws ArityError on mismatch.
std::pair<int, int> arity(const Expr& expr);

Morphism evaluate(const Expr& expr, const CategoryConfig& config);

std::string format(const Expr& expr);

}  // namespace brauercat
