#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sgq/errors.hpp"
#include "sgq/free_algebra.hpp"
#include "sgq/rational.hpp"

namespace sgq {

// Syntax tree of an algebra expression.
//
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^*']
//   atom   := complex | 'I' | 'T(' int ')' | 'T*(' int ')' | '(' expr ')'
//   complex:= rat [('+'|'-') rat 'i']
//   rat    := int ['/' int]
//
// Products are operator products: the left factor acts last.
struct Expr {
  enum class Kind { Scalar, Ident, Gen, GenStar, Add, Sub, Mul, Star, Paren };

  Kind kind = Kind::Ident;
  GaussianRational scalar;
  std::int64_t gen = 0;
  std::vector<Expr> kids;

  static Expr make_scalar(GaussianRational k) { return {Kind::Scalar, k, 0, {}}; }
  static Expr ident() { return {Kind::Ident, {}, 0, {}}; }
  static Expr generator(std::int64_t a, bool starred) {
    return {starred ? Kind::GenStar : Kind::Gen, {}, a, {}};
  }
  static Expr node(Kind k, std::vector<Expr> kids) { return {k, {}, 0, std::move(kids)}; }

  friend bool operator==(const Expr&, const Expr&) = default;
};

// Throws ParseError (with byte offset) on malformed text or a zero
// denominator.
Expr parse_expression(std::string_view text);

// Inverse of parse_expression on every tree it can produce.
std::string print_expression(const Expr& e);

// Evaluates in C[Σ]: scalars become multiples of I and each product of
// generators collapses to one partial translation. Throws
// std::invalid_argument for a generator outside S.
FreeElement evaluate(const Expr& e, const NumericalSemigroup& s);

}  // namespace sgq
