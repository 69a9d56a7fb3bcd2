#include <doctest.h>

#include <random>

#include "sgq/algebra.hpp"
#include "sgq/expression.hpp"

using namespace sgq;
using K = Expr::Kind;

namespace {

// Random trees that respect the grammar positions: sums on the left of +/-,
// terms on the right; products on the left of *, factors on the right.
class TreeGen {
 public:
  explicit TreeGen(std::uint64_t seed) : rng_(seed) {}

  Expr expr(int depth) {
    if (depth > 0 && coin(0.4)) {
      return Expr::node(coin(0.5) ? K::Add : K::Sub, {expr(depth - 1), term(depth - 1)});
    }
    return term(depth);
  }

 private:
  bool coin(double p) { return std::bernoulli_distribution(p)(rng_); }
  std::int64_t pick(std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_); }

  Expr term(int depth) {
    if (depth > 0 && coin(0.4)) return Expr::node(K::Mul, {term(depth - 1), factor(depth - 1)});
    return factor(depth);
  }

  Expr factor(int depth) {
    if (coin(0.2)) return Expr::node(K::Star, {atom(depth)});
    return atom(depth);
  }

  Expr atom(int depth) {
    switch (pick(0, depth > 0 ? 4 : 3)) {
      case 0: {
        const Rational re(pick(-9, 9), pick(1, 5));
        const Rational im = coin(0.5) ? Rational() : Rational(pick(-9, 9), pick(1, 5));
        return Expr::make_scalar(GaussianRational(re, im));
      }
      case 1:
        return Expr::ident();
      case 2:
        return Expr::generator(pick(2, 7), false);
      case 3:
        return Expr::generator(pick(2, 7), true);
      default:
        return Expr::node(K::Paren, {expr(depth - 1)});
    }
  }

  std::mt19937_64 rng_;
};

std::int64_t error_offset(const char* text) {
  try {
    parse_expression(text);
  } catch (const ParseError& e) {
    return static_cast<std::int64_t>(e.offset());
  }
  return -1;
}

}  // namespace

TEST_CASE("parse inverts print on random trees") {
  TreeGen gen(61);
  for (int i = 0; i < 500; ++i) {
    const Expr t = gen.expr(5);
    const std::string text = print_expression(t);
    INFO(text);
    REQUIRE(parse_expression(text) == t);
  }
}

TEST_CASE("scalars, generators and adjoints") {
  CHECK(parse_expression("1/2 + 3i") == Expr::make_scalar(GaussianRational(Rational(1, 2), Rational(3))));
  CHECK(parse_expression("2-1/3i") == Expr::make_scalar(GaussianRational(Rational(2), Rational(-1, 3))));
  CHECK(parse_expression("T(2)^*") == Expr::node(K::Star, {Expr::generator(2, false)}));
  CHECK(parse_expression("T*(2)") == Expr::generator(2, true));
  // 3 - I is a difference, not a complex literal.
  CHECK(parse_expression("3 - I").kind == K::Sub);

  const auto s = NumericalSemigroup::build({2, 3});
  CHECK(evaluate(parse_expression("T(2)^*"), s) == evaluate(parse_expression("T*(2)"), s));
}

TEST_CASE("the projection complement over <2,3>") {
  const auto s = NumericalSemigroup::build({2, 3});
  const auto e = parse_expression("(I - T*(3)*T(2)*T*(2)*T(3))");
  REQUIRE(e.kind == K::Paren);
  CHECK(e.kids[0].kind == K::Sub);
  const auto x = evaluate(e, s);
  // T*(3)T(2)T*(2)T(3) projects onto S \ {0}, so the complement is e_0 e_0^*.
  const auto a = rep(x);
  CHECK(a.apply(0) == std::map<std::int64_t, GaussianRational>{{0, 1}});
  for (std::int64_t d = 2; d < 20; ++d) CHECK(a.apply(d).empty());
}

TEST_CASE("products are operator order and collapse to one monomial") {
  const auto s = NumericalSemigroup::build({2, 3});
  const auto x = evaluate(parse_expression("T*(2)*T(3)"), s);
  REQUIRE(x.terms().size() == 1);
  CHECK(x.terms().begin()->first == max_translation(s, 1));
  CHECK(evaluate(parse_expression("2*I - I - I"), s).is_zero());
}

TEST_CASE("syntax errors report byte offsets") {
  CHECK(error_offset("T(2) +") == 6);
  CHECK(error_offset("T(2") == 3);
  CHECK(error_offset("T(x)") == 2);
  CHECK(error_offset("(I") == 2);
  CHECK(error_offset("I I") == 2);
  CHECK(error_offset("1/0") == 2);
  CHECK(error_offset("3/0 + T(2)") == 2);
  CHECK(error_offset("T(2)^") == 4);
}

TEST_CASE("generators outside S are rejected on evaluation") {
  const auto s = NumericalSemigroup::build({2, 3});
  CHECK_THROWS_AS(evaluate(parse_expression("T(1)"), s), std::invalid_argument);
  CHECK_THROWS_AS(evaluate(parse_expression("I + T*(-2)"), s), std::invalid_argument);
  CHECK_NOTHROW(evaluate(parse_expression("T(5)"), s));
}
