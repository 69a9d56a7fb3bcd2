#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracle.hpp"
#include "sgq/algebra.hpp"
#include "sgq/corpus.hpp"
#include "sgq/errors.hpp"
#include "sgq/functional.hpp"

using namespace sgq;

namespace {

FreeElement build(const NumericalSemigroup& s, const oracle::Combo& x) {
  FreeElement out(s);
  for (const auto& [w, c] : x) out.add_term(evaluate_word(s, w), c);
  return out;
}

GaussianRational coefficient(const oracle::Semigroup& o, const oracle::Combo& x, std::int64_t a, std::int64_t b) {
  if (!o.contains(b)) return {};
  const auto img = oracle::act(o, x, b);
  auto it = img.find(a);
  return it == img.end() ? GaussianRational() : it->second;
}

std::complex<double> symbol_at(const oracle::Semigroup& o, const oracle::Combo& x, double theta) {
  std::complex<double> sum;
  for (const auto& [c, v] : oracle::symbol(o, x)) sum += v.to_complex() * std::polar(1.0, c * theta);
  return sum;
}

}  // namespace

TEST_CASE("matrix coefficients and Haar read the basis action") {
  std::mt19937_64 rng(41);
  const std::vector<std::int64_t> gens{3, 5};
  const auto s = NumericalSemigroup::build(gens);
  const auto o = oracle::brute(gens);
  for (int i = 0; i < 100; ++i) {
    const auto x = oracle::random_combo(rng, gens, 4, 5);
    const auto fx = build(s, x);
    CHECK(Functional::haar().eval(fx) == Value(coefficient(o, x, 0, 0)));
    for (auto [a, b] : {std::pair<std::int64_t, std::int64_t>{3, 0}, {8, 5}, {5, 10}, {6, 6}, {1, 0}}) {
      CHECK(Functional::matrix_coeff(a, b).eval(fx) == Value(coefficient(o, x, a, b)));
    }
  }
}

TEST_CASE("point masses evaluate the symbol") {
  std::mt19937_64 rng(42);
  const std::vector<std::int64_t> gens{2, 3};
  const auto s = NumericalSemigroup::build(gens);
  const auto o = oracle::brute(gens);
  for (int i = 0; i < 100; ++i) {
    const auto x = oracle::random_combo(rng, gens, 4, 5);
    for (int k = 0; k < 7; ++k) {
      const Rational turn(k, 7);
      const auto got = to_complex(Functional::point_mass(turn).eval(build(s, x)));
      CHECK(std::abs(got - symbol_at(o, x, 2 * std::numbers::pi * turn.to_double())) < 1e-12);
    }
  }
}

TEST_CASE("convolution of matrix coefficients pairs the two legs") {
  std::mt19937_64 rng(43);
  const std::vector<std::int64_t> gens{2, 3};
  const auto s = NumericalSemigroup::build(gens);
  const auto o = oracle::brute(gens);
  const auto f = Functional::convolution(Functional::matrix_coeff(4, 2), Functional::matrix_coeff(5, 3));
  for (int i = 0; i < 100; ++i) {
    const auto x = oracle::random_combo(rng, gens, 4, 5);
    GaussianRational want;
    for (const auto& [w, c] : x) {
      if (oracle::act(o, w, 2) == 4 && oracle::act(o, w, 3) == 5) want += c;
    }
    CHECK(f.eval(build(s, x)) == Value(want));
  }
}

TEST_CASE("Haar is a two-sided integral for the convolution") {
  std::mt19937_64 rng(44);
  const auto s = NumericalSemigroup::build({2, 3});
  const auto corpus = functional_corpus(rng, s, 20);
  for (const auto& phi : corpus) {
    for (int i = 0; i < 10; ++i) {
      CHECK(haar_property_check(phi, random_free_element(rng, s, 4, 4)).pass);
    }
  }
}

TEST_CASE("point masses convolve by adding angles") {
  std::mt19937_64 rng(45);
  const auto s = NumericalSemigroup::build({3, 5});
  for (int i = 0; i < 30; ++i) {
    const auto x = random_free_element(rng, s, 4, 5);
    CHECK(measure_convolution_check(Rational(1, 3), Rational(1, 5), x));
    CHECK(measure_convolution_check(Rational(-2, 7), Rational(1, 2), x));
  }
}

TEST_CASE("phi_star fixes point masses but moves Haar") {
  const auto s = NumericalSemigroup::build({2, 3});
  const auto p = FreeElement::monomial(evaluate_word(s, {{2, false}, {2, true}}));
  const auto pm = Functional::point_mass(Rational(1, 4));
  CHECK(values_agree(Functional::phi_star(pm, 2).eval(p), pm.eval(p), 1e-12));
  // h(T(2)T*(2)) = 0 since 0 is outside 2 + S; the conjugate by T(2) is I.
  CHECK(Functional::haar().eval(p) == Value(GaussianRational(0)));
  CHECK(Functional::phi_star(Functional::haar(), 2).eval(p) == Value(GaussianRational(1)));
}

TEST_CASE("functional syntax round-trips") {
  for (const char* text : {"haar", "w[3,0]", "pm(1/3)", "pm(-1/4,2.5)", "conv(haar,pm(1/2))", "phi(w[2,2],3)",
                           "lin((1/2)*haar + (0-1i)*w[0,2])", "conv(conv(haar,haar),lin((3)*pm(1/5)))"}) {
    const auto f = parse_functional(text);
    CHECK(parse_functional(f.str()).str() == f.str());
  }
  CHECK(parse_functional("w[0,0]").str() == "haar");
  CHECK(parse_functional("lin(2*haar - w[2,0])").str() == "lin((2)*haar + (-1)*w[2,0])");
  CHECK(parse_functional(" conv( haar , haar ) ").kind() == Functional::Kind::Convolution);
}

TEST_CASE("functional syntax errors carry byte offsets") {
  const auto offset = [](const char* text) -> std::int64_t {
    try {
      parse_functional(text);
    } catch (const ParseError& e) {
      return static_cast<std::int64_t>(e.offset());
    }
    return -1;
  };
  CHECK(offset("hair") == 0);
  CHECK(offset("w[1 2]") == 4);
  CHECK(offset("pm(1/0)") == 6);
  CHECK(offset("haar x") == 5);
  CHECK(offset("conv(haar)") == 9);
}
