#include "sgq/corpus.hpp"

#include <numeric>
#include <set>

#include "sgq/free_algebra.hpp"

namespace sgq {
namespace {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

}  // namespace

NumericalSemigroup random_semigroup(Rng& rng) {
  for (;;) {
    std::vector<std::int64_t> gens(static_cast<std::size_t>(uniform(rng, 2, 3)));
    for (auto& g : gens) g = uniform(rng, 2, 9);
    std::int64_t g = 0;
    for (auto x : gens) g = std::gcd(g, x);
    if (g == 1) return NumericalSemigroup::build(gens);
  }
}

Word random_word(Rng& rng, const NumericalSemigroup& s, int max_len) {
  const auto& gens = s.generators();
  Word w(static_cast<std::size_t>(uniform(rng, 1, max_len)));
  for (auto& letter : w) {
    letter.gen = gens[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(gens.size()) - 1))];
    letter.starred = uniform(rng, 0, 1) == 1;
  }
  return w;
}

GaussianRational random_coefficient(Rng& rng) {
  for (;;) {
    Rational re(uniform(rng, -3, 3), uniform(rng, 1, 3));
    Rational im = uniform(rng, 0, 3) == 0 ? Rational(uniform(rng, -2, 2)) : Rational();
    GaussianRational c(re, im);
    if (!c.is_zero()) return c;
  }
}

FreeElement random_free_element(Rng& rng, const NumericalSemigroup& s, int max_terms, int max_word_len) {
  FreeElement x(s);
  const auto terms = uniform(rng, 1, max_terms);
  for (std::int64_t i = 0; i < terms; ++i) {
    x.add_term(evaluate_word(s, random_word(rng, s, max_word_len)), random_coefficient(rng));
  }
  return x;
}

OperatorElement random_operator(Rng& rng, const NumericalSemigroup& s, int max_terms, int max_word_len) {
  return rep(random_free_element(rng, s, max_terms, max_word_len));
}

LaurentPolynomial random_laurent(Rng& rng, int max_terms, std::int64_t max_exponent) {
  LaurentPolynomial f;
  const auto terms = uniform(rng, 1, max_terms);
  for (std::int64_t i = 0; i < terms; ++i) f.add_term(uniform(rng, -max_exponent, max_exponent), random_coefficient(rng));
  return f;
}

std::vector<PartialTranslation> word_monomials(const NumericalSemigroup& s, int max_len) {
  std::set<PartialTranslation> seen;
  for (const auto& w : enumerate_words(s, max_len)) seen.insert(evaluate_word(s, w));
  return {seen.begin(), seen.end()};
}

std::vector<Functional> functional_corpus(Rng& rng, const NumericalSemigroup& s, std::size_t count) {
  std::vector<Functional> out{Functional::haar()};
  auto small_member = [&] { return s.element_at(static_cast<std::size_t>(uniform(rng, 0, 5))); };
  auto leaf = [&]() -> Functional {
    switch (uniform(rng, 0, 2)) {
      case 0:
        return Functional::matrix_coeff(small_member(), small_member());
      case 1:
        return Functional::point_mass(Rational(uniform(rng, 0, 11), 12));
      default: {
        const std::int64_t b = small_member();
        const std::int64_t shift = uniform(rng, -3, 3);
        return Functional::matrix_coeff(s.contains(b + shift) ? b + shift : b, b);
      }
    }
  };
  while (out.size() < count) {
    switch (uniform(rng, 0, 3)) {
      case 0:
        out.push_back(Functional::convolution(leaf(), leaf()));
        break;
      case 1:
        out.push_back(Functional::lin({{random_coefficient(rng), leaf()}, {random_coefficient(rng), leaf()}}));
        break;
      default:
        out.push_back(leaf());
    }
  }
  return out;
}

}  // namespace sgq
