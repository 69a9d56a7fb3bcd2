#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sgq/free_algebra.hpp"
#include "sgq/functional.hpp"
#include "sgq/graded_operator.hpp"
#include "sgq/laurent.hpp"

namespace sgq {

// Deterministic generators for the randomized property suites.
using Rng = std::mt19937_64;

// A random numerical semigroup with two or three generators below 10.
NumericalSemigroup random_semigroup(Rng& rng);

// Letters over the generators of S.
Word random_word(Rng& rng, const NumericalSemigroup& s, int max_len);

// Small Gaussian-rational coefficient, never zero.
GaussianRational random_coefficient(Rng& rng);

// Up to max_terms word monomials with random coefficients.
FreeElement random_free_element(Rng& rng, const NumericalSemigroup& s, int max_terms, int max_word_len);

OperatorElement random_operator(Rng& rng, const NumericalSemigroup& s, int max_terms = 4, int max_word_len = 5);

LaurentPolynomial random_laurent(Rng& rng, int max_terms, std::int64_t max_exponent);

// Distinct monomials reachable by words of length <= max_len, ordered.
std::vector<PartialTranslation> word_monomials(const NumericalSemigroup& s, int max_len);

// Matrix coefficients on small members, Haar, point masses and nested
// convolutions of these.
std::vector<Functional> functional_corpus(Rng& rng, const NumericalSemigroup& s, std::size_t count);

}  // namespace sgq
