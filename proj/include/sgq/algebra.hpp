#pragma once

#include <cstdint>

#include "sgq/graded_operator.hpp"
#include "sgq/laurent.hpp"

namespace sgq {

// Conditional expectation onto the zero-index subalgebra (the diagonal part).
OperatorElement expectation(const OperatorElement& a);

// The symbol f with f_c = tail of the index-c weight. Cross-checked against
// the stabilized conjugation T_e^* A T_e before returning.
LaurentPolynomial symbol(const OperatorElement& a);

// sum_c f_c * max_translation(c): the canonical operator with symbol f.
OperatorElement toeplitz_lift(const LaurentPolynomial& f, const NumericalSemigroup& s);

// Membership in the commutator ideal, i.e. symbol(a) == 0.
bool in_ideal(const OperatorElement& a);

struct Splitting {
  LaurentPolynomial symbol;
  OperatorElement ideal_part;
};

// a = toeplitz_lift(symbol) + ideal_part, with ideal_part in the commutator
// ideal.
Splitting split(const OperatorElement& a);

// T_e^* a T_e, exact. Throws for e outside S.
OperatorElement conjugate(const OperatorElement& a, std::int64_t e);

// Largest component threshold; conjugate(a, e) equals
// toeplitz_lift(symbol(a)) for every member e at or above it.
std::int64_t stabilization_threshold(const OperatorElement& a);

bool is_isometry(const OperatorElement& a);

ComplexOperator to_complex(const OperatorElement& a);

}  // namespace sgq
