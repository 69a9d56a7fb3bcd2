#include "sgq/algebra.hpp"

#include <stdexcept>

namespace sgq {
namespace {

LaurentPolynomial tails(const OperatorElement& a) {
  LaurentPolynomial f;
  for (const auto& [c, w] : a.components()) f.add_term(c, w.tail());
  return f;
}

std::int64_t first_member_at_or_above(const NumericalSemigroup& s, std::int64_t n) {
  n = std::max<std::int64_t>(n, 0);
  while (!s.contains(n)) ++n;
  return n;
}

}  // namespace

OperatorElement expectation(const OperatorElement& a) { return a.grade(0); }

LaurentPolynomial symbol(const OperatorElement& a) {
  LaurentPolynomial f = tails(a);
  const std::int64_t e = first_member_at_or_above(a.semigroup(), stabilization_threshold(a));
  if (!(conjugate(a, e) == toeplitz_lift(f, a.semigroup()))) {
    throw std::logic_error("symbol: conjugation route disagrees with tail read-off");
  }
  return f;
}

OperatorElement toeplitz_lift(const LaurentPolynomial& f, const NumericalSemigroup& s) {
  OperatorElement out(s);
  for (const auto& [c, coeff] : f.coefficients()) {
    out += OperatorElement::from_monomial(max_translation(s, c), coeff);
  }
  return out;
}

bool in_ideal(const OperatorElement& a) { return tails(a).is_zero(); }

Splitting split(const OperatorElement& a) {
  LaurentPolynomial f = symbol(a);
  OperatorElement k = a - toeplitz_lift(f, a.semigroup());
  if (!in_ideal(k) || !(toeplitz_lift(f, a.semigroup()) + k == a)) {
    throw std::logic_error("split: decomposition is not exact");
  }
  return {std::move(f), std::move(k)};
}

OperatorElement conjugate(const OperatorElement& a, std::int64_t e) {
  const auto& s = a.semigroup();
  if (!s.contains(e)) throw std::invalid_argument("conjugate: shift is not a member of S");
  OperatorElement out(s);
  for (const auto& [c, w] : a.components()) {
    const std::int64_t bound = std::max({w.threshold() - e, s.frobenius() + 1 - c, std::int64_t{0}});
    auto shifted = OperatorElement::Weight::tabulate(
        s, bound,
        [&](std::int64_t d) { return s.contains(d + c) ? w.at(d + e) : GaussianRational(); },
        w.tail());
    out.add_component(c, shifted);
  }
  return out;
}

std::int64_t stabilization_threshold(const OperatorElement& a) {
  std::int64_t n = 0;
  for (const auto& [c, w] : a.components()) n = std::max(n, w.threshold());
  return n;
}

bool is_isometry(const OperatorElement& a) {
  return a.adjoint() * a == OperatorElement::identity(a.semigroup());
}

ComplexOperator to_complex(const OperatorElement& a) {
  const auto& s = a.semigroup();
  ComplexOperator out(s);
  for (const auto& [c, w] : a.components()) {
    out.set_component(c, ComplexOperator::Weight::tabulate(
                             s, w.threshold(), [&](std::int64_t d) { return w.at(d).to_complex(); },
                             w.tail().to_complex()));
  }
  return out;
}

}  // namespace sgq
