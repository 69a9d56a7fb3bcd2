#include "sgq/laurent.hpp"

#include <cmath>
#include <cstdlib>

namespace sgq {

LaurentPolynomial LaurentPolynomial::monomial(std::int64_t exponent, GaussianRational coeff) {
  LaurentPolynomial f;
  f.add_term(exponent, coeff);
  return f;
}

GaussianRational LaurentPolynomial::coefficient(std::int64_t exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? GaussianRational() : it->second;
}

void LaurentPolynomial::add_term(std::int64_t exponent, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.coeffs_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (const auto& [ea, ca] : a.coeffs_) {
    for (const auto& [eb, cb] : b.coeffs_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

LaurentPolynomial operator*(const GaussianRational& k, const LaurentPolynomial& f) {
  LaurentPolynomial out;
  for (const auto& [e, c] : f.coeffs_) out.add_term(e, k * c);
  return out;
}

LaurentPolynomial LaurentPolynomial::conj_reflect() const {
  LaurentPolynomial out;
  for (const auto& [e, c] : coeffs_) out.add_term(-e, c.conj());
  return out;
}

std::complex<double> LaurentPolynomial::evaluate(double theta) const {
  std::complex<double> sum = 0.0;
  for (const auto& [e, c] : coeffs_) {
    sum += c.to_complex() * std::polar(1.0, static_cast<double>(e) * theta);
  }
  return sum;
}

std::int64_t LaurentPolynomial::max_abs_exponent() const {
  std::int64_t m = 0;
  for (const auto& [e, c] : coeffs_) m = std::max<std::int64_t>(m, std::llabs(e));
  return m;
}

double LaurentPolynomial::l1_norm() const {
  double s = 0.0;
  for (const auto& [e, c] : coeffs_) s += std::abs(c.to_complex());
  return s;
}

std::string LaurentPolynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : coeffs_) {
    if (!out.empty()) out += " + ";
    const bool complex = !c.imag().is_zero();
    out += complex ? "(" + c.str() + ")" : c.str();
    out += "*chi^" + std::to_string(e);
  }
  return out;
}

}  // namespace sgq
