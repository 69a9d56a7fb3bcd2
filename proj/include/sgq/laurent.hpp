#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>

#include "sgq/rational.hpp"

namespace sgq {

// Trigonometric polynomial f = sum_c f_c chi^c on the circle, where
// chi^c(theta) = exp(i c theta). Zero coefficients are never stored.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;

  static LaurentPolynomial monomial(std::int64_t exponent, GaussianRational coeff = 1);
  static LaurentPolynomial constant(GaussianRational c) { return monomial(0, c); }

  const std::map<std::int64_t, GaussianRational>& coefficients() const { return coeffs_; }
  GaussianRational coefficient(std::int64_t exponent) const;
  bool is_zero() const { return coeffs_.empty(); }

  void add_term(std::int64_t exponent, const GaussianRational& c);

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(const GaussianRational& k, const LaurentPolynomial& f);
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  // Pointwise complex conjugate: coefficient at -c becomes conj(f_c).
  LaurentPolynomial conj_reflect() const;

  std::complex<double> evaluate(double theta) const;
  std::int64_t max_abs_exponent() const;
  double l1_norm() const;

  // "3*chi^2 + (1-1i)*chi^-1"; "0" for the zero polynomial.
  std::string str() const;

 private:
  std::map<std::int64_t, GaussianRational> coeffs_;
};

}  // namespace sgq
