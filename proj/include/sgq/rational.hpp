#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace sgq {

// Exact rational number with 64-bit numerator and denominator. Every
// operation is overflow-checked and throws std::overflow_error instead of
// wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);  // NOLINT(google-explicit-constructor)

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // "p" or "p/q".
  std::string str() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Element of Q(i). This is the coefficient field of the exact layer.
class GaussianRational {
 public:
  constexpr GaussianRational() = default;
  GaussianRational(Rational re, Rational im = Rational()) : re_(re), im_(im) {}  // NOLINT
  GaussianRational(std::int64_t re) : re_(re) {}  // NOLINT

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  GaussianRational conj() const { return {re_, -im_}; }
  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

  // "a", or "a+bi" / "a-bi" when the imaginary part is nonzero. The output is
  // accepted by the expression parser.
  std::string str() const;

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);
std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

// Scalar helpers shared by the exact and floating-point operator templates.
inline bool is_zero(const GaussianRational& z) { return z.is_zero(); }
inline bool is_zero(const std::complex<double>& z) { return z == 0.0; }
inline GaussianRational conj(const GaussianRational& z) { return z.conj(); }
inline std::complex<double> conj(const std::complex<double>& z) { return std::conj(z); }

}  // namespace sgq
