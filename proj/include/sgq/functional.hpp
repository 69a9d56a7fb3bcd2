#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "sgq/free_algebra.hpp"
#include "sgq/rational.hpp"

namespace sgq {

// Exact while only exact functionals are involved; complex double once a
// point mass enters.
using Value = std::variant<GaussianRational, std::complex<double>>;

std::complex<double> to_complex(const Value& v);
bool is_exact(const Value& v);
Value add(const Value& a, const Value& b);
Value multiply(const Value& a, const Value& b);
std::string value_str(const Value& v);
// Exact equality when both values are exact, else |a - b| <= tol.
bool values_agree(const Value& a, const Value& b, double tol);

// A linear functional on C[Σ], given by its values on monomials.
class Functional {
 public:
  enum class Kind { MatrixCoeff, LinCombo, Convolution, PointMass, PhiStar };

  // (a, b) matrix coefficient: <x e_b, e_a>.
  static Functional matrix_coeff(std::int64_t a, std::int64_t b);
  static Functional haar() { return matrix_coeff(0, 0); }
  // Point mass of the symbol at angle 2π·turn, scaled by weight.
  static Functional point_mass(Rational turn, std::complex<double> weight = 1.0);
  static Functional convolution(Functional left, Functional right);
  static Functional lin(std::vector<std::pair<GaussianRational, Functional>> terms);
  // x -> xi(lift(T_e^* rep(x) T_e)).
  static Functional phi_star(Functional inner, std::int64_t e);

  Kind kind() const;

  Value eval(const FreeElement& x) const;
  Value eval(const PartialTranslation& v) const { return eval(FreeElement::monomial(v)); }

  // Uses the syntax accepted by parse_functional.
  std::string str() const;

 private:
  struct Node;
  explicit Functional(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Grammar:
//   f    := 'haar' | 'w[' int ',' int ']' | 'pm(' rat [',' real] ')'
//         | 'conv(' f ',' f ')' | 'phi(' f ',' int ')' | 'lin(' term (('+'|'-') term)* ')'
//   term := [coef '*'] f ;  coef := rat | '(' gaussian ')'
// Throws ParseError on malformed input.
Functional parse_functional(std::string_view text);

struct HaarCheck {
  bool pass = true;
  Value left;       // (h × φ)(x)
  Value right;      // φ(I)·h(x)
  Value reversed;   // (φ × h)(x)
};

// h × φ = φ(I)·h, together with the reversed order, on x.
HaarCheck haar_property_check(const Functional& phi, const FreeElement& x, double tol = 1e-12);

// (δ_α × δ_β)(x) against δ_{α+β}(x); angles are fractions of a full turn.
bool measure_convolution_check(Rational alpha, Rational beta, const FreeElement& x, double tol = 1e-10);

}  // namespace sgq
