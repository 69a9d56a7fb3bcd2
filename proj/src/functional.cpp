#include "sgq/functional.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "sgq/algebra.hpp"
#include "sgq/errors.hpp"

namespace sgq {

std::complex<double> to_complex(const Value& v) {
  if (const auto* g = std::get_if<GaussianRational>(&v)) return g->to_complex();
  return std::get<std::complex<double>>(v);
}

bool is_exact(const Value& v) { return std::holds_alternative<GaussianRational>(v); }

Value add(const Value& a, const Value& b) {
  if (is_exact(a) && is_exact(b)) return std::get<GaussianRational>(a) + std::get<GaussianRational>(b);
  return to_complex(a) + to_complex(b);
}

Value multiply(const Value& a, const Value& b) {
  if (is_exact(a) && is_exact(b)) return std::get<GaussianRational>(a) * std::get<GaussianRational>(b);
  return to_complex(a) * to_complex(b);
}

std::string value_str(const Value& v) {
  if (const auto* g = std::get_if<GaussianRational>(&v)) return g->str();
  const auto z = std::get<std::complex<double>>(v);
  std::ostringstream os;
  os.precision(17);
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << 'i';
  return os.str();
}

bool values_agree(const Value& a, const Value& b, double tol) {
  if (is_exact(a) && is_exact(b)) return std::get<GaussianRational>(a) == std::get<GaussianRational>(b);
  return std::abs(to_complex(a) - to_complex(b)) <= tol;
}

struct Functional::Node {
  Kind kind;
  std::int64_t a = 0;
  std::int64_t b = 0;
  Rational turn;
  std::complex<double> weight{1.0, 0.0};
  std::vector<std::pair<GaussianRational, Functional>> terms;
};

Functional::Kind Functional::kind() const { return node_->kind; }

Functional Functional::matrix_coeff(std::int64_t a, std::int64_t b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::MatrixCoeff;
  n->a = a;
  n->b = b;
  return Functional(std::move(n));
}

Functional Functional::point_mass(Rational turn, std::complex<double> weight) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::PointMass;
  n->turn = turn;
  n->weight = weight;
  return Functional(std::move(n));
}

Functional Functional::convolution(Functional left, Functional right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Convolution;
  n->terms = {{1, std::move(left)}, {1, std::move(right)}};
  return Functional(std::move(n));
}

Functional Functional::lin(std::vector<std::pair<GaussianRational, Functional>> terms) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::LinCombo;
  n->terms = std::move(terms);
  return Functional(std::move(n));
}

Functional Functional::phi_star(Functional inner, std::int64_t e) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::PhiStar;
  n->a = e;
  n->terms = {{1, std::move(inner)}};
  return Functional(std::move(n));
}

Value Functional::eval(const FreeElement& x) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::MatrixCoeff: {
      const auto& s = x.semigroup();
      if (!s.contains(n.a) || !s.contains(n.b)) return GaussianRational();
      GaussianRational sum;
      for (const auto& [v, c] : x.terms()) {
        if (v.in_domain(n.b) && n.b + v.index() == n.a) sum += c;
      }
      if (!(sum == rep(x).weight(n.a - n.b, n.b))) {
        throw std::logic_error("matrix coefficient does not factor through rep");
      }
      return sum;
    }
    case Kind::PointMass: {
      std::complex<double> sum;
      const double angle = 2.0 * std::numbers::pi * n.turn.to_double();
      for (const auto& [v, c] : x.terms()) {
        sum += c.to_complex() * n.weight * std::polar(1.0, static_cast<double>(v.index()) * angle);
      }
      return sum;
    }
    case Kind::LinCombo: {
      Value sum = GaussianRational();
      for (const auto& [c, f] : n.terms) sum = add(sum, multiply(c, f.eval(x)));
      return sum;
    }
    case Kind::Convolution: {
      // (ξ ⊗ η)Δ(x) with Δ(V) = V ⊗ V.
      Value sum = GaussianRational();
      for (const auto& [v, c] : x.terms()) {
        sum = add(sum, multiply(c, multiply(n.terms[0].second.eval(v), n.terms[1].second.eval(v))));
      }
      return sum;
    }
    case Kind::PhiStar:
      return n.terms[0].second.eval(lift(conjugate(rep(x), n.a)));
  }
  throw std::logic_error("unknown functional kind");
}

std::string Functional::str() const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::MatrixCoeff:
      if (n.a == 0 && n.b == 0) return "haar";
      return "w[" + std::to_string(n.a) + "," + std::to_string(n.b) + "]";
    case Kind::PointMass: {
      std::string out = "pm(" + n.turn.str();
      if (n.weight != std::complex<double>(1.0, 0.0)) {
        std::ostringstream os;
        os.precision(17);
        os << n.weight.real();
        out += "," + os.str();
      }
      return out + ")";
    }
    case Kind::Convolution:
      return "conv(" + n.terms[0].second.str() + "," + n.terms[1].second.str() + ")";
    case Kind::PhiStar:
      return "phi(" + n.terms[0].second.str() + "," + std::to_string(n.a) + ")";
    case Kind::LinCombo: {
      std::string out = "lin(";
      for (std::size_t i = 0; i < n.terms.size(); ++i) {
        if (i) out += " + ";
        out += "(" + n.terms[i].first.str() + ")*" + n.terms[i].second.str();
      }
      return out + ")";
    }
  }
  throw std::logic_error("unknown functional kind");
}

namespace {

class FunctionalParser {
 public:
  explicit FunctionalParser(std::string_view t) : t_(t) {}

  Functional parse() {
    Functional f = functional();
    skip();
    if (pos_ != t_.size()) fail("trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(pos_, what);
  }

  void skip() {
    while (pos_ < t_.size() && (t_[pos_] == ' ' || t_[pos_] == '\t')) ++pos_;
  }

  bool accept(std::string_view tok) {
    skip();
    if (t_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  bool at_digit() {
    skip();
    return pos_ < t_.size() && (std::isdigit(static_cast<unsigned char>(t_[pos_])) || t_[pos_] == '-');
  }

  std::int64_t integer() {
    skip();
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(t_.data() + pos_, t_.data() + t_.size(), v);
    if (ec != std::errc()) fail("expected integer");
    pos_ = static_cast<std::size_t>(p - t_.data());
    return v;
  }

  Rational rational() {
    std::int64_t num = integer();
    if (accept("/")) {
      std::int64_t den = integer();
      if (den == 0) fail("zero denominator");
      return Rational(num, den);
    }
    return Rational(num);
  }

  double real() {
    skip();
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(std::string(t_.substr(pos_)), &used);
    } catch (const std::exception&) {
      fail("expected number");
    }
    pos_ += used;
    return v;
  }

  GaussianRational gaussian() {
    Rational re = rational();
    skip();
    if (pos_ < t_.size() && t_[pos_] == 'i') {
      ++pos_;
      return {Rational(), re};
    }
    if (pos_ < t_.size() && (t_[pos_] == '+' || t_[pos_] == '-')) {
      const bool neg = t_[pos_] == '-';
      ++pos_;
      Rational im = rational();
      expect("i");
      return {re, neg ? -im : im};
    }
    return re;
  }

  std::pair<GaussianRational, Functional> term() {
    GaussianRational coeff = 1;
    skip();
    const std::size_t save = pos_;
    if (accept("(")) {
      coeff = gaussian();
      expect(")");
      expect("*");
    } else if (at_digit()) {
      coeff = rational();
      expect("*");
    } else {
      pos_ = save;
    }
    return {coeff, functional()};
  }

  Functional functional() {
    if (accept("haar")) return Functional::haar();
    if (accept("w[")) {
      std::int64_t a = integer();
      expect(",");
      std::int64_t b = integer();
      expect("]");
      return Functional::matrix_coeff(a, b);
    }
    if (accept("pm(")) {
      Rational turn = rational();
      double weight = 1.0;
      if (accept(",")) weight = real();
      expect(")");
      return Functional::point_mass(turn, weight);
    }
    if (accept("conv(")) {
      Functional f = functional();
      expect(",");
      Functional g = functional();
      expect(")");
      return Functional::convolution(std::move(f), std::move(g));
    }
    if (accept("phi(")) {
      Functional f = functional();
      expect(",");
      std::int64_t e = integer();
      expect(")");
      return Functional::phi_star(std::move(f), e);
    }
    if (accept("lin(")) {
      std::vector<std::pair<GaussianRational, Functional>> terms;
      terms.push_back(term());
      for (;;) {
        if (accept("+")) {
          terms.push_back(term());
        } else if (accept("-")) {
          auto t = term();
          t.first = -t.first;
          terms.push_back(std::move(t));
        } else {
          break;
        }
      }
      expect(")");
      return Functional::lin(std::move(terms));
    }
    fail("expected a functional");
  }

  std::string_view t_;
  std::size_t pos_ = 0;
};

}  // namespace

Functional parse_functional(std::string_view text) { return FunctionalParser(text).parse(); }

HaarCheck haar_property_check(const Functional& phi, const FreeElement& x, double tol) {
  const Functional h = Functional::haar();
  HaarCheck out;
  out.left = Functional::convolution(h, phi).eval(x);
  out.reversed = Functional::convolution(phi, h).eval(x);
  out.right = multiply(phi.eval(FreeElement::identity(x.semigroup())), h.eval(x));
  out.pass = values_agree(out.left, out.right, tol) && values_agree(out.reversed, out.right, tol);
  return out;
}

bool measure_convolution_check(Rational alpha, Rational beta, const FreeElement& x, double tol) {
  const Value lhs =
      Functional::convolution(Functional::point_mass(alpha), Functional::point_mass(beta)).eval(x);
  const Value rhs = Functional::point_mass(alpha + beta).eval(x);
  return values_agree(lhs, rhs, tol);
}

}  // namespace sgq
