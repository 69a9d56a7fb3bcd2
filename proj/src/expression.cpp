#include "sgq/expression.hpp"

#include <cctype>
#include <charconv>
#include <optional>

namespace sgq {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view t) : t_(t) {}

  Expr parse() {
    Expr e = expr();
    skip();
    if (pos_ != t_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void skip() {
    while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < t_.size() ? t_[pos_] : '\0';
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

  std::optional<std::int64_t> integer() {
    skip();
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(t_.data() + pos_, t_.data() + t_.size(), v);
    if (ec == std::errc::result_out_of_range) fail("integer out of range");
    if (ec != std::errc()) return std::nullopt;
    pos_ = static_cast<std::size_t>(p - t_.data());
    return v;
  }

  std::optional<Rational> rational() {
    const std::size_t start = pos_;
    auto num = integer();
    if (!num) {
      pos_ = start;
      return std::nullopt;
    }
    if (accept("/")) {
      const std::size_t at = pos_;
      auto den = integer();
      if (!den) fail("expected denominator");
      if (*den == 0) {
        pos_ = at;
        fail("division by zero");
      }
      return Rational(*num, *den);
    }
    return Rational(*num);
  }

  // rat, optionally followed by ('+'|'-') rat 'i'; the imaginary part is only
  // taken when the trailing 'i' is present.
  std::optional<GaussianRational> complex() {
    auto re = rational();
    if (!re) return std::nullopt;
    const std::size_t save = pos_;
    const char sign = peek();
    if (sign == '+' || sign == '-') {
      ++pos_;
      skip();
      // A signed rat after the operator would read as "a - -b", which the
      // grammar leaves to the additive level.
      if (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) {
        auto im = rational();
        if (im && pos_ < t_.size() && t_[pos_] == 'i' &&
            (pos_ + 1 == t_.size() || !std::isalnum(static_cast<unsigned char>(t_[pos_ + 1])))) {
          ++pos_;
          return GaussianRational(*re, sign == '-' ? -*im : *im);
        }
      }
    }
    pos_ = save;
    return GaussianRational(*re);
  }

  Expr expr() {
    Expr e = term();
    for (;;) {
      if (accept("+")) {
        e = Expr::node(Expr::Kind::Add, {std::move(e), term()});
      } else if (peek() == '-') {
        ++pos_;
        e = Expr::node(Expr::Kind::Sub, {std::move(e), term()});
      } else {
        return e;
      }
    }
  }

  Expr term() {
    Expr e = factor();
    while (accept("*")) e = Expr::node(Expr::Kind::Mul, {std::move(e), factor()});
    return e;
  }

  Expr factor() {
    Expr a = atom();
    if (accept("^*")) return Expr::node(Expr::Kind::Star, {std::move(a)});
    return a;
  }

  Expr atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Expr inner = expr();
      expect(")");
      return Expr::node(Expr::Kind::Paren, {std::move(inner)});
    }
    if (accept("T*(")) return generator(true);
    if (accept("T(")) return generator(false);
    if (c == 'I') {
      ++pos_;
      return Expr::ident();
    }
    if (auto k = complex()) return Expr::make_scalar(*k);
    fail(pos_ == t_.size() ? "unexpected end of input" : "expected an atom");
  }

  Expr generator(bool starred) {
    auto a = integer();
    if (!a) fail("expected generator integer");
    expect(")");
    return Expr::generator(*a, starred);
  }

  std::string_view t_;
  std::size_t pos_ = 0;
};

void print(const Expr& e, std::string& out) {
  switch (e.kind) {
    case Expr::Kind::Scalar:
      out += e.scalar.str();
      return;
    case Expr::Kind::Ident:
      out += 'I';
      return;
    case Expr::Kind::Gen:
      out += "T(" + std::to_string(e.gen) + ")";
      return;
    case Expr::Kind::GenStar:
      out += "T*(" + std::to_string(e.gen) + ")";
      return;
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      print(e.kids[0], out);
      out += e.kind == Expr::Kind::Add ? " + " : " - ";
      print(e.kids[1], out);
      return;
    case Expr::Kind::Mul:
      print(e.kids[0], out);
      out += '*';
      print(e.kids[1], out);
      return;
    case Expr::Kind::Star:
      print(e.kids[0], out);
      out += "^*";
      return;
    case Expr::Kind::Paren:
      out += '(';
      print(e.kids[0], out);
      out += ')';
      return;
  }
}

}  // namespace

Expr parse_expression(std::string_view text) { return Parser(text).parse(); }

std::string print_expression(const Expr& e) {
  std::string out;
  print(e, out);
  return out;
}

FreeElement evaluate(const Expr& e, const NumericalSemigroup& s) {
  switch (e.kind) {
    case Expr::Kind::Scalar:
      return FreeElement::scalar(s, e.scalar);
    case Expr::Kind::Ident:
      return FreeElement::identity(s);
    case Expr::Kind::Gen:
    case Expr::Kind::GenStar:
      return FreeElement::monomial(elementary(s, e.gen, e.kind == Expr::Kind::GenStar));
    case Expr::Kind::Add:
      return evaluate(e.kids[0], s) + evaluate(e.kids[1], s);
    case Expr::Kind::Sub:
      return evaluate(e.kids[0], s) - evaluate(e.kids[1], s);
    case Expr::Kind::Mul:
      return evaluate(e.kids[0], s) * evaluate(e.kids[1], s);
    case Expr::Kind::Star:
      return evaluate(e.kids[0], s).adjoint();
    case Expr::Kind::Paren:
      return evaluate(e.kids[0], s);
  }
  throw std::logic_error("unknown expression node");
}

}  // namespace sgq
