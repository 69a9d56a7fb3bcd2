#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sgq/rational.hpp"
#include "sgq/semigroup.hpp"
#include "sgq/translation.hpp"

namespace sgq {

// An eventually constant function on the members of S: explicit values at
// every member below `threshold`, and `tail` at every member from there on.
// The threshold is kept minimal, which makes equality structural.
template <class Scalar>
class BasicWeight {
 public:
  BasicWeight() = default;

  static BasicWeight constant(Scalar tail) {
    BasicWeight w;
    w.tail_ = std::move(tail);
    return w;
  }

  // Samples f at the members below `bound`; `tail` is used from `bound` on.
  template <class F>
  static BasicWeight tabulate(const NumericalSemigroup& s, std::int64_t bound, F&& f, Scalar tail) {
    BasicWeight w;
    w.threshold_ = std::max<std::int64_t>(bound, 0);
    w.tail_ = std::move(tail);
    for (std::int64_t d = 0; d < w.threshold_; ++d) {
      if (s.contains(d)) w.below_.emplace_back(d, f(d));
    }
    w.canonicalize();
    return w;
  }

  std::int64_t threshold() const { return threshold_; }
  const std::vector<std::pair<std::int64_t, Scalar>>& below() const { return below_; }
  const Scalar& tail() const { return tail_; }

  // Value at a member d (zero for d outside the stored members below the
  // threshold, i.e. for non-members).
  Scalar at(std::int64_t d) const {
    if (d >= threshold_) return tail_;
    auto it = std::lower_bound(below_.begin(), below_.end(), d,
                               [](const auto& p, std::int64_t key) { return p.first < key; });
    if (it != below_.end() && it->first == d) return it->second;
    return Scalar{};
  }

  bool is_zero() const { return threshold_ == 0 && sgq::is_zero(tail_); }

  friend bool operator==(const BasicWeight&, const BasicWeight&) = default;

 private:
  void canonicalize() {
    while (threshold_ > 0) {
      if (below_.empty()) {
        threshold_ = 0;
      } else if (below_.back().first != threshold_ - 1) {
        threshold_ = below_.back().first + 1;
      } else if (below_.back().second == tail_) {
        below_.pop_back();
        --threshold_;
      } else {
        break;
      }
    }
  }

  std::int64_t threshold_ = 0;
  std::vector<std::pair<std::int64_t, Scalar>> below_;
  Scalar tail_{};
};

// An element of the dense *-subalgebra P(S), stored by graded components:
// A e_d = sum_c w_c(d) e_{d+c}. Distinct stored forms denote distinct
// operators, so equality here is operator equality.
template <class Scalar>
class BasicOperator {
 public:
  using Weight = BasicWeight<Scalar>;

  explicit BasicOperator(NumericalSemigroup s) : s_(std::move(s)) {}

  static BasicOperator identity(const NumericalSemigroup& s) {
    BasicOperator a(s);
    a.set_component(0, Weight::constant(Scalar(1)));
    return a;
  }

  // Indicator of the domain, placed at the monomial's index.
  static BasicOperator from_monomial(const PartialTranslation& v, Scalar coeff = Scalar(1)) {
    const auto& s = v.semigroup();
    BasicOperator a(s);
    const auto& dom = v.domain();
    a.set_component(v.index(),
                    Weight::tabulate(
                        s, dom.threshold(),
                        [&](std::int64_t d) { return dom.contains(s, d) ? coeff : Scalar{}; }, coeff));
    return a;
  }

  const NumericalSemigroup& semigroup() const { return s_; }
  const std::map<std::int64_t, Weight>& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }

  Weight component(std::int64_t c) const {
    auto it = comps_.find(c);
    return it == comps_.end() ? Weight() : it->second;
  }

  Scalar weight(std::int64_t c, std::int64_t d) const {
    auto it = comps_.find(c);
    return it == comps_.end() ? Scalar{} : it->second.at(d);
  }

  // Replaces the index-c component. Throws std::logic_error if the weight is
  // nonzero at some d with d + c outside S.
  void set_component(std::int64_t c, Weight w) {
    if (w.is_zero()) {
      comps_.erase(c);
      return;
    }
    const std::int64_t limit = std::max(w.threshold(), s_.frobenius() + 1 - c);
    for (std::int64_t d = 0; d < limit; ++d) {
      if (s_.contains(d) && !s_.contains(d + c) && !sgq::is_zero(w.at(d))) {
        throw std::logic_error("graded component does not map l2(S) into itself");
      }
    }
    comps_[c] = std::move(w);
  }

  // Coefficients of A e_d, keyed by basis member.
  std::map<std::int64_t, Scalar> apply(std::int64_t d) const {
    if (!s_.contains(d)) throw std::invalid_argument("apply: basis index not in S");
    std::map<std::int64_t, Scalar> out;
    for (const auto& [c, w] : comps_) {
      Scalar v = w.at(d);
      if (!sgq::is_zero(v)) out.emplace(d + c, v);
    }
    return out;
  }

  // Single graded component Q_c(A).
  BasicOperator grade(std::int64_t c) const {
    BasicOperator out(s_);
    auto it = comps_.find(c);
    if (it != comps_.end()) out.comps_.emplace(c, it->second);
    return out;
  }

  BasicOperator& operator+=(const BasicOperator& o) { return accumulate(o, Scalar(1)); }
  BasicOperator& operator-=(const BasicOperator& o) { return accumulate(o, Scalar(-1)); }
  friend BasicOperator operator+(BasicOperator a, const BasicOperator& b) { return a += b; }
  friend BasicOperator operator-(BasicOperator a, const BasicOperator& b) { return a -= b; }

  friend BasicOperator operator*(const Scalar& k, const BasicOperator& a) {
    BasicOperator out(a.s_);
    if (sgq::is_zero(k)) return out;
    for (const auto& [c, w] : a.comps_) out.set_component(c, scaled(a.s_, w, k));
    return out;
  }

  // Operator product a∘b (b applied first).
  friend BasicOperator operator*(const BasicOperator& a, const BasicOperator& b) {
    require_same(a, b);
    const auto& s = a.s_;
    BasicOperator out(s);
    for (const auto& [c2, w2] : b.comps_) {
      for (const auto& [c1, w1] : a.comps_) {
        const std::int64_t bound = std::max({w2.threshold(), w1.threshold() - c2, std::int64_t{0}});
        auto prod = Weight::tabulate(
            s, bound,
            [&](std::int64_t d) { return s.contains(d + c2) ? w2.at(d) * w1.at(d + c2) : Scalar{}; },
            w2.tail() * w1.tail());
        out.add_component(c1 + c2, prod);
      }
    }
    return out;
  }

  BasicOperator adjoint() const {
    BasicOperator out(s_);
    for (const auto& [c, w] : comps_) {
      const std::int64_t bound = std::max({w.threshold() + c, s_.frobenius() + 1 + c, std::int64_t{0}});
      auto adj = Weight::tabulate(
          s_, bound,
          [&](std::int64_t d) { return s_.contains(d - c) ? sgq::conj(w.at(d - c)) : Scalar{}; },
          sgq::conj(w.tail()));
      out.add_component(-c, adj);
    }
    return out;
  }

  friend bool operator==(const BasicOperator& a, const BasicOperator& b) {
    return a.s_ == b.s_ && a.comps_ == b.comps_;
  }

  // Adds w into the index-c component.
  void add_component(std::int64_t c, const Weight& w) {
    auto it = comps_.find(c);
    if (it == comps_.end()) {
      set_component(c, w);
      return;
    }
    set_component(c, combine(s_, it->second, w, Scalar(1)));
  }

 private:
  static void require_same(const BasicOperator& a, const BasicOperator& b) {
    if (!(a.s_ == b.s_)) throw std::invalid_argument("operator elements over different semigroups");
  }

  static Weight scaled(const NumericalSemigroup& s, const Weight& w, const Scalar& k) {
    return Weight::tabulate(s, w.threshold(), [&](std::int64_t d) { return k * w.at(d); }, k * w.tail());
  }

  // a + k*b
  static Weight combine(const NumericalSemigroup& s, const Weight& a, const Weight& b, const Scalar& k) {
    const std::int64_t bound = std::max(a.threshold(), b.threshold());
    return Weight::tabulate(s, bound, [&](std::int64_t d) { return a.at(d) + k * b.at(d); },
                            a.tail() + k * b.tail());
  }

  BasicOperator& accumulate(const BasicOperator& o, const Scalar& k) {
    require_same(*this, o);
    for (const auto& [c, w] : o.comps_) {
      auto it = comps_.find(c);
      set_component(c, combine(s_, it == comps_.end() ? Weight() : it->second, w, k));
    }
    return *this;
  }

  NumericalSemigroup s_;
  std::map<std::int64_t, Weight> comps_;
};

using OperatorElement = BasicOperator<GaussianRational>;
using ComplexOperator = BasicOperator<std::complex<double>>;

}  // namespace sgq
