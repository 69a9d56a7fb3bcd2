#include "sgq/free_algebra.hpp"

#include "sgq/algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace sgq {
namespace {

template <class Map, class Key>
void accumulate(Map& terms, const Key& key, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

void require_same(const NumericalSemigroup& a, const NumericalSemigroup& b) {
  if (!(a == b)) throw std::invalid_argument("free elements over different semigroups");
}

}  // namespace

FreeElement FreeElement::monomial(const PartialTranslation& v, GaussianRational coeff) {
  FreeElement x(v.semigroup());
  x.add_term(v, coeff);
  return x;
}

FreeElement FreeElement::identity(const NumericalSemigroup& s) {
  return monomial(identity_translation(s));
}

FreeElement FreeElement::scalar(const NumericalSemigroup& s, GaussianRational k) {
  return monomial(identity_translation(s), k);
}

void FreeElement::add_term(const PartialTranslation& v, const GaussianRational& c) {
  accumulate(terms_, v, c);
}

FreeElement& FreeElement::operator+=(const FreeElement& o) {
  require_same(s_, o.s_);
  for (const auto& [v, c] : o.terms_) add_term(v, c);
  return *this;
}

FreeElement& FreeElement::operator-=(const FreeElement& o) {
  require_same(s_, o.s_);
  for (const auto& [v, c] : o.terms_) add_term(v, -c);
  return *this;
}

FreeElement operator*(const GaussianRational& k, const FreeElement& x) {
  FreeElement out(x.s_);
  for (const auto& [v, c] : x.terms_) out.add_term(v, k * c);
  return out;
}

FreeElement operator*(const FreeElement& x, const FreeElement& y) {
  require_same(x.s_, y.s_);
  FreeElement out(x.s_);
  for (const auto& [v, a] : x.terms_) {
    for (const auto& [w, b] : y.terms_) out.add_term(compose(v, w), a * b);
  }
  return out;
}

FreeElement FreeElement::adjoint() const {
  FreeElement out(s_);
  for (const auto& [v, c] : terms_) out.add_term(sgq::adjoint(v), c.conj());
  return out;
}

std::string FreeElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.str() << ")*" << v.str();
  }
  return os.str();
}

void FreeTensor::add_term(const PartialTranslation& v, const PartialTranslation& w, const GaussianRational& c) {
  accumulate(terms_, Key{v, w}, c);
}

FreeTensor& FreeTensor::operator+=(const FreeTensor& o) {
  for (const auto& [k, c] : o.terms_) accumulate(terms_, k, c);
  return *this;
}

FreeTensor& FreeTensor::operator-=(const FreeTensor& o) {
  for (const auto& [k, c] : o.terms_) accumulate(terms_, k, -c);
  return *this;
}

void FreeTriple::add_term(const Key& k, const GaussianRational& c) { accumulate(terms_, k, c); }

FreeTensor tensor(const FreeElement& x, const FreeElement& y) {
  require_same(x.semigroup(), y.semigroup());
  FreeTensor out(x.semigroup());
  for (const auto& [v, a] : x.terms()) {
    for (const auto& [w, b] : y.terms()) out.add_term(v, w, a * b);
  }
  return out;
}

OperatorElement rep(const FreeElement& x) {
  OperatorElement out(x.semigroup());
  for (const auto& [v, c] : x.terms()) out += OperatorElement::from_monomial(v, c);
  return out;
}

FreeElement lift(const OperatorElement& a) {
  const auto& s = a.semigroup();
  FreeElement out(s);
  for (const auto& [c, w] : a.components()) {
    const PartialTranslation maxdom = max_translation(s, c);
    const std::int64_t limit = std::max(w.threshold(), maxdom.domain().threshold());
    // w restricted to the maximal domain, written as a telescoping sum of
    // indicators of its tails {d in maxdom : d >= m}.
    GaussianRational previous;
    auto tail_from = [&](std::int64_t m) {
      auto dom = EventualSet::from_predicate(s, m, [](std::int64_t) { return false; });
      return compose(maxdom, PartialTranslation(s, 0, dom));
    };
    for (std::int64_t d = 0; d < limit; ++d) {
      if (!maxdom.in_domain(d)) continue;
      const GaussianRational value = w.at(d);
      out.add_term(tail_from(d), value - previous);
      previous = value;
    }
    out.add_term(tail_from(limit), w.tail() - previous);
  }
  return out;
}

FreeTensor coproduct(const FreeElement& x) {
  FreeTensor out(x.semigroup());
  for (const auto& [v, c] : x.terms()) out.add_term(v, v, c);
  return out;
}

FreeTensor tensor_multiply(const FreeTensor& s, const FreeTensor& t) {
  require_same(s.semigroup(), t.semigroup());
  FreeTensor out(s.semigroup());
  for (const auto& [k1, a] : s.terms()) {
    for (const auto& [k2, b] : t.terms()) {
      out.add_term(compose(k1.first, k2.first), compose(k1.second, k2.second), a * b);
    }
  }
  return out;
}

FreeTensor tensor_adjoint(const FreeTensor& s) {
  FreeTensor out(s.semigroup());
  for (const auto& [k, a] : s.terms()) out.add_term(adjoint(k.first), adjoint(k.second), a.conj());
  return out;
}

std::map<std::pair<std::int64_t, std::int64_t>, GaussianRational> tensor_apply(const FreeTensor& s,
                                                                              std::int64_t c,
                                                                              std::int64_t d) {
  const auto& sg = s.semigroup();
  if (!sg.contains(c) || !sg.contains(d)) throw std::invalid_argument("tensor_apply: basis pair outside S x S");
  std::map<std::pair<std::int64_t, std::int64_t>, GaussianRational> out;
  for (const auto& [k, a] : s.terms()) {
    auto left = apply(k.first, c);
    auto right = apply(k.second, d);
    if (left && right) accumulate(out, std::make_pair(*left, *right), a);
  }
  return out;
}

FreeElement weak_antipode(const FreeElement& x) {
  FreeElement out(x.semigroup());
  for (const auto& [v, c] : x.terms()) out.add_term(adjoint(v), c);
  return out;
}

FreeTriple coproduct_left_iterated(const FreeElement& x) {
  FreeTriple out(x.semigroup());
  const FreeTensor outer = coproduct(x);
  for (const auto& [k, c] : outer.terms()) {
    const FreeTensor inner = coproduct(FreeElement::monomial(k.first, c));
    for (const auto& [k1, c1] : inner.terms()) {
      out.add_term({k1.first, k1.second, k.second}, c1);
    }
  }
  return out;
}

FreeTriple coproduct_right_iterated(const FreeElement& x) {
  FreeTriple out(x.semigroup());
  const FreeTensor outer = coproduct(x);
  for (const auto& [k, c] : outer.terms()) {
    const FreeTensor inner = coproduct(FreeElement::monomial(k.second, c));
    for (const auto& [k2, c2] : inner.terms()) {
      out.add_term({k.first, k2.first, k2.second}, c2);
    }
  }
  return out;
}

CheckOutcome weak_hopf_check(const FreeElement& x) {
  const auto& s = x.semigroup();
  FreeElement middle(s);  // m(id ⊗ T ⊗ id)
  FreeElement outer(s);   // m(T ⊗ id ⊗ T)
  const FreeTriple triple = coproduct_left_iterated(x);
  for (const auto& [k, c] : triple.terms()) {
    middle.add_term(compose(compose(k[0], adjoint(k[1])), k[2]), c);
    outer.add_term(compose(compose(adjoint(k[0]), k[1]), adjoint(k[2])), c);
  }
  if (!(middle == x)) return {false, "m(id*T*id)(D*id)D(x) = " + middle.str() + " != x"};
  const FreeElement tx = weak_antipode(x);
  if (!(outer == tx)) return {false, "m(T*id*T)(D*id)D(x) = " + outer.str() + " != T(x)"};
  return {};
}

CheckOutcome coassociativity_check(const FreeElement& x) {
  if (coproduct_left_iterated(x) == coproduct_right_iterated(x)) return {};
  return {false, "(D*id)D(x) != (id*D)D(x) for x = " + x.str()};
}

std::optional<std::int64_t> group_like_detect(const FreeElement& x) {
  if (x.is_zero()) return std::nullopt;
  if (!(coproduct(x) == tensor(x, x))) return std::nullopt;
  if (!is_isometry(rep(x))) return std::nullopt;
  // Δ(x) = x ⊗ x forces a single basis monomial with coefficient 1; an
  // isometric monomial is a full-domain shift.
  if (x.terms().size() != 1) throw std::logic_error("group-like element with several monomials");
  const auto& [v, c] = *x.terms().begin();
  if (!(c == GaussianRational(1)) || !v.domain().is_full() || !x.semigroup().contains(v.index())) {
    throw std::logic_error("group-like isometry is not a canonical shift T_c");
  }
  return v.index();
}

CoidealDecomposition coideal_decomposition(const PartialTranslation& v, const PartialTranslation& w) {
  const auto vw = FreeElement::monomial(compose(v, w));
  const auto wv = FreeElement::monomial(compose(w, v));
  const FreeElement comm = vw - wv;
  CoidealDecomposition out{coproduct(comm), tensor(comm, vw), tensor(wv, comm)};
  out.exact = out.lhs == out.first + out.second;
  out.commutator_zero = comm.is_zero();
  return out;
}

Coaction delta_coaction(const FreeElement& x) {
  Coaction out;
  for (const auto& [v, c] : x.terms()) out.emplace(v, std::make_pair(c, LaurentPolynomial::monomial(v.index())));
  return out;
}

namespace {

using CoactionTriple = std::map<std::tuple<PartialTranslation, std::int64_t, std::int64_t>, GaussianRational>;

// Δ_G(χ^c) = χ^c ⊗ χ^c, from Δ_G(f)(α, β) = f(α + β).
std::map<std::pair<std::int64_t, std::int64_t>, GaussianRational> circle_coproduct(const LaurentPolynomial& f) {
  std::map<std::pair<std::int64_t, std::int64_t>, GaussianRational> out;
  for (const auto& [e, c] : f.coefficients()) accumulate(out, std::make_pair(e, e), c);
  return out;
}

}  // namespace

bool coaction_axiom_check(const FreeElement& x) {
  const Coaction once = delta_coaction(x);
  CoactionTriple left;   // (δ ⊗ id)δ
  CoactionTriple right;  // (id ⊗ Δ_G)δ
  for (const auto& [v, entry] : once) {
    const auto& [lambda, f] = entry;
    for (const auto& [e, coeff] : f.coefficients()) {
      for (const auto& [v2, entry2] : delta_coaction(FreeElement::monomial(v, lambda * coeff))) {
        for (const auto& [e2, coeff2] : entry2.second.coefficients()) {
          accumulate(left, std::make_tuple(v2, e2, e), entry2.first * coeff2);
        }
      }
    }
    for (const auto& [pair, coeff] : circle_coproduct(f)) {
      accumulate(right, std::make_tuple(v, pair.first, pair.second), lambda * coeff);
    }
  }
  return left == right;
}

bool is_coaction_fixed(const FreeElement& x) {
  for (const auto& [v, entry] : delta_coaction(x)) {
    if (!(entry.second == LaurentPolynomial::constant(1))) return false;
  }
  return true;
}

std::optional<PairWitness> descent_witness(const FreeElement& x, std::int64_t window) {
  if (!rep(x).is_zero()) throw std::invalid_argument("descent_witness: rep(x) must be zero");
  const auto& s = x.semigroup();
  const FreeTensor cop = coproduct(x);
  for (std::int64_t c = 0; c <= window; ++c) {
    if (!s.contains(c)) continue;
    for (std::int64_t d = 0; d <= window; ++d) {
      if (!s.contains(d)) continue;
      auto image = tensor_apply(cop, c, d);
      if (!image.empty()) return PairWitness{c, d, std::move(image)};
    }
  }
  return std::nullopt;
}

CornerOutcome corner_diagram_check(const FreeElement& x, std::int64_t a, std::int64_t window) {
  const auto& s = x.semigroup();
  const OperatorElement rx = rep(x);
  const FreeTensor cop = coproduct(x);
  const std::int64_t gap = std::llabs(a);
  for (std::int64_t base = 0; base + gap <= window; ++base) {
    const std::int64_t partner = base + gap;
    if (!s.contains(base) || !s.contains(partner)) continue;
    const std::int64_t l = a >= 0 ? base : partner;
    const std::int64_t k = a >= 0 ? partner : base;

    std::map<std::int64_t, GaussianRational> lhs;
    for (const auto& [pair, v] : tensor_apply(cop, l, k)) {
      accumulate(lhs, a >= 0 ? pair.first : pair.second, v);
    }
    std::map<std::int64_t, GaussianRational> rhs;
    for (const auto& [m, v] : rx.apply(base)) {
      if (s.contains(m + gap)) rhs.emplace(m, v);
    }
    if (lhs != rhs) return {false, std::make_pair(l, k)};
  }
  return {};
}

namespace {

void check_multiplier(const NumericalSemigroup& from, const NumericalSemigroup& to, std::int64_t m) {
  if (m < 0) throw std::invalid_argument("multiplier must be non-negative");
  for (auto g : from.generators()) {
    if (!to.contains(m * g)) {
      throw std::invalid_argument("multiplier " + std::to_string(m) + " does not map S1 into S2");
    }
  }
}

Word scale_word(Word w, std::int64_t m) {
  for (auto& letter : w) letter.gen *= m;
  return w;
}

}  // namespace

std::optional<MorphismWitness> quantum_morphism_falsify(const NumericalSemigroup& from,
                                                        const NumericalSemigroup& to, std::int64_t m,
                                                        int max_word_len) {
  check_multiplier(from, to, m);
  struct Seen {
    Word word;
    PartialTranslation image;
  };
  std::map<PartialTranslation, Seen> seen;
  for (const auto& word : enumerate_words(from, max_word_len)) {
    const PartialTranslation source = evaluate_word(from, word);
    const PartialTranslation image = evaluate_word(to, scale_word(word, m));
    auto it = seen.find(source);
    if (it == seen.end()) {
      seen.emplace(source, Seen{word, image});
    } else if (!(it->second.image == image)) {
      return MorphismWitness{it->second.word, word, source, it->second.image, image};
    }
  }
  return std::nullopt;
}

void visit_dependencies(const std::vector<PartialTranslation>& monomials,
                        const std::function<bool(const FreeElement&)>& visit) {
  if (monomials.empty()) return;
  const auto& s = monomials.front().semigroup();
  std::int64_t bound = 0;
  for (const auto& v : monomials) bound = std::max(bound, v.domain().threshold());

  // A monomial is the indicator of its domain; coordinates are the members
  // below `bound` plus one slot (key `bound`) for the common tail.
  using Vec = std::map<std::int64_t, GaussianRational>;
  using Combo = std::map<std::size_t, GaussianRational>;
  struct Row {
    Vec v;
    Combo combo;
  };
  auto axpy = [](auto& dst, const auto& src, const GaussianRational& f) {
    for (const auto& [k, val] : src) {
      auto& slot = dst[k];
      slot -= f * val;
      if (slot.is_zero()) dst.erase(k);
    }
  };
  std::map<std::int64_t, std::map<std::int64_t, Row>> echelon;  // index -> pivot -> row
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    const auto& v = monomials[i];
    Row r;
    for (std::int64_t d = 0; d < bound; ++d) {
      if (s.contains(d) && v.in_domain(d)) r.v[d] = 1;
    }
    r.v[bound] = 1;
    r.combo[i] = 1;
    auto& rows = echelon[v.index()];
    for (const auto& [pivot, row] : rows) {
      auto it = r.v.find(pivot);
      if (it != r.v.end()) {
        const GaussianRational f = it->second / row.v.at(pivot);
        axpy(r.v, row.v, f);
        axpy(r.combo, row.combo, f);
      }
    }
    if (r.v.empty()) {
      FreeElement x(s);
      for (const auto& [k, c] : r.combo) x.add_term(monomials[k], c);
      if (visit(x)) return;
      continue;
    }
    const std::int64_t pivot = r.v.begin()->first;
    for (auto& [p, row] : rows) {
      auto it = row.v.find(pivot);
      if (it != row.v.end()) {
        const GaussianRational f = it->second / r.v.at(pivot);
        axpy(row.v, r.v, f);
        axpy(row.combo, r.combo, f);
      }
    }
    rows.emplace(pivot, std::move(r));
  }
}

std::optional<LinearMorphismWitness> linear_morphism_falsify(const NumericalSemigroup& from,
                                                             const NumericalSemigroup& to, std::int64_t m,
                                                             int max_word_len) {
  check_multiplier(from, to, m);
  std::map<PartialTranslation, Word> first_word;
  for (const auto& word : enumerate_words(from, max_word_len)) first_word.emplace(evaluate_word(from, word), word);
  // Shortest representatives first, so the reported relation uses short words.
  std::vector<PartialTranslation> monomials;
  for (const auto& [v, w] : first_word) monomials.push_back(v);
  std::stable_sort(monomials.begin(), monomials.end(), [&](const auto& a, const auto& b) {
    return first_word.at(a).size() < first_word.at(b).size();
  });

  std::optional<LinearMorphismWitness> out;
  visit_dependencies(monomials, [&](const FreeElement& relation) {
    FreeElement image(to);
    for (const auto& [v, c] : relation.terms()) image.add_term(evaluate_word(to, scale_word(first_word.at(v), m)), c);
    if (rep(image).is_zero()) return false;
    LinearMorphismWitness w{{}, image};
    for (const auto& [v, c] : relation.terms()) w.relation.emplace_back(first_word.at(v), c);
    out = std::move(w);
    return true;
  });
  return out;
}

}  // namespace sgq
