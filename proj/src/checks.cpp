#include "sgq/checks.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <stdexcept>

#include "sgq/algebra.hpp"
#include "sgq/corpus.hpp"
#include "sgq/functional.hpp"
#include "sgq/numeric.hpp"

namespace sgq {
namespace {

// Counts failures of one property over a sample and keeps the first
// counterexample.
class Tally {
 public:
  void record(bool ok, const std::function<std::string()>& describe) {
    ++checked_;
    if (ok) return;
    if (failed_++ == 0) first_ = describe();
  }

  Claim claim(std::string name, Json parameters = Json::object()) const {
    Claim c;
    c.claim = std::move(name);
    c.parameters = std::move(parameters);
    c.computed = {{"checked", checked_}, {"failed", failed_}};
    if (failed_) c.computed["first_counterexample"] = first_;
    c.expected = {{"failed", 0}};
    c.pass = failed_ == 0 && checked_ > 0;
    return c;
  }

 private:
  std::size_t checked_ = 0;
  std::size_t failed_ = 0;
  std::string first_;
};

std::size_t scaled(const SuiteOptions& o, std::size_t n) {
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(static_cast<double>(n) * o.scale)));
}

Claim exact_claim(std::string name, Json parameters, Json computed, Json expected) {
  Claim c;
  c.claim = std::move(name);
  c.parameters = std::move(parameters);
  c.pass = computed == expected;
  c.computed = std::move(computed);
  c.expected = std::move(expected);
  return c;
}

// Members of S up to and including `bound`.
std::vector<std::int64_t> members_upto(const NumericalSemigroup& s, std::int64_t bound) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 0; d <= bound; ++d) {
    if (s.contains(d)) out.push_back(d);
  }
  return out;
}

std::int64_t max_generator(const NumericalSemigroup& s) { return s.generators().back(); }

// ---------------------------------------------------------------- order

std::vector<Claim> order_suite(const NumericalSemigroup& s, const SuiteOptions& o) {
  Rng rng(o.seed);
  std::vector<Claim> out;
  const std::int64_t window = s.frobenius() + 1 + 2 * max_generator(s);
  const auto members = members_upto(s, window);

  Tally closure;
  std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
  for (std::size_t i = 0; i < scaled(o, 500); ++i) {
    const auto a = members[pick(rng)];
    const auto b = members[pick(rng)];
    closure.record(s.contains(a + b), [&] { return std::to_string(a) + "+" + std::to_string(b); });
  }
  out.push_back(closure.claim("members are closed under addition"));

  Tally order;
  for (auto a : members) {
    order.record(s.natural_below(a, a), [&] { return "not reflexive at " + std::to_string(a); });
    for (auto b : members) {
      if (a != b && s.natural_below(a, b) && s.natural_below(b, a)) {
        order.record(false, [&] { return "not antisymmetric at " + std::to_string(a) + "," + std::to_string(b); });
      }
      for (auto c : members) {
        if (s.natural_below(a, b) && s.natural_below(b, c)) {
          order.record(s.natural_below(a, c), [&] {
            return "not transitive at " + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c);
          });
        }
      }
    }
  }
  out.push_back(order.claim("natural quasi-order is a partial order", {{"window", window}}));

  bool comparable = true;
  for (auto a : members) {
    for (auto b : members) comparable = comparable && (s.natural_below(a, b) || s.natural_below(b, a));
  }
  out.push_back(exact_claim("order is total iff there are no gaps", {{"window", window}},
                            {{"pairwise_total", comparable}, {"is_totally_ordered", s.is_totally_ordered()}},
                            {{"pairwise_total", s.gaps().empty()}, {"is_totally_ordered", s.gaps().empty()}}));

  Tally enumeration;
  for (std::size_t i = 0; i < 200; ++i) {
    const auto x = s.element_at(i);
    const auto y = s.element_at(i + 1);
    bool ok = x < y && s.contains(x) && s.position_of(x) == i;
    for (auto z = x + 1; z < y; ++z) ok = ok && !s.contains(z);
    enumeration.record(ok, [&] { return "element_at(" + std::to_string(i) + ")"; });
  }
  out.push_back(enumeration.claim("element_at enumerates exactly the members in order"));

  out.push_back(exact_claim("automorphism multipliers", {}, automorphism_multipliers(s), Json::array({1})));
  return out;
}

// ---------------------------------------------------------------- inverse

std::vector<Claim> inverse_suite(const NumericalSemigroup& s, const SuiteOptions& o) {
  Rng rng(o.seed + 1);
  const std::size_t n = scaled(o, 1000);
  const int max_len = 8;
  std::vector<Claim> out;
  const Json params{{"words", n}, {"max_length", max_len}};

  std::vector<Word> words;
  std::vector<PartialTranslation> values;
  for (std::size_t i = 0; i < n; ++i) {
    words.push_back(random_word(rng, s, max_len));
    values.push_back(evaluate_word(s, words.back()));
  }

  Tally regular;
  Tally additivity;
  Tally coherence;
  Tally idempotents;
  Tally stabilization;
  const auto probe = members_upto(s, s.frobenius() + 1 + 2 * max_len * max_generator(s));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& v = values[i];
    const auto& w = values[(i + 1) % n];
    const auto vs = adjoint(v);
    regular.record(compose(compose(v, vs), v) == v && compose(compose(vs, v), vs) == vs,
                   [&] { return word_str(words[i]); });

    const auto vw = compose(v, w);
    additivity.record(vw.index() == v.index() + w.index(),
                      [&] { return word_str(words[i]) + " ; " + word_str(words[(i + 1) % n]); });

    bool coherent = true;
    for (auto d : probe) {
      auto inner = apply(w, d);
      auto two_step = inner ? apply(v, *inner) : std::nullopt;
      coherent = coherent && apply(vw, d) == two_step;
    }
    coherence.record(coherent, [&] { return word_str(words[i]) + " ; " + word_str(words[(i + 1) % n]); });

    const auto e1 = compose(vs, v);
    const auto e2 = compose(w, adjoint(w));
    const auto meet = PartialTranslation(
        s, 0,
        EventualSet::from_predicate(s, std::max(e1.domain().threshold(), e2.domain().threshold()),
                                    [&](std::int64_t d) { return e1.in_domain(d) && e2.in_domain(d); }));
    idempotents.record(e1.index() == 0 && compose(e1, e1) == e1 && compose(e1, e2) == compose(e2, e1) &&
                           compose(e1, e2) == meet,
                       [&] { return word_str(words[i]); });

    const auto target = max_translation(s, v.index());
    std::int64_t e = v.domain().threshold();
    for (int found = 0; found < 5; ++e) {
      if (!s.contains(e)) continue;
      ++found;
      const auto te = elementary(s, e, false);
      stabilization.record(compose(adjoint(te), compose(v, te)) == target,
                           [&] { return word_str(words[i]) + " at e=" + std::to_string(e); });
    }
  }
  out.push_back(regular.claim("V V* V = V and V* V V* = V*", params));
  out.push_back(additivity.claim("index is additive under composition", params));
  out.push_back(coherence.claim("apply(VW, d) = apply(V, apply(W, d))", params));
  out.push_back(idempotents.claim("zero-index monomials are commuting idempotents with meet D1 ∩ D2", params));
  out.push_back(stabilization.claim("T_e* V T_e equals max_translation(ind V) for e >= threshold", params));

  // Equal basis action on a window must mean equal canonical form.
  Tally canonical;
  std::map<std::vector<std::int64_t>, std::size_t> by_action;
  const std::int64_t span = 2 * (s.frobenius() + max_len * max_generator(s));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::int64_t> action;
    for (std::int64_t d = 0; d <= span; ++d) {
      if (!s.contains(d)) continue;
      auto img = apply(values[i], d);
      action.push_back(img ? *img : -1);
    }
    action.push_back(values[i].index());
    auto [it, inserted] = by_action.emplace(action, i);
    if (!inserted) {
      canonical.record(values[it->second] == values[i],
                       [&] { return word_str(words[it->second]) + " vs " + word_str(words[i]); });
    }
  }
  out.push_back(canonical.claim("words with equal basis action give identical normal forms", params));

  Tally maxdom;
  for (std::int64_t c = -6; c <= 6; ++c) {
    int tried = 0;
    for (std::int64_t a = 0; tried < 3; ++a) {
      if (!s.contains(a) || !s.contains(a + c)) continue;
      ++tried;
      maxdom.record(compose(elementary(s, a, true), elementary(s, a + c, false)) == max_translation(s, c),
                    [&] { return "c=" + std::to_string(c) + " a=" + std::to_string(a); });
    }
  }
  out.push_back(maxdom.claim("max_translation(c) = T_a* T_b whenever b - a = c", {{"c_range", {-6, 6}}}));
  return out;
}

// ---------------------------------------------------------------- grading

std::vector<Claim> grading_suite(const NumericalSemigroup& s, const SuiteOptions& o) {
  Rng rng(o.seed + 2);
  const std::size_t n = scaled(o, 500);
  const Json params{{"elements", n}};
  std::vector<Claim> out;

  Tally partition;
  Tally graded_product;
  Tally faithful;
  Tally expect;
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = random_operator(rng, s);
    const auto b = random_operator(rng, s);

    OperatorElement sum(s);
    for (const auto& [c, w] : a.components()) sum += a.grade(c);
    partition.record(sum == a, [&] { return std::to_string(i); });

    const auto ab = a * b;
    bool graded = true;
    std::set<std::int64_t> targets;
    for (const auto& [ca, wa] : a.components()) {
      for (const auto& [cb, wb] : b.components()) targets.insert(ca + cb);
    }
    for (const auto& [c, w] : ab.components()) graded = graded && targets.contains(c);
    for (auto c : targets) {
      OperatorElement expected(s);
      for (const auto& [ca, wa] : a.components()) {
        if (b.components().contains(c - ca)) expected += a.grade(ca) * b.grade(c - ca);
      }
      graded = graded && ab.grade(c) == expected;
    }
    graded_product.record(graded, [&] { return std::to_string(i); });

    // Faithfulness on a nonzero element and on zero elements reached through
    // different routes.
    auto all_grades_zero = [&](const OperatorElement& x) {
      for (std::int64_t c = -40; c <= 40; ++c) {
        if (!x.grade(c).is_zero()) return false;
      }
      return true;
    };
    auto action_zero = [&](const OperatorElement& x) {
      for (std::int64_t d = 0; d <= 2 * (s.frobenius() + 40); ++d) {
        if (s.contains(d) && !x.apply(d).empty()) return false;
      }
      return true;
    };
    for (const auto& x : {a, a - a, rep(lift(a)) - a}) {
      const bool z = x.is_zero();
      faithful.record(z == all_grades_zero(x) && z == action_zero(x), [&] { return std::to_string(i); });
    }

    const auto e = expectation(a);
    const auto x = expectation(random_operator(rng, s));
    const auto y = expectation(random_operator(rng, s));
    bool ok = expectation(e) == e && (e.is_zero() || (e.components().size() == 1 && e.components().contains(0)));
    ok = ok && expectation(x * a * y) == x * e * y;
    expect.record(ok, [&] { return std::to_string(i); });
  }
  out.push_back(partition.claim("A equals the sum of its graded components", params));
  out.push_back(graded_product.claim("grade(AB, c) = sum over a+b=c of grade(A,a) grade(B,b)", params));
  out.push_back(faithful.claim("A = 0 iff all grades vanish iff A kills every basis vector", params));
  out.push_back(expect.claim("expectation is an idempotent bimodule map onto index 0", params));
  return out;
}

// ---------------------------------------------------------------- symbol

std::vector<Claim> symbol_suite(const NumericalSemigroup& s, const SuiteOptions& o) {
  Rng rng(o.seed + 3);
  const std::size_t n = scaled(o, 500);
  const Json params{{"pairs", n}};
  std::vector<Claim> out;

  Tally hom;
  Tally star;
  Tally splitting;
  Tally stable;
  Tally fixed;
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = random_operator(rng, s);
    const auto b = random_operator(rng, s);
    hom.record(symbol(a * b) == symbol(a) * symbol(b), [&] { return std::to_string(i); });
    star.record(symbol(a.adjoint()) == symbol(a).conj_reflect(), [&] { return std::to_string(i); });

    const auto sp = split(a);
    splitting.record(in_ideal(sp.ideal_part) && toeplitz_lift(sp.symbol, s) + sp.ideal_part == a,
                     [&] { return std::to_string(i); });

    const auto lifted = toeplitz_lift(symbol(a), s);
    int found = 0;
    for (std::int64_t e = stabilization_threshold(a); found < 3; ++e) {
      if (!s.contains(e)) continue;
      ++found;
      stable.record(conjugate(a, e) == lifted, [&] { return std::to_string(i) + " at e=" + std::to_string(e); });
    }

    const auto f = random_laurent(rng, 3, 5);
    const auto tf = toeplitz_lift(f, s);
    const std::int64_t e = s.element_at(static_cast<std::size_t>(i % 7));
    fixed.record(conjugate(tf, e) == tf && symbol(tf) == f, [&] { return f.str(); });
  }
  out.push_back(hom.claim("symbol(AB) = symbol(A) symbol(B)", params));
  out.push_back(star.claim("symbol(A*) is the conjugate of symbol(A)", params));
  out.push_back(splitting.claim("A = lift(symbol(A)) + k with k in the commutator ideal", params));
  out.push_back(stable.claim("T_e* A T_e equals lift(symbol(A)) from the stabilization threshold on", params));
  out.push_back(fixed.claim("T_e* lift(f) T_e = lift(f) and symbol(lift(f)) = f", params));

  Tally commutators;
  std::vector<OperatorElement> letters;
  for (auto g : s.generators()) {
    letters.push_back(OperatorElement::from_monomial(elementary(s, g, false)));
    letters.push_back(OperatorElement::from_monomial(elementary(s, g, true)));
  }
  for (const auto& x : letters) {
    for (const auto& y : letters) commutators.record(in_ideal(x * y - y * x), [] { return "commutator"; });
  }
  out.push_back(commutators.claim("commutators of generators and their adjoints lie in the ideal"));

  Tally isometries;
  for (auto g : s.generators()) {
    isometries.record(is_isometry(OperatorElement::from_monomial(elementary(s, g, false))),
                      [&] { return "T(" + std::to_string(g) + ")"; });
  }
  out.push_back(isometries.claim("generators act as isometries"));
  return out;
}

// ---------------------------------------------------------------- weakhopf

std::vector<Claim> weakhopf_suite(const NumericalSemigroup& s, const SuiteOptions& o) {
  Rng rng(o.seed + 4);
  const std::size_t n = scaled(o, 500);
  const Json params{{"elements", n}, {"max_terms", 5}, {"max_word_length", 6}};
  std::vector<Claim> out;

  Tally hopf;
  Tally coassoc;
  Tally multiplicative;
  Tally antipode;
  Tally diagonal;
  Tally coaction;
  const auto probe = members_upto(s, s.frobenius() + 12);
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = random_free_element(rng, s, 5, 6);
    const auto y = random_free_element(rng, s, 5, 6);
    const auto h = weak_hopf_check(x);
    hopf.record(h.pass, [&] { return h.counterexample; });
    coassoc.record(coassociativity_check(x).pass, [&] { return x.str(); });
    multiplicative.record(coproduct(x * y) == tensor_multiply(coproduct(x), coproduct(y)),
                          [&] { return x.str() + " ; " + y.str(); });
    antipode.record(weak_antipode(weak_antipode(x)) == x, [&] { return x.str(); });

    const auto cop = coproduct(x);
    const auto rx = rep(x);
    bool diag = true;
    for (auto a : probe) {
      std::map<std::pair<std::int64_t, std::int64_t>, GaussianRational> want;
      for (const auto& [m, v] : rx.apply(a)) want.emplace(std::make_pair(m, m), v);
      auto got = tensor_apply(cop, a, a);
      // Off-diagonal entries of Δ(x)(e_a ⊗ e_a) cannot occur: both legs of
      // each term move by the same index.
      diag = diag && got == want;
    }
    diagonal.record(diag, [&] { return x.str(); });

    bool fixed_ok = is_coaction_fixed(x) == std::all_of(x.terms().begin(), x.terms().end(),
                                                        [](const auto& t) { return t.first.index() == 0; });
    coaction.record(coaction_axiom_check(x) && fixed_ok, [&] { return x.str(); });
  }
  out.push_back(hopf.claim("m(id⊗T⊗id)(Δ⊗id)Δ = id and m(T⊗id⊗T)(Δ⊗id)Δ = T", params));
  out.push_back(coassoc.claim("(Δ⊗id)Δ = (id⊗Δ)Δ", params));
  out.push_back(multiplicative.claim("Δ(xy) = Δ(x)Δ(y)", params));
  out.push_back(antipode.claim("T is an involution", params));
  out.push_back(diagonal.claim("diagonal of Δ(x) at (a,a) reproduces x e_a", params));
  out.push_back(coaction.claim("coaction axiom holds and fixed points are exactly index-0 combinations", params));

  const auto one = FreeElement::identity(s);
  out.push_back(exact_claim("T(1) = 1", {}, weak_antipode(one) == one, true));
  return out;
}

// ---------------------------------------------------------------- coideal

std::vector<Claim> coideal_suite(const NumericalSemigroup& s, const SuiteOptions&) {
  std::vector<Claim> out;
  const auto monomials = word_monomials(s, 2);
  Tally identity;
  Tally in_k;
  std::size_t nonzero = 0;
  for (const auto& v : monomials) {
    for (const auto& w : monomials) {
      const auto d = coideal_decomposition(v, w);
      identity.record(d.exact, [&] { return v.str() + " , " + w.str(); });
      if (!d.commutator_zero) ++nonzero;
      const auto comm = FreeElement::monomial(compose(v, w)) - FreeElement::monomial(compose(w, v));
      in_k.record(in_ideal(rep(comm)), [&] { return v.str() + " , " + w.str(); });
    }
  }
  const Json params{{"monomials", monomials.size()}, {"max_word_length", 4}};
  auto c = identity.claim("Δ(VW-WV) = (VW-WV)⊗VW + WV⊗(VW-WV)", params);
  c.computed["nonzero_commutators"] = nonzero;
  out.push_back(std::move(c));
  out.push_back(in_k.claim("monomial commutators have zero symbol", params));
  return out;
}

// ---------------------------------------------------------------- haar

std::vector<Claim> haar_suite(const NumericalSemigroup& s, const SuiteOptions& o) {
  Rng rng(o.seed + 5);
  std::vector<Claim> out;
  const auto functionals = functional_corpus(rng, s, scaled(o, 40));
  std::vector<FreeElement> elements{FreeElement::identity(s)};
  while (elements.size() < scaled(o, 25)) elements.push_back(random_free_element(rng, s, 5, 5));
  const Json params{{"functionals", functionals.size()}, {"elements", elements.size()}};
  const Json tol = 1e-12;

  Tally absorbing;
  for (const auto& phi : functionals) {
    for (const auto& x : elements) {
      const auto r = haar_property_check(phi, x);
      absorbing.record(r.pass, [&] { return phi.str() + " on " + x.str(); });
    }
  }
  auto c = absorbing.claim("h × φ = φ × h = φ(I) h", params);
  c.tolerance = tol;
  out.push_back(std::move(c));

  Tally assoc;
  Tally comm;
  std::uniform_int_distribution<std::size_t> pf(0, functionals.size() - 1);
  std::uniform_int_distribution<std::size_t> px(0, elements.size() - 1);
  for (std::size_t i = 0; i < scaled(o, 200); ++i) {
    const auto& f = functionals[pf(rng)];
    const auto& g = functionals[pf(rng)];
    const auto& h = functionals[pf(rng)];
    const auto& x = elements[px(rng)];
    using F = Functional;
    assoc.record(values_agree(F::convolution(F::convolution(f, g), h).eval(x),
                              F::convolution(f, F::convolution(g, h)).eval(x), 1e-12),
                 [&] { return f.str() + " " + g.str() + " " + h.str(); });
    comm.record(values_agree(F::convolution(f, g).eval(x), F::convolution(g, f).eval(x), 1e-12),
                [&] { return f.str() + " " + g.str(); });
  }
  c = assoc.claim("convolution is associative", {{"triples", scaled(o, 200)}});
  c.tolerance = tol;
  out.push_back(std::move(c));
  c = comm.claim("convolution is commutative", {{"pairs", scaled(o, 200)}});
  c.tolerance = tol;
  out.push_back(std::move(c));

  Tally angles;
  std::uniform_int_distribution<std::int64_t> turn(0, 29);
  for (std::size_t i = 0; i < scaled(o, 200); ++i) {
    const Rational alpha(turn(rng), 30);
    const Rational beta(turn(rng), 30);
    const auto& x = elements[px(rng)];
    angles.record(measure_convolution_check(alpha, beta, x),
                  [&] { return alpha.str() + "," + beta.str() + " on " + x.str(); });
  }
  c = angles.claim("δ_α × δ_β = δ_{α+β} on the element corpus", {{"samples", scaled(o, 200)}});
  c.tolerance = 1e-10;
  out.push_back(std::move(c));

  // Ideal elements: commutators of letters and I - T_g T_g*.
  std::vector<FreeElement> ideal;
  for (auto g : s.generators()) {
    const auto t = FreeElement::monomial(elementary(s, g, false));
    const auto ts = FreeElement::monomial(elementary(s, g, true));
    ideal.push_back(FreeElement::identity(s) - t * ts);
    ideal.push_back(ts * t - t * ts);
  }
  Tally annihilate;
  bool haar_detects = false;
  for (const auto& x : ideal) {
    annihilate.record(in_ideal(rep(x)) && std::abs(to_complex(Functional::point_mass(Rational(1, 7)).eval(x))) < 1e-12,
                      [&] { return x.str(); });
    haar_detects = haar_detects || !values_agree(Functional::haar().eval(x), GaussianRational(), 0);
  }
  c = annihilate.claim("point masses vanish on the commutator ideal");
  c.tolerance = 1e-12;
  out.push_back(std::move(c));
  out.push_back(exact_claim("Haar does not vanish on the ideal", {}, haar_detects, true));

  Tally pullback;
  for (const auto& x : elements) {
    for (std::size_t k = 0; k < 4; ++k) {
      const auto e = s.element_at(k);
      const auto pm = Functional::point_mass(Rational(static_cast<std::int64_t>(k) + 1, 5));
      pullback.record(values_agree(Functional::phi_star(pm, e).eval(x), pm.eval(x), 1e-10),
                      [&] { return x.str() + " e=" + std::to_string(e); });
    }
  }
  c = pullback.claim("Φ_e* fixes point masses", {{"elements", elements.size()}});
  c.tolerance = 1e-10;
  out.push_back(std::move(c));

  const auto g = s.generators().front();
  const auto p = ideal.front();
  out.push_back(exact_claim("Φ_g* moves Haar", {{"element", p.str()}, {"e", g}},
                            {{"haar", value_json(Functional::haar().eval(p))},
                             {"pulled_back", value_json(Functional::phi_star(Functional::haar(), g).eval(p))}},
                            {{"haar", "1"}, {"pulled_back", "0"}}));

  Tally factor;
  for (const auto& x : elements) {
    factor.record(Functional::haar().eval(x) == Functional::haar().eval(lift(rep(x))),
                  [&] { return x.str(); });
  }
  out.push_back(factor.claim("Haar factors through rep"));
  return out;
}

// ---------------------------------------------------------------- descent

std::vector<Claim> descent_suite(const NumericalSemigroup& s, const SuiteOptions&) {
  std::vector<Claim> out;
  if (!s.is_totally_ordered()) {
    const int len = 4;
    const auto monomials = word_monomials(s, len);
    const auto dep = find_dependency(monomials);
    const std::int64_t window = 2 * (s.frobenius() + len * max_generator(s));
    Json computed{{"dependency", dep ? free_json(*dep) : Json(nullptr)}};
    bool pass = dep.has_value();
    if (dep) {
      const auto w = descent_witness(*dep, window);
      computed["rep_is_zero"] = rep(*dep).is_zero();
      computed["witness"] = w ? Json{{"pair", {w->c, w->d}}, {"image", pair_image_json(w->image)}} : Json(nullptr);
      pass = pass && w.has_value();
    }
    Claim c;
    c.claim = "rep is not injective: a monomial dependency has Δ ≠ 0";
    c.parameters = {{"max_word_length", len}, {"monomials", monomials.size()}, {"window", window}};
    c.computed = std::move(computed);
    c.expected = {{"dependency", "nonzero"}, {"witness", "present"}};
    c.pass = pass;
    out.push_back(std::move(c));

    if (s == NumericalSemigroup::build({2, 3})) {
      const auto ind = [&](std::initializer_list<std::int64_t> below, std::int64_t n) {
        const std::vector<std::int64_t> keep(below);
        return PartialTranslation(s, 0, EventualSet::from_predicate(s, n, [&](std::int64_t d) {
                                    return std::find(keep.begin(), keep.end(), d) != keep.end();
                                  }));
      };
      FreeElement x(s);
      x.add_term(ind({2}, 4), 1);      // 2 + S
      x.add_term(ind({3}, 5), 1);      // 3 + S
      x.add_term(ind({}, 2), -1);      // S \ {0}
      x.add_term(ind({}, 5), -1);      // {d >= 5}
      const auto w = descent_witness(x, 10);
      out.push_back(exact_claim(
          "inclusion-exclusion dependence has rep 0 and tensor witness", {{"element", x.str()}, {"window", 10}},
          {{"rep_is_zero", rep(x).is_zero()},
           {"witness", w ? Json::array({w->c, w->d}) : Json(nullptr)},
           {"value", w ? pair_image_json(w->image) : Json(nullptr)}},
          {{"rep_is_zero", true}, {"witness", {2, 3}}, {"value", Json::array({Json::array({2, 3, "-1"})})}}));

      const auto v = FreeElement::monomial(evaluate_word(s, {{2, false}, {2, true}}));
      const auto corner = corner_diagram_check(v, 1, 10);
      Claim cc;
      cc.claim = "corner diagram for a = 1 fails on T(2)T*(2)";
      cc.parameters = {{"element", v.str()}, {"a", 1}, {"window", 10}};
      cc.computed = {{"pass", corner.pass},
                     {"witness", corner.witness ? Json::array({corner.witness->first, corner.witness->second})
                                                : Json(nullptr)}};
      cc.expected = {{"pass", false}, {"witness", {2, 3}}};
      cc.pass = cc.computed == cc.expected;
      out.push_back(std::move(cc));
    }

    Tally zero_class;
    for (const auto& m : monomials) {
      zero_class.record(corner_diagram_check(FreeElement::monomial(m), 0, window).pass, [&] { return m.str(); });
    }
    out.push_back(zero_class.claim("corner diagram holds for a = 0", {{"window", window}}));
  } else {
    const int len = 6;
    const auto monomials = word_monomials(s, len);
    const auto dep = find_dependency(monomials);
    out.push_back(exact_claim("rep is injective on word monomials",
                              {{"max_word_length", len}, {"monomials", monomials.size()}},
                              dep ? free_json(*dep) : Json(nullptr), Json(nullptr)));
    Tally corner;
    for (const auto& m : monomials) {
      for (std::int64_t a = -4; a <= 4; ++a) {
        const auto r = corner_diagram_check(FreeElement::monomial(m), a, 16);
        corner.record(r.pass, [&] {
          return m.str() + " a=" + std::to_string(a) + " at (" + std::to_string(r.witness->first) + "," +
                 std::to_string(r.witness->second) + ")";
        });
      }
    }
    out.push_back(corner.claim("corner diagram holds for |a| <= 4", {{"max_word_length", len}, {"window", 16}}));
  }

  Tally diagonal;
  for (const auto& m : word_monomials(s, 3)) {
    const auto x = FreeElement::monomial(m) - lift(rep(FreeElement::monomial(m)));
    for (std::int64_t a = 0; a <= 12; ++a) {
      if (!s.contains(a)) continue;
      diagonal.record(tensor_apply(coproduct(x), a, a).empty(), [&] { return m.str(); });
    }
  }
  out.push_back(diagonal.claim("diagonal pairs never witness a dependency"));
  return out;
}

// ---------------------------------------------------------------- fourier

std::vector<Claim> fourier_suite(const NumericalSemigroup& s, const SuiteOptions& o) {
  Rng rng(o.seed + 6);
  const std::size_t n = scaled(o, 100);
  std::vector<Claim> out;
  std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);

  double recovery = 0;
  double action = 0;
  double multiplicative = 0;
  double adjoints = 0;
  double fixed = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = random_operator(rng, s);
    const auto b = random_operator(rng, s);
    std::int64_t span = 0;
    for (const auto& [c, w] : a.components()) span = std::max(span, std::abs(c));
    std::set<std::int64_t> indices{span + 1};
    for (const auto& [c, w] : a.components()) indices.insert(c);
    for (auto c : indices) {
      for (int m : {static_cast<int>(2 * (span + 1) + 1), 64}) {
        recovery = std::max(recovery, weight_distance(fourier_project(a, c, m), to_complex(a.grade(c))));
      }
    }
    const double t1 = angle(rng);
    const double t2 = angle(rng);
    action = std::max(action, weight_distance(gauge_twist(a, t1 + t2), gauge_twist(gauge_twist(a, t1), t2)));
    action = std::max(action, weight_distance(gauge_twist(a, 0.0), to_complex(a)));
    multiplicative =
        std::max(multiplicative, weight_distance(gauge_twist(a * b, t1), gauge_twist(a, t1) * gauge_twist(b, t1)));
    adjoints = std::max(adjoints, weight_distance(gauge_twist(a.adjoint(), t1), gauge_twist(a, t1).adjoint()));
    fixed = std::max(fixed, weight_distance(gauge_twist(expectation(a), t1), to_complex(expectation(a))));
  }
  auto numeric = [&](std::string name, double computed, double tol) {
    Claim c;
    c.claim = std::move(name);
    c.parameters = {{"elements", n}};
    c.computed = {{"max_deviation", computed}};
    c.expected = {{"max_deviation", 0.0}};
    c.tolerance = tol;
    c.pass = computed <= tol;
    return c;
  };
  out.push_back(numeric("Fourier averaging recovers each graded component", recovery, 1e-9));
  out.push_back(numeric("gauge twist is a group action", action, 1e-12));
  out.push_back(numeric("gauge twist is multiplicative", multiplicative, 1e-12));
  out.push_back(numeric("gauge twist commutes with the adjoint", adjoints, 1e-12));
  out.push_back(numeric("zero-index elements are gauge invariant", fixed, 1e-12));
  return out;
}

// ---------------------------------------------------------------- norms

std::vector<LaurentPolynomial> test_symbols() {
  using L = LaurentPolynomial;
  auto m = [](std::int64_t e, GaussianRational c = 1) { return L::monomial(e, c); };
  return {
      m(1) + m(-1),
      m(2) + m(-3),
      L::constant(Rational(3, 2)),
      m(1),
      L::constant(1) + m(1),
      m(2) + m(3),
      m(1, GaussianRational(0, 1)) + m(-1, GaussianRational(0, -1)),
      L::constant(2) + m(1) + m(-1),
      m(3) + m(-2) + m(5, Rational(1, 2)),
      m(2, GaussianRational(1, 1)) - m(-1) + L::constant(Rational(1, 2)),
  };
}

std::vector<Claim> norms_suite(const NumericalSemigroup& s, const SuiteOptions&) {
  std::vector<Claim> out;
  const std::vector<std::size_t> dims{64, 128, 256, 512};
  for (const auto& f : test_symbols()) {
    const auto r = norm_convergence(f, s, dims);
    Claim c;
    c.claim = "truncated Toeplitz norms approach the sup norm of the symbol";
    c.parameters = {{"symbol", f.str()}, {"dims", dims}};
    c.computed = {{"norms", r.norms}, {"monotone", r.monotone}, {"sup_norm", r.sup.value},
                  {"sup_error_bound", r.sup.error_bound}};
    c.expected = {{"sup_norm", r.sup.value}, {"monotone", true}};
    c.tolerance = 0.05;
    c.pass = r.pass();
    out.push_back(std::move(c));
  }

  double worst = 0;
  worst = std::max(worst, std::abs(operator_norm(truncate(OperatorElement::identity(s), 32)) - 1));
  for (auto g : s.generators()) {
    worst = std::max(worst,
                     std::abs(operator_norm(truncate(OperatorElement::from_monomial(elementary(s, g, false)), 64)) - 1));
  }
  Claim iso;
  iso.claim = "identity and generator truncations have norm 1";
  iso.computed = {{"max_deviation", worst}};
  iso.expected = {{"max_deviation", 0.0}};
  iso.tolerance = 1e-8;
  iso.pass = worst <= 1e-8;
  out.push_back(std::move(iso));

  if (s.is_totally_ordered()) {
    const double got = operator_norm(truncate(toeplitz_lift(LaurentPolynomial::monomial(1) +
                                                                  LaurentPolynomial::monomial(-1),
                                                              s),
                                              64));
    const double want = 2 * std::cos(std::numbers::pi / 65);
    Claim c;
    c.claim = "tridiagonal truncation norm matches 2cos(π/(N+1))";
    c.parameters = {{"N", 64}};
    c.computed = got;
    c.expected = want;
    c.tolerance = 1e-6;
    c.pass = std::abs(got - want) <= 1e-6;
    out.push_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------- shift37

std::vector<Claim> shift_suite(const NumericalSemigroup&, const SuiteOptions&) {
  std::vector<Claim> out;
  const auto r = shift_example_check();
  const auto s = NumericalSemigroup::build({2, 3});
  const Json params{{"semigroup", {2, 3}}, {"steps", r.shift_steps}};

  out.push_back(exact_claim("T(2)(I - P) + T*(2)T(3) is the unilateral shift",
                            params, {{"shift", r.corrected_is_shift}, {"isometry", r.corrected_is_isometry}},
                            {{"shift", true}, {"isometry", true}}));

  Claim printed = exact_claim(
      "printed order (I - P)T(2) + T*(2)T(3) sends e_0 to 0", params,
      {{"shift", r.printed_is_shift},
       {"first_failure", r.printed_first_failure ? Json(*r.printed_first_failure) : Json(nullptr)},
       {"image", basis_image_json(r.printed_image_at_failure)},
       {"free_expansion", free_json(r.printed_free)}},
      {{"shift", false},
       {"first_failure", 0},
       {"image", Json::array()},
       {"free_expansion", free_json(FreeElement::monomial(max_translation(s, 1)))}});
  printed.computed["note"] = "factor order as printed does not give the shift; reported, not corrected";
  printed.expected["note"] = printed.computed["note"];
  out.push_back(std::move(printed));

  const auto p = evaluate_word(s, {{3, true}, {2, false}, {2, true}, {3, false}});
  const auto complement = rep(FreeElement::identity(s) - FreeElement::monomial(p));
  OperatorElement e00(s);
  e00.set_component(0, OperatorElement::Weight::tabulate(
                           s, 1, [](std::int64_t) { return GaussianRational(1); }, GaussianRational()));
  out.push_back(exact_claim("I - T*(3)T(2)T*(2)T(3) is the projection onto e_0", {},
                            {{"P", p.str()}, {"complement_is_e00", complement == e00}},
                            {{"P", PartialTranslation(s, 0, EventualSet::from_predicate(
                                                                  s, 2, [](std::int64_t) { return false; }))
                                       .str()},
                             {"complement_is_e00", true}}));

  const auto w = r.tensor_witness;
  out.push_back(exact_claim(
      "Δ(T) differs from T⊗T off the diagonal", {{"window", r.window}},
      {{"witness", w ? Json::array({w->first, w->second}) : Json(nullptr)},
       {"delta_image", pair_image_json(r.delta_image)},
       {"shift_tensor_image", Json::array({r.shift_image.first, r.shift_image.second})}},
      {{"witness", {0, 2}}, {"delta_image", Json::array({Json::array({2, 4, "1"})})}, {"shift_tensor_image", {2, 3}}}));
  out.push_back(exact_claim("Δ(T) agrees with T⊗T on diagonal pairs", {{"window", r.window}}, r.diagonal_agrees, true));
  return out;
}

using SuiteFn = std::vector<Claim> (*)(const NumericalSemigroup&, const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> table{
      {"order", order_suite},       {"inverse", inverse_suite}, {"grading", grading_suite},
      {"symbol", symbol_suite},     {"weakhopf", weakhopf_suite}, {"haar", haar_suite},
      {"coideal", coideal_suite},   {"descent", descent_suite}, {"fourier", fourier_suite},
      {"norms", norms_suite},       {"shift37", shift_suite},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suites()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<Claim> run_suite(const std::string& name, const NumericalSemigroup& s, const SuiteOptions& opts) {
  for (const auto& [n, fn] : suites()) {
    if (n == name) return fn(s, opts);
  }
  throw std::invalid_argument("unknown suite: " + name);
}

Json check_document(const std::string& name, const NumericalSemigroup& s, const SuiteOptions& opts) {
  if (name != "all") return suite_document(name, s, run_suite(name, s, opts));
  Json doc = document("check", &s);
  doc["suite"] = "all";
  bool pass = true;
  Json parts = Json::array();
  for (const auto& n : suite_names()) {
    Json part = suite_document(n, s, run_suite(n, s, opts));
    pass = pass && part["pass"].get<bool>();
    part.erase("schema_version");
    part.erase("command");
    part.erase("semigroup");
    parts.push_back(std::move(part));
  }
  doc["pass"] = pass;
  doc["suites"] = std::move(parts);
  return doc;
}

std::optional<FreeElement> find_dependency(const std::vector<PartialTranslation>& monomials) {
  std::optional<FreeElement> out;
  visit_dependencies(monomials, [&](const FreeElement& x) {
    out = x;
    return true;
  });
  return out;
}

GroupLikeSearch grouplike_search(const NumericalSemigroup& s, int max_terms, int max_word_len) {
  GroupLikeSearch out;
  const auto monomials = word_monomials(s, max_word_len);
  const std::vector<GaussianRational> single{1, -1, 2, Rational(1, 2), GaussianRational(0, 1)};
  const std::vector<GaussianRational> multi{1, -1};

  auto test = [&](const FreeElement& x) {
    ++out.candidates;
    if (auto c = group_like_detect(x)) {
      ++out.detections;
      out.found.insert(*c);
    }
  };
  const std::size_t n = monomials.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& a : single) test(FreeElement::monomial(monomials[i], a));
    if (max_terms < 2) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      for (const auto& a : multi) {
        for (const auto& b : multi) {
          FreeElement x(s);
          x.add_term(monomials[i], a);
          x.add_term(monomials[j], b);
          test(x);
        }
      }
      if (max_terms < 3) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        FreeElement x(s);
        x.add_term(monomials[i], 1);
        x.add_term(monomials[j], 1);
        x.add_term(monomials[k], 1);
        test(x);
      }
    }
  }
  return out;
}

Json morphism_document(const NumericalSemigroup& from, const NumericalSemigroup& to,
                       std::optional<std::int64_t> multiplier, int max_len, std::int64_t bound) {
  Json doc = document("morphism", nullptr);
  doc["from"] = from.generators();
  doc["to"] = to.generators();
  doc["max_length"] = max_len;
  std::vector<std::int64_t> ms;
  if (multiplier) {
    ms.push_back(*multiplier);
  } else {
    ms = morphism_multipliers(from, to, bound);
  }
  bool pass = true;
  Json results = Json::array();
  for (auto m : ms) {
    Json r;
    r["multiplier"] = m;
    r["trivial"] = m == 0;
    Json witness = nullptr;
    if (const auto w = quantum_morphism_falsify(from, to, m, max_len)) {
      witness = {{"kind", "word_pair"},
                 {"first", word_str(w->first)},
                 {"second", word_str(w->second)},
                 {"common_value", w->source.str()},
                 {"first_image", w->first_image.str()},
                 {"second_image", w->second_image.str()}};
    } else if (const auto lw = linear_morphism_falsify(from, to, m, max_len)) {
      Json relation = Json::array();
      for (const auto& [word, c] : lw->relation) relation.push_back({{"word", word_str(word)}, {"coefficient", c.str()}});
      witness = {{"kind", "linear_relation"},
                 {"relation", std::move(relation)},
                 {"source_operator_is_zero", true},
                 {"image", free_json(lw->image)},
                 {"image_operator", operator_json(rep(lw->image))}};
    }
    r["word_pair_stage"] = witness.is_object() && witness["kind"] == "word_pair" ? "witness" : "none";
    r["consistent"] = witness.is_null();
    r["witness"] = witness;
    if (witness.is_null()) {
      r["note"] = m == 0 ? "trivial morphism: every word maps to I, so no witness can exist"
                         : "consistent up to length " + std::to_string(max_len);
    } else {
      pass = false;
    }
    results.push_back(std::move(r));
  }
  doc["pass"] = pass;
  doc["results"] = std::move(results);
  return doc;
}

}  // namespace sgq
