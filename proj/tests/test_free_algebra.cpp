#include <doctest.h>

#include "oracle.hpp"
#include "sgq/algebra.hpp"
#include "sgq/checks.hpp"
#include "sgq/free_algebra.hpp"

using namespace sgq;

namespace {

FreeElement build(const NumericalSemigroup& s, const oracle::Combo& x) {
  FreeElement out(s);
  for (const auto& [w, c] : x) out.add_term(evaluate_word(s, w), c);
  return out;
}

// Δ(x)(e_c ⊗ e_d) from the words: Σ λ V e_c ⊗ V e_d.
std::map<std::pair<std::int64_t, std::int64_t>, GaussianRational> delta(const oracle::Semigroup& o,
                                                                        const oracle::Combo& x, std::int64_t c,
                                                                        std::int64_t d) {
  std::map<std::pair<std::int64_t, std::int64_t>, GaussianRational> out;
  for (const auto& [w, k] : x) {
    const auto l = oracle::act(o, w, c);
    const auto r = oracle::act(o, w, d);
    if (l && r) {
      auto& slot = out[{*l, *r}];
      slot += k;
      if (slot.is_zero()) out.erase({*l, *r});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("coproduct acts diagonally on basis pairs") {
  std::mt19937_64 rng(31);
  for (const std::vector<std::int64_t>& gens : {std::vector<std::int64_t>{2, 3}, {3, 5}}) {
    const auto s = NumericalSemigroup::build(gens);
    const auto o = oracle::brute(gens);
    for (int i = 0; i < 40; ++i) {
      const auto x = oracle::random_combo(rng, gens, 4, 5);
      const auto cop = coproduct(build(s, x));
      for (auto c : o.members(20)) {
        for (auto d : o.members(20)) REQUIRE(tensor_apply(cop, c, d) == delta(o, x, c, d));
      }
    }
  }
}

TEST_CASE("coproduct is multiplicative and *-preserving") {
  std::mt19937_64 rng(32);
  const std::vector<std::int64_t> gens{2, 3};
  const auto s = NumericalSemigroup::build(gens);
  for (int i = 0; i < 80; ++i) {
    const auto x = build(s, oracle::random_combo(rng, gens, 3, 5));
    const auto y = build(s, oracle::random_combo(rng, gens, 3, 5));
    CHECK(coproduct(x * y) == tensor_multiply(coproduct(x), coproduct(y)));
    CHECK(coproduct(x.adjoint()) == tensor_adjoint(coproduct(x)));
    CHECK(coproduct_left_iterated(x) == coproduct_right_iterated(x));
    CHECK(weak_hopf_check(x).pass);
    CHECK(coaction_axiom_check(x));
  }
}

TEST_CASE("weak antipode reverses words without conjugating") {
  const std::vector<std::int64_t> gens{3, 5};
  const auto s = NumericalSemigroup::build(gens);
  const auto o = oracle::brute(gens);
  const Word w{{3, false}, {5, true}, {5, false}};
  const Word r{{5, true}, {5, false}, {3, true}};
  const GaussianRational k(1, 2);
  const auto t = weak_antipode(FreeElement::monomial(evaluate_word(s, w), k));
  const auto a = rep(t);
  for (auto d : o.members(50)) CHECK(a.apply(d) == oracle::act(o, oracle::Combo{{r, k}}, d));
}

TEST_CASE("group-like isometries are the translations by members") {
  const auto s = NumericalSemigroup::build({2, 3});
  for (std::int64_t c : {0, 2, 3, 4, 5, 7}) {
    CHECK(group_like_detect(FreeElement::monomial(max_translation(s, c))) == c);
  }
  // Group-like but not isometric.
  CHECK_FALSE(group_like_detect(FreeElement::monomial(evaluate_word(s, {{2, false}, {2, true}}))).has_value());
  // Equal monomials merge into T(2); a sum of distinct ones is not group-like.
  FreeElement x(s);
  x.add_term(max_translation(s, 2), GaussianRational(Rational(1, 2)));
  x.add_term(max_translation(s, 2), GaussianRational(Rational(1, 2)));
  CHECK(group_like_detect(x) == 2);
  FreeElement y = FreeElement::monomial(max_translation(s, 2)) + FreeElement::monomial(max_translation(s, 3));
  CHECK_FALSE(group_like_detect(y).has_value());
}

TEST_CASE("grouplike search over <2,3> finds exactly the members reachable by short words") {
  const auto s = NumericalSemigroup::build({2, 3});
  const auto r = grouplike_search(s, 2, 3);
  std::set<std::int64_t> want{0};
  for (std::int64_t i = 0; i <= 3; ++i) {
    for (std::int64_t j = 0; i + j <= 3; ++j) want.insert(2 * i + 3 * j);
  }
  CHECK(r.found == want);
}

TEST_CASE("coideal decomposition of commutators") {
  std::mt19937_64 rng(33);
  const std::vector<std::int64_t> gens{2, 3};
  const auto s = NumericalSemigroup::build(gens);
  for (int i = 0; i < 100; ++i) {
    const auto v = evaluate_word(s, oracle::random_word(rng, gens, 3));
    const auto w = evaluate_word(s, oracle::random_word(rng, gens, 3));
    const auto d = coideal_decomposition(v, w);
    CHECK(d.exact);
    CHECK(d.lhs == d.first + d.second);
  }
}

TEST_CASE("coaction fixed points are the index-zero combinations") {
  const auto s = NumericalSemigroup::build({2, 3});
  CHECK(is_coaction_fixed(FreeElement::monomial(evaluate_word(s, {{2, false}, {2, true}}))));
  CHECK_FALSE(is_coaction_fixed(FreeElement::monomial(elementary(s, 3, false))));
}

TEST_CASE("rep is not injective over <2,3>, and Δ sees the difference") {
  const std::vector<std::int64_t> gens{2, 3};
  const auto s = NumericalSemigroup::build(gens);
  const auto o = oracle::brute(gens);
  // 1_{2+S} + 1_{3+S} - 1_{S\{0}} - 1_{d>=5}
  const auto ind = [&](std::vector<std::int64_t> keep, std::int64_t n) {
    return PartialTranslation(s, 0, EventualSet::from_predicate(s, n, [&](std::int64_t d) {
                                return std::find(keep.begin(), keep.end(), d) != keep.end();
                              }));
  };
  FreeElement e(s);
  e.add_term(ind({2}, 4), 1);
  e.add_term(ind({3}, 5), 1);
  e.add_term(ind({}, 2), -1);
  e.add_term(ind({}, 5), -1);
  CHECK(e.terms().size() == 4);
  CHECK(rep(e).is_zero());
  const auto w = descent_witness(e, 10);
  REQUIRE(w.has_value());
  // Independent evaluation of Δ(e)(e_c ⊗ e_d) = Σ λ [c in D][d in D] e_c ⊗ e_d.
  const auto in = [&](std::int64_t d, int which) {
    switch (which) {
      case 0: return o.contains(d - 2);
      case 1: return o.contains(d - 3);
      case 2: return d > 0;
      default: return d >= 5;
    }
  };
  const int lambda[] = {1, 1, -1, -1};
  const auto value = [&](std::int64_t c, std::int64_t d) {
    int v = 0;
    for (int k = 0; k < 4; ++k) v += (in(c, k) && in(d, k)) ? lambda[k] : 0;
    return v;
  };
  CHECK(value(w->c, w->d) != 0);
  CHECK(w->image.size() == 1);
  CHECK(w->image.at({w->c, w->d}) == GaussianRational(value(w->c, w->d)));
  CHECK(std::make_pair(w->c, w->d) == std::make_pair<std::int64_t, std::int64_t>(2, 3));
  CHECK(value(2, 3) == -1);
  CHECK_THROWS_AS(descent_witness(FreeElement::monomial(elementary(s, 2, false)), 10), std::invalid_argument);
}

TEST_CASE("corner diagrams") {
  const auto s = NumericalSemigroup::build({2, 3});
  const auto p = FreeElement::monomial(evaluate_word(s, {{2, false}, {2, true}}));
  const auto r = corner_diagram_check(p, 1, 10);
  CHECK_FALSE(r.pass);
  CHECK(r.witness == std::make_pair<std::int64_t, std::int64_t>(2, 3));
  CHECK(corner_diagram_check(p, 0, 10).pass);

  const auto z = NumericalSemigroup::naturals();
  for (const auto& v : enumerate_words(z, 3)) {
    const auto x = FreeElement::monomial(evaluate_word(z, v));
    for (std::int64_t a = -3; a <= 3; ++a) REQUIRE(corner_diagram_check(x, a, 12).pass);
  }
}

TEST_CASE("over the naturals rep is injective on short words") {
  const auto z = NumericalSemigroup::naturals();
  std::vector<PartialTranslation> monomials;
  for (const auto& w : enumerate_words(z, 5)) monomials.push_back(evaluate_word(z, w));
  std::sort(monomials.begin(), monomials.end());
  monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
  CHECK_FALSE(find_dependency(monomials).has_value());
}

TEST_CASE("word-pair falsifier finds nothing from <2,3> to the naturals") {
  const auto s = NumericalSemigroup::build({2, 3});
  const auto z = NumericalSemigroup::naturals();
  for (std::int64_t m = 1; m <= 3; ++m) CHECK_FALSE(quantum_morphism_falsify(s, z, m, 4).has_value());
  CHECK_THROWS_AS(quantum_morphism_falsify(z, s, 1, 3), std::invalid_argument);
}

TEST_CASE("linear falsifier witness checks out against the word action") {
  const std::vector<std::int64_t> from{2, 3};
  const auto s = NumericalSemigroup::build(from);
  const auto z = NumericalSemigroup::naturals();
  const auto o1 = oracle::brute(from);
  const auto o2 = oracle::brute({1});
  for (std::int64_t m = 1; m <= 6; ++m) {
    const auto w = linear_morphism_falsify(s, z, m, 4);
    REQUIRE(w.has_value());
    CHECK_FALSE(w->relation.empty());
    for (auto d : o1.members(60)) REQUIRE(oracle::act(o1, w->relation, d).empty());
    bool moved = false;
    for (std::int64_t d = 0; d < 60 && !moved; ++d) {
      std::map<std::int64_t, GaussianRational> img;
      for (const auto& [word, c] : w->relation) {
        if (auto r = oracle::act(o2, word, d, m)) img[*r] += c;
      }
      std::erase_if(img, [](const auto& kv) { return kv.second.is_zero(); });
      moved = !img.empty();
    }
    CHECK(moved);
    CHECK_FALSE(rep(w->image).is_zero());
  }
  CHECK_FALSE(linear_morphism_falsify(z, z, 1, 4).has_value());
}
