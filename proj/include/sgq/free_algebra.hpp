#pragma once

#include <array>
#include <functional>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgq/graded_operator.hpp"
#include "sgq/laurent.hpp"
#include "sgq/translation.hpp"

namespace sgq {

// An element of the inverse semigroup algebra C[Σ]: a finite combination of
// monomials, each monomial a *free* basis vector. Two monomials are the same
// basis vector iff they are the same partial translation.
class FreeElement {
 public:
  using Terms = std::map<PartialTranslation, GaussianRational>;

  explicit FreeElement(NumericalSemigroup s) : s_(std::move(s)) {}

  static FreeElement monomial(const PartialTranslation& v, GaussianRational coeff = 1);
  static FreeElement identity(const NumericalSemigroup& s);
  static FreeElement scalar(const NumericalSemigroup& s, GaussianRational k);

  const NumericalSemigroup& semigroup() const { return s_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const PartialTranslation& v, const GaussianRational& c);

  FreeElement& operator+=(const FreeElement& o);
  FreeElement& operator-=(const FreeElement& o);
  friend FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }
  friend FreeElement operator-(FreeElement a, const FreeElement& b) { return a -= b; }
  friend FreeElement operator*(const GaussianRational& k, const FreeElement& x);
  // Product in C[Σ]: monomials multiply by composition.
  friend FreeElement operator*(const FreeElement& x, const FreeElement& y);
  friend bool operator==(const FreeElement& a, const FreeElement& b) { return a.terms_ == b.terms_; }

  // Conjugate-linear involution: (λV)^* = conj(λ) V^*.
  FreeElement adjoint() const;

  std::string str() const;

 private:
  NumericalSemigroup s_;
  Terms terms_;
};

// Finite combination of pairs (V, W); the pair is the partial translation of
// S x S with index (ind V, ind W) and domain D_V x D_W.
class FreeTensor {
 public:
  using Key = std::pair<PartialTranslation, PartialTranslation>;
  using Terms = std::map<Key, GaussianRational>;

  explicit FreeTensor(NumericalSemigroup s) : s_(std::move(s)) {}

  const NumericalSemigroup& semigroup() const { return s_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const PartialTranslation& v, const PartialTranslation& w, const GaussianRational& c);

  FreeTensor& operator+=(const FreeTensor& o);
  FreeTensor& operator-=(const FreeTensor& o);
  friend FreeTensor operator+(FreeTensor a, const FreeTensor& b) { return a += b; }
  friend FreeTensor operator-(FreeTensor a, const FreeTensor& b) { return a -= b; }
  friend bool operator==(const FreeTensor& a, const FreeTensor& b) { return a.terms_ == b.terms_; }

 private:
  NumericalSemigroup s_;
  Terms terms_;
};

class FreeTriple {
 public:
  using Key = std::array<PartialTranslation, 3>;
  using Terms = std::map<Key, GaussianRational>;

  explicit FreeTriple(NumericalSemigroup s) : s_(std::move(s)) {}
  const NumericalSemigroup& semigroup() const { return s_; }
  const Terms& terms() const { return terms_; }
  void add_term(const Key& k, const GaussianRational& c);
  friend bool operator==(const FreeTriple& a, const FreeTriple& b) { return a.terms_ == b.terms_; }

 private:
  NumericalSemigroup s_;
  Terms terms_;
};

// Elementary tensor x ⊗ y.
FreeTensor tensor(const FreeElement& x, const FreeElement& y);

// Representation on l2(S). Not injective unless S is totally ordered.
OperatorElement rep(const FreeElement& x);

// A preimage under rep built from maximal-domain tails, so rep(lift(a)) == a.
FreeElement lift(const OperatorElement& a);

// Δ(Σ λ_i V_i) = Σ λ_i V_i ⊗ V_i.
FreeTensor coproduct(const FreeElement& x);

FreeTensor tensor_multiply(const FreeTensor& s, const FreeTensor& t);
FreeTensor tensor_adjoint(const FreeTensor& s);

// Coefficients of s (e_c ⊗ e_d), keyed by basis pair.
std::map<std::pair<std::int64_t, std::int64_t>, GaussianRational> tensor_apply(const FreeTensor& s,
                                                                              std::int64_t c,
                                                                              std::int64_t d);

// V -> V^* on the basis with coefficients unchanged (linear, not
// conjugate-linear).
FreeElement weak_antipode(const FreeElement& x);

// (Δ ⊗ id)Δ and (id ⊗ Δ)Δ, computed by separate routes.
FreeTriple coproduct_left_iterated(const FreeElement& x);
FreeTriple coproduct_right_iterated(const FreeElement& x);

struct CheckOutcome {
  bool pass = true;
  std::string counterexample;  // empty on pass
};

// m(id ⊗ T ⊗ id)(Δ ⊗ id)Δ = id and m(T ⊗ id ⊗ T)(Δ ⊗ id)Δ = T, evaluated on x.
CheckOutcome weak_hopf_check(const FreeElement& x);

CheckOutcome coassociativity_check(const FreeElement& x);

// Returns c when Δ(x) = x ⊗ x and rep(x) is an isometry; then x is exactly
// the full-domain monomial T_c.
std::optional<std::int64_t> group_like_detect(const FreeElement& x);

struct CoidealDecomposition {
  FreeTensor lhs;     // Δ(VW - WV)
  FreeTensor first;   // (VW - WV) ⊗ VW
  FreeTensor second;  // WV ⊗ (VW - WV)
  bool exact = false;
  bool commutator_zero = false;
};

CoidealDecomposition coideal_decomposition(const PartialTranslation& v, const PartialTranslation& w);

// δ(V) = V ⊗ χ^{ind V}, extended linearly.
using Coaction = std::map<PartialTranslation, std::pair<GaussianRational, LaurentPolynomial>>;
Coaction delta_coaction(const FreeElement& x);

// (δ ⊗ id)δ = (id ⊗ Δ_G)δ on x, both sides computed independently.
bool coaction_axiom_check(const FreeElement& x);

// δ(x) = x ⊗ 1, which holds iff every monomial of x has index 0.
bool is_coaction_fixed(const FreeElement& x);

struct PairWitness {
  std::int64_t c = 0;
  std::int64_t d = 0;
  // Δ(x)(e_c ⊗ e_d), keyed by basis pair.
  std::map<std::pair<std::int64_t, std::int64_t>, GaussianRational> image;
};

// For x with rep(x) = 0, the first basis pair (c, d), both <= window, where
// Δ(x)(e_c ⊗ e_d) is nonzero. Throws std::invalid_argument if rep(x) != 0.
std::optional<PairWitness> descent_witness(const FreeElement& x, std::int64_t window);

struct CornerOutcome {
  bool pass = true;
  std::optional<std::pair<std::int64_t, std::int64_t>> witness;
};

// Diagram check on the class H_a = span{e_l ⊗ e_k : k - l = a}. The smaller
// leg of each basis pair is projected out of Δ(x)(e_l ⊗ e_k) and compared
// with P_a x e_base, P_a the projection onto {m : m + |a| in S}. For a < 0 the
// pair is read through the flip symmetry of Δ.
CornerOutcome corner_diagram_check(const FreeElement& x, std::int64_t a, std::int64_t window);

struct MorphismWitness {
  Word first;
  Word second;
  PartialTranslation source;  // common value in S1
  PartialTranslation first_image;
  PartialTranslation second_image;
};

// Semi-decision search for an inconsistency of T_a -> T_{m a}: two words over
// the generators of `from` that are equal in S1 but whose images in `to`
// differ. Absence means "consistent up to max_word_len". Throws
// std::invalid_argument when m is not an admissible multiplier.
std::optional<MorphismWitness> quantum_morphism_falsify(const NumericalSemigroup& from,
                                                        const NumericalSemigroup& to, std::int64_t m,
                                                        int max_word_len);

// Calls visit on a basis of the linear relations among distinct monomials
// (combinations with rep == 0), in discovery order, until visit returns true.
void visit_dependencies(const std::vector<PartialTranslation>& monomials,
                        const std::function<bool(const FreeElement&)>& visit);

struct LinearMorphismWitness {
  std::vector<std::pair<Word, GaussianRational>> relation;  // sum is 0 in S1
  FreeElement image;                                        // rep(image) != 0 in S2
};

// Second stage of the falsifier: a linear combination of words that vanishes
// as an operator on l2(S1) while the combination of the mapped words does not
// vanish on l2(S2). Assumes the word-pair stage found nothing, so images of
// equal monomials agree.
std::optional<LinearMorphismWitness> linear_morphism_falsify(const NumericalSemigroup& from,
                                                             const NumericalSemigroup& to, std::int64_t m,
                                                             int max_word_len);

}  // namespace sgq
