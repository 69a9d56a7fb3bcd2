#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sgq/semigroup.hpp"

namespace sgq {

// A subset D of S that contains every member from some point on:
// D = members_below ∪ { s in S : s >= threshold }. Stored canonically, with
// the smallest threshold that describes D, so equality is structural.
class EventualSet {
 public:
  // The whole semigroup.
  EventualSet() = default;

  // Builds {d in S : d >= bound} ∪ {d in S : d < bound, pred(d)}.
  static EventualSet from_predicate(const NumericalSemigroup& s, std::int64_t bound,
                                    const std::function<bool(std::int64_t)>& pred);

  std::int64_t threshold() const { return threshold_; }
  const std::vector<std::int64_t>& members_below() const { return below_; }

  bool contains(const NumericalSemigroup& s, std::int64_t d) const;
  bool is_full() const { return threshold_ == 0; }

  friend bool operator==(const EventualSet&, const EventualSet&) = default;
  friend auto operator<=>(const EventualSet&, const EventualSet&) = default;

 private:
  std::int64_t threshold_ = 0;
  std::vector<std::int64_t> below_;
};

// A monomial of the regular representation: the partial translation
// e_d -> e_{d + index} for d in domain, e_d -> 0 otherwise.
//
// Equality and ordering look at (index, domain) only; values combined in one
// computation must belong to the same semigroup, which the operations check.
class PartialTranslation {
 public:
  PartialTranslation(NumericalSemigroup s, std::int64_t index, EventualSet domain);

  const NumericalSemigroup& semigroup() const { return s_; }
  std::int64_t index() const { return index_; }
  const EventualSet& domain() const { return domain_; }

  bool in_domain(std::int64_t d) const { return domain_.contains(s_, d); }

  // `PT(c; {m1,m2,...}; N)`.
  std::string str() const;

  friend bool operator==(const PartialTranslation& a, const PartialTranslation& b) {
    return a.index_ == b.index_ && a.domain_ == b.domain_;
  }
  friend std::strong_ordering operator<=>(const PartialTranslation& a, const PartialTranslation& b) {
    if (auto c = a.index_ <=> b.index_; c != 0) return c;
    return a.domain_ <=> b.domain_;
  }

 private:
  NumericalSemigroup s_;
  std::int64_t index_;
  EventualSet domain_;
};

// T_a (starred = false) or T_a^* (starred = true). Throws
// std::invalid_argument when a is not a member.
PartialTranslation elementary(const NumericalSemigroup& s, std::int64_t a, bool starred);

PartialTranslation identity_translation(const NumericalSemigroup& s);

// Operator product v∘w (w applied first).
PartialTranslation compose(const PartialTranslation& v, const PartialTranslation& w);

PartialTranslation adjoint(const PartialTranslation& v);

// v e_d; empty when e_d is killed. Throws for d outside S.
std::optional<std::int64_t> apply(const PartialTranslation& v, std::int64_t d);

// The maximal-domain translation of index c, {d in S : d + c in S}. It equals
// T_a^* T_b for every a, b in S with b - a = c.
PartialTranslation max_translation(const NumericalSemigroup& s, std::int64_t c);

struct Letter {
  std::int64_t gen = 0;
  bool starred = false;
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// Operator-product order: the rightmost letter acts first.
using Word = std::vector<Letter>;

PartialTranslation evaluate_word(const NumericalSemigroup& s, const Word& word);

// "T*(3)*T(2)".
std::string word_str(const Word& word);

// All non-empty words of length <= max_len over the letters T_g, T_g^* for
// the generators g of S, ordered by length and then lexicographically with
// letters sorted as T_g < T_g^* < T_{g'} for g < g'.
std::vector<Word> enumerate_words(const NumericalSemigroup& s, int max_len);

}  // namespace sgq
