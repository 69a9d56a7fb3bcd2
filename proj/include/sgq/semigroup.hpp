#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace sgq {

// A numerical semigroup S: the additive submonoid of the non-negative
// integers generated by a gcd-1 set of positive integers. Its difference group
// is Z and its complement in Z+ (the gaps) is finite.
//
// Instances are cheap handles onto immutable shared data; copies are safe to
// share between threads.
class NumericalSemigroup {
 public:
  // Throws std::invalid_argument for an empty list, non-positive entries, a
  // gcd different from 1, or generators whose sieve would be unreasonably big.
  static NumericalSemigroup build(std::vector<std::int64_t> generators);

  // Z+ itself, generated by {1}.
  static NumericalSemigroup naturals() { return build({1}); }

  const std::vector<std::int64_t>& generators() const;
  const std::vector<std::int64_t>& gaps() const;
  // Largest integer not in S; -1 when S = Z+.
  std::int64_t frobenius() const;

  bool contains(std::int64_t n) const;

  // The i-th smallest member, i = 0, 1, ...
  std::int64_t element_at(std::size_t i) const;
  // Inverse of element_at; requires a member.
  std::size_t position_of(std::int64_t member) const;

  // Natural quasi-order: a precedes b iff b - a lies in S. Throws
  // std::invalid_argument when either argument is not a member.
  bool natural_below(std::int64_t a, std::int64_t b) const;

  // True iff the natural order is total. Decided by a pairwise comparability
  // scan and cross-checked against gaps().empty().
  bool is_totally_ordered() const;

  // Comma-separated generator list, e.g. "2,3".
  std::string str() const;

  // Equality of the underlying sets (two different generator lists may
  // describe the same semigroup).
  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b);

 private:
  struct Data;
  explicit NumericalSemigroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

// Every additive map S1 -> S2 extends to Z -> Z and so is multiplication by
// some m >= 0. Returns the m in [0, bound] with m*g in S2 for each generator g
// of S1 (m = 0, the trivial morphism, is always present).
std::vector<std::int64_t> morphism_multipliers(const NumericalSemigroup& from,
                                               const NumericalSemigroup& to,
                                               std::int64_t bound);

// All m with m*S = S. Always {1} for a numerical semigroup; the result is
// computed by search and asserted.
std::vector<std::int64_t> automorphism_multipliers(const NumericalSemigroup& s);

}  // namespace sgq
