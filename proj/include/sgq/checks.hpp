#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sgq/report.hpp"

namespace sgq {

struct SuiteOptions {
  std::uint64_t seed = 20240917;
  // Multiplies the number of random samples in every suite.
  double scale = 1.0;
};

// order, inverse, grading, symbol, weakhopf, haar, coideal, descent,
// fourier, norms, shift37.
const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for an unknown suite. shift37 always runs over
// <2,3> whatever S is.
std::vector<Claim> run_suite(const std::string& name, const NumericalSemigroup& s, const SuiteOptions& opts = {});

// Report document for one suite, or for every suite when name == "all".
Json check_document(const std::string& name, const NumericalSemigroup& s, const SuiteOptions& opts = {});

// A nonzero combination of the given monomials whose representation is 0, if
// one exists. Exact elimination, one index at a time.
std::optional<FreeElement> find_dependency(const std::vector<PartialTranslation>& monomials);

struct GroupLikeSearch {
  std::set<std::int64_t> found;  // indices c of the group-like isometries met
  std::size_t candidates = 0;
  std::size_t detections = 0;
};

// Runs group_like_detect on every combination of at most max_terms distinct
// word monomials (words up to max_word_len) with small coefficients.
GroupLikeSearch grouplike_search(const NumericalSemigroup& s, int max_terms, int max_word_len);

// Falsification report for T_a -> T_{m a}. Without a multiplier every
// admissible m up to `bound` is tried. "pass" is true when no inconsistency
// was found.
Json morphism_document(const NumericalSemigroup& from, const NumericalSemigroup& to,
                       std::optional<std::int64_t> multiplier, int max_len, std::int64_t bound = 6);

}  // namespace sgq
