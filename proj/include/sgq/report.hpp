#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sgq/free_algebra.hpp"
#include "sgq/functional.hpp"
#include "sgq/graded_operator.hpp"
#include "sgq/laurent.hpp"

namespace sgq {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// One verified claim: {claim, parameters, computed, expected, tolerance, pass}.
struct Claim {
  std::string claim;
  Json parameters = Json::object();
  Json computed;
  Json expected;
  Json tolerance;  // null for exact comparisons
  bool pass = false;
};

Json to_json(const Claim& c);

Json semigroup_json(const NumericalSemigroup& s);
Json translation_json(const PartialTranslation& v);
Json word_json(const Word& w);
Json free_json(const FreeElement& x);
Json tensor_json(const FreeTensor& t);
Json operator_json(const OperatorElement& a);
Json complex_operator_json(const ComplexOperator& a);
Json laurent_json(const LaurentPolynomial& f);
Json value_json(const Value& v);
Json basis_image_json(const std::map<std::int64_t, GaussianRational>& image);
Json pair_image_json(const std::map<std::pair<std::int64_t, std::int64_t>, GaussianRational>& image);

// Top-level document shared by every command.
Json document(const std::string& command, const NumericalSemigroup* s);

// Appends claims and sets the overall pass flag.
Json suite_document(const std::string& suite, const NumericalSemigroup& s, const std::vector<Claim>& claims);

}  // namespace sgq
