#include "sgq/report.hpp"

namespace sgq {

Json to_json(const Claim& c) {
  Json j;
  j["claim"] = c.claim;
  j["parameters"] = c.parameters;
  j["computed"] = c.computed;
  j["expected"] = c.expected;
  j["tolerance"] = c.tolerance;
  j["pass"] = c.pass;
  return j;
}

Json semigroup_json(const NumericalSemigroup& s) {
  Json j;
  j["generators"] = s.generators();
  j["gaps"] = s.gaps();
  j["frobenius"] = s.frobenius();
  j["totally_ordered"] = s.is_totally_ordered();
  return j;
}

Json translation_json(const PartialTranslation& v) {
  Json j;
  j["index"] = v.index();
  j["members_below"] = v.domain().members_below();
  j["threshold"] = v.domain().threshold();
  j["text"] = v.str();
  return j;
}

Json word_json(const Word& w) { return word_str(w); }

Json free_json(const FreeElement& x) {
  Json terms = Json::array();
  for (const auto& [v, c] : x.terms()) terms.push_back({{"monomial", v.str()}, {"coefficient", c.str()}});
  return terms;
}

Json tensor_json(const FreeTensor& t) {
  Json terms = Json::array();
  for (const auto& [k, c] : t.terms()) {
    terms.push_back({{"left", k.first.str()}, {"right", k.second.str()}, {"coefficient", c.str()}});
  }
  return terms;
}

Json operator_json(const OperatorElement& a) {
  Json comps = Json::array();
  for (const auto& [c, w] : a.components()) {
    Json exceptional = Json::array();
    for (const auto& [d, v] : w.below()) exceptional.push_back({d, v.str()});
    comps.push_back({{"index", c}, {"exceptional", exceptional}, {"tail", w.tail().str()}, {"threshold", w.threshold()}});
  }
  return comps;
}

Json complex_operator_json(const ComplexOperator& a) {
  Json comps = Json::array();
  for (const auto& [c, w] : a.components()) {
    Json exceptional = Json::array();
    for (const auto& [d, v] : w.below()) exceptional.push_back({d, {v.real(), v.imag()}});
    comps.push_back({{"index", c},
                     {"exceptional", exceptional},
                     {"tail", {w.tail().real(), w.tail().imag()}},
                     {"threshold", w.threshold()}});
  }
  return comps;
}

Json laurent_json(const LaurentPolynomial& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.coefficients()) terms.push_back({{"exponent", e}, {"coefficient", c.str()}});
  return {{"text", f.str()}, {"terms", terms}};
}

Json value_json(const Value& v) {
  if (is_exact(v)) return std::get<GaussianRational>(v).str();
  const auto z = std::get<std::complex<double>>(v);
  return Json::array({z.real(), z.imag()});
}

Json basis_image_json(const std::map<std::int64_t, GaussianRational>& image) {
  Json out = Json::array();
  for (const auto& [d, v] : image) out.push_back({d, v.str()});
  return out;
}

Json pair_image_json(const std::map<std::pair<std::int64_t, std::int64_t>, GaussianRational>& image) {
  Json out = Json::array();
  for (const auto& [p, v] : image) out.push_back({p.first, p.second, v.str()});
  return out;
}

Json document(const std::string& command, const NumericalSemigroup* s) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  if (s) j["semigroup"] = s->generators();
  return j;
}

Json suite_document(const std::string& suite, const NumericalSemigroup& s, const std::vector<Claim>& claims) {
  Json j = document("check", &s);
  j["suite"] = suite;
  bool pass = true;
  Json arr = Json::array();
  for (const auto& c : claims) {
    pass = pass && c.pass;
    arr.push_back(to_json(c));
  }
  j["pass"] = pass;
  j["claims"] = std::move(arr);
  return j;
}

}  // namespace sgq
