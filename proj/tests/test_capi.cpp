#include <doctest.h>

#include <memory>
#include <string>

#include <json.hpp>

#include "sgq/sgq.h"

namespace {

struct Text {
  char* p = nullptr;
  ~Text() { sg_string_free(p); }
  nlohmann::json json() const { return nlohmann::json::parse(p); }
};

using Semigroup = std::unique_ptr<sg_semigroup, decltype(&sg_semigroup_destroy)>;
using Element = std::unique_ptr<sg_element, decltype(&sg_element_destroy)>;
using Func = std::unique_ptr<sg_functional, decltype(&sg_functional_destroy)>;

Semigroup make(std::initializer_list<int64_t> gens) {
  const std::vector<int64_t> g(gens);
  sg_semigroup* s = nullptr;
  REQUIRE(sg_semigroup_create(g.data(), g.size(), &s) == SG_OK);
  return {s, &sg_semigroup_destroy};
}

Element parse(const sg_semigroup* s, const char* text) {
  sg_element* x = nullptr;
  REQUIRE(sg_element_parse(s, text, &x) == SG_OK);
  return {x, &sg_element_destroy};
}

}  // namespace

TEST_CASE("semigroup info") {
  const auto s = make({2, 3});
  Text t;
  REQUIRE(sg_semigroup_info_json(s.get(), &t.p) == SG_OK);
  const auto j = t.json();
  CHECK(j["gaps"] == nlohmann::json::array({1}));
  CHECK(j["frobenius"] == 1);
  CHECK(j["totally_ordered"] == false);
  CHECK(j["schema_version"] == 1);
  CHECK(std::string(t.p).back() == '\n');
}

TEST_CASE("invalid inputs map to status codes") {
  const int64_t bad[] = {2, 4};
  sg_semigroup* s = nullptr;
  CHECK(sg_semigroup_create(bad, 2, &s) == SG_INVALID_ARGUMENT);
  CHECK(s == nullptr);
  CHECK(std::string(sg_last_error()).size() > 0);
  CHECK(sg_semigroup_create(nullptr, 0, &s) == SG_INVALID_ARGUMENT);

  const auto g = make({2, 3});
  sg_element* x = nullptr;
  CHECK(sg_element_parse(g.get(), "T(2) + (", &x) == SG_PARSE_ERROR);
  CHECK(sg_last_error_offset() == 8);
  CHECK(x == nullptr);
  CHECK(sg_element_parse(g.get(), "T(1)", &x) == SG_INVALID_ARGUMENT);
  CHECK(sg_last_error_offset() == -1);
  CHECK(sg_element_parse(g.get(), "1/0", &x) == SG_PARSE_ERROR);

  sg_functional* f = nullptr;
  CHECK(sg_functional_parse(g.get(), "pm(1/3", &f) == SG_PARSE_ERROR);
  CHECK(sg_last_error_offset() == 6);

  Text t;
  CHECK(sg_check_json(g.get(), "nope", &t.p) == SG_INVALID_ARGUMENT);
  CHECK(t.p == nullptr);
  CHECK(sg_element_eval_json(nullptr, 3, &t.p) == SG_INVALID_ARGUMENT);
}

TEST_CASE("element reports") {
  const auto s = make({2, 3});
  const auto x = parse(s.get(), "T(2)*T*(2) + 1/2*T(3)");

  Text eval;
  REQUIRE(sg_element_eval_json(x.get(), 4, &eval.p) == SG_OK);
  const auto j = eval.json();
  CHECK(j["command"] == "eval");
  CHECK(j["basis"].size() == 4);

  Text again;
  REQUIRE(sg_element_eval_json(x.get(), 4, &again.p) == SG_OK);
  CHECK(std::string(eval.p) == std::string(again.p));

  Text split;
  CHECK(sg_element_split_json(x.get(), &split.p) == SG_OK);
  CHECK(split.json()["pass"] == true);

  Text cop;
  CHECK(sg_element_coproduct_json(x.get(), 3, &cop.p) == SG_OK);
  CHECK(cop.json()["weak_hopf_axioms"] == true);

  Text norm;
  CHECK(sg_element_norm_json(x.get(), 64, &norm.p) == SG_OK);
  CHECK(norm.json()["dim"] == 64);
  CHECK(sg_element_norm_json(x.get(), 0, &norm.p) == SG_INVALID_ARGUMENT);

  Text gl;
  const auto t3 = parse(s.get(), "T(3)");
  CHECK(sg_element_grouplike_json(t3.get(), &gl.p) == SG_OK);
  CHECK(gl.json()["index"] == 3);

  Text haar;
  CHECK(sg_element_haar_json(x.get(), &haar.p) == SG_OK);
  CHECK(haar.json()["haar"] == "0");
}

TEST_CASE("convolution, morphism and check") {
  const auto s = make({2, 3});
  const auto x = parse(s.get(), "T(2) + T*(3)*T(3)");
  sg_functional* f = nullptr;
  sg_functional* g = nullptr;
  REQUIRE(sg_functional_parse(s.get(), "haar", &f) == SG_OK);
  REQUIRE(sg_functional_parse(s.get(), "pm(1/3)", &g) == SG_OK);
  const Func ff(f, &sg_functional_destroy);
  const Func gg(g, &sg_functional_destroy);
  Text conv;
  CHECK(sg_convolve_json(f, g, x.get(), &conv.p) == SG_OK);

  const int64_t from[] = {2, 3};
  const int64_t to[] = {1};
  Text m1;
  CHECK(sg_morphism_json(from, 2, to, 1, 1, 2, 4, &m1.p) == SG_CHECK_FAILED);
  CHECK(m1.json()["pass"] == false);
  Text m2;
  CHECK(sg_morphism_json(to, 1, to, 1, 1, 1, 4, &m2.p) == SG_OK);

  Text chk;
  CHECK(sg_check_json(s.get(), "order", &chk.p) == SG_OK);
  CHECK(chk.json()["pass"] == true);
}
