#include "sgq/sgq.h"

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

#include "sgq/algebra.hpp"
#include "sgq/checks.hpp"
#include "sgq/errors.hpp"
#include "sgq/expression.hpp"
#include "sgq/functional.hpp"
#include "sgq/numeric.hpp"
#include "sgq/report.hpp"

struct sg_semigroup {
  sgq::NumericalSemigroup s;
};

struct sg_element {
  sgq::NumericalSemigroup s;
  std::string text;  // canonical printed form of the parsed expression
  sgq::FreeElement x;
};

struct sg_functional {
  sgq::Functional f;
};

namespace {

thread_local std::string last_error;
thread_local std::int64_t last_offset = -1;

template <class F>
sg_status guarded(F&& body) {
  last_error.clear();
  last_offset = -1;
  try {
    return body();
  } catch (const sgq::ParseError& e) {
    last_error = e.what();
    last_offset = static_cast<std::int64_t>(e.offset());
    return SG_PARSE_ERROR;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return SG_INVALID_ARGUMENT;
  } catch (const std::out_of_range& e) {
    last_error = e.what();
    return SG_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SG_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return SG_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

char* copy_out(const std::string& text) {
  char* p = static_cast<char*>(std::malloc(text.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, text.c_str(), text.size() + 1);
  return p;
}

// Writes the document; the status follows its "pass" field when present.
sg_status emit(const sgq::Json& doc, char** out) {
  *out = copy_out(doc.dump(2) + "\n");
  auto it = doc.find("pass");
  if (it != doc.end() && it->is_boolean() && !it->get<bool>()) return SG_CHECK_FAILED;
  return SG_OK;
}

sgq::Json element_document(const char* command, const sg_element* x) {
  sgq::Json doc = sgq::document(command, &x->s);
  doc["expr"] = x->text;
  return doc;
}

std::vector<std::int64_t> gen_list(const std::int64_t* gens, std::size_t count) {
  require(gens != nullptr && count > 0, "empty generator list");
  return {gens, gens + count};
}

}  // namespace

extern "C" {

sg_status sg_semigroup_create(const int64_t* gens, size_t count, sg_semigroup** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = new sg_semigroup{sgq::NumericalSemigroup::build(gen_list(gens, count))};
    return SG_OK;
  });
}

void sg_semigroup_destroy(sg_semigroup* s) { delete s; }

sg_status sg_semigroup_info_json(const sg_semigroup* s, char** out) {
  return guarded([&] {
    require(s && out, "null argument");
    sgq::Json doc = sgq::document("info", &s->s);
    const sgq::Json info = sgq::semigroup_json(s->s);
    for (const auto& [k, v] : info.items()) doc[k] = v;
    std::vector<std::int64_t> first;
    for (std::size_t i = 0; i < 10; ++i) first.push_back(s->s.element_at(i));
    doc["first_members"] = first;
    return emit(doc, out);
  });
}

sg_status sg_element_parse(const sg_semigroup* s, const char* text, sg_element** out) {
  return guarded([&] {
    require(s && text && out, "null argument");
    const auto expr = sgq::parse_expression(text);
    auto x = sgq::evaluate(expr, s->s);
    *out = new sg_element{s->s, sgq::print_expression(expr), std::move(x)};
    return SG_OK;
  });
}

void sg_element_destroy(sg_element* x) { delete x; }

sg_status sg_element_eval_json(const sg_element* x, int64_t basis, char** out) {
  return guarded([&] {
    require(x && out, "null argument");
    const auto a = sgq::rep(x->x);
    sgq::Json doc = element_document("eval", x);
    doc["free"] = sgq::free_json(x->x);
    doc["operator"] = sgq::operator_json(a);
    if (basis >= 0) {
      sgq::Json images = sgq::Json::array();
      for (std::int64_t i = 0; i < basis; ++i) {
        const auto d = x->s.element_at(static_cast<std::size_t>(i));
        images.push_back({{"member", d}, {"image", sgq::basis_image_json(a.apply(d))}});
      }
      doc["basis"] = std::move(images);
    }
    return emit(doc, out);
  });
}

sg_status sg_element_symbol_json(const sg_element* x, char** out) {
  return guarded([&] {
    require(x && out, "null argument");
    const auto a = sgq::rep(x->x);
    sgq::Json doc = element_document("symbol", x);
    doc["symbol"] = sgq::laurent_json(sgq::symbol(a));
    doc["in_ideal"] = sgq::in_ideal(a);
    doc["stabilization_threshold"] = sgq::stabilization_threshold(a);
    return emit(doc, out);
  });
}

sg_status sg_element_split_json(const sg_element* x, char** out) {
  return guarded([&] {
    require(x && out, "null argument");
    const auto a = sgq::rep(x->x);
    const auto sp = sgq::split(a);
    const auto lifted = sgq::toeplitz_lift(sp.symbol, x->s);
    sgq::Json doc = element_document("split", x);
    doc["symbol"] = sgq::laurent_json(sp.symbol);
    doc["lift"] = sgq::operator_json(lifted);
    doc["ideal_part"] = sgq::operator_json(sp.ideal_part);
    const bool ideal = sgq::in_ideal(sp.ideal_part);
    const bool exact = lifted + sp.ideal_part == a;
    doc["ideal_part_in_ideal"] = ideal;
    doc["reconstructs"] = exact;
    doc["pass"] = ideal && exact;
    return emit(doc, out);
  });
}

sg_status sg_element_norm_json(const sg_element* x, size_t dim, char** out) {
  return guarded([&] {
    require(x && out, "null argument");
    require(dim > 0, "dimension must be positive");
    const auto a = sgq::rep(x->x);
    const auto f = sgq::symbol(a);
    const auto m = sgq::truncate(a, dim);
    sgq::Json doc = element_document("norm", x);
    doc["dim"] = dim;
    doc["basis_last"] = m.basis.back();
    doc["norm"] = sgq::operator_norm(m);
    doc["symbol"] = f.str();
    if (!f.is_zero()) {
      const auto sup = sgq::laurent_sup_norm(f);
      doc["symbol_sup_norm"] = sup.value;
      doc["sup_error_bound"] = sup.error_bound;
    } else {
      doc["symbol_sup_norm"] = 0.0;
      doc["sup_error_bound"] = 0.0;
    }
    return emit(doc, out);
  });
}

sg_status sg_element_coproduct_json(const sg_element* x, int64_t pairs, char** out) {
  return guarded([&] {
    require(x && out, "null argument");
    const auto cop = sgq::coproduct(x->x);
    sgq::Json doc = element_document("coproduct", x);
    doc["coproduct"] = sgq::tensor_json(cop);
    if (pairs >= 0) {
      sgq::Json table = sgq::Json::array();
      for (std::int64_t i = 0; i < pairs; ++i) {
        for (std::int64_t j = 0; j < pairs; ++j) {
          const auto c = x->s.element_at(static_cast<std::size_t>(i));
          const auto d = x->s.element_at(static_cast<std::size_t>(j));
          auto img = sgq::tensor_apply(cop, c, d);
          if (!img.empty()) table.push_back({{"pair", {c, d}}, {"image", sgq::pair_image_json(img)}});
        }
      }
      doc["pairs"] = std::move(table);
    }
    const auto hopf = sgq::weak_hopf_check(x->x);
    const auto coassoc = sgq::coassociativity_check(x->x);
    doc["weak_hopf_axioms"] = hopf.pass;
    doc["coassociative"] = coassoc.pass;
    if (!hopf.pass) doc["counterexample"] = hopf.counterexample;
    doc["pass"] = hopf.pass && coassoc.pass;
    return emit(doc, out);
  });
}

sg_status sg_element_grouplike_json(const sg_element* x, char** out) {
  return guarded([&] {
    require(x && out, "null argument");
    const auto idx = sgq::group_like_detect(x->x);
    sgq::Json doc = element_document("grouplike", x);
    doc["coproduct_is_diagonal"] = sgq::coproduct(x->x) == sgq::tensor(x->x, x->x);
    doc["isometry"] = sgq::is_isometry(sgq::rep(x->x));
    doc["grouplike_isometry"] = idx.has_value();
    doc["index"] = idx ? sgq::Json(*idx) : sgq::Json(nullptr);
    return emit(doc, out);
  });
}

sg_status sg_element_haar_json(const sg_element* x, char** out) {
  return guarded([&] {
    require(x && out, "null argument");
    sgq::Json doc = element_document("haar", x);
    doc["haar"] = sgq::value_json(sgq::Functional::haar().eval(x->x));
    return emit(doc, out);
  });
}

sg_status sg_functional_parse(const sg_semigroup* s, const char* text, sg_functional** out) {
  return guarded([&] {
    require(s && text && out, "null argument");
    auto f = sgq::parse_functional(text);
    *out = new sg_functional{std::move(f)};
    return SG_OK;
  });
}

void sg_functional_destroy(sg_functional* f) { delete f; }

sg_status sg_convolve_json(const sg_functional* f, const sg_functional* g, const sg_element* x, char** out) {
  return guarded([&] {
    require(f && g && x && out, "null argument");
    const auto fg = sgq::Functional::convolution(f->f, g->f);
    const auto gf = sgq::Functional::convolution(g->f, f->f);
    const auto v = fg.eval(x->x);
    const auto w = gf.eval(x->x);
    sgq::Json doc = element_document("convolve", x);
    doc["functionals"] = {f->f.str(), g->f.str()};
    doc["value"] = sgq::value_json(v);
    doc["reversed"] = sgq::value_json(w);
    doc["pass"] = sgq::values_agree(v, w, 1e-12);
    return emit(doc, out);
  });
}

sg_status sg_morphism_json(const int64_t* from, size_t from_count, const int64_t* to, size_t to_count, int has_mult,
                           int64_t mult, int max_len, char** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    require(max_len >= 1, "max length must be positive");
    const auto s1 = sgq::NumericalSemigroup::build(gen_list(from, from_count));
    const auto s2 = sgq::NumericalSemigroup::build(gen_list(to, to_count));
    std::optional<std::int64_t> m;
    if (has_mult) m = mult;
    return emit(sgq::morphism_document(s1, s2, m, max_len), out);
  });
}

sg_status sg_check_json(const sg_semigroup* s, const char* suite, char** out) {
  return guarded([&] {
    require(s && suite && out, "null argument");
    return emit(sgq::check_document(suite, s->s), out);
  });
}

const char* sg_last_error(void) { return last_error.c_str(); }

int64_t sg_last_error_offset(void) { return last_offset; }

void sg_string_free(char* s) { std::free(s); }

}  // extern "C"
