// sg: command-line front end over the sgq C interface. One JSON document on
// stdout per run; diagnostics on stderr.
//
// Exit codes: 0 success, 1 a checked property failed, 2 usage or input error.

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sgq/sgq.h"

namespace {

constexpr int kExitUsage = 2;

const char* status_name(sg_status st) {
  switch (st) {
    case SG_OK: return "ok";
    case SG_CHECK_FAILED: return "check_failed";
    case SG_INVALID_ARGUMENT: return "invalid_argument";
    case SG_PARSE_ERROR: return "parse_error";
    case SG_INTERNAL: return "internal";
  }
  return "unknown";
}

int fail(const std::string& command, sg_status st) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = 1;
  doc["command"] = command;
  doc["error"] = {{"status", status_name(st)}, {"message", sg_last_error()}};
  if (sg_last_error_offset() >= 0) doc["error"]["offset"] = sg_last_error_offset();
  std::cout << doc.dump(2) << "\n";
  std::cerr << "sg " << command << ": " << sg_last_error() << "\n";
  return kExitUsage;
}

// Prints the returned document and maps the status to an exit code.
int finish(const std::string& command, sg_status st, char** text) {
  if (st != SG_OK && st != SG_CHECK_FAILED) return fail(command, st);
  std::fputs(*text, stdout);
  sg_string_free(*text);
  if (st == SG_CHECK_FAILED) {
    std::cerr << "sg " << command << ": a checked property failed; see the report\n";
    return 1;
  }
  return 0;
}

using SemigroupPtr = std::unique_ptr<sg_semigroup, decltype(&sg_semigroup_destroy)>;
using ElementPtr = std::unique_ptr<sg_element, decltype(&sg_element_destroy)>;
using FunctionalPtr = std::unique_ptr<sg_functional, decltype(&sg_functional_destroy)>;

struct Options {
  std::vector<std::int64_t> gens;
  std::string expr;
  std::int64_t basis = -1;
  std::int64_t pairs = -1;
  std::size_t dim = 0;
  std::vector<std::string> functionals;
  std::vector<std::int64_t> from;
  std::vector<std::int64_t> to;
  std::int64_t mult = 0;
  int max_len = 6;
  std::string suite;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in reduced semigroup C*-algebras of numerical semigroups"};
  app.require_subcommand(1);
  Options o;

  auto gens_opt = [&](CLI::App* sub) {
    sub->add_option("--gens", o.gens, "generators, comma separated (1 means Z+)")->required()->delimiter(',');
  };
  auto expr_opt = [&](CLI::App* sub) { sub->add_option("--expr", o.expr, "algebra expression")->required(); };

  auto* info = app.add_subcommand("info", "gaps, Frobenius number and order type");
  gens_opt(info);

  auto* eval = app.add_subcommand("eval", "normal form and weights of an element");
  gens_opt(eval);
  expr_opt(eval);
  eval->add_option("--basis", o.basis, "also list images of the first N basis vectors")->check(CLI::NonNegativeNumber);

  auto* sym = app.add_subcommand("symbol", "symbol in the commutative quotient");
  gens_opt(sym);
  expr_opt(sym);

  auto* split = app.add_subcommand("split", "Toeplitz lift plus commutator-ideal part");
  gens_opt(split);
  expr_opt(split);

  auto* norm = app.add_subcommand("norm", "operator norm of the N x N truncation");
  gens_opt(norm);
  expr_opt(norm);
  norm->add_option("--dim", o.dim, "truncation size")->required()->check(CLI::PositiveNumber);

  auto* cop = app.add_subcommand("coproduct", "comultiplication and weak Hopf axioms");
  gens_opt(cop);
  expr_opt(cop);
  cop->add_option("--pairs", o.pairs, "tabulate on pairs among the first N basis vectors")
      ->check(CLI::NonNegativeNumber);

  auto* gl = app.add_subcommand("grouplike", "group-like isometry test");
  gens_opt(gl);
  expr_opt(gl);

  auto* haar = app.add_subcommand("haar", "Haar functional <x e_0, e_0>");
  gens_opt(haar);
  expr_opt(haar);

  auto* conv = app.add_subcommand("convolve", "convolution of two functionals on an element");
  gens_opt(conv);
  expr_opt(conv);
  conv->add_option("--functional", o.functionals, "functional (give exactly two)")->required()->expected(1);
  conv->get_option("--functional")->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);

  auto* morph = app.add_subcommand("morphism", "falsify T_a -> T_{ma} as a quantum morphism");
  morph->add_option("--from", o.from, "source generators")->required()->delimiter(',');
  morph->add_option("--to", o.to, "target generators")->required()->delimiter(',');
  auto* mult_opt = morph->add_option("--mult", o.mult, "multiplier (default: every admissible m <= 6)");
  morph->add_option("--max-len", o.max_len, "longest word enumerated")->check(CLI::PositiveNumber);

  auto* check = app.add_subcommand("check", "run a property suite");
  gens_opt(check);
  check->add_option("--suite", o.suite, "suite name or all")
      ->required()
      ->check(CLI::IsMember({"order", "inverse", "grading", "symbol", "weakhopf", "haar", "coideal", "descent",
                             "fourier", "norms", "shift37", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  char* text = nullptr;

  if (sub == morph) {
    sg_status st = sg_morphism_json(o.from.data(), o.from.size(), o.to.data(), o.to.size(), mult_opt->count() > 0,
                                    o.mult, o.max_len, &text);
    return finish(command, st, &text);
  }

  sg_semigroup* raw_s = nullptr;
  if (sg_status st = sg_semigroup_create(o.gens.data(), o.gens.size(), &raw_s); st != SG_OK) return fail(command, st);
  SemigroupPtr s(raw_s, &sg_semigroup_destroy);

  if (sub == info) return finish(command, sg_semigroup_info_json(s.get(), &text), &text);
  if (sub == check) return finish(command, sg_check_json(s.get(), o.suite.c_str(), &text), &text);

  sg_element* raw_x = nullptr;
  if (sg_status st = sg_element_parse(s.get(), o.expr.c_str(), &raw_x); st != SG_OK) return fail(command, st);
  ElementPtr x(raw_x, &sg_element_destroy);

  if (sub == eval) return finish(command, sg_element_eval_json(x.get(), o.basis, &text), &text);
  if (sub == sym) return finish(command, sg_element_symbol_json(x.get(), &text), &text);
  if (sub == split) return finish(command, sg_element_split_json(x.get(), &text), &text);
  if (sub == norm) return finish(command, sg_element_norm_json(x.get(), o.dim, &text), &text);
  if (sub == cop) return finish(command, sg_element_coproduct_json(x.get(), o.pairs, &text), &text);
  if (sub == gl) return finish(command, sg_element_grouplike_json(x.get(), &text), &text);
  if (sub == haar) return finish(command, sg_element_haar_json(x.get(), &text), &text);

  // convolve
  if (o.functionals.size() != 2) {
    std::cerr << "sg convolve: give --functional exactly twice\n";
    return kExitUsage;
  }
  std::vector<FunctionalPtr> fs;
  for (const auto& f : o.functionals) {
    sg_functional* raw = nullptr;
    if (sg_status st = sg_functional_parse(s.get(), f.c_str(), &raw); st != SG_OK) return fail(command, st);
    fs.emplace_back(raw, &sg_functional_destroy);
  }
  return finish(command, sg_convolve_json(fs[0].get(), fs[1].get(), x.get(), &text), &text);
}
