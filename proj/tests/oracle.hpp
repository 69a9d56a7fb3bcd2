#pragma once

// Reference computations for the tests. They work from words and explicit
// basis vectors only and never call the library's algebra.

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "sgq/rational.hpp"
#include "sgq/translation.hpp"

namespace oracle {

using sgq::GaussianRational;
using sgq::Word;

struct Semigroup {
  std::vector<std::int64_t> gens;
  std::vector<bool> member;

  bool contains(std::int64_t d) const { return d >= 0 && d < static_cast<std::int64_t>(member.size()) && member[d]; }

  std::vector<std::int64_t> members(std::int64_t below) const {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 0; d < below; ++d) {
      if (contains(d)) out.push_back(d);
    }
    return out;
  }
};

inline Semigroup brute(std::vector<std::int64_t> gens, std::int64_t n = 600) {
  Semigroup s{std::move(gens), std::vector<bool>(static_cast<std::size_t>(n), false)};
  s.member[0] = true;
  for (std::int64_t d = 1; d < n; ++d) {
    for (auto g : s.gens) {
      if (d >= g && s.member[d - g]) s.member[d] = true;
    }
  }
  return s;
}

inline std::int64_t frobenius(const Semigroup& s) {
  for (auto d = static_cast<std::int64_t>(s.member.size()) - 1; d >= 0; --d) {
    if (!s.member[d]) return d;
  }
  return -1;
}

// Rightmost letter acts first; nullopt once the path leaves S.
inline std::optional<std::int64_t> act(const Semigroup& s, const Word& w, std::int64_t d, std::int64_t scale = 1) {
  if (!s.contains(d)) return std::nullopt;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    d += (it->starred ? -1 : 1) * it->gen * scale;
    if (!s.contains(d)) return std::nullopt;
  }
  return d;
}

inline std::int64_t word_index(const Word& w) {
  std::int64_t c = 0;
  for (const auto& l : w) c += l.starred ? -l.gen : l.gen;
  return c;
}

using Combo = std::vector<std::pair<Word, GaussianRational>>;

inline std::map<std::int64_t, GaussianRational> act(const Semigroup& s, const Combo& x, std::int64_t d) {
  std::map<std::int64_t, GaussianRational> out;
  for (const auto& [w, c] : x) {
    if (auto r = act(s, w, d)) {
      out[*r] += c;
      if (out[*r].is_zero()) out.erase(*r);
    }
  }
  return out;
}

// <x e_{cols[j]}, e_{rows[i]}> for members in the given lists.
inline Eigen::MatrixXcd matrix(const Semigroup& s, const Combo& x, const std::vector<std::int64_t>& basis) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(basis.size()),
                                              static_cast<Eigen::Index>(basis.size()));
  std::map<std::int64_t, Eigen::Index> pos;
  for (std::size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = static_cast<Eigen::Index>(i);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (const auto& [r, v] : act(s, x, basis[j])) {
      if (auto it = pos.find(r); it != pos.end()) m(it->second, static_cast<Eigen::Index>(j)) += v.to_complex();
    }
  }
  return m;
}

// Symbol coefficients read far out, where every word acts as a translation.
inline std::map<std::int64_t, GaussianRational> symbol(const Semigroup& s, const Combo& x, std::int64_t far = 250) {
  std::map<std::int64_t, GaussianRational> out;
  for (const auto& [r, v] : act(s, x, far)) out[r - far] += v;
  return out;
}

inline Word random_word(std::mt19937_64& rng, const std::vector<std::int64_t>& gens, int max_len) {
  std::uniform_int_distribution<int> len(1, max_len);
  std::uniform_int_distribution<std::size_t> g(0, gens.size() - 1);
  std::bernoulli_distribution star(0.5);
  Word w(static_cast<std::size_t>(len(rng)));
  for (auto& l : w) l = sgq::Letter{gens[g(rng)], star(rng)};
  return w;
}

inline Combo random_combo(std::mt19937_64& rng, const std::vector<std::int64_t>& gens, int max_terms, int max_len) {
  std::uniform_int_distribution<int> terms(1, max_terms);
  std::uniform_int_distribution<std::int64_t> num(-4, 4);
  std::uniform_int_distribution<std::int64_t> den(1, 3);
  Combo x;
  const int n = terms(rng);
  for (int i = 0; i < n; ++i) {
    GaussianRational c(sgq::Rational(num(rng), den(rng)), sgq::Rational(num(rng) / 2));
    if (c.is_zero()) c = 1;
    x.emplace_back(random_word(rng, gens, max_len), c);
  }
  return x;
}

}  // namespace oracle
