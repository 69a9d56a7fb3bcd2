#include "sgq/translation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sgq {

EventualSet EventualSet::from_predicate(const NumericalSemigroup& s, std::int64_t bound,
                                        const std::function<bool(std::int64_t)>& pred) {
  EventualSet out;
  out.threshold_ = std::max<std::int64_t>(bound, 0);
  for (std::int64_t d = 0; d < out.threshold_; ++d) {
    if (s.contains(d) && pred(d)) out.below_.push_back(d);
  }
  // Lower the threshold while that leaves the denoted set unchanged.
  while (out.threshold_ > 0) {
    const std::int64_t top = out.threshold_ - 1;
    if (!s.contains(top)) {
      --out.threshold_;
    } else if (!out.below_.empty() && out.below_.back() == top) {
      out.below_.pop_back();
      --out.threshold_;
    } else {
      break;
    }
  }
  return out;
}

bool EventualSet::contains(const NumericalSemigroup& s, std::int64_t d) const {
  if (!s.contains(d)) return false;
  if (d >= threshold_) return true;
  return std::binary_search(below_.begin(), below_.end(), d);
}

PartialTranslation::PartialTranslation(NumericalSemigroup s, std::int64_t index, EventualSet domain)
    : s_(std::move(s)), index_(index), domain_(std::move(domain)) {
  const std::int64_t limit = std::max(domain_.threshold(), s_.frobenius() + 1 - index_);
  for (std::int64_t d = 0; d < limit; ++d) {
    if (domain_.contains(s_, d) && !s_.contains(d + index_)) {
      throw std::logic_error("partial translation maps a domain point outside S");
    }
  }
}

std::string PartialTranslation::str() const {
  std::ostringstream os;
  os << "PT(" << index_ << "; {";
  const auto& below = domain_.members_below();
  for (std::size_t i = 0; i < below.size(); ++i) {
    if (i) os << ',';
    os << below[i];
  }
  os << "}; " << domain_.threshold() << ")";
  return os.str();
}

PartialTranslation elementary(const NumericalSemigroup& s, std::int64_t a, bool starred) {
  if (!s.contains(a)) throw std::invalid_argument("generator " + std::to_string(a) + " is not in S");
  if (!starred) return PartialTranslation(s, a, EventualSet());
  auto dom = EventualSet::from_predicate(s, a + s.frobenius() + 1,
                                         [&](std::int64_t d) { return s.contains(d - a); });
  return PartialTranslation(s, -a, std::move(dom));
}

PartialTranslation identity_translation(const NumericalSemigroup& s) {
  return PartialTranslation(s, 0, EventualSet());
}

PartialTranslation compose(const PartialTranslation& v, const PartialTranslation& w) {
  if (!(v.semigroup() == w.semigroup())) throw std::invalid_argument("compose: mixed semigroups");
  const auto& s = w.semigroup();
  const std::int64_t cw = w.index();
  const std::int64_t bound = std::max({w.domain().threshold(), v.domain().threshold() - cw, std::int64_t{0}});
  auto dom = EventualSet::from_predicate(
      s, bound, [&](std::int64_t d) { return w.in_domain(d) && v.in_domain(d + cw); });
  return PartialTranslation(s, v.index() + cw, std::move(dom));
}

PartialTranslation adjoint(const PartialTranslation& v) {
  const auto& s = v.semigroup();
  const std::int64_t c = v.index();
  const std::int64_t bound = std::max({v.domain().threshold() + c, s.frobenius() + 1 + c, std::int64_t{0}});
  auto dom = EventualSet::from_predicate(s, bound, [&](std::int64_t e) { return v.in_domain(e - c); });
  return PartialTranslation(s, -c, std::move(dom));
}

std::optional<std::int64_t> apply(const PartialTranslation& v, std::int64_t d) {
  if (!v.semigroup().contains(d)) throw std::invalid_argument("apply: basis index not in S");
  if (!v.in_domain(d)) return std::nullopt;
  return d + v.index();
}

PartialTranslation max_translation(const NumericalSemigroup& s, std::int64_t c) {
  const std::int64_t bound = std::max<std::int64_t>(0, s.frobenius() + 1 - c);
  auto dom = EventualSet::from_predicate(s, bound, [&](std::int64_t d) { return s.contains(d + c); });
  return PartialTranslation(s, c, std::move(dom));
}

PartialTranslation evaluate_word(const NumericalSemigroup& s, const Word& word) {
  if (word.empty()) throw std::invalid_argument("evaluate_word: empty word");
  PartialTranslation acc = elementary(s, word.back().gen, word.back().starred);
  for (auto it = word.rbegin() + 1; it != word.rend(); ++it) {
    acc = compose(elementary(s, it->gen, it->starred), acc);
  }
  return acc;
}

std::string word_str(const Word& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += '*';
    out += word[i].starred ? "T*(" : "T(";
    out += std::to_string(word[i].gen) + ")";
  }
  return out;
}

std::vector<Word> enumerate_words(const NumericalSemigroup& s, int max_len) {
  std::vector<Letter> letters;
  for (auto g : s.generators()) {
    letters.push_back({g, false});
    letters.push_back({g, true});
  }
  std::vector<Word> out;
  std::vector<Word> layer{Word{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    next.reserve(layer.size() * letters.size());
    for (const auto& w : layer) {
      for (const auto& l : letters) {
        Word x = w;
        x.push_back(l);
        next.push_back(std::move(x));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace sgq
