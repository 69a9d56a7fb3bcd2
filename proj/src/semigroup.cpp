#include "sgq/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sgq {

struct NumericalSemigroup::Data {
  std::vector<std::int64_t> generators;
  std::vector<std::int64_t> gaps;
  // Members in [0, frobenius], ascending.
  std::vector<std::int64_t> small_members;
  std::vector<bool> table;  // membership for [0, frobenius]
  std::int64_t frobenius = -1;
};

namespace {

constexpr std::int64_t kMaxSieve = 50'000'000;

}  // namespace

NumericalSemigroup NumericalSemigroup::build(std::vector<std::int64_t> generators) {
  if (generators.empty()) throw std::invalid_argument("semigroup needs at least one generator");
  for (auto g : generators) {
    if (g < 1) throw std::invalid_argument("generators must be positive integers");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

  std::int64_t g = 0;
  for (auto x : generators) g = std::gcd(g, x);
  if (g != 1) throw std::invalid_argument("generators must have gcd 1 (difference group must be Z)");

  const std::int64_t lo = generators.front();
  const std::int64_t hi = generators.back();
  if (hi > kMaxSieve / lo) throw std::invalid_argument("generators too large for the membership sieve");
  // Frobenius number is below (min-1)(max-1), hence below min*max.
  const std::int64_t bound = std::max<std::int64_t>(lo * hi, 1);

  std::vector<bool> sieve(static_cast<std::size_t>(bound) + 1, false);
  sieve[0] = true;
  for (std::int64_t n = 1; n <= bound; ++n) {
    for (auto x : generators) {
      if (x <= n && sieve[static_cast<std::size_t>(n - x)]) {
        sieve[static_cast<std::size_t>(n)] = true;
        break;
      }
    }
  }

  auto data = std::make_shared<Data>();
  data->generators = std::move(generators);
  for (std::int64_t n = bound; n >= 1; --n) {
    if (!sieve[static_cast<std::size_t>(n)]) {
      data->frobenius = n;
      break;
    }
  }
  for (std::int64_t n = 0; n <= data->frobenius; ++n) {
    if (sieve[static_cast<std::size_t>(n)]) {
      data->small_members.push_back(n);
    } else {
      data->gaps.push_back(n);
    }
  }
  data->table.assign(sieve.begin(), sieve.begin() + (data->frobenius + 1));
  return NumericalSemigroup(std::move(data));
}

const std::vector<std::int64_t>& NumericalSemigroup::generators() const { return data_->generators; }
const std::vector<std::int64_t>& NumericalSemigroup::gaps() const { return data_->gaps; }
std::int64_t NumericalSemigroup::frobenius() const { return data_->frobenius; }

bool NumericalSemigroup::contains(std::int64_t n) const {
  if (n < 0) return false;
  if (n > data_->frobenius) return true;
  return data_->table[static_cast<std::size_t>(n)];
}

std::int64_t NumericalSemigroup::element_at(std::size_t i) const {
  const auto& small = data_->small_members;
  if (i < small.size()) return small[i];
  return data_->frobenius + 1 + static_cast<std::int64_t>(i - small.size());
}

std::size_t NumericalSemigroup::position_of(std::int64_t member) const {
  if (!contains(member)) throw std::invalid_argument("position_of: not a member");
  const auto& small = data_->small_members;
  if (member > data_->frobenius) {
    return small.size() + static_cast<std::size_t>(member - data_->frobenius - 1);
  }
  return static_cast<std::size_t>(std::lower_bound(small.begin(), small.end(), member) - small.begin());
}

bool NumericalSemigroup::natural_below(std::int64_t a, std::int64_t b) const {
  if (!contains(a) || !contains(b)) throw std::invalid_argument("natural_below: arguments must be members");
  return contains(b - a);
}

bool NumericalSemigroup::is_totally_ordered() const {
  // Any incomparable pair has both entries below frobenius + max generator.
  const std::int64_t limit = data_->frobenius + data_->generators.back();
  bool total = true;
  for (std::int64_t a = 0; a <= limit && total; ++a) {
    if (!contains(a)) continue;
    for (std::int64_t b = a; b <= limit; ++b) {
      if (contains(b) && !natural_below(a, b)) {
        total = false;
        break;
      }
    }
  }
  if (total != data_->gaps.empty()) {
    throw std::logic_error("totality scan disagrees with the gap criterion");
  }
  return total;
}

std::string NumericalSemigroup::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < data_->generators.size(); ++i) {
    if (i) os << ',';
    os << data_->generators[i];
  }
  return os.str();
}

bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
  return a.data_ == b.data_ || a.data_->gaps == b.data_->gaps;
}

std::vector<std::int64_t> morphism_multipliers(const NumericalSemigroup& from,
                                               const NumericalSemigroup& to,
                                               std::int64_t bound) {
  if (bound < 0) throw std::invalid_argument("morphism_multipliers: bound must be non-negative");
  std::vector<std::int64_t> out;
  for (std::int64_t m = 0; m <= bound; ++m) {
    const bool ok = std::all_of(from.generators().begin(), from.generators().end(),
                                [&](std::int64_t g) { return to.contains(m * g); });
    if (ok) out.push_back(m);
  }
  return out;
}

std::vector<std::int64_t> automorphism_multipliers(const NumericalSemigroup& s) {
  // m*S = S is decided on a window past the conductor: beyond it every
  // integer is a member, so any m >= 2 misses some non-multiple.
  const std::int64_t window = 2 * (s.frobenius() + 1) + 2 * s.generators().back() + 2;
  std::vector<std::int64_t> out;
  for (std::int64_t m = 0; m <= window; ++m) {
    bool ok = true;
    for (std::int64_t n = 0; n <= window && ok; ++n) {
      if (!s.contains(n)) continue;
      // n in m*S and m*n in S
      const bool in_image = (m == 0) ? n == 0 : (n % m == 0 && s.contains(n / m));
      ok = in_image && s.contains(m * n);
    }
    if (ok) out.push_back(m);
  }
  if (out != std::vector<std::int64_t>{1}) {
    throw std::logic_error("automorphism search did not return {1}");
  }
  return out;
}

}  // namespace sgq
