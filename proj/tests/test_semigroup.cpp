#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "oracle.hpp"
#include "sgq/semigroup.hpp"

using sgq::GaussianRational;
using sgq::NumericalSemigroup;
using sgq::Rational;

TEST_CASE("rational arithmetic is exact and normalized") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -3) == Rational(-1, 3));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-7, 3).str() == "-7/3");
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("gaussian rationals") {
  const GaussianRational z(Rational(1, 2), Rational(3));
  CHECK(z.str() == "1/2+3i");
  CHECK(z.conj().str() == "1/2-3i");
  CHECK(z * z.conj() == GaussianRational(Rational(37, 4)));
  CHECK(z / z == GaussianRational(1));
  CHECK(GaussianRational(0, -1).str() == "0-1i");
}

TEST_CASE("small semigroups from hand") {
  const auto s = NumericalSemigroup::build({2, 3});
  CHECK(s.gaps() == std::vector<std::int64_t>{1});
  CHECK(s.frobenius() == 1);
  CHECK_FALSE(s.is_totally_ordered());
  CHECK(s.element_at(0) == 0);
  CHECK(s.element_at(1) == 2);
  CHECK(s.position_of(5) == 4);
  CHECK(s.natural_below(2, 5));
  CHECK_FALSE(s.natural_below(2, 3));

  const auto z = NumericalSemigroup::naturals();
  CHECK(z.frobenius() == -1);
  CHECK(z.gaps().empty());
  CHECK(z.is_totally_ordered());
}

TEST_CASE("two-generator Frobenius numbers and genus match Sylvester's formulas") {
  for (std::int64_t a = 2; a <= 9; ++a) {
    for (std::int64_t b = a + 1; b <= 13; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const auto s = NumericalSemigroup::build({a, b});
      CHECK(s.frobenius() == a * b - a - b);
      CHECK(static_cast<std::int64_t>(s.gaps().size()) == (a - 1) * (b - 1) / 2);
    }
  }
}

TEST_CASE("membership agrees with a brute-force sieve") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> g(2, 12);
  int tried = 0;
  while (tried < 40) {
    std::vector<std::int64_t> gens{g(rng), g(rng), g(rng)};
    if (std::gcd(std::gcd(gens[0], gens[1]), gens[2]) != 1) continue;
    ++tried;
    const auto s = NumericalSemigroup::build(gens);
    const auto o = oracle::brute(gens, 300);
    CHECK(s.frobenius() == oracle::frobenius(o));
    for (std::int64_t d = -3; d < 300; ++d) REQUIRE(s.contains(d) == o.contains(d));
  }
}

TEST_CASE("equality is equality of sets") {
  CHECK(NumericalSemigroup::build({2, 3}) == NumericalSemigroup::build({3, 2, 4, 5}));
  CHECK_FALSE(NumericalSemigroup::build({2, 3}) == NumericalSemigroup::build({2, 5}));
}

TEST_CASE("invalid generator lists are rejected") {
  CHECK_THROWS_AS(NumericalSemigroup::build({}), std::invalid_argument);
  CHECK_THROWS_AS(NumericalSemigroup::build({2, 4}), std::invalid_argument);
  CHECK_THROWS_AS(NumericalSemigroup::build({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(NumericalSemigroup::build({-1, 2}), std::invalid_argument);
}

TEST_CASE("morphism multipliers") {
  const auto s23 = NumericalSemigroup::build({2, 3});
  const auto z = NumericalSemigroup::naturals();
  CHECK(sgq::morphism_multipliers(s23, z, 6) == std::vector<std::int64_t>{0, 1, 2, 3, 4, 5, 6});
  // m = 1 would send 1 to the gap 1 of <2,3>.
  CHECK(sgq::morphism_multipliers(z, s23, 4) == std::vector<std::int64_t>{0, 2, 3, 4});
  for (const auto& s : {s23, z, NumericalSemigroup::build({3, 5}), NumericalSemigroup::build({4, 6, 9})}) {
    CHECK(sgq::automorphism_multipliers(s) == std::vector<std::int64_t>{1});
  }
}
