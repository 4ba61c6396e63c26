/*
   Copyright 2026 The clausen authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "clausen/rational.hpp"

using namespace clausen;

namespace {

Rational rand_rational(std::mt19937_64& rng) {
  const long num = static_cast<long>(rng() % 19) - 9;
  const long den = 1 + static_cast<long>(rng() % 9);
  return Rational(num, den);
}

// independent oracle: the two-index recurrence S(n,k) = k S(n-1,k) + S(n-1,k-1)
mpz_class stirling2_by_recurrence(Natural n, Natural k) {
  std::vector<std::vector<mpz_class>> table(n + 1, std::vector<mpz_class>(n + 1, 0));
  table[0][0] = 1;
  for (Natural i = 1; i <= n; ++i)
    for (Natural j = 1; j <= i; ++j)
      table[i][j] = mpz_class(static_cast<unsigned long>(j)) * table[i - 1][j] + table[i - 1][j - 1];
  return k <= n ? table[n][k] : 0;
}

}  // namespace

TEST_CASE("rationals normalize eagerly to lowest terms with positive denominator") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-3, -6).str() == "1/2");
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(14, 7).str() == "2");
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK((Rational(1, 3) * Rational(3, 5)).str() == "1/5");
  CHECK(Rational(5, 3).den() == 3);
  CHECK(Rational(-5, 3).num() == -5);
}

TEST_CASE("rational parsing accepts p and p/q and rejects everything else") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(Rational::parse("12") == Rational(12));
  CHECK(Rational::parse("-12") == Rational(-12));
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational::parse("0") == Rational(0));
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("+3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("3/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(" 1"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
}

TEST_CASE("division by zero is rejected") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("predicates and ordering") {
  CHECK(Rational(-3).is_nonpositive_integer());
  CHECK(Rational(0).is_nonpositive_integer());
  CHECK_FALSE(Rational(2).is_nonpositive_integer());
  CHECK_FALSE(Rational(-1, 2).is_nonpositive_integer());
  CHECK(Rational(-4).termination_index() == 4);
  CHECK(Rational(1, 2) < Rational(2, 3));
  CHECK(Rational(-1, 2) > Rational(-2, 3));
}

TEST_CASE("rising factorial on the stated values") {
  CHECK(rising_factorial(Rational(3), 4) == Rational(360));
  CHECK(rising_factorial(Rational(17, 5), 0) == Rational(1));
  CHECK(rising_factorial(Rational(1, 2), 2) == Rational(3, 4));
  CHECK(rising_factorial(Rational(-2), 4) == Rational(0));
}

TEST_CASE("rising factorial splitting and reflection identities") {
  std::mt19937_64 rng(20260810);
  for (int trial = 0; trial < 40; ++trial) {
    const Rational x = rand_rational(rng);
    const Natural p = rng() % 7, q = rng() % 7;
    CHECK(rising_factorial(x, p + q) ==
          rising_factorial(x, p) * rising_factorial(x + Rational(static_cast<long>(p)), q));
    const Natural n = p;
    Rational reflected = rising_factorial(Rational(1) - x - Rational(static_cast<long>(n)), n);
    if (n % 2 == 1) reflected = -reflected;
    CHECK(rising_factorial(x, n) == reflected);
  }
}

TEST_CASE("duplication: (a)_m (a+1/2)_m = (2a)_2m / 4^m") {
  std::mt19937_64 rng(917);
  for (int trial = 0; trial < 30; ++trial) {
    const Rational a = rand_rational(rng);
    const Natural m = rng() % 6;
    Rational four_m(1);
    for (Natural i = 0; i < m; ++i) four_m *= Rational(4);
    CHECK(rising_factorial(a, m) * rising_factorial(a + Rational(1, 2), m) ==
          rising_factorial(a * Rational(2), 2 * m) / four_m);
  }
}

TEST_CASE("binomial coefficients use the vanishing convention") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(0, 0) == 1);
  for (Natural n = 0; n < 12; ++n) {
    CHECK(binomial(n, 0) == 1);
    CHECK(binomial(n, static_cast<std::int64_t>(n)) == 1);
    for (Natural k = 1; k <= n; ++k)
      CHECK(binomial(n, static_cast<std::int64_t>(k)) ==
            binomial(n - 1, static_cast<std::int64_t>(k) - 1) + binomial(n - 1, static_cast<std::int64_t>(k)));
  }
}

TEST_CASE("stirling2 matches the triangle recurrence oracle") {
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(1, 0) == 0);
  CHECK(stirling2(5, 0) == 0);
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(2, 4) == 0);
  for (Natural n = 0; n <= 12; ++n) {
    CHECK(stirling2(n, n) == 1);
    for (Natural k = 0; k <= n; ++k) CHECK(stirling2(n, k) == stirling2_by_recurrence(n, k));
  }
}

TEST_CASE("orthogonality sum H_{l,k} collapses to delta_{l,0} + delta_{l,k}") {
  CHECK(orthogonality_H(1, 2) == 0);  // C(2,1) - 2
  CHECK(orthogonality_H(3, 3) == 1);
  for (Natural k = 1; k <= 20; ++k) {
    CHECK(orthogonality_H(0, k) == 1);
    CHECK(orthogonality_H(k, k) == 1);
    for (Natural ell = 1; ell < k; ++ell) CHECK(orthogonality_H(ell, k) == 0);
  }
  CHECK_THROWS_AS(orthogonality_H(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(orthogonality_H(3, 2), std::invalid_argument);
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
}
