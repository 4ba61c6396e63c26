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

#include "clausen/errors.hpp"
#include "clausen/series.hpp"

using namespace clausen;

namespace {

Rational rand_rational(std::mt19937_64& rng) {
  return Rational(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 9));
}

Rational rand_positive_noninteger(std::mt19937_64& rng) {
  while (true) {
    Rational r(1 + static_cast<long>(rng() % 9), 2 + static_cast<long>(rng() % 8));
    if (!r.is_integer()) return r;
  }
}

// direct Pochhammer-quotient oracle for a single coefficient
Rational direct_coefficient(const PerturbedSpec& ps, Natural k) {
  Rational num(1), den(Rational(factorial(k)));
  for (const auto& a : ps.spec.top) num *= rising_factorial(a, k);
  for (const auto& b : ps.spec.bottom) den *= rising_factorial(b, k);
  return num / den * ps.perturb(Rational(static_cast<long>(k)));
}

TruncatedSeries geometric(Natural order) {
  return series_coeffs({{{Rational(1)}, {}}, RatPoly::constant(Rational(1))}, order);
}

}  // namespace

TEST_CASE("gauss series coefficients start with 1 and ab/c") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 15; ++trial) {
    const Rational a = rand_rational(rng), b = rand_rational(rng);
    const Rational c = rand_positive_noninteger(rng);
    const auto s = series_coeffs({{{a, b}, {c}}, RatPoly::constant(Rational(1))}, 5);
    CHECK(s[0] == Rational(1));
    CHECK(s[1] == a * b / c);
  }
}

TEST_CASE("the geometric series has unit coefficients and theta counts the index") {
  const auto ones = geometric(12);
  for (Natural k = 0; k <= 12; ++k) CHECK(ones[k] == Rational(1));
  const auto counted = series_coeffs({{{Rational(1)}, {}}, RatPoly::t()}, 12);
  for (Natural k = 0; k <= 12; ++k) CHECK(counted[k] == Rational(static_cast<long>(k)));
  CHECK(theta(ones) == counted);
}

TEST_CASE("incremental ratio generation equals the direct quotient, order 50") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 6; ++trial) {
    PerturbedSpec ps{{{rand_rational(rng), rand_rational(rng)},
                      {rand_positive_noninteger(rng), rand_positive_noninteger(rng)}},
                     RatPoly{rand_rational(rng), rand_rational(rng)}};
    const auto s = series_coeffs(ps, 50);
    for (Natural k = 0; k <= 50; ++k) CHECK(s[k] == direct_coefficient(ps, k));
  }
}

TEST_CASE("degenerate bottom parameters are rejected exactly when inside the window") {
  PerturbedSpec ps{{{Rational(1, 2)}, {Rational(-5)}}, RatPoly::constant(Rational(1))};
  CHECK_THROWS_AS(series_coeffs(ps, 10), DegenerateParameter);
  CHECK_THROWS_AS(series_coeffs(ps, 6), DegenerateParameter);
  CHECK_NOTHROW(series_coeffs(ps, 5));  // ratio steps touch -5+k for k <= 4 only
  PerturbedSpec far{{{Rational(1, 2)}, {Rational(-15)}}, RatPoly::constant(Rational(1))};
  CHECK_NOTHROW(series_coeffs(far, 10));
}

TEST_CASE("cauchy product basics") {
  const auto ones = geometric(10);
  const auto prod = cauchy_product(ones, ones);
  for (Natural k = 0; k <= 10; ++k) CHECK(prod[k] == Rational(static_cast<long>(k + 1)));

  std::mt19937_64 rng(13);
  std::vector<Rational> coeffs(8);
  for (auto& c : coeffs) c = rand_rational(rng);
  const TruncatedSeries f(coeffs);
  std::vector<Rational> delta(8, Rational(0));
  delta[0] = Rational(1);
  CHECK(cauchy_product(f, TruncatedSeries(delta)) == f);
}

TEST_CASE("cauchy product is commutative and associative on the shared window") {
  std::mt19937_64 rng(14);
  std::vector<Rational> fa(9), fb(9), fc(9);
  for (auto& c : fa) c = rand_rational(rng);
  for (auto& c : fb) c = rand_rational(rng);
  for (auto& c : fc) c = rand_rational(rng);
  const TruncatedSeries f(fa), g(fb), h(fc);
  CHECK(cauchy_product(f, g) == cauchy_product(g, f));
  CHECK(cauchy_product(cauchy_product(f, g), h) == cauchy_product(f, cauchy_product(g, h)));
}

TEST_CASE("the classical half-parameter square: first nontrivial coefficient") {
  const Rational half(1, 2);
  const auto gauss = series_coeffs({{{half, half}, {Rational(3, 2)}}, RatPoly::constant(Rational(1))}, 4);
  const auto square = cauchy_product(gauss, gauss);
  CHECK(square[1] == Rational(1, 3));
  const auto rhs =
      series_coeffs({{{Rational(1), Rational(1), Rational(1)}, {Rational(3, 2), Rational(2)}},
                     RatPoly::constant(Rational(1))},
                    4);
  CHECK(rhs[1] == Rational(1, 3));
}

TEST_CASE("derivative and theta behave like d/dx and x d/dx") {
  const TruncatedSeries f(std::vector<Rational>{Rational(1), Rational(1), Rational(1)});
  CHECK(derivative(f) == TruncatedSeries(std::vector<Rational>{Rational(1), Rational(2)}));
  CHECK(derivative(TruncatedSeries(std::vector<Rational>{Rational(5)})).size() == 0);
  CHECK(theta(f) == TruncatedSeries(std::vector<Rational>{Rational(0), Rational(1), Rational(2)}));

  const auto geo = geometric(10);
  for (Natural k = 0; k <= 10; ++k) CHECK(theta(theta(geo))[k] == Rational(static_cast<long>(k * k)));

  // d/dx (x f') = f' + x f''
  const auto lhs = derivative(theta(geo));
  auto rhs = derivative(geo);
  rhs += shifted_up(derivative(derivative(geo)), 1);
  CHECK(lhs == rhs);
}

TEST_CASE("perturbation is linear and theta multiplies the perturbation by t") {
  std::mt19937_64 rng(15);
  const SeriesSpec spec{{rand_rational(rng), rand_rational(rng)}, {rand_positive_noninteger(rng)}};
  const RatPoly p1{rand_rational(rng), rand_rational(rng)};
  const RatPoly p2{rand_rational(rng), Rational(0), rand_rational(rng)};
  auto sum_runs = series_coeffs({spec, p1}, 20);
  sum_runs += series_coeffs({spec, p2}, 20);
  CHECK(series_coeffs({spec, p1 + p2}, 20) == sum_runs);
  CHECK(theta(series_coeffs({spec, p1}, 20)) == series_coeffs({spec, p1 * RatPoly::t()}, 20));
}

TEST_CASE("terminating sums at unity") {
  // single-term window: only the perturbation value at 0 survives
  const RatPoly p{Rational(5, 7), Rational(3)};
  CHECK(terminating_sum_unity({{{Rational(0), Rational(9, 2)}, {Rational(4, 3)}}, p}) == Rational(5, 7));

  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 10; ++trial) {
    const Rational b = rand_rational(rng);
    const Rational c = rand_positive_noninteger(rng);
    CHECK(terminating_sum_unity({{{Rational(-1), b}, {c}}, RatPoly::constant(Rational(1))}) ==
          Rational(1) - b / c);
  }

  // the smallest termination index wins: -1 beats -3
  const Rational via_min =
      terminating_sum_unity({{{Rational(-1), Rational(-3)}, {Rational(5, 2)}}, RatPoly::constant(Rational(1))});
  CHECK(via_min == Rational(1) + Rational(3) / Rational(5, 2));

  CHECK_THROWS_AS(terminating_sum_unity({{{Rational(1, 2)}, {}}, RatPoly::constant(Rational(1))}),
                  NonTerminating);
  // bottom parameter -2 dies at term 3 of a window of width 4
  CHECK_THROWS_AS(
      terminating_sum_unity({{{Rational(-4)}, {Rational(-2)}}, RatPoly::constant(Rational(1))}),
      DegenerateParameter);
}

TEST_CASE("window arithmetic truncates to the shorter operand") {
  TruncatedSeries a(std::vector<Rational>{Rational(1), Rational(2), Rational(3)});
  const TruncatedSeries b(std::vector<Rational>{Rational(5), Rational(5)});
  a += b;
  CHECK(a.size() == 2);
  CHECK(a[0] == Rational(6));
  CHECK(a[1] == Rational(7));
  CHECK(shifted_up(b, 2).size() == 4);
  CHECK(shifted_up(b, 2)[2] == Rational(5));
}

TEST_CASE("the 4F3 window value matching the m=1 node identity") {
  // top (-1, 1/2, 1/2, -5/2), bottom (5/2, -1/2, -1/2): both remark-form
  // bottoms and their sign-flipped printing sum to the same value 2
  const Rational half(1, 2);
  PerturbedSpec remark{{{Rational(-1), half, half, Rational(-5, 2)},
                        {Rational(5, 2), Rational(-1, 2), Rational(-1, 2)}},
                       RatPoly::constant(Rational(1))};
  CHECK(terminating_sum_unity(remark) == Rational(2));
  PerturbedSpec printed{{{Rational(-1), half, half, Rational(-5, 2)}, {Rational(5, 2), half, half}},
                        RatPoly::constant(Rational(1))};
  CHECK(terminating_sum_unity(printed) == Rational(2));
}
