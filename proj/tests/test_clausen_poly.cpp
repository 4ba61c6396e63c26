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

#include "clausen/clausen_poly.hpp"
#include "clausen/errors.hpp"

using namespace clausen;

namespace {

Rational rand_positive_noninteger(std::mt19937_64& rng) {
  while (true) {
    Rational r(1 + static_cast<long>(rng() % 9), 2 + static_cast<long>(rng() % 8));
    if (!r.is_integer()) return r;
  }
}

Rational rand_rational(std::mt19937_64& rng) {
  return Rational(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 9));
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_NOTHROW(validate(ClausenParams{Rational(1, 3), Rational(1, 5), 3}));
  // a+b+m+1/2 = 0
  CHECK_THROWS_AS(validate(ClausenParams{Rational(-3, 4), Rational(-3, 4), 1}), DegenerateParameter);
  // (a+1/2)_1 = 0
  CHECK_THROWS_AS(validate(ClausenParams{Rational(-1, 2), Rational(1, 3), 1}), DegenerateParameter);
  // (a+b)_2 = 0 via a+b = -1
  CHECK_THROWS_AS(validate(ClausenParams{Rational(-5, 4), Rational(1, 4), 2}), DegenerateParameter);
  // 2a+2b+2m a non-positive integer
  CHECK_THROWS_AS(validate(ClausenParams{Rational(-5, 4), Rational(-7, 4), 1}), DegenerateParameter);

  CHECK_THROWS_AS(validate(PerturbationInput{{}}), std::invalid_argument);
  CHECK_THROWS_AS(validate(PerturbationInput{{Rational(1), Rational(0)}}), std::invalid_argument);
  CHECK_THROWS_AS(validate(PerturbationInput{{Rational(0)}}), std::invalid_argument);
  CHECK_NOTHROW(validate(PerturbationInput{{Rational(3)}}));
}

TEST_CASE("characteristic polynomial of the square identity") {
  CHECK(char_poly({Rational(1, 3), Rational(2, 5), 0}) == RatPoly::constant(Rational(1)));

  const RatPoly half_case = char_poly({Rational(1, 2), Rational(1, 2), 1});
  CHECK(half_case == RatPoly{Rational(1), Rational(7, 8), Rational(1, 8)});  // (t^2+7t+8)/8

  // frozen independent evaluation at a=1/3, b=1/4, m=2
  const RatPoly quartic = char_poly({Rational(1, 3), Rational(1, 4), 2});
  CHECK(quartic == RatPoly{Rational(1), Rational(5232, 2695), Rational(5496, 4655), Rational(2880, 10241),
                           Rational(1296, 51205)});

  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 12; ++trial) {
    const Natural m = rng() % 5;
    const ClausenParams p{rand_positive_noninteger(rng), rand_positive_noninteger(rng), m};
    const RatPoly poly = char_poly(p);
    CHECK(poly.degree() == static_cast<std::ptrdiff_t>(2 * m));
    CHECK_FALSE(poly.is_zero());
    CHECK(poly(Rational(0)) == Rational(1));
    CHECK(poly == char_poly({p.b, p.a, p.m}));  // a <-> b symmetry
  }
}

TEST_CASE("m=1 closed form quadratic at random points") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 10; ++trial) {
    const Rational a = rand_positive_noninteger(rng), b = rand_positive_noninteger(rng);
    const Rational scale = Rational(2) * (a + b) * (Rational(2) * a + Rational(1)) * (Rational(2) * b + Rational(1));
    const RatPoly expected{scale, Rational(4) * (a + b) + Rational(1) + Rational(8) * a * b, Rational(1)};
    CHECK(char_poly({a, b, 1}) * scale == expected);
  }
}

TEST_CASE("m=2 quartic: corrected coefficient, and the misprint is exactly 540ab t") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const Rational a = rand_positive_noninteger(rng), b = rand_positive_noninteger(rng);
    const Rational scale = Rational(64) * rising_factorial(a + Rational(1, 2), 2) *
                           rising_factorial(b + Rational(1, 2), 2) * rising_factorial(a + b, 2);
    const Rational ab = a * b, sum = a + b, sq = a * a + b * b, cube = a * a * a + b * b * b;
    const Rational c3 = Rational(2) * (Rational(8) * ab + Rational(12) * sum + Rational(9));
    const Rational c2 = Rational(64) * ab * ab + Rational(4) * sum * (Rational(36) * ab + Rational(27)) +
                        Rational(72) * sq + Rational(288) * ab + Rational(33);
    const Rational bracket_common = sum * (Rational(64) * ab * ab + Rational(360) * ab + Rational(66)) +
                                    Rational(4) * sq * (Rational(32) * ab + Rational(27)) +
                                    Rational(48) * cube + Rational(288) * ab * ab + Rational(9);
    const RatPoly scaled = char_poly({a, b, 2}) * scale;
    const RatPoly corrected{scale, Rational(2) * (bracket_common + Rational(296) * ab), c2, c3, Rational(3)};
    CHECK(scaled == corrected);
    // the widely circulated 26ab variant differs from the true polynomial by 540ab t
    const RatPoly misprinted{scale, Rational(2) * (bracket_common + Rational(26) * ab), c2, c3, Rational(3)};
    CHECK(scaled - misprinted == RatPoly{Rational(0), Rational(540) * ab});
  }
}

TEST_CASE("interpolation route reproduces the double-sum construction") {
  CHECK(char_poly_via_interpolation({Rational(2, 7), Rational(3, 4), 0}) == RatPoly::constant(Rational(1)));
  CHECK(char_poly_via_interpolation({Rational(1, 2), Rational(1, 2), 1}) ==
        RatPoly{Rational(1), Rational(7, 8), Rational(1, 8)});
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 10; ++trial) {
    const Natural m = rng() % 5;
    const ClausenParams p{rand_positive_noninteger(rng), rand_positive_noninteger(rng), m};
    CHECK(char_poly(p) == char_poly_via_interpolation(p));
  }
}

TEST_CASE("node sums and ratios tie the polynomial to the terminating 4F3") {
  const ClausenParams p{Rational(1, 2), Rational(1, 2), 1};
  const PerturbationInput one{{Rational(1)}};
  CHECK(node_sum(p, one, 0) == Rational(1));
  CHECK(node_ratio(p, 0) == Rational(1));
  CHECK(node_sum(p, one, 1) == Rational(2));  // hand-computed window of width 2
  const RatPoly poly = char_poly(p);
  for (Natural k = 0; k <= 6; ++k)
    CHECK(node_sum(p, one, k) == node_ratio(p, k) * poly(Rational(static_cast<long>(k))));
}

TEST_CASE("recurrence coefficients at the half-parameter point") {
  const ClausenParams p{Rational(1, 2), Rational(1, 2), 1};
  const RecurrenceCoeffs rc = recurrence_coeffs(p, 1);
  CHECK(rc.beta0 == Rational(9, 4));
  CHECK(rc.beta1 == Rational(-5, 4));
  const RatPoly poly = char_poly(p);  // (t^2+7t+8)/8
  CHECK(poly(Rational(2)) == Rational(13, 4));
  CHECK(poly(Rational(2)) == rc.beta0 * poly(Rational(1)) + rc.beta1 * poly(Rational(0)));
  CHECK_THROWS_AS(recurrence_coeffs(p, 0), std::invalid_argument);
}

TEST_CASE("recurrence holds along the integers and collapses to beta0+beta1=1 for m=0") {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 8; ++trial) {
    const Natural m = rng() % 4;
    const ClausenParams p{rand_positive_noninteger(rng), rand_positive_noninteger(rng), m};
    const RatPoly poly = char_poly(p);
    for (Natural n = 1; n <= 30; ++n) {
      const RecurrenceCoeffs rc = recurrence_coeffs(p, n);
      CHECK(poly(Rational(static_cast<long>(n + 1))) ==
            rc.beta0 * poly(Rational(static_cast<long>(n))) + rc.beta1 * poly(Rational(static_cast<long>(n - 1))));
      if (m == 0) CHECK(rc.beta0 + rc.beta1 == Rational(1));
    }
  }
}

TEST_CASE("hat polynomial, direct construction") {
  const ClausenParams p{Rational(1, 3), Rational(1, 4), 1};

  CHECK(hat_poly_direct(p, PerturbationInput{{Rational(1)}}) == char_poly(p));
  CHECK(hat_poly_direct(p, PerturbationInput{{Rational(3)}}) == char_poly(p) * Rational(3));

  // frozen independent evaluation, sigma = (1, 2/3, -1/5)
  const RatPoly hp = hat_poly_direct(p, PerturbationInput{{Rational(1), Rational(2, 3), Rational(-1, 5)}});
  CHECK(hp == RatPoly{Rational(1), Rational(1777, 1050), Rational(368, 525), Rational(-2, 175),
                      Rational(-6, 175)});

  // the linear pair perturbation (f+y)/f collapses onto P_2m (t+2f)/(2f)
  std::mt19937_64 rng(26);
  for (Natural m = 0; m <= 2; ++m) {
    const ClausenParams q{rand_positive_noninteger(rng), rand_positive_noninteger(rng), m};
    const Rational f = rand_positive_noninteger(rng);
    const RatPoly lhs = hat_poly_direct(q, PerturbationInput{{Rational(1), Rational(1) / f}});
    const Rational two_f = f * Rational(2);
    CHECK(lhs == char_poly(q) * RatPoly{two_f, Rational(1)} / two_f);
  }

  CHECK_THROWS_AS(hat_poly_direct({Rational(1, 3), Rational(1, 4), 0},
                                  PerturbationInput{{Rational(1), Rational(1), Rational(1)}}),
                  std::domain_error);
}

TEST_CASE("hat polynomial: interpolated route agrees and extends past the bound") {
  std::mt19937_64 rng(27);
  for (int trial = 0; trial < 10; ++trial) {
    const Natural m = rng() % 3;
    const Natural s = rng() % (2 * m + 2);
    const ClausenParams p{rand_positive_noninteger(rng), rand_positive_noninteger(rng), m};
    std::vector<Rational> sigma(s + 1);
    for (auto& v : sigma) v = rand_rational(rng);
    if (sigma.back().is_zero()) sigma.back() = Rational(2, 3);
    const PerturbationInput f{sigma};
    const RatPoly direct = hat_poly_direct(p, f);
    CHECK(direct == hat_poly_interp(p, f));
    CHECK(direct.degree() == static_cast<std::ptrdiff_t>(2 * m + s));
    CHECK(direct(Rational(0)) == f.sigma[0]);
  }

  // beyond the bound the interpolated polynomial still exists with full degree
  const ClausenParams p{Rational(1, 3), Rational(1, 4), 1};
  const PerturbationInput over{{Rational(1), Rational(1), Rational(1), Rational(1), Rational(2)}};  // s = 4
  CHECK_FALSE(within_degree_bound(p, over));
  const RatPoly hp = hat_poly_interp(p, over);
  CHECK(hp.degree() == 6);
  CHECK(hp(Rational(0)) == Rational(1));
}

TEST_CASE("specific hat value, a=1/3 b=1/4 m=1 s=2 matches the pair closed form") {
  const ClausenParams p{Rational(1, 3), Rational(1, 4), 1};
  const Rational f(5, 3);
  const Rational ff1 = f * (f + Rational(1));
  const PerturbationInput sigma{
      {Rational(1), (Rational(2) * f + Rational(1)) / ff1, Rational(1) / ff1}};
  const RatPoly lhs = hat_poly_direct(p, sigma);

  const Rational half(1, 2);
  const RatPoly factor{Rational(1), (Rational(2) * f + Rational(1)) / (Rational(2) * ff1),
                       Rational(1) / (Rational(2) * ff1)};
  const Rational scale = p.a * p.b * (p.a + p.b + Rational(1)) /
                         (ff1 * (Rational(2) * p.a + Rational(1)) * (Rational(2) * p.b + Rational(1)) *
                          rising_factorial(p.a + p.b, 2));
  const RatPoly linear{p.a + p.b + Rational(1) - half, Rational(1)};
  const RatPoly t_tminus1{Rational(0), Rational(-1), Rational(1)};
  const RatPoly lower = shift(char_poly({p.a + Rational(1), p.b + Rational(1), 0}), Rational(-2));
  CHECK(lhs == factor * char_poly(p) - linear * t_tminus1 * lower * scale);
}
