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

#include "clausen/clausen_poly.hpp"

#include <stdexcept>
#include <string>

#include "clausen/errors.hpp"
#include "clausen/series.hpp"

namespace clausen {

namespace {

const Rational kHalf(1, 2);

Rational require_nonzero(Rational value, const char* what) {
  if (value.is_zero()) throw DegenerateParameter(std::string(what) + " vanishes");
  return value;
}

Rational pow4(Natural j) {
  Rational r(1);
  for (Natural i = 0; i < j; ++i) r *= Rational(4);
  return r;
}

}  // namespace

void validate(const ClausenParams& p) {
  const Rational c = p.a + p.b + Rational(static_cast<long>(p.m)) + kHalf;
  if (c.is_nonpositive_integer())
    throw DegenerateParameter("bottom parameter a+b+m+1/2 = " + c.str() + " is a non-positive integer");
  const Rational d = (p.a + p.b + Rational(static_cast<long>(p.m))) * Rational(2);
  if (d.is_nonpositive_integer())
    throw DegenerateParameter("bottom parameter 2a+2b+2m = " + d.str() + " is a non-positive integer");
  require_nonzero(rising_factorial(p.a + p.b, p.m), "(a+b)_m");
  require_nonzero(rising_factorial(p.a + kHalf, p.m), "(a+1/2)_m");
  require_nonzero(rising_factorial(p.b + kHalf, p.m), "(b+1/2)_m");
}

void validate(const PerturbationInput& f) {
  if (f.sigma.empty()) throw std::invalid_argument("perturbation needs at least sigma_0");
  if (f.sigma.back().is_zero())
    throw std::invalid_argument("leading perturbation coefficient sigma_s must be nonzero");
}

bool within_degree_bound(const ClausenParams& p, const PerturbationInput& f) {
  return f.degree() <= 2 * p.m + 1;
}

RatPoly char_poly(const ClausenParams& p) {
  validate(p);
  const Rational& a = p.a;
  const Rational& b = p.b;
  const Natural m = p.m;

  const Rational prefactor =
      rising_factorial(a, m) * rising_factorial(b, m) /
      (require_nonzero(rising_factorial(a + b, m), "(a+b)_m") *
       require_nonzero(rising_factorial(a + kHalf, m), "(a+1/2)_m") *
       require_nonzero(rising_factorial(b + kHalf, m), "(b+1/2)_m"));

  const RatPoly half_t{Rational(0), kHalf};           // t/2
  const RatPoly inner_base{kHalf - a - b - Rational(static_cast<long>(m)), -kHalf};  // (1-t)/2 - a - b - m

  RatPoly total;
  for (Natural j = 0; j <= m; ++j) {
    RatPoly outer = rising_factorial_poly(half_t + RatPoly::constant(a + b + Rational(static_cast<long>(j))), m - j);
    outer *= rising_factorial_poly(-half_t, j);

    RatPoly inner;
    for (Natural i = 0; i <= m - j; ++i) {
      const Rational num = rising_factorial(Rational(static_cast<long>(j) - static_cast<long>(m)), i) *
                           rising_factorial(kHalf, i);
      const Rational den =
          require_nonzero(rising_factorial(Rational(1) - a - Rational(static_cast<long>(m)), i), "(1-a-m)_i") *
          require_nonzero(rising_factorial(Rational(1) - b - Rational(static_cast<long>(m)), i), "(1-b-m)_i") *
          Rational(factorial(i));
      inner += rising_factorial_poly(inner_base, i) * (num / den);
    }

    Rational scale = prefactor * Rational(binomial(m, static_cast<std::int64_t>(j)));
    if (j % 2 == 1) scale = -scale;
    total += outer * inner * scale;
  }
  return total;
}

Rational node_sum(const ClausenParams& p, const PerturbationInput& f, Natural k) {
  const Rational kk(static_cast<long>(k));
  const Rational mm(static_cast<long>(p.m));
  PerturbedSpec ps{
      {{-kk, p.a, p.b, kHalf - kk - p.a - p.b - mm},
       {p.a + p.b + mm + kHalf, Rational(1) - p.a - kk, Rational(1) - p.b - kk}},
      f.poly()};
  return terminating_sum_unity(ps);
}

Rational node_ratio(const ClausenParams& p, Natural k) {
  const Rational two_a = p.a * Rational(2);
  const Rational two_b = p.b * Rational(2);
  const Rational ab = p.a + p.b;
  const Rational abm2 = (ab + Rational(static_cast<long>(p.m))) * Rational(2);
  const Rational num = rising_factorial(two_a, k) * rising_factorial(two_b, k) * rising_factorial(ab, k);
  const Rational den = require_nonzero(rising_factorial(p.a, k), "(a)_k") *
                       require_nonzero(rising_factorial(p.b, k), "(b)_k") *
                       require_nonzero(rising_factorial(abm2, k), "(2a+2b+2m)_k");
  return num / den;
}

namespace {

RatPoly interpolate_nodes(const ClausenParams& p, const PerturbationInput& f, Natural node_count) {
  std::vector<Rational> values(node_count + 1);
  for (Natural k = 0; k <= node_count; ++k) {
    const Rational ratio = require_nonzero(node_ratio(p, k), "node ratio");
    values[k] = node_sum(p, f, k) / ratio;
  }
  return interpolate(values);
}

}  // namespace

RatPoly char_poly_via_interpolation(const ClausenParams& p) {
  validate(p);
  return interpolate_nodes(p, PerturbationInput{{Rational(1)}}, 2 * p.m);
}

RatPoly hat_poly_interp(const ClausenParams& p, const PerturbationInput& f) {
  validate(p);
  validate(f);
  return interpolate_nodes(p, f, 2 * p.m + f.degree());
}

RatPoly hat_poly_direct(const ClausenParams& p, const PerturbationInput& f) {
  validate(p);
  validate(f);
  const Natural s = f.degree();
  if (!within_degree_bound(p, f))
    throw std::domain_error("perturbation degree " + std::to_string(s) + " exceeds 2m+1 = " +
                            std::to_string(2 * p.m + 1));

  const Rational& a = p.a;
  const Rational& b = p.b;
  const Rational mm(static_cast<long>(p.m));

  // shifted characteristic polynomials P_{2m-2j}^{a+j,b+j}(t-2j), one per j
  std::vector<RatPoly> shifted_char;
  for (Natural j = 0; j <= s / 2; ++j) {
    const Rational jj(static_cast<long>(j));
    ClausenParams q{a + jj, b + jj, p.m - j};
    shifted_char.push_back(shift(char_poly(q), Rational(-2 * static_cast<long>(j))));
  }

  RatPoly acc = f.sigma[0] * shifted_char[0];
  const RatPoly neg_t = -RatPoly::t();
  const RatPoly weight_base{kHalf - a - b - mm, Rational(-1)};  // 1/2 - a - b - m - t
  for (Natural n = 1; n <= s; ++n) {
    if (f.sigma[n].is_zero()) continue;
    for (Natural k = 1; k <= n; ++k) {
      Rational outer = f.sigma[n] * Rational(stirling2(n, k)) * kHalf;
      if (k % 2 == 1) outer = -outer;
      const RatPoly falling = rising_factorial_poly(neg_t, k);
      for (Natural j = 0; j <= k / 2; ++j) {
        const Rational jj(static_cast<long>(j));
        const Rational weight =
            Rational(static_cast<long>(k), static_cast<long>(k - j)) * Rational(binomial(k - j, static_cast<std::int64_t>(j)));
        const Rational a_factor =
            rising_factorial(a, j) * rising_factorial(b, j) * rising_factorial(a + b + mm, j) /
            (pow4(j) * require_nonzero(rising_factorial(a + kHalf, j), "(a+1/2)_j") *
             require_nonzero(rising_factorial(b + kHalf, j), "(b+1/2)_j") *
             require_nonzero(rising_factorial(a + b, 2 * j), "(a+b)_2j"));
        acc += rising_factorial_poly(weight_base, j) * falling * shifted_char[j] * (outer * weight * a_factor);
      }
    }
  }
  return acc;
}

RecurrenceCoeffs recurrence_coeffs(const ClausenParams& p, Natural n) {
  if (n < 1) throw std::invalid_argument("recurrence_coeffs requires n >= 1");
  const Rational& a = p.a;
  const Rational& b = p.b;
  const Rational nn(static_cast<long>(n));
  const Rational c = a + b + Rational(static_cast<long>(p.m)) + kHalf;
  const Rational den = require_nonzero((a * Rational(2) + nn) * (b * Rational(2) + nn) * (a + b + nn),
                                       "(2a+n)(2b+n)(a+b+n)");
  const Rational num0 = Rational(2) * nn * nn * nn + Rational(3) * (a + b + c - Rational(1)) * nn * nn +
                        ((a + b) * (Rational(4) * c - Rational(3)) + Rational(4) * a * b - c + Rational(1)) * nn +
                        Rational(2) * a * b * (Rational(2) * c - Rational(1));
  const Rational num1 = -(nn * (c + nn - Rational(1)) * (Rational(2) * c - Rational(2) + nn));
  return {num0 / den, num1 / den};
}

}  // namespace clausen
