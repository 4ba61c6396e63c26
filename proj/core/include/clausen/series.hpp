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

#ifndef CLAUSEN_SERIES_HPP
#define CLAUSEN_SERIES_HPP

#include <iosfwd>
#include <vector>

#include "clausen/rat_poly.hpp"
#include "clausen/rational.hpp"

namespace clausen {

/// Parameter lists of a generalized hypergeometric series pFq(top; bottom; x).
/// No validation happens at construction; degeneracy is checked where the
/// series is actually expanded or summed.
struct SeriesSpec {
  std::vector<Rational> top;
  std::vector<Rational> bottom;
};

/// A series together with a perturbing polynomial: the k-th coefficient of
/// the plain series is multiplied by perturb(k). perturb == 1 recovers the
/// plain series.
struct PerturbedSpec {
  SeriesSpec spec;
  RatPoly perturb = RatPoly::constant(Rational(1));
};

/// Finite coefficient window c_0..c_N of a formal power series. Arithmetic
/// between mismatched lengths truncates to the shorter window.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  explicit TruncatedSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}
  static TruncatedSeries zeros(Natural length) { return TruncatedSeries(std::vector<Rational>(length)); }

  Natural size() const { return c_.size(); }
  const Rational& operator[](Natural k) const { return c_[k]; }
  Rational& operator[](Natural k) { return c_[k]; }
  const std::vector<Rational>& coeffs() const { return c_; }

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const Rational& s);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) { return a *= s; }
  friend TruncatedSeries operator*(const Rational& s, TruncatedSeries a) { return a *= s; }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }
  friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

 private:
  std::vector<Rational> c_;
};

/// Coefficients c_0..c_N of the truncation order N with
///   c_k = prod_i (top_i)_k / (prod_j (bottom_j)_k * k!) * perturb(k),
/// generated incrementally through the term ratio. Throws DegenerateParameter
/// when a bottom parameter zeroes a denominator at some k <= N.
TruncatedSeries series_coeffs(const PerturbedSpec& ps, Natural order);

/// Coefficient-wise convolution, truncated to the shorter input.
TruncatedSeries cauchy_product(const TruncatedSeries& f, const TruncatedSeries& g);

/// d/dx on the window: coeff k of the result is (k+1) * f[k+1]. Length
/// shrinks by one. Pre: f nonempty.
TruncatedSeries derivative(const TruncatedSeries& f);

/// x d/dx on the window: coeff k becomes k * f[k].
TruncatedSeries theta(const TruncatedSeries& f);

/// Multiplication by x^k: prepends k zeros (length grows by k).
TruncatedSeries shifted_up(const TruncatedSeries& f, Natural k);

/// Exact value at x = 1 of a terminating series: the sum runs over the window
/// j = 0..k fixed by the smallest non-positive-integer top parameter -k.
/// Terms are computed directly (numerator and denominator products tracked
/// separately), never by the term ratio, so zero terms inside the window are
/// harmless. Throws NonTerminating when no top parameter terminates and
/// DegenerateParameter when a bottom parameter vanishes inside the window.
Rational terminating_sum_unity(const PerturbedSpec& ps);

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s);

}  // namespace clausen

#endif  // CLAUSEN_SERIES_HPP
