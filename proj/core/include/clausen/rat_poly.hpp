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

#ifndef CLAUSEN_RAT_POLY_HPP
#define CLAUSEN_RAT_POLY_HPP

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "clausen/rational.hpp"

namespace clausen {

/// Dense univariate polynomial over Rational in the indeterminate t.
/// Coefficients are stored lowest degree first with trailing zeros trimmed;
/// the zero polynomial is the empty sequence.
class RatPoly {
 public:
  RatPoly() = default;
  RatPoly(std::initializer_list<Rational> coeffs);
  static RatPoly constant(const Rational& c);
  static RatPoly from_coeffs(std::vector<Rational> coeffs);
  /// The polynomial t itself.
  static RatPoly t();

  bool is_zero() const { return c_.empty(); }
  /// Degree, with -1 for the zero polynomial.
  std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(c_.size()) - 1; }
  /// Coefficient of t^i, zero beyond the degree.
  Rational coeff(Natural i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const;
  const std::vector<Rational>& coeffs() const { return c_; }

  /// Exact Horner evaluation.
  Rational operator()(const Rational& x) const;

  RatPoly operator-() const;
  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const RatPoly& o);
  RatPoly& operator*=(const Rational& s);
  RatPoly& operator/=(const Rational& s);

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(RatPoly a, const RatPoly& b) { return a *= b; }
  friend RatPoly operator*(RatPoly a, const Rational& s) { return a *= s; }
  friend RatPoly operator*(const Rational& s, RatPoly a) { return a *= s; }
  friend RatPoly operator/(RatPoly a, const Rational& s) { return a /= s; }

  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const RatPoly& a, const RatPoly& b) { return !(a == b); }

 private:
  std::vector<Rational> c_;
  void trim();
};

/// Shift operator S_h: returns the polynomial t -> p(t+h).
RatPoly shift(const RatPoly& p, const Rational& h);

/// (base)_k lifted to the polynomial ring: prod_{i=0..k-1} (base + i).
RatPoly rising_factorial_poly(const RatPoly& base, Natural k);

/// Unique polynomial of degree <= n with P(j) = values[j] for j = 0..n,
/// built from Newton forward differences:
///   P(t) = sum_k (Delta^k a_0 / k!) * t(t-1)...(t-k+1).
RatPoly interpolate(std::span<const Rational> values);

std::ostream& operator<<(std::ostream& os, const RatPoly& p);

}  // namespace clausen

#endif  // CLAUSEN_RAT_POLY_HPP
