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

#ifndef CLAUSEN_RATIONAL_HPP
#define CLAUSEN_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace clausen {

/// Nonnegative machine-range index (m, s, k, n, j, truncation order N).
using Natural = std::size_t;

/// Exact arbitrary-precision fraction, always in lowest terms with positive
/// denominator. Every scalar in the library is a Rational; nothing is ever
/// rounded.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(n) {}
  Rational(long num, long den);
  explicit Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpz_class& num, const mpz_class& den);

  /// Strict parse of "p" or "p/q" with optional leading minus on p and
  /// positive q. Throws std::invalid_argument on anything else.
  static Rational parse(std::string_view text);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_negative() const { return sgn(v_) < 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  /// The degeneracy test behind every hypergeometric precondition: true iff
  /// this is an integer <= 0.
  bool is_nonpositive_integer() const { return is_integer() && sgn(v_) <= 0; }

  /// For a terminating top parameter -k, returns k. Pre: is_nonpositive_integer().
  Natural termination_index() const;

  /// Lowest-terms "p/q", or "p" when the denominator is 1.
  std::string str() const { return v_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Rising factorial (Pochhammer symbol) (x)_k = x (x+1) ... (x+k-1).
/// Empty product 1 for k = 0.
Rational rising_factorial(const Rational& x, Natural k);

/// k! as an exact integer.
mpz_class factorial(Natural k);

/// Binomial coefficient; 0 whenever k < 0 or k > n (summation convention).
mpz_class binomial(Natural n, std::int64_t k);

/// Stirling number of the second kind, computed by the explicit alternating
/// sum S(n,k) = (1/k!) sum_{i=0..k} (-1)^(k-i) C(k,i) i^n. Zero for k > n.
mpz_class stirling2(Natural n, Natural k);

/// H_{l,k} = sum_{j=0..floor(k/2)} (-1)^j * k/(k-j) * C(k-j,j) * C(k-2j, l-j).
/// Returns the raw sum so callers can compare it against the predicted value
/// delta_{l,0} + delta_{l,k}. Pre: k >= 1 and l <= k.
mpz_class orthogonality_H(Natural ell, Natural k);

}  // namespace clausen

#endif  // CLAUSEN_RATIONAL_HPP
