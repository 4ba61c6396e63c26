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

#include "clausen/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace clausen {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
  if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view p = text;
  std::string_view q = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    p = text.substr(0, slash);
    q = text.substr(slash + 1);
  }
  std::string_view digits = p;
  bool negative = false;
  if (!digits.empty() && digits.front() == '-') {
    negative = true;
    digits.remove_prefix(1);
  }
  if (!all_digits(digits) || !all_digits(q))
    throw std::invalid_argument("not a rational literal: \"" + std::string(text) + "\"");
  mpz_class num(std::string(digits), 10);
  mpz_class den(std::string(q), 10);
  if (sgn(den) == 0)
    throw std::invalid_argument("rational literal with zero denominator: \"" + std::string(text) + "\"");
  if (negative) num = -num;
  return Rational(num, den);
}

Natural Rational::termination_index() const {
  if (!is_nonpositive_integer())
    throw std::logic_error("termination_index on non-terminating parameter " + str());
  mpz_class k = -v_.get_num();
  if (!k.fits_ulong_p())
    throw std::overflow_error("termination index out of machine range");
  return static_cast<Natural>(k.get_ui());
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational rising_factorial(const Rational& x, Natural k) {
  Rational acc(1);
  for (Natural i = 0; i < k; ++i) {
    Rational factor = x + Rational(static_cast<long>(i));
    if (factor.is_zero()) return Rational(0);
    acc *= factor;
  }
  return acc;
}

mpz_class factorial(Natural k) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

mpz_class binomial(Natural n, std::int64_t k) {
  if (k < 0 || static_cast<Natural>(k) > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

mpz_class stirling2(Natural n, Natural k) {
  if (k > n) return 0;
  mpz_class sum = 0;
  for (Natural i = 0; i <= k; ++i) {
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(n));
    mpz_class term = binomial(k, static_cast<std::int64_t>(i)) * power;
    if ((k - i) % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  // the alternating sum is divisible by k!
  return sum / factorial(k);
}

mpz_class orthogonality_H(Natural ell, Natural k) {
  if (k < 1) throw std::invalid_argument("orthogonality_H requires k >= 1");
  if (ell > k) throw std::invalid_argument("orthogonality_H requires ell <= k");
  mpz_class sum = 0;
  for (Natural j = 0; j <= k / 2; ++j) {
    // k/(k-j) * C(k-j, j) = k * (k-j-1)! / (j! (k-2j)!), an integer
    mpz_class weight = factorial(k - j - 1) * static_cast<unsigned long>(k);
    weight /= factorial(j) * factorial(k - 2 * j);
    mpz_class term = weight * binomial(k - 2 * j, static_cast<std::int64_t>(ell) - static_cast<std::int64_t>(j));
    if (j % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

}  // namespace clausen
