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

#include "clausen/rat_poly.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace clausen {

RatPoly::RatPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

RatPoly RatPoly::constant(const Rational& c) { return RatPoly{c}; }

RatPoly RatPoly::from_coeffs(std::vector<Rational> coeffs) {
  RatPoly p;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

RatPoly RatPoly::t() { return RatPoly{Rational(0), Rational(1)}; }

void RatPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& RatPoly::leading() const {
  if (c_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
  return c_.back();
}

Rational RatPoly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly RatPoly::operator-() const {
  RatPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (Natural i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (Natural i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const RatPoly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> out(c_.size() + o.c_.size() - 1);
  for (Natural i = 0; i < c_.size(); ++i)
    for (Natural j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  c_ = std::move(out);
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

RatPoly& RatPoly::operator/=(const Rational& s) {
  for (auto& c : c_) c /= s;
  return *this;
}

RatPoly shift(const RatPoly& p, const Rational& h) {
  // Horner form of p(t+h): fold from the top coefficient down.
  RatPoly result;
  const RatPoly t_plus_h{h, Rational(1)};
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    result = result * t_plus_h + RatPoly::constant(*it);
  return result;
}

RatPoly rising_factorial_poly(const RatPoly& base, Natural k) {
  RatPoly acc = RatPoly::constant(Rational(1));
  for (Natural i = 0; i < k; ++i) acc *= base + RatPoly::constant(Rational(static_cast<long>(i)));
  return acc;
}

RatPoly interpolate(std::span<const Rational> values) {
  if (values.empty()) throw std::invalid_argument("interpolate: no values");
  std::vector<Rational> diff(values.begin(), values.end());
  RatPoly result = RatPoly::constant(diff[0]);
  RatPoly basis = RatPoly::constant(Rational(1));
  Rational kfac(1);
  for (Natural k = 1; k < diff.size(); ++k) {
    for (Natural i = 0; i + k < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    basis *= RatPoly{Rational(-(static_cast<long>(k) - 1)), Rational(1)};  // t - (k-1)
    kfac *= Rational(static_cast<long>(k));
    result += basis * (diff[0] / kfac);
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const RatPoly& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (Natural i = 0; i < p.coeffs().size(); ++i) {
    const Rational& c = p.coeffs()[i];
    if (c.is_zero()) continue;
    if (!first) os << (c.is_negative() ? " - " : " + ");
    else if (c.is_negative()) os << "-";
    Rational mag = c.is_negative() ? -c : c;
    if (i == 0)
      os << mag;
    else {
      if (mag != Rational(1)) os << mag << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os;
}

}  // namespace clausen
