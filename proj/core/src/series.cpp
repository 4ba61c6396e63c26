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

#include "clausen/series.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "clausen/errors.hpp"

namespace clausen {

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  if (o.c_.size() < c_.size()) c_.resize(o.c_.size());
  for (Natural k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  if (o.c_.size() < c_.size()) c_.resize(o.c_.size());
  for (Natural k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

TruncatedSeries series_coeffs(const PerturbedSpec& ps, Natural order) {
  // The ratio step from c_k to c_{k+1} divides by (b + k) for k = 0..N-1.
  for (const auto& b : ps.spec.bottom)
    if (b.is_nonpositive_integer() && (order == 0 || b.termination_index() <= order - 1))
      throw DegenerateParameter("bottom parameter " + b.str() + " vanishes within truncation order " +
                                std::to_string(order));
  std::vector<Rational> out(order + 1);
  Rational h(1);  // unperturbed coefficient prod (top)_k / (prod (bottom)_k k!)
  for (Natural k = 0; k <= order; ++k) {
    out[k] = h * ps.perturb(Rational(static_cast<long>(k)));
    if (k == order) break;
    const Rational kk(static_cast<long>(k));
    for (const auto& a : ps.spec.top) h *= a + kk;
    for (const auto& b : ps.spec.bottom) h /= b + kk;
    h /= kk + Rational(1);
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries cauchy_product(const TruncatedSeries& f, const TruncatedSeries& g) {
  const Natural n = std::min(f.size(), g.size());
  std::vector<Rational> out(n);
  for (Natural k = 0; k < n; ++k) {
    Rational acc(0);
    for (Natural i = 0; i <= k; ++i) acc += f[i] * g[k - i];
    out[k] = acc;
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries derivative(const TruncatedSeries& f) {
  if (f.size() == 0) throw std::invalid_argument("derivative of an empty window");
  std::vector<Rational> out(f.size() - 1);
  for (Natural k = 0; k + 1 < f.size(); ++k) out[k] = Rational(static_cast<long>(k + 1)) * f[k + 1];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries theta(const TruncatedSeries& f) {
  std::vector<Rational> out(f.size());
  for (Natural k = 0; k < f.size(); ++k) out[k] = Rational(static_cast<long>(k)) * f[k];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries shifted_up(const TruncatedSeries& f, Natural k) {
  std::vector<Rational> out(f.size() + k);
  for (Natural i = 0; i < f.size(); ++i) out[i + k] = f[i];
  return TruncatedSeries(std::move(out));
}

Rational terminating_sum_unity(const PerturbedSpec& ps) {
  std::optional<Natural> window;
  for (const auto& a : ps.spec.top)
    if (a.is_nonpositive_integer()) {
      const Natural k = a.termination_index();
      if (!window || k < *window) window = k;
    }
  if (!window) throw NonTerminating("no non-positive-integer top parameter");

  Rational total(0);
  Rational num(1);  // prod (top)_j, updated multiplicatively
  Rational den(1);  // prod (bottom)_j * j!
  for (Natural j = 0; j <= *window; ++j) {
    if (j > 0) {
      const Rational jm1(static_cast<long>(j - 1));
      for (const auto& a : ps.spec.top) num *= a + jm1;
      for (const auto& b : ps.spec.bottom) {
        const Rational factor = b + jm1;
        if (factor.is_zero())
          throw DegenerateParameter("bottom parameter " + b.str() + " vanishes at term " + std::to_string(j) +
                                    " of a terminating sum");
        den *= factor;
      }
      den *= Rational(static_cast<long>(j));
    }
    if (!num.is_zero()) total += num / den * ps.perturb(Rational(static_cast<long>(j)));
  }
  return total;
}

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) {
  os << "[";
  for (Natural k = 0; k < s.size(); ++k) {
    if (k) os << ", ";
    os << s[k];
  }
  return os << "]";
}

}  // namespace clausen
