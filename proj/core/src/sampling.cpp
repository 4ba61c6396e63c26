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

#include "clausen/sampling.hpp"

#include <stdexcept>
#include <vector>

namespace clausen {

namespace {
constexpr int kMaxRejections = 10000;
}

Natural ParamSampler::index(Natural lo, Natural hi) {
  // modulo mapping keeps the draw sequence fully specified by the engine
  return lo + static_cast<Natural>(rng_() % (hi - lo + 1));
}

Rational ParamSampler::small_rational() {
  const long num = static_cast<long>(index(0, 18)) - 9;
  const long den = static_cast<long>(index(1, 9));
  return Rational(num, den);
}

Rational ParamSampler::nonzero_small_rational() {
  for (int i = 0; i < kMaxRejections; ++i) {
    Rational r = small_rational();
    if (!r.is_zero()) return r;
  }
  throw std::logic_error("sampler starved");
}

Rational ParamSampler::positive_noninteger() {
  for (int i = 0; i < kMaxRejections; ++i) {
    Rational r(static_cast<long>(index(1, 9)), static_cast<long>(index(2, 9)));
    if (!r.is_integer()) return r;
  }
  throw std::logic_error("sampler starved");
}

PerturbationInput ParamSampler::sigma(Natural s) {
  std::vector<Rational> coeffs(s + 1);
  for (Natural i = 0; i <= s; ++i) coeffs[i] = small_rational();
  if (coeffs.back().is_zero()) coeffs.back() = nonzero_small_rational();
  return PerturbationInput{std::move(coeffs)};
}

ClausenParams ParamSampler::clausen(Natural m) {
  return ClausenParams{positive_noninteger(), positive_noninteger(), m};
}

WhippleTuple ParamSampler::whipple(Natural n_max) {
  for (int tries = 0; tries < kMaxRejections; ++tries) {
    WhippleTuple w;
    w.n = index(0, n_max);
    w.a = Rational(static_cast<long>(index(1, 9)), static_cast<long>(index(2, 9)));
    w.b = nonzero_small_rational();
    w.c = nonzero_small_rational();
    w.d = nonzero_small_rational();
    w.e = nonzero_small_rational();
    const Rational one(1);
    const Rational nn(static_cast<long>(w.n));
    const std::vector<Rational> bottoms{w.a / Rational(2), w.a + one - w.b,      w.a + one - w.c,
                                        w.a + one - w.d,   w.a + one - w.e,     w.a + nn + one,
                                        w.b + w.c - nn - w.a};
    bool ok = true;
    for (const auto& beta : bottoms)
      if (rising_factorial(beta, w.n == 0 ? 1 : w.n).is_zero()) ok = false;
    if (ok) return w;
  }
  throw std::logic_error("whipple sampler starved");
}

TruncatedSeries ParamSampler::series_window(Natural length) {
  std::vector<Rational> coeffs(length);
  for (auto& c : coeffs) c = small_rational();
  return TruncatedSeries(std::move(coeffs));
}

}  // namespace clausen
