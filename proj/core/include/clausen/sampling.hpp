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

#ifndef CLAUSEN_SAMPLING_HPP
#define CLAUSEN_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "clausen/clausen_poly.hpp"
#include "clausen/rational.hpp"
#include "clausen/series.hpp"

namespace clausen {

struct WhippleTuple {
  Rational a, b, c, d, e;
  Natural n = 0;
};

/// Deterministic parameter source for the randomized verification suites.
/// Numerators are drawn from [-9, 9] and denominators from [1, 9]; degenerate
/// configurations are rejected by precondition checks. The engine is the
/// standardized mt19937_64, so equal seeds give identical draws on every
/// platform.
class ParamSampler {
 public:
  explicit ParamSampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform index in [lo, hi], both inclusive.
  Natural index(Natural lo, Natural hi);

  /// Numerator in [-9, 9], denominator in [1, 9].
  Rational small_rational();
  Rational nonzero_small_rational();

  /// Positive non-integer in lowest terms (numerator 1..9, denominator 2..9).
  /// Such parameters keep every identity here away from its degenerate set.
  Rational positive_noninteger();

  /// Random perturbation of exact degree s.
  PerturbationInput sigma(Natural s);

  /// Positive non-integer (a, b) with the given m.
  ClausenParams clausen(Natural m);

  /// Admissible Whipple tuple with n <= n_max: every bottom parameter of both
  /// sides stays nonzero across the terminating window.
  WhippleTuple whipple(Natural n_max);

  /// Random coefficient window of the given length.
  TruncatedSeries series_window(Natural length);

 private:
  std::mt19937_64 rng_;
};

}  // namespace clausen

#endif  // CLAUSEN_SAMPLING_HPP
