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

#ifndef CLAUSEN_CLAUSEN_POLY_HPP
#define CLAUSEN_CLAUSEN_POLY_HPP

#include <vector>

#include "clausen/rat_poly.hpp"
#include "clausen/rational.hpp"

namespace clausen {

/// Parameters of the square identity
///   [2F1(a,b; a+b+m+1/2; x)]^2
///     = sum_k (2a)_k(2b)_k(a+b)_k / ((a+b+m+1/2)_k (2a+2b+2m)_k k!) P_2m(k) x^k.
struct ClausenParams {
  Rational a;
  Rational b;
  Natural m = 0;
};

/// Throws DegenerateParameter unless the derived bottom parameters
/// a+b+m+1/2 and 2a+2b+2m avoid non-positive integers and the prefactor
/// denominators (a+b)_m, (a+1/2)_m, (b+1/2)_m are nonzero.
void validate(const ClausenParams& p);

/// Perturbing polynomial F_s(y) = sum_n sigma[n] y^n acting on the Gauss
/// series coefficients. sigma.back() must be nonzero (true degree s).
struct PerturbationInput {
  std::vector<Rational> sigma;

  Natural degree() const { return sigma.empty() ? 0 : sigma.size() - 1; }
  RatPoly poly() const { return RatPoly::from_coeffs(sigma); }
};

/// Throws std::invalid_argument when sigma is empty or its last entry is zero.
void validate(const PerturbationInput& f);

/// True iff the perturbed product identity applies: deg F_s <= 2m+1.
bool within_degree_bound(const ClausenParams& p, const PerturbationInput& f);

/// Characteristic polynomial P_2m(t) of the square identity, of degree
/// exactly 2m with P_2m(0) = 1, built by expanding in the polynomial ring
///   P_2m(t) = sum_{j=0..m} C(m,j) (-1)^j
///             (a)_m (b)_m (a+b+t/2+j)_{m-j} (-t/2)_j
///             / ((a+b)_m (a+1/2)_m (b+1/2)_m)
///             * 3F2(-m+j, (1-t)/2-a-b-m, 1/2; 1-a-m, 1-b-m | 1),
/// where the terminating 3F2 contributes m-j+1 terms, each polynomial in t.
RatPoly char_poly(const ClausenParams& p);

/// Same polynomial by the independent route: interpolate the values
/// P_2m(k) = node_sum(k) / node_ratio(k) at the nodes k = 0..2m.
RatPoly char_poly_via_interpolation(const ClausenParams& p);

/// Terminating sum fixing the node values of the characteristic polynomials:
///   F(-k, a, b, 1/2-k-a-b-m; a+b+m+1/2, 1-a-k, 1-b-k | F_s) at unity.
Rational node_sum(const ClausenParams& p, const PerturbationInput& f, Natural k);

/// (2a)_k (2b)_k (a+b)_k / ((a)_k (b)_k (2a+2b+2m)_k); the perturbed product
/// identity says node_sum(k) = node_ratio(k) * hatP(k).
Rational node_ratio(const ClausenParams& p, Natural k);

/// Characteristic polynomial hatP_{2m+s}(t) of the product of the Gauss
/// series with its F_s perturbation, of degree exactly 2m+s:
///   hatP(t) = sigma_0 P_2m(t)
///     + 1/2 sum_{n=1..s} sigma_n sum_{k=1..n} (-1)^k S(n,k)
///       sum_{j=0..k/2} k/(k-j) C(k-j,j)
///       * (a)_j (b)_j (a+b+m)_j (1/2-a-b-m-t)_j
///         / (4^j (a+1/2)_j (b+1/2)_j (a+b)_{2j})
///       * (-t)_k P_{2m-2j}^{a+j,b+j}(t-2j).
/// Requires deg F_s <= 2m+1 (throws std::domain_error beyond the bound,
/// where the shifted polynomials stop existing).
RatPoly hat_poly_direct(const ClausenParams& p, const PerturbationInput& f);

/// Same polynomial by interpolation of node_sum/node_ratio at k = 0..2m+s.
/// Well defined for every s; beyond s = 2m+1 the result no longer satisfies
/// the product identity (callers flag it, see within_degree_bound).
RatPoly hat_poly_interp(const ClausenParams& p, const PerturbationInput& f);

/// Three-term contiguous recurrence satisfied by the values P_2m(n):
///   P_2m(n+1) = beta0(n) P_2m(n) + beta1(n) P_2m(n-1), with c = a+b+m+1/2,
///   beta0(n) = (2n^3 + 3(a+b+c-1)n^2 + ((a+b)(4c-3)+4ab-c+1)n + 2ab(2c-1))
///              / ((2a+n)(2b+n)(a+b+n)),
///   beta1(n) = -n(c+n-1)(2c-2+n) / ((2a+n)(2b+n)(a+b+n)).
struct RecurrenceCoeffs {
  Rational beta0;
  Rational beta1;
};

RecurrenceCoeffs recurrence_coeffs(const ClausenParams& p, Natural n);

}  // namespace clausen

#endif  // CLAUSEN_CLAUSEN_POLY_HPP
