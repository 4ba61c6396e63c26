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

#ifndef CLAUSEN_VERIFY_HPP
#define CLAUSEN_VERIFY_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "clausen/clausen_poly.hpp"
#include "clausen/rational.hpp"
#include "clausen/series.hpp"

namespace clausen {

enum class VerifyStatus { Verified, Deviation, Degenerate, Refused };

std::string_view to_string(VerifyStatus s);

/// Witness of the first index where the two compared sides differ. Exact
/// identities fail atomically, so one witness suffices.
struct FirstDeviation {
  Natural index = 0;
  Rational lhs;
  Rational rhs;
};

/// One compared pair, exposed so callers (the CSV writer) can list every
/// index without re-deriving the identity.
struct ComparedPair {
  Natural index = 0;
  Rational lhs;
  Rational rhs;
};
using ComparisonTrace = std::vector<ComparedPair>;

/// Structured outcome of an identity check. Verified means every compared
/// quantity was exactly equal; no tolerances exist anywhere. first_deviation
/// is present iff status == Deviation.
struct VerifyReport {
  std::string identity;
  std::vector<std::pair<std::string, std::string>> params;
  Natural terms_checked = 0;
  VerifyStatus status = VerifyStatus::Verified;
  std::optional<FirstDeviation> first_deviation;
  std::string note;

  bool ok() const { return status == VerifyStatus::Verified; }
};

/// Square identity: the Cauchy square of 2F1(a,b; a+b+m+1/2) against the
/// 3F2(2a,2b,a+b; a+b+m+1/2, 2a+2b+2m) series perturbed by P_2m, compared
/// coefficient-by-coefficient for k = 0..terms.
VerifyReport verify_square(const ClausenParams& p, Natural terms, ComparisonTrace* trace = nullptr);

/// Perturbed product identity: 2F1 * F(a,b; a+b+m+1/2 | F_s) against the
/// 3F2 series perturbed by hatP_{2m+s}. Refused when deg F_s > 2m+1 (no
/// identity exists there; see verify_beyond_bound_deviation).
VerifyReport verify_product(const ClausenParams& p, const PerturbationInput& f, Natural terms,
                            ComparisonTrace* trace = nullptr);

/// The three terminating summation formulas, each checked for k = 0..k_max:
///  (i)   4F3(-k,a,b,1/2-k-a-b-m; 1-k-a,1-k-b,a+b+m+1/2) = node_ratio(k) P_2m(k)
///  (ii)  the same sum perturbed by F_s                  = node_ratio(k) hatP(k)
///  (iii) 4F3 with top a+1 in place of a                 = (2a+1)_k/(2a)_k * node_ratio(k) P_2m(k)
VerifyReport verify_summations(const ClausenParams& p, const PerturbationInput& f, Natural k_max,
                               ComparisonTrace* trace = nullptr);

/// Whipple's transformation of a very well-poised terminating 7F6 into a
/// 1-balanced terminating 4F3, both sides summed exactly at unity.
VerifyReport verify_whipple(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                            const Rational& e, Natural n, ComparisonTrace* trace = nullptr);

/// Karlsson's expansion for integral parameter differences: the series with
/// top (base_top, f+mvec) and bottom (base_bottom, f) against the finite
/// multi-sum of A(j) x^|j| times parameter-shifted series, to order terms.
VerifyReport verify_karlsson(const std::vector<Rational>& base_top, const std::vector<Rational>& base_bottom,
                             const std::vector<Rational>& f, const std::vector<Natural>& mvec, Natural terms,
                             ComparisonTrace* trace = nullptr);

/// Operator expansion f (x d/dx)^n f = 1/2 sum_k S(n,k) x^k
/// sum_j (-1)^j k/(k-j) C(k-j,j) d^{k-2j}[f^(j)]^2, compared on the full
/// window of fcoeffs. Pre: n >= 1 and fcoeffs.size() >= n+2.
VerifyReport verify_operator_lemma(const TruncatedSeries& fcoeffs, Natural n, ComparisonTrace* trace = nullptr);

/// Three-term recurrence P_2m(n+1) = beta0(n) P_2m(n) + beta1(n) P_2m(n-1)
/// for n = 1..n_max.
VerifyReport verify_recurrence(const ClausenParams& p, Natural n_max, ComparisonTrace* trace = nullptr);

/// H_{l,k} == delta_{l,0} + delta_{l,k}, exhaustively for 1 <= k <= k_max.
VerifyReport verify_orthogonality(Natural k_max);

/// Both construction routes agree: char_poly == char_poly_via_interpolation
/// and (within the degree bound) hat_poly_direct == hat_poly_interp.
VerifyReport verify_dual_routes(const ClausenParams& p, const PerturbationInput& f);

/// m=1 closed form: 2(a+b)(2a+1)(2b+1) P_2(t) == t^2 + (4a+4b+1+8ab) t
/// + 2(a+b)(2a+1)(2b+1).
VerifyReport verify_quadratic_closed_form(const Rational& a, const Rational& b);

/// m=2 closed form: 64 (a+1/2)_2 (b+1/2)_2 (a+b)_2 P_4(t) against the known
/// quartic expansion.
VerifyReport verify_quartic_closed_form(const Rational& a, const Rational& b);

/// For deg F_s = 2m+2, one past the bound: the interpolated hatP substituted
/// into the product identity must reproduce coefficients 0..2m+s and then
/// deviate. Verified iff the first deviation falls strictly beyond 2m+s.
VerifyReport verify_beyond_bound_deviation(const ClausenParams& p, const PerturbationInput& f,
                                           Natural extra_terms = 10);

/// s=1 pair product: 2F1(a,b;c) * 3F2(a,b,f+1; c,f) equals the P_2m-perturbed
/// series carrying the extra parameter pair (2f+1; 2f); equivalently
/// hatP_{2m+1} == P_2m(t) (t+2f) / (2f). Both facets are checked.
VerifyReport verify_linear_pair_product(const ClausenParams& p, const Rational& f, Natural terms);

/// Orr-type product (the f = a specialization):
/// 2F1(a,b;c) * 2F1(a+1,b;c) == F(2a+1, 2b, a+b; c, 2a+2b+2m | P_2m).
VerifyReport verify_orr_type_product(const ClausenParams& p, Natural terms);

/// s=2 pair closed form (m >= 1): hatP_{2m+2} for the (f+2; f) pair equals
///   (1 + (2f+1)t/(2f(f+1)) + t^2/(2f(f+1))) P_2m(t)
///   - ab(a+b+m)(a+b+m-1/2+t) t(t-1)
///     / (f(f+1)(2a+1)(2b+1)(a+b)_2) * P_{2m-2}^{a+1,b+1}(t-2).
VerifyReport verify_quadratic_pair_closed_form(const ClausenParams& p, const Rational& f);

}  // namespace clausen

#endif  // CLAUSEN_VERIFY_HPP
