// Copyright 2026 The realtypes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Exact counts of real types.
//
//   R_d^(m)          real d-types with exactly m distinct roots
//   R_d, Rhat_d      real d-types, and real types up to degree d
//   R_{d1..dn}^(m)   sign matrices of families with degrees d1..dn
//   R_{d1..dn}       the same summed over m; Rhat for degrees up to d_i
//   S_n^(m)          sign matrices for n polynomials of arbitrary degree
//   Rbar, Rbarbar    upper bounds on the sign matrices a parametric
//                    case distinction can produce (leading coefficients
//                    vanishing, then whole polynomials vanishing)
//
// Every value is an arbitrary-precision integer.

#ifndef REALTYPES_COUNTING_HPP
#define REALTYPES_COUNTING_HPP

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace realtypes {

using BigInt = mpz_class;
using Rational = mpq_class;

enum class Formula {
  kRdm,
  kRd,
  kRdHat,
  kRFamM,
  kRFam,
  kRFamHat,
  kSnm,
  kBar,
  kBarBar,
  kFib,
};

std::string_view formula_id(Formula formula) noexcept;

// C(n, k), zero for k < 0 or k > n. Requires n >= 0.
BigInt binomial(long long n, long long k);

// F_1 = F_2 = 1. DomainError for n <= 0.
BigInt fib(long long n);

BigInt count_exact_degree_roots(int degree, int roots);

// Closed form 2 F_{d+2} (d even) or 2 F_{d+2} - 2 (d odd).
BigInt count_exact_degree(int degree);
// The same number as the explicit double sum over m and j.
BigInt count_exact_degree_by_sum(int degree);

// 2 F_{d+3} - 2.
BigInt count_up_to_degree(int degree);

// Inclusion-exclusion over the even columns that are forced to contain a
// zero. EmptyFamily for an empty degree list.
BigInt count_family_roots(std::span<const int> degrees, int roots);
BigInt count_family(std::span<const int> degrees);
// Sum over delta in {0,1}^n of count_family(d - delta); every d_i >= 1.
BigInt count_family_up_to(std::span<const int> degrees);

// 2^n (3^n - 1)^m.
BigInt count_any_degree(int family_size, int roots);

// Sum of count_family(e) over 0 <= e_i <= d_i.
BigInt count_bar(std::span<const int> degrees);

// Sum of count_bar(e) over every sublist e of the degree list, i.e. every
// order-preserving subset of indices including the full list. The empty
// sublist stands for the family in which every polynomial vanishes; its sign
// matrix is unique, so it contributes exactly 1.
BigInt count_bar_bar(std::span<const int> degrees);

inline constexpr std::string_view kBarBarConvention =
    "sum of Rbar over all 2^n index subsets, full list included; "
    "empty sublist contributes 1";

struct CountQuery {
  Formula formula = Formula::kRd;
  std::vector<int> degrees;
  std::optional<int> roots;
  std::optional<int> family_size;
};

struct CountReport {
  Formula formula = Formula::kRd;
  std::vector<long long> params;
  BigInt value;
  // Non-empty only where the formula depends on a convention.
  std::string convention;
};

// Dispatches a query to the matching count_* function. DomainError when a
// parameter the formula needs is missing.
CountReport run_count(const CountQuery& query);

struct GoldenRatioGap {
  int degree = 0;
  BigInt numerator_count;    // R_{d+1}
  BigInt denominator_count;  // R_d
  Rational golden_ratio;     // rational approximation of (1 + sqrt 5) / 2
  Rational gap;              // |R_{d+1} / R_d - phi|
  std::string gap_decimal;   // 15 significant digits, scientific notation
};

// (1 + sqrt 5) / 2 with absolute error below 10^-digits.
Rational golden_ratio_approximation(int digits);

// DomainError for d < 2. Uses a 100-digit approximation of phi.
GoldenRatioGap golden_ratio_gap(int degree);

// Scientific notation with the given number of significant digits.
std::string to_scientific(const Rational& value, int significant_digits);

}  // namespace realtypes

#endif  // REALTYPES_COUNTING_HPP
