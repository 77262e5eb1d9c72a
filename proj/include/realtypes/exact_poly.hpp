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


// Exact univariate polynomials over Q and the computation of real types.
//
// Root isolation runs Sturm-sequence bisection on square-free parts, so every
// decision made here is exact; there is no floating point on any path that
// produces a sign.

#ifndef REALTYPES_EXACT_POLY_HPP
#define REALTYPES_EXACT_POLY_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "realtypes/sign.hpp"

namespace realtypes {

using Rational = mpq_class;

// Dense polynomial with ascending coefficients. The empty coefficient list is
// the zero polynomial; otherwise the last coefficient is nonzero.
class ExactPoly {
 public:
  ExactPoly() = default;
  explicit ExactPoly(std::vector<Rational> coefficients);
  ExactPoly(std::initializer_list<long long> coefficients);

  static ExactPoly constant(const Rational& value);
  // value * x^power
  static ExactPoly monomial(const Rational& value, std::size_t power);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  // Requires a nonzero polynomial.
  const Rational& leading() const { return coeffs_.back(); }
  bool has_integer_coefficients() const;

  Rational operator()(const Rational& x) const;
  ExactPoly derivative() const;
  ExactPoly operator-() const;

  ExactPoly& operator+=(const ExactPoly& other);
  ExactPoly& operator-=(const ExactPoly& other);
  ExactPoly& operator*=(const ExactPoly& other);
  ExactPoly& operator*=(const Rational& scalar);

  friend ExactPoly operator+(ExactPoly a, const ExactPoly& b) { return a += b; }
  friend ExactPoly operator-(ExactPoly a, const ExactPoly& b) { return a -= b; }
  friend ExactPoly operator*(ExactPoly a, const ExactPoly& b) { return a *= b; }
  friend ExactPoly operator*(ExactPoly a, const Rational& s) { return a *= s; }
  friend ExactPoly operator*(const Rational& s, ExactPoly a) { return a *= s; }

  friend bool operator==(const ExactPoly& a, const ExactPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

struct DivisionResult {
  ExactPoly quotient;
  ExactPoly remainder;
};

// Exact division over Q. ZeroPolynomial when the divisor is zero.
DivisionResult divide(const ExactPoly& dividend, const ExactPoly& divisor);

ExactPoly pow(const ExactPoly& base, unsigned exponent);

// Positive rational multiple of f with coprime integer coefficients.
ExactPoly normalize_positive(const ExactPoly& f);
// Integer coefficients, content 1, positive leading coefficient.
ExactPoly primitive_part(const ExactPoly& f);

// Primitive gcd with positive leading coefficient; zero iff both are zero.
ExactPoly gcd(const ExactPoly& a, const ExactPoly& b);

struct SquarefreeFactor {
  ExactPoly factor;
  int multiplicity = 0;
};

// f = lc * prod factor_i^multiplicity_i with primitive, square-free, pairwise
// coprime factors of positive degree, sorted by multiplicity. A nonzero
// constant yields an empty list.
std::vector<SquarefreeFactor> squarefree_decomposition(const ExactPoly& f);

// Primitive square-free part (product of the decomposition's factors).
ExactPoly squarefree_part(const ExactPoly& f);

// f, f', then negated remainders, each rescaled by a positive constant.
std::vector<ExactPoly> sturm_sequence(const ExactPoly& f);

// Distinct real roots of the square-free f in the open interval (lo, hi).
// Errors: ZeroPolynomial, DomainError (lo >= hi), EndpointIsRoot,
// NotSquarefree.
int sturm_root_count(const ExactPoly& f, const Rational& lo,
                     const Rational& hi);

// One distinct real root. lo == hi for a root found exactly; otherwise the
// root lies in the open interval (lo, hi) and is the only root there.
struct RootRecord {
  Rational lo;
  Rational hi;
  int multiplicity = 1;

  bool exact() const { return lo == hi; }
};

// Sorted isolating intervals with strictly positive gaps between
// consecutive records. ZeroPolynomial for f = 0.
std::vector<RootRecord> isolate_real_roots(const ExactPoly& f);

// Cauchy bound 1 + max |c_i| / |lc|; every real root is strictly inside.
Rational cauchy_bound(const ExactPoly& f);

Sign sign_of(const Rational& value) noexcept;
Sign sign_at(const ExactPoly& f, const Rational& x);

// ZeroPolynomial for f = 0.
RealType real_type_of(const ExactPoly& f);

// Where the roots of a family are, and how each sign region was sampled.
struct FamilyRoot {
  Rational lo;
  Rational hi;
  // Square-free polynomial whose only root in [lo, hi] is this one.
  ExactPoly defining_factor;

  bool exact() const { return lo == hi; }
};

struct FamilySignLayout {
  SignMatrix matrix;
  std::vector<FamilyRoot> roots;         // m entries, increasing
  std::vector<Rational> region_samples;  // m + 1 points strictly between roots
};

// ZeroPolynomial (with the 1-based index) when a member is zero, EmptyFamily
// when the list is empty.
FamilySignLayout family_sign_layout(std::span<const ExactPoly> family);
SignMatrix family_real_type(std::span<const ExactPoly> family);

// Human-readable form, e.g. "x^4 - 4*x^2".
std::string to_string(const ExactPoly& f);

// Simplest rational (least denominator, then least magnitude) in the open
// interval (lo, hi). Requires lo < hi.
Rational simplest_rational_between(const Rational& lo, const Rational& hi);

}  // namespace realtypes

#endif  // REALTYPES_EXACT_POLY_HPP
