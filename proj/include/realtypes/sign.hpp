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


// Signs, real types of single polynomials, and sign matrices of families.
//
// A real type lists the signs of a nonzero polynomial on the 2m+1 regions cut
// out of the real line by its m distinct real roots, from -infinity to
// +infinity. A sign matrix does the same for a family, with one row per
// polynomial and the columns running over the union of all roots.
//
// Positions in error messages are 1-based, matching s_1 ... s_{2m+1}.

#ifndef REALTYPES_SIGN_HPP
#define REALTYPES_SIGN_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "realtypes/error.hpp"

namespace realtypes {

enum class Sign : std::int8_t { kNegative = -1, kZero = 0, kPositive = 1 };

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }

// Throws Error(kInvalidSign) for values outside {-1, 0, 1}.
Sign sign_from_int(long long value);

constexpr Sign negate(Sign s) noexcept {
  return static_cast<Sign>(-static_cast<int>(s));
}

constexpr Sign multiply(Sign a, Sign b) noexcept {
  return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}

std::vector<Sign> signs_from_ints(std::span<const int> values);
std::vector<int> signs_to_ints(std::span<const Sign> signs);

// Odd-length sign sequence with zeros exactly at the even (1-based)
// positions. Immutable once constructed.
class RealType {
 public:
  // Throws Error(kInvalidShape) for even or empty input and
  // Error(kMisplacedZero) when the zero pattern is wrong.
  static RealType validate(std::span<const Sign> entries);
  static RealType validate(std::initializer_list<int> entries);

  std::span<const Sign> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  // Number of distinct real roots of any realizing polynomial.
  std::size_t roots() const noexcept { return (entries_.size() - 1) / 2; }
  Sign operator[](std::size_t index) const { return entries_[index]; }
  Sign first() const noexcept { return entries_.front(); }
  Sign last() const noexcept { return entries_.back(); }

  RealType negated() const;

  friend bool operator==(const RealType&, const RealType&) = default;
  friend auto operator<=>(const RealType&, const RealType&) = default;

 private:
  explicit RealType(std::vector<Sign> entries) : entries_(std::move(entries)) {}

  std::vector<Sign> entries_;
};

RealType validate_real_type(std::span<const Sign> entries);
RealType validate_real_type(std::span<const int> entries);

// n x (2m+1) sign matrix satisfying:
//   * odd columns contain no zero,
//   * even columns contain at least one zero,
//   * inside every row, the nonzero entries between two consecutive zeros of
//     that row (and on the two outer segments) are all equal.
class SignMatrix {
 public:
  // Errors: kInvalidShape (empty, ragged, even width), kZeroInOddColumn,
  // kEvenColumnWithoutZero, kSignChangeWithoutRoot.
  static SignMatrix validate(std::vector<std::vector<Sign>> rows);
  static SignMatrix validate(
      std::initializer_list<std::initializer_list<int>> rows);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t columns() const noexcept { return rows_.front().size(); }
  std::size_t roots() const noexcept { return (columns() - 1) / 2; }

  std::span<const Sign> row(std::size_t i) const { return rows_.at(i); }
  Sign at(std::size_t i, std::size_t j) const { return rows_.at(i).at(j); }
  std::vector<Sign> column(std::size_t j) const;

  const std::vector<std::vector<Sign>>& data() const noexcept { return rows_; }

  friend bool operator==(const SignMatrix&, const SignMatrix&) = default;
  friend auto operator<=>(const SignMatrix&, const SignMatrix&) = default;

 private:
  explicit SignMatrix(std::vector<std::vector<Sign>> rows)
      : rows_(std::move(rows)) {}

  std::vector<std::vector<Sign>> rows_;
};

// First violated sign-matrix condition, checked in the order shape, odd
// columns, even columns, row runs. Positions are 0-based.
struct MatrixViolation {
  ErrorCode code;
  std::size_t row = 0;
  std::size_t column = 0;
};

std::optional<MatrixViolation> find_sign_matrix_violation(
    const std::vector<std::vector<Sign>>& rows);

SignMatrix validate_sign_matrix(std::vector<std::vector<Sign>> rows);
SignMatrix validate_sign_matrix(const std::vector<std::vector<int>>& rows);

// The real type of row i: every maximal run of equal nonzero entries is
// collapsed to one entry.
RealType condense_row(const SignMatrix& matrix, std::size_t i);

// The matrix with a single row equal to the given real type.
SignMatrix as_matrix(const RealType& type);

std::string to_string(const RealType& type);
std::string to_string(const SignMatrix& matrix);

}  // namespace realtypes

#endif  // REALTYPES_SIGN_HPP
