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


#include "realtypes/sign.hpp"

#include <string>
#include <utility>

#include "realtypes/error.hpp"

namespace realtypes {

Sign sign_from_int(long long value) {
  if (value < -1 || value > 1) {
    throw Error(ErrorCode::kInvalidSign,
                "sign value " + std::to_string(value) + " not in {-1, 0, 1}");
  }
  return static_cast<Sign>(value);
}

std::vector<Sign> signs_from_ints(std::span<const int> values) {
  std::vector<Sign> out;
  out.reserve(values.size());
  for (int v : values) out.push_back(sign_from_int(v));
  return out;
}

std::vector<int> signs_to_ints(std::span<const Sign> signs) {
  std::vector<int> out;
  out.reserve(signs.size());
  for (Sign s : signs) out.push_back(to_int(s));
  return out;
}

RealType RealType::validate(std::span<const Sign> entries) {
  if (entries.size() % 2 == 0) {
    throw Error(ErrorCode::kInvalidShape,
                "real type has even length " + std::to_string(entries.size()));
  }
  for (std::size_t k = 0; k < entries.size(); ++k) {
    // k is 0-based, so odd k is an even 1-based position.
    const bool root_position = k % 2 == 1;
    if (root_position != (entries[k] == Sign::kZero)) {
      throw Error(ErrorCode::kMisplacedZero,
                  std::string(root_position ? "nonzero" : "zero") +
                      " entry at position " + std::to_string(k + 1));
    }
  }
  return RealType(std::vector<Sign>(entries.begin(), entries.end()));
}

RealType RealType::validate(std::initializer_list<int> entries) {
  const std::vector<int> values(entries);
  return validate(signs_from_ints(values));
}

RealType RealType::negated() const {
  std::vector<Sign> out(entries_);
  for (Sign& s : out) s = negate(s);
  return RealType(std::move(out));
}

RealType validate_real_type(std::span<const Sign> entries) {
  return RealType::validate(entries);
}

RealType validate_real_type(std::span<const int> entries) {
  return RealType::validate(signs_from_ints(entries));
}

namespace {

std::string cell(std::size_t i, std::size_t j) {
  return "row " + std::to_string(i + 1) + ", column " + std::to_string(j + 1);
}

}  // namespace

std::optional<MatrixViolation> find_sign_matrix_violation(
    const std::vector<std::vector<Sign>>& rows) {
  if (rows.empty()) return MatrixViolation{ErrorCode::kInvalidShape};
  const std::size_t width = rows.front().size();
  if (width % 2 == 0) return MatrixViolation{ErrorCode::kInvalidShape, 0, width};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != width) {
      return MatrixViolation{ErrorCode::kInvalidShape, i, rows[i].size()};
    }
  }
  for (std::size_t j = 0; j < width; j += 2) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i][j] == Sign::kZero) {
        return MatrixViolation{ErrorCode::kZeroInOddColumn, i, j};
      }
    }
  }
  for (std::size_t j = 1; j < width; j += 2) {
    bool has_zero = false;
    for (const auto& row : rows) has_zero = has_zero || row[j] == Sign::kZero;
    if (!has_zero) return MatrixViolation{ErrorCode::kEvenColumnWithoutZero, 0, j};
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Sign run = Sign::kZero;
    for (std::size_t j = 0; j < width; ++j) {
      const Sign s = rows[i][j];
      if (s == Sign::kZero) {
        run = Sign::kZero;
      } else if (run == Sign::kZero) {
        run = s;
      } else if (s != run) {
        return MatrixViolation{ErrorCode::kSignChangeWithoutRoot, i, j};
      }
    }
  }
  return std::nullopt;
}

SignMatrix SignMatrix::validate(std::vector<std::vector<Sign>> rows) {
  const auto violation = find_sign_matrix_violation(rows);
  if (!violation) return SignMatrix(std::move(rows));
  const auto [code, i, j] = *violation;
  switch (code) {
    case ErrorCode::kInvalidShape:
      if (rows.empty()) throw Error(code, "matrix has no rows");
      if (i == 0 && j == rows.front().size()) {
        throw Error(code, "matrix has even width " + std::to_string(j));
      }
      throw Error(code, "row " + std::to_string(i + 1) + " has length " +
                            std::to_string(j) + ", expected " +
                            std::to_string(rows.front().size()));
    case ErrorCode::kZeroInOddColumn:
      throw Error(code, "zero at " + cell(i, j));
    case ErrorCode::kEvenColumnWithoutZero:
      throw Error(code, "column " + std::to_string(j + 1) + " has no zero");
    default:
      throw Error(code, "sign changes without a zero at " + cell(i, j));
  }
}

SignMatrix SignMatrix::validate(
    std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<std::vector<Sign>> converted;
  for (const auto& row : rows) {
    const std::vector<int> values(row);
    converted.push_back(signs_from_ints(values));
  }
  return validate(std::move(converted));
}

std::vector<Sign> SignMatrix::column(std::size_t j) const {
  std::vector<Sign> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) out.push_back(row.at(j));
  return out;
}

SignMatrix validate_sign_matrix(std::vector<std::vector<Sign>> rows) {
  return SignMatrix::validate(std::move(rows));
}

SignMatrix validate_sign_matrix(const std::vector<std::vector<int>>& rows) {
  std::vector<std::vector<Sign>> converted;
  converted.reserve(rows.size());
  for (const auto& row : rows) converted.push_back(signs_from_ints(row));
  return SignMatrix::validate(std::move(converted));
}

RealType condense_row(const SignMatrix& matrix, std::size_t i) {
  if (i >= matrix.rows()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "row index " + std::to_string(i + 1) + " out of range");
  }
  std::vector<Sign> out;
  for (Sign s : matrix.row(i)) {
    if (s == Sign::kZero || out.empty() || out.back() == Sign::kZero) {
      out.push_back(s);
    }
  }
  return RealType::validate(out);
}

SignMatrix as_matrix(const RealType& type) {
  const auto e = type.entries();
  return SignMatrix::validate({std::vector<Sign>(e.begin(), e.end())});
}

std::string to_string(const RealType& type) {
  std::string out = "[";
  for (std::size_t k = 0; k < type.size(); ++k) {
    if (k) out += ", ";
    out += std::to_string(to_int(type[k]));
  }
  return out + "]";
}

std::string to_string(const SignMatrix& matrix) {
  std::string out = "[";
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    if (i) out += ", ";
    out += "[";
    for (std::size_t j = 0; j < matrix.columns(); ++j) {
      if (j) out += ", ";
      out += std::to_string(to_int(matrix.at(i, j)));
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace realtypes
