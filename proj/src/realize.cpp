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


#include "realtypes/realize.hpp"

#include <string>

#include "realtypes/error.hpp"
#include "realtypes/typecheck.hpp"

namespace realtypes {

namespace {

// Builds the witness for one sign row whose zeros sit at even columns
// 2j (1-based), root j placed at x = j.
ExactPoly witness_for_row(std::span<const Sign> row, int degree) {
  ExactPoly f{1};
  int used = 0;
  for (std::size_t k = 1; k < row.size(); k += 2) {
    if (row[k] != Sign::kZero) continue;
    // Nonzero neighbours exist: odd columns never hold a zero.
    const bool changes = row[k - 1] != row[k + 1];
    const int multiplicity = changes ? 1 : 2;
    const long long root = static_cast<long long>((k + 1) / 2);
    f *= pow(ExactPoly{-root, 1}, static_cast<unsigned>(multiplicity));
    used += multiplicity;
  }
  f *= pow(ExactPoly{1, 0, 1}, static_cast<unsigned>((degree - used) / 2));
  if (row.back() == Sign::kNegative) f = -f;
  return f;
}

std::string describe(const DegreeWitness& w) {
  return "minimum degree " + std::to_string(w.min_degree) + ", " +
         (w.parity == Parity::kEven ? "even" : "odd") + " degrees only";
}

}  // namespace

ExactPoly realize_type(const RealType& type, int degree) {
  if (degree < 0 || !is_real_type(type, degree)) {
    throw Error(ErrorCode::kNotRealizable,
                to_string(type) + " at degree " + std::to_string(degree) + " (" +
                    describe(min_realizing_degree(type)) + ")");
  }
  return witness_for_row(type.entries(), degree);
}

std::vector<ExactPoly> realize_family(const SignMatrix& matrix,
                                      std::span<const int> degrees) {
  if (degrees.size() != matrix.rows()) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::to_string(degrees.size()) + " degrees for " +
                    std::to_string(matrix.rows()) + " rows");
  }
  std::vector<ExactPoly> out;
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    const RealType row = condense_row(matrix, i);
    if (degrees[i] < 0 || !is_real_type(row, degrees[i])) {
      throw Error(ErrorCode::kNotRealizable,
                  "row " + std::to_string(i + 1) + " at degree " +
                      std::to_string(degrees[i]) + " (" +
                      describe(min_realizing_degree(row)) + ")");
    }
    out.push_back(witness_for_row(matrix.row(i), degrees[i]));
  }
  return out;
}

}  // namespace realtypes
