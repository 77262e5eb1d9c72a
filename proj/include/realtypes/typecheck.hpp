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


// Deciding and enumerating real types.
//
// A real type s with m roots and c sign changes (indices j with
// s_{2j+1} != s_{2j-1}) is realized at degree d exactly when
//
//     d >= 2m - c   and   d = c (mod 2).
//
// Odd multiplicity is forced at a sign change and even multiplicity
// elsewhere, so the cheapest choice is 1 resp. 2; the rootless cofactor has
// even degree, and (x^2 + 1) factors add any even surplus.

#ifndef REALTYPES_TYPECHECK_HPP
#define REALTYPES_TYPECHECK_HPP

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "realtypes/sign.hpp"

namespace realtypes {

enum class Parity { kEven, kOdd };

struct DegreeWitness {
  int min_degree = 0;
  Parity parity = Parity::kEven;
  int sign_changes = 0;

  friend bool operator==(const DegreeWitness&, const DegreeWitness&) = default;
};

DegreeWitness min_realizing_degree(const RealType& type);

bool is_real_type(const RealType& type, int degree);

// All real d-types with m roots, lexicographic over the odd positions with
// -1 < 1.
std::vector<RealType> enumerate_real_types(int degree, int roots);

// DimensionMismatch when the degree list does not have one entry per row.
bool is_family_type(const SignMatrix& matrix, std::span<const int> degrees);

struct SearchOptions {
  // Largest n * (2m + 1) accepted by the exhaustive searches.
  std::size_t cell_budget = 24;
  // Worker threads; the output order does not depend on this.
  unsigned jobs = 1;
};

// Visits every sign matrix of shape n x (2m+1) that is a real
// (d_1, ..., d_n)-type, in lexicographic row-major order.
// BudgetExceeded beyond the cell budget, EmptyFamily for no degrees.
void for_each_family_type(std::span<const int> degrees, int roots,
                          const std::function<void(const SignMatrix&)>& visit,
                          const SearchOptions& options = {});

std::vector<SignMatrix> enumerate_family_types(std::span<const int> degrees,
                                               int roots,
                                               const SearchOptions& options = {});

// Scans all of Sigma^{n x (2m+1)} and counts the matrices that pass the
// structural sign-matrix checks.
mpz_class oracle_count_any_degree(int family_size, int roots,
                                  const SearchOptions& options = {});

}  // namespace realtypes

#endif  // REALTYPES_TYPECHECK_HPP
