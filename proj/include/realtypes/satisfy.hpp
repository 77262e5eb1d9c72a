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


// Satisfiability of a conjunction of univariate sign constraints with
// rational coefficients: compute the sign matrix of the polynomials and look
// for a column whose sign vector satisfies every relation.

#ifndef REALTYPES_SATISFY_HPP
#define REALTYPES_SATISFY_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "realtypes/exact_poly.hpp"
#include "realtypes/sign.hpp"

namespace realtypes {

enum class Relation { kEqual, kNotEqual, kLess, kLessEqual, kGreater, kGreaterEqual };

std::string_view relation_symbol(Relation relation) noexcept;
bool satisfies(Sign sign, Relation relation) noexcept;

// poly <relation> 0
struct Constraint {
  ExactPoly poly;
  Relation relation = Relation::kEqual;
};

// Parses "<coefficient array> <rel> 0", e.g. "[1,1] = 0". Relations: =, ==,
// !=, <>, <, <=, >, >=. ParseError on malformed text.
Constraint parse_constraint(std::string_view text);

struct Witness {
  // 1-based column of the family's sign matrix.
  std::size_t column = 0;
  bool at_root = false;
  // Region description: a single rational point when lo == hi, otherwise the
  // isolating interval of an irrational root.
  Rational lo;
  Rational hi;
  // Square-free polynomial pinning down an irrational root; zero otherwise.
  ExactPoly defining_factor;
  std::vector<Sign> signs;
};

struct Verdict {
  bool satisfiable = false;
  std::optional<Witness> witness;
  SignMatrix matrix;
};

// EmptyFamily for an empty system, ZeroPolynomial for a zero constraint.
Verdict decide(std::span<const Constraint> system);

}  // namespace realtypes

#endif  // REALTYPES_SATISFY_HPP
