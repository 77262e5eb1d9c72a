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


// Integer witness polynomials for real types and sign matrices.
//
// Roots go to the integers 1, ..., m. A root gets multiplicity 1 where the
// sign changes across it and 2 where it does not; the leading coefficient
// takes the sign of the last region, and (x^2 + 1) factors pad the degree.

#ifndef REALTYPES_REALIZE_HPP
#define REALTYPES_REALIZE_HPP

#include <span>
#include <vector>

#include "realtypes/exact_poly.hpp"
#include "realtypes/sign.hpp"

namespace realtypes {

// NotRealizable when `type` is not a real `degree`-type.
ExactPoly realize_type(const RealType& type, int degree);

// f_1, ..., f_n with deg f_i = d_i whose roots are the integers j with
// A_{i,2j} = 0. NotRealizable names the first failing row.
std::vector<ExactPoly> realize_family(const SignMatrix& matrix,
                                      std::span<const int> degrees);

}  // namespace realtypes

#endif  // REALTYPES_REALIZE_HPP
