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


// JSON encodings shared by the command-line tool:
//   sign            -1 | 0 | 1
//   real type       [1, 0, -1]
//   sign matrix     [[-1, 0, 1], [1, 0, 1]]
//   polynomial      ascending coefficients, each an integer or "p/q"
//   counts          decimal strings, never floating point

#ifndef REALTYPES_JSON_IO_HPP
#define REALTYPES_JSON_IO_HPP

#include <json.hpp>

#include <string>
#include <string_view>

#include "realtypes/counting.hpp"
#include "realtypes/exact_poly.hpp"
#include "realtypes/satisfy.hpp"
#include "realtypes/sign.hpp"
#include "realtypes/typecheck.hpp"

namespace realtypes {

using Json = nlohmann::json;

// Accepts "p", "-p", "p/q" with q > 0. ParseError otherwise.
Rational parse_rational(std::string_view text);
// "p" for integers, "p/q" in lowest terms otherwise.
std::string format_rational(const Rational& value);

Json rational_to_json(const Rational& value);
ExactPoly poly_from_json(const Json& value);
// Integers that fit in 64 bits are JSON numbers, everything else a string.
Json poly_to_json(const ExactPoly& f);

// Parses text first, then decodes; ParseError on malformed input.
Json parse_json(std::string_view text);

Json real_type_to_json(const RealType& type);
Json sign_matrix_to_json(const SignMatrix& matrix);
std::vector<Sign> signs_from_json(const Json& value);
std::vector<std::vector<Sign>> sign_rows_from_json(const Json& value);

Json count_report_to_json(const CountReport& report);
Json degree_witness_to_json(const DegreeWitness& witness);
Json root_record_to_json(const RootRecord& root);
Json verdict_to_json(const Verdict& verdict);

}  // namespace realtypes

#endif  // REALTYPES_JSON_IO_HPP
