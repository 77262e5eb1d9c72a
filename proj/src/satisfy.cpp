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


#include "realtypes/satisfy.hpp"

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "realtypes/error.hpp"
#include "realtypes/json_io.hpp"

namespace realtypes {

std::string_view relation_symbol(Relation relation) noexcept {
  switch (relation) {
    case Relation::kEqual: return "=";
    case Relation::kNotEqual: return "!=";
    case Relation::kLess: return "<";
    case Relation::kLessEqual: return "<=";
    case Relation::kGreater: return ">";
    case Relation::kGreaterEqual: return ">=";
  }
  return "?";
}

bool satisfies(Sign sign, Relation relation) noexcept {
  switch (relation) {
    case Relation::kEqual: return sign == Sign::kZero;
    case Relation::kNotEqual: return sign != Sign::kZero;
    case Relation::kLess: return sign == Sign::kNegative;
    case Relation::kLessEqual: return sign != Sign::kPositive;
    case Relation::kGreater: return sign == Sign::kPositive;
    case Relation::kGreaterEqual: return sign != Sign::kNegative;
  }
  return false;
}

namespace {

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  return text;
}

}  // namespace

namespace {

Relation relation_from_symbol(std::string_view symbol) {
  static constexpr std::pair<std::string_view, Relation> kRelations[] = {
      {"=", Relation::kEqual},        {"==", Relation::kEqual},
      {"!=", Relation::kNotEqual},    {"<>", Relation::kNotEqual},
      {"<", Relation::kLess},         {"<=", Relation::kLessEqual},
      {">", Relation::kGreater},      {">=", Relation::kGreaterEqual},
  };
  for (const auto& [text, relation] : kRelations) {
    if (symbol == text) return relation;
  }
  throw Error(ErrorCode::kParseError, "unknown relation '" + std::string(symbol) + "'");
}

// {"poly": [c0, c1, ...], "relation": "<="}
Constraint constraint_from_json(const Json& value) {
  if (!value.is_object() || !value.contains("poly") || !value.contains("relation") ||
      !value["relation"].is_string()) {
    throw Error(ErrorCode::kParseError,
                "constraint object needs \"poly\" and \"relation\": " + value.dump());
  }
  return {poly_from_json(value["poly"]),
          relation_from_symbol(value["relation"].get<std::string>())};
}

}  // namespace

Constraint parse_constraint(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '{') return constraint_from_json(parse_json(text));
  const auto close = text.rfind(']');
  if (close == std::string_view::npos) {
    throw Error(ErrorCode::kParseError,
                "constraint must look like '[c0,c1,...] <rel> 0': '" + std::string(text) + "'");
  }
  const ExactPoly poly = poly_from_json(parse_json(text.substr(0, close + 1)));
  std::string_view rest = trim(text.substr(close + 1));
  if (rest.empty() || rest.back() != '0') {
    throw Error(ErrorCode::kParseError, "constraint must end in '<rel> 0': '" + std::string(text) + "'");
  }
  return {poly, relation_from_symbol(trim(rest.substr(0, rest.size() - 1)))};
}

Verdict decide(std::span<const Constraint> system) {
  if (system.empty()) throw Error(ErrorCode::kEmptyFamily, "no constraints given");
  std::vector<ExactPoly> family;
  family.reserve(system.size());
  for (const auto& c : system) family.push_back(c.poly);
  FamilySignLayout layout = family_sign_layout(family);

  const SignMatrix& matrix = layout.matrix;
  for (std::size_t j = 0; j < matrix.columns(); ++j) {
    std::vector<Sign> column = matrix.column(j);
    bool ok = true;
    for (std::size_t i = 0; i < system.size() && ok; ++i) {
      ok = satisfies(column[i], system[i].relation);
    }
    if (!ok) continue;
    Witness w;
    w.column = j + 1;
    w.at_root = j % 2 == 1;
    if (w.at_root) {
      const FamilyRoot& root = layout.roots[j / 2];
      w.lo = root.lo;
      w.hi = root.hi;
      if (!root.exact()) w.defining_factor = root.defining_factor;
    } else {
      w.lo = layout.region_samples[j / 2];
      w.hi = w.lo;
    }
    w.signs = std::move(column);
    return {true, std::move(w), std::move(layout.matrix)};
  }
  return {false, std::nullopt, std::move(layout.matrix)};
}

}  // namespace realtypes
