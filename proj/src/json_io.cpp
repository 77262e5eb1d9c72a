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


#include "realtypes/json_io.hpp"

#include <cctype>
#include <limits>
#include <string>

#include "realtypes/error.hpp"

namespace realtypes {

namespace {

[[noreturn]] void parse_error(const std::string& detail) {
  throw Error(ErrorCode::kParseError, detail);
}

bool is_integer_text(std::string_view text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t k = start; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view text) {
  if (!is_integer_text(text)) parse_error("not an integer: '" + std::string(text) + "'");
  if (text[0] == '+') text.remove_prefix(1);
  return mpz_class(std::string(text), 10);
}

Sign sign_from_json(const Json& value) {
  if (!value.is_number_integer()) parse_error("sign must be an integer, got " + value.dump());
  return sign_from_int(value.get<long long>());
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const mpz_class num = parse_integer(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (den_text.empty() || den_text[0] == '-' || den_text[0] == '+') {
    parse_error("denominator must be a positive integer: '" + std::string(text) + "'");
  }
  const mpz_class den = parse_integer(den_text);
  if (sgn(den) <= 0) parse_error("denominator must be positive: '" + std::string(text) + "'");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

std::string format_rational(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  return v.get_str();
}

Json rational_to_json(const Rational& value) {
  if (value.get_den() == 1 && value.get_num().fits_slong_p()) {
    return Json(static_cast<long long>(value.get_num().get_si()));
  }
  return Json(format_rational(value));
}

ExactPoly poly_from_json(const Json& value) {
  if (!value.is_array()) parse_error("polynomial must be a coefficient array, got " + value.dump());
  std::vector<Rational> coeffs;
  for (const auto& c : value) {
    if (c.is_number_integer()) {
      coeffs.emplace_back(c.dump());
    } else if (c.is_string()) {
      coeffs.push_back(parse_rational(c.get<std::string>()));
    } else {
      parse_error("coefficient must be an integer or \"p/q\", got " + c.dump());
    }
  }
  return ExactPoly(std::move(coeffs));
}

Json poly_to_json(const ExactPoly& f) {
  Json out = Json::array();
  for (const auto& c : f.coefficients()) out.push_back(rational_to_json(c));
  return out;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    parse_error("malformed JSON '" + std::string(text) + "'");
  }
}

Json real_type_to_json(const RealType& type) {
  Json out = Json::array();
  for (Sign s : type.entries()) out.push_back(to_int(s));
  return out;
}

Json sign_matrix_to_json(const SignMatrix& matrix) {
  Json out = Json::array();
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    Json row = Json::array();
    for (Sign s : matrix.row(i)) row.push_back(to_int(s));
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<Sign> signs_from_json(const Json& value) {
  if (!value.is_array()) parse_error("expected an array of signs, got " + value.dump());
  std::vector<Sign> out;
  for (const auto& s : value) out.push_back(sign_from_json(s));
  return out;
}

std::vector<std::vector<Sign>> sign_rows_from_json(const Json& value) {
  if (!value.is_array()) parse_error("expected an array of rows, got " + value.dump());
  std::vector<std::vector<Sign>> out;
  for (const auto& row : value) out.push_back(signs_from_json(row));
  return out;
}

Json count_report_to_json(const CountReport& report) {
  Json out;
  out["formula"] = std::string(formula_id(report.formula));
  out["params"] = report.params;
  out["value"] = report.value.get_str();
  if (!report.convention.empty()) out["convention"] = report.convention;
  return out;
}

Json degree_witness_to_json(const DegreeWitness& witness) {
  return Json{{"min_degree", witness.min_degree},
              {"parity", witness.parity == Parity::kEven ? "even" : "odd"},
              {"sign_changes", witness.sign_changes}};
}

Json root_record_to_json(const RootRecord& root) {
  Json out;
  if (root.exact()) {
    out["root"] = format_rational(root.lo);
  } else {
    out["interval"] = {format_rational(root.lo), format_rational(root.hi)};
  }
  out["multiplicity"] = root.multiplicity;
  return out;
}

Json verdict_to_json(const Verdict& verdict) {
  Json out;
  out["satisfiable"] = verdict.satisfiable;
  out["matrix"] = sign_matrix_to_json(verdict.matrix);
  if (verdict.witness) {
    const Witness& w = *verdict.witness;
    Json witness;
    witness["column"] = w.column;
    witness["region"] = w.at_root ? "root" : "interval";
    if (w.lo == w.hi) {
      witness["point"] = format_rational(w.lo);
    } else {
      witness["interval"] = {format_rational(w.lo), format_rational(w.hi)};
      witness["defining_factor"] = poly_to_json(w.defining_factor);
    }
    Json signs = Json::array();
    for (Sign s : w.signs) signs.push_back(to_int(s));
    witness["signs"] = std::move(signs);
    out["witness"] = std::move(witness);
  }
  return out;
}

}  // namespace realtypes
