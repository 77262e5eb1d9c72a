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


// realtypes: count, decide, enumerate and realize real types of polynomials.
//
// Output is JSON unless --plain is given. Exit status is 0 on success or a
// true verdict, 1 on a negative verdict and 2 on a usage or input error.

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "realtypes/counting.hpp"
#include "realtypes/error.hpp"
#include "realtypes/exact_poly.hpp"
#include "realtypes/json_io.hpp"
#include "realtypes/realize.hpp"
#include "realtypes/satisfy.hpp"
#include "realtypes/typecheck.hpp"

namespace realtypes {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

struct Context {
  bool quiet = false;
  bool plain = false;

  void emit(const std::string& line) const {
    if (!quiet) std::cout << line << '\n';
  }
  void emit(const Json& json, const std::string& plain_text) const {
    emit(plain ? plain_text : json.dump());
  }
};

[[noreturn]] void usage(const std::string& message) {
  throw Error(ErrorCode::kParseError, message);
}

ExactPoly poly_arg(const std::string& text) { return poly_from_json(parse_json(text)); }

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& line : lines) {
    if (!out.empty()) out += '\n';
    out += line;
  }
  return out;
}

// A JSON array of arrays is a matrix; a flat array is a single sequence.
bool is_matrix_json(const Json& value) {
  return value.is_array() && !value.empty() && value.front().is_array();
}

struct CountArgs {
  std::string formula;
  std::vector<int> degrees;
  std::optional<int> roots;
  std::optional<int> n;
};

Formula formula_from_flag(const std::string& flag) {
  static const std::map<std::string, Formula> kFlags = {
      {"rdm", Formula::kRdm},         {"rd", Formula::kRd},
      {"rdhat", Formula::kRdHat},     {"fam", Formula::kRFamM},
      {"fam-total", Formula::kRFam},  {"fam-upto", Formula::kRFamHat},
      {"any", Formula::kSnm},         {"bar", Formula::kBar},
      {"barbar", Formula::kBarBar},   {"fib", Formula::kFib},
  };
  return kFlags.at(flag);
}

int run_count_command(const Context& ctx, const CountArgs& args) {
  CountQuery query;
  query.formula = formula_from_flag(args.formula);
  query.degrees = args.degrees;
  query.roots = args.roots;
  query.family_size = args.n;
  const CountReport report = run_count(query);
  ctx.emit(count_report_to_json(report), report.value.get_str());
  return kExitOk;
}

int run_table(const Context& ctx, int max_d, bool check) {
  if (max_d < 0) usage("--max-d must be nonnegative");
  Json rows = Json::array();
  std::vector<std::string> lines;
  bool all_ok = true;
  for (int d = 0; d <= max_d; ++d) {
    const BigInt value = count_exact_degree(d);
    Json row = {{"d", d}, {"value", value.get_str()}};
    std::string line = std::to_string(d) + " → " + value.get_str();
    if (check) {
      const BigInt sum = count_exact_degree_by_sum(d);
      const bool ok = sum == value;
      all_ok = all_ok && ok;
      row["sum"] = sum.get_str();
      row["ok"] = ok;
      line += ok ? "  ok" : "  MISMATCH sum " + sum.get_str();
    }
    rows.push_back(std::move(row));
    lines.push_back(std::move(line));
  }
  Json out = {{"rows", std::move(rows)}};
  if (check) out["check"] = all_ok;
  ctx.emit(out, join_lines(lines));
  return all_ok ? kExitOk : kExitNegative;
}

int run_check(const Context& ctx, const std::string& input, const std::vector<int>& degrees) {
  const Json value = parse_json(input);
  if (is_matrix_json(value)) {
    const SignMatrix matrix = validate_sign_matrix(sign_rows_from_json(value));
    if (degrees.empty()) usage("check of a matrix needs --degrees");
    const bool ok = is_family_type(matrix, degrees);
    ctx.emit(Json{{"realizable", ok}}, ok ? "true" : "false");
    return ok ? kExitOk : kExitNegative;
  }
  const RealType type = validate_real_type(signs_from_json(value));
  const DegreeWitness witness = min_realizing_degree(type);
  Json out = degree_witness_to_json(witness);
  if (degrees.empty()) {
    ctx.emit(out, std::to_string(witness.min_degree));
    return kExitOk;
  }
  if (degrees.size() != 1) usage("check of a sequence takes a single degree");
  const bool ok = is_real_type(type, degrees.front());
  out["realizable"] = ok;
  ctx.emit(out, ok ? "true" : "false");
  return ok ? kExitOk : kExitNegative;
}

int run_realize(const Context& ctx, const std::string& input, std::vector<int> degrees) {
  const Json value = parse_json(input);
  if (degrees.empty()) usage("realize needs --degree or --degrees");
  if (is_matrix_json(value)) {
    const SignMatrix matrix = validate_sign_matrix(sign_rows_from_json(value));
    const auto family = realize_family(matrix, degrees);
    Json out = Json::array();
    std::vector<std::string> lines;
    for (const auto& f : family) {
      out.push_back(poly_to_json(f));
      lines.push_back(to_string(f));
    }
    ctx.emit(out, join_lines(lines));
    return kExitOk;
  }
  if (degrees.size() != 1) usage("realize of a sequence takes a single degree");
  const RealType type = validate_real_type(signs_from_json(value));
  const ExactPoly f = realize_type(type, degrees.front());
  ctx.emit(poly_to_json(f), to_string(f));
  return kExitOk;
}

int run_type(const Context& ctx, const std::string& coefficients) {
  const RealType type = real_type_of(poly_arg(coefficients));
  ctx.emit(real_type_to_json(type), to_string(type));
  return kExitOk;
}

int run_signmatrix(const Context& ctx, const std::vector<std::string>& inputs) {
  std::vector<ExactPoly> family;
  for (const auto& text : inputs) family.push_back(poly_arg(text));
  const SignMatrix matrix = family_real_type(family);
  ctx.emit(sign_matrix_to_json(matrix), to_string(matrix));
  return kExitOk;
}

std::string describe_witness(const Witness& w) {
  std::string where;
  if (w.lo == w.hi) {
    where = "x = " + format_rational(w.lo);
  } else {
    where = "root of " + to_string(w.defining_factor) + " in (" + format_rational(w.lo) +
            ", " + format_rational(w.hi) + ")";
  }
  return "satisfiable at column " + std::to_string(w.column) + ", " + where;
}

int run_satisfy(const Context& ctx, const std::vector<std::string>& inputs) {
  std::vector<Constraint> system;
  for (const auto& text : inputs) system.push_back(parse_constraint(text));
  const Verdict verdict = decide(system);
  ctx.emit(verdict_to_json(verdict),
           verdict.witness ? describe_witness(*verdict.witness) : "unsatisfiable");
  return verdict.satisfiable ? kExitOk : kExitNegative;
}

struct EnumerateArgs {
  std::vector<int> degrees;
  std::optional<int> roots;
  bool family = false;
  std::size_t budget = SearchOptions{}.cell_budget;
  unsigned jobs = 1;
};

int run_enumerate(const Context& ctx, const EnumerateArgs& args) {
  if (args.degrees.empty()) usage("enumerate needs --degrees");
  for (int d : args.degrees) {
    if (d < 0) usage("degrees must be nonnegative");
  }
  SearchOptions options;
  options.cell_budget = args.budget;
  options.jobs = std::max(1U, args.jobs);
  const bool single = args.degrees.size() == 1 && !args.family;
  // Without --roots every feasible root count is listed in increasing order.
  const int max_roots =
      single ? args.degrees.front() : std::accumulate(args.degrees.begin(), args.degrees.end(), 0);
  const int from = args.roots.value_or(0);
  const int to = args.roots.value_or(max_roots);
  if (from < 0) usage("--roots must be nonnegative");
  for (int m = from; m <= to; ++m) {
    if (single) {
      if (2 * static_cast<std::size_t>(m) + 1 > options.cell_budget) {
        throw Error(ErrorCode::kBudgetExceeded,
                    "sequence length " + std::to_string(2 * m + 1) + " exceeds cell budget " +
                        std::to_string(options.cell_budget));
      }
      for (const auto& type : enumerate_real_types(args.degrees.front(), m)) {
        ctx.emit(real_type_to_json(type), to_string(type));
      }
    } else {
      for_each_family_type(
          args.degrees, m,
          [&](const SignMatrix& matrix) {
            ctx.emit(sign_matrix_to_json(matrix), sign_matrix_to_json(matrix).dump());
          },
          options);
    }
  }
  return kExitOk;
}

struct NamedValue {
  const char* name;
  std::function<BigInt()> compute;
  const char* expected;
};

int run_examples(const Context& ctx) {
  static const std::vector<int> kMixed = {2, 3, 2};
  static const std::vector<int> kQuadratics = {2, 2, 2, 2, 2};
  const std::vector<NamedValue> values = {
      {"R_{2,3,2}", [] { return count_family(kMixed); }, "26624"},
      {"Rbar_{2,3,2}", [] { return count_bar(kMixed); }, "53736"},
      {"Rbarbar_{2,3,2}", [] { return count_bar_bar(kMixed); }, "55339"},
      {"Rbarbar_{2,2,2,2,2}", [] { return count_bar_bar(kQuadratics); }, "311476091"},
  };
  Json rows = Json::array();
  std::vector<std::string> lines;
  bool all_ok = true;
  for (const auto& v : values) {
    const std::string value = v.compute().get_str();
    const bool ok = value == v.expected;
    all_ok = all_ok && ok;
    rows.push_back({{"name", v.name}, {"value", value}, {"expected", v.expected}, {"ok", ok}});
    lines.push_back(std::string(v.name) + " = " + value + (ok ? "  ok" : "  MISMATCH"));
  }
  ctx.emit(Json{{"examples", std::move(rows)}, {"ok", all_ok}}, join_lines(lines));
  return all_ok ? kExitOk : kExitNegative;
}

int run_golden(const Context& ctx, int degree) {
  const GoldenRatioGap gap = golden_ratio_gap(degree);
  const Json out = {{"degree", gap.degree},
                    {"numerator", gap.numerator_count.get_str()},
                    {"denominator", gap.denominator_count.get_str()},
                    {"gap", gap.gap_decimal}};
  ctx.emit(out, gap.gap_decimal);
  return kExitOk;
}

int exit_code_for(ErrorCode code) {
  return code == ErrorCode::kNotRealizable ? kExitNegative : kExitUsage;
}

int main_impl(int argc, char** argv) {
  CLI::App app{"Count, decide, enumerate and realize real types of polynomials"};
  app.require_subcommand(1);
  app.fallthrough();
  app.allow_extras();
  Context ctx;
  app.add_flag("--quiet,-q", ctx.quiet, "Suppress output; only the exit status is reported");
  app.add_flag("--plain", ctx.plain, "Human-readable output instead of JSON");

  std::function<int()> action;

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Evaluate a counting formula");
  count->add_option("--formula", count_args.formula, "Formula to evaluate")
      ->required()
      ->check(CLI::IsMember({"rdm", "rd", "rdhat", "fam", "fam-total", "fam-upto", "any", "bar",
                             "barbar", "fib"}));
  count->add_option("--degrees", count_args.degrees, "Degrees d1,...,dn")->delimiter(',');
  count->add_option("--roots", count_args.roots, "Number of distinct real roots m");
  count->add_option("--n", count_args.n, "Family size n (or the Fibonacci index)");
  count->callback([&] { action = [&] { return run_count_command(ctx, count_args); }; });

  int max_d = 10;
  bool table_check = false;
  auto* table = app.add_subcommand("table", "Number of real d-types for d = 0..max");
  table->add_option("--max-d", max_d, "Largest degree")->capture_default_str();
  table->add_flag("--check", table_check, "Compare the closed form with the explicit sum");
  table->callback([&] { action = [&] { return run_table(ctx, max_d, table_check); }; });

  std::string check_input;
  std::vector<int> check_degrees;
  auto* check = app.add_subcommand("check", "Decide whether a sequence or matrix is a real type");
  check->add_option("input", check_input, "JSON sign sequence or matrix")->required();
  check->add_option("--degrees,--degree", check_degrees, "Degree(s)")->delimiter(',');
  check->callback([&] { action = [&] { return run_check(ctx, check_input, check_degrees); }; });

  std::string realize_input;
  std::vector<int> realize_degrees;
  auto* realize = app.add_subcommand("realize", "Build a polynomial (family) of a given type");
  realize->add_option("input", realize_input, "JSON sign sequence or matrix")->required();
  realize->add_option("--degrees,--degree", realize_degrees, "Degree(s)")->delimiter(',');
  realize->callback(
      [&] { action = [&] { return run_realize(ctx, realize_input, realize_degrees); }; });

  std::string type_input;
  auto* type = app.add_subcommand("type", "Real type of a polynomial");
  type->add_option("coefficients", type_input, "Ascending coefficients as JSON")->required();
  type->callback([&] { action = [&] { return run_type(ctx, type_input); }; });

  // Bracketed arguments are JSON here, not CLI11 list syntax, so these two
  // subcommands take their operands from the unparsed remainder.
  std::vector<std::string> operands;
  auto* signmatrix = app.add_subcommand("signmatrix", "Sign matrix of a polynomial family");
  signmatrix->callback([&] {
    action = [&] {
      if (operands.empty()) usage("signmatrix needs at least one coefficient array");
      return run_signmatrix(ctx, operands);
    };
  });

  auto* satisfy = app.add_subcommand("satisfy", "Decide a conjunction of sign constraints");
  satisfy->callback([&] {
    action = [&] {
      if (operands.empty()) usage("satisfy needs at least one constraint like '[1,1] = 0'");
      return run_satisfy(ctx, operands);
    };
  });

  EnumerateArgs enumerate_args;
  auto* enumerate = app.add_subcommand("enumerate", "List real types as JSON lines");
  enumerate->add_option("--degrees", enumerate_args.degrees, "Degrees d1,...,dn")
      ->delimiter(',')
      ->required();
  enumerate->add_option("--roots", enumerate_args.roots, "Number of distinct real roots m");
  enumerate->add_flag("--family", enumerate_args.family, "List 1-row matrices for one degree");
  enumerate->add_option("--budget", enumerate_args.budget, "Largest n*(2m+1) searched")
      ->capture_default_str();
  enumerate->add_option("--jobs", enumerate_args.jobs, "Worker threads")->capture_default_str();
  enumerate->callback([&] { action = [&] { return run_enumerate(ctx, enumerate_args); }; });

  auto* examples = app.add_subcommand("examples", "Reproduce the reference family counts");
  examples->callback([&] { action = [&] { return run_examples(ctx); }; });

  int golden_degree = 200;
  auto* golden = app.add_subcommand("golden", "Distance of R_{d+1}/R_d from the golden ratio");
  golden->add_option("--degree", golden_degree, "Degree d >= 2")->capture_default_str();
  golden->callback([&] { action = [&] { return run_golden(ctx, golden_degree); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  operands = app.remaining();
  const bool takes_operands = signmatrix->parsed() || satisfy->parsed();
  if (!operands.empty() && !takes_operands) {
    std::cerr << "realtypes: unexpected argument '" << operands.front() << "'\n";
    return kExitUsage;
  }

  try {
    return action();
  } catch (const Error& e) {
    const int status = exit_code_for(e.code());
    if (status == kExitUsage || !ctx.quiet) std::cerr << "realtypes: " << e.what() << '\n';
    return status;
  }
}

}  // namespace
}  // namespace realtypes

int main(int argc, char** argv) {
  try {
    return realtypes::main_impl(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "realtypes: internal error: " << e.what() << '\n';
    return 2;
  }
}
