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


#include "realtypes/counting.hpp"

#include <gmp.h>

#include <cstddef>
#include <string>
#include <vector>

#include "realtypes/error.hpp"

namespace realtypes {

namespace {

void require_nonnegative(long long value, const char* name) {
  if (value < 0) {
    throw Error(ErrorCode::kDomainError,
                std::string(name) + " must be >= 0, got " +
                    std::to_string(value));
  }
}

void require_family(std::span<const int> degrees) {
  if (degrees.empty()) {
    throw Error(ErrorCode::kEmptyFamily, "degree list is empty");
  }
  for (int d : degrees) require_nonnegative(d, "degree");
}

int total_degree(std::span<const int> degrees) {
  int total = 0;
  for (int d : degrees) total += d;
  return total;
}

// row_sums[j][r] = sum_k C(r, k) R_{d_j}^(k): the number of rows of width
// 2r+1 that are a real d_j-type up to repeated entries, with zeros only in
// even columns.
class FamilyCounter {
 public:
  FamilyCounter(std::span<const int> degrees, int max_roots)
      : binomials_(static_cast<std::size_t>(max_roots) + 1) {
    for (int r = 0; r <= max_roots; ++r) {
      auto& row = binomials_[static_cast<std::size_t>(r)];
      row.reserve(static_cast<std::size_t>(r) + 1);
      for (int k = 0; k <= r; ++k) row.push_back(binomial(r, k));
    }
    for (int d : degrees) {
      std::vector<BigInt> per_k;
      for (int k = 0; k <= max_roots; ++k) {
        per_k.push_back(count_exact_degree_roots(d, k));
      }
      std::vector<BigInt> sums;
      for (int r = 0; r <= max_roots; ++r) {
        BigInt s = 0;
        for (int k = 0; k <= r; ++k) s += choose(r, k) * per_k[k];
        sums.push_back(std::move(s));
      }
      row_sums_.push_back(std::move(sums));
    }
  }

  BigInt count(int roots) const {
    BigInt total = 0;
    for (int i = 0; i <= roots; ++i) {
      BigInt product = choose(roots, i);
      for (const auto& sums : row_sums_) product *= sums[roots - i];
      if (i % 2 == 0) {
        total += product;
      } else {
        total -= product;
      }
    }
    return total;
  }

 private:
  const BigInt& choose(int n, int k) const {
    return binomials_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

  std::vector<std::vector<BigInt>> binomials_;
  std::vector<std::vector<BigInt>> row_sums_;
};

}  // namespace

std::string_view formula_id(Formula formula) noexcept {
  switch (formula) {
    case Formula::kRdm: return "Rdm";
    case Formula::kRd: return "Rd";
    case Formula::kRdHat: return "RdHat";
    case Formula::kRFamM: return "RFamM";
    case Formula::kRFam: return "RFam";
    case Formula::kRFamHat: return "RFamHat";
    case Formula::kSnm: return "Snm";
    case Formula::kBar: return "Bar";
    case Formula::kBarBar: return "BarBar";
    case Formula::kFib: return "Fib";
  }
  return "Unknown";
}

BigInt binomial(long long n, long long k) {
  require_nonnegative(n, "n");
  if (k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

BigInt fib(long long n) {
  if (n <= 0) {
    throw Error(ErrorCode::kDomainError,
                "Fibonacci index must be >= 1, got " + std::to_string(n));
  }
  BigInt previous = 0;
  BigInt current = 1;
  for (long long i = 1; i < n; ++i) {
    BigInt next = previous + current;
    previous = std::move(current);
    current = std::move(next);
  }
  return current;
}

BigInt count_exact_degree_roots(int degree, int roots) {
  require_nonnegative(degree, "degree");
  require_nonnegative(roots, "roots");
  if (roots > degree) return 0;
  // 2 * sum_{j >= 0} C(m, 2m - d + 2j); the lower index can start negative.
  BigInt sum = 0;
  for (long long lower = 2LL * roots - degree; lower <= roots; lower += 2) {
    sum += binomial(roots, lower);
  }
  return 2 * sum;
}

BigInt count_exact_degree(int degree) {
  require_nonnegative(degree, "degree");
  BigInt value = 2 * fib(degree + 2);
  if (degree % 2 == 1) value -= 2;
  return value;
}

BigInt count_exact_degree_by_sum(int degree) {
  require_nonnegative(degree, "degree");
  BigInt total = 0;
  for (int m = 0; m <= degree; ++m) total += count_exact_degree_roots(degree, m);
  return total;
}

BigInt count_up_to_degree(int degree) {
  require_nonnegative(degree, "degree");
  return 2 * fib(degree + 3) - 2;
}

BigInt count_family_roots(std::span<const int> degrees, int roots) {
  require_family(degrees);
  require_nonnegative(roots, "roots");
  return FamilyCounter(degrees, roots).count(roots);
}

BigInt count_family(std::span<const int> degrees) {
  require_family(degrees);
  const int max_roots = total_degree(degrees);
  const FamilyCounter counter(degrees, max_roots);
  BigInt total = 0;
  for (int m = 0; m <= max_roots; ++m) total += counter.count(m);
  return total;
}

BigInt count_family_up_to(std::span<const int> degrees) {
  require_family(degrees);
  for (int d : degrees) {
    if (d < 1) {
      throw Error(ErrorCode::kDomainError,
                  "degree bounds must be >= 1, got " + std::to_string(d));
    }
  }
  const std::size_t n = degrees.size();
  BigInt total = 0;
  std::vector<int> lowered(degrees.begin(), degrees.end());
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    for (std::size_t i = 0; i < n; ++i) {
      lowered[i] = degrees[i] - static_cast<int>((mask >> i) & 1UL);
    }
    total += count_family(lowered);
  }
  return total;
}

BigInt count_any_degree(int family_size, int roots) {
  if (family_size < 1) {
    throw Error(ErrorCode::kEmptyFamily, "family size must be >= 1");
  }
  require_nonnegative(roots, "roots");
  BigInt power_of_two;
  mpz_ui_pow_ui(power_of_two.get_mpz_t(), 2, static_cast<unsigned long>(family_size));
  BigInt base;
  mpz_ui_pow_ui(base.get_mpz_t(), 3, static_cast<unsigned long>(family_size));
  base -= 1;
  BigInt power;
  mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(roots));
  return power_of_two * power;
}

BigInt count_bar(std::span<const int> degrees) {
  require_family(degrees);
  std::vector<int> bounds(degrees.size(), 0);
  BigInt total = 0;
  while (true) {
    total += count_family(bounds);
    std::size_t i = 0;
    while (i < bounds.size() && bounds[i] == degrees[i]) bounds[i++] = 0;
    if (i == bounds.size()) break;
    ++bounds[i];
  }
  return total;
}

BigInt count_bar_bar(std::span<const int> degrees) {
  require_family(degrees);
  const std::size_t n = degrees.size();
  BigInt total = 1;  // empty sublist
  std::vector<int> sublist;
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    sublist.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1UL) sublist.push_back(degrees[i]);
    }
    total += count_bar(sublist);
  }
  return total;
}

namespace {

int need(const std::optional<int>& value, const char* flag, Formula formula) {
  if (!value) {
    throw Error(ErrorCode::kDomainError,
                std::string("formula ") + std::string(formula_id(formula)) +
                    " needs " + flag);
  }
  return *value;
}

int single_degree(const CountQuery& query) {
  if (query.degrees.size() != 1) {
    throw Error(ErrorCode::kDomainError,
                std::string("formula ") + std::string(formula_id(query.formula)) +
                    " needs exactly one degree");
  }
  return query.degrees.front();
}

}  // namespace

CountReport run_count(const CountQuery& query) {
  CountReport report;
  report.formula = query.formula;
  auto& params = report.params;
  switch (query.formula) {
    case Formula::kRdm: {
      const int d = single_degree(query);
      const int m = need(query.roots, "roots", query.formula);
      params = {d, m};
      report.value = count_exact_degree_roots(d, m);
      break;
    }
    case Formula::kRd: {
      const int d = single_degree(query);
      params = {d};
      report.value = count_exact_degree(d);
      break;
    }
    case Formula::kRdHat: {
      const int d = single_degree(query);
      params = {d};
      report.value = count_up_to_degree(d);
      break;
    }
    case Formula::kRFamM: {
      const int m = need(query.roots, "roots", query.formula);
      report.value = count_family_roots(query.degrees, m);
      params.assign(query.degrees.begin(), query.degrees.end());
      params.push_back(m);
      break;
    }
    case Formula::kRFam:
      report.value = count_family(query.degrees);
      params.assign(query.degrees.begin(), query.degrees.end());
      break;
    case Formula::kRFamHat:
      report.value = count_family_up_to(query.degrees);
      params.assign(query.degrees.begin(), query.degrees.end());
      break;
    case Formula::kSnm: {
      const int n = need(query.family_size, "n", query.formula);
      const int m = need(query.roots, "roots", query.formula);
      params = {n, m};
      report.value = count_any_degree(n, m);
      break;
    }
    case Formula::kBar:
      report.value = count_bar(query.degrees);
      params.assign(query.degrees.begin(), query.degrees.end());
      break;
    case Formula::kBarBar:
      report.value = count_bar_bar(query.degrees);
      params.assign(query.degrees.begin(), query.degrees.end());
      report.convention = std::string(kBarBarConvention);
      break;
    case Formula::kFib: {
      const int n = need(query.family_size, "n", query.formula);
      params = {n};
      report.value = fib(n);
      break;
    }
  }
  return report;
}

Rational golden_ratio_approximation(int digits) {
  require_nonnegative(digits, "digits");
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  // floor(sqrt(5) * 10^digits)
  BigInt radicand = 5 * scale * scale;
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
  Rational phi(scale + root, 2 * scale);
  phi.canonicalize();
  return phi;
}

GoldenRatioGap golden_ratio_gap(int degree) {
  if (degree < 2) {
    throw Error(ErrorCode::kDomainError,
                "golden ratio gap needs degree >= 2, got " + std::to_string(degree));
  }
  GoldenRatioGap out;
  out.degree = degree;
  out.numerator_count = count_exact_degree(degree + 1);
  out.denominator_count = count_exact_degree(degree);
  out.golden_ratio = golden_ratio_approximation(100);
  Rational ratio(out.numerator_count, out.denominator_count);
  ratio.canonicalize();
  out.gap = abs(ratio - out.golden_ratio);
  out.gap_decimal = to_scientific(out.gap, 15);
  return out;
}

std::string to_scientific(const Rational& value, int significant_digits) {
  if (significant_digits < 1) significant_digits = 1;
  mpf_class approx(0, 1024);
  approx = value;
  char* text = nullptr;
  gmp_asprintf(&text, "%.*Fe", significant_digits - 1, approx.get_mpf_t());
  std::string out(text);
  void (*release)(void*, std::size_t) = nullptr;
  mp_get_memory_functions(nullptr, nullptr, &release);
  release(text, out.size() + 1);
  return out;
}

}  // namespace realtypes
