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

#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "oracles.hpp"
#include "realtypes/error.hpp"

namespace realtypes {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kParseError;
}

TEST(FibTest, KnownValues) {
  const std::vector<long> head = {1, 1, 2, 3, 5, 8, 13, 21};
  for (std::size_t n = 1; n <= head.size(); ++n) {
    EXPECT_EQ(fib(static_cast<long long>(n)), head[n - 1]) << "n=" << n;
  }
  // Recurrence iterated in 64-bit arithmetic.
  unsigned long long a = 1, b = 1;
  for (int n = 3; n <= 50; ++n) {
    const unsigned long long c = a + b;
    a = b;
    b = c;
  }
  EXPECT_EQ(b, 12586269025ULL);
  EXPECT_EQ(fib(50), mpz_class("12586269025"));
}

TEST(FibTest, RejectsNonPositiveIndex) {
  EXPECT_EQ(code_of([] { fib(0); }), ErrorCode::kDomainError);
  EXPECT_EQ(code_of([] { fib(-3); }), ErrorCode::kDomainError);
}

TEST(BinomialTest, ZeroOutsideRange) {
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(binomial(5, 6), 0);
  EXPECT_EQ(binomial(0, 0), 1);
  for (int n = 0; n <= 20; ++n) {
    for (int k = -2; k <= n + 2; ++k) EXPECT_EQ(binomial(n, k), oracle::pascal(n, k));
  }
}

TEST(ExactDegreeRootsTest, Examples) {
  EXPECT_EQ(count_exact_degree_roots(4, 0), 2);
  EXPECT_EQ(count_exact_degree_roots(3, 0), 0);
  EXPECT_EQ(count_exact_degree_roots(4, 2), 4);
  EXPECT_EQ(count_exact_degree_roots(2, 5), 0);
}

TEST(ExactDegreeRootsTest, MatchesMultiplicityOracle) {
  for (int d = 0; d <= 9; ++d) {
    for (int m = 0; m <= d + 1; ++m) {
      const auto expected = oracle::types_from_multiplicities(d, m).size();
      EXPECT_EQ(count_exact_degree_roots(d, m), static_cast<unsigned long>(expected))
          << "d=" << d << " m=" << m;
    }
  }
}

TEST(ExactDegreeRootsTest, BaseCasesAndRecursion) {
  for (int d = 0; d <= 60; ++d) {
    EXPECT_EQ(count_exact_degree_roots(d, 0), d % 2 == 0 ? 2 : 0) << d;
  }
  for (int d = 2; d <= 60; ++d) {
    for (int m = 1; m <= d; ++m) {
      EXPECT_EQ(count_exact_degree_roots(d, m),
                count_exact_degree_roots(d - 2, m - 1) + count_exact_degree_roots(d - 1, m - 1))
          << "d=" << d << " m=" << m;
    }
  }
}

TEST(ExactDegreeTest, SmallDegrees) {
  const std::vector<long> table = {2, 2, 6, 8, 16, 24, 42, 66, 110, 176, 288};
  for (int d = 0; d <= 10; ++d) {
    EXPECT_EQ(count_exact_degree(d), table[static_cast<std::size_t>(d)]) << d;
  }
}

TEST(ExactDegreeTest, ClosedFormMatchesExplicitSum) {
  for (int d = 0; d <= 300; ++d) {
    EXPECT_EQ(count_exact_degree(d), count_exact_degree_by_sum(d)) << d;
  }
}

TEST(UpToDegreeTest, Values) {
  EXPECT_EQ(count_up_to_degree(0), 2);
  EXPECT_EQ(count_up_to_degree(1), 4);
  EXPECT_EQ(count_up_to_degree(10), 464);
  for (int d = 1; d <= 300; ++d) {
    EXPECT_EQ(count_up_to_degree(d), count_exact_degree(d) + count_exact_degree(d - 1)) << d;
  }
}

TEST(FamilyRootsTest, SingleMemberCollapses) {
  for (int d = 0; d <= 12; ++d) {
    for (int m = 0; m <= d; ++m) {
      const std::vector<int> one = {d};
      EXPECT_EQ(count_family_roots(one, m), count_exact_degree_roots(d, m));
    }
  }
}

TEST(FamilyRootsTest, MatchesBruteForce) {
  const std::vector<std::vector<int>> families = {{1, 1}, {2, 1}, {0, 2}, {2, 2}, {1, 1, 1}};
  for (const auto& degrees : families) {
    for (int m = 0; m <= 2; ++m) {
      EXPECT_EQ(count_family_roots(degrees, m), oracle::brute_family_count(degrees, m))
          << "m=" << m;
    }
  }
  // Two linear polynomials always have a root, so no 2 x 1 matrix exists.
  const std::vector<int> lines = {1, 1};
  EXPECT_EQ(count_family_roots(lines, 0), 0);
  EXPECT_EQ(count_family_roots(lines, 1), 4);
  EXPECT_EQ(count_family_roots(lines, 2), 8);
}

TEST(FamilyTest, Values) {
  const std::vector<int> mixed = {2, 3, 2};
  EXPECT_EQ(count_family(mixed), 26624);
  const std::vector<int> lines = {1, 1};
  // m <= 2 brute force: 0 + 4 + 8.
  long brute = 0;
  for (int m = 0; m <= 2; ++m) brute += oracle::brute_family_count(lines, m);
  EXPECT_EQ(brute, 12);
  EXPECT_EQ(count_family(lines), 12);
  for (int d = 0; d <= 15; ++d) {
    const std::vector<int> one = {d};
    EXPECT_EQ(count_family(one), count_exact_degree(d));
  }
}

TEST(FamilyTest, EmptyFamily) {
  const std::vector<int> none;
  EXPECT_EQ(code_of([&] { count_family(none); }), ErrorCode::kEmptyFamily);
  EXPECT_EQ(code_of([&] { count_family_roots(none, 1); }), ErrorCode::kEmptyFamily);
  EXPECT_EQ(code_of([&] { count_bar(none); }), ErrorCode::kEmptyFamily);
  EXPECT_EQ(code_of([&] { count_bar_bar(none); }), ErrorCode::kEmptyFamily);
  EXPECT_EQ(code_of([] { count_any_degree(0, 1); }), ErrorCode::kEmptyFamily);
  const std::vector<int> negative = {2, -1};
  EXPECT_EQ(code_of([&] { count_family(negative); }), ErrorCode::kDomainError);
}

TEST(FamilyUpToTest, Values) {
  const std::vector<int> one = {1};
  EXPECT_EQ(count_family_up_to(one), 4);
  for (int d = 1; d <= 20; ++d) {
    const std::vector<int> single = {d};
    EXPECT_EQ(count_family_up_to(single), count_up_to_degree(d));
  }
  // Distinct matrices realizable by two polynomials of degree at most 2,
  // collected over every degree pair and root count.
  std::set<std::vector<oracle::SignRow>> seen;
  for (int e1 = 0; e1 <= 2; ++e1) {
    for (int e2 = 0; e2 <= 2; ++e2) {
      for (int m = 0; m <= e1 + e2; ++m) {
        oracle::brute_family_visit({e1, e2}, m,
                                   [&](const std::vector<oracle::SignRow>& a) { seen.insert(a); });
      }
    }
  }
  const long brute = static_cast<long long>(seen.size());
  const std::vector<int> quadratics = {2, 2};
  EXPECT_EQ(count_family_up_to(quadratics), brute);
  EXPECT_EQ(brute, 208);
  const std::vector<int> with_zero = {2, 0};
  EXPECT_EQ(code_of([&] { count_family_up_to(with_zero); }), ErrorCode::kDomainError);
}

TEST(AnyDegreeTest, Values) {
  for (int m = 0; m <= 30; ++m) {
    mpz_class expected;
    mpz_ui_pow_ui(expected.get_mpz_t(), 2, static_cast<unsigned long>(m + 1));
    EXPECT_EQ(count_any_degree(1, m), expected);
    EXPECT_EQ(count_exact_degree_roots(2 * m + 1, m) + count_exact_degree_roots(2 * m, m),
              expected)
        << m;
  }
  EXPECT_EQ(count_any_degree(2, 1), 32);
  EXPECT_EQ(count_any_degree(1, 0), 2);
  EXPECT_EQ(count_any_degree(3, 2), 8 * 26 * 26);
}

TEST(BarTest, Values) {
  const std::vector<int> mixed = {2, 3, 2};
  EXPECT_EQ(count_bar(mixed), 53736);
  const std::vector<int> constant = {0};
  EXPECT_EQ(count_bar(constant), 2);
  const std::vector<int> lines = {1, 1};
  long four_terms = 0;
  for (int e1 = 0; e1 <= 1; ++e1) {
    for (int e2 = 0; e2 <= 1; ++e2) {
      for (int m = 0; m <= e1 + e2; ++m) four_terms += oracle::brute_family_count({e1, e2}, m);
    }
  }
  EXPECT_EQ(count_bar(lines), four_terms);
  EXPECT_EQ(four_terms, 24);
}

TEST(BarBarTest, ReferenceValues) {
  const std::vector<int> mixed = {2, 3, 2};
  EXPECT_EQ(count_bar_bar(mixed), 55339);
  const std::vector<int> quadratics = {2, 2, 2, 2, 2};
  EXPECT_EQ(count_bar_bar(quadratics), 311476091);
}

TEST(BarBarTest, SingleDegree) {
  for (int d = 0; d <= 8; ++d) {
    const std::vector<int> one = {d};
    EXPECT_EQ(count_bar_bar(one), count_bar(one) + 1) << d;
  }
}

TEST(EvennessTest, AllSignCountsEven) {
  for (int d = 0; d <= 40; ++d) {
    EXPECT_TRUE(mpz_even_p(count_exact_degree(d).get_mpz_t()));
    EXPECT_TRUE(mpz_even_p(count_up_to_degree(d).get_mpz_t()));
    for (int m = 0; m <= d; ++m) EXPECT_TRUE(mpz_even_p(count_exact_degree_roots(d, m).get_mpz_t()));
  }
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) {
      const std::vector<int> degrees = {a, b, 2};
      EXPECT_TRUE(mpz_even_p(count_family(degrees).get_mpz_t()));
      EXPECT_TRUE(mpz_even_p(count_bar(degrees).get_mpz_t()));
      EXPECT_TRUE(mpz_odd_p(count_bar_bar(degrees).get_mpz_t()));
      for (int m = 0; m <= 4; ++m) {
        EXPECT_TRUE(mpz_even_p(count_family_roots(degrees, m).get_mpz_t()));
      }
    }
  }
  for (int n = 1; n <= 4; ++n) {
    for (int m = 0; m <= 4; ++m) EXPECT_TRUE(mpz_even_p(count_any_degree(n, m).get_mpz_t()));
  }
}

TEST(FamilyRootsTest, BoundedByAnyDegreeCount) {
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 4; ++b) {
      const std::vector<int> degrees = {a, b};
      for (int m = 0; m <= a + b + 1; ++m) {
        EXPECT_LE(count_family_roots(degrees, m), count_any_degree(2, m));
      }
      EXPECT_EQ(count_family_roots(degrees, a + b + 1), 0);
    }
  }
}

TEST(GoldenRatioTest, SmallDegree) {
  const GoldenRatioGap g = golden_ratio_gap(2);
  EXPECT_EQ(g.numerator_count, 8);
  EXPECT_EQ(g.denominator_count, 6);
  const GoldenRatioGap ten = golden_ratio_gap(10);
  EXPECT_EQ(ten.numerator_count, count_exact_degree(11));
  EXPECT_EQ(ten.denominator_count, 288);
  EXPECT_EQ(code_of([] { golden_ratio_gap(1); }), ErrorCode::kDomainError);
}

TEST(GoldenRatioTest, ApproximationAccuracy) {
  // phi^2 = phi + 1, so the residual bounds the approximation error.
  const Rational phi = golden_ratio_approximation(64);
  const Rational residual = abs(phi * phi - phi - 1);
  EXPECT_LT(residual, Rational(mpz_class(1), mpz_class("1" + std::string(60, '0'))));
  EXPECT_EQ(to_scientific(Rational(1, 8), 3), "1.25e-01");
}

TEST(GoldenRatioTest, GapShrinks) {
  const int samples[] = {10, 50, 100, 200};
  Rational previous = 1;
  for (int d : samples) {
    const GoldenRatioGap g = golden_ratio_gap(d);
    EXPECT_LT(g.gap, previous) << d;
    previous = g.gap;
  }
  EXPECT_LT(previous, Rational(1, 1000000));
}

TEST(RunCountTest, Dispatch) {
  CountQuery q;
  q.formula = Formula::kBarBar;
  q.degrees = {2, 3, 2};
  const CountReport r = run_count(q);
  EXPECT_EQ(r.value, 55339);
  EXPECT_EQ(r.params, (std::vector<long long>{2, 3, 2}));
  EXPECT_FALSE(r.convention.empty());

  CountQuery missing;
  missing.formula = Formula::kRdm;
  missing.degrees = {4};
  EXPECT_EQ(code_of([&] { run_count(missing); }), ErrorCode::kDomainError);
  missing.roots = 2;
  EXPECT_EQ(run_count(missing).value, 4);
}

}  // namespace
}  // namespace realtypes
