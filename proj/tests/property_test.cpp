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


// Randomized invariants over seeded polynomial families.

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "realtypes/exact_poly.hpp"
#include "realtypes/satisfy.hpp"
#include "realtypes/typecheck.hpp"

namespace realtypes {
namespace {

constexpr std::uint64_t kSeed = 0x5eed2026;
constexpr int kTrials = 200;

// Products of small linear and quadratic factors, so repeated, shared and
// irrational roots all show up often.
ExactPoly random_poly(std::mt19937_64& rng, int max_factors) {
  std::uniform_int_distribution<int> count(0, max_factors);
  std::uniform_int_distribution<int> small(-3, 3);
  std::uniform_int_distribution<int> kind(0, 2);
  ExactPoly f = ExactPoly::constant(small(rng) >= 0 ? 1 : -1);
  for (int k = count(rng); k > 0; --k) {
    if (kind(rng) == 0) {
      f *= ExactPoly{small(rng), 1};
    } else if (kind(rng) == 1) {
      f *= ExactPoly{small(rng), 0, 1};
    } else {
      f *= ExactPoly{small(rng), 2};
    }
  }
  return f;
}

TEST(PropertyTest, SingleTypeInvariants) {
  std::mt19937_64 rng(kSeed);
  for (int t = 0; t < kTrials; ++t) {
    const ExactPoly f = random_poly(rng, 5);
    const RealType s = real_type_of(f);
    const int d = f.degree();
    EXPECT_TRUE(is_real_type(s, d)) << to_string(f);
    EXPECT_EQ((d % 2 == 0), s.first() == s.last()) << to_string(f);
    EXPECT_EQ(s.roots(), isolate_real_roots(f).size());
    EXPECT_EQ(real_type_of(f * Rational(7, 3)), s);
    EXPECT_EQ(real_type_of(-f), s.negated());
    const DegreeWitness w = min_realizing_degree(s);
    EXPECT_LE(w.min_degree, d);
    EXPECT_EQ((d - w.min_degree) % 2, 0);
  }
}

TEST(PropertyTest, FamilyInvariants) {
  std::mt19937_64 rng(kSeed + 1);
  std::uniform_int_distribution<int> size(1, 3);
  for (int t = 0; t < kTrials; ++t) {
    std::vector<ExactPoly> family;
    std::vector<int> degrees;
    for (int n = size(rng); n > 0; --n) {
      family.push_back(random_poly(rng, 3));
      degrees.push_back(family.back().degree());
    }
    const SignMatrix a = family_real_type(family);
    EXPECT_EQ(validate_sign_matrix(a.data()), a);
    EXPECT_TRUE(is_family_type(a, degrees));
    for (std::size_t i = 0; i < family.size(); ++i) {
      EXPECT_EQ(condense_row(a, i), real_type_of(family[i]));
    }
  }
}

TEST(PropertyTest, WitnessesEvaluate) {
  std::mt19937_64 rng(kSeed + 2);
  std::uniform_int_distribution<int> rel(0, 5);
  for (int t = 0; t < kTrials; ++t) {
    std::vector<Constraint> system;
    for (int n = 0; n < 3; ++n) {
      system.push_back({random_poly(rng, 3), static_cast<Relation>(rel(rng))});
    }
    const Verdict v = decide(system);
    if (!v.satisfiable || v.witness->lo != v.witness->hi) continue;
    for (const auto& c : system) {
      EXPECT_TRUE(satisfies(sign_of(c.poly(v.witness->lo)), c.relation));
    }
  }
}

}  // namespace
}  // namespace realtypes
