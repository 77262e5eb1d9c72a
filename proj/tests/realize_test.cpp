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


#include "realtypes/realize.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "realtypes/error.hpp"
#include "realtypes/typecheck.hpp"

namespace realtypes {

inline void PrintTo(const ExactPoly& f, std::ostream* os) { *os << to_string(f); }

namespace {

TEST(RealizeTypeTest, Examples) {
  EXPECT_EQ(realize_type(RealType::validate({-1, 0, 1}), 1), (ExactPoly{-1, 1}));
  EXPECT_EQ(realize_type(RealType::validate({1, 0, 1}), 2), (ExactPoly{1, -2, 1}));
  EXPECT_EQ(realize_type(RealType::validate({-1, 0, 1}), 3), (ExactPoly{-1, 1, -1, 1}));
  EXPECT_EQ(realize_type(RealType::validate({-1}), 4), (ExactPoly{-1, 0, -2, 0, -1}));
}

TEST(RealizeTypeTest, NotRealizableReportsWitness) {
  try {
    realize_type(RealType::validate({1, 0, -1, 0, -1, 0, 1}), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotRealizable);
    EXPECT_NE(std::string(e.what()).find("minimum degree 4"), std::string::npos) << e.what();
  }
}

TEST(RealizeTypeTest, RoundTrip) {
  for (int d = 0; d <= 6; ++d) {
    for (int m = 0; m <= d; ++m) {
      for (const auto& s : enumerate_real_types(d, m)) {
        const ExactPoly f = realize_type(s, d);
        EXPECT_EQ(f.degree(), d);
        EXPECT_TRUE(f.has_integer_coefficients());
        EXPECT_EQ(real_type_of(f), s) << to_string(s) << " d=" << d;
      }
    }
  }
}

TEST(RealizeFamilyTest, IntroductionMatrix) {
  const SignMatrix intro = SignMatrix::validate(
      {{-1, 0, 1, 1, 1, 1, 1}, {-1, -1, -1, 0, 1, 1, 1}, {1, 0, -1, -1, -1, 0, 1}});
  const std::vector<int> degrees = {1, 1, 2};
  const auto family = realize_family(intro, degrees);
  ASSERT_EQ(family.size(), 3u);
  EXPECT_EQ(family[0], (ExactPoly{-1, 1}));
  EXPECT_EQ(family[1], (ExactPoly{-2, 1}));
  EXPECT_EQ(family[2], (ExactPoly{3, -4, 1}));
  EXPECT_EQ(family_real_type(family), intro);
}

TEST(RealizeFamilyTest, SmallCases) {
  const std::vector<int> quadratic = {2};
  EXPECT_EQ(realize_family(SignMatrix::validate({{1}}), quadratic)[0], (ExactPoly{1, 0, 1}));
  EXPECT_EQ(realize_family(SignMatrix::validate({{1, 0, 1}}), quadratic)[0],
            (ExactPoly{1, -2, 1}));
}

TEST(RealizeFamilyTest, Errors) {
  const SignMatrix intro = SignMatrix::validate(
      {{-1, 0, 1, 1, 1, 1, 1}, {-1, -1, -1, 0, 1, 1, 1}, {1, 0, -1, -1, -1, 0, 1}});
  const std::vector<int> too_low = {1, 1, 1};
  try {
    realize_family(intro, too_low);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotRealizable);
    EXPECT_NE(std::string(e.what()).find("row 3"), std::string::npos) << e.what();
  }
  const std::vector<int> short_list = {1};
  EXPECT_THROW(realize_family(intro, short_list), Error);
}

TEST(RealizeFamilyTest, RoundTrip) {
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) {
      const std::vector<int> degrees = {a, b};
      for (int m = 0; m <= 2; ++m) {
        for (const auto& matrix : enumerate_family_types(degrees, m)) {
          const auto family = realize_family(matrix, degrees);
          EXPECT_EQ(family[0].degree(), a);
          EXPECT_EQ(family[1].degree(), b);
          EXPECT_EQ(family_real_type(family), matrix) << to_string(matrix);
        }
      }
    }
  }
}

}  // namespace
}  // namespace realtypes
