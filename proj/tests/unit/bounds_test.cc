// Copyright 2026 The qkdkr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "qkdkr/bounds.h"

#include <cmath>
#include <stdexcept>

#include "gtest/gtest.h"
#include "qkdkr/numerics.h"

namespace qkdkr {
namespace {

double Eps(double q) { return std::sqrt(q * (1.0 - q)); }

TEST(WinterDeltaBound, Values) {
  for (int d = 2; d <= 8; ++d) EXPECT_EQ(WinterDeltaBound(0.0, d).value, 0.0);
  EXPECT_NEAR(WinterDeltaBound(Eps(0.0185), 2).value, 0.7313511552413141, 1e-13);
  // 1 * log2(2) + 2 * h(1/2)
  EXPECT_NEAR(WinterDeltaBound(1.0, 2).value, 3.0, 1e-15);
  DeltaBound b = WinterDeltaBound(0.2, 5);
  EXPECT_TRUE(b.applicable);
  EXPECT_EQ(b.kind, DeltaBoundKind::kWinter);
}

TEST(WinterDeltaBound, RejectsBadInput) {
  EXPECT_THROW(WinterDeltaBound(-0.1, 2), std::invalid_argument);
  EXPECT_THROW(WinterDeltaBound(1.1, 2), std::invalid_argument);
  EXPECT_THROW(WinterDeltaBound(0.1, 1), std::invalid_argument);
}

TEST(LemmaDeltaBound, ValuesAndDomain) {
  DeltaBound zero = LemmaDeltaBound(0.0);
  EXPECT_EQ(zero.value, 0.0);
  EXPECT_TRUE(zero.applicable);
  EXPECT_NEAR(LemmaDeltaBound(0.0239).value, 0.6726659573595125, 1e-13);
  EXPECT_TRUE(LemmaDeltaBound(0.1464).applicable);
  EXPECT_FALSE(LemmaDeltaBound(0.14641).applicable);
  EXPECT_FALSE(LemmaDeltaBound(0.2).applicable);
  EXPECT_FALSE(LemmaDeltaBound(-0.01).applicable);
  EXPECT_EQ(LemmaDeltaBound(0.2).kind, DeltaBoundKind::kLemmaD2);
}

TEST(WildeConjectureCurve, Values) {
  for (double e : {0.0, 0.1, 0.5, 0.9}) {
    EXPECT_NEAR(WildeConjectureCurve(e, 2).value, BinaryEntropy(e), 1e-15);
  }
  EXPECT_EQ(WildeConjectureCurve(0.0, 7).value, 0.0);
  EXPECT_FALSE(WildeConjectureCurve(0.3, 3).applicable);
  EXPECT_THROW(WildeConjectureCurve(2.0, 3), std::invalid_argument);
}

TEST(DeltaBounds, OrderingOnQubitGrid) {
  double min_gap = 1.0;
  for (int i = 1; i <= 1000; ++i) {
    const double q = kLemmaQMax * i / 1000.0;
    const double winter = WinterDeltaBound(Eps(q), 2).value;
    const double lemma = LemmaDeltaBound(q).value;
    const double wilde = WildeConjectureCurve(Eps(q), 2).value;
    EXPECT_GE(winter, lemma) << "q=" << q;
    EXPECT_GE(lemma, wilde) << "q=" << q;
    min_gap = std::min(min_gap, lemma - wilde);
  }
  EXPECT_GT(min_gap, 0.0);
}

TEST(DeltaBounds, ConjectureBelowWinterOnOpenHalfInterval) {
  for (int i = 1; i < 500; ++i) {
    const double q = 0.5 * i / 500.0;
    EXPECT_LT(WildeConjectureCurve(Eps(q), 2).value, WinterDeltaBound(Eps(q), 2).value);
  }
}

TEST(VerifyLemmaSupport, PassesInsideTheRange) {
  const double grid[] = {0.01, 0.05, 0.1, 0.1464};
  LemmaSupportReport r = VerifyLemmaSupport(grid);
  ASSERT_EQ(r.rows.size(), 4u);
  EXPECT_TRUE(r.AllPass());
  for (int k = 0; k < 3; ++k) EXPECT_EQ(r.Failures(k), 0u);
}

TEST(VerifyLemmaSupport, ThirdInequalityFailsBeyondTheRange) {
  const double grid[] = {0.2};
  LemmaSupportReport r = VerifyLemmaSupport(grid, true);
  EXPECT_FALSE(r.rows[0].pass[2]);
  EXPECT_LT(r.rows[0].margin[2], 0.0);
  EXPECT_TRUE(r.rows[0].pass[1]);
}

TEST(VerifyLemmaSupport, ThirdInequalityThresholdSitsJustAboveTheRange) {
  const double inside[] = {0.14644};
  const double outside[] = {0.14646};
  EXPECT_TRUE(VerifyLemmaSupport(inside, true).rows[0].pass[2]);
  EXPECT_FALSE(VerifyLemmaSupport(outside, true).rows[0].pass[2]);
}

TEST(VerifyLemmaSupport, RejectsGridOutsideRange) {
  const double zero[] = {0.0};
  const double high[] = {0.2};
  const double very_high[] = {0.6};
  EXPECT_THROW(VerifyLemmaSupport(zero), std::invalid_argument);
  EXPECT_THROW(VerifyLemmaSupport(high), std::invalid_argument);
  EXPECT_THROW(VerifyLemmaSupport(very_high, true), std::invalid_argument);
}

}  // namespace
}  // namespace qkdkr
