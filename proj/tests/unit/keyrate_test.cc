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


#include "qkdkr/keyrate.h"

#include <cmath>

#include "gtest/gtest.h"
#include "qkdkr/bounds.h"

namespace qkdkr {
namespace {

ProtocolConfig Config(int dim, Mode mode = Mode::kFull, BoundChoice bound = BoundChoice::kWinter,
                      ChannelFamily family = ChannelFamily::kDepolarizing) {
  ProtocolConfig c;
  c.dim = dim;
  c.mode = mode;
  c.bound = bound;
  c.family = family;
  return c;
}

double DepolarizingPenalty(int d, double q) {
  return q * std::log2(d - 1.0) + BinaryEntropy(q);
}

TEST(LeakEc, KnownChannels) {
  EXPECT_EQ(LeakEc(DepolarizingChannel(5, 0.0)), 0.0);
  for (int d = 2; d <= 8; ++d) {
    EXPECT_NEAR(LeakEc(DepolarizingChannel(d, 0.07)), DepolarizingPenalty(d, 0.07), 1e-14);
    EXPECT_NEAR(LeakEc(AmplitudeDampingChannel(d, 0.3)), (d - 1.0) / d * BinaryEntropy(0.3),
                1e-14);
  }
  EXPECT_NEAR(LeakEc(AmplitudeDampingChannel(4, 0.1)), 0.3517466951919609, 1e-14);
}

TEST(Hbx, Depolarizing) {
  for (int d = 2; d <= 8; ++d) {
    ChannelModel c = DepolarizingChannel(d, 0.04);
    EXPECT_NEAR(HbxFull(c), DepolarizingPenalty(d, 0.04), 1e-14);
    EXPECT_NEAR(HbxPartial(c), HbxFull(c), 1e-14);
  }
  EXPECT_EQ(HbxFull(DepolarizingChannel(3, 0.0)), 0.0);
  EXPECT_EQ(HbxPartial(DepolarizingChannel(3, 0.0)), 0.0);
}

TEST(Hbx, AmplitudeDampingReferenceValues) {
  // Reference values from an independent Kraus-based evaluation.
  ChannelModel c = AmplitudeDampingChannel(4, 0.1);
  EXPECT_NEAR(HbxFull(c), 0.40431763960991934, 1e-13);
  EXPECT_NEAR(HbxPartial(c), 0.4043176396099188, 1e-13);
}

TEST(ProtocolConfig, Validation) {
  EXPECT_THROW(Config(3, Mode::kFull, BoundChoice::kLemmaD2).Validate(), std::invalid_argument);
  EXPECT_THROW(Config(2, Mode::kFull, BoundChoice::kLemmaD2, ChannelFamily::kAmplitudeDamping)
                   .Validate(),
               std::invalid_argument);
  EXPECT_THROW(Config(1).Validate(), std::invalid_argument);
  EXPECT_THROW(Config(2, Mode::kFull, BoundChoice::kWinter, ChannelFamily::kCustom).Validate(),
               std::invalid_argument);
  EXPECT_NO_THROW(Config(2, Mode::kFull, BoundChoice::kLemmaD2).Validate());
}

TEST(KeyRate, NoiselessRateIsLog2D) {
  for (int d = 2; d <= 8; ++d) {
    for (ChannelFamily f : {ChannelFamily::kDepolarizing, ChannelFamily::kAmplitudeDamping}) {
      for (Mode m : {Mode::kFull, Mode::kPartial}) {
        EXPECT_NEAR(KeyRate(Config(d, m, BoundChoice::kWinter, f), 0.0).key_rate, std::log2(d),
                    1e-12);
      }
    }
  }
}

TEST(KeyRate, QubitNearThreshold) {
  KeyRateReport r = KeyRate(Config(2), 0.0185);
  EXPECT_NEAR(r.key_rate, 0.0027817199688768834, 1e-12);
  EXPECT_TRUE(r.positive());
  EXPECT_EQ(r.bound_used, "winter");
  EXPECT_EQ(r.epsilon_method, EpsilonMethod::kClosedForm);
}

TEST(KeyRate, AssemblyInvariant) {
  for (double q : {0.0, 0.01, 0.05, 0.2}) {
    for (int d : {2, 3, 7}) {
      KeyRateReport r = KeyRate(Config(d), q);
      EXPECT_NEAR(r.key_rate, std::log2(d) - r.delta_bound - r.hbx_term - r.leak_ec, 1e-12);
      EXPECT_GE(r.epsilon, 0.0);
      EXPECT_LE(r.epsilon, 1.0);
    }
  }
}

TEST(KeyRate, FinalRateClosedForm) {
  for (int d : {2, 3, 5, 9}) {
    for (double q : {0.01, 0.03, 0.06}) {
      const double e = EpsilonDepolarizing(d, q).epsilon;
      const double want = std::log2(d) - 2 * q * std::log2(d - 1.0) - 2 * BinaryEntropy(q) -
                          e * std::log2(d) - (1 + e) * BinaryEntropy(e / (1 + e));
      EXPECT_NEAR(KeyRate(Config(d), q).key_rate, want, 1e-12);
    }
  }
}

TEST(KeyRate, LemmaBoundRate) {
  for (double q : {0.0, 0.01, 0.02, 0.1, 0.1464}) {
    KeyRateReport r = KeyRate(Config(2, Mode::kFull, BoundChoice::kLemmaD2), q);
    const double want =
        1 - 2 * BinaryEntropy(q) - BinaryEntropy(1 - q - std::sqrt(q * (1 - q)));
    EXPECT_NEAR(r.key_rate, want, 1e-12);
    EXPECT_EQ(r.bound_used, "lemma_d2");
  }
}

TEST(KeyRate, LemmaOutsideDomainIsNotApplicable) {
  EXPECT_THROW(KeyRate(Config(2, Mode::kFull, BoundChoice::kLemmaD2), 0.2),
               BoundNotApplicableError);
}

TEST(KeyRate, BestTakesTheSmallerPenalty) {
  for (double q : {0.005, 0.02, 0.1, 0.14, 0.3}) {
    const KeyRateReport best = KeyRate(Config(2, Mode::kFull, BoundChoice::kBest), q);
    const KeyRateReport winter = KeyRate(Config(2), q);
    EXPECT_GE(best.key_rate, winter.key_rate);
    if (q <= kLemmaQMax) {
      const KeyRateReport lemma = KeyRate(Config(2, Mode::kFull, BoundChoice::kLemmaD2), q);
      EXPECT_NEAR(best.key_rate, std::max(winter.key_rate, lemma.key_rate), 1e-15);
    } else {
      EXPECT_EQ(best.bound_used, "winter");
    }
  }
  EXPECT_EQ(KeyRate(Config(4, Mode::kFull, BoundChoice::kBest), 0.01).bound_used, "winter");
}

TEST(KeyRate, InvalidNoise) {
  EXPECT_THROW(KeyRate(Config(2), 0.5), std::invalid_argument);
  EXPECT_THROW(KeyRate(Config(3, Mode::kFull, BoundChoice::kWinter,
                              ChannelFamily::kAmplitudeDamping),
                       1.2),
               std::invalid_argument);
}

TEST(KeyRate, ModesAgreeUnderDepolarizing) {
  for (int d = 2; d <= 12; ++d) {
    for (int i = 0; i < 40; ++i) {
      const double q = (1.0 - 1.0 / d) * i / 40.0;
      EXPECT_NEAR(KeyRate(Config(d, Mode::kFull), q).key_rate,
                  KeyRate(Config(d, Mode::kPartial), q).key_rate, 1e-10);
    }
  }
}

TEST(KeyRate, LemmaDominatesWinterAtDimensionTwo) {
  for (int i = 1; i <= 200; ++i) {
    const double q = kLemmaQMax * i / 200.0;
    EXPECT_GE(KeyRate(Config(2, Mode::kFull, BoundChoice::kLemmaD2), q).key_rate,
              KeyRate(Config(2), q).key_rate);
  }
}

TEST(ImprovedKeyRateD2, Values) {
  EXPECT_EQ(ImprovedKeyRateD2(0.0), 1.0);
  EXPECT_NEAR(ImprovedKeyRateD2(0.0239), 0.0017127279818281993, 1e-12);
  EXPECT_NEAR(ImprovedKeyRateD2(0.0245), -0.010115768097799238, 1e-12);
  EXPECT_THROW(ImprovedKeyRateD2(0.2), std::invalid_argument);
  EXPECT_THROW(ImprovedKeyRateD2(-0.1), std::invalid_argument);
}

TEST(NoiseTolerance, DepolarizingReferenceValues) {
  // Bisection limits from an independent evaluation of the same rate.
  EXPECT_NEAR(NoiseTolerance(Config(2)).noise, 0.0186071, 1e-6);
  EXPECT_NEAR(NoiseTolerance(Config(3)).noise, 0.0354571, 1e-6);
  EXPECT_NEAR(NoiseTolerance(Config(6)).noise, 0.0617371, 1e-6);
  EXPECT_NEAR(NoiseTolerance(Config(9)).noise, 0.0748553, 1e-6);
  EXPECT_NEAR(NoiseTolerance(Config(2, Mode::kFull, BoundChoice::kLemmaD2)).noise, 0.0239864,
              1e-6);
}

TEST(NoiseTolerance, BracketAndFlags) {
  ToleranceResult t = NoiseTolerance(Config(4));
  EXPECT_TRUE(t.ok());
  EXPECT_FALSE(t.multiple_crossings);
  EXPECT_LT(t.bracket_hi - t.bracket_lo, kToleranceResolution);
  EXPECT_GT(KeyRate(Config(4), t.bracket_lo).key_rate, 0.0);
  EXPECT_LE(KeyRate(Config(4), t.bracket_hi).key_rate, 0.0);
}

TEST(NoiseTolerance, IncreasesWithDimension) {
  double prev = 0.0;
  for (int d = 2; d <= 20; ++d) {
    const double t = NoiseTolerance(Config(d)).noise;
    EXPECT_GT(t, prev) << "D=" << d;
    prev = t;
  }
}

TEST(NoiseTolerance, AmplitudeDampingModes) {
  const double full4 = NoiseTolerance(
      Config(4, Mode::kFull, BoundChoice::kWinter, ChannelFamily::kAmplitudeDamping)).noise;
  EXPECT_NEAR(full4, 0.12365691, 1e-7);
  for (int d : {4, 8, 12}) {
    const double full = NoiseTolerance(Config(d, Mode::kFull, BoundChoice::kWinter,
                                              ChannelFamily::kAmplitudeDamping)).noise;
    const double partial = NoiseTolerance(Config(d, Mode::kPartial, BoundChoice::kWinter,
                                                 ChannelFamily::kAmplitudeDamping)).noise;
    EXPECT_GE(full, partial - kToleranceResolution) << "D=" << d;
  }
}

TEST(NoiseTolerance, CustomFactoryMatchesBuiltInFamily) {
  ProtocolConfig cfg = Config(3, Mode::kFull, BoundChoice::kWinter, ChannelFamily::kCustom);
  cfg.custom = [](double q) { return ChannelFromKraus(DepolarizingKraus(3, q)); };
  cfg.custom_noise_limit = 0.5;
  EXPECT_NEAR(NoiseTolerance(cfg).noise, NoiseTolerance(Config(3)).noise, 1e-8);
}

TEST(NoiseTolerance, ReportsMissingRootsThroughFlags) {
  ProtocolConfig never = Config(2, Mode::kFull, BoundChoice::kWinter, ChannelFamily::kCustom);
  never.custom = [](double) { return DepolarizingChannel(2, 0.3); };
  never.custom_noise_limit = 0.1;
  ToleranceResult a = NoiseTolerance(never);
  EXPECT_TRUE(a.no_positive_rate);
  EXPECT_EQ(a.noise, 0.0);

  ProtocolConfig always = never;
  always.custom = [](double) { return DepolarizingChannel(2, 0.0); };
  ToleranceResult b = NoiseTolerance(always);
  EXPECT_TRUE(b.no_crossing);
  EXPECT_FALSE(b.ok());

  ProtocolConfig fixed = never;
  fixed.custom_noise_limit = 0.0;
  EXPECT_THROW(NoiseTolerance(fixed), std::invalid_argument);
}

TEST(NoiseTolerance, FlagsMultipleCrossings) {
  ProtocolConfig cfg = Config(2, Mode::kFull, BoundChoice::kWinter, ChannelFamily::kCustom);
  cfg.custom = [](double x) {
    return DepolarizingChannel(2, (x > 0.05 && x < 0.1) || x > 0.15 ? 0.3 : 0.0);
  };
  cfg.custom_noise_limit = 0.2;
  ToleranceResult t = NoiseTolerance(cfg);
  EXPECT_TRUE(t.multiple_crossings);
  EXPECT_NEAR(t.noise, 0.05, 1e-8);
}

TEST(Sweep, PreservesOrderAndCollectsErrors) {
  const std::vector<double> grid = {0.0, 0.01, 0.9, 0.02};
  std::vector<SweepPoint> points = Sweep(Config(2), grid);
  ASSERT_EQ(points.size(), 4u);
  for (std::size_t i = 0; i < grid.size(); ++i) EXPECT_EQ(points[i].noise, grid[i]);
  ASSERT_TRUE(points[0].report.has_value());
  EXPECT_EQ(points[0].report->key_rate, 1.0);
  EXPECT_FALSE(points[2].report.has_value());
  EXPECT_FALSE(points[2].error.empty());
  EXPECT_GT(points[1].report->key_rate, points[3].report->key_rate);
}

}  // namespace
}  // namespace qkdkr
