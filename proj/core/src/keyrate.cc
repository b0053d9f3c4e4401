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
#include <string>

#include "qkdkr/bounds.h"
#include "qkdkr/parallel.h"

namespace qkdkr {

std::string_view ToString(Mode mode) { return mode == Mode::kFull ? "full" : "partial"; }

std::string_view ToString(BoundChoice bound) {
  switch (bound) {
    case BoundChoice::kWinter:
      return "winter";
    case BoundChoice::kLemmaD2:
      return "lemma_d2";
    case BoundChoice::kBest:
      return "best";
  }
  return "unknown";
}

void ProtocolConfig::Validate() const {
  if (dim < 2) throw std::invalid_argument("ProtocolConfig: dim must be >= 2");
  if (bound == BoundChoice::kLemmaD2 &&
      (dim != 2 || family != ChannelFamily::kDepolarizing)) {
    throw std::invalid_argument(
        "ProtocolConfig: the lemma bound requires dim 2 and a depolarizing channel");
  }
  if (family == ChannelFamily::kCustom && !custom) {
    throw std::invalid_argument("ProtocolConfig: custom family needs a channel factory");
  }
}

ChannelModel ProtocolConfig::Channel(double noise) const {
  switch (family) {
    case ChannelFamily::kDepolarizing:
      return DepolarizingChannel(dim, noise);
    case ChannelFamily::kAmplitudeDamping:
      return AmplitudeDampingChannel(dim, noise);
    case ChannelFamily::kCustom: {
      ChannelModel c = custom(noise);
      if (c.dim() != dim) {
        throw std::invalid_argument("ProtocolConfig: custom channel has dim " +
                                    std::to_string(c.dim()) + ", config says " +
                                    std::to_string(dim));
      }
      return c;
    }
  }
  throw std::invalid_argument("ProtocolConfig: unknown family");
}

double ProtocolConfig::NoiseLimit() const {
  switch (family) {
    case ChannelFamily::kDepolarizing:
      return 1.0 - 1.0 / dim;
    case ChannelFamily::kAmplitudeDamping:
      return 1.0;
    case ChannelFamily::kCustom:
      return custom_noise_limit;
  }
  return 0.0;
}

bool ProtocolConfig::NoiseLimitInclusive() const {
  return family != ChannelFamily::kDepolarizing;
}

double LeakEc(const ChannelModel& channel) {
  double total = 0.0;
  for (int a = 0; a < channel.dim(); ++a) total += ShannonEntropy(channel.Column(a));
  return total / channel.dim();
}

double HbxFull(const ChannelModel& channel) { return ShannonEntropy(channel.x_dist()); }

double HbxPartial(const ChannelModel& channel) {
  return DAryEntropy(channel.q_x(), channel.dim()) * std::log2(channel.dim());
}

KeyRateReport KeyRate(const ProtocolConfig& cfg, const ChannelModel& channel,
                      double noise) {
  cfg.Validate();
  if (channel.dim() != cfg.dim) {
    throw std::invalid_argument("KeyRate: channel dimension does not match config");
  }
  KeyRateReport r;
  r.noise = noise;
  const EpsilonResult eps = Epsilon(channel);
  r.epsilon = eps.epsilon;
  r.epsilon_method = eps.method;

  const DeltaBound winter = WinterDeltaBound(eps.epsilon, cfg.dim);
  const bool lemma_family = cfg.dim == 2 && cfg.family == ChannelFamily::kDepolarizing;
  switch (cfg.bound) {
    case BoundChoice::kWinter:
      r.delta_bound = winter.value;
      r.bound_used = "winter";
      break;
    case BoundChoice::kLemmaD2: {
      const DeltaBound lemma = LemmaDeltaBound(noise);
      if (!lemma.applicable) {
        throw BoundNotApplicableError("bound not applicable: lemma_d2 requires 0 <= q <= " +
                                      std::to_string(kLemmaQMax) + ", got q = " +
                                      std::to_string(noise));
      }
      r.delta_bound = lemma.value;
      r.bound_used = "lemma_d2";
      break;
    }
    case BoundChoice::kBest: {
      r.delta_bound = winter.value;
      r.bound_used = "winter";
      if (lemma_family) {
        const DeltaBound lemma = LemmaDeltaBound(noise);
        if (lemma.applicable && lemma.value < winter.value) {
          r.delta_bound = lemma.value;
          r.bound_used = "lemma_d2";
        }
      }
      break;
    }
  }

  r.hbx_term = cfg.mode == Mode::kFull ? HbxFull(channel) : HbxPartial(channel);
  r.leak_ec = LeakEc(channel);
  r.key_rate = std::log2(cfg.dim) - r.delta_bound - r.hbx_term - r.leak_ec;
  return r;
}

KeyRateReport KeyRate(const ProtocolConfig& cfg, double noise) {
  cfg.Validate();
  return KeyRate(cfg, cfg.Channel(noise), noise);
}

double ImprovedKeyRateD2(double q) {
  if (!(q >= 0.0 && q <= kLemmaQMax)) {
    throw std::invalid_argument("ImprovedKeyRateD2: q = " + std::to_string(q) +
                                " outside [0, " + std::to_string(kLemmaQMax) + "]");
  }
  return 1.0 - 2.0 * BinaryEntropy(q) - LemmaDeltaBound(q).value;
}

ToleranceResult NoiseTolerance(const ProtocolConfig& cfg) {
  cfg.Validate();
  double limit = cfg.NoiseLimit();
  bool inclusive = cfg.NoiseLimitInclusive();
  if (cfg.bound == BoundChoice::kLemmaD2) {
    limit = kLemmaQMax;
    inclusive = true;
  }
  if (!(limit > 0.0)) {
    throw std::invalid_argument("NoiseTolerance: channel family has no noise range to scan");
  }

  ToleranceResult out;
  auto rate = [&](double noise) {
    ++out.evaluations;
    return KeyRate(cfg, noise).key_rate;
  };

  std::vector<double> grid;
  for (long i = 0;; ++i) {
    const double x = static_cast<double>(i) * kToleranceScanStep;
    if (x > limit || (!inclusive && x >= limit)) break;
    grid.push_back(x);
  }
  if (inclusive && grid.back() < limit) grid.push_back(limit);

  std::vector<double> values;
  values.reserve(grid.size());
  for (double x : grid) values.push_back(rate(x));

  std::size_t first = grid.size();
  bool any_positive = false;
  int sign_changes = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (values[i] > 0.0) any_positive = true;
    if (i > 0 && (values[i - 1] > 0.0) != (values[i] > 0.0)) {
      ++sign_changes;
      if (first == grid.size() && values[i - 1] > 0.0) first = i;
    }
  }
  if (!any_positive) {
    out.no_positive_rate = true;
    out.noise = 0.0;
    return out;
  }
  if (first == grid.size()) {
    out.no_crossing = true;
    out.noise = grid.back();
    out.bracket_lo = out.bracket_hi = grid.back();
    return out;
  }
  out.multiple_crossings = sign_changes > 1;

  double lo = grid[first - 1];
  double hi = grid[first];
  while (hi - lo >= kToleranceResolution) {
    const double mid = 0.5 * (lo + hi);
    if (rate(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  out.bracket_lo = lo;
  out.bracket_hi = hi;
  out.noise = 0.5 * (lo + hi);
  return out;
}

std::vector<SweepPoint> Sweep(const ProtocolConfig& cfg, std::span<const double> noise_grid) {
  cfg.Validate();
  std::vector<SweepPoint> points(noise_grid.size());
  ParallelFor(noise_grid.size(), [&](std::size_t i) {
    SweepPoint& p = points[i];
    p.noise = noise_grid[i];
    try {
      p.report = KeyRate(cfg, p.noise);
    } catch (const std::exception& e) {
      p.error = e.what();
    }
  });
  return points;
}

}  // namespace qkdkr
