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


#ifndef QKDKR_KEYRATE_H_
#define QKDKR_KEYRATE_H_

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qkdkr/channels.h"
#include "qkdkr/tracedist.h"

namespace qkdkr {

// FULL: Bob measures the whole X basis. PARTIAL: only {|x0><x0|, I - |x0><x0|}.
enum class Mode { kFull, kPartial };
enum class BoundChoice { kWinter, kLemmaD2, kBest };

std::string_view ToString(Mode mode);
std::string_view ToString(BoundChoice bound);

using ChannelFactory = std::function<ChannelModel(double noise)>;

struct ProtocolConfig {
  int dim = 2;
  Mode mode = Mode::kFull;
  BoundChoice bound = BoundChoice::kWinter;
  ChannelFamily family = ChannelFamily::kDepolarizing;
  // Used when family == kCustom.
  ChannelFactory custom;
  // Upper end of the noise range scanned for custom channels; 0 disables
  // tolerance search for them.
  double custom_noise_limit = 0.0;

  // Throws std::invalid_argument: dim < 2, lemma bound outside D = 2
  // depolarizing, custom family without a factory.
  void Validate() const;

  // Builds the channel for `noise` (q for depolarizing, p for amplitude
  // damping). Throws std::invalid_argument for noise out of range.
  ChannelModel Channel(double noise) const;

  // Largest admissible noise and whether it is itself admissible.
  double NoiseLimit() const;
  bool NoiseLimitInclusive() const;
};

struct KeyRateReport {
  double noise = 0.0;
  double epsilon = 0.0;
  double delta_bound = 0.0;
  double hbx_term = 0.0;
  double leak_ec = 0.0;
  // log2 D - delta_bound - hbx_term - leak_ec, bits per sifted signal.
  double key_rate = 0.0;
  std::string bound_used;
  EpsilonMethod epsilon_method = EpsilonMethod::kGeneral;
  bool positive() const { return key_rate > 0.0; }
};

class BoundNotApplicableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// H(B^Z | A^Z) for uniform input: (1/D) sum_a H(column a).
double LeakEc(const ChannelModel& channel);
// H(B^X): Shannon entropy of x_dist.
double HbxFull(const ChannelModel& channel);
// H_D(q_x) log2 D.
double HbxPartial(const ChannelModel& channel);

KeyRateReport KeyRate(const ProtocolConfig& cfg, double noise);
// Same assembly for an already built channel; `noise` is only recorded.
KeyRateReport KeyRate(const ProtocolConfig& cfg, const ChannelModel& channel,
                      double noise);

// 1 - 2 h(q) - h(1 - q - sqrt(q (1 - q))), q in [0, kLemmaQMax].
double ImprovedKeyRateD2(double q);

inline constexpr double kToleranceScanStep = 1e-3;
inline constexpr double kToleranceResolution = 1e-9;

struct ToleranceResult {
  // Midpoint of the final bracket around the first sign change; 0 when
  // no_positive_rate, the scanned limit when no_crossing.
  double noise = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  bool no_positive_rate = false;
  bool no_crossing = false;
  bool multiple_crossings = false;
  int evaluations = 0;
  bool ok() const { return !no_positive_rate && !no_crossing; }
};

// Coarse scan at kToleranceScanStep from 0 to the noise limit (kLemmaQMax for
// the lemma bound), then bisection on the first bracket. The scan runs to the
// end so that later sign changes set multiple_crossings.
ToleranceResult NoiseTolerance(const ProtocolConfig& cfg);

struct SweepPoint {
  double noise = 0.0;
  std::optional<KeyRateReport> report;
  std::string error;
};

// One entry per grid value, in grid order; failures are recorded per point.
std::vector<SweepPoint> Sweep(const ProtocolConfig& cfg, std::span<const double> noise_grid);

}  // namespace qkdkr

#endif  // QKDKR_KEYRATE_H_
