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


#ifndef QKDKR_TRACEDIST_H_
#define QKDKR_TRACEDIST_H_

#include <string_view>
#include <vector>

#include "qkdkr/channels.h"
#include "qkdkr/numerics.h"

namespace qkdkr {

enum class EpsilonMethod { kClosedForm, kGeneral };

std::string_view ToString(EpsilonMethod method);

// Trace distance between the key-round state and the test-round state, as
// (1 / 2D) sum_b ||X_b||_1, clamped to [0, 1].
struct EpsilonResult {
  double epsilon = 0.0;
  std::vector<double> per_b_trace_norms;
  EpsilonMethod method = EpsilonMethod::kGeneral;
};

// Symmetric-noise closed form. Requires D >= 2 and 0 <= q < 1 - 1/D.
EpsilonResult EpsilonDepolarizing(int dim, double q);

// X_b = sum_{a != a'} sqrt(p(b|a) p(b|a')) |a><a'|
HermitianMatrix XbMatrix(const ChannelModel& channel, int b);

// Sums ||X_b||_1 from the eigenvalues of each X_b.
EpsilonResult EpsilonGeneral(const ChannelModel& channel);

// Closed form when the channel is labelled depolarizing and its z_cond matches
// the symmetric pattern within kSymmetryTol; EpsilonGeneral otherwise.
inline constexpr double kSymmetryTol = 1e-12;
EpsilonResult Epsilon(const ChannelModel& channel);

}  // namespace qkdkr

#endif  // QKDKR_TRACEDIST_H_
