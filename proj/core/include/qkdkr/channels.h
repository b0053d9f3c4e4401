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

#ifndef QKDKR_CHANNELS_H_
#define QKDKR_CHANNELS_H_

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qkdkr/numerics.h"

namespace qkdkr {

enum class ChannelFamily { kDepolarizing, kAmplitudeDamping, kCustom };

std::string_view ToString(ChannelFamily family);

// Phase convention of the X (Fourier) basis |x_a> = F|a>.
//   kStandard:  exp(-2 pi i a b / D) / sqrt(D)
//   kHalfPhase: exp(-pi i a b / D) / sqrt(D). Not orthonormal for D >= 2;
//               kept for comparison only, ChannelModel validation rejects the
//               statistics it produces.
enum class FourierConvention { kStandard, kHalfPhase };

inline constexpr FourierConvention kDefaultFourierConvention =
    FourierConvention::kStandard;

// Column a is |x_a>.
Matrix FourierBasis(int dim, FourierConvention convention = kDefaultFourierConvention);

// Channel statistics seen by the protocol: Z-basis conditionals p(b|a) and the
// X-basis outcome distribution for input |x_0>.
class ChannelModel {
 public:
  // z_cond[b][a] = p(b|a). Validates every invariant; throws
  // std::invalid_argument with the offending field on failure.
  ChannelModel(int dim, std::vector<std::vector<double>> z_cond,
               std::vector<double> x_dist, std::string label,
               ChannelFamily family = ChannelFamily::kCustom);

  int dim() const { return dim_; }
  // p(b|a)
  double p(int b, int a) const { return z_cond_[b][a]; }
  const std::vector<std::vector<double>>& z_cond() const { return z_cond_; }
  std::vector<double> Column(int a) const;
  const ProbabilityDistribution& x_dist() const { return x_dist_; }
  // 1 - x_dist[0]
  double q_x() const { return q_x_; }
  const std::string& label() const { return label_; }
  ChannelFamily family() const { return family_; }

  // Largest deviation of z_cond from the pattern p(a|a) = 1 - q,
  // p(b|a) = q / (D - 1), with q taken from p(0|0).
  double SymmetryDeviation() const;

  // Largest entrywise difference in z_cond and x_dist.
  double MaxDifference(const ChannelModel& other) const;

 private:
  int dim_;
  std::vector<std::vector<double>> z_cond_;
  ProbabilityDistribution x_dist_;
  double q_x_;
  std::string label_;
  ChannelFamily family_;
};

// Kraus representation of a channel; sum_i E_i^dagger E_i = I within kTol.
class KrausSet {
 public:
  // Throws std::invalid_argument on empty input, mixed dimensions or a
  // completeness violation.
  explicit KrausSet(std::vector<Matrix> operators);

  int dim() const { return static_cast<int>(operators_.front().dim()); }
  const std::vector<Matrix>& operators() const { return operators_; }

  // max |(sum_i E_i^dagger E_i - I)_{rc}|
  double CompletenessDefect() const;

 private:
  std::vector<Matrix> operators_;
};

// sum_i E_i rho E_i^dagger. Throws std::invalid_argument on dimension mismatch.
HermitianMatrix ApplyChannel(const KrausSet& kraus, const HermitianMatrix& rho);

// Requires 0 <= q < 1 - 1/D.
ChannelModel DepolarizingChannel(int dim, double q);

// Kraus operators listed for the qudit amplitude-damping channel:
// E_0 = diag(1, sqrt(1-p), ..., sqrt(1-p)), E_k = sqrt(p) |0><k| for k >= 1.
KrausSet AmplitudeDampingKraus(int dim, double p);
ChannelModel AmplitudeDampingChannel(int dim, double p);

// Weyl-operator Kraus form of the depolarizing map
// rho -> (1 - D q / (D - 1)) rho + q / (D - 1) I.
KrausSet DepolarizingKraus(int dim, double q);

// z_cond[b][a] = <b| E(|a><a|) |b>, x_dist[i] = <x_i| E(|x_0><x_0|) |x_i>.
ChannelModel ChannelFromKraus(const KrausSet& kraus, std::string label = "custom",
                              ChannelFamily family = ChannelFamily::kCustom,
                              FourierConvention convention = kDefaultFourierConvention);

// Error raised by the channel-file reader; what() names the field or the
// parse position.
class ChannelFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Channel file: a JSON document
//   {"dim": D, "z_cond": [[...]], "x_dist": [...], "label": "..."}
// or
//   {"dim": D, "kraus": [ [[[re, im], ...], ...], ... ], "label": "..."}
// z_cond rows are indexed by Bob's outcome b, columns by Alice's input a.
ChannelModel ParseChannelDocument(std::string_view text);
ChannelModel LoadChannelFile(const std::filesystem::path& path);

// Serializes in the z_cond + x_dist form.
std::string ChannelToDocument(const ChannelModel& channel);
// Serializes a Kraus set in the kraus form.
std::string KrausToDocument(const KrausSet& kraus, std::string_view label);

}  // namespace qkdkr

#endif  // QKDKR_CHANNELS_H_
