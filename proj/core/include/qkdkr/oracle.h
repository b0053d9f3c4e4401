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


#ifndef QKDKR_ORACLE_H_
#define QKDKR_ORACLE_H_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qkdkr/channels.h"
#include "qkdkr/numerics.h"

namespace qkdkr {

// kRandom: per-b orthonormal frames from seeded complex Gaussians.
// kAligned: f_b^a = |(a - b) mod D>, which saturates the operator-norm bound.
enum class AttackMode { kRandom, kAligned };

// Eve's states e_b^a = sqrt(p(b|a)) f_b^a in C^{D^2}, where {f_b^a}_a is an
// orthonormal frame for each b. Cross-a overlaps vanish by construction;
// cross-b overlaps are left to the frames.
class AttackInstance {
 public:
  AttackInstance(ChannelModel channel, std::vector<std::vector<Complex>> vectors);

  int dim() const { return channel_.dim(); }
  int eve_dim() const { return dim() * dim(); }
  const ChannelModel& channel() const { return channel_; }
  // e_b^a
  const std::vector<Complex>& e(int a, int b) const {
    return vectors_[static_cast<std::size_t>(a) * dim() + b];
  }

  // Largest violation of <e_b^a|e_b^a> = p(b|a), <e_b^a|e_b^a'> = 0 (a != a')
  // and sum_b <e_b^a|e_b^a> = 1.
  double InvariantDefect() const;

 private:
  ChannelModel channel_;
  std::vector<std::vector<Complex>> vectors_;  // index a * D + b
};

AttackInstance BuildAttack(const ChannelModel& channel, std::uint64_t seed,
                           AttackMode mode = AttackMode::kRandom);

// Independent 64-bit seed for trial `index` of a run seeded with `master`.
std::uint64_t TrialSeed(std::uint64_t master, std::uint64_t index);

// Random Hermitian n x n matrix with complex Gaussian entries.
HermitianMatrix RandomHermitian(int n, std::uint64_t seed);

// Blocks of the B^Z E states for a fixed Bob outcome b (dimension D^2).
//   rho:   (1/D) sum_a |e_b^a><e_b^a|
//   sigma: (1/D) (sum_a e_b^a)(sum_a' e_b^a')^dagger
HermitianMatrix RhoBlock(const AttackInstance& att, int b);
HermitianMatrix SigmaBlock(const AttackInstance& att, int b);

// Full D^3 x D^3 states, block diagonal in b.
HermitianMatrix RhoBze(const AttackInstance& att);
HermitianMatrix SigmaBze(const AttackInstance& att);

// Tr_B of a state on B (dim b_dim) tensor E: the sum of its diagonal blocks.
HermitianMatrix PartialTraceB(const HermitianMatrix& state, int b_dim);

// H(BE) - H(E) in bits.
double ExactConditionalEntropy(const HermitianMatrix& state, int b_dim);

// |H(B^Z|E)_rho - H(B^Z|E)_sigma|
double ExactDelta(const AttackInstance& att);

// Trace distance between SigmaBze and RhoBze.
double ExactEpsilon(const AttackInstance& att);

// Delta_E = (1/D) sum_b sum_{a != a'} |e_b^a><e_b^a'|
HermitianMatrix DeltaE(const AttackInstance& att);

// ||Delta_E||_op. Requires a D = 2 depolarizing attack, else throws
// std::invalid_argument.
double DeltaEOpnorm(const AttackInstance& att);

// Largest second eigenvalue over the sigma blocks (zero for rank-1 blocks).
double SigmaBlockRankDefect(const AttackInstance& att);

struct SpectralRangeReport {
  double q = 0.0;
  std::array<double, 4> gamma{};
  std::array<double, 4> lower{};
  std::array<double, 4> upper{};
  bool pass = false;
  std::string Describe() const;
};

// Spectrum of rho_E against
//   (1-q)/2 <= g1 <= 1-q, q/2 <= g2 <= 1/2, 0 <= g3 <= q, 0 <= g4 <= q/2
// within kTol. Requires a D = 2 depolarizing attack.
SpectralRangeReport SpectralRangeCheck(const AttackInstance& att);

// sum_{k in K} gamma_k <= sum_{i in I} alpha_i + sum_{j in J} beta_j (upper),
// or >= (lower). Indices are 1-based as in the usual statement.
struct HornInequality {
  std::vector<int> k;
  std::vector<int> i;
  std::vector<int> j;
  bool upper = true;
};

struct HornInequalitySet {
  int n = 4;
  std::vector<HornInequality> inequalities;

  // The n = 4 list: 10 + 21 + 10 upper inequalities (r = 1, 2, 3) and their
  // complements as lower inequalities.
  static const HornInequalitySet& N4();
  std::size_t Count(int r, bool upper) const;
};

struct HornReport {
  // |sum gamma - sum alpha - sum beta|
  double trace_defect = 0.0;
  // Non-negative when the inequality holds; same order as N4().inequalities.
  std::vector<double> margins;
  double MinMargin() const;
  bool Pass(double tol = kTol) const;
};

// Throws std::invalid_argument unless all three spectra have length 4.
HornReport HornCheck(const Spectrum& alpha, const Spectrum& beta, const Spectrum& gamma);

}  // namespace qkdkr

#endif  // QKDKR_ORACLE_H_
