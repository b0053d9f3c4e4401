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


#ifndef QKDKR_BOUNDS_H_
#define QKDKR_BOUNDS_H_

#include <array>
#include <span>
#include <string_view>
#include <vector>

namespace qkdkr {

enum class DeltaBoundKind { kWinter, kLemmaD2, kWildeConjecture };

std::string_view ToString(DeltaBoundKind kind);

// Upper bound on |H(B^Z|E)_rho - H(B^Z|E)_sigma| in bits. Callers must fall
// back to the Winter bound when `applicable` is false.
struct DeltaBound {
  double value = 0.0;
  DeltaBoundKind kind = DeltaBoundKind::kWinter;
  bool applicable = false;
};

// Largest q for which the qubit lemma bound is used.
inline constexpr double kLemmaQMax = 0.1464;

// eps log2(D) + (1 + eps) h(eps / (1 + eps)). Throws std::invalid_argument for
// eps outside [0, 1] or D < 2.
DeltaBound WinterDeltaBound(double epsilon, int dim);

// h(1 - q - sqrt(q (1 - q))), applicable for 0 <= q <= kLemmaQMax. Outside
// [0, 1/2] the value is reported as NaN (the argument leaves [0, 1]).
DeltaBound LemmaDeltaBound(double q);

// eps log2(D_B - 1) + h(eps). Plot only; never applicable.
DeltaBound WildeConjectureCurve(double epsilon, int dim_b);

// Numeric check of the three inequalities behind the qubit lemma.
//   (i)   H(1-s, s-q, q/2, q/2) - h(q)
//           >= H((1-q)/2, (1-q)/2, q/2, q/2) - h(q) - h((1-q)/2 - s)
//   (ii)  h(1-q-s) >= H(1-s, s-q, q/2, q/2) - h(q)
//   (iii) h(1-q-s) >= 1 + h(q) - h(1/2 + s)
// with s = sqrt(q (1 - q)). margin = lhs - rhs; NaN when an entropy argument
// leaves its domain (counted as a failure).
struct LemmaSupportRow {
  double q = 0.0;
  std::array<double, 3> margin{};
  std::array<bool, 3> pass{};
};

struct LemmaSupportReport {
  std::vector<LemmaSupportRow> rows;
  bool AllPass() const;
  // Number of failures of inequality k (0-based).
  std::size_t Failures(int k) const;
};

inline constexpr double kLemmaSupportSlack = 1e-12;

// Grid values must lie in (0, kLemmaQMax]; with diagnostic = true the range is
// widened to (0, 1/2] so the tightness of the range can be probed. Throws
// std::invalid_argument otherwise.
LemmaSupportReport VerifyLemmaSupport(std::span<const double> q_grid,
                                      bool diagnostic = false);

}  // namespace qkdkr

#endif  // QKDKR_BOUNDS_H_
