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

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "qkdkr/numerics.h"

namespace qkdkr {

std::string_view ToString(DeltaBoundKind kind) {
  switch (kind) {
    case DeltaBoundKind::kWinter:
      return "winter";
    case DeltaBoundKind::kLemmaD2:
      return "lemma_d2";
    case DeltaBoundKind::kWildeConjecture:
      return "wilde_conjecture";
  }
  return "unknown";
}

namespace {

void CheckEpsilon(double epsilon, const char* who) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument(std::string(who) + ": epsilon = " +
                                std::to_string(epsilon) + " outside [0, 1]");
  }
}

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

DeltaBound WinterDeltaBound(double epsilon, int dim) {
  CheckEpsilon(epsilon, "WinterDeltaBound");
  if (dim < 2) throw std::invalid_argument("WinterDeltaBound: dim must be >= 2");
  const double value =
      epsilon * std::log2(dim) + (1.0 + epsilon) * BinaryEntropy(epsilon / (1.0 + epsilon));
  return {value, DeltaBoundKind::kWinter, true};
}

DeltaBound LemmaDeltaBound(double q) {
  DeltaBound r{kNaN, DeltaBoundKind::kLemmaD2, q >= 0.0 && q <= kLemmaQMax};
  if (q >= 0.0 && q <= 0.5) {
    const double x = 1.0 - q - std::sqrt(q * (1.0 - q));
    r.value = BinaryEntropy(std::max(0.0, x));
  }
  return r;
}

DeltaBound WildeConjectureCurve(double epsilon, int dim_b) {
  CheckEpsilon(epsilon, "WildeConjectureCurve");
  if (dim_b < 2) throw std::invalid_argument("WildeConjectureCurve: dim must be >= 2");
  return {epsilon * std::log2(dim_b - 1) + BinaryEntropy(epsilon),
          DeltaBoundKind::kWildeConjecture, false};
}

bool LemmaSupportReport::AllPass() const {
  for (const LemmaSupportRow& r : rows) {
    if (!(r.pass[0] && r.pass[1] && r.pass[2])) return false;
  }
  return true;
}

std::size_t LemmaSupportReport::Failures(int k) const {
  std::size_t n = 0;
  for (const LemmaSupportRow& r : rows) n += r.pass[k] ? 0 : 1;
  return n;
}

namespace {

double H4(double a, double b, double c, double d) {
  const double p[] = {a, b, c, d};
  return ShannonEntropy(std::span<const double>(p));
}

template <typename F>
double Margin(F f) {
  try {
    return f();
  } catch (const std::domain_error&) {
    return kNaN;
  } catch (const std::invalid_argument&) {
    return kNaN;
  }
}

}  // namespace

LemmaSupportReport VerifyLemmaSupport(std::span<const double> q_grid, bool diagnostic) {
  const double q_max = diagnostic ? 0.5 : kLemmaQMax;
  LemmaSupportReport report;
  report.rows.reserve(q_grid.size());
  for (double q : q_grid) {
    if (!(q > 0.0 && q <= q_max)) {
      throw std::invalid_argument("VerifyLemmaSupport: q = " + std::to_string(q) +
                                  " outside (0, " + std::to_string(q_max) + "]");
    }
    const double s = std::sqrt(q * (1.0 - q));
    const double hq = BinaryEntropy(q);
    LemmaSupportRow row;
    row.q = q;
    row.margin[0] = Margin([&] {
      return (H4(1.0 - s, s - q, q / 2, q / 2) - hq) -
             (H4((1.0 - q) / 2, (1.0 - q) / 2, q / 2, q / 2) - hq -
              BinaryEntropy((1.0 - q) / 2 - s));
    });
    row.margin[1] = Margin([&] {
      return BinaryEntropy(1.0 - q - s) - (H4(1.0 - s, s - q, q / 2, q / 2) - hq);
    });
    row.margin[2] = Margin([&] {
      return BinaryEntropy(1.0 - q - s) - (1.0 + hq - BinaryEntropy(0.5 + s));
    });
    for (int k = 0; k < 3; ++k) row.pass[k] = row.margin[k] >= -kLemmaSupportSlack;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace qkdkr
