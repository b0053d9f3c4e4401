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


#include "qkdkr/tracedist.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qkdkr/parallel.h"

namespace qkdkr {

std::string_view ToString(EpsilonMethod method) {
  return method == EpsilonMethod::kClosedForm ? "closed_form" : "general";
}

namespace {

EpsilonResult Finish(std::vector<double> norms, EpsilonMethod method) {
  double total = 0.0;
  for (double n : norms) total += n;
  EpsilonResult r;
  r.epsilon = std::clamp(total / (2.0 * static_cast<double>(norms.size())), 0.0, 1.0);
  r.per_b_trace_norms = std::move(norms);
  r.method = method;
  return r;
}

}  // namespace

EpsilonResult EpsilonDepolarizing(int dim, double q) {
  if (dim < 2) throw std::invalid_argument("EpsilonDepolarizing: dim must be >= 2");
  if (!(q >= 0.0 && q < 1.0 - 1.0 / dim)) {
    throw std::invalid_argument("EpsilonDepolarizing: q = " + std::to_string(q) +
                                " outside [0, 1 - 1/D)");
  }
  const double d = dim;
  const double alpha = 1.0 - q;
  const double beta = q / (d - 1.0);
  const double root =
      std::sqrt(beta) * std::sqrt((d - 1.0) * (4.0 * alpha - 4.0 * beta) + beta * d * d);
  const double lambda_plus = 0.5 * ((d - 2.0) * beta + root);
  const double lambda_minus = 0.5 * ((d - 2.0) * beta - root);
  const double norm = (d - 2.0) * beta + std::abs(lambda_plus) + std::abs(lambda_minus);
  return Finish(std::vector<double>(dim, norm), EpsilonMethod::kClosedForm);
}

HermitianMatrix XbMatrix(const ChannelModel& channel, int b) {
  const int dim = channel.dim();
  if (b < 0 || b >= dim) throw std::invalid_argument("XbMatrix: b out of range");
  std::vector<std::vector<double>> rows(dim, std::vector<double>(dim, 0.0));
  for (int a = 0; a < dim; ++a) {
    for (int a2 = 0; a2 < dim; ++a2) {
      if (a != a2) rows[a][a2] = std::sqrt(channel.p(b, a) * channel.p(b, a2));
    }
  }
  return HermitianMatrix::FromReal(rows);
}

EpsilonResult EpsilonGeneral(const ChannelModel& channel) {
  const int dim = channel.dim();
  std::vector<double> norms(dim);
  ParallelFor(static_cast<std::size_t>(dim),
              [&](std::size_t b) { norms[b] = TraceNorm(XbMatrix(channel, static_cast<int>(b))); });
  return Finish(std::move(norms), EpsilonMethod::kGeneral);
}

EpsilonResult Epsilon(const ChannelModel& channel) {
  if (channel.family() == ChannelFamily::kDepolarizing &&
      channel.SymmetryDeviation() < kSymmetryTol) {
    return EpsilonDepolarizing(channel.dim(), 1.0 - channel.p(0, 0));
  }
  return EpsilonGeneral(channel);
}

}  // namespace qkdkr
