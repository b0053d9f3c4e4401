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


#include "qkdkr/oracle.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qkdkr {

namespace {

Complex Dot(const std::vector<Complex>& u, const std::vector<Complex>& v) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

void RequireQubitDepolarizing(const AttackInstance& att, const char* who) {
  if (att.dim() != 2 || att.channel().family() != ChannelFamily::kDepolarizing) {
    throw std::invalid_argument(std::string(who) +
                                ": requires a dimension-2 depolarizing attack");
  }
}

// Orthonormal columns from Gram-Schmidt on complex Gaussian draws.
std::vector<std::vector<Complex>> RandomFrame(std::size_t len, int count,
                                              std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  std::vector<std::vector<Complex>> frame;
  while (static_cast<int>(frame.size()) < count) {
    std::vector<Complex> v(len);
    for (Complex& x : v) x = {normal(rng), normal(rng)};
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& f : frame) {
        const Complex c = Dot(f, v);
        for (std::size_t i = 0; i < len; ++i) v[i] -= c * f[i];
      }
    }
    double n = 0.0;
    for (const Complex& x : v) n += std::norm(x);
    n = std::sqrt(n);
    if (n < 1e-8) continue;
    for (Complex& x : v) x /= n;
    frame.push_back(std::move(v));
  }
  return frame;
}

Matrix BlockDiagonal(const std::vector<HermitianMatrix>& blocks) {
  const std::size_t e = blocks.front().dim();
  Matrix m(e * blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (std::size_t r = 0; r < e; ++r) {
      for (std::size_t c = 0; c < e; ++c) m(b * e + r, b * e + c) = blocks[b](r, c);
    }
  }
  return m;
}

}  // namespace

AttackInstance::AttackInstance(ChannelModel channel,
                               std::vector<std::vector<Complex>> vectors)
    : channel_(std::move(channel)), vectors_(std::move(vectors)) {
  const std::size_t d = channel_.dim();
  if (vectors_.size() != d * d) {
    throw std::invalid_argument("AttackInstance: expected D^2 vectors");
  }
  for (const auto& v : vectors_) {
    if (v.size() != d * d) throw std::invalid_argument("AttackInstance: vectors must have length D^2");
  }
}

double AttackInstance::InvariantDefect() const {
  const int d = dim();
  double worst = 0.0;
  for (int a = 0; a < d; ++a) {
    double total = 0.0;
    for (int b = 0; b < d; ++b) {
      const double n = Dot(e(a, b), e(a, b)).real();
      total += n;
      worst = std::max(worst, std::abs(n - channel_.p(b, a)));
      for (int a2 = 0; a2 < d; ++a2) {
        if (a2 != a) worst = std::max(worst, std::abs(Dot(e(a, b), e(a2, b))));
      }
    }
    worst = std::max(worst, std::abs(total - 1.0));
  }
  return worst;
}

AttackInstance BuildAttack(const ChannelModel& channel, std::uint64_t seed, AttackMode mode) {
  const int d = channel.dim();
  const std::size_t len = static_cast<std::size_t>(d) * d;
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Complex>> vectors(len);
  for (int b = 0; b < d; ++b) {
    std::vector<std::vector<Complex>> frame;
    if (mode == AttackMode::kRandom) {
      frame = RandomFrame(len, d, rng);
    } else {
      frame.assign(d, std::vector<Complex>(len, 0.0));
      for (int a = 0; a < d; ++a) frame[a][((a - b) % d + d) % d] = 1.0;
    }
    for (int a = 0; a < d; ++a) {
      const double amp = std::sqrt(channel.p(b, a));
      std::vector<Complex>& v = vectors[static_cast<std::size_t>(a) * d + b];
      v = frame[a];
      for (Complex& x : v) x *= amp;
    }
  }
  return AttackInstance(channel, std::move(vectors));
}

std::uint64_t TrialSeed(std::uint64_t master, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(master), static_cast<std::uint32_t>(master >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

HermitianMatrix RandomHermitian(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("RandomHermitian: n must be >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Matrix g(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) g(r, c) = {normal(rng), normal(rng)};
  }
  return HermitianMatrix((g + g.Adjoint()) * Complex(0.5));
}

HermitianMatrix RhoBlock(const AttackInstance& att, int b) {
  Matrix m(att.eve_dim());
  for (int a = 0; a < att.dim(); ++a) m += Matrix::Outer(att.e(a, b), att.e(a, b));
  return HermitianMatrix(m * Complex(1.0 / att.dim()));
}

HermitianMatrix SigmaBlock(const AttackInstance& att, int b) {
  std::vector<Complex> v(att.eve_dim(), 0.0);
  for (int a = 0; a < att.dim(); ++a) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += att.e(a, b)[i];
  }
  return HermitianMatrix(Matrix::Outer(v, v) * Complex(1.0 / att.dim()));
}

HermitianMatrix RhoBze(const AttackInstance& att) {
  std::vector<HermitianMatrix> blocks;
  for (int b = 0; b < att.dim(); ++b) blocks.push_back(RhoBlock(att, b));
  return HermitianMatrix(BlockDiagonal(blocks));
}

HermitianMatrix SigmaBze(const AttackInstance& att) {
  std::vector<HermitianMatrix> blocks;
  for (int b = 0; b < att.dim(); ++b) blocks.push_back(SigmaBlock(att, b));
  return HermitianMatrix(BlockDiagonal(blocks));
}

HermitianMatrix PartialTraceB(const HermitianMatrix& state, int b_dim) {
  if (b_dim < 1 || state.dim() % static_cast<std::size_t>(b_dim) != 0) {
    throw std::invalid_argument("PartialTraceB: state dimension not divisible by b_dim");
  }
  const std::size_t e = state.dim() / b_dim;
  Matrix out(e);
  for (int b = 0; b < b_dim; ++b) {
    for (std::size_t r = 0; r < e; ++r) {
      for (std::size_t c = 0; c < e; ++c) out(r, c) += state(b * e + r, b * e + c);
    }
  }
  return HermitianMatrix(out);
}

double ExactConditionalEntropy(const HermitianMatrix& state, int b_dim) {
  return VonNeumannEntropy(state) - VonNeumannEntropy(PartialTraceB(state, b_dim));
}

double ExactDelta(const AttackInstance& att) {
  return std::abs(ExactConditionalEntropy(RhoBze(att), att.dim()) -
                  ExactConditionalEntropy(SigmaBze(att), att.dim()));
}

double ExactEpsilon(const AttackInstance& att) {
  return TraceDistance(SigmaBze(att), RhoBze(att));
}

HermitianMatrix DeltaE(const AttackInstance& att) {
  Matrix m(att.eve_dim());
  for (int b = 0; b < att.dim(); ++b) {
    for (int a = 0; a < att.dim(); ++a) {
      for (int a2 = 0; a2 < att.dim(); ++a2) {
        if (a != a2) m += Matrix::Outer(att.e(a, b), att.e(a2, b));
      }
    }
  }
  return HermitianMatrix(m * Complex(1.0 / att.dim()));
}

double DeltaEOpnorm(const AttackInstance& att) {
  RequireQubitDepolarizing(att, "DeltaEOpnorm");
  return OperatorNorm(DeltaE(att));
}

double SigmaBlockRankDefect(const AttackInstance& att) {
  double worst = 0.0;
  for (int b = 0; b < att.dim(); ++b) {
    const Spectrum s = HermitianEigenvalues(SigmaBlock(att, b));
    if (s.size() > 1) worst = std::max(worst, s[1]);
  }
  return worst;
}

std::string SpectralRangeReport::Describe() const {
  std::ostringstream os;
  os << "q=" << q;
  for (int k = 0; k < 4; ++k) {
    os << " g" << k + 1 << "=" << gamma[k] << " in [" << lower[k] << ", " << upper[k] << "]";
  }
  return os.str();
}

SpectralRangeReport SpectralRangeCheck(const AttackInstance& att) {
  RequireQubitDepolarizing(att, "SpectralRangeCheck");
  SpectralRangeReport r;
  r.q = 1.0 - att.channel().p(0, 0);
  const double q = r.q;
  r.lower = {(1.0 - q) / 2, q / 2, 0.0, 0.0};
  r.upper = {1.0 - q, 0.5, q, q / 2};
  const Spectrum s = HermitianEigenvalues(PartialTraceB(RhoBze(att), 2));
  r.pass = true;
  for (int k = 0; k < 4; ++k) {
    r.gamma[k] = s[k];
    if (s[k] < r.lower[k] - kTol || s[k] > r.upper[k] + kTol) r.pass = false;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Horn inequalities

namespace {

std::vector<int> Digits(const char* s) {
  std::vector<int> out;
  for (; *s; ++s) out.push_back(*s - '0');
  return out;
}

std::vector<int> Complement(const std::vector<int>& set, int n) {
  std::vector<int> out;
  for (int x = 1; x <= n; ++x) {
    if (std::find(set.begin(), set.end(), x) == set.end()) out.push_back(x);
  }
  return out;
}

// (K, I, J) for the upper inequalities, r = 1, 2, 3.
constexpr const char* kUpperN4[][3] = {
    {"1", "1", "1"},       {"2", "1", "2"},       {"3", "1", "3"},
    {"4", "1", "4"},       {"2", "2", "1"},       {"3", "2", "2"},
    {"4", "2", "3"},       {"3", "3", "1"},       {"4", "3", "2"},
    {"4", "4", "1"},

    {"12", "12", "12"},    {"13", "12", "13"},    {"14", "12", "14"},
    {"23", "12", "23"},    {"24", "12", "24"},    {"34", "12", "34"},
    {"13", "13", "12"},    {"14", "13", "13"},    {"23", "13", "13"},
    {"24", "13", "14"},    {"24", "13", "23"},    {"34", "13", "24"},
    {"14", "14", "12"},    {"24", "14", "13"},    {"34", "14", "14"},
    {"23", "23", "12"},    {"24", "23", "13"},    {"34", "23", "23"},
    {"24", "24", "12"},    {"34", "24", "13"},    {"34", "34", "12"},

    {"123", "123", "123"}, {"124", "123", "124"}, {"134", "123", "134"},
    {"234", "123", "234"}, {"124", "124", "123"}, {"134", "124", "124"},
    {"234", "124", "134"}, {"134", "134", "123"}, {"234", "134", "124"},
    {"234", "234", "123"},
};

HornInequalitySet MakeN4() {
  HornInequalitySet set;
  for (const auto& row : kUpperN4) {
    set.inequalities.push_back({Digits(row[0]), Digits(row[1]), Digits(row[2]), true});
  }
  for (const auto& row : kUpperN4) {
    set.inequalities.push_back({Complement(Digits(row[0]), 4), Complement(Digits(row[1]), 4),
                                Complement(Digits(row[2]), 4), false});
  }
  return set;
}

double SumAt(const Spectrum& s, const std::vector<int>& idx) {
  double t = 0.0;
  for (int i : idx) t += s[i - 1];
  return t;
}

}  // namespace

const HornInequalitySet& HornInequalitySet::N4() {
  static const HornInequalitySet set = MakeN4();
  return set;
}

std::size_t HornInequalitySet::Count(int r, bool upper) const {
  return static_cast<std::size_t>(std::count_if(
      inequalities.begin(), inequalities.end(), [&](const HornInequality& h) {
        return h.upper == upper && static_cast<int>(h.k.size()) == r;
      }));
}

double HornReport::MinMargin() const {
  return margins.empty() ? 0.0 : *std::min_element(margins.begin(), margins.end());
}

bool HornReport::Pass(double tol) const {
  return trace_defect <= tol && MinMargin() >= -tol;
}

HornReport HornCheck(const Spectrum& alpha, const Spectrum& beta, const Spectrum& gamma) {
  if (alpha.size() != 4 || beta.size() != 4 || gamma.size() != 4) {
    throw std::invalid_argument("HornCheck: spectra must have length 4");
  }
  HornReport r;
  r.trace_defect = std::abs(gamma.sum() - alpha.sum() - beta.sum());
  for (const HornInequality& h : HornInequalitySet::N4().inequalities) {
    const double rhs = SumAt(alpha, h.i) + SumAt(beta, h.j);
    const double lhs = SumAt(gamma, h.k);
    r.margins.push_back(h.upper ? rhs - lhs : lhs - rhs);
  }
  return r;
}

}  // namespace qkdkr
