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


#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "commands.h"
#include "qkdkr/bounds.h"
#include "qkdkr/oracle.h"
#include "qkdkr/parallel.h"
#include "qkdkr/tracedist.h"

namespace qkdkr::cli {

namespace {

constexpr double kInvariantTol = 1e-12;
constexpr double kEpsilonTol = 1e-8;
constexpr double kDeltaSlack = 1e-8;
constexpr double kOpnormSlack = 1e-10;
constexpr double kRankTol = 1e-9;
constexpr int kLemmaGridPoints = 1000;
constexpr std::size_t kMaxReportedFailures = 5;

const char* const kSuites[] = {"attack_invariants", "epsilon_exact_vs_analytic",
                               "delta_vs_winter",   "delta_vs_lemma",
                               "opnorm_lemma",      "spectral_range",
                               "sigma_rank1",       "horn",
                               "lemma_support"};

struct Check {
  std::string suite;
  bool pass = true;
  std::string detail;
};

struct Trial {
  ChannelFamily family;
  int dim;
  int index;
};

std::string Label(const Trial& t, double noise) {
  std::ostringstream os;
  os << ToString(t.family) << " D=" << t.dim << " trial=" << t.index << " noise=" << noise;
  return os.str();
}

std::vector<Check> RunTrial(const Trial& t, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double u = unit(rng);
  double noise;
  if (t.family == ChannelFamily::kAmplitudeDamping) {
    noise = u;
  } else if (t.dim == 2 && t.index % 2 == 0) {
    noise = kLemmaQMax * (1.0 - u);
  } else {
    noise = (1.0 - 1.0 / t.dim) * 0.999 * u;
  }
  const ChannelModel channel = t.family == ChannelFamily::kDepolarizing
                                   ? DepolarizingChannel(t.dim, noise)
                                   : AmplitudeDampingChannel(t.dim, noise);
  const std::string label = Label(t, noise);
  std::vector<Check> out;
  auto add = [&](const char* suite, bool pass, const std::string& detail) {
    out.push_back({suite, pass, pass ? "" : label + ": " + detail});
  };

  const AttackInstance random = BuildAttack(channel, rng(), AttackMode::kRandom);
  const AttackInstance aligned = BuildAttack(channel, 0, AttackMode::kAligned);
  for (const AttackInstance* att : {&random, &aligned}) {
    const double defect = att->InvariantDefect();
    add("attack_invariants", defect <= kInvariantTol, "defect " + std::to_string(defect));
  }

  const double analytic = Epsilon(channel).epsilon;
  const double exact = ExactEpsilon(random);
  add("epsilon_exact_vs_analytic", std::abs(exact - analytic) <= kEpsilonTol,
      "exact " + std::to_string(exact) + " vs analytic " + std::to_string(analytic));

  const double winter = WinterDeltaBound(analytic, t.dim).value;
  const bool qubit_dep = t.dim == 2 && t.family == ChannelFamily::kDepolarizing;
  for (const AttackInstance* att : {&random, &aligned}) {
    const double delta = ExactDelta(*att);
    add("delta_vs_winter", delta <= winter + kDeltaSlack,
        "delta " + std::to_string(delta) + " > winter " + std::to_string(winter));
    if (qubit_dep && noise <= kLemmaQMax) {
      const double lemma = LemmaDeltaBound(noise).value;
      add("delta_vs_lemma", delta <= lemma + kDeltaSlack,
          "delta " + std::to_string(delta) + " > lemma " + std::to_string(lemma));
    }
    const double rank = SigmaBlockRankDefect(*att);
    add("sigma_rank1", rank <= kRankTol, "second eigenvalue " + std::to_string(rank));
  }

  if (qubit_dep) {
    const double bound = std::sqrt(noise * (1.0 - noise));
    const double r = DeltaEOpnorm(random);
    add("opnorm_lemma", r <= bound + kOpnormSlack,
        "random opnorm " + std::to_string(r) + " > " + std::to_string(bound));
    const double a = DeltaEOpnorm(aligned);
    add("opnorm_lemma", std::abs(a - bound) <= kOpnormSlack,
        "aligned opnorm " + std::to_string(a) + " != " + std::to_string(bound));
    for (const AttackInstance* att : {&random, &aligned}) {
      const SpectralRangeReport s = SpectralRangeCheck(*att);
      add("spectral_range", s.pass, s.Describe());
    }
  }

  const HermitianMatrix a = RandomHermitian(4, rng());
  const HermitianMatrix b = RandomHermitian(4, rng());
  const HornReport horn =
      HornCheck(HermitianEigenvalues(a), HermitianEigenvalues(b), HermitianEigenvalues(a + b));
  add("horn", horn.Pass(), "min margin " + std::to_string(horn.MinMargin()));
  return out;
}

std::vector<Check> LemmaSupportChecks() {
  std::vector<double> grid;
  for (int i = 1; i <= kLemmaGridPoints; ++i) grid.push_back(i * kLemmaQMax / kLemmaGridPoints);
  const LemmaSupportReport in_range = VerifyLemmaSupport(grid);
  std::vector<Check> out;
  for (const LemmaSupportRow& r : in_range.rows) {
    const bool pass = r.pass[0] && r.pass[1] && r.pass[2];
    std::ostringstream os;
    os << "q=" << r.q << " margins " << r.margin[0] << ", " << r.margin[1] << ", "
       << r.margin[2];
    out.push_back({"lemma_support", pass, pass ? "" : os.str()});
  }
  std::vector<double> beyond;
  for (int i = 1; i <= 100; ++i) beyond.push_back(kLemmaQMax + i * (0.5 - kLemmaQMax) / 100);
  const LemmaSupportReport outside = VerifyLemmaSupport(beyond, true);
  out.push_back({"lemma_support", outside.Failures(2) > 0,
                 "inequality (iii) never fails above q = 0.1464"});
  return out;
}

}  // namespace

int CmdVerify(const VerifyFlags& flags, std::ostream& out, std::ostream& err) {
  if (flags.trials == 0) {
    err << "warning: --trials 0, nothing to verify\n";
    out << "verify: PASS (0 trials)\n";
    return 0;
  }
  std::vector<int> dims = flags.dims;
  if (dims.empty()) dims = {2, 3, 4, 5, 6};
  std::vector<ChannelFamily> families;
  if (flags.family != "amp-damping") families.push_back(ChannelFamily::kDepolarizing);
  if (flags.family != "depolarizing") families.push_back(ChannelFamily::kAmplitudeDamping);

  std::vector<Trial> trials;
  for (ChannelFamily f : families) {
    for (int d : dims) {
      for (int i = 0; i < flags.trials; ++i) trials.push_back({f, d, i});
    }
  }
  std::vector<std::vector<Check>> results(trials.size() + 1);
  ParallelFor(trials.size() + 1, [&](std::size_t i) {
    results[i] = i < trials.size() ? RunTrial(trials[i], TrialSeed(flags.seed, i))
                                   : LemmaSupportChecks();
  });

  std::map<std::string, std::pair<std::size_t, std::size_t>> counts;
  for (const char* s : kSuites) counts[s] = {0, 0};
  std::size_t reported = 0;
  std::size_t failed_total = 0;
  for (const auto& checks : results) {
    for (const Check& c : checks) {
      auto& [checked, failed] = counts[c.suite];
      ++checked;
      if (!c.pass) {
        ++failed;
        ++failed_total;
        if (reported++ < kMaxReportedFailures) err << "FAIL " << c.suite << ": " << c.detail << '\n';
      }
    }
  }
  for (const char* s : kSuites) {
    out << "suite=" << s << " checked=" << counts[s].first << " failed=" << counts[s].second
        << '\n';
  }
  out << "verify: " << (failed_total == 0 ? "PASS" : "FAIL") << " (seed=" << flags.seed
      << ", trials=" << flags.trials << ")\n";
  return failed_total == 0 ? 0 : 3;
}

}  // namespace qkdkr::cli
