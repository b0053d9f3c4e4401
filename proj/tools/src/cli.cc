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


#include "cli.h"

#include <cmath>
#include <sstream>

#include "CLI11.hpp"
#include "commands.h"
#include "csv.h"

#ifndef QKDKR_VERSION
#define QKDKR_VERSION "0.0.0"
#endif

namespace qkdkr::cli {

std::string ToolVersion() { return std::string("qkdkr ") + QKDKR_VERSION; }

std::string ResolvedProtocol::Describe() const {
  std::ostringstream os;
  os << "dim=" << config.dim << " channel="
     << (file_channel ? "file:" + file_channel->label() : std::string(ToString(config.family)))
     << " mode=" << ToString(config.mode) << " bound=" << ToString(config.bound);
  return os.str();
}

ResolvedProtocol ResolveProtocol(const ProtocolFlags& flags, int default_dim) {
  ResolvedProtocol r;
  ProtocolConfig& cfg = r.config;
  cfg.mode = flags.mode == "partial" ? Mode::kPartial : Mode::kFull;
  if (flags.bound == "lemma") {
    cfg.bound = BoundChoice::kLemmaD2;
  } else if (flags.bound == "best") {
    cfg.bound = BoundChoice::kBest;
  } else {
    cfg.bound = BoundChoice::kWinter;
  }

  if (flags.channel == "depolarizing") {
    cfg.family = ChannelFamily::kDepolarizing;
  } else if (flags.channel == "amp-damping") {
    cfg.family = ChannelFamily::kAmplitudeDamping;
  } else if (flags.channel.rfind("file:", 0) == 0) {
    r.file_channel = LoadChannelFile(flags.channel.substr(5));
    if (flags.dim != 0 && flags.dim != r.file_channel->dim()) {
      throw UsageError("--dim " + std::to_string(flags.dim) + " does not match the channel file (dim " +
                       std::to_string(r.file_channel->dim()) + ")");
    }
    cfg.family = ChannelFamily::kCustom;
    cfg.custom = [ch = *r.file_channel](double) { return ch; };
  } else {
    throw UsageError("--channel must be depolarizing, amp-damping or file:PATH, got '" +
                     flags.channel + "'");
  }
  cfg.dim = r.file_channel ? r.file_channel->dim() : (flags.dim != 0 ? flags.dim : default_dim);
  try {
    cfg.Validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return r;
}

std::vector<double> ParseGrid(const std::string& spec) {
  double v[3];
  std::stringstream ss(spec);
  std::string part;
  int n = 0;
  while (std::getline(ss, part, ':')) {
    if (n == 3) throw UsageError("--grid expects start:stop:step, got '" + spec + "'");
    char* end = nullptr;
    v[n] = std::strtod(part.c_str(), &end);
    if (part.empty() || *end != '\0' || !std::isfinite(v[n])) {
      throw UsageError("--grid: '" + part + "' is not a number");
    }
    ++n;
  }
  if (n != 3) throw UsageError("--grid expects start:stop:step, got '" + spec + "'");
  const auto [start, stop, step] = std::tuple(v[0], v[1], v[2]);
  if (!(step > 0.0) || stop < start) throw UsageError("--grid needs step > 0 and stop >= start");
  const double count = std::floor((stop - start) / step + 1e-9);
  if (count > 1e6) throw UsageError("--grid has more than 10^6 points");
  std::vector<double> grid;
  for (long i = 0; i <= static_cast<long>(count); ++i) grid.push_back(start + i * step);
  return grid;
}

std::vector<double> DefaultGrid(double limit) {
  std::vector<double> grid(400);
  for (int i = 0; i < 400; ++i) grid[i] = i * limit / 400.0;
  return grid;
}

std::string DescribeGrid(const std::vector<double>& grid, const std::string& spec) {
  std::ostringstream os;
  if (!spec.empty()) {
    os << spec;
  } else if (!grid.empty()) {
    os << "uniform " << FormatNumber(grid.front()) << ".." << FormatNumber(grid.back());
  }
  os << " (" << grid.size() << " points)";
  return os.str();
}

namespace {

std::string Join(const std::vector<std::string>& args) {
  std::string s = "qkdkr";
  for (const std::string& a : args) s += " " + a;
  return s;
}

void AddProtocolFlags(CLI::App* cmd, ProtocolFlags& f) {
  cmd->add_option("--dim", f.dim, "Dimension D")->check(CLI::Range(2, 4096));
  cmd->add_option("--mode", f.mode, "full | partial")
      ->check(CLI::IsMember({"full", "partial"}))
      ->capture_default_str();
  cmd->add_option("--bound", f.bound, "winter | lemma | best")
      ->check(CLI::IsMember({"winter", "lemma", "best"}))
      ->capture_default_str();
  cmd->add_option("--channel", f.channel, "depolarizing | amp-damping | file:PATH")
      ->capture_default_str();
}

int CmdKeyRate(const ProtocolFlags& flags, std::optional<double> noise, bool csv,
               std::ostream& out) {
  const ResolvedProtocol p = ResolveProtocol(flags, 2);
  KeyRateReport r;
  if (p.file_channel) {
    r = KeyRate(p.config, *p.file_channel, noise.value_or(0.0));
  } else {
    if (!noise) throw UsageError("--noise is required for " + flags.channel + " channels");
    std::optional<ChannelModel> channel;
    try {
      channel.emplace(p.config.Channel(*noise));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--noise: ") + e.what());
    }
    r = KeyRate(p.config, *channel, *noise);
  }
  if (csv) {
    out << p.config.dim << ',' << FormatNumber(r.noise) << ',' << FormatNumber(r.epsilon) << ','
        << FormatNumber(r.delta_bound) << ',' << FormatNumber(r.hbx_term) << ','
        << FormatNumber(r.leak_ec) << ',' << FormatNumber(r.key_rate) << ',' << r.bound_used
        << '\n';
  } else {
    out << p.Describe() << " noise=" << FormatNumber(r.noise)
        << " epsilon=" << FormatNumber(r.epsilon)
        << " epsilon_method=" << ToString(r.epsilon_method)
        << " delta_bound=" << FormatNumber(r.delta_bound)
        << " hbx_term=" << FormatNumber(r.hbx_term) << " leak_ec=" << FormatNumber(r.leak_ec)
        << " key_rate=" << FormatNumber(r.key_rate) << " bound_used=" << r.bound_used
        << " positive=" << (r.positive() ? "true" : "false") << '\n';
  }
  return kExitOk;
}

int CmdTolerance(const ProtocolFlags& flags, std::ostream& out, std::ostream& err) {
  const ResolvedProtocol p = ResolveProtocol(flags, 2);
  if (p.file_channel) {
    throw UsageError("tolerance needs a noise-parameterized channel; file channels are fixed");
  }
  const ToleranceResult t = NoiseTolerance(p.config);
  if (t.no_positive_rate) {
    err << "error: key rate is not positive anywhere on the scanned range\n";
    return kExitComputeError;
  }
  if (t.no_crossing) {
    err << "error: no sign change up to noise " << FormatNumber(t.noise) << '\n';
    return kExitComputeError;
  }
  if (t.multiple_crossings) err << "warning: key rate changes sign more than once\n";
  out << p.Describe() << " tolerance=" << FormatNumber(t.noise)
      << " bracket_lo=" << FormatNumber(t.bracket_lo)
      << " bracket_hi=" << FormatNumber(t.bracket_hi) << " scan_step=" << kToleranceScanStep
      << " resolution=" << kToleranceResolution << " evaluations=" << t.evaluations
      << " multiple_crossings=" << (t.multiple_crossings ? "true" : "false") << '\n';
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Key rates and noise tolerances for high-dimensional three-state BB84",
               "qkdkr"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ToolVersion());

  ProtocolFlags kr_flags;
  std::optional<double> kr_noise;
  bool kr_csv = false;
  CLI::App* keyrate = app.add_subcommand("keyrate", "Key rate at one noise value");
  AddProtocolFlags(keyrate, kr_flags);
  keyrate->add_option("--noise", kr_noise, "q (depolarizing) or p (amplitude damping)");
  keyrate->add_flag("--csv", kr_csv,
                    "One CSV row: dim,noise,epsilon,delta_bound,hbx_term,leak_ec,key_rate,"
                    "bound_used");

  ProtocolFlags tol_flags;
  CLI::App* tolerance = app.add_subcommand("tolerance", "Largest noise with a positive rate");
  AddProtocolFlags(tolerance, tol_flags);

  FigureFlags fig_flags;
  CLI::App* figure = app.add_subcommand("figure", "Write figure data as CSV");
  figure->add_option("name", fig_flags.name, "Figure name")
      ->required()
      ->check(CLI::IsMember({"fig1", "fig2-full", "fig2-partial", "fig3", "fig4",
                             "ampdamp-full", "ampdamp-partial"}));
  figure->add_option("--out", fig_flags.out_dir, "Output directory")->capture_default_str();
  figure->add_option("--grid", fig_flags.grid, "Noise grid start:stop:step");
  figure->add_option("--overlay", fig_flags.overlay, "fig1: prior-work CSV to merge");

  VerifyFlags ver_flags;
  CLI::App* verify = app.add_subcommand("verify", "Run the oracle verification suites");
  verify->add_option("--seed", ver_flags.seed, "Master seed")->capture_default_str();
  verify->add_option("--trials", ver_flags.trials, "Trials per (family, dim)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  verify->add_option("--dims", ver_flags.dims, "Dimensions (default 2..6)")
      ->delimiter(',')
      ->check(CLI::Range(2, 16));
  verify->add_option("--family", ver_flags.family, "depolarizing | amp-damping | all")
      ->check(CLI::IsMember({"depolarizing", "amp-damping", "all"}))
      ->capture_default_str();

  std::vector<std::string> storage = args;
  std::vector<char*> argv;
  std::string prog = "qkdkr";
  argv.push_back(prog.data());
  for (std::string& a : storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (keyrate->parsed()) return CmdKeyRate(kr_flags, kr_noise, kr_csv, out);
    if (tolerance->parsed()) return CmdTolerance(tol_flags, out, err);
    if (figure->parsed()) return CmdFigure(fig_flags, Join(args), out, err);
    if (verify->parsed()) return CmdVerify(ver_flags, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ChannelFileError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitComputeError;
  }
  return kExitUsage;
}

}  // namespace qkdkr::cli
