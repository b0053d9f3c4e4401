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
#include <filesystem>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "commands.h"
#include "csv.h"
#include "qkdkr/bounds.h"
#include "qkdkr/keyrate.h"
#include "qkdkr/tracedist.h"

namespace qkdkr::cli {

namespace {

namespace fs = std::filesystem;

struct FigureContext {
  const FigureFlags& flags;
  const std::string& command;
  std::ostream& out;
  std::ostream& err;

  RunManifest Manifest(const std::string& config, const std::vector<double>& grid,
                       const fs::path& path) const {
    RunManifest m;
    m.command = command;
    m.config = config;
    m.grid = DescribeGrid(grid, flags.grid);
    m.output_path = path.string();
    m.tool_version = ToolVersion();
    return m;
  }

  std::vector<double> Grid(double limit) const {
    return flags.grid.empty() ? DefaultGrid(limit) : ParseGrid(flags.grid);
  }

  fs::path Path(const std::string& stem) const {
    return fs::path(flags.out_dir) / (stem + ".csv");
  }

  void Emit(const CsvWriter& w, const fs::path& path) const {
    w.Write();
    out << "wrote " << path.string() << " (" << w.rows() << " rows)\n";
  }
};

std::string ConfigString(const ProtocolConfig& cfg) {
  std::ostringstream os;
  os << "family=" << ToString(cfg.family) << " dim=" << cfg.dim
     << " mode=" << ToString(cfg.mode) << " bound=" << ToString(cfg.bound);
  return os.str();
}

void WriteRateCurve(const FigureContext& ctx, const ProtocolConfig& cfg,
                    const std::string& stem) {
  const std::vector<double> grid = ctx.Grid(cfg.bound == BoundChoice::kLemmaD2
                                                ? kLemmaQMax
                                                : cfg.NoiseLimit());
  const fs::path path = ctx.Path(stem);
  CsvWriter w(ctx.Manifest(ConfigString(cfg), grid, path), {"noise", "key_rate"});
  std::size_t failed = 0;
  for (const SweepPoint& p : Sweep(cfg, grid)) {
    if (!p.report) ++failed;
    w.AddRow({p.noise, p.report ? p.report->key_rate : NAN});
  }
  if (failed) ctx.err << "warning: " << stem << ": " << failed << " grid points failed (nan)\n";
  ctx.Emit(w, path);
}

void WriteTolerances(const FigureContext& ctx, ProtocolConfig cfg, const std::vector<int>& dims,
                     const std::string& stem) {
  const fs::path path = ctx.Path(stem);
  std::vector<double> dim_values(dims.begin(), dims.end());
  RunManifest m = ctx.Manifest(ConfigString(cfg) + " (dim varies)", {}, path);
  m.grid = "coarse step " + FormatNumber(kToleranceScanStep) + ", bisection to " +
           FormatNumber(kToleranceResolution);
  CsvWriter w(m, {"dim", "tolerance"});
  for (int d : dims) {
    cfg.dim = d;
    const ToleranceResult t = NoiseTolerance(cfg);
    w.AddRow({static_cast<double>(d), t.ok() ? t.noise : NAN});
  }
  ctx.Emit(w, path);
}

void Fig1(const FigureContext& ctx) {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  if (!ctx.flags.overlay.empty()) {
    try {
      std::tie(header, rows) = ReadNumericCsv(ctx.flags.overlay);
    } catch (const std::runtime_error& e) {
      throw UsageError(std::string("--overlay: ") + e.what());
    }
  }
  ProtocolConfig cfg;
  for (int d = 2; d <= 8; ++d) {
    cfg.dim = d;
    WriteRateCurve(ctx, cfg, "fig1_D" + std::to_string(d));
  }
  if (!ctx.flags.overlay.empty()) {
    const fs::path path = ctx.Path("fig1_prior_work");
    RunManifest m;
    m.command = ctx.command;
    m.config = "overlay from " + ctx.flags.overlay + " (external data, copied unchanged)";
    m.grid = "as supplied (" + std::to_string(rows.size()) + " rows)";
    m.output_path = path.string();
    m.tool_version = ToolVersion();
    CsvWriter w(m, header);
    for (const auto& r : rows) w.AddRow(r);
    ctx.Emit(w, path);
  }
}

void Fig2(const FigureContext& ctx, Mode mode) {
  ProtocolConfig cfg;
  cfg.mode = mode;
  const std::string name = ctx.flags.name;
  std::vector<int> dims;
  for (int d = 10; d <= 110; d += 10) dims.push_back(d);
  for (int d : dims) {
    cfg.dim = d;
    WriteRateCurve(ctx, cfg, name + "_D" + std::to_string(d));
  }
  WriteTolerances(ctx, cfg, dims, name + "_tolerance");
}

void Fig3(const FigureContext& ctx) {
  ProtocolConfig cfg;
  cfg.dim = 2;
  cfg.bound = BoundChoice::kWinter;
  WriteRateCurve(ctx, cfg, "fig3_winter");
  cfg.bound = BoundChoice::kLemmaD2;
  WriteRateCurve(ctx, cfg, "fig3_lemma");

  const fs::path path = ctx.Path("fig3_tolerance");
  RunManifest m = ctx.Manifest("family=depolarizing dim=2 mode=full", {}, path);
  m.grid = "coarse step " + FormatNumber(kToleranceScanStep) + ", bisection to " +
           FormatNumber(kToleranceResolution);
  CsvWriter w(m, {"winter_tolerance", "lemma_tolerance"});
  cfg.bound = BoundChoice::kWinter;
  const double winter = NoiseTolerance(cfg).noise;
  cfg.bound = BoundChoice::kLemmaD2;
  w.AddRow({winter, NoiseTolerance(cfg).noise});
  ctx.Emit(w, path);
}

void Fig4(const FigureContext& ctx) {
  std::vector<double> grid;
  if (ctx.flags.grid.empty()) {
    for (int i = 1; i <= 400; ++i) grid.push_back(i * kLemmaQMax / 400.0);
  } else {
    grid = ParseGrid(ctx.flags.grid);
  }
  const char* stems[] = {"fig4_winter", "fig4_lemma", "fig4_conjecture"};
  for (int curve = 0; curve < 3; ++curve) {
    const fs::path path = ctx.Path(stems[curve]);
    CsvWriter w(ctx.Manifest("dim=2 epsilon=sqrt(q(1-q)) curve=" + std::string(stems[curve] + 5),
                             grid, path),
                {"noise", "delta_bound"});
    for (double q : grid) {
      double v = NAN;
      if (q >= 0.0 && q <= 0.5) {
        const double eps = std::sqrt(q * (1.0 - q));
        if (curve == 0) v = WinterDeltaBound(eps, 2).value;
        if (curve == 1) v = LemmaDeltaBound(q).value;
        if (curve == 2) v = WildeConjectureCurve(eps, 2).value;
      }
      w.AddRow({q, v});
    }
    ctx.Emit(w, path);
  }
}

void AmpDamp(const FigureContext& ctx, Mode mode) {
  ProtocolConfig cfg;
  cfg.family = ChannelFamily::kAmplitudeDamping;
  cfg.mode = mode;
  const std::vector<int> dims = {4, 8, 12};
  for (int d : dims) {
    cfg.dim = d;
    WriteRateCurve(ctx, cfg, ctx.flags.name + "_D" + std::to_string(d));
  }
  WriteTolerances(ctx, cfg, dims, ctx.flags.name + "_tolerance");
}

}  // namespace

int CmdFigure(const FigureFlags& flags, const std::string& command, std::ostream& out,
              std::ostream& err) {
  if (!flags.overlay.empty() && flags.name != "fig1") {
    throw UsageError("--overlay is only accepted by fig1");
  }
  if (!flags.grid.empty()) ParseGrid(flags.grid);
  std::error_code ec;
  fs::create_directories(flags.out_dir, ec);
  if (ec) throw std::runtime_error("cannot create " + flags.out_dir + ": " + ec.message());

  const FigureContext ctx{flags, command, out, err};
  if (flags.name == "fig1") {
    Fig1(ctx);
  } else if (flags.name == "fig2-full") {
    Fig2(ctx, Mode::kFull);
  } else if (flags.name == "fig2-partial") {
    Fig2(ctx, Mode::kPartial);
  } else if (flags.name == "fig3") {
    Fig3(ctx);
  } else if (flags.name == "fig4") {
    Fig4(ctx);
  } else if (flags.name == "ampdamp-full") {
    AmpDamp(ctx, Mode::kFull);
  } else if (flags.name == "ampdamp-partial") {
    AmpDamp(ctx, Mode::kPartial);
  } else {
    throw UsageError("unknown figure '" + flags.name + "'");
  }
  return 0;
}

}  // namespace qkdkr::cli
