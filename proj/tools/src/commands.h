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


#ifndef QKDKR_TOOLS_COMMANDS_H_
#define QKDKR_TOOLS_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qkdkr/channels.h"
#include "qkdkr/keyrate.h"

namespace qkdkr::cli {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ProtocolFlags {
  int dim = 0;  // 0: not given
  std::string mode = "full";
  std::string bound = "winter";
  std::string channel = "depolarizing";
};

struct ResolvedProtocol {
  ProtocolConfig config;
  // Set for file:PATH channels.
  std::optional<ChannelModel> file_channel;
  std::string Describe() const;
};

// Throws UsageError for inconsistent flags and ChannelFileError for unreadable
// channel files.
ResolvedProtocol ResolveProtocol(const ProtocolFlags& flags, int default_dim);

// start:stop:step, stop inclusive. Throws UsageError.
std::vector<double> ParseGrid(const std::string& spec);
// i * limit / 400 for i in [0, 400).
std::vector<double> DefaultGrid(double limit);
std::string DescribeGrid(const std::vector<double>& grid, const std::string& spec);

struct FigureFlags {
  std::string name;
  std::string out_dir = ".";
  std::string grid;
  std::string overlay;
};

struct VerifyFlags {
  std::uint64_t seed = 1;
  int trials = 20;
  std::vector<int> dims;
  std::string family = "all";
};

std::string ToolVersion();

int CmdFigure(const FigureFlags& flags, const std::string& command, std::ostream& out,
              std::ostream& err);
int CmdVerify(const VerifyFlags& flags, std::ostream& out, std::ostream& err);

}  // namespace qkdkr::cli

#endif  // QKDKR_TOOLS_COMMANDS_H_
