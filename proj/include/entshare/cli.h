// Copyright 2026 The entshare Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ENTSHARE_CLI_H_
#define ENTSHARE_CLI_H_

// The entshare command line: analyze, sweep and audit subcommands.
//
// Exit codes: 0 ok, 1 property violation, 2 usage or parse error,
// 3 invalid (non-CPTP) channel.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "entshare/oneshot.h"

namespace entshare {

enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,
  kExitUsage = 2,
  kExitInvalidChannel = 3,
};

struct SweepSpec {
  std::string channel_name;
  KrausChannel::Params fixed;  // parameters held constant
  std::string param = "p";
  double from = 0;
  double to = 1;
  int steps = 11;
  std::vector<std::string> columns;
};

const std::vector<std::string>& sweep_columns();

/// CSV text; throws SpecError on an invalid spec or unknown column.
std::string run_sweep(const SweepSpec& spec, int workers = 1);

nlohmann::json report_to_json(const ChannelReport& r);
std::string report_to_text(const ChannelReport& r);

/// Shortest decimal string that parses back to the same double.
std::string format_double(double x);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace entshare

#endif  // ENTSHARE_CLI_H_
