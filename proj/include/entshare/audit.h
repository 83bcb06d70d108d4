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

#ifndef ENTSHARE_AUDIT_H_
#define ENTSHARE_AUDIT_H_

// Randomized property audit: every closed-form identity of the library is
// re-checked on seeded random channels, and against brute-force oracles.

#include <cstdint>
#include <string>
#include <vector>

#include "entshare/channel.h"

namespace entshare {

/// Channel `index` of the audit stream for `seed`: every fifth one is a
/// random Pauli mixture (unital), the others random channels with Kraus rank
/// cycling through 1..4.
KrausChannel audit_channel(std::uint64_t seed, int index);

struct AuditOptions {
  std::uint64_t seed = 42;
  int count = 100;
  int workers = 1;
  std::string repro_dir = ".";
  bool write_repro = true;
};

struct CheckSummary {
  std::string name;
  // A check either bounds a residual from above (worst = max residual) or
  // requires a margin above its threshold (worst = min margin).
  bool margin = false;
  double threshold = 0;
  double worst = 0;
  int evaluated = 0;
  int violations = 0;
  bool passed() const { return violations == 0; }
};

struct Violation {
  int index = 0;
  std::string check;
  double value = 0;
  double threshold = 0;
};

struct AuditResult {
  std::vector<CheckSummary> checks;  // fixed order
  std::vector<Violation> violations;
  std::vector<std::string> repro_files;
  bool passed() const { return violations.empty(); }
};

AuditResult run_audit(const AuditOptions& options);

/// One line per check.
std::string format_audit(const AuditResult& result);

}  // namespace entshare

#endif  // ENTSHARE_AUDIT_H_
