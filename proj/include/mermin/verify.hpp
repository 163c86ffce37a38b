// Copyright 2026 The mermin-sim Authors
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

#pragma once

#include <functional>
#include <string>
#include <vector>

namespace mermin {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Self-check run by `mermin verify`: exact values, LHV bounds, eigenvalue
/// theorem, closed-form GHZ expectations, measurement-basis parity, shot
/// pipeline and the published-table arithmetic. Never throws; exceptions
/// become failed checks.
std::vector<CheckResult> run_invariant_suite();

}  // namespace mermin
