// Copyright 2026 The magsteer Authors
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

#include <string>
#include <vector>

#include "magsteer/model.hpp"

namespace magsteer {

struct SelfCheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SelfCheckOptions {
  // Convention used by the vacuum checks; `paper` makes them fail on purpose.
  DiffusionConvention convention = DiffusionConvention::derived;
};

const std::vector<std::string>& selfcheck_names();

std::vector<SelfCheckResult> run_selfcheck(const SelfCheckOptions& options = {});

}  // namespace magsteer
