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

#include <ostream>
#include <string>

#include <json.hpp>

#include "magsteer/measures.hpp"
#include "magsteer/sweep.hpp"

namespace magsteer {

/// "%.12g", or the literal "NaN". Locale independent.
std::string format_number(double v);

/// v rounded through its 12-significant-digit decimal form.
double round_12(double v);

/// Header `axis1[,axis2],E_m,S_ab,S_ba,psi_minus,stable,margin`, rows in
/// row-major order, LF endings.
void write_csv(const SweepResult& result, std::ostream& out);
std::string csv_string(const SweepResult& result);

/// JSON point record; NaN measures are written as null.
nlohmann::json point_json(const CorrelationReport& report);

}  // namespace magsteer
