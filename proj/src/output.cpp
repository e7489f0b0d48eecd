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

#include "magsteer/output.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace magsteer {

std::string format_number(double v) {
  if (std::isnan(v)) return "NaN";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  // snprintf honours LC_NUMERIC; force '.' as the decimal separator.
  for (char* c = buf; *c; ++c)
    if (*c == ',') *c = '.';
  return buf;
}

double round_12(double v) {
  if (!std::isfinite(v)) return v;
  return std::strtod(format_number(v).c_str(), nullptr);
}

void write_csv(const SweepResult& result, std::ostream& out) {
  for (std::size_t k = 0; k < result.axes.size(); ++k) out << "axis" << (k + 1) << ",";
  out << "E_m,S_ab,S_ba,psi_minus,stable,margin\n";
  for (const auto& row : result.rows) {
    for (double v : row.values) out << format_number(v) << ",";
    const auto& r = row.report;
    out << format_number(r.e_m) << "," << format_number(r.s_ab) << "," << format_number(r.s_ba) << ","
        << format_number(r.psi_minus) << "," << (r.stable && !row.failed() ? 1 : 0) << ","
        << format_number(r.margin) << "\n";
  }
}

std::string csv_string(const SweepResult& result) {
  std::ostringstream os;
  write_csv(result, os);
  return os.str();
}

nlohmann::json point_json(const CorrelationReport& report) {
  auto value = [](double v) -> nlohmann::json {
    if (std::isnan(v)) return nullptr;
    return round_12(v);
  };
  return {{"e_m", value(report.e_m)},           {"s_ab", value(report.s_ab)},
          {"s_ba", value(report.s_ba)},         {"psi_minus", value(report.psi_minus)},
          {"stable", report.stable},            {"margin", value(report.margin)},
          {"marginal", report.marginal}};
}

}  // namespace magsteer
