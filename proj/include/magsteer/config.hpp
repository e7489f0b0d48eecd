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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "magsteer/error.hpp"
#include "magsteer/model.hpp"
#include "magsteer/sweep.hpp"

namespace magsteer {

/// Malformed syntax, unknown key, or invariant violation in a config file.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Parsed configuration. `cyclic` holds the parameter block as written:
/// frequency-valued fields in Hz (cyclic). Axes are in internal units.
struct ConfigFile {
  std::optional<std::string> preset;
  SystemParams cyclic;
  std::vector<GridAxis> axes;
  std::optional<int> threads;

  /// Parameters with every frequency converted to rad/s.
  SystemParams params() const;

  friend bool operator==(const ConfigFile&, const ConfigFile&) = default;
};

/// Frequency-valued fields (detunings, decays, couplings, gains, omega_m_abs)
/// multiplied / divided by 2 pi. Other fields pass through.
SystemParams to_angular(const SystemParams& cyclic);
SystemParams to_cyclic(const SystemParams& angular);

ConfigFile parse_config_text(const std::string& text);
ConfigFile parse_config(const std::filesystem::path& path);

/// Writes every field explicitly, so parse_config_text(serialize_config(c)) == c.
std::string serialize_config(const ConfigFile& config);

/// Config equivalent of a figure preset, including its axes.
ConfigFile preset_config(const std::string& name);

}  // namespace magsteer
