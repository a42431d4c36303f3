// Copyright 2026 The gpqubit Authors
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

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gpq/bath.hpp"
#include "gpq/state.hpp"

namespace gpq {

enum class Mode { GpQnd, GpDissipative, Sweep, BlochSpheroid, Verify };

std::string_view mode_name(Mode m);

inline constexpr int kExitOk = 0;
inline constexpr int kExitBadConfig = 2;
inline constexpr int kExitNumerical = 3;

class ConfigError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Inclusive grid lo..hi with `points` values along one parameter.
struct SweepAxis {
  std::string axis;
  double lo = 0.0;
  double hi = 0.0;
  std::size_t points = 200;

  std::vector<double> values() const;
};

/// Every list parameter contributes one factor of a cartesian grid.
struct RunConfig {
  Mode mode = Mode::GpQnd;
  std::vector<double> theta0{0.5 * std::numbers::pi};
  std::vector<double> phi0{0.0};
  std::vector<double> temperature{0.0};
  std::vector<double> gamma0{0.0};
  std::vector<double> squeeze_r{0.0};
  std::vector<double> squeeze_a{0.0};
  std::vector<double> squeeze_phi{0.0};
  double omega = 1.0;
  double omega_c = 40.0;
  std::optional<SweepAxis> sweep;
  std::size_t samples = 2048;
  std::string out;  ///< empty: standard output
  std::uint64_t seed = 20260101;
  bool degrees = false;
  double time = 0.15;          ///< bloch-spheroid evaluation time
  std::size_t trials = 32;     ///< verify: random parameter points
  std::size_t threads = 0;     ///< 0: hardware concurrency

  /// Throws ConfigError on an inconsistent configuration.
  void validate() const;
};

/// "lo:hi:n" after "axis:"; n optional (default 200).
SweepAxis parse_sweep(std::string_view text);

/// Scalar with optional pi factor: "0.3", "pi", "3*pi/4", "pi/8", "-1.5e-3".
double parse_value(std::string_view text);

/// Comma separated parse_value list.
std::vector<double> parse_list(std::string_view text);

/// Applies one key = value setting (keys as the long flag names).
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

/// Parses line-oriented "key = value" text with '#' comments onto `config`.
void apply_config_text(RunConfig& config, std::string_view text);
void apply_config_file(RunConfig& config, const std::string& path);

/// One grid point of bath and initial-state parameters.
struct GridPoint {
  double theta0 = 0.0;
  double phi0 = 0.0;
  BathSpec bath;
};

/// Cartesian grid in deterministic order (sweep axis innermost).
std::vector<GridPoint> expand_grid(const RunConfig& config);

/// Evaluates the configuration and writes CSV to `out`; diagnostics go to
/// `err`. Returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Writes to config.out (or standard output when empty).
int run(const RunConfig& config);

}  // namespace gpq
