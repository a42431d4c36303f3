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

// gpq: geometric phase sweeps, channel checks and Bloch-spheroid export.

#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "gpq/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Geometric phase of a qubit in a squeezed thermal bath"};
  app.option_defaults()->always_capture_default(false);

  // Flags are collected as text and applied after the config file so that
  // they override it.
  struct Flag {
    const char* name;
    const char* help;
    std::string value;
    CLI::Option* opt = nullptr;
  };
  std::vector<Flag> flags{
      {"mode", "gp-qnd | gp-dissipative | sweep | bloch-spheroid | verify", {}},
      {"theta0", "initial polar angle(s), comma list; accepts pi forms like 3*pi/4", {}},
      {"phi0", "initial azimuth(s)", {}},
      {"temp", "bath temperature(s)", {}},
      {"gamma0", "coupling strength(s)", {}},
      {"squeeze-r", "squeeze magnitude(s)", {}},
      {"squeeze-a", "dephasing squeeze slope(s), Phi(w) = a w", {}},
      {"squeeze-phi", "dissipative squeeze phase(s)", {}},
      {"omega", "qubit frequency (default 1)", {}},
      {"omega-c", "Ohmic cutoff (default 40)", {}},
      {"sweep", "axis:lo:hi[:n], inclusive, n defaults to 200", {}},
      {"samples", "trajectory / gamma grid intervals, or sphere points (default 2048)", {}},
      {"out", "output CSV path (default standard output)", {}},
      {"seed", "seed for verify mode", {}},
      {"time", "evaluation time for bloch-spheroid (default 0.15)", {}},
      {"trials", "random parameter points for verify (default 32)", {}},
      {"threads", "worker threads (default: all cores)", {}},
  };
  for (auto& f : flags) f.opt = app.add_option(std::string("--") + f.name, f.value, f.help);
  std::string config_path;
  app.add_option("--config", config_path, "key = value file; flags override it");
  bool degrees = false;
  app.add_flag("--degrees", degrees, "write angles in degrees");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return gpq::kExitBadConfig;
  }

  gpq::RunConfig config;
  try {
    if (!config_path.empty()) gpq::apply_config_file(config, config_path);
    for (const auto& f : flags) {
      if (f.opt->count() > 0) gpq::apply_setting(config, f.name, f.value);
    }
    if (degrees) config.degrees = true;
  } catch (const gpq::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return gpq::kExitBadConfig;
  }
  return gpq::run(config);
}
