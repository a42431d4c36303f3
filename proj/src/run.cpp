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

#include "gpq/run.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>
#include <tuple>

#include <fmt/format.h>

#include "gpq/dephasing.hpp"
#include "gpq/dissipative.hpp"
#include "gpq/geometric_phase.hpp"

namespace gpq {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRk4Threshold = 1e-6;
constexpr double kKrausThreshold = 1e-8;
constexpr double kPhaseDampingThreshold = 1e-10;

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_number(std::string_view s, std::string_view whole) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ConfigError(fmt::format("cannot parse number '{}'", whole));
  }
  return v;
}

std::string canonical_key(std::string_view key) {
  std::string k(trim(key));
  std::replace(k.begin(), k.end(), '_', '-');
  std::transform(k.begin(), k.end(), k.begin(), [](unsigned char c) { return std::tolower(c); });
  return k;
}

std::size_t parse_count(std::string_view text, std::string_view key) {
  const double v = parse_number(text, text);
  if (!(v >= 0.0) || v != std::floor(v) || v > 1e9) {
    throw ConfigError(fmt::format("{} must be a non-negative integer, got '{}'", key, text));
  }
  return static_cast<std::size_t>(v);
}

bool parse_bool(std::string_view text, std::string_view key) {
  const std::string v = canonical_key(text);
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw ConfigError(fmt::format("{} expects a boolean, got '{}'", key, text));
}

Mode parse_mode(std::string_view text) {
  const std::string v = canonical_key(text);
  if (v == "gp-qnd") return Mode::GpQnd;
  if (v == "gp-dissipative") return Mode::GpDissipative;
  if (v == "sweep") return Mode::Sweep;
  if (v == "bloch-spheroid") return Mode::BlochSpheroid;
  if (v == "verify") return Mode::Verify;
  throw ConfigError(fmt::format("unknown mode '{}'", text));
}

const std::vector<std::string_view>& sweepable_axes() {
  static const std::vector<std::string_view> axes{"theta0",    "phi0",      "temp",       "gamma0",
                                                  "squeeze-r", "squeeze-a", "squeeze-phi"};
  return axes;
}

std::vector<double>* axis_values(RunConfig& c, std::string_view axis) {
  if (axis == "theta0") return &c.theta0;
  if (axis == "phi0") return &c.phi0;
  if (axis == "temp") return &c.temperature;
  if (axis == "gamma0") return &c.gamma0;
  if (axis == "squeeze-r") return &c.squeeze_r;
  if (axis == "squeeze-a") return &c.squeeze_a;
  if (axis == "squeeze-phi") return &c.squeeze_phi;
  return nullptr;
}

// ---- output -------------------------------------------------------------

std::string num(double v) {
  if (v == 0.0) return "0";
  if (std::isnan(v)) return "nan";
  return fmt::format("{:.12g}", v);
}

std::string field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  q += '"';
  return q;
}

struct Row {
  std::string line;
  bool numerical_failure = false;
};

std::size_t worker_count(const RunConfig& c, std::size_t jobs) {
  std::size_t n = c.threads ? c.threads : std::max(1u, std::thread::hardware_concurrency());
  return std::max<std::size_t>(1, std::min(n, jobs));
}

// Evaluates job(i) for i in [0, n) on a pool; results keep index order.
template <class T>
std::vector<T> parallel_map(std::size_t n, std::size_t workers, const std::function<T(std::size_t)>& job) {
  std::vector<T> out(n);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto body = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        out[i] = job(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = n;
      }
    }
  };
  if (workers <= 1) {
    body();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

struct Units {
  bool degrees = false;
  double angle(double v) const { return degrees ? v * 180.0 / kPi : v; }
};

std::string point_fields(const GridPoint& p, const Units& u) {
  return fmt::format("{},{},{},{},{},{},{},{},{}", num(u.angle(p.theta0)), num(u.angle(p.phi0)),
                     num(p.bath.temperature), num(p.bath.gamma0), num(p.bath.squeeze_r),
                     num(p.bath.squeeze_a), num(u.angle(p.bath.squeeze_phi)), num(p.bath.omega),
                     num(p.bath.omega_c));
}

constexpr std::string_view kPointHeader =
    "theta0,phi0,temp,gamma0,squeeze_r,squeeze_a,squeeze_phi,omega,omega_c";

using GammaKey = std::tuple<double, double, double, double>;

GammaKey gamma_key(const BathSpec& b) {
  return {b.gamma0, b.temperature, b.squeeze_r, b.squeeze_a};
}

std::map<GammaKey, std::shared_ptr<const GammaTable>> build_tables(
    const std::vector<GridPoint>& grid, const RunConfig& c) {
  std::vector<BathSpec> unique;
  std::map<GammaKey, std::size_t> index;
  for (const auto& p : grid) {
    if (index.emplace(gamma_key(p.bath), unique.size()).second) unique.push_back(p.bath);
  }
  const auto tables = parallel_map<std::shared_ptr<const GammaTable>>(
      unique.size(), worker_count(c, unique.size()),
      [&](std::size_t i) { return std::make_shared<const GammaTable>(unique[i], c.samples); });
  std::map<GammaKey, std::shared_ptr<const GammaTable>> out;
  for (const auto& [key, i] : index) out.emplace(key, tables[i]);
  return out;
}

std::string gp_fields(const GpResult& r, const Units& u) {
  return fmt::format("{},{},{},{},{},{}", num(u.angle(r.phase)), num(u.angle(r.overlap_arg)),
                     num(u.angle(r.connection_integral)), num(r.bloch_length_tau),
                     num(r.lambda_tau), num(u.angle(r.theta_tau)));
}

constexpr std::string_view kGpFailure = "nan,nan,nan,nan,nan,nan";

int emit(std::ostream& out, std::string_view header, const std::vector<Row>& rows) {
  out << header << '\n';
  bool failed = false;
  for (const auto& r : rows) {
    out << r.line << '\n';
    failed = failed || r.numerical_failure;
  }
  out.flush();
  return failed ? kExitNumerical : kExitOk;
}

int run_gp(const RunConfig& c, std::ostream& out) {
  const Units u{c.degrees};
  const auto grid = expand_grid(c);
  const bool qnd = c.mode == Mode::GpQnd;
  std::map<GammaKey, std::shared_ptr<const GammaTable>> tables;
  if (qnd) tables = build_tables(grid, c);
  const auto rows = parallel_map<Row>(grid.size(), worker_count(c, grid.size()), [&](std::size_t i) {
    const GridPoint& p = grid[i];
    const std::string head = fmt::format("{},{}", point_fields(p, u), num(u.angle(unitary_gp(p.theta0))));
    try {
      const GpResult r = qnd ? gp_qnd_closed(p.theta0, *tables.at(gamma_key(p.bath)))
                             : gp_dissipative_closed(p.theta0, p.phi0, p.bath);
      const std::string note = r.branch_note.empty() ? "-" : r.branch_note;
      return Row{fmt::format("{},{},ok,{}", head, gp_fields(r, u), field(note)), false};
    } catch (const NumericalError& e) {
      return Row{fmt::format("{},{},numerical-error,{}", head, kGpFailure, field(e.what())), true};
    }
  });
  return emit(out,
              fmt::format("{},unitary_gp,gp,overlap_arg,connection,bloch_length_tau,lambda_tau,"
                          "theta_tau,flag,message",
                          kPointHeader),
              rows);
}

int run_sweep(const RunConfig& c, std::ostream& out) {
  const Units u{c.degrees};
  const auto grid = expand_grid(c);
  const auto tables = build_tables(grid, c);
  const auto rows = parallel_map<Row>(grid.size(), worker_count(c, grid.size()), [&](std::size_t i) {
    const GridPoint& p = grid[i];
    std::string q = "nan,nan";
    std::string d = "nan,nan";
    std::vector<std::string> problems;
    try {
      const GpResult r = gp_qnd_closed(p.theta0, *tables.at(gamma_key(p.bath)));
      q = fmt::format("{},{}", num(u.angle(r.phase)), num(r.bloch_length_tau));
    } catch (const NumericalError& e) {
      problems.push_back(fmt::format("dephasing: {}", e.what()));
    }
    try {
      const GpResult r = gp_dissipative_closed(p.theta0, p.phi0, p.bath);
      d = fmt::format("{},{}", num(u.angle(r.phase)), num(r.bloch_length_tau));
    } catch (const NumericalError& e) {
      problems.push_back(fmt::format("dissipative: {}", e.what()));
    }
    std::string msg = "-";
    if (!problems.empty()) {
      msg = problems.front();
      for (std::size_t k = 1; k < problems.size(); ++k) msg += "; " + problems[k];
    }
    return Row{fmt::format("{},{},{},{},{},{}", point_fields(p, u), num(u.angle(unitary_gp(p.theta0))),
                           q, d, problems.empty() ? "ok" : "numerical-error", field(msg)),
               !problems.empty()};
  });
  return emit(out,
              fmt::format("{},unitary_gp,gp_qnd,bloch_length_tau_qnd,gp_dissipative,"
                          "bloch_length_tau_dissipative,flag,message",
                          kPointHeader),
              rows);
}

int run_spheroid(const RunConfig& c, std::ostream& out) {
  const Units u{c.degrees};
  // Initial-state axes do not enter a channel; one block per bath.
  std::vector<BathSpec> baths;
  for (const auto& p : expand_grid(c)) {
    const bool seen = std::any_of(baths.begin(), baths.end(), [&](const BathSpec& b) {
      return b.gamma0 == p.bath.gamma0 && b.temperature == p.bath.temperature &&
             b.squeeze_r == p.bath.squeeze_r && b.squeeze_a == p.bath.squeeze_a &&
             b.squeeze_phi == p.bath.squeeze_phi;
    });
    if (!seen) baths.push_back(p.bath);
  }
  const auto sphere = fibonacci_sphere(c.samples);
  struct Block {
    std::vector<Row> rows;
  };
  const auto blocks = parallel_map<Block>(baths.size(), worker_count(c, baths.size()), [&](std::size_t i) {
    const BathSpec& b = baths[i];
    const std::string prefix = fmt::format("{},{},{},{},{},{},{},{}", num(b.temperature), num(b.gamma0),
                                           num(b.squeeze_r), num(b.squeeze_a),
                                           num(u.angle(b.squeeze_phi)), num(b.omega), num(b.omega_c),
                                           num(c.time));
    Block blk;
    auto add_channel = [&](std::string_view name, const std::function<KrausSet()>& make,
                           std::string_view invalid_flag, bool numerical) {
      try {
        const AffineBlochMap map = affine_map_of(make());
        for (std::size_t k = 0; k < sphere.size(); ++k) {
          const BlochVector img = map.apply(sphere[k]);
          blk.rows.push_back(Row{fmt::format("{},{},{},{},{},{},{},{},{},ok,-", name, prefix, k,
                                             num(sphere[k].x), num(sphere[k].y), num(sphere[k].z),
                                             num(img.x), num(img.y), num(img.z)),
                                 false});
        }
      } catch (const NumericalError& e) {
        blk.rows.push_back(Row{fmt::format("{},{},0,nan,nan,nan,nan,nan,nan,{},{}", name, prefix,
                                           invalid_flag, field(e.what())),
                               numerical});
      }
    };
    add_channel("sgad", [&] { return sgad_channel(c.time, b).kraus; }, "sgad-invalid", false);
    add_channel("phase-damping", [&] { return phase_damping_kraus(c.time, b); }, "numerical-error", true);
    return blk;
  });
  std::vector<Row> rows;
  for (const auto& blk : blocks) rows.insert(rows.end(), blk.rows.begin(), blk.rows.end());
  return emit(out,
              "channel,temp,gamma0,squeeze_r,squeeze_a,squeeze_phi,omega,omega_c,time,index,"
              "x0,y0,z0,x,y,z,flag,message",
              rows);
}

// Portable uniform variate in [0, 1) from a 64-bit engine.
double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

int run_verify(const RunConfig& c, std::ostream& out) {
  struct Trial {
    GridPoint p;
    double t = 0.0;
  };
  std::mt19937_64 rng(c.seed);
  std::vector<Trial> trials;
  for (std::size_t k = 0; k < c.trials; ++k) {
    Trial tr;
    tr.p.theta0 = kPi * unit_draw(rng);
    tr.p.phi0 = 2.0 * kPi * unit_draw(rng);
    tr.p.bath.omega = c.omega;
    tr.p.bath.omega_c = c.omega_c;
    tr.p.bath.temperature = 10.0 * unit_draw(rng);
    tr.p.bath.gamma0 = 0.001 + 0.599 * unit_draw(rng);
    tr.p.bath.squeeze_r = unit_draw(rng);
    tr.p.bath.squeeze_a = 0.5 * unit_draw(rng);
    tr.p.bath.squeeze_phi = 2.0 * kPi * unit_draw(rng);
    tr.t = tr.p.bath.period() * unit_draw(rng);
    trials.push_back(tr);
  }
  // The two reductions named in the equivalence checks ride along.
  for (double temp : {0.0, 2.0}) {
    Trial tr;
    tr.p.theta0 = 2.0;
    tr.p.phi0 = 0.7;
    tr.p.bath.omega = c.omega;
    tr.p.bath.omega_c = c.omega_c;
    tr.p.bath.temperature = temp;
    tr.p.bath.gamma0 = 0.3;
    tr.t = 1.3;
    trials.push_back(tr);
  }

  const Units u{c.degrees};
  const auto rows = parallel_map<Row>(trials.size(), worker_count(c, trials.size()), [&](std::size_t i) {
    const Trial& tr = trials[i];
    const GridPoint& p = tr.p;
    const QubitState rho0 = QubitState::from_angles(p.theta0, p.phi0);
    const DissipativeEvolution evo(p.theta0, p.phi0, p.bath);
    const Matrix2 closed = evo.interaction_state(tr.t).matrix();
    const double tau = p.bath.period();
    double rk4 = std::nan("");
    double kraus = std::nan("");
    double rk4_kraus = std::nan("");
    double pd = std::nan("");
    std::string flag = "ok";
    std::string msg = "-";
    bool numerical = false;
    Matrix2 rk4_state = closed;
    try {
      if (tr.t > 0.0) {
        const auto sol = integrate_lindblad(rho0.matrix(), p.bath, tr.t, OdeSpec{tau / 4096.0});
        rk4_state = sol.states.back();
      }
      rk4 = max_abs_diff(rk4_state, closed);
      const QubitState qnd = qnd_state(tr.t, p.theta0, p.phi0, p.bath);
      pd = max_abs_diff(apply_kraus(rho0, phase_damping_kraus(tr.t, p.bath)).matrix(), qnd.matrix());
    } catch (const NumericalError& e) {
      flag = "numerical-error";
      msg = e.what();
      numerical = true;
    }
    try {
      const Matrix2 k = apply_kraus(rho0.matrix(), sgad_channel(tr.t, p.bath).kraus);
      kraus = max_abs_diff(k, closed);
      rk4_kraus = max_abs_diff(k, rk4_state);
    } catch (const SgadError& e) {
      if (flag == "ok") {
        flag = "sgad-invalid";
        msg = e.what();
      }
    }
    if (!numerical) {
      std::vector<std::string> over;
      if (!(rk4 < kRk4Threshold)) over.push_back("rk4_vs_closed");
      if (!std::isnan(kraus) && !(kraus < kKrausThreshold)) over.push_back("kraus_vs_closed");
      if (!std::isnan(rk4_kraus) && !(rk4_kraus < kRk4Threshold)) over.push_back("rk4_vs_kraus");
      if (!(pd < kPhaseDampingThreshold)) over.push_back("phase_damping_vs_closed");
      if (!over.empty()) {
        flag = "threshold-exceeded";
        msg = over.front();
        for (std::size_t k = 1; k < over.size(); ++k) msg += " " + over[k];
        numerical = true;
      }
    }
    return Row{fmt::format("{},{},{},{},{},{},{},{},{}", i, point_fields(p, u), num(tr.t), num(rk4),
                           num(kraus), num(rk4_kraus), num(pd), flag, field(msg)),
               numerical};
  });
  return emit(out,
              fmt::format("trial,{},time,rk4_vs_closed,kraus_vs_closed,rk4_vs_kraus,"
                          "phase_damping_vs_closed,flag,message",
                          kPointHeader),
              rows);
}

}  // namespace

std::string_view mode_name(Mode m) {
  switch (m) {
    case Mode::GpQnd: return "gp-qnd";
    case Mode::GpDissipative: return "gp-dissipative";
    case Mode::Sweep: return "sweep";
    case Mode::BlochSpheroid: return "bloch-spheroid";
    case Mode::Verify: return "verify";
  }
  return "unknown";
}

std::vector<double> SweepAxis::values() const {
  std::vector<double> v(points);
  for (std::size_t k = 0; k < points; ++k) {
    const double f = static_cast<double>(k) / static_cast<double>(points - 1);
    v[k] = lo + (hi - lo) * f;
  }
  v.front() = lo;
  v.back() = hi;
  return v;
}

double parse_value(std::string_view text) {
  const std::string_view s = trim(text);
  const auto pos = s.find("pi");
  if (pos == std::string_view::npos) return parse_number(s, text);
  double factor = 1.0;
  std::string_view pre = trim(s.substr(0, pos));
  if (!pre.empty()) {
    if (pre == "-") {
      factor = -1.0;
    } else {
      if (pre.back() != '*') throw ConfigError(fmt::format("cannot parse value '{}'", text));
      pre.remove_suffix(1);
      factor = parse_number(pre, text);
    }
  }
  double divisor = 1.0;
  std::string_view post = trim(s.substr(pos + 2));
  if (!post.empty()) {
    if (post.front() != '/') throw ConfigError(fmt::format("cannot parse value '{}'", text));
    post.remove_prefix(1);
    divisor = parse_number(post, text);
    if (divisor == 0.0) throw ConfigError(fmt::format("division by zero in '{}'", text));
  }
  return factor * kPi / divisor;
}

std::vector<double> parse_list(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_value(text.substr(start, comma == std::string_view::npos ? text.npos
                                                                                  : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

SweepAxis parse_sweep(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto colon = text.find(':', start);
    parts.push_back(trim(text.substr(start, colon == std::string_view::npos ? text.npos : colon - start)));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (parts.size() != 3 && parts.size() != 4) {
    throw ConfigError(fmt::format("sweep '{}' is not axis:lo:hi[:n]", text));
  }
  SweepAxis s;
  s.axis = canonical_key(parts[0]);
  if (std::find(sweepable_axes().begin(), sweepable_axes().end(), s.axis) == sweepable_axes().end()) {
    throw ConfigError(fmt::format("unknown sweep axis '{}'", parts[0]));
  }
  s.lo = parse_value(parts[1]);
  s.hi = parse_value(parts[2]);
  if (parts.size() == 4) s.points = parse_count(parts[3], "sweep points");
  if (!(s.lo < s.hi)) throw ConfigError(fmt::format("sweep bounds not ordered in '{}'", text));
  if (s.points < 2) throw ConfigError(fmt::format("sweep needs at least 2 points in '{}'", text));
  return s;
}

void apply_setting(RunConfig& c, std::string_view key_in, std::string_view value_in) {
  const std::string key = canonical_key(key_in);
  const std::string_view value = trim(value_in);
  if (value.empty()) throw ConfigError(fmt::format("empty value for '{}'", key));
  if (key == "mode") {
    c.mode = parse_mode(value);
  } else if (auto* list = axis_values(c, key)) {
    *list = parse_list(value);
  } else if (key == "omega") {
    c.omega = parse_value(value);
  } else if (key == "omega-c") {
    c.omega_c = parse_value(value);
  } else if (key == "sweep") {
    c.sweep = parse_sweep(value);
  } else if (key == "samples") {
    c.samples = parse_count(value, key);
  } else if (key == "out") {
    c.out = std::string(value);
  } else if (key == "seed") {
    c.seed = parse_count(value, key);
  } else if (key == "degrees") {
    c.degrees = parse_bool(value, key);
  } else if (key == "time") {
    c.time = parse_value(value);
  } else if (key == "trials") {
    c.trials = parse_count(value, key);
  } else if (key == "threads") {
    c.threads = parse_count(value, key);
  } else {
    throw ConfigError(fmt::format("unknown setting '{}'", key_in));
  }
}

void apply_config_text(RunConfig& c, std::string_view text) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    std::string_view line = text.substr(start, nl == std::string_view::npos ? text.npos : nl - start);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) {
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) {
        throw ConfigError(fmt::format("line {}: expected key = value", line_no));
      }
      try {
        apply_setting(c, line.substr(0, eq), line.substr(eq + 1));
      } catch (const ConfigError& e) {
        throw ConfigError(fmt::format("line {}: {}", line_no, e.what()));
      }
    }
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
}

void apply_config_file(RunConfig& c, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("cannot open config file '{}'", path));
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    apply_config_text(c, buf.str());
  } catch (const ConfigError& e) {
    throw ConfigError(fmt::format("{}: {}", path, e.what()));
  }
}

void RunConfig::validate() const {
  if (samples < 16) throw ConfigError(fmt::format("samples = {} is below 16", samples));
  if (mode == Mode::Verify && trials == 0) throw ConfigError("verify needs trials >= 1");
  if (!(time >= 0.0 && std::isfinite(time))) throw ConfigError(fmt::format("time = {} invalid", time));
  RunConfig probe = *this;
  for (const auto& axis : sweepable_axes()) {
    if (axis_values(probe, axis)->empty()) throw ConfigError(fmt::format("{} list is empty", axis));
  }
  for (const auto& p : expand_grid(*this)) {
    if (!(p.theta0 >= 0.0 && p.theta0 <= kPi)) {
      throw ConfigError(fmt::format("theta0 = {} outside [0, pi]", p.theta0));
    }
    if (!(p.phi0 >= 0.0 && p.phi0 < 2.0 * kPi)) {
      throw ConfigError(fmt::format("phi0 = {} outside [0, 2 pi)", p.phi0));
    }
    try {
      p.bath.validate();
    } catch (const DomainError& e) {
      throw ConfigError(e.what());
    }
  }
}

std::vector<GridPoint> expand_grid(const RunConfig& config) {
  RunConfig c = config;
  std::vector<std::string_view> order{"gamma0", "temp", "squeeze-r", "squeeze-a", "squeeze-phi",
                                      "phi0", "theta0"};
  if (c.sweep) {
    *axis_values(c, c.sweep->axis) = c.sweep->values();
    std::erase(order, std::string_view(c.sweep->axis));
    order.push_back(c.sweep->axis);
  }
  std::vector<const std::vector<double>*> lists;
  std::size_t total = 1;
  for (auto name : order) {
    lists.push_back(axis_values(c, name));
    total *= lists.back()->size();
  }
  std::vector<GridPoint> grid;
  grid.reserve(total);
  std::vector<std::size_t> idx(order.size(), 0);
  for (std::size_t n = 0; n < total; ++n) {
    GridPoint p;
    p.bath.omega = c.omega;
    p.bath.omega_c = c.omega_c;
    for (std::size_t k = 0; k < order.size(); ++k) {
      const double v = (*lists[k])[idx[k]];
      const std::string_view name = order[k];
      if (name == "theta0") p.theta0 = v;
      else if (name == "phi0") p.phi0 = v;
      else if (name == "temp") p.bath.temperature = v;
      else if (name == "gamma0") p.bath.gamma0 = v;
      else if (name == "squeeze-r") p.bath.squeeze_r = v;
      else if (name == "squeeze-a") p.bath.squeeze_a = v;
      else p.bath.squeeze_phi = v;
    }
    grid.push_back(p);
    for (std::size_t k = order.size(); k-- > 0;) {
      if (++idx[k] < lists[k]->size()) break;
      idx[k] = 0;
    }
  }
  return grid;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.validate();
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadConfig;
  }
  try {
    int status = kExitOk;
    switch (config.mode) {
      case Mode::GpQnd:
      case Mode::GpDissipative: status = run_gp(config, out); break;
      case Mode::Sweep: status = run_sweep(config, out); break;
      case Mode::BlochSpheroid: status = run_spheroid(config, out); break;
      case Mode::Verify: status = run_verify(config, out); break;
    }
    if (status == kExitNumerical) err << "error: numerical failure in at least one row (see flag column)\n";
    return status;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
}

int run(const RunConfig& config) {
  if (config.out.empty()) return run(config, std::cout, std::cerr);
  std::ostringstream buf;
  const int status = run(config, buf, std::cerr);
  if (status == kExitBadConfig) return status;
  std::ofstream file(config.out, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open output file '" << config.out << "'\n";
    return kExitBadConfig;
  }
  file << buf.str();
  return status;
}

}  // namespace gpq
