#include "thinfilm/run_config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace thinfilm {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
  throw std::runtime_error("config error (line " + std::to_string(line) +
                           "): " + msg);
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_real(const std::string& v, int line, const std::string& key) {
  try {
    size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    fail(line, "key '" + key + "': expected a number, got '" + v + "'");
  }
}

int parse_int(const std::string& v, int line, const std::string& key) {
  try {
    size_t pos = 0;
    const int x = std::stoi(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    fail(line, "key '" + key + "': expected an integer, got '" + v + "'");
  }
}

bool parse_bool(const std::string& v, int line, const std::string& key) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  fail(line, "key '" + key + "': expected a boolean, got '" + v + "'");
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string raw;
  std::string section;
  int line = 0;
  std::set<std::string> seen_sections;

  while (std::getline(in, raw)) {
    ++line;
    std::string s = raw;
    const auto hash = s.find('#');
    if (hash != std::string::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') fail(line, "malformed section header");
      section = trim(s.substr(1, s.size() - 2));
      static const std::set<std::string> known = {
          "fluid",  "coefficients", "domain", "initial",
          "solver", "output",       "mms",    "forcing"};
      if (!known.count(section)) fail(line, "unknown section [" + section + "]");
      seen_sections.insert(section);
      if (section == "mms") cfg.mms.present = true;
      if (section == "forcing") cfg.forcing.present = true;
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos) fail(line, "expected 'key = value'");
    const std::string key = trim(s.substr(0, eq));
    const std::string val = trim(s.substr(eq + 1));
    if (section.empty()) fail(line, "key '" + key + "' outside any section");
    if (key.empty()) fail(line, "empty key");
    if (val.empty()) fail(line, "key '" + key + "' has no value");

    if (section == "fluid") {
      cfg.has_fluid = true;
      if (key == "sigma") cfg.sigma = parse_real(val, line, key);
      else if (key == "mu0") cfg.mu0 = parse_real(val, line, key);
      else if (key == "tau_star") cfg.tau_star = parse_real(val, line, key);
      else if (key == "alpha") cfg.alpha = parse_real(val, line, key);
      else fail(line, "unknown key '" + key + "' in [fluid]");
    } else if (section == "coefficients") {
      cfg.has_direct = true;
      if (key == "a") cfg.a = parse_real(val, line, key);
      else if (key == "b") cfg.b = parse_real(val, line, key);
      else if (key == "b_tilde") cfg.b_tilde = parse_real(val, line, key);
      else if (key == "alpha") cfg.alpha = parse_real(val, line, key);
      else fail(line, "unknown key '" + key + "' in [coefficients]");
    } else if (section == "domain") {
      if (key == "half_length") cfg.half_length = parse_real(val, line, key);
      else if (key == "n_cells") cfg.n_cells = parse_int(val, line, key);
      else fail(line, "unknown key '" + key + "' in [domain]");
    } else if (section == "initial") {
      if (key == "type") {
        if (val == "constant") cfg.initial.kind = InitialKind::Constant;
        else if (val == "cosine") cfg.initial.kind = InitialKind::Cosine;
        else if (val == "samples") cfg.initial.kind = InitialKind::Samples;
        else fail(line, "initial type must be constant, cosine, or samples");
      } else if (key == "value") cfg.initial.value = parse_real(val, line, key);
      else if (key == "base") cfg.initial.base = parse_real(val, line, key);
      else if (key == "amplitude") cfg.initial.amplitude = parse_real(val, line, key);
      else if (key == "wavenumber") cfg.initial.wavenumber = parse_int(val, line, key);
      else if (key == "path") cfg.initial.path = val;
      else fail(line, "unknown key '" + key + "' in [initial]");
    } else if (section == "solver") {
      SolverConfig& sc = cfg.solver;
      if (key == "dt_initial") sc.dt_initial = parse_real(val, line, key);
      else if (key == "dt_min") sc.dt_min = parse_real(val, line, key);
      else if (key == "dt_max") sc.dt_max = parse_real(val, line, key);
      else if (key == "t_end") sc.t_end = parse_real(val, line, key);
      else if (key == "picard_max") sc.picard_max = parse_int(val, line, key);
      else if (key == "picard_tol") sc.picard_tol = parse_real(val, line, key);
      else if (key == "epsilon") sc.epsilon = parse_real(val, line, key);
      else if (key == "touchdown_threshold") sc.touchdown_threshold = parse_real(val, line, key);
      else if (key == "blowup_norm_cap") sc.blowup_norm_cap = parse_real(val, line, key);
      else if (key == "growth_factor") sc.growth_factor = parse_real(val, line, key);
      else if (key == "use_regularized") sc.use_regularized = parse_bool(val, line, key);
      else fail(line, "unknown key '" + key + "' in [solver]");
    } else if (section == "output") {
      if (key == "directory") cfg.output.directory = val;
      else if (key == "snapshot_interval") cfg.output.snapshot_interval = parse_int(val, line, key);
      else if (key == "diagnostics_cadence") cfg.output.diagnostics_cadence = parse_int(val, line, key);
      else fail(line, "unknown key '" + key + "' in [output]");
    } else if (section == "mms") {
      MmsBlock& m = cfg.mms;
      if (key == "c0") m.c0 = parse_real(val, line, key);
      else if (key == "c1") m.c1 = parse_real(val, line, key);
      else if (key == "wavenumber") m.wavenumber = parse_int(val, line, key);
      else if (key == "lambda") m.lambda = parse_real(val, line, key);
      else if (key == "levels") m.levels = parse_int(val, line, key);
      else if (key == "base_n") m.base_n = parse_int(val, line, key);
      else if (key == "t_end") m.t_end = parse_real(val, line, key);
      else if (key == "dt_coeff") m.dt_coeff = parse_real(val, line, key);
      else fail(line, "unknown key '" + key + "' in [mms]");
    } else if (section == "forcing") {
      ForcingBlock& f = cfg.forcing;
      if (key == "c0") f.c0 = parse_real(val, line, key);
      else if (key == "c1") f.c1 = parse_real(val, line, key);
      else if (key == "wavenumber") f.wavenumber = parse_int(val, line, key);
      else if (key == "lambda") f.lambda = parse_real(val, line, key);
      else fail(line, "unknown key '" + key + "' in [forcing]");
    }
  }

  // validation
  if (cfg.has_fluid && cfg.has_direct) {
    throw std::runtime_error(
        "config error: [fluid] and [coefficients] are mutually exclusive");
  }
  if (!cfg.has_fluid && !cfg.has_direct) {
    throw std::runtime_error(
        "config error: one of [fluid] or [coefficients] is required");
  }
  if (!(cfg.alpha > 1.0)) {
    throw std::runtime_error("config error: alpha must exceed 1");
  }
  if (!(cfg.half_length > 0.0)) {
    throw std::runtime_error("config error: half_length must be positive");
  }
  if (cfg.n_cells < 8) {
    throw std::runtime_error("config error: n_cells must be >= 8");
  }
  const SolverConfig& sc = cfg.solver;
  if (!(sc.dt_min <= sc.dt_initial && sc.dt_initial <= sc.dt_max) ||
      !(sc.dt_min > 0.0)) {
    throw std::runtime_error(
        "config error: need 0 < dt_min <= dt_initial <= dt_max");
  }
  if (!(sc.t_end > 0.0)) {
    throw std::runtime_error("config error: t_end must be positive");
  }
  if (sc.picard_max < 1 || !(sc.picard_tol > 0.0)) {
    throw std::runtime_error("config error: invalid Picard settings");
  }
  if (!(sc.epsilon > 0.0)) {
    throw std::runtime_error("config error: epsilon must be positive");
  }
  if (!(sc.growth_factor > 1.0)) {
    throw std::runtime_error("config error: growth_factor must exceed 1");
  }
  if (cfg.mms.present) {
    if (cfg.mms.levels < 3) {
      throw std::runtime_error("config error: mms levels must be >= 3");
    }
    if (!(std::abs(cfg.mms.c1) < cfg.mms.c0)) {
      throw std::runtime_error("config error: mms requires |c1| < c0");
    }
    if (cfg.mms.wavenumber < 1 || !(cfg.mms.lambda > 0.0)) {
      throw std::runtime_error("config error: invalid mms block");
    }
  }
  if (cfg.output.diagnostics_cadence < 1) {
    throw std::runtime_error("config error: diagnostics_cadence must be >= 1");
  }
  return cfg;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string serialize_config(const RunConfig& c) {
  std::ostringstream out;
  if (c.has_fluid) {
    out << "[fluid]\n"
        << "sigma = " << fmt(c.sigma) << "\n"
        << "mu0 = " << fmt(c.mu0) << "\n"
        << "tau_star = " << fmt(c.tau_star) << "\n"
        << "alpha = " << fmt(c.alpha) << "\n";
  } else {
    out << "[coefficients]\n"
        << "a = " << fmt(c.a) << "\n"
        << "b = " << fmt(c.b) << "\n"
        << "b_tilde = " << fmt(c.b_tilde) << "\n"
        << "alpha = " << fmt(c.alpha) << "\n";
  }
  out << "[domain]\n"
      << "half_length = " << fmt(c.half_length) << "\n"
      << "n_cells = " << c.n_cells << "\n";
  out << "[initial]\n";
  switch (c.initial.kind) {
    case InitialKind::Constant:
      out << "type = constant\nvalue = " << fmt(c.initial.value) << "\n";
      break;
    case InitialKind::Cosine:
      out << "type = cosine\n"
          << "base = " << fmt(c.initial.base) << "\n"
          << "amplitude = " << fmt(c.initial.amplitude) << "\n"
          << "wavenumber = " << c.initial.wavenumber << "\n";
      break;
    case InitialKind::Samples:
      out << "type = samples\npath = " << c.initial.path << "\n";
      break;
  }
  const SolverConfig& s = c.solver;
  out << "[solver]\n"
      << "dt_initial = " << fmt(s.dt_initial) << "\n"
      << "dt_min = " << fmt(s.dt_min) << "\n"
      << "dt_max = " << fmt(s.dt_max) << "\n"
      << "t_end = " << fmt(s.t_end) << "\n"
      << "picard_max = " << s.picard_max << "\n"
      << "picard_tol = " << fmt(s.picard_tol) << "\n"
      << "epsilon = " << fmt(s.epsilon) << "\n"
      << "touchdown_threshold = " << fmt(s.touchdown_threshold) << "\n"
      << "blowup_norm_cap = " << fmt(s.blowup_norm_cap) << "\n"
      << "growth_factor = " << fmt(s.growth_factor) << "\n"
      << "use_regularized = " << (s.use_regularized ? "true" : "false") << "\n";
  out << "[output]\n"
      << "directory = " << c.output.directory << "\n"
      << "snapshot_interval = " << c.output.snapshot_interval << "\n"
      << "diagnostics_cadence = " << c.output.diagnostics_cadence << "\n";
  if (c.mms.present) {
    out << "[mms]\n"
        << "c0 = " << fmt(c.mms.c0) << "\n"
        << "c1 = " << fmt(c.mms.c1) << "\n"
        << "wavenumber = " << c.mms.wavenumber << "\n"
        << "lambda = " << fmt(c.mms.lambda) << "\n"
        << "levels = " << c.mms.levels << "\n"
        << "base_n = " << c.mms.base_n << "\n"
        << "t_end = " << fmt(c.mms.t_end) << "\n"
        << "dt_coeff = " << fmt(c.mms.dt_coeff) << "\n";
  }
  if (c.forcing.present) {
    out << "[forcing]\n"
        << "c0 = " << fmt(c.forcing.c0) << "\n"
        << "c1 = " << fmt(c.forcing.c1) << "\n"
        << "wavenumber = " << c.forcing.wavenumber << "\n"
        << "lambda = " << fmt(c.forcing.lambda) << "\n";
  }
  return out.str();
}

FluidParams fluid_params(const RunConfig& c) {
  if (c.has_fluid) return derive_params(c.sigma, c.mu0, c.tau_star, c.alpha);
  return params_from_coefficients(c.a, c.b, c.b_tilde, c.alpha);
}

FilmState build_initial(const RunConfig& c, const Grid1D& grid) {
  FilmState s;
  s.time = 0.0;
  s.heights.resize(grid.nodes.size());
  switch (c.initial.kind) {
    case InitialKind::Constant:
      for (double& v : s.heights) v = c.initial.value;
      break;
    case InitialKind::Cosine: {
      const double phi = c.initial.wavenumber * M_PI / grid.half_length;
      for (size_t i = 0; i < grid.nodes.size(); ++i) {
        s.heights[i] =
            c.initial.base + c.initial.amplitude * std::cos(phi * grid.nodes[i]);
      }
      break;
    }
    case InitialKind::Samples: {
      std::ifstream in(c.initial.path);
      if (!in) {
        throw std::runtime_error("cannot open samples file: " + c.initial.path);
      }
      for (double& v : s.heights) {
        if (!(in >> v)) {
          throw std::runtime_error(
              "samples file has fewer values than grid nodes");
        }
      }
      break;
    }
  }
  for (double v : s.heights) {
    if (!(v > 0.0)) {
      throw std::runtime_error("initial heights must be strictly positive");
    }
  }
  return s;
}

}  // namespace thinfilm
