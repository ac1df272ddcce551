#pragma once

#include <string>

#include "thinfilm/grid.hpp"
#include "thinfilm/mms.hpp"
#include "thinfilm/rheology.hpp"
#include "thinfilm/stepper.hpp"

namespace thinfilm {

enum class InitialKind { Constant, Cosine, Samples };

struct InitialCondition {
  InitialKind kind = InitialKind::Constant;
  double value = 1.0;      // constant
  double base = 1.0;       // cosine c0
  double amplitude = 0.0;  // cosine c1
  int wavenumber = 1;      // cosine k
  std::string path;        // samples file, one height per line
};

struct OutputConfig {
  std::string directory = "out";
  int snapshot_interval = 0;  // steps between snapshots; 0 = first/last only
  int diagnostics_cadence = 1;
};

struct MmsBlock {
  bool present = false;
  double c0 = 2.0;
  double c1 = 0.5;
  int wavenumber = 1;
  double lambda = 1.0;
  int levels = 4;
  int base_n = 32;
  double t_end = 2e-4;
  double dt_coeff = 0.25;  // dt = dt_coeff * h^2
};

// Optional manufactured forcing applied during `run`; lambda < 0 grows the
// amplitude and can drive the film toward touchdown.
struct ForcingBlock {
  bool present = false;
  double c0 = 1.0;
  double c1 = 0.0;
  int wavenumber = 1;
  double lambda = 1.0;
};

struct RunConfig {
  bool has_fluid = false;   // sigma/mu0/tau_star given
  bool has_direct = false;  // a/b/b_tilde given
  double sigma = 1.0, mu0 = 1.0, tau_star = 1.0;
  double a = 1.0, b = 0.0, b_tilde = 0.0;
  double alpha = 1.5;
  double half_length = 1.0;
  int n_cells = 256;
  InitialCondition initial;
  SolverConfig solver;
  OutputConfig output;
  MmsBlock mms;
  ForcingBlock forcing;
};

// Parses the line-oriented `[section]` / `key = value` format.  Unknown
// sections or keys are errors; messages carry the line number.  Throws
// std::runtime_error.
RunConfig parse_config(const std::string& text);

RunConfig load_config_file(const std::string& path);

// Full serialization; parse(serialize(c)) is the identity on all fields.
std::string serialize_config(const RunConfig& config);

FluidParams fluid_params(const RunConfig& config);

// Builds the initial state; throws if any height is not strictly positive.
FilmState build_initial(const RunConfig& config, const Grid1D& grid);

}  // namespace thinfilm
