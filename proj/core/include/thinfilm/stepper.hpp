#pragma once

#include <functional>
#include <vector>

#include "thinfilm/banded.hpp"
#include "thinfilm/diagnostics.hpp"
#include "thinfilm/grid.hpp"
#include "thinfilm/rheology.hpp"

namespace thinfilm {

struct SolverConfig {
  double dt_initial = 1e-6;
  double dt_min = 1e-14;
  double dt_max = 1e-4;
  double t_end = 1.0;
  int picard_max = 25;
  double picard_tol = 1e-10;       // relative, max norm
  double epsilon = 1e-8;           // regularization floor
  double touchdown_threshold = 0;  // 0 means auto: 1e-6 * min(u0)
  double blowup_norm_cap = 1e6;
  double growth_factor = 1.2;
  bool use_regularized = false;
};

struct StepOutcome {
  FilmState state;
  double dt_used = 0.0;
  double dt_next = 0.0;
  int picard_iterations = 0;
  bool mobility_floor_activated = false;
};

// Optional nodal forcing g(t, x) added to the right-hand side of each
// implicit solve (manufactured-solution runs only).
using ForcingFn = std::function<double(double, double)>;

// Conservative frozen-coefficient implicit system for the height increment
// delta = u_new - u_old:
//   delta_i + (dt/h) [q_{i+1/2}(delta) - q_{i-1/2}(delta)]
//     = -(dt/h) [q_{i+1/2}(u_old) - q_{i-1/2}(u_old)] + dt g(t+dt, x_i),
// with face fluxes q = M_face(frozen) * (third difference / h^3) and
// reflection-folded boundary rows.  Fluxes across the domain boundary cancel
// pairwise, so mass is conserved structurally.
PentadiagonalSystem assemble_system(const FilmState& state, const Grid1D& grid,
                                    const FluidParams& params,
                                    const SolverConfig& config, double dt,
                                    const FilmState& frozen,
                                    const ForcingFn* forcing = nullptr,
                                    bool* floor_activated = nullptr);

// One adaptive implicit Euler step with Picard iteration on the frozen
// coefficients.  Halves dt and retries on Picard failure; throws
// std::runtime_error once dt_min is reached.
StepOutcome step(const FilmState& state, const Grid1D& grid,
                 const FluidParams& params, const SolverConfig& config,
                 double dt, const ForcingFn* forcing = nullptr);

enum class TerminationReason { TimeReached, Touchdown, BlowUp, StepFailure };

const char* to_string(TerminationReason reason);

struct RunReport {
  FilmState final_state;
  std::vector<DiagnosticsRecord> diagnostics;
  TerminationReason reason = TerminationReason::TimeReached;
  double termination_time = 0.0;
  bool mobility_floor_ever_activated = false;
};

// Called after every accepted step with the new state and its step index.
using StepObserver = std::function<void(const FilmState&, int)>;

// Advances the initial state to t_end, or until touchdown / blow-up / step
// failure.  Initial heights must be strictly positive.
RunReport run(const FilmState& initial, const Grid1D& grid,
              const FluidParams& params, SolverConfig config,
              const ForcingFn* forcing = nullptr,
              const StepObserver* observer = nullptr);

}  // namespace thinfilm
