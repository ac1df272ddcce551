#include "thinfilm/stepper.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace thinfilm {

namespace {

// reflect node index into [0, N] (even extension)
inline int reflect(int j, int n_cells) {
  if (j < 0) return -j;
  if (j > n_cells) return 2 * n_cells - j;
  return j;
}

// Newton linearization of the Ellis flux in the third derivative w around the
// frozen iterate w_f: since d/dw (|w|^(alpha-1) w) = alpha |w|^(alpha-1),
//   q(w) ~= a u^3 [(1 + alpha K) w - (alpha - 1) K w_f],  K = |b u w_f|^(alpha-1).
// The implicit coefficient of w is then a u^3 (1 + alpha K) (the same shape as
// coeff_A) and the remainder is an explicit flux offset; the fixed point is the
// exact Ellis flux.  Freezing the kernel without the alpha factor instead
// yields a dt-independent contraction rate near 1 for strong shear thinning.
struct FaceCoefficients {
  double mobility;  // implicit coefficient of w
  double offset;    // explicit Newton remainder in the flux
};

FaceCoefficients face_coefficients(double u_bar, double w_bar,
                                   const FluidParams& p,
                                   const SolverConfig& config,
                                   bool* floor_activated) {
  const double up = (config.use_regularized && u_bar < 0.0) ? 0.0 : u_bar;
  double k = 0.0;
  const double arg = std::abs(p.b * up * w_bar);
  if (arg > 0.0) k = std::pow(arg, p.alpha - 1.0);
  const double cubic = p.a * up * up * up;
  double mob = cubic * (1.0 + p.alpha * k);
  if (config.use_regularized) {
    const double floor = 0.5 * config.epsilon;
    if (mob < floor) {
      if (floor_activated) *floor_activated = true;
      mob = floor;
    }
  }
  return {mob, cubic * (p.alpha - 1.0) * k * w_bar};
}

}  // namespace

PentadiagonalSystem assemble_system(const FilmState& state, const Grid1D& grid,
                                    const FluidParams& params,
                                    const SolverConfig& config, double dt,
                                    const FilmState& frozen,
                                    const ForcingFn* forcing,
                                    bool* floor_activated) {
  const int nc = grid.n_cells;
  const int n = nc + 1;
  if (static_cast<int>(state.heights.size()) != n ||
      static_cast<int>(frozen.heights.size()) != n) {
    throw std::invalid_argument("assemble_system: size mismatch");
  }
  const double h = grid.spacing;
  const double h3 = h * h * h;

  // faces i+1/2 for i = -1..N, including the two reflection ghost faces
  const std::vector<double> fz = extend_even(frozen.heights, 2);
  const std::vector<double> uo = extend_even(state.heights, 2);
  const int nfaces = nc + 2;
  std::vector<double> mob(nfaces), q_old(nfaces);
  for (int f = 0; f < nfaces; ++f) {
    const int i = f - 1;  // left node of the face
    // node j lives at extended index j+2
    const double w_bar =
        (fz[i + 4] - 3.0 * fz[i + 3] + 3.0 * fz[i + 2] - fz[i + 1]) / h3;
    const double u_bar = 0.5 * (fz[i + 2] + fz[i + 3]);
    const FaceCoefficients fc =
        face_coefficients(u_bar, w_bar, params, config, floor_activated);
    mob[f] = fc.mobility;
    if (!std::isfinite(mob[f]) || !std::isfinite(fc.offset)) {
      throw std::runtime_error("assemble_system: non-finite face mobility");
    }
    const double w_old =
        (uo[i + 4] - 3.0 * uo[i + 3] + 3.0 * uo[i + 2] - uo[i + 1]) / h3;
    q_old[f] = mob[f] * w_old - fc.offset;
  }

  PentadiagonalSystem sys;
  sys.rows.assign(n, {0.0, 0.0, 0.0, 0.0, 0.0});
  sys.rhs.assign(n, 0.0);
  const double r = dt / h;
  static const int offs[4] = {2, 1, 0, -1};
  static const double coefs[4] = {1.0, -3.0, 3.0, -1.0};
  for (int node = 0; node < n; ++node) {
    sys.rows[node][2] += 1.0;
    for (int side = 0; side < 2; ++side) {
      const int i = side == 0 ? node : node - 1;  // face i+1/2
      const double sgn = side == 0 ? 1.0 : -1.0;
      const double scale = sgn * r * mob[i + 1] / h3;
      for (int s = 0; s < 4; ++s) {
        const int col = reflect(i + offs[s], nc);
        sys.rows[node][col - node + 2] += scale * coefs[s];
      }
      sys.rhs[node] -= sgn * r * q_old[i + 1];
    }
    if (forcing) {
      sys.rhs[node] += dt * (*forcing)(state.time + dt, grid.nodes[node]);
    }
  }
  return sys;
}

StepOutcome step(const FilmState& state, const Grid1D& grid,
                 const FluidParams& params, const SolverConfig& config,
                 double dt, const ForcingFn* forcing) {
  for (double u : state.heights) {
    if (!std::isfinite(u)) {
      throw std::invalid_argument("step: non-finite state");
    }
  }
  const int n = grid.n_cells + 1;
  double dt_try = dt;
  while (true) {
    bool floor_hit = false;
    std::vector<double> frozen = state.heights;
    bool converged = false;
    int iterations = 0;
    std::vector<double> next(n);
    for (int k = 0; k < config.picard_max; ++k) {
      iterations = k + 1;
      FilmState frozen_state{state.time, frozen};
      PentadiagonalSystem sys = assemble_system(
          state, grid, params, config, dt_try, frozen_state, forcing,
          &floor_hit);
      std::vector<double> delta;
      try {
        delta = solve_banded(sys);
      } catch (const std::runtime_error&) {
        break;  // singular system: retry with smaller dt
      }
      bool finite = true;
      double change = 0.0, norm = 1.0;
      for (int i = 0; i < n; ++i) {
        next[i] = state.heights[i] + delta[i];
        if (!std::isfinite(next[i])) finite = false;
      }
      if (!finite) break;
      for (int i = 0; i < n; ++i) {
        change = std::max(change, std::abs(next[i] - frozen[i]));
        norm = std::max(norm, std::abs(next[i]));
      }
      frozen = next;
      if (change <= config.picard_tol * norm) {
        converged = true;
        break;
      }
    }
    if (converged) {
      StepOutcome out;
      out.state.time = state.time + dt_try;
      out.state.heights = std::move(next);
      out.dt_used = dt_try;
      out.dt_next = std::min(dt_try * config.growth_factor, config.dt_max);
      out.picard_iterations = iterations;
      out.mobility_floor_activated = floor_hit;
      return out;
    }
    if (dt_try <= config.dt_min) {
      throw std::runtime_error(
          "step: Picard iteration failed to converge at dt_min");
    }
    dt_try = std::max(0.5 * dt_try, config.dt_min);
  }
}

const char* to_string(TerminationReason reason) {
  switch (reason) {
    case TerminationReason::TimeReached: return "t_end reached";
    case TerminationReason::Touchdown: return "touchdown";
    case TerminationReason::BlowUp: return "blow-up";
    case TerminationReason::StepFailure: return "step failure";
  }
  return "unknown";
}

RunReport run(const FilmState& initial, const Grid1D& grid,
              const FluidParams& params, SolverConfig config,
              const ForcingFn* forcing, const StepObserver* observer) {
  if (static_cast<int>(initial.heights.size()) != grid.n_cells + 1) {
    throw std::invalid_argument("run: initial state does not match grid");
  }
  double min0 = initial.heights.front();
  for (double u : initial.heights) {
    if (!(u > 0.0)) {
      throw std::invalid_argument("run: initial heights must be positive");
    }
    min0 = std::min(min0, u);
  }
  if (config.touchdown_threshold <= 0.0) {
    config.touchdown_threshold = 1e-6 * min0;
  }

  RunReport report;
  FilmState current = initial;
  report.diagnostics.push_back(make_record(current, grid, params, 0.0, 0));
  double dt_proposal = config.dt_initial;
  const double t_end = config.t_end;

  while (current.time < t_end * (1.0 - 1e-14)) {
    double dt = std::clamp(dt_proposal, config.dt_min, config.dt_max);
    dt = std::min(dt, t_end - current.time);
    StepOutcome out;
    try {
      out = step(current, grid, params, config, dt, forcing);
    } catch (const std::runtime_error&) {
      report.reason = TerminationReason::StepFailure;
      break;
    }
    current = out.state;
    dt_proposal = out.dt_next;
    report.mobility_floor_ever_activated |= out.mobility_floor_activated;
    report.diagnostics.push_back(make_record(current, grid, params,
                                             out.dt_used,
                                             out.picard_iterations));
    if (observer) {
      (*observer)(current, static_cast<int>(report.diagnostics.size()) - 1);
    }
    const DiagnosticsRecord& rec = report.diagnostics.back();
    if (rec.min_height <= config.touchdown_threshold) {
      report.reason = TerminationReason::Touchdown;
      break;
    }
    if (rec.blowup_monitor >= config.blowup_norm_cap) {
      report.reason = TerminationReason::BlowUp;
      break;
    }
    report.reason = TerminationReason::TimeReached;
  }
  report.final_state = current;
  report.termination_time = current.time;
  return report;
}

}  // namespace thinfilm
