#include "thinfilm/stability.hpp"

#include <cmath>
#include <stdexcept>

#include "thinfilm/diagnostics.hpp"

namespace thinfilm {

StabilityReport uniqueness_stability_check(const FilmState& u0,
                                           double perturbation_scale,
                                           const Grid1D& grid,
                                           const FluidParams& params,
                                           const SolverConfig& config) {
  FilmState v0 = u0;
  for (size_t i = 0; i < v0.heights.size(); ++i) {
    v0.heights[i] += perturbation_scale *
                     std::cos(M_PI * grid.nodes[i] / grid.half_length);
    if (!(v0.heights[i] > 0.0)) {
      throw std::domain_error(
          "uniqueness_stability_check: perturbed data not positive");
    }
  }

  StabilityReport report;
  const double re0 = relative_energy(u0, v0, grid);
  report.initial_relative_energy = re0;
  const double denom = std::max(re0, 1e-300);

  // lockstep fixed-dt advance so the two trajectories stay time-aligned
  FilmState a = u0, b = v0;
  const double dt = config.dt_initial;
  double t = 0.0;
  while (t < config.t_end * (1.0 - 1e-14)) {
    const double dt_step = std::min(dt, config.t_end - t);
    a = step(a, grid, params, config, dt_step).state;
    b = step(b, grid, params, config, dt_step).state;
    t = a.time;
    const double re = relative_energy(a, b, grid);
    report.times.push_back(t);
    report.ratios.push_back(re / denom);
    report.max_ratio = std::max(report.max_ratio, re / denom);
    report.final_relative_energy = re;
  }
  return report;
}

}  // namespace thinfilm
