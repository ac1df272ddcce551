#pragma once

#include <vector>

#include "thinfilm/stepper.hpp"

namespace thinfilm {

struct StabilityReport {
  double initial_relative_energy = 0.0;
  double final_relative_energy = 0.0;
  double max_ratio = 0.0;  // max over samples of rel_energy(t)/rel_energy(0)
  std::vector<double> times;
  std::vector<double> ratios;
};

// Runs two simulations, from u0 and from u0 perturbed by
// perturbation_scale * cos(pi x / l), and tracks the ratio of the relative
// energy to its initial value.  Bounded ratios are the discrete shadow of
// continuous dependence on the initial data.
StabilityReport uniqueness_stability_check(const FilmState& u0,
                                           double perturbation_scale,
                                           const Grid1D& grid,
                                           const FluidParams& params,
                                           const SolverConfig& config);

}  // namespace thinfilm
