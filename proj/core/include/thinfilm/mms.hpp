#pragma once

#include <string>
#include <vector>

#include "thinfilm/grid.hpp"
#include "thinfilm/rheology.hpp"
#include "thinfilm/stepper.hpp"

namespace thinfilm {

// Manufactured solution u*(t,x) = c0 + c1 e^{-lambda t} cos(k pi x / l).
// Satisfies u_x = u_xxx = 0 at x = +-l for every integer k.
struct ManufacturedSolution {
  double base = 2.0;        // c0
  double amplitude = 0.5;   // c1, |c1| < c0
  double decay_rate = 1.0;  // lambda
  int wavenumber = 1;       // k
};

FilmState exact_state(const ManufacturedSolution& ms, double t,
                      const Grid1D& grid);

// Closed-form derivatives of u* at (t, x).
struct ExactDerivatives {
  double u, u_t, u_x, u_xx, u_xxx, u_xxxx;
};
ExactDerivatives exact_derivatives(const ManufacturedSolution& ms, double t,
                                   double x, double half_length);

// Forcing g = u*_t + d/dx flux(u*), with the flux divergence expanded in
// closed form through the non-divergence coefficients.
double forcing(const ManufacturedSolution& ms, double t, double x,
               double half_length, const FluidParams& params);

// Returns the forcing as a callable bound to this solution and domain.
ForcingFn make_forcing(const ManufacturedSolution& ms, double half_length,
                       const FluidParams& params);

struct ConvergenceLevel {
  int level = 0;
  int n_cells = 0;
  double dt = 0.0;
  double max_error = 0.0;
  double observed_order = 0.0;  // log2(e_prev / e_this); 0 at level 0
};

struct OrderReport {
  std::vector<ConvergenceLevel> levels;
  std::string csv() const;  // level,N,dt,max_error,observed_order
};

// Forced runs on successively doubled grids with dt = dt_coeff * h^2,
// measured against the exact state at t_end.
OrderReport convergence_study(const ManufacturedSolution& ms,
                              const FluidParams& params, double half_length,
                              int base_n_cells, int levels, double t_end,
                              double dt_coeff);

}  // namespace thinfilm
