#pragma once

#include <vector>

#include "thinfilm/grid.hpp"
#include "thinfilm/rheology.hpp"

namespace thinfilm {

// Pointwise sample (u, u_x, u_xx, u_xxx) feeding the coefficient functions.
struct CoefficientSample {
  double z0 = 0.0;  // u
  double z1 = 0.0;  // u_x
  double z2 = 0.0;  // u_xx
  double z3 = 0.0;  // u_xxx
};

struct RegularizationConfig {
  double epsilon = 1e-8;  // parabolicity floor
};

// Coefficient of u_xxxx in the non-divergence form,
//   a z0^3 (1 + alpha |b z0 z3|^(alpha-1)).
// Defined for z0 > 0 only; use coeff_A_bar_eps for the global extension.
double coeff_A(const CoefficientSample& z, const FluidParams& params);

// Positive-part extension with parabolicity floor:
//   max(A(max(z0,0), z1, z2, z3), epsilon/2).
double coeff_A_bar_eps(const CoefficientSample& z, const FluidParams& params,
                       const RegularizationConfig& reg);

// Lower-order right-hand side of the non-divergence form,
//   -3 a z0^2 (1 + |b_tilde z0 z3|^(alpha-1)) z1 z3.
double coeff_F(const CoefficientSample& z, const FluidParams& params);

// Nodal difference between the centered divergence of the flux and the
// non-divergence split coeff_A * u_xxxx - coeff_F.  Consistency diagnostic;
// O(h^2) on smooth positive data.
std::vector<double> divergence_residual(const FilmState& state,
                                        const Grid1D& grid,
                                        const FluidParams& params);

}  // namespace thinfilm
