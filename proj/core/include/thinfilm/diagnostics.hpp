#pragma once

#include <string>
#include <vector>

#include "thinfilm/grid.hpp"
#include "thinfilm/rheology.hpp"

namespace thinfilm {

struct DiagnosticsRecord {
  double time = 0.0;
  double mass = 0.0;
  double energy = 0.0;
  double dissipation = 0.0;
  double min_height = 0.0;
  double max_third_derivative = 0.0;
  double blowup_monitor = 0.0;
  double dt = 0.0;
  int picard_iterations = 0;
};

// CSV header / row serialization (17 significant digits, locale-free).
std::string diagnostics_csv_header();
std::string diagnostics_csv_row(const DiagnosticsRecord& rec);

// Trapezoidal quadrature of u over (-l, l).
double mass(const FilmState& state, const Grid1D& grid);

// E(u) = 1/2 int |u_x|^2 dx.
double energy(const FilmState& state, const Grid1D& grid);

// a int u^3 |u_xxx|^2 + b^(alpha-1) u^(alpha+2) |u_xxx|^(alpha+1) dx.
// Requires non-negative heights.
double dissipation(const FilmState& state, const Grid1D& grid,
                   const FluidParams& params);

// |E(T) + sum dt * D(midpoint) - E(0)| / max(E(0), tiny) over an unforced
// run's record series; O(dt + h^2).
double energy_budget_residual(const std::vector<DiagnosticsRecord>& series);

// 1/2 int (u_x - v_x)^2 dx.
double relative_energy(const FilmState& u, const FilmState& v,
                       const Grid1D& grid);

// 1/min(u) + max-derivative norm proxy (|u| + |u_x| + ... + |u_xxxx|).
double blowup_monitor(const FilmState& state, const Grid1D& grid);

DiagnosticsRecord make_record(const FilmState& state, const Grid1D& grid,
                              const FluidParams& params, double dt,
                              int picard_iterations);

}  // namespace thinfilm
