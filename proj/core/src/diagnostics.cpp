#include "thinfilm/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace thinfilm {

namespace {

double trapezoid(const std::vector<double>& f, double h) {
  const int n = static_cast<int>(f.size());
  double s = 0.5 * (f.front() + f.back());
  for (int i = 1; i < n - 1; ++i) s += f[i];
  return s * h;
}

}  // namespace

std::string diagnostics_csv_header() {
  return "time,mass,energy,dissipation,min_height,max_third_derivative,"
         "blowup_monitor,dt,picard_iterations";
}

std::string diagnostics_csv_row(const DiagnosticsRecord& r) {
  char buf[340];
  std::snprintf(buf, sizeof(buf),
                "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%d", r.time,
                r.mass, r.energy, r.dissipation, r.min_height,
                r.max_third_derivative, r.blowup_monitor, r.dt,
                r.picard_iterations);
  return buf;
}

double mass(const FilmState& state, const Grid1D& grid) {
  return trapezoid(state.heights, grid.spacing);
}

double energy(const FilmState& state, const Grid1D& grid) {
  const std::vector<double> ux = derivative(state.heights, 1, grid);
  std::vector<double> sq(ux.size());
  for (size_t i = 0; i < ux.size(); ++i) sq[i] = ux[i] * ux[i];
  return 0.5 * trapezoid(sq, grid.spacing);
}

double dissipation(const FilmState& state, const Grid1D& grid,
                   const FluidParams& params) {
  for (double u : state.heights) {
    if (u < 0.0) throw std::domain_error("dissipation requires u >= 0");
  }
  const std::vector<double> w = derivative(state.heights, 3, grid);
  const double bpow =
      params.b > 0.0 ? std::pow(params.b, params.alpha - 1.0) : 0.0;
  std::vector<double> f(w.size());
  for (size_t i = 0; i < w.size(); ++i) {
    const double u = state.heights[i];
    const double aw = std::abs(w[i]);
    f[i] = u * u * u * aw * aw;
    if (bpow > 0.0 && u > 0.0 && aw > 0.0) {
      f[i] += bpow * std::pow(u, params.alpha + 2.0) *
              std::pow(aw, params.alpha + 1.0);
    }
  }
  return params.a * trapezoid(f, grid.spacing);
}

double energy_budget_residual(const std::vector<DiagnosticsRecord>& series) {
  if (series.size() < 2) return 0.0;
  double accum = 0.0;
  for (size_t i = 1; i < series.size(); ++i) {
    const double dt = series[i].time - series[i - 1].time;
    accum += dt * 0.5 * (series[i - 1].dissipation + series[i].dissipation);
  }
  const double e0 = series.front().energy;
  const double eT = series.back().energy;
  return std::abs(eT + accum - e0) / std::max(e0, 1e-300);
}

double relative_energy(const FilmState& u, const FilmState& v,
                       const Grid1D& grid) {
  if (u.heights.size() != v.heights.size() ||
      static_cast<int>(u.heights.size()) != grid.n_cells + 1) {
    throw std::invalid_argument("relative_energy: grid mismatch");
  }
  const std::vector<double> ux = derivative(u.heights, 1, grid);
  const std::vector<double> vx = derivative(v.heights, 1, grid);
  std::vector<double> sq(ux.size());
  for (size_t i = 0; i < ux.size(); ++i) {
    const double d = ux[i] - vx[i];
    sq[i] = d * d;
  }
  return 0.5 * trapezoid(sq, grid.spacing);
}

double blowup_monitor(const FilmState& state, const Grid1D& grid) {
  const double minh =
      *std::min_element(state.heights.begin(), state.heights.end());
  const std::vector<double> d1 = derivative(state.heights, 1, grid);
  const std::vector<double> d2 = derivative(state.heights, 2, grid);
  const std::vector<double> d3 = derivative(state.heights, 3, grid);
  const std::vector<double> d4 = derivative(state.heights, 4, grid);
  double norm = 0.0;
  for (size_t i = 0; i < state.heights.size(); ++i) {
    norm = std::max(norm, std::abs(state.heights[i]) + std::abs(d1[i]) +
                              std::abs(d2[i]) + std::abs(d3[i]) +
                              std::abs(d4[i]));
  }
  return 1.0 / std::max(minh, 1e-300) + norm;
}

DiagnosticsRecord make_record(const FilmState& state, const Grid1D& grid,
                              const FluidParams& params, double dt,
                              int picard_iterations) {
  DiagnosticsRecord r;
  r.time = state.time;
  r.mass = mass(state, grid);
  r.energy = energy(state, grid);
  const double minh =
      *std::min_element(state.heights.begin(), state.heights.end());
  r.min_height = minh;
  r.dissipation = minh >= 0.0 ? dissipation(state, grid, params) : 0.0;
  const std::vector<double> w = derivative(state.heights, 3, grid);
  double mw = 0.0;
  for (double v : w) mw = std::max(mw, std::abs(v));
  r.max_third_derivative = mw;
  r.blowup_monitor = blowup_monitor(state, grid);
  r.dt = dt;
  r.picard_iterations = picard_iterations;
  return r;
}

}  // namespace thinfilm
