#include "thinfilm/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace thinfilm {

namespace {

// |w|^(alpha-1), continuously 0 at w = 0 for alpha > 1
double holder_kernel(double w, double alpha) {
  if (w == 0.0) return 0.0;
  return std::pow(std::abs(w), alpha - 1.0);
}

double coeff_A_impl(double z0, double z3, const FluidParams& p) {
  return p.a * z0 * z0 * z0 *
         (1.0 + p.alpha * holder_kernel(p.b * z0 * z3, p.alpha));
}

}  // namespace

double coeff_A(const CoefficientSample& z, const FluidParams& params) {
  if (!(z.z0 > 0.0)) {
    throw std::domain_error("coeff_A requires z0 > 0");
  }
  return coeff_A_impl(z.z0, z.z3, params);
}

double coeff_A_bar_eps(const CoefficientSample& z, const FluidParams& params,
                       const RegularizationConfig& reg) {
  const double z0p = z.z0 > 0.0 ? z.z0 : 0.0;
  return std::max(coeff_A_impl(z0p, z.z3, params), 0.5 * reg.epsilon);
}

double coeff_F(const CoefficientSample& z, const FluidParams& params) {
  return -3.0 * params.a * z.z0 * z.z0 *
         (1.0 + holder_kernel(params.b_tilde * z.z0 * z.z3, params.alpha)) *
         z.z1 * z.z3;
}

std::vector<double> divergence_residual(const FilmState& state,
                                        const Grid1D& grid,
                                        const FluidParams& params) {
  const int n = grid.n_cells + 1;
  if (static_cast<int>(state.heights.size()) != n) {
    throw std::invalid_argument("heights size does not match grid");
  }
  for (double u : state.heights) {
    if (!(u > 0.0)) throw std::domain_error("heights must be strictly positive");
  }
  const double h = grid.spacing;

  // Nodal flux on the extension; w is odd about the endpoints so the flux
  // reflects oddly, giving the ghost values needed for the divergence.
  const std::vector<double> e = extend_even(state.heights, 3);
  const int m = static_cast<int>(e.size());
  std::vector<double> w(m, 0.0);  // third derivative on extended nodes
  for (int i = 2; i < m - 2; ++i) {
    w[i] = (e[i + 2] - 2.0 * e[i + 1] + 2.0 * e[i - 1] - e[i - 2]) /
           (2.0 * h * h * h);
  }
  std::vector<double> q(m, 0.0);
  for (int i = 2; i < m - 2; ++i) q[i] = flux(e[i], w[i], params);

  const std::vector<double> ux = derivative(state.heights, 1, grid);
  const std::vector<double> uxxx = derivative(state.heights, 3, grid);
  const std::vector<double> uxxxx = derivative(state.heights, 4, grid);

  std::vector<double> res(n);
  for (int i = 0; i < n; ++i) {
    const double div_q = (q[i + 4] - q[i + 2]) / (2.0 * h);
    CoefficientSample z{state.heights[i], ux[i], 0.0, uxxx[i]};
    const double nondiv = coeff_A(z, params) * uxxxx[i] - coeff_F(z, params);
    res[i] = div_q - nondiv;
  }
  return res;
}

}  // namespace thinfilm
