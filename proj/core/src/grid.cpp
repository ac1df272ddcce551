#include "thinfilm/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace thinfilm {

Grid1D make_grid(double half_length, int n_cells) {
  if (!(half_length > 0.0) || !std::isfinite(half_length)) {
    throw std::domain_error("half_length must be finite and > 0");
  }
  if (n_cells < 8) throw std::domain_error("n_cells must be >= 8");
  Grid1D g;
  g.half_length = half_length;
  g.n_cells = n_cells;
  g.spacing = 2.0 * half_length / n_cells;
  g.nodes.resize(n_cells + 1);
  for (int i = 0; i <= n_cells; ++i) {
    g.nodes[i] = -half_length + i * g.spacing;
  }
  g.nodes.front() = -half_length;
  g.nodes.back() = half_length;
  return g;
}

std::vector<double> extend_even(const std::vector<double>& heights, int k) {
  if (k < 1 || k > 4) throw std::domain_error("ghost width k must be in 1..4");
  const int n = static_cast<int>(heights.size());
  if (n < k + 1) throw std::domain_error("sequence too short for ghost width");
  std::vector<double> out(n + 2 * k);
  for (int i = 0; i < n; ++i) out[k + i] = heights[i];
  for (int j = 1; j <= k; ++j) {
    out[k - j] = heights[j];
    out[k + n - 1 + j] = heights[n - 1 - j];
  }
  return out;
}

std::vector<double> derivative(const std::vector<double>& heights, int order,
                               const Grid1D& grid) {
  const int n = grid.n_cells + 1;
  if (static_cast<int>(heights.size()) != n) {
    throw std::invalid_argument("heights size does not match grid");
  }
  if (order < 1 || order > 4) throw std::domain_error("order must be in 1..4");
  const double h = grid.spacing;
  const int k = order <= 2 ? 1 : 2;
  const std::vector<double> e = extend_even(heights, k);
  std::vector<double> d(n);
  switch (order) {
    case 1:
      for (int i = 0; i < n; ++i) {
        d[i] = (e[i + 2] - e[i]) / (2.0 * h);
      }
      break;
    case 2:
      for (int i = 0; i < n; ++i) {
        d[i] = (e[i + 2] - 2.0 * e[i + 1] + e[i]) / (h * h);
      }
      break;
    case 3:
      for (int i = 0; i < n; ++i) {
        d[i] = (e[i + 4] - 2.0 * e[i + 3] + 2.0 * e[i + 1] - e[i]) /
               (2.0 * h * h * h);
      }
      break;
    case 4:
      for (int i = 0; i < n; ++i) {
        // grouped as differences so constants give exactly zero
        d[i] = ((e[i + 4] - e[i + 3]) - 3.0 * (e[i + 3] - e[i + 2]) +
                3.0 * (e[i + 2] - e[i + 1]) - (e[i + 1] - e[i])) /
               (h * h * h * h);
      }
      break;
  }
  return d;
}

std::vector<double> face_third_derivative(const std::vector<double>& heights,
                                          const Grid1D& grid) {
  const int n = grid.n_cells + 1;
  if (static_cast<int>(heights.size()) != n) {
    throw std::invalid_argument("heights size does not match grid");
  }
  const double h3 = grid.spacing * grid.spacing * grid.spacing;
  const std::vector<double> e = extend_even(heights, 2);
  std::vector<double> d(grid.n_cells);
  // face i+1/2 sits between extended indices i+2 and i+3
  for (int i = 0; i < grid.n_cells; ++i) {
    d[i] = ((e[i + 4] - e[i + 3]) - 2.0 * (e[i + 3] - e[i + 2]) +
            (e[i + 2] - e[i + 1])) /
           h3;
  }
  return d;
}

}  // namespace thinfilm
