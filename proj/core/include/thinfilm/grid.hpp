#pragma once

#include <vector>

namespace thinfilm {

// Uniform node-centered mesh on (-l, l) with N cells and N+1 nodes.
struct Grid1D {
  double half_length;
  int n_cells;
  double spacing;
  std::vector<double> nodes;
};

Grid1D make_grid(double half_length, int n_cells);

// Film height samples at the grid nodes at a given time.
struct FilmState {
  double time = 0.0;
  std::vector<double> heights;
};

// Pads the sequence with k ghost values per side by even reflection,
// u_{-j} = u_j and u_{N+j} = u_{N-j}.  This enforces u_x = u_xxx = 0 at
// both endpoints for the central stencils below.  Requires 1 <= k <= 4.
std::vector<double> extend_even(const std::vector<double>& heights, int k);

// Nodal derivative of the given order (1..4) by second-order central
// differences on the even extension.
std::vector<double> derivative(const std::vector<double>& heights, int order,
                               const Grid1D& grid);

// Third derivative at the faces x_{i+1/2}, i = 0..N-1:
//   (u_{i+2} - 3 u_{i+1} + 3 u_i - u_{i-1}) / h^3.
std::vector<double> face_third_derivative(const std::vector<double>& heights,
                                          const Grid1D& grid);

}  // namespace thinfilm
