#pragma once

#include <array>
#include <vector>

namespace thinfilm {

// Pentadiagonal system A x = rhs.  rows[i][c] holds A(i, i + c - 2) for
// c = 0..4; entries referring to columns outside [0, n) must be zero.
struct PentadiagonalSystem {
  std::vector<std::array<double, 5>> rows;
  std::vector<double> rhs;

  int size() const { return static_cast<int>(rows.size()); }
  std::vector<double> multiply(const std::vector<double>& x) const;
};

// Banded LU factorization with partial pivoting (bandwidth 2, fill to 4).
class BandedLU {
 public:
  explicit BandedLU(const PentadiagonalSystem& system);
  std::vector<double> solve(std::vector<double> rhs) const;
  bool singular() const { return singular_; }

 private:
  int n_;
  bool singular_ = false;
  // row i of U holds columns i..i+4 (band + pivot fill)
  std::vector<std::array<double, 7>> work_;
  std::vector<std::array<double, 2>> mult_;
  std::vector<int> pivot_;
};

// Solves the system with one step of iterative refinement.  Residual
// ||A x - rhs||_inf <= 1e-11 ||rhs||_inf on well-scaled systems.  Throws
// std::runtime_error on a numerically singular matrix.
std::vector<double> solve_banded(const PentadiagonalSystem& system);

}  // namespace thinfilm
