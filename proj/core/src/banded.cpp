#include "thinfilm/banded.hpp"

#include <cmath>
#include <stdexcept>

namespace thinfilm {

std::vector<double> PentadiagonalSystem::multiply(
    const std::vector<double>& x) const {
  const int n = size();
  std::vector<double> y(n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int c = 0; c < 5; ++c) {
      const int j = i + c - 2;
      if (j >= 0 && j < n) y[i] += rows[i][c] * x[j];
    }
  }
  return y;
}

BandedLU::BandedLU(const PentadiagonalSystem& system) {
  n_ = system.size();
  work_.assign(n_, {});
  for (int i = 0; i < n_; ++i) {
    for (int c = 0; c < 5; ++c) work_[i][c] = system.rows[i][c];
    work_[i][5] = work_[i][6] = 0.0;
  }
  mult_.assign(n_, {0.0, 0.0});
  pivot_.assign(n_, 0);

  double scale = 0.0;
  for (int i = 0; i < n_; ++i) {
    for (int c = 0; c < 5; ++c) scale = std::max(scale, std::abs(work_[i][c]));
  }
  const double tiny = scale * 1e-300 + 1e-300;

  for (int k = 0; k < n_; ++k) {
    const int last = std::min(k + 2, n_ - 1);
    int p = k;
    double best = std::abs(work_[k][2]);
    for (int r = k + 1; r <= last; ++r) {
      const double v = std::abs(work_[r][k - r + 2]);
      if (v > best) {
        best = v;
        p = r;
      }
    }
    pivot_[k] = p;
    if (p != k) {
      // swapped rows keep band storage relative to their new position;
      // entries outside the stored window are zero at this stage
      const int s = k - p;  // -1 or -2
      std::array<double, 7> rowk = work_[k];
      std::array<double, 7> rowp = work_[p];
      for (int c = 0; c < 7; ++c) {
        const int cp = c + s;
        work_[k][c] = (cp >= 0 && cp < 7) ? rowp[cp] : 0.0;
        const int ck = c - s;
        work_[p][c] = (ck >= 0 && ck < 7) ? rowk[ck] : 0.0;
      }
    }
    const double piv = work_[k][2];
    if (std::abs(piv) <= tiny) {
      singular_ = true;
      return;
    }
    for (int r = k + 1; r <= last; ++r) {
      const double m = work_[r][k - r + 2] / piv;
      mult_[k][r - k - 1] = m;
      work_[r][k - r + 2] = 0.0;
      const int jmax = std::min(k + 4, n_ - 1);
      for (int j = k + 1; j <= jmax; ++j) {
        work_[r][j - r + 2] -= m * work_[k][j - k + 2];
      }
    }
  }
}

std::vector<double> BandedLU::solve(std::vector<double> rhs) const {
  for (int k = 0; k < n_; ++k) {
    if (pivot_[k] != k) std::swap(rhs[k], rhs[pivot_[k]]);
    const int last = std::min(k + 2, n_ - 1);
    for (int r = k + 1; r <= last; ++r) {
      rhs[r] -= mult_[k][r - k - 1] * rhs[k];
    }
  }
  for (int i = n_ - 1; i >= 0; --i) {
    double s = rhs[i];
    const int jmax = std::min(i + 4, n_ - 1);
    for (int j = i + 1; j <= jmax; ++j) {
      s -= work_[i][j - i + 2] * rhs[j];
    }
    rhs[i] = s / work_[i][2];
  }
  return rhs;
}

std::vector<double> solve_banded(const PentadiagonalSystem& system) {
  const int n = system.size();
  if (static_cast<int>(system.rhs.size()) != n) {
    throw std::invalid_argument("rhs size does not match matrix");
  }
  BandedLU lu(system);
  if (lu.singular()) {
    throw std::runtime_error("solve_banded: matrix is numerically singular");
  }
  std::vector<double> x = lu.solve(system.rhs);
  // one refinement pass
  std::vector<double> ax = system.multiply(x);
  std::vector<double> r(n);
  for (int i = 0; i < n; ++i) r[i] = system.rhs[i] - ax[i];
  const std::vector<double> d = lu.solve(std::move(r));
  for (int i = 0; i < n; ++i) x[i] += d[i];
  return x;
}

}  // namespace thinfilm
