#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "thinfilm/banded.hpp"

using namespace thinfilm;

namespace {

// dense Gaussian elimination with partial pivoting, test-only oracle
std::vector<double> dense_solve(std::vector<std::vector<double>> a,
                                std::vector<double> rhs) {
  const int n = static_cast<int>(rhs.size());
  for (int k = 0; k < n; ++k) {
    int p = k;
    for (int r = k + 1; r < n; ++r) {
      if (std::abs(a[r][k]) > std::abs(a[p][k])) p = r;
    }
    std::swap(a[k], a[p]);
    std::swap(rhs[k], rhs[p]);
    for (int r = k + 1; r < n; ++r) {
      const double m = a[r][k] / a[k][k];
      for (int j = k; j < n; ++j) a[r][j] -= m * a[k][j];
      rhs[r] -= m * rhs[k];
    }
  }
  for (int i = n - 1; i >= 0; --i) {
    double s = rhs[i];
    for (int j = i + 1; j < n; ++j) s -= a[i][j] * rhs[j];
    rhs[i] = s / a[i][i];
  }
  return rhs;
}

PentadiagonalSystem random_system(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  PentadiagonalSystem sys;
  sys.rows.assign(n, {});
  sys.rhs.resize(n);
  for (int i = 0; i < n; ++i) {
    for (int c = 0; c < 5; ++c) {
      const int j = i + c - 2;
      sys.rows[i][c] = (j >= 0 && j < n) ? u(rng) : 0.0;
    }
    sys.rows[i][2] += 3.0;  // keep it comfortably nonsingular
    sys.rhs[i] = u(rng);
  }
  return sys;
}

}  // namespace

TEST_CASE("identity system returns the rhs") {
  PentadiagonalSystem sys;
  sys.rows.assign(7, {0.0, 0.0, 1.0, 0.0, 0.0});
  sys.rhs = {1, -2, 3, -4, 5, -6, 7};
  CHECK(solve_banded(sys) == sys.rhs);
}

TEST_CASE("random pentadiagonal systems match the dense oracle") {
  for (unsigned seed : {1u, 2u, 3u, 4u, 5u}) {
    const int n = 12;
    const PentadiagonalSystem sys = random_system(n, seed);
    std::vector<std::vector<double>> dense(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) {
      for (int c = 0; c < 5; ++c) {
        const int j = i + c - 2;
        if (j >= 0 && j < n) dense[i][j] = sys.rows[i][c];
      }
    }
    const std::vector<double> x = solve_banded(sys);
    const std::vector<double> y = dense_solve(dense, sys.rhs);
    for (int i = 0; i < n; ++i) {
      CHECK(x[i] == doctest::Approx(y[i]).epsilon(1e-10));
    }
  }
}

TEST_CASE("residual bound") {
  for (int n : {16, 64, 257}) {
    const PentadiagonalSystem sys = random_system(n, 42 + n);
    const std::vector<double> x = solve_banded(sys);
    const std::vector<double> ax = sys.multiply(x);
    double rmax = 0.0, bmax = 0.0;
    for (int i = 0; i < n; ++i) {
      rmax = std::max(rmax, std::abs(ax[i] - sys.rhs[i]));
      bmax = std::max(bmax, std::abs(sys.rhs[i]));
    }
    CHECK(rmax <= 1e-11 * bmax);
  }
}

TEST_CASE("pivoting handles a zero leading diagonal") {
  PentadiagonalSystem sys;
  sys.rows.assign(5, {});
  // row 0 has a zero diagonal; solvable only with row exchanges
  sys.rows[0] = {0.0, 0.0, 0.0, 1.0, 0.0};
  sys.rows[1] = {0.0, 1.0, 0.0, 0.0, 0.0};
  sys.rows[2] = {0.0, 0.0, 1.0, 0.0, 0.0};
  sys.rows[3] = {0.0, 0.0, 1.0, 0.0, 0.0};
  sys.rows[4] = {0.0, 0.0, 1.0, 0.0, 0.0};
  sys.rhs = {2, 1, 3, 4, 5};
  const std::vector<double> x = solve_banded(sys);
  CHECK(x[0] == doctest::Approx(1.0));
  CHECK(x[1] == doctest::Approx(2.0));
  CHECK(x[2] == doctest::Approx(3.0));
  CHECK(x[3] == doctest::Approx(4.0));
  CHECK(x[4] == doctest::Approx(5.0));
}

TEST_CASE("singular matrix is rejected") {
  PentadiagonalSystem sys;
  sys.rows.assign(6, {0.0, 0.0, 0.0, 0.0, 0.0});
  sys.rhs.assign(6, 1.0);
  CHECK_THROWS_AS(solve_banded(sys), std::runtime_error);
}
