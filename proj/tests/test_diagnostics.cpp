#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "thinfilm/diagnostics.hpp"
#include "thinfilm/stability.hpp"
#include "thinfilm/stepper.hpp"

using namespace thinfilm;

namespace {

FilmState sampled(const Grid1D& g, double (*f)(double)) {
  FilmState s;
  s.heights.resize(g.nodes.size());
  for (size_t i = 0; i < g.nodes.size(); ++i) s.heights[i] = f(g.nodes[i]);
  return s;
}

}  // namespace

TEST_CASE("mass") {
  const Grid1D g = make_grid(1.0, 64);
  FilmState c{0.0, std::vector<double>(65, 1.7)};
  CHECK(mass(c, g) == doctest::Approx(2.0 * 1.7).epsilon(1e-14));

  const FilmState s = sampled(g, [](double x) { return 1.0 + std::cos(M_PI * x); });
  CHECK(mass(s, g) == doctest::Approx(2.0).epsilon(1e-3));

  FilmState z{0.0, std::vector<double>(65, 0.0)};
  CHECK(mass(z, g) == 0.0);
}

TEST_CASE("energy") {
  const Grid1D g = make_grid(1.0, 128);
  FilmState c{0.0, std::vector<double>(129, 2.0)};
  CHECK(energy(c, g) == 0.0);

  const FilmState s = sampled(g, [](double x) { return std::cos(M_PI * x); });
  CHECK(energy(s, g) ==
        doctest::Approx(M_PI * M_PI / 2.0).epsilon(0.01));

  SUBCASE("quadratic scaling") {
    FilmState s2 = s;
    for (double& v : s2.heights) v *= 2.0;
    CHECK(energy(s2, g) == doctest::Approx(4.0 * energy(s, g)).epsilon(1e-12));
  }
}

TEST_CASE("dissipation") {
  const FluidParams p = params_from_coefficients(1.0, 1.0, 1.0, 2.0);
  const Grid1D g = make_grid(1.0, 1024);
  FilmState c{0.0, std::vector<double>(1025, 1.1)};
  CHECK(dissipation(c, g, p) == 0.0);

  const FilmState s = sampled(g, [](double x) { return 2.0 + std::cos(M_PI * x); });
  CHECK(dissipation(s, g, p) >= 0.0);

  SUBCASE("matches a fine-grid quadrature of the analytic integrand") {
    // u = 2 + cos(pi x), u_xxx = pi^3 sin(pi x); alpha = 2, a = b = 1:
    // integrand = u^3 w^2 + u^4 |w|^3
    const int nq = 20000;
    double acc = 0.0;
    for (int i = 0; i <= nq; ++i) {
      const double x = -1.0 + 2.0 * i / nq;
      const double u = 2.0 + std::cos(M_PI * x);
      const double w = std::pow(M_PI, 3) * std::sin(M_PI * x);
      double f = u * u * u * w * w +
                 std::pow(u, 4.0) * std::pow(std::abs(w), 3.0);
      if (i == 0 || i == nq) f *= 0.5;
      acc += f;
    }
    acc *= 2.0 / nq;
    CHECK(dissipation(s, g, p) == doctest::Approx(acc).epsilon(1e-4));
  }

  SUBCASE("rejects negative heights") {
    FilmState bad{0.0, std::vector<double>(1025, 1.0)};
    bad.heights[3] = -0.5;
    CHECK_THROWS_AS(dissipation(bad, g, p), std::domain_error);
  }
}

TEST_CASE("relative_energy") {
  const Grid1D g = make_grid(1.0, 128);
  const FilmState u = sampled(g, [](double x) { return 2.0 + 0.5 * std::cos(M_PI * x); });
  CHECK(relative_energy(u, u, g) == 0.0);

  FilmState v = u;
  for (size_t i = 0; i < v.heights.size(); ++i) {
    v.heights[i] += std::cos(M_PI * g.nodes[i]);
  }
  const double re = relative_energy(u, v, g);
  CHECK(re == doctest::Approx(M_PI * M_PI / 2.0).epsilon(0.01));
  CHECK(relative_energy(v, u, g) == doctest::Approx(re).epsilon(1e-14));

  FilmState wrong{0.0, std::vector<double>(17, 1.0)};
  CHECK_THROWS_AS(relative_energy(u, wrong, g), std::invalid_argument);
}

TEST_CASE("blowup_monitor") {
  const Grid1D g = make_grid(1.0, 64);
  FilmState c{0.0, std::vector<double>(65, 2.0)};
  CHECK(blowup_monitor(c, g) == doctest::Approx(0.5 + 2.0).epsilon(1e-14));

  SUBCASE("diverges as the minimum height vanishes") {
    double prev = 0.0;
    for (double minh : {1e-2, 1e-4, 1e-8, 1e-12}) {
      FilmState s{0.0, std::vector<double>(65, minh)};
      const double m = blowup_monitor(s, g);
      CHECK(m > prev);
      prev = m;
    }
    CHECK(prev >= 1e12);
  }

  SUBCASE("converges to a finite limit under refinement") {
    std::vector<double> vals;
    for (int n : {64, 128, 256}) {
      const Grid1D gg = make_grid(1.0, n);
      const FilmState s =
          sampled(gg, [](double x) { return 2.0 + 0.5 * std::cos(M_PI * x); });
      vals.push_back(blowup_monitor(s, gg));
    }
    CHECK(std::abs(vals[2] - vals[1]) < std::abs(vals[1] - vals[0]) + 1e-6);
    CHECK(vals[2] < 100.0);
  }
}

TEST_CASE("energy budget residual") {
  SUBCASE("constant run gives zero") {
    std::vector<DiagnosticsRecord> series(5);
    for (int i = 0; i < 5; ++i) {
      series[i].time = i * 0.1;
      series[i].energy = 0.0;
      series[i].dissipation = 0.0;
    }
    CHECK(energy_budget_residual(series) == 0.0);
  }

  SUBCASE("decreases under joint dt and h refinement") {
    const FluidParams p = params_from_coefficients(1.0, 1.0, 1.0, 2.0);
    std::vector<double> residuals;
    double dt = 4e-5;
    for (int n : {32, 64, 128}) {
      const Grid1D g = make_grid(1.0, n);
      FilmState s0;
      s0.heights.resize(n + 1);
      for (int i = 0; i <= n; ++i) {
        s0.heights[i] = 1.0 + 0.5 * std::cos(M_PI * g.nodes[i]);
      }
      SolverConfig config;
      config.t_end = 2e-3;
      config.dt_initial = config.dt_max = dt;
      config.dt_min = dt * 1e-8;
      config.growth_factor = 1.0 + 1e-12;
      const RunReport report = run(s0, g, p, config);
      REQUIRE(report.reason == TerminationReason::TimeReached);
      residuals.push_back(energy_budget_residual(report.diagnostics));
      dt *= 0.5;
    }
    CHECK(residuals[0] / residuals[1] >= 1.8);
    CHECK(residuals[1] / residuals[2] >= 1.8);
  }
}

TEST_CASE("uniqueness stability check") {
  const Grid1D g = make_grid(1.0, 48);
  const FluidParams p = params_from_coefficients(1.0, 1.0, 1.0, 1.5);
  FilmState u0;
  u0.heights.resize(49);
  for (int i = 0; i <= 48; ++i) {
    u0.heights[i] = 1.5 + 0.3 * std::cos(M_PI * g.nodes[i]);
  }
  SolverConfig config;
  config.t_end = 5e-4;
  config.dt_initial = 1e-5;

  SUBCASE("zero perturbation stays at zero") {
    const StabilityReport r = uniqueness_stability_check(u0, 0.0, g, p, config);
    CHECK(r.initial_relative_energy <= 1e-20);
    CHECK(r.final_relative_energy <= 1e-20);
  }

  SUBCASE("quadratic scaling of the initial relative energy") {
    const StabilityReport r1 = uniqueness_stability_check(u0, 1e-3, g, p, config);
    const StabilityReport r2 = uniqueness_stability_check(u0, 5e-4, g, p, config);
    CHECK(r2.initial_relative_energy ==
          doctest::Approx(0.25 * r1.initial_relative_energy).epsilon(1e-10));
  }

  SUBCASE("bounded amplification for small perturbations") {
    const StabilityReport r = uniqueness_stability_check(u0, 1e-3, g, p, config);
    CHECK(r.max_ratio < 10.0);
    const StabilityReport again = uniqueness_stability_check(u0, 1e-3, g, p, config);
    CHECK(again.max_ratio == r.max_ratio);  // deterministic
  }
}

TEST_CASE("diagnostics CSV serialization") {
  DiagnosticsRecord r;
  r.time = 0.125;
  r.mass = 2.0;
  r.energy = 0.5;
  r.dissipation = 0.25;
  r.min_height = 1.0;
  r.max_third_derivative = 3.0;
  r.blowup_monitor = 4.0;
  r.dt = 1e-5;
  r.picard_iterations = 3;
  CHECK(diagnostics_csv_header() ==
        "time,mass,energy,dissipation,min_height,max_third_derivative,"
        "blowup_monitor,dt,picard_iterations");
  CHECK(diagnostics_csv_row(r) ==
        "0.125,2,0.5,0.25,1,3,4,1.0000000000000001e-05,3");
}
