#include "thinfilm/rheology.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace thinfilm {

namespace {

void check_positive_finite(double v, const char* name) {
  if (!std::isfinite(v) || v <= 0.0) {
    throw std::domain_error(std::string(name) + " must be finite and > 0");
  }
}

}  // namespace

FluidParams derive_params(double sigma, double mu0, double tau_star,
                          double alpha) {
  check_positive_finite(sigma, "sigma");
  check_positive_finite(mu0, "mu0");
  check_positive_finite(tau_star, "tau_star");
  if (!std::isfinite(alpha) || alpha <= 1.0 + 1e-6) {
    // b = (3/(alpha+2))^(1/(alpha-1)) is numerically explosive at alpha -> 1+;
    // the Newtonian limit is reached via b = 0 instead.
    throw std::domain_error("alpha must exceed 1");
  }
  FluidParams p;
  p.sigma = sigma;
  p.mu0 = mu0;
  p.tau_star = tau_star;
  p.alpha = alpha;
  p.a = sigma / (3.0 * mu0);
  p.b = std::pow(3.0 / (alpha + 2.0), 1.0 / (alpha - 1.0)) * sigma / tau_star;
  p.b_tilde = sigma / tau_star;
  return p;
}

FluidParams params_from_coefficients(double a, double b, double b_tilde,
                                     double alpha) {
  check_positive_finite(a, "a");
  if (!std::isfinite(b) || b < 0.0 || !std::isfinite(b_tilde) || b_tilde < 0.0) {
    throw std::domain_error("b and b_tilde must be finite and >= 0");
  }
  if (!std::isfinite(alpha) || alpha <= 1.0 + 1e-6) {
    throw std::domain_error("alpha must exceed 1");
  }
  FluidParams p;
  p.mu0 = 1.0;
  p.sigma = 3.0 * a;
  p.tau_star = b_tilde > 0.0 ? p.sigma / b_tilde
                             : std::numeric_limits<double>::infinity();
  p.alpha = alpha;
  p.a = a;
  p.b = b;
  p.b_tilde = b_tilde;
  return p;
}

double shear_stress(double s, const FluidParams& params) {
  if (s == 0.0) return 0.0;
  if (!std::isfinite(s)) throw std::domain_error("shear rate must be finite");
  const double sign = s > 0.0 ? 1.0 : -1.0;
  const double target = params.mu0 * std::abs(s);
  const double em1 = params.alpha - 1.0;

  // tau (1 + (tau/tau_star)^(alpha-1)) = mu0 |s| has a unique root in
  // [0, mu0 |s|]; safeguarded Newton on that bracket.
  double lo = 0.0;
  double hi = target;
  double tau = 0.5 * target;
  for (int it = 0; it < 100; ++it) {
    const double rel = std::pow(tau / params.tau_star, em1);
    const double f = tau * (1.0 + rel) - target;
    if (f > 0.0) {
      hi = tau;
    } else {
      lo = tau;
    }
    const double df = 1.0 + params.alpha * rel;
    double next = tau - f / df;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double change = std::abs(next - tau);
    tau = next;
    if (change <=
        4.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(tau))) {
      return sign * tau;
    }
  }
  throw std::runtime_error("shear_stress: root solver failed to converge");
}

double viscosity(double s, const FluidParams& params) {
  if (s == 0.0) return params.mu0;
  return shear_stress(s, params) / s;
}

double velocity_profile(double u, double u_xxx, double z,
                        const FluidParams& params) {
  if (z < 0.0 || z > u) throw std::domain_error("z must lie in [0, u]");
  const double w = u_xxx;
  const double newtonian = params.sigma / params.mu0 * w * (u * z - 0.5 * z * z);
  if (w == 0.0) return 0.0;
  const double coef =
      std::pow(params.sigma, params.alpha) /
      ((params.alpha + 1.0) * params.mu0 *
       std::pow(params.tau_star, params.alpha - 1.0));
  const double shear =
      coef * std::pow(std::abs(w), params.alpha - 1.0) * w *
      (std::pow(u - z, params.alpha + 1.0) - std::pow(u, params.alpha + 1.0));
  return newtonian - shear;
}

double flux(double u, double u_xxx, const FluidParams& params) {
  if (u == 0.0 || u_xxx == 0.0) return 0.0;
  const double arg = std::abs(params.b * u * u_xxx);
  return params.a * u * u * u * (1.0 + std::pow(arg, params.alpha - 1.0)) *
         u_xxx;
}

double pressure(double u_xx, const FluidParams& params) {
  return -params.sigma * u_xx;
}

}  // namespace thinfilm
