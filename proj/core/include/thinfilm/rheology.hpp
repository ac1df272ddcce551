#pragma once

namespace thinfilm {

// Ellis-fluid material constants together with the lubrication
// coefficients derived from them.  All quantities are dimensionless.
struct FluidParams {
  double sigma;     // surface tension
  double mu0;       // zero-shear viscosity
  double tau_star;  // shear stress at which viscosity halves
  double alpha;     // flow behaviour exponent, > 1
  double a;         // sigma / (3 mu0)
  double b;         // (3/(alpha+2))^(1/(alpha-1)) * sigma/tau_star
  double b_tilde;   // sigma / tau_star
};

// Builds FluidParams from the physical inputs.  Throws std::domain_error
// on non-finite or non-positive inputs, or alpha <= 1 + 1e-6.
FluidParams derive_params(double sigma, double mu0, double tau_star,
                          double alpha);

// Builds FluidParams directly from lubrication coefficients (a, b, b_tilde).
// b = b_tilde = 0 selects the Newtonian plateau.  Physical fields are filled
// consistently (mu0 = 1, sigma = 3a, tau_star = sigma/b_tilde or +inf).
FluidParams params_from_coefficients(double a, double b, double b_tilde,
                                     double alpha);

// Shear stress tau(s) solving the implicit Ellis relation
//   s = (1/mu0) (1 + |tau/tau_star|^(alpha-1)) tau.
// Odd and strictly increasing in s.
double shear_stress(double s, const FluidParams& params);

// Apparent viscosity mu(s) = tau(s)/s, continuously extended to mu0 at s=0.
double viscosity(double s, const FluidParams& params);

// Horizontal velocity at depth z in a film of height u with third
// derivative u_xxx.  Requires 0 <= z <= u.
double velocity_profile(double u, double u_xxx, double z,
                        const FluidParams& params);

// Depth-integrated flux a u^3 (1 + |b u u_xxx|^(alpha-1)) u_xxx.
double flux(double u, double u_xxx, const FluidParams& params);

// Film surface pressure -sigma * u_xx.
double pressure(double u_xx, const FluidParams& params);

}  // namespace thinfilm
