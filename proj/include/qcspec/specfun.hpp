#pragma once

// Bessel J0/J1, the first positive zero of J0, and the real Gamma function.
// Only what the eigenvalue bounds downstream actually need; no general J_nu.

namespace qcspec::specfun {

/// First positive zero of J0 (j_{0,1} ~ 2.4048), computed once per process.
struct BesselZero {
    double value;
};

// Absolute error <= 1e-12 for |x| <= 50. Throws std::domain_error on
// non-finite input.
double bessel_j0(double x);
double bessel_j1(double x);

BesselZero bessel_j0_first_zero();

// lambda_1 of the unit disc for the Dirichlet Laplacian, j_{0,1}^2.
double lambda1_disc();

// Gamma on (0, inf), relative error <= 1e-12 on (0, 10].
// Throws std::domain_error for x <= 0 or non-finite x.
double gamma_fn(double x);

}  // namespace qcspec::specfun
