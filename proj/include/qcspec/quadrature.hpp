#pragma once

// Small quadrature toolbox: Gauss-Legendre panels, adaptive Simpson, and a
// Halton sequence for quasi-random sampling.

#include <cmath>
#include <functional>
#include <vector>

namespace qcspec::quadrature {

struct Rule1D {
    std::vector<double> nodes;    // on (-1, 1)
    std::vector<double> weights;  // sum to 2
};

/// Gauss-Legendre rule with n points (nodes by Newton on Legendre P_n).
const Rule1D& gauss_legendre(int n);

/// Integrate f over [a, b] with an n-point GL rule split into `panels` panels.
double integrate_panels(const std::function<double(double)>& f, double a, double b,
                        int n = 16, int panels = 8);

/// Adaptive Simpson to relative tolerance `rel_tol`.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double rel_tol = 1e-10);

/// Halton low-discrepancy point in [0,1)^2 (bases 2 and 3), index >= 0.
void halton2(long index, double& u, double& v);

}  // namespace qcspec::quadrature
