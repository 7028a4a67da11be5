#pragma once

// Every eigenvalue bound as an evaluator returning the value together with
// the inequality metadata it participates in.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcspec/geometry.hpp"
#include "qcspec/logvalue.hpp"

namespace qcspec::bounds {

enum class BoundKind { upper, lower };

struct BoundResult {
    std::string name;
    BoundKind kind = BoundKind::upper;
    double value = 0.0;                  // 1/length^2 for eigenvalue bounds
    std::optional<LogValue> log_value;   // set when the value overflows double
    std::map<std::string, double> inputs;
    std::vector<std::string> assumptions;
};

/// Payne-Weinberger: pi j01^2/|O| [1 + (1/J1^2(j01) - 1)(|dO|^2/(4 pi |O|) - 1)].
BoundResult payne_weinberger_upper(double area, double perimeter);

/// Rayleigh-Faber-Krahn: lambda1 >= j01^2 / R*^2 with R* = sqrt(area/pi).
BoundResult rfk_lower(double area);

/// Makai/Hayman: lambda1 >= alpha / rho^2; alpha is caller-supplied.
BoundResult makai_hayman_lower(double rho, double alpha);

/// Domain monotonicity: lambda1(Omega) <= j01^2 / rho^2.
BoundResult monotonicity_upper(double rho);

struct Sandwich {
    BoundResult lower;  // j01^2
    BoundResult upper;  // K j01^2
};

/// Volume-preserving case: j01^2 <= lambda1(A, Omega) <= K j01^2.
Sandwich sandwich_volume_preserving(double K);

/// K l1(D) + A^2_{4b/(b-1),2}(D) K^2 l1^2(D_rho) (pi^{1/2b} + ||J||^{1/2}) ||1 - J^{1/2}||.
BoundResult thm52_upper(double K, double beta, double rho, double jac_norm_beta,
                        double jac_dev_norm, double area);

/// |l_n[A,O] - l_n[A,O~]| <= c_n A^2 (|O~|^{1/2b} + ||J||^{1/2}) ||1 - J^{1/2}||.
BoundResult stability_gap_bound(double c_n, double beta, double jac_norm_beta,
                                double jac_dev_norm, double area);

/// K l1(D) + M_beta(K) K^2 l1^2(D_rho) ||1 - J^{1/2}||, carried in log10.
BoundResult quasidisc_upper(double K, double rho, double jac_dev_norm, double area);

struct InequalityCheck {
    double lhs;
    double rhs;
};

/// Weighted Poincare inequality for f o phi against the A-weighted Dirichlet
/// seminorm, with weight h = |J(z, phi)| and B = poincare_constant_upper(r, pi).
InequalityCheck weighted_poincare_check(const geometry::QCMapDescriptor& map, double r,
                                        int test_fn_id, int quad_order = 48);

}  // namespace qcspec::bounds
