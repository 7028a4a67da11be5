#pragma once

// Closed-form constant estimates: the Sobolev-Poincare constant B_{r,2}, the
// stability constant A_{4b/(b-1),2}, and the quasidisc constant M_beta(K)
// with its auxiliaries nu(beta), beta~, beta*, C_beta.

#include "qcspec/logvalue.hpp"

namespace qcspec::constants {

struct PoincareConstantQuery {
    double r;     // integrability exponent, >= 2
    double area;  // |Omega~| > 0
};

struct QuasidiscConstantQuery {
    double K;     // quasiconformality coefficient, > 1
    double area;  // |Omega| > 0
};

struct MinResult {
    double value;     // the minimum
    double minimizer; // argmin
};

/// The B_{r,2} objective at a given p (used by grid-scan cross-checks).
double poincare_objective(double p, double r, double area);

/// inf over p in (2r/(r+2), 2) of
///   ((p-1)/(2-p))^{(p-1)/p} (sqrt(pi) 2^{1/p})^{-1} area^{1/r} / sqrt(G(2/p)G(3-2/p)).
double poincare_constant_upper(const PoincareConstantQuery& q);
MinResult poincare_constant_upper_detail(const PoincareConstantQuery& q);

/// Same infimum with r = 4 beta/(beta-1); area exponent (beta-1)/(4 beta).
double stability_constant(double beta, double area);

/// log10 of nu(beta) = 10^{8 beta} (2b-2)/(2b-1) (24 pi^2 K^2)^{2 beta}.
LogValue nu(double beta, double K);
/// Same with t = beta - 1 carried explicitly (precision near beta = 1).
double nu_log10_from_excess(double t, double K);

/// Root of nu(beta) = 1. Excess form keeps full relative precision; the root
/// sits within ~1e-13 of beta = 1 for every K >= 1.
double beta_tilde_excess(double K);
double beta_tilde(double K);

/// beta* = min(K/(K-1), beta~(K)); requires K > 1.
double beta_star_excess(double K);

/// C_beta = 10^6 / [(2b-1)(1-nu(b))]^{1/(2b)}, defined for 1 < beta < beta~.
LogValue c_beta(double beta, double K);

struct MBetaResult {
    LogValue value;
    double beta_excess;  // outer minimizer as beta - 1
    double p;            // inner minimizer (rounds to 2 in double)
    double p_excess;     // 2 - p, kept at full relative precision
    bool area_warning;   // theorem assumes area pi
};

/// M_beta(K): nested infimum over beta in (1, beta*) and p in (4b/(3b-1), 2),
/// carried in log10 end to end.
MBetaResult m_beta(const QuasidiscConstantQuery& q);

/// Upper bound for ||J_{phi^-1} | L^beta(D)||^beta-type quantity:
/// C_beta^2 K^2 pi^{(1-beta)/beta} / 4 * exp{K^2 pi^2 (2+pi^2)^2/(2 log 3)} * area.
LogValue jacobian_norm_bound(double beta, double K, double area);

/// log10 of exp{K^2 pi^2 (2+pi^2)^2 / (d log 3)} for denominator factor d.
double exp_factor_log10(double K, double denom_factor);

}  // namespace qcspec::constants
