#include "qcspec/constants.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "qcspec/specfun.hpp"

namespace qcspec::constants {

namespace {

constexpr double kLn10 = 2.302585092994045684;

// Golden-section minimization; unimodality is cross-validated against grid
// scans in the test suite, the grid winning ties.
MinResult golden_min(const std::function<double(double)>& f, double lo, double hi,
                     double rel_tol = 1e-10) {
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    while (hi - lo > rel_tol * (std::abs(lo) + std::abs(hi))) {
        if (f1 < f2) {
            hi = x2; x2 = x1; f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1; x1 = x2; f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = f(x2);
        }
    }
    const double xm = 0.5 * (lo + hi);
    return {f(xm), xm};
}

double log10_gamma_pair(double p) {
    return std::log10(specfun::gamma_fn(2.0 / p)) +
           std::log10(specfun::gamma_fn(3.0 - 2.0 / p));
}

}  // namespace

double poincare_objective(double p, double r, double area) {
    const double e = (p - 1.0) / p;
    return std::pow((p - 1.0) / (2.0 - p), e) * std::pow(area, 1.0 / r) /
           (std::sqrt(M_PI) * std::pow(2.0, 1.0 / p) *
            std::sqrt(specfun::gamma_fn(2.0 / p) * specfun::gamma_fn(3.0 - 2.0 / p)));
}

MinResult poincare_constant_upper_detail(const PoincareConstantQuery& q) {
    if (!(q.r >= 2.0)) throw std::domain_error("poincare_constant_upper: r < 2");
    if (!(q.area > 0.0)) throw std::domain_error("poincare_constant_upper: area <= 0");
    const double eps = 1e-9;
    const double pa = 2.0 * q.r / (q.r + 2.0) + eps;
    const double pb = 2.0 - eps;
    return golden_min([&](double p) { return poincare_objective(p, q.r, q.area); }, pa, pb);
}

double poincare_constant_upper(const PoincareConstantQuery& q) {
    return poincare_constant_upper_detail(q).value;
}

double stability_constant(double beta, double area) {
    if (!(beta > 1.0)) throw std::domain_error("stability_constant: beta <= 1");
    // algebraically the B-formula with r = 4b/(b-1): interval endpoints and
    // the area exponent (b-1)/(4b) = 1/r both match
    return poincare_constant_upper({4.0 * beta / (beta - 1.0), area});
}

double nu_log10_from_excess(double t, double K) {
    if (!(t > 0.0)) throw std::domain_error("nu: beta <= 1");
    if (!(K >= 1.0)) throw std::domain_error("nu: K < 1");
    const double beta = 1.0 + t;
    return 8.0 * beta + std::log10(2.0 * t) - std::log10(1.0 + 2.0 * t) +
           2.0 * beta * std::log10(24.0 * M_PI * M_PI * K * K);
}

LogValue nu(double beta, double K) {
    return LogValue::from_log10(nu_log10_from_excess(beta - 1.0, K));
}

double beta_tilde_excess(double K) {
    if (!(K >= 1.0)) throw std::domain_error("beta_tilde: K < 1");
    // nu is monotone in beta; bisect in s = log10(beta - 1). The bracket
    // reaches s = -30 because for large K the root drops below 1e-16.
    double lo = -30.0, hi = std::log10(3.0);
    if (nu_log10_from_excess(std::pow(10.0, lo), K) >= 0.0)
        throw std::domain_error("beta_tilde: bracket failed");
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (nu_log10_from_excess(std::pow(10.0, mid), K) < 0.0) lo = mid; else hi = mid;
        if (hi - lo < 4e-16) break;
    }
    return std::pow(10.0, 0.5 * (lo + hi));
}

double beta_tilde(double K) { return 1.0 + beta_tilde_excess(K); }

double beta_star_excess(double K) {
    if (!(K > 1.0)) throw std::domain_error("beta_star: requires K > 1");
    return std::min(1.0 / (K - 1.0), beta_tilde_excess(K));
}

namespace {

// log10 C_beta from the excess t = beta - 1; requires nu(beta) < 1.
double c_beta_log10_from_excess(double t, double K) {
    const double g = nu_log10_from_excess(t, K);
    if (g >= 0.0)
        throw std::domain_error("c_beta: beta >= beta~ (1 - nu <= 0)");
    // log10(1 - 10^g), stable for g near 0 and for very negative g
    const double log10_one_minus_nu =
        std::log10(-std::expm1(g * kLn10));
    const double beta = 1.0 + t;
    return 6.0 - (std::log10(1.0 + 2.0 * t) + log10_one_minus_nu) / (2.0 * beta);
}

// Inner p-objective of M_beta in log10, parametrized by q = 2 - p to keep
// precision when the admissible interval has width ~ (beta - 1).
double mbeta_inner_log10(double q, double t) {
    const double p = 2.0 - q;
    const double beta = 1.0 + t;
    return (2.0 * (p - 1.0) / p) * std::log10((1.0 - q) / q) -
           ((beta + 1.0) / (2.0 * beta)) * std::log10(M_PI) -
           std::log10(4.0) / p - log10_gamma_pair(p);
}

MinResult mbeta_inner_min(double t) {
    // q ranges over (0, 2t/(2+3t)); clamp by relative epsilon per endpoint
    const double qmax = 2.0 * t / (2.0 + 3.0 * t);
    const double eps = 1e-9;
    return golden_min([&](double q) { return mbeta_inner_log10(q, t); },
                      qmax * eps, qmax * (1.0 - eps));
}

}  // namespace

LogValue c_beta(double beta, double K) {
    if (!(beta > 1.0)) throw std::domain_error("c_beta: beta <= 1");
    return LogValue::from_log10(c_beta_log10_from_excess(beta - 1.0, K));
}

double exp_factor_log10(double K, double denom_factor) {
    const double pi2 = M_PI * M_PI;
    return K * K * pi2 * (2.0 + pi2) * (2.0 + pi2) /
           (denom_factor * std::log(3.0)) / kLn10;
}

MBetaResult m_beta(const QuasidiscConstantQuery& q) {
    if (!(q.K > 1.0)) throw std::domain_error("m_beta: requires K > 1");
    if (!(q.area > 0.0)) throw std::domain_error("m_beta: area <= 0");
    const double K = q.K;
    const double tstar = beta_star_excess(K);
    const double big_exp = exp_factor_log10(K, 4.0);

    auto outer = [&](double t) {
        const double beta = 1.0 + t;
        const LogValue big = LogValue::from_log10(
            c_beta_log10_from_excess(t, K) + std::log10(K) -
            t / (2.0 * beta) * std::log10(M_PI) - std::log10(2.0) + big_exp +
            0.5 * std::log10(q.area));
        const LogValue addend = LogValue::from_log10(std::log10(M_PI) / (2.0 * beta));
        return mbeta_inner_min(t).value + log_add(big, addend).log10;
    };

    const double delta = 1e-12 * tstar;
    const MinResult out = golden_min(outer, delta, tstar - delta);
    MBetaResult res;
    res.beta_excess = out.minimizer;
    res.p_excess = mbeta_inner_min(out.minimizer).minimizer;
    res.p = 2.0 - res.p_excess;
    res.value = LogValue::from_log10(out.value);
    res.area_warning = std::abs(q.area - M_PI) > 1e-12;
    return res;
}

LogValue jacobian_norm_bound(double beta, double K, double area) {
    if (!(beta > 1.0)) throw std::domain_error("jacobian_norm_bound: beta <= 1");
    if (!(K >= 1.0)) throw std::domain_error("jacobian_norm_bound: K < 1");
    if (!(area > 0.0)) throw std::domain_error("jacobian_norm_bound: area <= 0");
    const double t = beta - 1.0;
    const double l = 2.0 * c_beta_log10_from_excess(t, K) + 2.0 * std::log10(K) +
                     (1.0 - beta) / beta * std::log10(M_PI) - std::log10(4.0) +
                     exp_factor_log10(K, 2.0) + std::log10(area);
    return LogValue::from_log10(l);
}

}  // namespace qcspec::constants
