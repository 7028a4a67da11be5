#include "qcspec/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qcspec/constants.hpp"
#include "qcspec/specfun.hpp"

namespace qcspec::bounds {

namespace {

void area_pi_assumption(BoundResult& b, double area) {
    if (std::abs(area - M_PI) > 1e-12)
        b.assumptions.push_back("warning: theorem assumes area pi, got area != pi");
    else
        b.assumptions.push_back("area pi");
}

}  // namespace

BoundResult payne_weinberger_upper(double area, double perimeter) {
    if (!(area > 0.0)) throw std::invalid_argument("payne_weinberger: area <= 0");
    if (perimeter * perimeter < 4.0 * M_PI * area * (1.0 - 1e-12))
        throw std::invalid_argument(
            "payne_weinberger: perimeter^2 < 4 pi area violates the isoperimetric inequality");
    const double j = specfun::bessel_j0_first_zero().value;
    const double j1 = specfun::bessel_j1(j);
    const double deficit = std::max(0.0, perimeter * perimeter / (4.0 * M_PI * area) - 1.0);
    BoundResult b;
    b.name = "payne_weinberger";
    b.kind = BoundKind::upper;
    b.value = M_PI * j * j / area * (1.0 + (1.0 / (j1 * j1) - 1.0) * deficit);
    b.inputs = {{"area", area}, {"perimeter", perimeter}};
    b.assumptions = {"simply connected", "rectifiable boundary", "Laplacian (A = I)"};
    return b;
}

BoundResult rfk_lower(double area) {
    if (!(area > 0.0)) throw std::invalid_argument("rfk_lower: area <= 0");
    BoundResult b;
    b.name = "rayleigh_faber_krahn";
    b.kind = BoundKind::lower;
    b.value = specfun::lambda1_disc() * M_PI / area;  // j01^2 / R*^2, R*^2 = area/pi
    b.inputs = {{"area", area}};
    b.assumptions = {"Laplacian (A = I)"};
    return b;
}

BoundResult makai_hayman_lower(double rho, double alpha) {
    if (!(rho > 0.0) || !(alpha > 0.0))
        throw std::invalid_argument("makai_hayman: rho and alpha must be positive");
    BoundResult b;
    b.name = "makai_hayman";
    b.kind = BoundKind::lower;
    b.value = alpha / (rho * rho);
    b.inputs = {{"rho", rho}, {"alpha", alpha}};
    b.assumptions = {"simply connected", "Laplacian (A = I)",
                     "alpha supplied externally; the estimate does not fix alpha"};
    return b;
}

BoundResult monotonicity_upper(double rho) {
    if (!(rho > 0.0)) throw std::invalid_argument("monotonicity_upper: rho <= 0");
    BoundResult b;
    b.name = "monotonicity";
    b.kind = BoundKind::upper;
    b.value = specfun::lambda1_disc() / (rho * rho);
    b.inputs = {{"rho", rho}};
    b.assumptions = {"Laplacian (A = I)", "rho is the inscribed radius"};
    return b;
}

Sandwich sandwich_volume_preserving(double K) {
    if (!(K >= 1.0)) throw std::domain_error("sandwich: K < 1");
    const double l1 = specfun::lambda1_disc();
    Sandwich s;
    s.lower.name = "sandwich_lower";
    s.lower.kind = BoundKind::lower;
    s.lower.value = l1;
    s.lower.inputs = {{"K", K}};
    s.lower.assumptions = {"volume-preserving A-quasiconformal map onto the disc",
                           "infinity-regular"};
    s.upper.name = "sandwich_upper";
    s.upper.kind = BoundKind::upper;
    s.upper.value = K * l1;
    s.upper.inputs = {{"K", K}};
    s.upper.assumptions = {"volume-preserving A-quasiconformal map onto the disc",
                           "beta-regular"};
    return s;
}

BoundResult thm52_upper(double K, double beta, double rho, double jac_norm_beta,
                        double jac_dev_norm, double area) {
    if (!(K >= 1.0)) throw std::domain_error("thm52_upper: K < 1");
    if (!(beta > 1.0)) throw std::domain_error("thm52_upper: beta <= 1");
    if (!(rho > 0.0)) throw std::domain_error("thm52_upper: rho <= 0");
    if (jac_norm_beta < 0.0 || jac_dev_norm < 0.0)
        throw std::domain_error("thm52_upper: negative Jacobian norm");
    const double l1 = specfun::lambda1_disc();
    const double l1_rho = l1 / (rho * rho);
    const double A = constants::stability_constant(beta, M_PI);
    BoundResult b;
    b.name = "thm52";
    b.kind = BoundKind::upper;
    b.value = K * l1 + A * A * K * K * l1_rho * l1_rho *
                           (std::pow(M_PI, 1.0 / (2.0 * beta)) + std::sqrt(jac_norm_beta)) *
                           jac_dev_norm;
    b.inputs = {{"K", K},
                {"beta", beta},
                {"rho", rho},
                {"jac_norm_beta", jac_norm_beta},
                {"jac_dev_norm", jac_dev_norm},
                {"area", area}};
    b.assumptions = {"A-quasiconformal beta-regular domain"};
    area_pi_assumption(b, area);
    return b;
}

BoundResult stability_gap_bound(double c_n, double beta, double jac_norm_beta,
                                double jac_dev_norm, double area) {
    if (c_n < 0.0 || jac_norm_beta < 0.0 || jac_dev_norm < 0.0)
        throw std::domain_error("stability_gap_bound: negative input");
    if (!(beta > 1.0)) throw std::domain_error("stability_gap_bound: beta <= 1");
    if (!(area > 0.0)) throw std::domain_error("stability_gap_bound: area <= 0");
    const double A = constants::stability_constant(beta, area);
    BoundResult b;
    b.name = "stability_gap";
    b.kind = BoundKind::upper;
    b.value = c_n * A * A *
              (std::pow(area, 1.0 / (2.0 * beta)) + std::sqrt(jac_norm_beta)) * jac_dev_norm;
    b.inputs = {{"c_n", c_n},
                {"beta", beta},
                {"jac_norm_beta", jac_norm_beta},
                {"jac_dev_norm", jac_dev_norm},
                {"area", area}};
    b.assumptions = {"A-quasiconformal beta-regular about the target domain",
                     "c_n = max of the squared n-th eigenvalues, caller-supplied"};
    return b;
}

BoundResult quasidisc_upper(double K, double rho, double jac_dev_norm, double area) {
    if (!(K > 1.0)) throw std::domain_error("quasidisc_upper: requires K > 1");
    if (!(rho > 0.0)) throw std::domain_error("quasidisc_upper: rho <= 0");
    if (jac_dev_norm < 0.0) throw std::domain_error("quasidisc_upper: negative dev norm");
    const double l1 = specfun::lambda1_disc();
    BoundResult b;
    b.name = "quasidisc";
    b.kind = BoundKind::upper;
    b.inputs = {{"K", K}, {"rho", rho}, {"jac_dev_norm", jac_dev_norm}, {"area", area}};
    b.assumptions = {"K-quasidisc"};
    area_pi_assumption(b, area);
    if (jac_dev_norm == 0.0) {
        b.value = K * l1;  // the M-term vanishes
        return b;
    }
    const auto m = constants::m_beta({K, area});
    const double l1_rho = l1 / (rho * rho);
    const LogValue term = m.value * LogValue::from_linear(K * K * l1_rho * l1_rho * jac_dev_norm);
    const LogValue total = log_add(LogValue::from_linear(K * l1), term);
    b.log_value = total;
    b.value = total.representable() ? total.to_linear()
                                    : std::numeric_limits<double>::infinity();
    return b;
}

InequalityCheck weighted_poincare_check(const geometry::QCMapDescriptor& map, double r,
                                        int test_fn_id, int quad_order) {
    if (!(r >= 2.0)) throw std::domain_error("weighted_poincare_check: r < 2");
    const auto f = geometry::test_function(test_fn_id);
    const auto& dom = map.source_domain();
    const auto& field = map.coefficient_field();

    // lhs: (int |f o phi|^r |J(z, phi)|)^{1/r}
    auto lhs_integrand = [&](complexd z) {
        const double v = f.value(map.eval(z));
        return std::pow(std::abs(v), r) * std::abs(map.jacobian(z));
    };
    // rhs energy: int <A grad(f o phi), grad(f o phi)>
    auto energy_integrand = [&](complexd z) {
        complexd fz, fzb;
        map.wirtinger(z, fz, fzb);
        const complexd phix = fz + fzb;
        const complexd phiy = complexd(0.0, 1.0) * (fz - fzb);
        double gx, gy;
        f.gradient(map.eval(z), gx, gy);
        const double hx = phix.real() * gx + phix.imag() * gy;
        const double hy = phiy.real() * gx + phiy.imag() * gy;
        const auto A = field.eval(z);
        return A.a11 * hx * hx + 2.0 * A.a12 * hx * hy + A.a22 * hy * hy;
    };

    InequalityCheck c;
    c.lhs = std::pow(geometry::integrate_polar(dom, lhs_integrand, quad_order), 1.0 / r);
    const double B = constants::poincare_constant_upper({r, M_PI});
    c.rhs = B * std::sqrt(geometry::integrate_polar(dom, energy_integrand, quad_order));
    return c;
}

}  // namespace qcspec::bounds
