// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion is self-contained and runs at desk scale.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#if HAVE_BOOST_MP
#include "mp_oracle.hpp"
#endif

#include "qcspec/bounds.hpp"
#include "qcspec/constants.hpp"
#include "qcspec/fem.hpp"
#include "qcspec/report.hpp"
#include "qcspec/specfun.hpp"

using namespace qcspec;
using geometry::DomainDescriptor;
using geometry::QCMapDescriptor;
using beltrami::CoefficientField;

namespace {

int g_failures = 0;

void record(int id, bool ok, const std::string& what) {
    std::printf("%s  %2d. %s\n", ok ? "PASS" : "FAIL", id, what.c_str());
    if (!ok) ++g_failures;
}

double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

const double kJ2 = specfun::lambda1_disc();

// 1. disc Laplacian, 3 refinements from h = 0.1, 0.3% of j01^2, < 60 s
void criterion_1() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = fem::solve_on_domain(DomainDescriptor::disc(),
                                        CoefficientField::identity(), 3, 0.1);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    record(1, rel_err(r.extrapolated, kJ2) < 3e-3 && secs < 60.0,
           "disc eigenvalue: extrapolated within 0.3% of j01^2, < 60 s");
}

// 2. spiral: exact lower j01^2, upper (2+sqrt2)/(2-sqrt2) j01^2, 2% oracle
void criterion_2() {
    const auto r = fem::solve_on_domain(DomainDescriptor::disc(),
                                        CoefficientField::spiral(), 3, 0.1);
    const double K = (2.0 + std::sqrt(2.0)) / (2.0 - std::sqrt(2.0));
    const bool ok = r.levels.back().lambda1 >= kJ2 && r.extrapolated <= K * kJ2 &&
                    rel_err(r.extrapolated, kJ2) < 0.02;
    record(2, ok, "spiral matrix: j01^2 <= lambda1 <= 33.71, oracle within 2%");
}

// 3. ellipse(0.5): sandwich upper 2.61803 j01^2 to 5 digits; FEM within 0.5%
void criterion_3() {
    const double K = (std::sqrt(1.25) + 0.5) / (std::sqrt(1.25) - 0.5);
    const double upper = bounds::sandwich_volume_preserving(K).upper.value;
    const bool digits = rel_err(upper, 2.618033988749895 * kJ2) < 5e-6;
    const auto r = fem::solve_on_domain(DomainDescriptor::ellipse(0.5),
                                        CoefficientField::ellipse_affine(0.5), 3, 0.1);
    record(3, digits && rel_err(r.extrapolated, kJ2) < 5e-3,
           "ellipse(0.5): sandwich upper to 5 digits, FEM within 0.5% of j01^2");
}

// 4. petal: sandwich upper 2 j01^2; FEM in [j01^2, 2 j01^2 (1+eps)], 2%; area pi
void criterion_4() {
    const double upper = bounds::sandwich_volume_preserving(2.0).upper.value;
    const auto r = fem::solve_on_domain(DomainDescriptor::petal(),
                                        CoefficientField::petal(), 3, 0.1);
    const double eps = 3.0 * r.error_estimate / r.extrapolated;
    const bool ok = rel_err(upper, 2.0 * kJ2) < 1e-12 &&
                    r.levels.back().lambda1 >= kJ2 &&
                    r.extrapolated <= 2.0 * kJ2 * (1.0 + eps) &&
                    rel_err(r.extrapolated, kJ2) < 0.02 &&
                    std::abs(DomainDescriptor::petal().area() - M_PI) < 1e-8;
    record(4, ok, "petal: upper 2 j01^2, FEM in the sandwich and within 2%, area pi");
}

// 5. PW tight on the disc to 1e-10; PW(ellipse) above its FEM Laplacian
void criterion_5() {
    const bool tight =
        std::abs(bounds::payne_weinberger_upper(M_PI, 2.0 * M_PI).value - kJ2) < 1e-10;
    const auto e = DomainDescriptor::ellipse(0.5);
    const double pw = bounds::payne_weinberger_upper(e.area(), e.perimeter()).value;
    const auto r = fem::solve_on_domain(e, CoefficientField::identity(), 3, 0.1);
    record(5, tight && pw > r.extrapolated,
           "Payne-Weinberger: tight on the disc, dominates the ellipse FEM value");
}

// 6. RFK strict for ellipse(0.5) and petal beyond the FEM error estimate
void criterion_6() {
    bool ok = true;
    for (const auto& d : {DomainDescriptor::ellipse(0.5), DomainDescriptor::petal()}) {
        const auto r = fem::solve_on_domain(d, CoefficientField::identity(), 3, 0.1);
        ok = ok && (r.extrapolated > kJ2 + r.error_estimate);
    }
    record(6, ok, "Rayleigh-Faber-Krahn strict for ellipse and petal Laplacians");
}

// 7. monotonicity j01^2/rho^2 (1+eps) dominates the Laplacian FEM values
void criterion_7() {
    bool ok = true;
    for (const auto& d : {DomainDescriptor::disc(), DomainDescriptor::ellipse(0.5),
                          DomainDescriptor::petal()}) {
        const auto r = fem::solve_on_domain(d, CoefficientField::identity(), 3, 0.1);
        const double bound = bounds::monotonicity_upper(d.inscribed_radius()).value;
        const double eps = 3.0 * r.error_estimate / r.extrapolated;
        ok = ok && (r.extrapolated <= bound * (1.0 + eps));
    }
    record(7, ok, "monotonicity bound with computed rho holds for all three domains");
}

// 8. Beltrami round trip, 1000 dilatations
void criterion_8() {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> radius(0.0, 0.95), angle(0.0, 2.0 * M_PI);
    bool ok = true;
    for (int i = 0; i < 1000 && ok; ++i) {
        const auto mu = std::polar(radius(rng), angle(rng));
        const auto A = beltrami::matrix_from_dilatation(mu);
        const auto mu2 = beltrami::dilatation_from_matrix(A);
        const auto A2 = beltrami::matrix_from_dilatation(mu2);
        ok = std::abs(mu2 - mu) < 1e-12 && std::abs(A.det() - 1.0) < 1e-12 &&
             std::abs(A2.det() - 1.0) < 1e-12 && std::abs(A2.a11 - A.a11) < 1e-10 &&
             std::abs(A2.a12 - A.a12) < 1e-10 && std::abs(A2.a22 - A.a22) < 1e-10;
    }
    record(8, ok, "Beltrami round trips: mu->A->mu 1e-12, A->mu->A 1e-10, det 1e-12");
}

// 9. B_{r,2} golden vs 1e5 grid, 12 pairs; B_{2,2} >= 1/j01; stability identity
void criterion_9() {
    bool ok = true;
    const double rs[] = {2.0, 2.5, 3.0, 4.0, 6.0, 10.0};
    for (double r : rs)
        for (double area : {M_PI, 2.0}) {
            const double got = constants::poincare_constant_upper({r, area});
            const double pa = 2.0 * r / (r + 2.0) + 1e-9, pb = 2.0 - 1e-9;
            double best = 1e300;
            for (int i = 0; i <= 100000; ++i)
                best = std::min(best, constants::poincare_objective(
                                          pa + (pb - pa) * i / 100000, r, area));
            ok = ok && std::abs(got - best) <= 1e-8 * best;
        }
    ok = ok && constants::poincare_constant_upper({2.0, M_PI}) >=
                   1.0 / specfun::bessel_j0_first_zero().value;
    for (double beta : {1.2, 2.0, 5.0})
        ok = ok && std::abs(constants::stability_constant(beta, M_PI) -
                            constants::poincare_constant_upper(
                                {4.0 * beta / (beta - 1.0), M_PI})) < 1e-12;
    record(9, ok, "constants: golden vs grid 1e-8 on 12 pairs, 1/j01 floor, identity");
}

// 10. quasidisc constants: beta~, monotonicity, magnitude floor, 50-digit oracle
void criterion_10() {
    bool ok = true;
    for (double K : {1.0, 1.1, 2.0, 10.0})
        ok = ok && std::abs(constants::nu_log10_from_excess(
                       constants::beta_tilde_excess(K), K)) < 1e-10;
    for (double K : {1.0, 1.5, 3.0}) {
        double prev = -1e300;
        for (double t = 1e-16; t < 2.0; t *= 2.5) {
            const double v = constants::nu_log10_from_excess(t, K);
            ok = ok && v > prev;
            prev = v;
        }
    }
    for (double K : {1.1, 1.5, 2.0}) {
        const auto m = constants::m_beta({K, M_PI});
        ok = ok && std::isfinite(m.value.log10) &&
             m.value.log10 >= 137.0 * K * K - 10.0;
#if HAVE_BOOST_MP
        using mp_oracle::mpfloat;
        const double ref = static_cast<double>(
            mp_oracle::outer_log10(mpfloat(m.beta_excess), mpfloat(m.p_excess),
                                   mpfloat(K), mp_oracle::kPi));
        ok = ok && std::abs(m.value.log10 - ref) <= 1e-8 * std::abs(ref);
#endif
    }
    record(10, ok,
           "quasidisc constants: nu(beta~) ~ 1, monotone, 137 K^2 floor, 50-digit oracle");
}

// 11. isometry across the three maps and three test functions to 1e-3
void criterion_11() {
    bool ok = true;
    for (const auto& m :
         {QCMapDescriptor::spiral(), QCMapDescriptor::ellipse_affine(0.5),
          QCMapDescriptor::petal_map()})
        for (int id = 0; id < 3; ++id) {
            const auto r = geometry::isometry_check(m, id);
            ok = ok && std::abs(r.lhs - r.rhs) <= 1e-3 * std::abs(r.rhs);
        }
    record(11, ok, "Dirichlet-norm isometry to 1e-3 for all maps and test functions");
}

// 12. weighted Poincare verdicts for r in {2, 4}
void criterion_12() {
    bool ok = true;
    for (const auto& m :
         {QCMapDescriptor::identity(), QCMapDescriptor::spiral(),
          QCMapDescriptor::ellipse_affine(0.5), QCMapDescriptor::petal_map()})
        for (double r : {2.0, 4.0})
            for (int id = 0; id < geometry::test_function_count(); ++id) {
                const auto c = bounds::weighted_poincare_check(m, r, id);
                ok = ok && c.lhs <= c.rhs * (1.0 + 1e-9);
            }
    record(12, ok, "weighted Poincare inequality holds for r in {2, 4}");
}

// 13. byte-identical verify reports across runs and thread counts
void criterion_13() {
    const std::string dir = QCSPEC_TEST_DIR;
    const std::string cfg = dir + "/acceptance_cfg.json";
    std::ofstream(cfg) << R"({
  "case_id": "acceptance",
  "domain": {"kind": "disc"},
  "coefficient": {"builtin": "spiral"},
  "bounds": ["rfk", "sandwich", "monotonicity"],
  "fem": {"refinements": 2, "target_h": 0.12}
})";
    auto run_once = [&](const std::string& out, const std::string& extra) {
        const std::string cmd = std::string(QCSPEC_CLI_PATH) + " --config " + cfg +
                                " --output " + out + " " + extra +
                                " verify > /dev/null 2>&1";
        return WEXITSTATUS(std::system(cmd.c_str())) == 0;
    };
    auto slurp = [](const std::string& p) {
        std::ifstream in(p, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    const std::string p1 = dir + "/acc1.json", p2 = dir + "/acc2.json",
                      p3 = dir + "/acc3.json";
    bool ok = run_once(p1, "--threads 1") && run_once(p2, "--threads 1") &&
              run_once(p3, "--threads 4");
    const std::string a = slurp(p1);
    ok = ok && !a.empty() && a == slurp(p2) && a == slurp(p3);
    record(13, ok, "verify reports byte-identical across runs and threads 1/4");
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    criterion_13();
    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all 13 criteria passed\n");
    return 0;
}
