#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qcspec/bounds.hpp"
#include "qcspec/constants.hpp"
#include "qcspec/specfun.hpp"

using namespace qcspec;
using namespace qcspec::bounds;

namespace {
const double kLambda1Disc = specfun::lambda1_disc();
}

TEST_CASE("Payne-Weinberger is tight on the disc and penalizes the deficit") {
    const auto disc = payne_weinberger_upper(M_PI, 2.0 * M_PI);
    CHECK(std::abs(disc.value - kLambda1Disc) < 1e-10);
    CHECK(disc.kind == BoundKind::upper);
    // inputs echoed bit-exactly
    CHECK(disc.inputs.at("area") == M_PI);
    CHECK(disc.inputs.at("perimeter") == 2.0 * M_PI);
    // longer boundary at fixed area -> strictly larger bound
    const auto longer = payne_weinberger_upper(M_PI, 2.0 * M_PI + 0.5);
    CHECK(longer.value > disc.value);
    // composition oracle for the deficit form
    const double j = specfun::bessel_j0_first_zero().value;
    const double j1 = specfun::bessel_j1(j);
    const double per = 2.0 * M_PI + 0.5;
    const double deficit = per * per / (4.0 * M_PI * M_PI) - 1.0;
    const double manual =
        M_PI * j * j / M_PI * (1.0 + (1.0 / (j1 * j1) - 1.0) * deficit);
    CHECK(longer.value == doctest::Approx(manual).epsilon(1e-14));
    // isoperimetric precondition
    CHECK_THROWS_AS(payne_weinberger_upper(M_PI, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(payne_weinberger_upper(-1.0, 10.0), std::invalid_argument);
}

TEST_CASE("Rayleigh-Faber-Krahn scales like 1/area") {
    CHECK(rfk_lower(M_PI).value == doctest::Approx(kLambda1Disc).epsilon(1e-14));
    CHECK(rfk_lower(2.0 * M_PI).value ==
          doctest::Approx(0.5 * kLambda1Disc).epsilon(1e-14));
    CHECK(rfk_lower(M_PI).kind == BoundKind::lower);
    CHECK_THROWS_AS(rfk_lower(0.0), std::invalid_argument);
}

TEST_CASE("Makai/Hayman and monotonicity use the inscribed radius") {
    CHECK(makai_hayman_lower(0.5, 0.25).value == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(makai_hayman_lower(0.5, 0.25).kind == BoundKind::lower);
    CHECK(monotonicity_upper(1.0).value == doctest::Approx(kLambda1Disc).epsilon(1e-14));
    CHECK(monotonicity_upper(0.5).value ==
          doctest::Approx(4.0 * kLambda1Disc).epsilon(1e-14));
    CHECK_THROWS_AS(makai_hayman_lower(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(monotonicity_upper(-1.0), std::invalid_argument);
}

TEST_CASE("sandwich for volume-preserving maps") {
    const auto s = sandwich_volume_preserving(3.0);
    CHECK(s.lower.value == doctest::Approx(kLambda1Disc).epsilon(1e-14));
    CHECK(s.upper.value == doctest::Approx(3.0 * kLambda1Disc).epsilon(1e-14));
    CHECK(s.lower.kind == BoundKind::lower);
    CHECK(s.upper.kind == BoundKind::upper);
    // worked example values
    const double Ke = (std::sqrt(1.25) + 0.5) / (std::sqrt(1.25) - 0.5);
    CHECK(sandwich_volume_preserving(Ke).upper.value ==
          doctest::Approx(2.618033988749895 * kLambda1Disc).epsilon(1e-11));
    CHECK(sandwich_volume_preserving(2.0).upper.value ==
          doctest::Approx(2.0 * kLambda1Disc).epsilon(1e-13));
    CHECK_THROWS_AS(sandwich_volume_preserving(0.9), std::domain_error);
}

TEST_CASE("thm52 upper bound composition") {
    // zero Jacobian deviation collapses to the sandwich value
    const auto clean = thm52_upper(2.0, 2.0, 1.0, std::sqrt(M_PI), 0.0, M_PI);
    CHECK(clean.value == doctest::Approx(2.0 * kLambda1Disc).epsilon(1e-13));
    // manual composition with a nonzero deviation
    const double K = 2.0, beta = 2.0, rho = 0.8, jn = 1.7, dev = 0.3;
    const auto b = thm52_upper(K, beta, rho, jn, dev, M_PI);
    const double A = constants::stability_constant(beta, M_PI);
    const double l1r = kLambda1Disc / (rho * rho);
    const double manual =
        K * kLambda1Disc + A * A * K * K * l1r * l1r *
                               (std::pow(M_PI, 0.25) + std::sqrt(jn)) * dev;
    CHECK(b.value == doctest::Approx(manual).epsilon(1e-13));
    CHECK(b.value > clean.value);
    CHECK_THROWS_AS(thm52_upper(0.5, 2.0, 1.0, 1.0, 0.0, M_PI), std::domain_error);
    CHECK_THROWS_AS(thm52_upper(2.0, 1.0, 1.0, 1.0, 0.0, M_PI), std::domain_error);
    CHECK_THROWS_AS(thm52_upper(2.0, 2.0, 1.0, -1.0, 0.0, M_PI), std::domain_error);
}

TEST_CASE("stability gap bound composition") {
    const double c_n = 2.5, beta = 3.0, jn = 1.2, dev = 0.1, area = M_PI;
    const auto b = stability_gap_bound(c_n, beta, jn, dev, area);
    const double A = constants::stability_constant(beta, area);
    const double manual =
        c_n * A * A * (std::pow(area, 1.0 / 6.0) + std::sqrt(jn)) * dev;
    CHECK(b.value == doctest::Approx(manual).epsilon(1e-13));
    // vanishing deviation -> zero gap
    CHECK(stability_gap_bound(c_n, beta, jn, 0.0, area).value == 0.0);
    CHECK_THROWS_AS(stability_gap_bound(-1.0, beta, jn, dev, area), std::domain_error);
}

TEST_CASE("quasidisc bound: linear term at dev = 0, log-space otherwise") {
    const auto lin = quasidisc_upper(1.5, 1.0, 0.0, M_PI);
    CHECK(lin.value == doctest::Approx(1.5 * kLambda1Disc).epsilon(1e-13));
    CHECK_FALSE(lin.log_value.has_value());

    const auto b = quasidisc_upper(1.5, 0.9, 0.2, M_PI);
    REQUIRE(b.log_value.has_value());
    // manual log-space composition against the library's own M_beta
    const auto m = constants::m_beta({1.5, M_PI});
    const double l1r = kLambda1Disc / (0.9 * 0.9);
    const double term = m.value.log10 + std::log10(1.5 * 1.5 * l1r * l1r * 0.2);
    const double lo = std::log10(1.5 * kLambda1Disc);
    const double expect = term + std::log1p(std::pow(10.0, lo - term)) / std::log(10.0);
    CHECK(b.log_value->log10 == doctest::Approx(expect).epsilon(1e-12));
    CHECK_FALSE(b.log_value->representable());
    CHECK(std::isinf(b.value));
    CHECK_THROWS_AS(quasidisc_upper(1.0, 1.0, 0.1, M_PI), std::domain_error);
}

TEST_CASE("area-pi assumption warnings") {
    const auto warned = thm52_upper(2.0, 2.0, 1.0, 1.0, 0.0, 2.0);
    bool found = false;
    for (const auto& a : warned.assumptions)
        if (a.find("warning") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("weighted Poincare inequality holds for r in {2, 4}") {
    const auto maps = {geometry::QCMapDescriptor::identity(),
                       geometry::QCMapDescriptor::spiral(),
                       geometry::QCMapDescriptor::ellipse_affine(0.5),
                       geometry::QCMapDescriptor::petal_map()};
    for (const auto& m : maps)
        for (double r : {2.0, 4.0})
            for (int id = 0; id < geometry::test_function_count(); ++id) {
                const auto c = weighted_poincare_check(m, r, id);
                CHECK(c.lhs <= c.rhs * (1.0 + 1e-9));
                CHECK(c.lhs > 0.0);
            }
    CHECK_THROWS_AS(
        weighted_poincare_check(geometry::QCMapDescriptor::identity(), 1.5, 0),
        std::domain_error);
}
