#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qcspec/geometry.hpp"

using namespace qcspec;
using namespace qcspec::geometry;

namespace {

const double kSqrt125 = std::sqrt(1.25);

std::vector<QCMapDescriptor> builtin_maps() {
    return {QCMapDescriptor::spiral(), QCMapDescriptor::ellipse_affine(0.5),
            QCMapDescriptor::petal_map()};
}

}  // namespace

TEST_CASE("areas: every builtin domain except the square has area pi") {
    CHECK(DomainDescriptor::disc().area() == doctest::Approx(M_PI).epsilon(1e-14));
    CHECK(DomainDescriptor::ellipse(0.5).area() == doctest::Approx(M_PI).epsilon(1e-13));
    CHECK(DomainDescriptor::ellipse(2.0).area() == doctest::Approx(M_PI).epsilon(1e-13));
    CHECK(std::abs(DomainDescriptor::petal().area() - M_PI) < 1e-8);
    CHECK(DomainDescriptor::unit_square().area() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("perimeters") {
    CHECK(DomainDescriptor::disc().perimeter() ==
          doctest::Approx(2.0 * M_PI).epsilon(1e-12));
    CHECK(DomainDescriptor::unit_square().perimeter() ==
          doctest::Approx(4.0).epsilon(1e-14));
    // ellipse(0.5): quadrature against a trapezoid reference
    const auto e = DomainDescriptor::ellipse(0.5);
    const double A = kSqrt125 + 0.5, B = kSqrt125 - 0.5;
    double ref = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double t = 2.0 * M_PI * i / n;
        ref += std::hypot(A * std::sin(t), B * std::cos(t)) * (2.0 * M_PI / n);
    }
    CHECK(e.perimeter() == doctest::Approx(ref).epsilon(1e-8));
    // isoperimetric inequality for every area-pi domain
    for (const auto& d : {DomainDescriptor::disc(), e, DomainDescriptor::petal()})
        CHECK(d.perimeter() * d.perimeter() >= 4.0 * M_PI * d.area() * (1.0 - 1e-12));
}

TEST_CASE("boundary points lie on the boundary and inside closure") {
    for (const auto& d :
         {DomainDescriptor::disc(), DomainDescriptor::ellipse(0.5),
          DomainDescriptor::petal(), DomainDescriptor::unit_square()}) {
        for (int i = 0; i < 256; ++i) {
            const complexd p = d.boundary_point(i / 256.0);
            CHECK(d.contains(p, 1e-9));
            if (d.kind() != DomainKind::polygon)
                CHECK_FALSE(d.contains(p, -1e-6));  // not strictly interior
        }
    }
}

TEST_CASE("inscribed radii") {
    CHECK(DomainDescriptor::disc().inscribed_radius() == 1.0);
    CHECK(DomainDescriptor::disc(2.5).inscribed_radius() == 2.5);
    CHECK(DomainDescriptor::ellipse(0.5).inscribed_radius() ==
          doctest::Approx(kSqrt125 - 0.5).epsilon(1e-9));
    CHECK(DomainDescriptor::unit_square().inscribed_radius() ==
          doctest::Approx(0.5).epsilon(1e-9));
    const double rho = DomainDescriptor::petal().inscribed_radius();
    CHECK(rho == doctest::Approx(0.7698003589).epsilon(1e-6));
    // deterministic and cached
    CHECK(DomainDescriptor::petal().inscribed_radius() == rho);
    // an inscribed disc fits: sample the boundary of the maximizing disc
    // cheaply by checking rho is below the polar radius along many rays
    const auto p = DomainDescriptor::petal();
    for (int i = 0; i < 64; ++i) {
        const double th = -M_PI / 4 + M_PI / 2 * (i + 0.5) / 64.0;
        CHECK(p.polar_radius(th) > 0.0);
    }
}

TEST_CASE("maps: forward/inverse round trip and unit-disc image") {
    for (const auto& m : builtin_maps()) {
        const auto& d = m.source_domain();
        for (int i = 0; i < 256; ++i) {
            // interior sample along a spiral of rays
            const double t = (i + 0.5) / 256.0;
            const complexd zb = d.boundary_point(t);
            const complexd z = zb * (0.15 + 0.8 * std::fmod(0.37 * i, 1.0));
            if (std::abs(z) < 1e-6) continue;
            const complexd w = m.eval(z);
            CHECK(std::abs(w) <= 1.0 + 1e-9);
            CHECK(std::abs(m.inverse(w) - z) < 1e-9 * (1.0 + std::abs(z)));
            // boundary maps to the unit circle
            CHECK(std::abs(std::abs(m.eval(zb)) - 1.0) < 1e-9);
        }
    }
}

TEST_CASE("maps are volume-preserving: |J| = 1 and FD Wirtinger agreement") {
    for (const auto& m : builtin_maps()) {
        const auto& d = m.source_domain();
        for (int i = 0; i < 100; ++i) {
            const complexd z =
                d.boundary_point((i + 0.5) / 100.0) * (0.2 + 0.006 * i);
            if (std::abs(z) < 1e-6) continue;
            CHECK(m.jacobian(z) == doctest::Approx(1.0).epsilon(1e-10));
            complexd fz, fzb;
            m.wirtinger(z, fz, fzb);
            // first-order expansion phi(z+h) = phi + fz h + fzb conj(h)
            const double h = 1e-6 * (1.0 + std::abs(z));
            // curvature remainder ~ |phi''| h^2 / 2 with |phi''| ~ 1/|z|
            const double tol = 200.0 * h * h / std::min(std::abs(z), 1.0);
            for (const complexd dir : {complexd{1, 0}, complexd{0, 1}}) {
                const complexd step = h * dir;
                const complexd pred = m.eval(z) + fz * step + fzb * std::conj(step);
                CHECK(std::abs(m.eval(z + step) - pred) < tol);
            }
        }
    }
}

TEST_CASE("map K values match the examples") {
    CHECK(QCMapDescriptor::identity().K() == 1.0);
    CHECK(QCMapDescriptor::spiral().K() ==
          doctest::Approx((2.0 + std::sqrt(2.0)) / (2.0 - std::sqrt(2.0))).epsilon(1e-13));
    CHECK(QCMapDescriptor::ellipse_affine(0.5).K() ==
          doctest::Approx((kSqrt125 + 0.5) / (kSqrt125 - 0.5)).epsilon(1e-13));
    CHECK(QCMapDescriptor::petal_map().K() == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("test function catalog") {
    CHECK(test_function_count() >= 3);
    for (int id = 0; id < test_function_count(); ++id) {
        const auto f = test_function(id);
        // vanishes on the unit circle
        for (int i = 0; i < 16; ++i)
            CHECK(std::abs(f.value(std::polar(1.0, 0.4 * i))) < 1e-12);
        // gradient vs finite differences
        for (int i = 0; i < 25; ++i) {
            const complexd w = std::polar(0.05 + 0.037 * i, 1.7 * i);
            double gx, gy;
            f.gradient(w, gx, gy);
            const double h = 1e-6;
            const double fdx =
                (f.value(w + complexd{h, 0}) - f.value(w - complexd{h, 0})) / (2 * h);
            const double fdy =
                (f.value(w + complexd{0, h}) - f.value(w - complexd{0, h})) / (2 * h);
            CHECK(std::abs(gx - fdx) < 1e-8);
            CHECK(std::abs(gy - fdy) < 1e-8);
        }
    }
    CHECK_THROWS_AS(test_function(test_function_count()), std::invalid_argument);
}

TEST_CASE("polar integration: constants and polynomials") {
    for (const auto& d : {DomainDescriptor::disc(), DomainDescriptor::ellipse(0.5),
                          DomainDescriptor::petal()}) {
        CHECK(integrate_polar(d, [](complexd) { return 1.0; }) ==
              doctest::Approx(d.area()).epsilon(1e-9));
    }
    // int_D (1 - |w|^2) = pi/2
    CHECK(integrate_polar(DomainDescriptor::disc(),
                          [](complexd w) { return 1.0 - std::norm(w); }) ==
          doctest::Approx(M_PI / 2.0).epsilon(1e-12));
}

TEST_CASE("Dirichlet-norm isometry across maps and test functions") {
    for (const auto& m : builtin_maps()) {
        for (int id = 0; id < 3; ++id) {
            const auto r = isometry_check(m, id);
            CHECK(std::abs(r.lhs - r.rhs) <= 1e-3 * std::abs(r.rhs));
        }
    }
    // identity map: exact equality up to quadrature
    const auto r = isometry_check(QCMapDescriptor::identity(), 0);
    CHECK(std::abs(r.lhs - r.rhs) < 1e-12 * std::abs(r.rhs));
}

TEST_CASE("free-function spellings agree with the members") {
    const auto d = DomainDescriptor::ellipse(0.5);
    CHECK(domain_area(d) == d.area());
    CHECK(domain_perimeter(d) == d.perimeter());
    CHECK(inscribed_radius(d) == d.inscribed_radius());
    const auto m = QCMapDescriptor::spiral();
    const complexd z{0.3, 0.4};
    CHECK(map_eval(m, z) == m.eval(z));
    CHECK(map_jacobian(m, z) == m.jacobian(z));
}
