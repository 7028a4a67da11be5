#include "qcspec/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qcspec/quadrature.hpp"

namespace qcspec::geometry {

namespace {

constexpr double kPetalTheta = M_PI / 4.0;

double petal_rho(double theta) { return 2.0 * std::sqrt(2.0) * std::cos(2.0 * theta); }

struct EllipseAxes {
    double A, B;  // semi-major (x), semi-minor (y)
};

EllipseAxes ellipse_axes(double a) {
    const double c = std::sqrt(a * a + 1.0);
    return {c + a, c - a};
}

double polygon_signed_area(const std::vector<complexd>& v) {
    double s = 0.0;
    for (size_t i = 0; i < v.size(); ++i) {
        const complexd& p = v[i];
        const complexd& q = v[(i + 1) % v.size()];
        s += p.real() * q.imag() - q.real() * p.imag();
    }
    return 0.5 * s;
}

double point_segment_distance(complexd p, complexd a, complexd b) {
    const complexd ab = b - a;
    const double len2 = std::norm(ab);
    double t = len2 > 0.0 ? ((p - a).real() * ab.real() + (p - a).imag() * ab.imag()) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

}  // namespace

DomainDescriptor DomainDescriptor::disc(double radius) {
    if (radius <= 0.0) throw std::invalid_argument("disc: radius <= 0");
    DomainDescriptor d;
    d.kind_ = DomainKind::disc;
    d.radius_ = radius;
    return d;
}

DomainDescriptor DomainDescriptor::ellipse(double a) {
    if (a < 0.0) throw std::invalid_argument("ellipse: a < 0");
    DomainDescriptor d;
    d.kind_ = DomainKind::ellipse;
    d.param_ = a;
    return d;
}

DomainDescriptor DomainDescriptor::petal() {
    DomainDescriptor d;
    d.kind_ = DomainKind::petal;
    return d;
}

DomainDescriptor DomainDescriptor::polygon(std::vector<complexd> vertices) {
    if (vertices.size() < 3) throw std::invalid_argument("polygon: needs >= 3 vertices");
    if (polygon_signed_area(vertices) <= 0.0)
        throw std::invalid_argument("polygon: vertices must be counter-clockwise with positive area");
    DomainDescriptor d;
    d.kind_ = DomainKind::polygon;
    d.vertices_ = std::move(vertices);
    return d;
}

DomainDescriptor DomainDescriptor::unit_square() {
    return polygon({{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}});
}

double DomainDescriptor::polar_radius(double theta) const {
    switch (kind_) {
        case DomainKind::disc:
            return radius_;
        case DomainKind::ellipse: {
            const auto [A, B] = ellipse_axes(param_);
            const double c = std::cos(theta) / A, s = std::sin(theta) / B;
            return 1.0 / std::sqrt(c * c + s * s);
        }
        case DomainKind::petal:
            if (std::abs(theta) > kPetalTheta) return 0.0;
            return petal_rho(theta);
        case DomainKind::polygon:
            break;
    }
    throw std::logic_error("polar_radius: not star-shaped about the origin");
}

double DomainDescriptor::area() const {
    switch (kind_) {
        case DomainKind::disc:
            return M_PI * radius_ * radius_;
        case DomainKind::ellipse: {
            const auto [A, B] = ellipse_axes(param_);
            return M_PI * A * B;
        }
        case DomainKind::petal:
            // polar area quadrature; rho^2 is a trig polynomial so this is
            // exact to roundoff at modest order
            return quadrature::integrate_panels(
                [](double t) { const double r = petal_rho(t); return 0.5 * r * r; },
                -kPetalTheta, kPetalTheta, 24, 8);
        case DomainKind::polygon:
            return polygon_signed_area(vertices_);
    }
    throw std::logic_error("area: bad kind");
}

double DomainDescriptor::perimeter() const {
    switch (kind_) {
        case DomainKind::disc:
            return 2.0 * M_PI * radius_;
        case DomainKind::ellipse: {
            const auto [A, B] = ellipse_axes(param_);
            return quadrature::adaptive_simpson(
                [&](double t) {
                    const double dx = -A * std::sin(t), dy = B * std::cos(t);
                    return std::hypot(dx, dy);
                },
                0.0, 2.0 * M_PI, 1e-10);
        }
        case DomainKind::petal:
            return quadrature::adaptive_simpson(
                [](double t) {
                    const double r = petal_rho(t);
                    const double dr = -4.0 * std::sqrt(2.0) * std::sin(2.0 * t);
                    return std::hypot(r, dr);
                },
                -kPetalTheta, kPetalTheta, 1e-10);
        case DomainKind::polygon: {
            double s = 0.0;
            for (size_t i = 0; i < vertices_.size(); ++i)
                s += std::abs(vertices_[(i + 1) % vertices_.size()] - vertices_[i]);
            return s;
        }
    }
    throw std::logic_error("perimeter: bad kind");
}

bool DomainDescriptor::contains(complexd z, double tol) const {
    switch (kind_) {
        case DomainKind::disc:
            return std::abs(z) <= radius_ + tol;
        case DomainKind::ellipse: {
            const auto [A, B] = ellipse_axes(param_);
            const double x = z.real() / A, y = z.imag() / B;
            return x * x + y * y <= 1.0 + tol;
        }
        case DomainKind::petal: {
            const double r = std::abs(z);
            if (r <= tol + 1e-300 && r < 1e-13) return true;  // the corner
            const double th = std::atan2(z.imag(), z.real());
            if (std::abs(th) > kPetalTheta) return r <= tol;
            return r <= petal_rho(th) + tol;
        }
        case DomainKind::polygon: {
            // even-odd ray crossing; tol handled via boundary distance
            bool inside = false;
            const size_t n = vertices_.size();
            for (size_t i = 0, j = n - 1; i < n; j = i++) {
                const complexd& a = vertices_[i];
                const complexd& b = vertices_[j];
                if ((a.imag() > z.imag()) != (b.imag() > z.imag())) {
                    const double x = a.real() + (z.imag() - a.imag()) /
                                                    (b.imag() - a.imag()) * (b.real() - a.real());
                    if (z.real() < x) inside = !inside;
                }
            }
            if (inside) return true;
            if (tol <= 0.0) return false;
            for (size_t i = 0; i < n; ++i)
                if (point_segment_distance(z, vertices_[i], vertices_[(i + 1) % n]) <= tol)
                    return true;
            return false;
        }
    }
    return false;
}

complexd DomainDescriptor::boundary_point(double t) const {
    t -= std::floor(t);
    switch (kind_) {
        case DomainKind::disc:
            return std::polar(radius_, 2.0 * M_PI * t);
        case DomainKind::ellipse: {
            const auto [A, B] = ellipse_axes(param_);
            return {A * std::cos(2.0 * M_PI * t), B * std::sin(2.0 * M_PI * t)};
        }
        case DomainKind::petal: {
            const double th = -kPetalTheta + t * 2.0 * kPetalTheta;
            return std::polar(petal_rho(th), th);
        }
        case DomainKind::polygon: {
            const size_t n = vertices_.size();
            std::vector<double> acc(n + 1, 0.0);
            for (size_t i = 0; i < n; ++i)
                acc[i + 1] = acc[i] + std::abs(vertices_[(i + 1) % n] - vertices_[i]);
            const double s = t * acc[n];
            const size_t e = std::upper_bound(acc.begin(), acc.end(), s) - acc.begin() - 1;
            const size_t i = std::min(e, n - 1);
            const double local = (s - acc[i]) / (acc[i + 1] - acc[i]);
            return vertices_[i] + local * (vertices_[(i + 1) % n] - vertices_[i]);
        }
    }
    throw std::logic_error("boundary_point: bad kind");
}

namespace {

double distance_to_boundary(const DomainDescriptor& d, complexd p) {
    switch (d.kind()) {
        case DomainKind::disc:
            return d.radius() - std::abs(p);
        case DomainKind::polygon: {
            double best = 1e300;
            const auto& v = d.vertices();
            for (size_t i = 0; i < v.size(); ++i)
                best = std::min(best, point_segment_distance(p, v[i], v[(i + 1) % v.size()]));
            return best;
        }
        default: {
            // sampled boundary distance with golden-section refinement
            const int n = 2048;
            double best = 1e300;
            double tbest = 0.0;
            for (int i = 0; i <= n; ++i) {
                const double t = static_cast<double>(i) / n;
                const double dist = std::abs(p - d.boundary_point(t));
                if (dist < best) { best = dist; tbest = t; }
            }
            double lo = tbest - 2.0 / n, hi = tbest + 2.0 / n;
            const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
            double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
            double f1 = std::abs(p - d.boundary_point(x1));
            double f2 = std::abs(p - d.boundary_point(x2));
            for (int it = 0; it < 60; ++it) {
                if (f1 < f2) {
                    hi = x2; x2 = x1; f2 = f1;
                    x1 = hi - gr * (hi - lo);
                    f1 = std::abs(p - d.boundary_point(x1));
                } else {
                    lo = x1; x1 = x2; f1 = f2;
                    x2 = lo + gr * (hi - lo);
                    f2 = std::abs(p - d.boundary_point(x2));
                }
            }
            return std::min(best, std::min(f1, f2));
        }
    }
}

}  // namespace

double DomainDescriptor::inscribed_radius() const {
    switch (kind_) {
        case DomainKind::disc:
            return radius_;
        case DomainKind::ellipse:
            return ellipse_axes(param_).B;  // curvature at the co-vertex is always flatter
        default:
            break;
    }
    if (cached_rho_ > 0.0) return cached_rho_;
    // maximize boundary distance over a shrinking grid
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (int i = 0; i < 512; ++i) {
        const complexd b = boundary_point(i / 512.0);
        xmin = std::min(xmin, b.real()); xmax = std::max(xmax, b.real());
        ymin = std::min(ymin, b.imag()); ymax = std::max(ymax, b.imag());
    }
    complexd best_p(0.5 * (xmin + xmax), 0.5 * (ymin + ymax));
    double best = -1e300;
    double wx = xmax - xmin, wy = ymax - ymin;
    complexd center = best_p;
    const int grid = 24;
    for (int level = 0; level < 40; ++level) {
        for (int i = 0; i <= grid; ++i) {
            for (int j = 0; j <= grid; ++j) {
                const complexd p(center.real() - 0.5 * wx + wx * i / grid,
                                 center.imag() - 0.5 * wy + wy * j / grid);
                if (!contains(p)) continue;
                const double dist = distance_to_boundary(*this, p);
                if (dist > best) { best = dist; best_p = p; }
            }
        }
        center = best_p;
        wx *= 0.4; wy *= 0.4;
        if (std::max(wx, wy) < 1e-6 * best) break;
    }
    cached_rho_ = best;
    return best;
}

std::string DomainDescriptor::name() const {
    switch (kind_) {
        case DomainKind::disc: return "disc";
        case DomainKind::ellipse: return "ellipse";
        case DomainKind::petal: return "petal";
        case DomainKind::polygon: return "polygon";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Maps

QCMapDescriptor QCMapDescriptor::identity() {
    QCMapDescriptor m;
    m.kind_ = MapKind::identity;
    return m;
}

QCMapDescriptor QCMapDescriptor::spiral() {
    QCMapDescriptor m;
    m.kind_ = MapKind::spiral;
    m.field_ = beltrami::CoefficientField::spiral();
    return m;
}

QCMapDescriptor QCMapDescriptor::ellipse_affine(double a) {
    QCMapDescriptor m;
    m.kind_ = MapKind::ellipse_affine;
    m.param_ = a;
    m.source_ = DomainDescriptor::ellipse(a);
    m.field_ = beltrami::CoefficientField::ellipse_affine(a);
    return m;
}

QCMapDescriptor QCMapDescriptor::petal_map() {
    QCMapDescriptor m;
    m.kind_ = MapKind::petal_map;
    m.source_ = DomainDescriptor::petal();
    m.field_ = beltrami::CoefficientField::petal();
    return m;
}

complexd QCMapDescriptor::eval(complexd z) const {
    if (!source_.contains(z, 1e-9))
        throw std::domain_error("map_eval: point outside the source domain");
    switch (kind_) {
        case MapKind::identity:
            return z;
        case MapKind::spiral: {
            const double r = std::abs(z);
            if (r == 0.0) return {0.0, 0.0};
            return z * std::polar(1.0, 2.0 * std::log(r));
        }
        case MapKind::ellipse_affine: {
            const double c = std::sqrt(param_ * param_ + 1.0);
            return {(c - param_) * z.real(), (c + param_) * z.imag()};
        }
        case MapKind::petal_map: {
            // phi + 1 = (|z|/sqrt(2)) e^{2 i theta}, principal branch
            const double r = std::abs(z);
            if (r == 0.0) return {-1.0, 0.0};
            const double th = std::atan2(z.imag(), z.real());
            return std::polar(r / std::sqrt(2.0), 2.0 * th) - complexd(1.0, 0.0);
        }
    }
    throw std::logic_error("eval: bad kind");
}

complexd QCMapDescriptor::inverse(complexd w) const {
    switch (kind_) {
        case MapKind::identity:
            return w;
        case MapKind::spiral: {
            const double r = std::abs(w);
            if (r == 0.0) return {0.0, 0.0};
            return w * std::polar(1.0, -2.0 * std::log(r));
        }
        case MapKind::ellipse_affine: {
            const double c = std::sqrt(param_ * param_ + 1.0);
            return {(c + param_) * w.real(), (c - param_) * w.imag()};
        }
        case MapKind::petal_map: {
            const complexd s = w + complexd(1.0, 0.0);
            const double R = std::abs(s);
            if (R == 0.0) return {0.0, 0.0};
            return std::polar(std::sqrt(2.0) * R, 0.5 * std::atan2(s.imag(), s.real()));
        }
    }
    throw std::logic_error("inverse: bad kind");
}

void QCMapDescriptor::wirtinger(complexd z, complexd& fz, complexd& fzb) const {
    switch (kind_) {
        case MapKind::identity:
            fz = 1.0; fzb = 0.0;
            return;
        case MapKind::spiral: {
            if (std::abs(z) < beltrami::kSingularRadius)
                throw SingularPointError("spiral map: singular at the origin");
            const complexd e = std::polar(1.0, 2.0 * std::log(std::abs(z)));
            fz = e * complexd(1.0, 1.0);
            fzb = complexd(0.0, 1.0) * e * z / std::conj(z);
            return;
        }
        case MapKind::ellipse_affine: {
            const double c = std::sqrt(param_ * param_ + 1.0);
            fz = c; fzb = -param_;
            return;
        }
        case MapKind::petal_map: {
            if (std::abs(z) < beltrami::kSingularRadius)
                throw SingularPointError("petal map: singular at the origin");
            const double th = std::atan2(z.imag(), z.real());
            const double s = 1.0 / (2.0 * std::sqrt(2.0));
            fz = std::polar(3.0 * s, th);
            fzb = -std::polar(s, 3.0 * th);
            return;
        }
    }
    throw std::logic_error("wirtinger: bad kind");
}

double QCMapDescriptor::jacobian(complexd z) const {
    complexd fz, fzb;
    wirtinger(z, fz, fzb);
    return std::norm(fz) - std::norm(fzb);
}

std::string QCMapDescriptor::name() const {
    switch (kind_) {
        case MapKind::identity: return "identity";
        case MapKind::spiral: return "spiral";
        case MapKind::ellipse_affine: return "ellipse_affine";
        case MapKind::petal_map: return "petal_map";
    }
    return "?";
}

double domain_area(const DomainDescriptor& d) { return d.area(); }
double domain_perimeter(const DomainDescriptor& d) { return d.perimeter(); }
double inscribed_radius(const DomainDescriptor& d) { return d.inscribed_radius(); }
complexd map_eval(const QCMapDescriptor& map, complexd z) { return map.eval(z); }
double map_jacobian(const QCMapDescriptor& map, complexd z) { return map.jacobian(z); }

// ---------------------------------------------------------------------------
// Test function catalog: radial, vanish on |w| = 1

int test_function_count() { return 3; }

TestFunction test_function(int id) {
    if (id < 0 || id >= test_function_count())
        throw std::invalid_argument("test_function: bad id");
    TestFunction f;
    f.id = id;
    f.name = id == 0 ? "bump2" : id == 1 ? "bump3" : "cosine";
    return f;
}

double TestFunction::value(complexd w) const {
    const double r2 = std::norm(w);
    switch (id) {
        case 0: { const double q = 1.0 - r2; return q * q; }
        case 1: { const double q = 1.0 - r2; return q * q * q; }
        default: return r2 >= 1.0 ? 0.0 : std::cos(0.5 * M_PI * r2);
    }
}

void TestFunction::gradient(complexd w, double& gx, double& gy) const {
    const double r2 = std::norm(w);
    double s;  // df/d(r^2)
    switch (id) {
        case 0: s = -2.0 * (1.0 - r2); break;
        case 1: s = -3.0 * (1.0 - r2) * (1.0 - r2); break;
        default: s = r2 >= 1.0 ? 0.0 : -0.5 * M_PI * std::sin(0.5 * M_PI * r2); break;
    }
    gx = 2.0 * s * w.real();
    gy = 2.0 * s * w.imag();
}

// ---------------------------------------------------------------------------
// Polar quadrature and the isometry check

double integrate_polar(const DomainDescriptor& d,
                       const std::function<double(complexd)>& g, int order) {
    double t0 = 0.0, t1 = 2.0 * M_PI;
    if (d.kind() == DomainKind::petal) { t0 = -kPetalTheta; t1 = kPetalTheta; }
    const auto& radial = quadrature::gauss_legendre(order);
    auto ring = [&](double theta) {
        const double R = d.polar_radius(theta);
        double s = 0.0;
        for (size_t i = 0; i < radial.nodes.size(); ++i) {
            const double r = 0.5 * R * (radial.nodes[i] + 1.0);
            s += radial.weights[i] * g(std::polar(r, theta)) * r;
        }
        return s * 0.5 * R;
    };
    if (d.kind() == DomainKind::petal)
        return quadrature::integrate_panels(ring, t0, t1, order, 8);
    // periodic in theta: equispaced trapezoid converges spectrally
    const int m = 4 * order;
    double s = 0.0;
    for (int j = 0; j < m; ++j) s += ring(t0 + (t1 - t0) * j / m);
    return s * (t1 - t0) / m;
}

IsometryResult isometry_check(const QCMapDescriptor& map, int test_fn_id, int quad_order) {
    const TestFunction f = test_function(test_fn_id);
    const auto& field = map.coefficient_field();

    auto lhs_integrand = [&](complexd z) {
        complexd fz, fzb;
        map.wirtinger(z, fz, fzb);
        const complexd phix = fz + fzb;
        const complexd phiy = complexd(0.0, 1.0) * (fz - fzb);
        double gx, gy;
        f.gradient(map.eval(z), gx, gy);
        // grad(f o phi) = Dphi^T grad f
        const double hx = phix.real() * gx + phix.imag() * gy;
        const double hy = phiy.real() * gx + phiy.imag() * gy;
        const auto A = field.eval(z);
        return A.a11 * hx * hx + 2.0 * A.a12 * hx * hy + A.a22 * hy * hy;
    };
    auto rhs_integrand = [&](complexd w) {
        double gx, gy;
        f.gradient(w, gx, gy);
        return gx * gx + gy * gy;
    };

    IsometryResult r;
    r.lhs = std::sqrt(integrate_polar(map.source_domain(), lhs_integrand, quad_order));
    r.rhs = std::sqrt(integrate_polar(DomainDescriptor::disc(), rhs_integrand, quad_order));
    return r;
}

}  // namespace qcspec::geometry
