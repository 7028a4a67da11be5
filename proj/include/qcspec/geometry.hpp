#pragma once

// Planar domains (disc, ellipse, rose petal, polygon) with area, perimeter
// and inscribed radius, plus the explicit volume-preserving quasiconformal
// maps onto the unit disc and their coefficient fields.

#include <string>
#include <vector>

#include "qcspec/beltrami.hpp"

namespace qcspec::geometry {

enum class DomainKind { disc, ellipse, petal, polygon };

class DomainDescriptor {
  public:
    static DomainDescriptor disc(double radius = 1.0);
    /// Semi-axes sqrt(a^2+1)+a and sqrt(a^2+1)-a; area pi for every a >= 0.
    static DomainDescriptor ellipse(double a);
    /// rho(theta) = 2 sqrt(2) cos(2 theta), theta in [-pi/4, pi/4]; area pi.
    static DomainDescriptor petal();
    static DomainDescriptor polygon(std::vector<complexd> vertices);
    static DomainDescriptor unit_square();

    DomainKind kind() const { return kind_; }
    double area() const;
    double perimeter() const;
    double inscribed_radius() const;

    bool contains(complexd z, double tol = 0.0) const;
    /// Boundary point at arc parameter t in [0, 1).
    complexd boundary_point(double t) const;
    /// Star-shaped polar radius about the origin (disc/ellipse/petal only).
    double polar_radius(double theta) const;

    double radius() const { return radius_; }
    double param() const { return param_; }
    const std::vector<complexd>& vertices() const { return vertices_; }
    std::string name() const;

  private:
    DomainDescriptor() = default;
    DomainKind kind_ = DomainKind::disc;
    double radius_ = 1.0;  // disc only
    double param_ = 0.0;   // ellipse parameter a
    std::vector<complexd> vertices_;
    mutable double cached_rho_ = -1.0;
};

enum class MapKind { identity, spiral, ellipse_affine, petal_map };

/// One of the explicit A-quasiconformal maps source domain -> unit disc.
/// All have |J(z, phi)| = 1 at every regular point.
class QCMapDescriptor {
  public:
    static QCMapDescriptor identity();
    /// phi(z) = z exp(2 i log|z|), disc -> disc, phi(0) = 0.
    static QCMapDescriptor spiral();
    /// phi(z) = sqrt(a^2+1) z - a conj(z), ellipse -> disc.
    static QCMapDescriptor ellipse_affine(double a);
    /// phi(z) = z^{3/2} / (sqrt(2) conj(z)^{1/2}) - 1, petal -> disc, phi(0) = -1.
    static QCMapDescriptor petal_map();

    complexd eval(complexd z) const;
    complexd inverse(complexd w) const;
    /// |phi_z|^2 - |phi_zbar|^2; throws SingularPointError at singular points.
    double jacobian(complexd z) const;
    /// Wirtinger derivatives phi_z, phi_zbar at a regular point.
    void wirtinger(complexd z, complexd& fz, complexd& fzb) const;

    MapKind kind() const { return kind_; }
    double K() const { return field_.K(); }
    const beltrami::CoefficientField& coefficient_field() const { return field_; }
    const DomainDescriptor& source_domain() const { return source_; }
    std::string name() const;

  private:
    QCMapDescriptor() = default;
    MapKind kind_ = MapKind::identity;
    double param_ = 0.0;
    DomainDescriptor source_ = DomainDescriptor::disc();
    beltrami::CoefficientField field_ = beltrami::CoefficientField::identity();
};

// Free-function spellings used by the CLI and the bounds layer.
double domain_area(const DomainDescriptor& d);
double domain_perimeter(const DomainDescriptor& d);
double inscribed_radius(const DomainDescriptor& d);
complexd map_eval(const QCMapDescriptor& map, complexd z);
double map_jacobian(const QCMapDescriptor& map, complexd z);

// Catalog of smooth radial test functions on the unit disc vanishing on the
// boundary, with closed-form gradients. Ids 0..count-1.
struct TestFunction {
    std::string name;
    double value(complexd w) const;
    void gradient(complexd w, double& gx, double& gy) const;
    int id = 0;
};
int test_function_count();
TestFunction test_function(int id);

struct IsometryResult {
    double lhs;  // A-weighted Dirichlet seminorm of f o phi over the source
    double rhs;  // Dirichlet seminorm of f over the disc
};

/// Checks the Sobolev-seminorm isometry induced by the map's composition rule.
IsometryResult isometry_check(const QCMapDescriptor& map, int test_fn_id,
                              int quad_order = 48);

/// Integrate g over the domain by polar quadrature (star-shaped about 0).
double integrate_polar(const DomainDescriptor& d,
                       const std::function<double(complexd)>& g, int order = 48);

}  // namespace qcspec::geometry

namespace qcspec::beltrami {

/// Samples quasi-random points of the domain, checks det = 1 and the
/// eigenvalue bounds [1/K, K] for the field's K. Failures are reported,
/// not thrown.
ValidationReport validate_field(const CoefficientField& A,
                                const geometry::DomainDescriptor& domain,
                                int samples, long seed = 0);

}  // namespace qcspec::beltrami
