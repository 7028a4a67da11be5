#include "qcspec/beltrami.hpp"

#include <cmath>

#include "qcspec/geometry.hpp"
#include "qcspec/quadrature.hpp"

namespace qcspec::beltrami {

void CoefficientMatrix::eigenvalues(double& lo, double& hi) const {
    const double tr = a11 + a22;
    const double disc = std::sqrt(std::max(0.0, 0.25 * tr * tr - det()));
    lo = 0.5 * tr - disc;
    hi = 0.5 * tr + disc;
}

Dilatation dilatation_from_matrix(const CoefficientMatrix& A) {
    if (std::abs(A.det() - 1.0) > kDetTolerance)
        throw InvalidMatrixError("dilatation_from_matrix: det A != 1");
    if (A.a11 <= 0.0)
        throw InvalidMatrixError("dilatation_from_matrix: a11 <= 0");
    const double d = (1.0 + A.a11) * (1.0 + A.a22) - A.a12 * A.a12;
    const Dilatation mu(( A.a22 - A.a11) / d, -2.0 * A.a12 / d);
    if (std::abs(mu) >= kMuCap)
        throw EllipticityError("dilatation_from_matrix: |mu| >= 1");
    return mu;
}

CoefficientMatrix matrix_from_dilatation(Dilatation mu) {
    const double m2 = std::norm(mu);
    if (m2 >= kMuCap * kMuCap)
        throw EllipticityError("matrix_from_dilatation: |mu| >= 1");
    const double d = 1.0 - m2;
    CoefficientMatrix A;
    A.a11 = std::norm(1.0 - mu) / d;
    A.a12 = -2.0 * mu.imag() / d;
    A.a22 = std::norm(1.0 + mu) / d;
    return A;
}

double ellipticity_constant(double mu_sup) {
    if (mu_sup < 0.0 || mu_sup >= 1.0)
        throw EllipticityError("ellipticity_constant: mu_sup outside [0, 1)");
    return (1.0 + mu_sup) / (1.0 - mu_sup);
}

CoefficientField CoefficientField::identity() {
    return CoefficientField{};
}

CoefficientField CoefficientField::spiral() {
    CoefficientField f;
    f.kind_ = FieldKind::spiral;
    f.mu_sup_ = std::sqrt(0.5);
    return f;
}

CoefficientField CoefficientField::ellipse_affine(double a) {
    if (a < 0.0) throw std::invalid_argument("ellipse_affine: a < 0");
    CoefficientField f;
    f.kind_ = FieldKind::ellipse_affine;
    f.param_ = a;
    f.mu_sup_ = a / std::sqrt(a * a + 1.0);
    return f;
}

CoefficientField CoefficientField::petal() {
    CoefficientField f;
    f.kind_ = FieldKind::petal;
    f.mu_sup_ = 1.0 / 3.0;
    return f;
}

CoefficientField CoefficientField::from_dilatation(std::function<Dilatation(complexd)> mu,
                                                   double mu_sup) {
    if (mu_sup >= kMuCap)
        throw EllipticityError("from_dilatation: mu_sup >= 1");
    CoefficientField f;
    f.kind_ = FieldKind::from_dilatation;
    f.mu_sup_ = mu_sup;
    f.mu_fn_ = std::move(mu);
    return f;
}

CoefficientMatrix CoefficientField::eval(complexd z) const {
    switch (kind_) {
        case FieldKind::identity:
            return CoefficientMatrix{};
        case FieldKind::spiral: {
            if (std::abs(z) < kSingularRadius)
                throw SingularPointError("spiral field: undefined at the origin");
            const Dilatation mu = 0.5 * complexd(1.0, 1.0) * z / std::conj(z);
            return matrix_from_dilatation(mu);
        }
        case FieldKind::ellipse_affine: {
            const double c = std::sqrt(param_ * param_ + 1.0);
            CoefficientMatrix A;
            A.a11 = (c + param_) * (c + param_);
            A.a12 = 0.0;
            A.a22 = (c - param_) * (c - param_);
            return A;
        }
        case FieldKind::petal: {
            if (std::abs(z) < kSingularRadius)
                throw SingularPointError("petal field: undefined at the origin");
            const Dilatation mu = -(1.0 / 3.0) * z / std::conj(z);
            return matrix_from_dilatation(mu);
        }
        case FieldKind::from_dilatation:
            return matrix_from_dilatation(mu_fn_(z));
    }
    throw std::logic_error("CoefficientField: bad kind");
}

std::string CoefficientField::name() const {
    switch (kind_) {
        case FieldKind::identity: return "identity";
        case FieldKind::spiral: return "spiral";
        case FieldKind::ellipse_affine: return "ellipse_affine";
        case FieldKind::petal: return "petal";
        case FieldKind::from_dilatation: return "from_dilatation";
    }
    return "?";
}

ValidationReport validate_field(const CoefficientField& A,
                                const geometry::DomainDescriptor& domain,
                                int samples, long seed) {
    if (samples < 1) throw std::invalid_argument("validate_field: samples < 1");
    ValidationReport rep;
    rep.K = A.K();
    const double lo_bound = 1.0 / rep.K, hi_bound = rep.K;
    // bounding box of the domain via boundary sampling
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (int i = 0; i < 512; ++i) {
        const complexd b = domain.boundary_point(i / 512.0);
        xmin = std::min(xmin, b.real());
        xmax = std::max(xmax, b.real());
        ymin = std::min(ymin, b.imag());
        ymax = std::max(ymax, b.imag());
    }
    long index = seed;
    int accepted = 0;
    const double eig_tol = 1e-9;
    while (accepted < samples) {
        double u, v;
        quadrature::halton2(index++, u, v);
        const complexd z(xmin + u * (xmax - xmin), ymin + v * (ymax - ymin));
        if (!domain.contains(z)) continue;
        if (A.has_singular_origin() && std::abs(z) < 1e-12) continue;
        ++accepted;
        CoefficientMatrix M;
        try {
            M = A.eval(z);
        } catch (const std::exception&) {
            ++rep.failures;
            continue;
        }
        const double det_err = std::abs(M.det() - 1.0);
        rep.worst_det_error = std::max(rep.worst_det_error, det_err);
        double lo, hi;
        M.eigenvalues(lo, hi);
        const double viol = std::max({0.0, lo_bound - lo, hi - hi_bound});
        rep.worst_eig_violation = std::max(rep.worst_eig_violation, viol);
        if (det_err > kDetTolerance || viol > eig_tol) ++rep.failures;
    }
    rep.samples = accepted;
    rep.pass = rep.failures == 0;
    return rep;
}

}  // namespace qcspec::beltrami
