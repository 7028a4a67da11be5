#pragma once

// Correspondence between symmetric det-1 coefficient matrices A and complex
// dilatations mu, the quasiconformality coefficient K, and the built-in
// coefficient fields used by the explicit maps.

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>

namespace qcspec {

using complexd = std::complex<double>;

struct EllipticityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidMatrixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SingularPointError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace beltrami {

/// Pointwise value of a symmetric matrix field with det = 1 (a21 == a12).
struct CoefficientMatrix {
    double a11 = 1.0;
    double a12 = 0.0;
    double a22 = 1.0;

    double det() const { return a11 * a22 - a12 * a12; }
    // eigenvalues of the symmetric 2x2 matrix, ascending
    void eigenvalues(double& lo, double& hi) const;
};

using Dilatation = complexd;

constexpr double kDetTolerance = 1e-10;
constexpr double kMuCap = 1.0 - 1e-12;   // |mu| >= this is rejected
constexpr double kSingularRadius = 1e-14;

// mu = (a22 - a11 - 2 i a12) / det(I + A). Throws InvalidMatrixError when
// det A deviates from 1 beyond tolerance, EllipticityError when |mu| >= 1.
Dilatation dilatation_from_matrix(const CoefficientMatrix& A);

// a11 = |1-mu|^2/(1-|mu|^2), a12 = -2 Im mu/(1-|mu|^2), a22 = |1+mu|^2/(1-|mu|^2).
CoefficientMatrix matrix_from_dilatation(Dilatation mu);

// K = (1 + mu_sup)/(1 - mu_sup), mu_sup in [0, 1).
double ellipticity_constant(double mu_sup);

enum class FieldKind { identity, spiral, ellipse_affine, petal, from_dilatation };

/// Matrix field A(z) evaluable pointwise; spiral/petal are undefined at the
/// origin (mu depends on z/conj(z)) and throw SingularPointError there.
class CoefficientField {
  public:
    static CoefficientField identity();
    static CoefficientField spiral();
    static CoefficientField ellipse_affine(double a);
    static CoefficientField petal();
    static CoefficientField from_dilatation(std::function<Dilatation(complexd)> mu,
                                            double mu_sup);

    CoefficientMatrix eval(complexd z) const;
    FieldKind kind() const { return kind_; }
    /// sup |mu| over the field; closed form for built-ins, supplied for custom.
    double mu_sup() const { return mu_sup_; }
    double K() const { return ellipticity_constant(mu_sup_); }
    /// affine parameter a (ellipse_affine only)
    double param() const { return param_; }
    bool has_singular_origin() const {
        return kind_ == FieldKind::spiral || kind_ == FieldKind::petal;
    }
    std::string name() const;

  private:
    CoefficientField() = default;
    FieldKind kind_ = FieldKind::identity;
    double mu_sup_ = 0.0;
    double param_ = 0.0;
    std::function<Dilatation(complexd)> mu_fn_;
};

struct ValidationReport {
    bool pass = true;
    int samples = 0;
    int failures = 0;
    double worst_det_error = 0.0;
    double worst_eig_violation = 0.0;  // how far outside [1/K, K], absolute
    double K = 1.0;
};

}  // namespace beltrami
}  // namespace qcspec
