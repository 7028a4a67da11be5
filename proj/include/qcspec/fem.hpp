#pragma once

// P1 finite elements for the first Dirichlet eigenvalues of -div(A grad f),
// shift-invert subspace iteration on the assembled pencil, and quadrature for
// the Jacobian norms that feed the analytic bounds.

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <functional>

#include "qcspec/mesh.hpp"

namespace qcspec::fem {

struct AssemblyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AssembledSystem {
    Eigen::SparseMatrix<double> stiffness;  // interior dofs, SPD
    Eigen::SparseMatrix<double> mass;       // interior dofs, SPD
    std::vector<int> dof_of_vertex;         // -1 for boundary vertices
};

/// Stiffness by the 3-point interior barycentric rule (degree-2 exact),
/// mass exact for P1; Dirichlet rows/columns eliminated.
AssembledSystem assemble(const Mesh& mesh, const beltrami::CoefficientField& A);

struct EigenSolveResult {
    std::vector<double> eigenvalues;  // ascending
    Eigen::MatrixXd eigenvectors;     // interior dofs x k, M-orthonormal;
                                      // first column has nonnegative mean
    int iterations = 0;
};

/// k smallest generalized eigenvalues S x = lambda M x; factorize S once,
/// iterate M-orthogonalized solves, stop at 1e-10 relative change.
EigenSolveResult solve_smallest(const AssembledSystem& sys, int k);

struct MeshLevel {
    double h;
    double lambda1;
};

struct EigenResult {
    std::vector<double> eigenvalues;  // finest mesh, ascending
    double mesh_h = 0.0;
    double extrapolated = 0.0;
    double error_estimate = 0.0;
    int iterations = 0;
    std::vector<MeshLevel> levels;
};

/// Solves on nested meshes target_h / 2^l, l = 0..refinements-1, and
/// Richardson-extrapolates lambda1 at the P1 rate O(h^2).
EigenResult solve_on_domain(const geometry::DomainDescriptor& d,
                            const beltrami::CoefficientField& A, int refinements,
                            double target_h = 0.1, int eigen_count = 1);

struct JacobianNorms {
    double norm_beta;  // ||J_{phi^-1} | L^beta(D)||
    double dev_norm;   // ||1 - J_{phi^-1}^{1/2} | L^2(D)||
};

/// Both integrals over the unit disc by polar quadrature. For the built-in
/// maps |J(w, phi^-1)| = |J(z, phi)|^-1 = 1.
JacobianNorms jacobian_norms(const geometry::QCMapDescriptor& map, double beta);

/// Same for an arbitrary inverse-Jacobian field on the disc (test hook).
JacobianNorms jacobian_norms_field(const std::function<double(complexd)>& jac_inv,
                                   double beta, int quad_order = 64);

}  // namespace qcspec::fem
