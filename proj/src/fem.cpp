#include "qcspec/fem.hpp"

#include <Eigen/SparseCholesky>
#include <cmath>
#include <sstream>

namespace qcspec::fem {

using beltrami::CoefficientField;
using beltrami::CoefficientMatrix;

AssembledSystem assemble(const Mesh& mesh, const CoefficientField& A) {
    const int nv = static_cast<int>(mesh.vertices.size());
    AssembledSystem sys;
    sys.dof_of_vertex.assign(nv, -1);
    int ndof = 0;
    for (int v = 0; v < nv; ++v)
        if (!mesh.boundary[v]) sys.dof_of_vertex[v] = ndof++;
    if (ndof == 0) throw AssemblyError("assemble: no interior vertices");

    // interior barycentric points (2/3, 1/6, 1/6), degree-2 exact
    static const double bary[3][3] = {
        {2.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0},
        {1.0 / 6.0, 2.0 / 3.0, 1.0 / 6.0},
        {1.0 / 6.0, 1.0 / 6.0, 2.0 / 3.0}};

    std::vector<Eigen::Triplet<double>> st, mt;
    st.reserve(mesh.triangles.size() * 9);
    mt.reserve(mesh.triangles.size() * 9);

    for (size_t t = 0; t < mesh.triangles.size(); ++t) {
        const auto& tr = mesh.triangles[t];
        const complexd p[3] = {mesh.vertices[tr[0]], mesh.vertices[tr[1]], mesh.vertices[tr[2]]};
        const double area = mesh.triangle_area(static_cast<int>(t));
        // grad of barycentric coordinate i: rotate the opposite edge
        double gx[3], gy[3];
        for (int i = 0; i < 3; ++i) {
            const complexd e = p[(i + 2) % 3] - p[(i + 1) % 3];
            gx[i] = -e.imag() / (2.0 * area);
            gy[i] = e.real() / (2.0 * area);
        }
        double S[3][3] = {};
        for (int q = 0; q < 3; ++q) {
            complexd x = bary[q][0] * p[0] + bary[q][1] * p[1] + bary[q][2] * p[2];
            CoefficientMatrix Aq;
            try {
                Aq = A.eval(x);
            } catch (const SingularPointError&) {
                // nudge off the measure-zero singular set
                x += complexd(1e-12 * mesh.h, 1e-12 * mesh.h);
                try {
                    Aq = A.eval(x);
                } catch (const std::exception& e2) {
                    std::ostringstream os;
                    os << "assemble: coefficient failed at (" << x.real() << ", " << x.imag()
                       << "): " << e2.what();
                    throw AssemblyError(os.str());
                }
            }
            const double w = area / 3.0;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    S[i][j] += w * (Aq.a11 * gx[i] * gx[j] + Aq.a22 * gy[i] * gy[j] +
                                    Aq.a12 * (gx[i] * gy[j] + gy[i] * gx[j]));
        }
        for (int i = 0; i < 3; ++i) {
            const int di = sys.dof_of_vertex[tr[i]];
            if (di < 0) continue;
            for (int j = 0; j < 3; ++j) {
                const int dj = sys.dof_of_vertex[tr[j]];
                if (dj < 0) continue;
                st.emplace_back(di, dj, S[i][j]);
                mt.emplace_back(di, dj, area / 12.0 * (i == j ? 2.0 : 1.0));
            }
        }
    }
    sys.stiffness.resize(ndof, ndof);
    sys.mass.resize(ndof, ndof);
    sys.stiffness.setFromTriplets(st.begin(), st.end());
    sys.mass.setFromTriplets(mt.begin(), mt.end());
    return sys;
}

EigenSolveResult solve_smallest(const AssembledSystem& sys, int k) {
    const int n = static_cast<int>(sys.stiffness.rows());
    if (k < 1) throw SolverError("solve_smallest: k < 1");
    if (k > n) throw SolverError("solve_smallest: k exceeds the interior dof count");

    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt(sys.stiffness);
    if (ldlt.info() != Eigen::Success)
        throw SolverError("solve_smallest: stiffness factorization failed");

    const int block = std::min(n, k + 3);
    // deterministic start block (fixed LCG)
    Eigen::MatrixXd X(n, block);
    unsigned long long state = 0x2545F4914F6CDD1Dull;
    for (int j = 0; j < block; ++j)
        for (int i = 0; i < n; ++i) {
            state = state * 6364136223846793005ull + 1442695040888963407ull;
            X(i, j) = static_cast<double>(state >> 11) / 9007199254740992.0 - 0.5;
        }

    std::vector<double> prev(k, 0.0);
    EigenSolveResult out;
    const int max_iter = 10000;
    int it = 0;
    for (; it < max_iter; ++it) {
        X = ldlt.solve(sys.mass * X);
        // M-orthonormalize (modified Gram-Schmidt)
        for (int j = 0; j < block; ++j) {
            for (int l = 0; l < j; ++l) {
                const double c = X.col(l).dot(sys.mass * X.col(j));
                X.col(j) -= c * X.col(l);
            }
            const double nrm = std::sqrt(X.col(j).dot(sys.mass * X.col(j)));
            if (!(nrm > 0.0)) throw SolverError("solve_smallest: block collapsed");
            X.col(j) /= nrm;
        }
        // Rayleigh-Ritz on the block
        const Eigen::MatrixXd Sr = X.transpose() * (sys.stiffness * X);
        const Eigen::MatrixXd Mr = X.transpose() * (sys.mass * X);
        Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> ges(Sr, Mr);
        if (ges.info() != Eigen::Success)
            throw SolverError("solve_smallest: Rayleigh-Ritz failed");
        X = X * ges.eigenvectors();
        bool converged = true;
        for (int j = 0; j < k; ++j) {
            const double lam = ges.eigenvalues()(j);
            if (std::abs(lam - prev[j]) > 1e-10 * std::abs(lam)) converged = false;
            prev[j] = lam;
        }
        if (converged && it > 0) break;
    }
    if (it == max_iter)
        throw SolverError("solve_smallest: no convergence in 10000 iterations");

    out.iterations = it + 1;
    out.eigenvalues.assign(prev.begin(), prev.end());
    out.eigenvectors = X.leftCols(k);
    // sign convention: nonnegative mean; unit M-norm holds by construction
    for (int j = 0; j < k; ++j)
        if (out.eigenvectors.col(j).sum() < 0.0) out.eigenvectors.col(j) *= -1.0;
    return out;
}

EigenResult solve_on_domain(const geometry::DomainDescriptor& d, const CoefficientField& A,
                            int refinements, double target_h, int eigen_count) {
    if (refinements < 2) throw SolverError("solve_on_domain: refinements < 2");
    EigenResult res;
    double h = target_h;
    for (int l = 0; l < refinements; ++l, h *= 0.5) {
        const Mesh mesh = mesh_domain(d, h);
        const AssembledSystem sys = assemble(mesh, A);
        const EigenSolveResult sol = solve_smallest(sys, eigen_count);
        res.levels.push_back({mesh.h, sol.eigenvalues.front()});
        if (l == refinements - 1) {
            res.eigenvalues = sol.eigenvalues;
            res.mesh_h = mesh.h;
            res.iterations = sol.iterations;
        }
    }
    const size_t L = res.levels.size();
    const double lf = res.levels[L - 1].lambda1;
    const double lc = res.levels[L - 2].lambda1;
    // Richardson at the P1 rate h^2 (mesh halving: factor 3)
    res.extrapolated = lf + (lf - lc) / 3.0;
    res.error_estimate = std::abs(lf - res.extrapolated);
    if (L >= 3) {
        // widen the estimate when the observed rate deviates from 2
        const double dc = res.levels[L - 3].lambda1 - lc;
        const double df = lc - lf;
        if (df > 0.0 && dc > 0.0) {
            const double rate = dc / df;  // ~4 for O(h^2)
            if (rate > 1.05) {
                const double extrap_obs = lf + df / (rate - 1.0);
                res.error_estimate =
                    std::max(res.error_estimate, std::abs(res.extrapolated - extrap_obs));
            }
        }
    }
    return res;
}

JacobianNorms jacobian_norms_field(const std::function<double(complexd)>& jac_inv,
                                   double beta, int quad_order) {
    if (!(beta >= 1.0)) throw SolverError("jacobian_norms: beta < 1");
    const auto disc = geometry::DomainDescriptor::disc();
    const double pw = geometry::integrate_polar(
        disc, [&](complexd w) { return std::pow(std::abs(jac_inv(w)), beta); }, quad_order);
    const double dev = geometry::integrate_polar(
        disc,
        [&](complexd w) {
            const double s = 1.0 - std::sqrt(std::abs(jac_inv(w)));
            return s * s;
        },
        quad_order);
    return {std::pow(pw, 1.0 / beta), std::sqrt(dev)};
}

JacobianNorms jacobian_norms(const geometry::QCMapDescriptor& map, double beta) {
    // |J(w, phi^-1)| = |J(z, phi)|^-1 at z = phi^-1(w)
    return jacobian_norms_field(
        [&](complexd w) { return 1.0 / map.jacobian(map.inverse(w)); }, beta);
}

}  // namespace qcspec::fem
