// Command-line front end: coefficient/dilatation conversion, bound evaluation,
// FEM verification, constant tables, and mesh export.
//
// Exit codes: 0 success, 2 configuration/domain error, 3 numeric/convergence
// error.

#include <CLI11.hpp>
#include <Eigen/Core>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qcspec/constants.hpp"
#include "qcspec/report.hpp"
#include "qcspec/specfun.hpp"

namespace {

using namespace qcspec;
using report::CaseConfig;
using report::ConfigError;
using report::format_double;

void write_output(const std::string& text, const std::string& cli_path,
                  const CaseConfig& c) {
    const std::string path = !cli_path.empty() ? cli_path : c.output_path;
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file " + path);
    out << text;
}

int run_convert(const CLI::App& cmd, double a11, double a12, double a22,
                double mu_re, double mu_im) {
    const bool have_matrix =
        cmd.count("--a11") || cmd.count("--a12") || cmd.count("--a22");
    const bool have_mu = cmd.count("--mu-re") || cmd.count("--mu-im");
    if (have_matrix == have_mu)
        throw ConfigError("convert: give either --a11/--a12/--a22 or --mu-re/--mu-im");
    if (have_matrix) {
        const beltrami::CoefficientMatrix A{a11, a12, a22};
        const auto mu = beltrami::dilatation_from_matrix(A);
        std::cout << "mu = " << format_double(mu.real()) << " + "
                  << format_double(mu.imag()) << "i\n"
                  << "|mu| = " << format_double(std::abs(mu)) << "\n"
                  << "K = " << format_double(beltrami::ellipticity_constant(std::abs(mu)))
                  << "\n";
    } else {
        const auto A = beltrami::matrix_from_dilatation({mu_re, mu_im});
        const double mu_abs = std::abs(complexd{mu_re, mu_im});
        std::cout << "A = [[" << format_double(A.a11) << ", " << format_double(A.a12)
                  << "], [" << format_double(A.a12) << ", " << format_double(A.a22)
                  << "]]\n"
                  << "det = " << format_double(A.det()) << "\n"
                  << "K = " << format_double(beltrami::ellipticity_constant(mu_abs))
                  << "\n";
    }
    return 0;
}

int run_report(const std::string& config_path, const std::string& output_path,
               const std::string& format, long seed, bool with_fem) {
    if (config_path.empty()) throw ConfigError("missing --config");
    CaseConfig c = report::load_config(config_path);
    if (!format.empty()) c.output_format = format;
    c.seed = seed;
    if (with_fem && !c.fem.present)
        throw ConfigError("verify needs a fem block in the config");
    const auto r = report::run_case(c, with_fem);
    const std::string text =
        c.output_format == "csv" ? report::to_csv_text(r) : report::to_json_text(r, c);
    write_output(text, output_path, c);
    if (!r.error.empty()) {
        std::cerr << "fem stage failed: " << r.error << "\n";
        return 3;
    }
    return 0;
}

int run_constants(const CLI::App& cmd, double r, double beta, double K, double area) {
    bool printed = false;
    if (cmd.count("--r")) {
        const auto d = constants::poincare_constant_upper_detail({r, area});
        std::cout << "B_{" << format_double(r) << ",2} <= " << format_double(d.value)
                  << "  (p = " << format_double(d.minimizer) << ")\n";
        if (r == 2.0) {
            const double inv_j = 1.0 / specfun::bessel_j0_first_zero().value;
            std::cout << "exact B_{2,2}(disc) = 1/j01 = " << format_double(inv_j)
                      << "  gap = " << format_double(d.value - inv_j) << "\n";
        }
        printed = true;
    }
    if (cmd.count("--beta")) {
        if (!(beta > 1.0)) throw ConfigError("constants: beta must exceed 1");
        const double rb = 4.0 * beta / (beta - 1.0);
        const auto d = constants::poincare_constant_upper_detail({rb, area});
        std::cout << "A_{" << format_double(rb) << ",2} <= " << format_double(d.value)
                  << "  (p = " << format_double(d.minimizer) << ")\n";
        if (cmd.count("--K")) {
            std::cout << "log10 nu(beta) = " << format_double(constants::nu(beta, K).log10)
                      << "\n";
            const double bt = constants::beta_tilde(K);
            if (beta < bt)
                std::cout << "log10 C_beta = "
                          << format_double(constants::c_beta(beta, K).log10) << "\n";
        }
        printed = true;
    }
    if (cmd.count("--K") && !cmd.count("--beta")) {
        if (!(K > 1.0))
            throw ConfigError(
                "constants: K/(K-1) is undefined at K = 1; the quasidisc "
                "constants need K > 1");
        const double bt_excess = constants::beta_tilde_excess(K);
        std::cout << "beta~ - 1 = " << format_double(bt_excess) << "\n"
                  << "beta* - 1 = " << format_double(constants::beta_star_excess(K))
                  << "\n";
        const auto m = constants::m_beta({K, area});
        std::cout << "log10 M_beta(K) = " << format_double(m.value.log10)
                  << "  (beta - 1 = " << format_double(m.beta_excess)
                  << ", 2 - p = " << format_double(m.p_excess) << ")\n";
        printed = true;
    }
    if (!printed)
        throw ConfigError("constants: give --r, --beta, or --K");
    return 0;
}

int run_mesh(const std::string& config_path, const std::string& output_path) {
    if (config_path.empty()) throw ConfigError("missing --config");
    const CaseConfig c = report::load_config(config_path);
    const double h = c.fem.present ? c.fem.target_h : 0.1;
    const auto mesh = fem::mesh_domain(c.domain, h);
    std::ostringstream os;
    mesh.export_text(os);
    write_output(os.str(), output_path, c);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Eigenvalue bounds and FEM verification for divergence-form elliptic "
        "operators on planar domains"};
    app.require_subcommand(1);

    std::string config_path, output_path, format;
    int threads = 1;
    long seed = 0;
    app.add_option("--config", config_path, "case configuration JSON file");
    app.add_option("--output", output_path, "output file (default: stdout)");
    app.add_option("--format", format, "report format")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--threads", threads, "thread count")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "seed for sampling-based validators");

    auto* convert = app.add_subcommand("convert", "matrix <-> dilatation conversion");
    double a11 = 1.0, a12 = 0.0, a22 = 1.0, mu_re = 0.0, mu_im = 0.0;
    convert->add_option("--a11", a11, "matrix entry a11");
    convert->add_option("--a12", a12, "matrix entry a12");
    convert->add_option("--a22", a22, "matrix entry a22");
    convert->add_option("--mu-re", mu_re, "Re mu");
    convert->add_option("--mu-im", mu_im, "Im mu");

    app.add_subcommand("bounds", "evaluate the requested bounds");
    app.add_subcommand("verify", "bounds + FEM verification with verdicts");

    auto* consts = app.add_subcommand("constants", "print constant tables");
    double opt_r = 2.0, opt_beta = 2.0, opt_K = 1.5, opt_area = M_PI;
    consts->add_option("--r", opt_r, "Sobolev exponent r >= 2");
    consts->add_option("--beta", opt_beta, "regularity exponent beta > 1");
    consts->add_option("--K", opt_K, "quasiconformality coefficient");
    consts->add_option("--area", opt_area, "domain area (default pi)");

    app.add_subcommand("mesh", "export the triangulation of the config's domain");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Eigen::setNbThreads(threads);
    try {
        if (convert->parsed())
            return run_convert(*convert, a11, a12, a22, mu_re, mu_im);
        if (app.get_subcommand("bounds")->parsed())
            return run_report(config_path, output_path, format, seed, false);
        if (app.get_subcommand("verify")->parsed())
            return run_report(config_path, output_path, format, seed, true);
        if (consts->parsed()) return run_constants(*consts, opt_r, opt_beta, opt_K, opt_area);
        if (app.get_subcommand("mesh")->parsed()) return run_mesh(config_path, output_path);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidMatrixError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const EllipticityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
