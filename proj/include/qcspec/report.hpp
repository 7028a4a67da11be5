#pragma once

// Case configuration, report assembly, verdicts, and deterministic JSON/CSV
// serialization for the command-line front end.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcspec/bounds.hpp"
#include "qcspec/fem.hpp"

namespace qcspec::report {

inline constexpr const char* kToolVersion = "1.0.0";

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FemConfig {
    bool present = false;
    int refinements = 3;
    double target_h = 0.1;
    int eigen_count = 1;
};

struct CaseConfig {
    std::string case_id = "case";
    geometry::DomainDescriptor domain = geometry::DomainDescriptor::disc();
    beltrami::CoefficientField coefficient = beltrami::CoefficientField::identity();
    /// Set for builtin coefficients; needed by the map-dependent bounds.
    std::optional<geometry::QCMapDescriptor> map;
    /// Set when the coefficient was given as a constant dilatation.
    std::optional<complexd> mu_constant;
    std::vector<std::string> bounds_requested;
    FemConfig fem;
    double beta = 2.0;
    std::optional<double> alpha_makai;
    std::string output_path;  // empty: stdout
    std::string output_format = "json";
    long seed = 0;
};

/// Parses and validates a CaseConfig document. Unknown keys anywhere in the
/// document are rejected with a ConfigError naming the key.
CaseConfig parse_config(const nlohmann::json& j);
CaseConfig load_config(const std::string& path);

/// Canonical form of the semantic fields (everything that affects results;
/// output path/format excluded), with fixed key order.
nlohmann::ordered_json canonical_config(const CaseConfig& c);
/// FNV-1a 64 over the canonical serialization, as 16 lowercase hex digits.
std::string config_hash(const CaseConfig& c);

struct Verdict {
    std::string inequality;
    bool holds = false;
    double margin = 0.0;  // signed; positive = satisfied with slack
    double tolerance = 0.0;
};

struct VerificationReport {
    std::string case_id;
    std::vector<bounds::BoundResult> bounds;
    std::optional<fem::EigenResult> fem;
    std::optional<beltrami::ValidationReport> validation;
    std::vector<Verdict> verdicts;
    std::string config_hash;
    std::string error;  // nonempty when the FEM stage failed (partial report)
};

/// Evaluates the requested bounds (and FEM + field validation when with_fem)
/// and fills the verdicts. Lower bounds are compared exactly against the
/// finest-mesh eigenvalue; upper bounds against the extrapolated eigenvalue
/// with tolerance 3 * error_estimate / lambda.
VerificationReport run_case(const CaseConfig& c, bool with_fem);

/// Fixed field order; every float rendered with format_double. Identical
/// configs produce byte-identical output.
std::string to_json_text(const VerificationReport& r, const CaseConfig& c);
/// Convergence table: header h,lambda1,extrapolated,error_estimate, one row
/// per mesh level, then a summary row carrying the extrapolation.
std::string to_csv_text(const VerificationReport& r);

/// 12-significant-digit formatting ("%.12g", negative zero normalized).
std::string format_double(double v);

/// Serializes an ordered_json tree with format_double applied to every float.
std::string dump_deterministic(const nlohmann::ordered_json& j, int indent = 2);

}  // namespace qcspec::report
