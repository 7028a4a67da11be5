#include "qcspec/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "qcspec/constants.hpp"

namespace qcspec::report {

using geometry::DomainDescriptor;
using geometry::DomainKind;
using geometry::QCMapDescriptor;
using beltrami::CoefficientField;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

const std::set<std::string> kBoundNames = {
    "payne_weinberger", "rfk",   "makai",    "monotonicity",
    "sandwich",         "thm52", "quasidisc"};

void check_keys(const json& j, const std::set<std::string>& allowed,
                const std::string& where) {
    if (!j.is_object()) throw ConfigError("config: " + where + " must be an object");
    for (const auto& [key, value] : j.items())
        if (!allowed.count(key))
            throw ConfigError("config: unknown key \"" + key + "\" in " + where);
}

double need_number(const json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key))
        throw ConfigError("config: missing \"" + key + "\" in " + where);
    if (!j.at(key).is_number())
        throw ConfigError("config: \"" + key + "\" in " + where + " must be a number");
    return j.at(key).get<double>();
}

DomainDescriptor parse_domain(const json& j) {
    check_keys(j, {"kind", "radius", "a", "vertices"}, "domain");
    if (!j.contains("kind") || !j.at("kind").is_string())
        throw ConfigError("config: domain.kind must be a string");
    const std::string kind = j.at("kind").get<std::string>();
    auto forbid = [&](const char* key) {
        if (j.contains(key))
            throw ConfigError(std::string("config: domain key \"") + key +
                              "\" does not apply to kind " + kind);
    };
    if (kind == "disc") {
        forbid("a");
        forbid("vertices");
        const double radius = j.contains("radius") ? need_number(j, "radius", "domain") : 1.0;
        if (!(radius > 0.0)) throw ConfigError("config: domain.radius must be positive");
        return DomainDescriptor::disc(radius);
    }
    if (kind == "ellipse") {
        forbid("radius");
        forbid("vertices");
        const double a = need_number(j, "a", "domain");
        if (!(a >= 0.0)) throw ConfigError("config: domain.a must be nonnegative");
        return DomainDescriptor::ellipse(a);
    }
    if (kind == "petal") {
        forbid("radius");
        forbid("a");
        forbid("vertices");
        return DomainDescriptor::petal();
    }
    if (kind == "unit_square") {
        forbid("radius");
        forbid("a");
        forbid("vertices");
        return DomainDescriptor::unit_square();
    }
    if (kind == "polygon") {
        forbid("radius");
        forbid("a");
        if (!j.contains("vertices") || !j.at("vertices").is_array() ||
            j.at("vertices").size() < 3)
            throw ConfigError("config: domain.vertices must list at least 3 points");
        std::vector<complexd> verts;
        for (const auto& v : j.at("vertices")) {
            if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
                throw ConfigError("config: each polygon vertex must be [x, y]");
            verts.emplace_back(v[0].get<double>(), v[1].get<double>());
        }
        return DomainDescriptor::polygon(std::move(verts));
    }
    throw ConfigError("config: unknown domain kind \"" + kind + "\"");
}

void parse_coefficient(const json& j, CaseConfig& c) {
    check_keys(j, {"builtin", "a", "mu_re", "mu_im"}, "coefficient");
    if (j.contains("builtin")) {
        if (j.contains("mu_re") || j.contains("mu_im"))
            throw ConfigError("config: coefficient is either builtin or a dilatation");
        const std::string name = j.at("builtin").get<std::string>();
        if (name == "identity") {
            c.coefficient = CoefficientField::identity();
            c.map = QCMapDescriptor::identity();
        } else if (name == "spiral") {
            c.coefficient = CoefficientField::spiral();
            c.map = QCMapDescriptor::spiral();
        } else if (name == "ellipse_affine") {
            const double a = need_number(j, "a", "coefficient");
            if (!(a >= 0.0)) throw ConfigError("config: coefficient.a must be nonnegative");
            c.coefficient = CoefficientField::ellipse_affine(a);
            c.map = QCMapDescriptor::ellipse_affine(a);
        } else if (name == "petal") {
            c.coefficient = CoefficientField::petal();
            c.map = QCMapDescriptor::petal_map();
        } else {
            throw ConfigError("config: unknown builtin coefficient \"" + name + "\"");
        }
        if (name != "ellipse_affine" && j.contains("a"))
            throw ConfigError("config: coefficient.a applies to ellipse_affine only");
        return;
    }
    const double re = need_number(j, "mu_re", "coefficient");
    const double im = need_number(j, "mu_im", "coefficient");
    const complexd mu(re, im);
    if (!(std::abs(mu) < 1.0))
        throw ConfigError("config: |mu| must be below 1");
    c.mu_constant = mu;
    c.coefficient =
        CoefficientField::from_dilatation([mu](complexd) { return mu; }, std::abs(mu));
}

bool map_matches_domain(const CaseConfig& c) {
    if (!c.map) return false;
    const auto& d = c.domain;
    switch (c.map->kind()) {
        case geometry::MapKind::identity:
        case geometry::MapKind::spiral:
            return d.kind() == DomainKind::disc && d.radius() == 1.0;
        case geometry::MapKind::ellipse_affine:
            return d.kind() == DomainKind::ellipse &&
                   d.param() == c.coefficient.param();
        case geometry::MapKind::petal_map:
            return d.kind() == DomainKind::petal;
    }
    return false;
}

bool requested(const CaseConfig& c, const std::string& name) {
    return std::find(c.bounds_requested.begin(), c.bounds_requested.end(), name) !=
           c.bounds_requested.end();
}

void validate(CaseConfig& c) {
    for (const auto& name : c.bounds_requested)
        if (!kBoundNames.count(name))
            throw ConfigError("config: unknown bound \"" + name + "\"");
    if (c.alpha_makai.has_value() != requested(c, "makai"))
        throw ConfigError("config: alpha_makai must be present iff the makai "
                          "bound is requested");
    const bool beta_dep = requested(c, "thm52") || requested(c, "quasidisc");
    if (beta_dep && !(c.beta > 1.0))
        throw ConfigError("config: beta must exceed 1 for the beta-dependent bounds");
    const bool map_dep =
        requested(c, "sandwich") || requested(c, "thm52") || requested(c, "quasidisc");
    if (map_dep && !map_matches_domain(c))
        throw ConfigError(
            "config: sandwich/thm52/quasidisc need a builtin coefficient whose "
            "map carries this domain onto the unit disc");
    if (requested(c, "quasidisc") && !(c.coefficient.K() > 1.0))
        throw ConfigError(
            "config: the quasidisc bound needs K > 1 (beta* = K/(K-1) is "
            "undefined at K = 1)");
    if (c.output_format != "json" && c.output_format != "csv")
        throw ConfigError("config: output.format must be json or csv");
}

}  // namespace

CaseConfig parse_config(const json& j) {
    check_keys(j,
               {"case_id", "domain", "coefficient", "bounds", "fem", "beta",
                "alpha_makai", "output"},
               "top level");
    CaseConfig c;
    if (j.contains("case_id")) {
        if (!j.at("case_id").is_string())
            throw ConfigError("config: case_id must be a string");
        c.case_id = j.at("case_id").get<std::string>();
    }
    if (!j.contains("domain")) throw ConfigError("config: missing \"domain\"");
    c.domain = parse_domain(j.at("domain"));
    if (j.contains("coefficient")) parse_coefficient(j.at("coefficient"), c);
    else
        c.map = QCMapDescriptor::identity();
    if (j.contains("bounds")) {
        if (!j.at("bounds").is_array())
            throw ConfigError("config: bounds must be an array of names");
        for (const auto& b : j.at("bounds")) {
            if (!b.is_string()) throw ConfigError("config: bound names must be strings");
            c.bounds_requested.push_back(b.get<std::string>());
        }
    }
    if (j.contains("fem")) {
        const auto& f = j.at("fem");
        check_keys(f, {"refinements", "target_h", "eigen_count"}, "fem");
        c.fem.present = true;
        if (f.contains("refinements"))
            c.fem.refinements = static_cast<int>(need_number(f, "refinements", "fem"));
        if (f.contains("target_h")) c.fem.target_h = need_number(f, "target_h", "fem");
        if (f.contains("eigen_count"))
            c.fem.eigen_count = static_cast<int>(need_number(f, "eigen_count", "fem"));
        if (c.fem.refinements < 2) throw ConfigError("config: fem.refinements must be >= 2");
        if (!(c.fem.target_h > 0.0)) throw ConfigError("config: fem.target_h must be > 0");
        if (c.fem.eigen_count < 1) throw ConfigError("config: fem.eigen_count must be >= 1");
    }
    if (j.contains("beta")) c.beta = need_number(j, "beta", "top level");
    if (j.contains("alpha_makai")) c.alpha_makai = need_number(j, "alpha_makai", "top level");
    if (j.contains("output")) {
        const auto& o = j.at("output");
        check_keys(o, {"path", "format"}, "output");
        if (o.contains("path")) c.output_path = o.at("path").get<std::string>();
        if (o.contains("format")) c.output_format = o.at("format").get<std::string>();
    }
    validate(c);
    return c;
}

CaseConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: JSON parse error: ") + e.what());
    }
    return parse_config(j);
}

std::string format_double(double v) {
    if (v == 0.0) return "0";  // normalize -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace {

void dump_node(const ordered_json& j, std::string& out, int indent, int depth) {
    const std::string pad(static_cast<size_t>(indent) * depth, ' ');
    const std::string pad_in(static_cast<size_t>(indent) * (depth + 1), ' ');
    switch (j.type()) {
        case ordered_json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            size_t i = 0;
            for (const auto& [key, value] : j.items()) {
                out += pad_in;
                out += ordered_json(key).dump();
                out += ": ";
                dump_node(value, out, indent, depth + 1);
                if (++i < j.size()) out += ',';
                out += '\n';
            }
            out += pad + "}";
            return;
        }
        case ordered_json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            for (size_t i = 0; i < j.size(); ++i) {
                out += pad_in;
                dump_node(j[i], out, indent, depth + 1);
                if (i + 1 < j.size()) out += ',';
                out += '\n';
            }
            out += pad + "]";
            return;
        }
        case ordered_json::value_t::number_float:
            out += format_double(j.get<double>());
            return;
        default:
            out += j.dump();
            return;
    }
}

}  // namespace

std::string dump_deterministic(const ordered_json& j, int indent) {
    std::string out;
    dump_node(j, out, indent, 0);
    return out;
}

ordered_json canonical_config(const CaseConfig& c) {
    ordered_json j;
    j["case_id"] = c.case_id;
    ordered_json d;
    d["kind"] = c.domain.name();
    switch (c.domain.kind()) {
        case DomainKind::disc:
            d["radius"] = c.domain.radius();
            break;
        case DomainKind::ellipse:
            d["a"] = c.domain.param();
            break;
        case DomainKind::petal:
            break;
        case DomainKind::polygon: {
            ordered_json verts = ordered_json::array();
            for (const auto& v : c.domain.vertices())
                verts.push_back(ordered_json::array({v.real(), v.imag()}));
            d["vertices"] = verts;
            break;
        }
    }
    j["domain"] = d;
    ordered_json coef;
    if (c.mu_constant) {
        coef["mu_re"] = c.mu_constant->real();
        coef["mu_im"] = c.mu_constant->imag();
    } else {
        coef["builtin"] = c.coefficient.name();
        if (c.coefficient.kind() == beltrami::FieldKind::ellipse_affine)
            coef["a"] = c.coefficient.param();
    }
    j["coefficient"] = coef;
    j["bounds"] = c.bounds_requested;
    if (c.fem.present) {
        ordered_json f;
        f["refinements"] = c.fem.refinements;
        f["target_h"] = c.fem.target_h;
        f["eigen_count"] = c.fem.eigen_count;
        j["fem"] = f;
    }
    j["beta"] = c.beta;
    if (c.alpha_makai) j["alpha_makai"] = *c.alpha_makai;
    return j;
}

std::string config_hash(const CaseConfig& c) {
    const std::string text = dump_deterministic(canonical_config(c), 0);
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a 64
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

VerificationReport run_case(const CaseConfig& c, bool with_fem) {
    VerificationReport r;
    r.case_id = c.case_id;
    r.config_hash = config_hash(c);

    const double area = c.domain.area();
    const double perimeter = c.domain.perimeter();
    const double rho = c.domain.inscribed_radius();
    const double K = c.coefficient.K();

    for (const auto& name : c.bounds_requested) {
        if (name == "payne_weinberger")
            r.bounds.push_back(bounds::payne_weinberger_upper(area, perimeter));
        else if (name == "rfk")
            r.bounds.push_back(bounds::rfk_lower(area));
        else if (name == "makai")
            r.bounds.push_back(bounds::makai_hayman_lower(rho, *c.alpha_makai));
        else if (name == "monotonicity")
            r.bounds.push_back(bounds::monotonicity_upper(rho));
        else if (name == "sandwich") {
            auto s = bounds::sandwich_volume_preserving(K);
            r.bounds.push_back(s.lower);
            r.bounds.push_back(s.upper);
        } else if (name == "thm52") {
            const auto jn = fem::jacobian_norms(*c.map, c.beta);
            r.bounds.push_back(
                bounds::thm52_upper(K, c.beta, rho, jn.norm_beta, jn.dev_norm, area));
        } else if (name == "quasidisc") {
            const auto jn = fem::jacobian_norms(*c.map, c.beta);
            r.bounds.push_back(bounds::quasidisc_upper(K, rho, jn.dev_norm, area));
        }
    }

    if (!with_fem) {
        // bounds-only consistency verdict: best lower <= best upper
        double best_lower = -1.0, best_upper = std::numeric_limits<double>::infinity();
        for (const auto& b : r.bounds) {
            if (b.kind == bounds::BoundKind::lower)
                best_lower = std::max(best_lower, b.value);
            else
                best_upper = std::min(best_upper, b.value);
        }
        if (best_lower >= 0.0 && std::isfinite(best_upper)) {
            Verdict v;
            v.inequality = "max_lower <= min_upper";
            v.holds = best_lower <= best_upper;
            v.margin = best_upper - best_lower;
            r.verdicts.push_back(v);
        }
        return r;
    }

    r.validation = beltrami::validate_field(c.coefficient, c.domain, 500, c.seed);
    try {
        r.fem = fem::solve_on_domain(c.domain, c.coefficient, c.fem.refinements,
                                     c.fem.target_h, c.fem.eigen_count);
    } catch (const std::exception& e) {
        r.error = e.what();
        return r;
    }

    const double lambda_fem = r.fem->levels.back().lambda1;  // conforming: >= lambda1
    const double lambda = r.fem->extrapolated;
    const double tol = 3.0 * r.fem->error_estimate / lambda;
    for (const auto& b : r.bounds) {
        Verdict v;
        if (b.kind == bounds::BoundKind::lower) {
            v.inequality = b.name + " <= lambda1";
            v.holds = b.value <= lambda_fem;
            v.margin = lambda_fem - b.value;
            v.tolerance = 0.0;
        } else {
            v.inequality = "lambda1 <= " + b.name;
            v.tolerance = tol;
            if (b.log_value && !b.log_value->representable()) {
                v.holds = true;
                v.margin = 1e300;  // bound far beyond double range
            } else {
                const double cap = b.value * (1.0 + tol);
                v.holds = lambda <= cap;
                v.margin = cap - lambda;
            }
        }
        r.verdicts.push_back(v);
    }
    return r;
}

std::string to_json_text(const VerificationReport& r, const CaseConfig& c) {
    ordered_json j;
    j["case_id"] = r.case_id;
    j["inputs"] = canonical_config(c);
    ordered_json barr = ordered_json::array();
    for (const auto& b : r.bounds) {
        ordered_json e;
        e["name"] = b.name;
        e["kind"] = b.kind == bounds::BoundKind::upper ? "upper" : "lower";
        if (b.log_value)
            e["log10_value"] = b.log_value->log10;
        else
            e["value"] = b.value;
        ordered_json inputs;
        for (const auto& [k, v] : b.inputs) inputs[k] = v;
        e["inputs"] = inputs;
        e["assumptions"] = b.assumptions;
        barr.push_back(e);
    }
    j["bounds"] = barr;
    if (r.fem) {
        ordered_json f;
        f["eigenvalues"] = r.fem->eigenvalues;
        f["extrapolated"] = r.fem->extrapolated;
        f["error_estimate"] = r.fem->error_estimate;
        ordered_json meshes = ordered_json::array();
        for (const auto& l : r.fem->levels) {
            ordered_json m;
            m["h"] = l.h;
            m["lambda1"] = l.lambda1;
            meshes.push_back(m);
        }
        f["meshes"] = meshes;
        j["fem"] = f;
    } else {
        j["fem"] = nullptr;
    }
    if (r.validation) {
        ordered_json v;
        v["pass"] = r.validation->pass;
        v["samples"] = r.validation->samples;
        v["failures"] = r.validation->failures;
        v["worst_det_error"] = r.validation->worst_det_error;
        v["worst_eig_violation"] = r.validation->worst_eig_violation;
        j["validation"] = v;
    }
    ordered_json varr = ordered_json::array();
    for (const auto& v : r.verdicts) {
        ordered_json e;
        e["inequality"] = v.inequality;
        e["holds"] = v.holds;
        e["margin"] = v.margin;
        e["tolerance"] = v.tolerance;
        varr.push_back(e);
    }
    j["verdicts"] = varr;
    if (!r.error.empty()) j["error"] = r.error;
    ordered_json prov;
    prov["version"] = kToolVersion;
    prov["config_hash"] = r.config_hash;
    j["provenance"] = prov;
    return dump_deterministic(j) + "\n";
}

std::string to_csv_text(const VerificationReport& r) {
    std::ostringstream os;
    os << "h,lambda1,extrapolated,error_estimate\n";
    if (r.fem) {
        for (const auto& l : r.fem->levels)
            os << format_double(l.h) << ',' << format_double(l.lambda1) << ",,\n";
        os << format_double(r.fem->mesh_h) << ','
           << format_double(r.fem->levels.back().lambda1) << ','
           << format_double(r.fem->extrapolated) << ','
           << format_double(r.fem->error_estimate) << '\n';
    }
    return os.str();
}

}  // namespace qcspec::report
