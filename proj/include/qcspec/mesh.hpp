#pragma once

// Conforming P1 triangulations of the built-in domains. All boundary vertices
// lie exactly on the true boundary; curved domains are meshed through the
// volume-preserving maps (disc mesh pushed through the inverse map), so the
// distortion of element shape stays bounded by the map's K.

#include <array>
#include <iosfwd>
#include <vector>

#include "qcspec/geometry.hpp"

namespace qcspec::fem {

struct MeshError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Mesh {
    std::vector<complexd> vertices;
    std::vector<std::array<int, 3>> triangles;  // CCW, 0-based
    std::vector<bool> boundary;                 // per vertex
    double h = 0.0;                             // max edge length

    double area() const;
    double triangle_area(int t) const;
    int interior_count() const;
    /// "V T" header, then "x y flag" per vertex, then "i j k" per triangle.
    void export_text(std::ostream& os) const;
};

/// Quasi-uniform triangulation with max edge <= 1.5 * target_h.
/// target_h must be positive and below the inscribed radius.
Mesh mesh_domain(const geometry::DomainDescriptor& d, double target_h);

}  // namespace qcspec::fem
