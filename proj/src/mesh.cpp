#include "qcspec/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>

namespace qcspec::fem {

using geometry::DomainDescriptor;
using geometry::DomainKind;
using geometry::QCMapDescriptor;

double Mesh::triangle_area(int t) const {
    const auto& tr = triangles[t];
    const complexd a = vertices[tr[0]], b = vertices[tr[1]], c = vertices[tr[2]];
    return 0.5 * ((b - a).real() * (c - a).imag() - (c - a).real() * (b - a).imag());
}

double Mesh::area() const {
    double s = 0.0;
    for (size_t t = 0; t < triangles.size(); ++t) s += triangle_area(static_cast<int>(t));
    return s;
}

int Mesh::interior_count() const {
    int n = 0;
    for (bool b : boundary)
        if (!b) ++n;
    return n;
}

void Mesh::export_text(std::ostream& os) const {
    os << vertices.size() << ' ' << triangles.size() << '\n';
    for (size_t i = 0; i < vertices.size(); ++i)
        os << vertices[i].real() << ' ' << vertices[i].imag() << ' ' << (boundary[i] ? 1 : 0)
           << '\n';
    for (const auto& t : triangles) os << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

namespace {

void finalize(Mesh& m) {
    double hmax = 0.0;
    for (auto& t : m.triangles) {
        // enforce positive orientation
        const complexd a = m.vertices[t[0]], b = m.vertices[t[1]], c = m.vertices[t[2]];
        const double ar = 0.5 * ((b - a).real() * (c - a).imag() - (c - a).real() * (b - a).imag());
        if (ar < 0.0) std::swap(t[1], t[2]);
        if (std::abs(ar) < 1e-14) throw MeshError("mesh_domain: degenerate triangle");
        for (int e = 0; e < 3; ++e)
            hmax = std::max(hmax, std::abs(m.vertices[t[e]] - m.vertices[t[(e + 1) % 3]]));
    }
    m.h = hmax;
}

// Polar mesh of the unit disc: ring i has 6i vertices; annulus strips are
// triangulated by merging the two angle sequences.
Mesh unit_disc_mesh(int rings) {
    Mesh m;
    m.vertices.push_back({0.0, 0.0});
    m.boundary.push_back(false);
    std::vector<int> ring_start{0};
    for (int i = 1; i <= rings; ++i) {
        ring_start.push_back(static_cast<int>(m.vertices.size()));
        const int cnt = 6 * i;
        const double r = static_cast<double>(i) / rings;
        for (int k = 0; k < cnt; ++k) {
            m.vertices.push_back(std::polar(r, 2.0 * M_PI * k / cnt));
            m.boundary.push_back(i == rings);
        }
    }
    // center fan
    for (int k = 0; k < 6; ++k)
        m.triangles.push_back({0, ring_start[1] + k, ring_start[1] + (k + 1) % 6});
    // annulus strips
    for (int i = 2; i <= rings; ++i) {
        const int ni = 6 * (i - 1), no = 6 * i;
        const int si = ring_start[i - 1], so = ring_start[i];
        int ki = 0, ko = 0;
        while (ki < ni || ko < no) {
            const double a_in = 2.0 * M_PI * (ki + 1) / ni;
            const double a_out = 2.0 * M_PI * (ko + 1) / no;
            const bool advance_outer = ko < no && (ki == ni || a_out <= a_in);
            if (advance_outer) {
                m.triangles.push_back(
                    {si + ki % ni, so + ko % no, so + (ko + 1) % no});
                ++ko;
            } else {
                m.triangles.push_back(
                    {si + ki % ni, so + ko % no, si + (ki + 1) % ni});
                ++ki;
            }
        }
    }
    return m;
}

void map_vertices(Mesh& m, const QCMapDescriptor& disc_to_target_inverse_of) {
    for (auto& v : m.vertices) v = disc_to_target_inverse_of.inverse(v);
}

bool on_segment(complexd p, complexd a, complexd b, double tol) {
    const complexd ab = b - a;
    const double len = std::abs(ab);
    const double cross =
        std::abs((p - a).real() * ab.imag() - (p - a).imag() * ab.real()) / len;
    if (cross > tol) return false;
    const double t = ((p - a).real() * ab.real() + (p - a).imag() * ab.imag()) / (len * len);
    return t >= -tol && t <= 1.0 + tol;
}

Mesh polygon_mesh(const DomainDescriptor& d, double target_h) {
    const auto& verts = d.vertices();
    Mesh m;
    complexd centroid{0.0, 0.0};
    for (const auto& v : verts) centroid += v;
    centroid /= static_cast<double>(verts.size());
    m.vertices.push_back(centroid);
    for (const auto& v : verts) m.vertices.push_back(v);
    const int n = static_cast<int>(verts.size());
    for (int i = 0; i < n; ++i) m.triangles.push_back({0, 1 + i, 1 + (i + 1) % n});

    // uniform refinement until the edge target is met; straight edges are
    // represented exactly so no projection is needed
    double hmax = 0.0;
    for (const auto& t : m.triangles)
        for (int e = 0; e < 3; ++e)
            hmax = std::max(hmax, std::abs(m.vertices[t[e]] - m.vertices[t[(e + 1) % 3]]));
    while (hmax > 1.45 * target_h) {
        std::map<std::pair<int, int>, int> midpoint;
        std::vector<std::array<int, 3>> next;
        auto mid = [&](int a, int b) {
            const auto key = std::minmax(a, b);
            auto it = midpoint.find(key);
            if (it != midpoint.end()) return it->second;
            const int idx = static_cast<int>(m.vertices.size());
            m.vertices.push_back(0.5 * (m.vertices[a] + m.vertices[b]));
            midpoint.emplace(key, idx);
            return idx;
        };
        for (const auto& t : m.triangles) {
            const int ab = mid(t[0], t[1]), bc = mid(t[1], t[2]), ca = mid(t[2], t[0]);
            next.push_back({t[0], ab, ca});
            next.push_back({t[1], bc, ab});
            next.push_back({t[2], ca, bc});
            next.push_back({ab, bc, ca});
        }
        m.triangles = std::move(next);
        hmax *= 0.5;
    }
    m.boundary.assign(m.vertices.size(), false);
    const double tol = 1e-12 * (1.0 + std::abs(m.vertices[0]));
    for (size_t i = 0; i < m.vertices.size(); ++i)
        for (int e = 0; e < n; ++e)
            if (on_segment(m.vertices[i], verts[e], verts[(e + 1) % n], tol)) {
                m.boundary[i] = true;
                break;
            }
    return m;
}

}  // namespace

Mesh mesh_domain(const DomainDescriptor& d, double target_h) {
    if (!(target_h > 0.0)) throw MeshError("mesh_domain: target_h <= 0");
    if (target_h >= d.inscribed_radius())
        throw MeshError("mesh_domain: target_h must be below the inscribed radius");
    if (d.kind() == DomainKind::polygon) {
        Mesh m = polygon_mesh(d, target_h);
        finalize(m);
        return m;
    }
    // scale factor of the disc-to-domain vertex map, for the initial ring count
    double stretch = 1.0;
    if (d.kind() == DomainKind::ellipse)
        stretch = std::sqrt(d.param() * d.param() + 1.0) + d.param();
    else if (d.kind() == DomainKind::petal)
        stretch = std::sqrt(2.0);
    else
        stretch = d.radius();
    int rings = std::max(2, static_cast<int>(std::ceil(1.1 * stretch / target_h)));
    for (int attempt = 0; attempt < 8; ++attempt) {
        Mesh m = unit_disc_mesh(rings);
        switch (d.kind()) {
            case DomainKind::disc:
                if (d.radius() != 1.0)
                    for (auto& v : m.vertices) v *= d.radius();
                break;
            case DomainKind::ellipse:
                map_vertices(m, QCMapDescriptor::ellipse_affine(d.param()));
                break;
            case DomainKind::petal:
                map_vertices(m, QCMapDescriptor::petal_map());
                break;
            default:
                break;
        }
        finalize(m);
        if (m.h <= 1.5 * target_h) return m;
        rings = std::max(rings + 1,
                         static_cast<int>(std::ceil(rings * m.h / (1.4 * target_h))));
    }
    throw MeshError("mesh_domain: edge target not reached");
}

}  // namespace qcspec::fem
