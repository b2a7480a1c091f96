#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyface/errors.hpp"
#include "polyface/incidence.hpp"
#include "polyface/integer.hpp"
#include "polyface/lattice.hpp"

// Exact rational convex geometry. Everything here is brute force on purpose: it is the
// independent reference for the combinatorial layer, sized for n <= 16 points, d <= 8.

namespace polyface::geometry {

using Point = std::vector<Rational>;

/// Finite point set in R^d.
struct VPolytope {
    int d = 0;
    std::vector<Point> points;
};

/// {x : normal . x = offset}. Facet planes produced by hull_incidence are oriented so the
/// polytope lies in normal . x <= offset.
struct Hyperplane {
    Point normal;
    Rational offset;

    friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

enum class Position { beneath, on, beyond };

inline Rational dot(const Point& a, const Point& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Point operator-(const Point& a, const Point& b) {
    Point out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline Point operator+(const Point& a, const Point& b) {
    Point out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline Point scaled(const Point& a, const Rational& c) {
    Point out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * c;
    return out;
}

inline Point make_point(std::initializer_list<long long> coords) {
    Point p;
    for (long long c : coords) p.emplace_back(c);
    return p;
}

namespace detail {

/// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        const Rational inv = 1 / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational factor = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t affine_rank(const std::vector<Point>& pts) {
    if (pts.size() < 2) return 0;
    std::vector<std::vector<Rational>> m;
    for (std::size_t i = 1; i < pts.size(); ++i) m.push_back(pts[i] - pts[0]);
    return rref(m).size();
}

/// The hyperplane through d affinely independent points of R^d, or nullopt if dependent.
inline std::optional<Hyperplane> hyperplane_through(const std::vector<const Point*>& pts, int d) {
    std::vector<std::vector<Rational>> m;
    for (const Point* p : pts) {
        std::vector<Rational> row(p->begin(), p->end());
        row.emplace_back(-1);
        m.push_back(std::move(row));
    }
    const auto pivots = rref(m);
    if (pivots.size() != static_cast<std::size_t>(d)) return std::nullopt;
    const std::size_t cols = static_cast<std::size_t>(d) + 1;
    std::size_t free_col = 0;
    while (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) ++free_col;
    std::vector<Rational> x(cols, Rational(0));
    x[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -m[i][free_col];
    Hyperplane h;
    h.normal.assign(x.begin(), x.begin() + d);
    h.offset = x[static_cast<std::size_t>(d)];
    if (std::all_of(h.normal.begin(), h.normal.end(), [](const Rational& c) { return c == 0; }))
        return std::nullopt;
    return h;
}

/// Scales to a primitive integer normal (gcd 1), keeping the orientation.
inline Hyperplane normalized(Hyperplane h) {
    Integer lcm = 1;
    for (const auto& c : h.normal) lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(c));
    lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(h.offset));
    Integer g = 0;
    for (auto& c : h.normal) {
        c *= lcm;
        g = boost::multiprecision::gcd(g, boost::multiprecision::numerator(c));
    }
    h.offset *= lcm;
    g = boost::multiprecision::gcd(g, boost::multiprecision::numerator(h.offset));
    if (g != 0 && g != 1) {
        for (auto& c : h.normal) c /= Rational(g);
        h.offset /= Rational(g);
    }
    return h;
}

inline void check_points(const VPolytope& v) {
    if (v.d < 1) throw DegenerateInput("ambient dimension must be >= 1");
    if (v.points.size() > static_cast<std::size_t>(VertexSet::capacity))
        throw DegenerateInput("at most 64 points supported");
    for (const auto& p : v.points)
        if (p.size() != static_cast<std::size_t>(v.d))
            throw DegenerateInput("point of wrong dimension");
}

}  // namespace detail

/// Facets of conv(V), their supporting hyperplanes, and which input points are vertices.
struct HullResult {
    IncidencePolytope polytope;                 // vertices numbered 0..f0-1 in input order
    std::vector<Hyperplane> facet_planes;       // aligned with polytope.facets()
    std::vector<std::size_t> vertex_points;     // input index of each vertex
    std::vector<std::size_t> non_vertices;      // input points that are not vertices
};

/// Enumerates facets by trying every affinely independent d-subset of the points and keeping
/// the hyperplanes with all points on one side. Non-vertex points (interior, on a face, or
/// duplicates) are reported in `non_vertices` rather than rejected.
inline HullResult hull_incidence(const VPolytope& v) {
    detail::check_points(v);
    const int d = v.d;
    const std::size_t n = v.points.size();
    if (n < static_cast<std::size_t>(d) + 1 || detail::affine_rank(v.points) != static_cast<std::size_t>(d))
        throw DegenerateInput("points are not full-dimensional in R^" + std::to_string(d));

    std::map<VertexSet, Hyperplane> facets;  // keyed by the input points on the facet
    std::vector<std::size_t> idx(static_cast<std::size_t>(d));
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    while (true) {
        VertexSet subset;
        for (std::size_t i : idx) subset.insert(static_cast<int>(i));
        bool known = false;
        for (const auto& [on, plane] : facets)
            if (subset.subset_of(on)) {
                known = true;
                break;
            }
        if (!known) {
            std::vector<const Point*> chosen;
            for (std::size_t i : idx) chosen.push_back(&v.points[i]);
            if (auto h = detail::hyperplane_through(chosen, d)) {
                bool any_pos = false;
                bool any_neg = false;
                VertexSet on;
                for (std::size_t j = 0; j < n; ++j) {
                    const Rational s = dot(h->normal, v.points[j]) - h->offset;
                    if (s > 0) any_pos = true;
                    else if (s < 0) any_neg = true;
                    else on.insert(static_cast<int>(j));
                }
                if (!(any_pos && any_neg)) {
                    if (any_pos) {
                        for (auto& c : h->normal) c = -c;
                        h->offset = -h->offset;
                    }
                    facets.emplace(on, detail::normalized(*h));
                }
            }
        }
        // next combination
        int pos = d - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - static_cast<std::size_t>(d) + static_cast<std::size_t>(pos)) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (std::size_t i = static_cast<std::size_t>(pos) + 1; i < idx.size(); ++i) idx[i] = idx[i - 1] + 1;
    }

    HullResult out;
    std::vector<int> vertex_id(n, -1);
    for (std::size_t j = 0; j < n; ++j) {
        VertexSet meet = VertexSet::range(static_cast<int>(n));
        for (const auto& [on, plane] : facets)
            if (on.contains(static_cast<int>(j))) meet = meet & on;
        bool is_vertex = true;
        for (int other : meet.elements()) {
            const auto o = static_cast<std::size_t>(other);
            if (v.points[o] != v.points[j] || o < j) is_vertex = false;
        }
        if (is_vertex) {
            vertex_id[j] = static_cast<int>(out.vertex_points.size());
            out.vertex_points.push_back(j);
        } else {
            out.non_vertices.push_back(j);
        }
    }

    std::map<VertexSet, Hyperplane> by_vertices;
    for (const auto& [on, plane] : facets) {
        VertexSet s;
        for (int j : on.elements())
            if (vertex_id[static_cast<std::size_t>(j)] >= 0) s.insert(vertex_id[static_cast<std::size_t>(j)]);
        by_vertices.emplace(s, plane);
    }
    std::vector<VertexSet> facet_sets;
    for (const auto& [s, plane] : by_vertices) facet_sets.push_back(s);
    out.polytope = IncidencePolytope(d, static_cast<int>(out.vertex_points.size()), facet_sets);
    for (VertexSet s : out.polytope.facets()) out.facet_planes.push_back(by_vertices.at(s));
    return out;
}

/// Vertex coordinates of `v` in the order used by hull_incidence.
inline std::vector<Point> vertex_coordinates(const VPolytope& v, const HullResult& hull) {
    std::vector<Point> out;
    for (std::size_t j : hull.vertex_points) out.push_back(v.points[j]);
    return out;
}

inline Position position(const Point& p, const Hyperplane& facet_plane) {
    const Rational s = dot(facet_plane.normal, p) - facet_plane.offset;
    if (s < 0) return Position::beneath;
    if (s > 0) return Position::beyond;
    return Position::on;
}

inline Point centroid(const std::vector<Point>& pts) {
    Point c(pts.at(0).size(), Rational(0));
    for (const auto& p : pts) c = c + p;
    return scaled(c, Rational(1, static_cast<long long>(pts.size())));
}

inline VPolytope translated(const VPolytope& v, const Point& shift) {
    VPolytope out{v.d, {}};
    for (const auto& p : v.points) out.points.push_back(p + shift);
    return out;
}

/// The vertices of `v` translated so their centroid is the origin (an interior point).
inline VPolytope centered(const VPolytope& v) {
    const auto hull = hull_incidence(v);
    const auto verts = vertex_coordinates(v, hull);
    return translated(VPolytope{v.d, verts}, scaled(centroid(verts), Rational(-1)));
}

/// {y : x . y <= 1 for all x in conv(V)}; one dual vertex per facet, in facet order.
inline VPolytope polar_dual(const VPolytope& v) {
    const auto hull = hull_incidence(v);
    VPolytope out{v.d, {}};
    for (const auto& h : hull.facet_planes) {
        if (h.offset <= 0) throw OriginNotInterior("origin is not in the interior");
        out.points.push_back(scaled(h.normal, 1 / h.offset));
    }
    return out;
}

/// Intersection of conv(V) with the closed halfspace normal . x <= offset. The result lists
/// the kept vertices first, then one point per edge crossing the hyperplane.
inline VPolytope slice(const VPolytope& v, const Hyperplane& h) {
    const auto hull = hull_incidence(v);
    const auto verts = vertex_coordinates(v, hull);
    std::vector<Rational> side;
    bool any_kept = false;
    bool any_cut = false;
    for (const auto& p : verts) {
        const Rational s = dot(h.normal, p) - h.offset;
        if (s == 0) throw VertexOnHyperplane("slicing hyperplane contains a vertex");
        (s < 0 ? any_kept : any_cut) = true;
        side.push_back(s);
    }
    if (!any_kept || !any_cut) throw NoIntersection("hyperplane misses the interior");

    VPolytope out{v.d, {}};
    for (std::size_t i = 0; i < verts.size(); ++i)
        if (side[i] < 0) out.points.push_back(verts[i]);
    for (auto [a, b] : edges(enumerate_faces(hull.polytope))) {
        const auto ia = static_cast<std::size_t>(a);
        const auto ib = static_cast<std::size_t>(b);
        if ((side[ia] < 0) == (side[ib] < 0)) continue;
        const Rational lambda = side[ia] / (side[ia] - side[ib]);
        out.points.push_back(verts[ia] + scaled(verts[ib] - verts[ia], lambda));
    }
    return out;
}

/// A hyperplane cutting off exactly the vertices of the face with vertex set `face`
/// (vertex numbering of hull_incidence). The kept side is normal . x <= offset.
inline Hyperplane face_truncation_plane(const VPolytope& v, VertexSet face) {
    const auto hull = hull_incidence(v);
    if (face.empty() || hull.polytope.closure(face) != face || face == hull.polytope.vertices())
        throw DomainError("vertex set " + to_string(face) + " is not a proper face");
    const auto verts = vertex_coordinates(v, hull);
    Point c(static_cast<std::size_t>(v.d), Rational(0));
    for (std::size_t i = 0; i < hull.facet_planes.size(); ++i)
        if (face.subset_of(hull.polytope.facets()[i])) c = c + hull.facet_planes[i].normal;
    // c . x is maximal exactly on the face
    const Rational top = dot(c, verts.at(static_cast<std::size_t>(face.elements().front())));
    std::optional<Rational> rest;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (face.contains(static_cast<int>(i))) continue;
        const Rational val = dot(c, verts[i]);
        if (!rest || val > *rest) rest = val;
    }
    return Hyperplane{c, (top + *rest) / 2};
}

/// Truncates the face `face` (vertex numbering of hull_incidence) with a shallow cut.
inline VPolytope truncate_face(const VPolytope& v, VertexSet face) {
    return slice(v, face_truncation_plane(v, face));
}

/// The section of conv(V) by a hyperplane separating vertex `vertex` (hull numbering) from
/// the other vertices, expressed in R^{d-1} by dropping one coordinate.
inline VPolytope vertex_figure(const VPolytope& v, int vertex) {
    if (v.d < 2) throw DomainError("vertex figures need d >= 2");
    VertexSet face;
    face.insert(vertex);
    const Hyperplane h = face_truncation_plane(v, face);
    const auto hull = hull_incidence(v);
    const auto verts = vertex_coordinates(v, hull);
    const Point& apex = verts.at(static_cast<std::size_t>(vertex));
    std::size_t drop = 0;
    while (h.normal[drop] == 0) ++drop;

    VPolytope out{v.d - 1, {}};
    for (auto [a, b] : edges(enumerate_faces(hull.polytope))) {
        if (a != vertex && b != vertex) continue;
        const Point& other = verts[static_cast<std::size_t>(a == vertex ? b : a)];
        const Rational sa = dot(h.normal, apex) - h.offset;
        const Rational sb = dot(h.normal, other) - h.offset;
        Point p = apex + scaled(other - apex, sa / (sa - sb));
        p.erase(p.begin() + static_cast<std::ptrdiff_t>(drop));
        out.points.push_back(std::move(p));
    }
    return out;
}

inline VPolytope moment_curve_points(int n, int d) {
    if (n <= d || d < 1) throw DomainError("moment curve: need n > d >= 1");
    VPolytope out{d, {}};
    for (int t = 1; t <= n; ++t) {
        Point p;
        Integer power = 1;
        for (int i = 0; i < d; ++i) {
            power *= t;
            p.emplace_back(power);
        }
        out.points.push_back(std::move(p));
    }
    return out;
}

// Realizations used as geometric counterparts of the combinatorial builders.

/// 0, e_1, ..., e_d
inline VPolytope simplex_points(int d) {
    VPolytope out{d, {Point(static_cast<std::size_t>(d), Rational(0))}};
    for (int i = 0; i < d; ++i) {
        Point e(static_cast<std::size_t>(d), Rational(0));
        e[static_cast<std::size_t>(i)] = 1;
        out.points.push_back(std::move(e));
    }
    return out;
}

/// {0,1}^d, binary counting order with coordinate 0 as the lowest bit.
inline VPolytope cube_points(int d) {
    VPolytope out{d, {}};
    for (int mask = 0; mask < (1 << d); ++mask) {
        Point p;
        for (int i = 0; i < d; ++i) p.emplace_back((mask >> i) & 1);
        out.points.push_back(std::move(p));
    }
    return out;
}

/// Cartesian product; point (i, j) has index i * |B| + j.
inline VPolytope product_points(const VPolytope& a, const VPolytope& b) {
    VPolytope out{a.d + b.d, {}};
    for (const auto& p : a.points)
        for (const auto& q : b.points) {
            Point r = p;
            r.insert(r.end(), q.begin(), q.end());
            out.points.push_back(std::move(r));
        }
    return out;
}

/// conv(A x {0}, apex) with apex = (centroid(A), 1); the apex is the last point.
inline VPolytope pyramid_points(const VPolytope& a) {
    VPolytope out{a.d + 1, {}};
    for (const auto& p : a.points) {
        Point r = p;
        r.emplace_back(0);
        out.points.push_back(std::move(r));
    }
    Point apex = centroid(a.points);
    apex.emplace_back(1);
    out.points.push_back(std::move(apex));
    return out;
}

/// Apexes (centroid, 1) and (centroid, -1) appended in that order.
inline VPolytope bipyramid_points(const VPolytope& a) {
    VPolytope out = pyramid_points(a);
    Point low = centroid(a.points);
    low.emplace_back(-1);
    out.points.push_back(std::move(low));
    return out;
}

/// 0, e_i (i = 1..d), e_1 + e_2 + e_i (i = 1..d); e_1+e_2+e_1 etc. are distinct points.
inline VPolytope pentasm_points(int d) {
    VPolytope out = simplex_points(d);
    for (int i = 0; i < d; ++i) {
        Point p(static_cast<std::size_t>(d), Rational(0));
        p[0] += 1;
        p[1] += 1;
        p[static_cast<std::size_t>(i)] += 1;
        out.points.push_back(std::move(p));
    }
    return out;
}

/// 0, e1, e1+e3, e2, e2+e3, e1+e2, e1+e2+2e3
inline VPolytope sigma3_points() {
    return VPolytope{3,
                     {make_point({0, 0, 0}), make_point({1, 0, 0}), make_point({1, 0, 1}),
                      make_point({0, 1, 0}), make_point({0, 1, 1}), make_point({1, 1, 0}),
                      make_point({1, 1, 2})}};
}

}  // namespace polyface::geometry
