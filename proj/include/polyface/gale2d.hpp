#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polyface/errors.hpp"
#include "polyface/incidence.hpp"
#include "polyface/integer.hpp"
#include "polyface/vertex_set.hpp"

// Two-dimensional Gale diagrams of d-polytopes with d+3 vertices. Transformed points are
// stored as unnormalized directions; only their rays and the origin block matter.

namespace polyface::gale {

struct Vec2 {
    Rational x;
    Rational y;

    friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline Vec2 vec2(long long x, long long y) { return {Rational(x), Rational(y)}; }
inline Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
inline Rational dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline Rational cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Vec2 perp(const Vec2& a) { return {-a.y, a.x}; }
inline bool is_zero(const Vec2& a) { return a.x == 0 && a.y == 0; }

inline bool colocated(const Vec2& a, const Vec2& b) { return cross(a, b) == 0 && dot(a, b) > 0; }
inline bool diametral(const Vec2& a, const Vec2& b) { return cross(a, b) == 0 && dot(a, b) < 0; }

/// Vertex i < dirs.size() of the polytope is transformed to dirs[i]; the origin_count
/// vertices after them sit at the origin (they are the pyramidal apexes).
struct GaleDiagram2D {
    int d = 0;
    int origin_count = 0;
    std::vector<Vec2> dirs;

    int num_points() const { return origin_count + static_cast<int>(dirs.size()); }
    bool is_origin(int vertex) const { return vertex >= static_cast<int>(dirs.size()); }

    friend bool operator==(const GaleDiagram2D&, const GaleDiagram2D&) = default;
};

namespace detail {
inline std::vector<Vec2> candidate_normals(const std::vector<Vec2>& pts) {
    std::vector<Vec2> out;
    for (const auto& z : pts) {
        out.push_back(perp(z));
        out.push_back(-perp(z));
        out.push_back(z);
        out.push_back(-z);
    }
    return out;
}
}  // namespace detail

/// Point count, nonzero directions, and at least two dirs in every open halfplane through
/// the origin. The count in {z : c.z > 0} only drops when c is perpendicular to some dir,
/// so it suffices to test those normals.
inline bool is_valid(const GaleDiagram2D& g) {
    if (g.d < 1 || g.origin_count < 0 || g.num_points() != g.d + 3) return false;
    for (const auto& z : g.dirs)
        if (is_zero(z)) return false;
    if (g.dirs.size() < 2) return false;
    for (const auto& c : detail::candidate_normals(g.dirs)) {
        int inside = 0;
        for (const auto& z : g.dirs)
            if (dot(c, z) > 0) ++inside;
        if (inside < 2) return false;
    }
    return true;
}

/// True iff the origin lies in the relative interior of conv(Z), i.e. some strictly positive
/// combination of Z is zero. By Stiemke's alternative this fails iff some c has c.z >= 0 on
/// Z with at least one strict inequality; such a c can be taken on an extreme ray of the
/// dual cone, which is perpendicular or parallel to a point of Z.
inline bool is_coface(const GaleDiagram2D& g, VertexSet z) {
    if (z.empty()) return false;
    std::vector<Vec2> pts;
    for (int v : z.elements())
        if (!g.is_origin(v)) pts.push_back(g.dirs.at(static_cast<std::size_t>(v)));
    if (pts.empty()) return true;
    for (const auto& c : detail::candidate_normals(pts)) {
        bool nonneg = true;
        bool strict = false;
        for (const auto& p : pts) {
            const Rational s = dot(c, p);
            if (s < 0) nonneg = false;
            if (s > 0) strict = true;
        }
        if (nonneg && strict) return false;
    }
    return true;
}

/// The polytope encoded by a valid diagram: faces are complements of cofaces, facets the
/// maximal proper faces.
inline IncidencePolytope gale_faces(const GaleDiagram2D& g) {
    if (!is_valid(g)) throw InvalidDiagram("gale diagram fails the halfplane condition");
    const int n = g.num_points();
    const VertexSet all = VertexSet::range(n);
    std::vector<VertexSet> faces;
    for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << n); ++mask) {
        const VertexSet s(mask);
        if (is_coface(g, all - s)) faces.push_back(s);
    }
    std::vector<VertexSet> facets;
    for (VertexSet f : faces) {
        bool maximal = true;
        for (VertexSet h : faces)
            if (h != f && f.subset_of(h)) {
                maximal = false;
                break;
            }
        if (maximal) facets.push_back(f);
    }
    return IncidencePolytope(g.d, n, std::move(facets));
}

/// Vertex pairs that are not edges: {u, v} is an edge iff its complement is a coface.
inline std::vector<std::pair<int, int>> gale_missing_edges(const GaleDiagram2D& g) {
    if (!is_valid(g)) throw InvalidDiagram("gale diagram fails the halfplane condition");
    const int n = g.num_points();
    const VertexSet all = VertexSet::range(n);
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!is_coface(g, all - VertexSet::of({u, v}))) out.emplace_back(u, v);
    return out;
}

/// Whether direction p lies on the closed short arc between a and b (a, b not diametral).
/// For co-located a, b the arc is the single ray through them.
inline bool on_short_arc(const Vec2& a, const Vec2& b, const Vec2& p) {
    if (diametral(a, b)) throw std::invalid_argument("short arc undefined for diametral points");
    const Rational ab = cross(a, b);
    if (ab == 0) return colocated(a, p);
    const Rational alpha = cross(p, b) / ab;
    const Rational beta = cross(a, p) / ab;
    return alpha >= 0 && beta >= 0 && !is_zero(p);
}

struct PairRelation {
    int u = 0;
    int v = 0;
    bool colocated = false;
    bool diametral = false;
    bool contiguous = false;
    VertexSet on_arc;  // other dirs on the closed short arc (empty when diametral)
};

/// One entry per pair u < v of dirs. Two points are contiguous when they are not diametral
/// and no other transformed point lies on the closed short arc between them; so two
/// co-located points are contiguous unless a third shares their location.
inline std::vector<PairRelation> contiguity_report(const GaleDiagram2D& g) {
    std::vector<PairRelation> out;
    const int m = static_cast<int>(g.dirs.size());
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) {
            const Vec2& a = g.dirs[static_cast<std::size_t>(u)];
            const Vec2& b = g.dirs[static_cast<std::size_t>(v)];
            PairRelation rel{u, v, colocated(a, b), diametral(a, b), false, {}};
            if (!rel.diametral) {
                for (int w = 0; w < m; ++w)
                    if (w != u && w != v && on_short_arc(a, b, g.dirs[static_cast<std::size_t>(w)]))
                        rel.on_arc.insert(w);
                rel.contiguous = rel.on_arc.empty();
            }
            out.push_back(rel);
        }
    return out;
}

inline bool contiguous(const GaleDiagram2D& g, int u, int v) {
    if (u > v) std::swap(u, v);
    for (const auto& rel : contiguity_report(g))
        if (rel.u == u && rel.v == v) return rel.contiguous;
    return false;
}

enum class Variant { i, ii, iii, iv, v, vi };

struct DiagramVariant {
    Variant tag = Variant::i;
    int d = 3;
};

inline std::string to_string(Variant v) {
    switch (v) {
        case Variant::i: return "i";
        case Variant::ii: return "ii";
        case Variant::iii: return "iii";
        case Variant::iv: return "iv";
        case Variant::v: return "v";
        case Variant::vi: return "vi";
    }
    return "?";
}

inline std::optional<Variant> parse_variant(std::string_view text) {
    for (Variant v : {Variant::i, Variant::ii, Variant::iii, Variant::iv, Variant::v, Variant::vi})
        if (to_string(v) == text) return v;
    return std::nullopt;
}

inline bool compatible(const DiagramVariant& v) {
    switch (v.tag) {
        case Variant::i: return v.d == 3;
        case Variant::ii: return v.d >= 3;
        case Variant::iii:
        case Variant::iv: return v.d >= 4;
        case Variant::v: return v.d == 4;
        case Variant::vi: return v.d == 5;
    }
    return false;
}

/// Facet count of the polytope each variant encodes.
inline int expected_facets(const DiagramVariant& v) {
    switch (v.tag) {
        case Variant::i: return 7;
        case Variant::ii: return 2 * v.d + 1;
        case Variant::iii: return 2 * v.d;
        case Variant::iv: return 2 * v.d - 1;
        case Variant::v:
        case Variant::vi: return 8;
    }
    return 0;
}

/// Concrete diagrams for the six configurations of d-polytopes with d+3 vertices and exactly
/// four missing edges. Labels in comments follow the missing-edge path t-u-v-w(-x).
inline GaleDiagram2D figure2_diagram(const DiagramVariant& variant) {
    if (!compatible(variant))
        throw DomainError("variant " + to_string(variant.tag) + " is not defined for d = " +
                          std::to_string(variant.d));
    const int d = variant.d;
    GaleDiagram2D g{d, 0, {}};
    // t, u, v, w, x followed by d-2 points co-located at -v
    auto five_plus_block = [&](Vec2 t, Vec2 x) {
        g.dirs = {t, vec2(-1, -4), vec2(0, -1), vec2(1, -4), x};
        for (int i = 0; i < d - 2; ++i) g.dirs.push_back(vec2(0, 1));
    };
    switch (variant.tag) {
        case Variant::i:
            // t, u, v, w with t, w diametral; the other two strictly between -u and -v
            g.dirs = {vec2(-1, 0), vec2(-1, -1), vec2(1, -1), vec2(1, 0), vec2(1, 3), vec2(-1, 3)};
            break;
        case Variant::ii: five_plus_block(vec2(-1, 5), vec2(1, 5)); break;   // no diametral pair
        case Variant::iii: five_plus_block(vec2(-1, 4), vec2(1, 5)); break;  // t = -w
        case Variant::iv: five_plus_block(vec2(-1, 4), vec2(1, 4)); break;   // t = -w, x = -u
        case Variant::v: {
            // u, v, w then two points at -u and two at -w
            const Vec2 u = vec2(-1, -1);
            const Vec2 w = vec2(1, -1);
            g.dirs = {u, vec2(0, -1), w, -u, -u, -w, -w};
            break;
        }
        case Variant::vi:
            // two quadrilaterals: a pair of co-located points at each of four perpendicular rays
            g.dirs = {vec2(1, 0), vec2(1, 0), vec2(-1, 0), vec2(-1, 0),
                      vec2(0, 1), vec2(0, 1), vec2(0, -1), vec2(0, -1)};
            break;
    }
    return g;
}

}  // namespace polyface::gale
