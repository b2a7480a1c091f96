#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "polyface/errors.hpp"
#include "polyface/fvector.hpp"
#include "polyface/gale2d.hpp"
#include "polyface/geometry.hpp"
#include "polyface/integer.hpp"

// JSON forms. Rationals are "p/q" strings (integers may also be given as "p" or as JSON
// numbers on input); everything round-trips exactly.

namespace polyface::io {

using nlohmann::json;

inline Rational rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw std::invalid_argument("expected a rational string, got " + j.dump());
}

inline json points_to_json(const geometry::VPolytope& v) {
    json pts = json::array();
    for (const auto& p : v.points) {
        json row = json::array();
        for (const auto& c : p) row.push_back(to_string(c));
        pts.push_back(row);
    }
    return {{"d", v.d}, {"points", pts}};
}

/// Accepts {"d": .., "points": [[..], ..]} or a bare array of points.
inline geometry::VPolytope points_from_json(const json& j) {
    const json& pts = j.is_array() ? j : j.at("points");
    geometry::VPolytope v;
    for (const auto& row : pts) {
        geometry::Point p;
        for (const auto& c : row) p.push_back(rational_from_json(c));
        v.points.push_back(std::move(p));
    }
    v.d = j.is_object() && j.contains("d") ? j.at("d").get<int>()
                                            : (v.points.empty() ? 0 : static_cast<int>(v.points[0].size()));
    for (const auto& p : v.points)
        if (static_cast<int>(p.size()) != v.d)
            throw std::invalid_argument("point has " + std::to_string(p.size()) + " coordinates, expected " +
                                        std::to_string(v.d));
    return v;
}

inline json diagram_to_json(const gale::GaleDiagram2D& g) {
    json dirs = json::array();
    for (const auto& z : g.dirs) dirs.push_back({to_string(z.x), to_string(z.y)});
    return {{"d", g.d}, {"origin_count", g.origin_count}, {"dirs", dirs}};
}

inline gale::GaleDiagram2D diagram_from_json(const json& j) {
    gale::GaleDiagram2D g;
    g.d = j.at("d").get<int>();
    g.origin_count = j.value("origin_count", 0);
    for (const auto& z : j.at("dirs")) {
        if (!z.is_array() || z.size() != 2) throw std::invalid_argument("each dir needs two coordinates");
        g.dirs.push_back({rational_from_json(z[0]), rational_from_json(z[1])});
    }
    return g;
}

inline json fvector_to_json(const FVector& f) {
    json out = json::array();
    for (const auto& c : f.counts) out.push_back(to_string(c));
    return out;
}

}  // namespace polyface::io
