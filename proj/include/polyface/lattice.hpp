#pragma once

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "polyface/errors.hpp"
#include "polyface/fvector.hpp"
#include "polyface/incidence.hpp"

namespace polyface {

/// All faces of a d-polytope graded by dimension -1..d. Each face is its vertex set.
class FaceLattice {
public:
    FaceLattice(int d, int n, std::vector<std::vector<VertexSet>> faces_by_rank)
        : d_(d), n_(n), faces_(std::move(faces_by_rank)) {}

    int dim() const { return d_; }
    int num_vertices() const { return n_; }

    /// Faces of dimension k, -1 <= k <= d, in increasing bitmask order.
    const std::vector<VertexSet>& faces(int k) const {
        return faces_.at(static_cast<std::size_t>(k + 1));
    }
    std::size_t size() const {
        std::size_t total = 0;
        for (const auto& level : faces_) total += level.size();
        return total;
    }
    std::vector<VertexSet> all_faces() const {
        std::vector<VertexSet> out;
        for (const auto& level : faces_) out.insert(out.end(), level.begin(), level.end());
        return out;
    }

private:
    int d_;
    int n_;
    std::vector<std::vector<VertexSet>> faces_;
};

/// Closes the facet sets under intersection and ranks each face by its longest chain to
/// the top. Throws NonPolytopalInput unless the empty face gets rank -1 and every cover
/// relation raises the rank by exactly one.
inline FaceLattice enumerate_faces(const IncidencePolytope& p) {
    const VertexSet top = p.vertices();
    std::unordered_set<VertexSet> seen{top};
    std::deque<VertexSet> queue{top};
    while (!queue.empty()) {
        const VertexSet face = queue.front();
        queue.pop_front();
        for (VertexSet facet : p.facets()) {
            const VertexSet meet = face & facet;
            if (seen.insert(meet).second) queue.push_back(meet);
        }
    }
    if (!seen.contains(VertexSet{}))
        throw NonPolytopalInput("facets have a common vertex; the empty face is missing");

    std::vector<VertexSet> order(seen.begin(), seen.end());
    std::sort(order.begin(), order.end(), [](VertexSet a, VertexSet b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });

    // covers[x] = minimal faces strictly above x, found as closures of x + one vertex.
    std::unordered_map<VertexSet, std::vector<VertexSet>> covers;
    std::unordered_map<VertexSet, int> height;  // longest chain length up to the top
    for (VertexSet face : order) {
        std::vector<VertexSet> up;
        for (int v = 0; v < p.num_vertices(); ++v) {
            if (face.contains(v)) continue;
            VertexSet grown = face;
            grown.insert(v);
            const VertexSet c = p.closure(grown);
            if (std::find(up.begin(), up.end(), c) == up.end()) up.push_back(c);
        }
        std::vector<VertexSet> minimal;
        for (VertexSet c : up) {
            bool is_min = true;
            for (VertexSet other : up)
                if (other != c && other.subset_of(c)) is_min = false;
            if (is_min) minimal.push_back(c);
        }
        int h = 0;
        for (VertexSet c : minimal) h = std::max(h, height.at(c) + 1);
        height[face] = h;
        covers[face] = std::move(minimal);
    }

    const int d = p.dim();
    auto rank = [&](VertexSet f) { return d - height.at(f); };
    if (rank(VertexSet{}) != -1)
        throw NonPolytopalInput("longest chain from the empty face has length " +
                                std::to_string(height.at(VertexSet{})) + ", expected " +
                                std::to_string(d + 1));
    for (const auto& [face, above] : covers)
        for (VertexSet c : above)
            if (rank(c) != rank(face) + 1)
                throw NonPolytopalInput("lattice is not graded at face " + to_string(face));

    std::vector<std::vector<VertexSet>> by_rank(static_cast<std::size_t>(d + 2));
    for (VertexSet face : order) by_rank[static_cast<std::size_t>(rank(face) + 1)].push_back(face);
    for (auto& level : by_rank) std::sort(level.begin(), level.end());
    return FaceLattice(d, p.num_vertices(), std::move(by_rank));
}

inline FVector f_vector(const FaceLattice& lattice) {
    std::vector<Integer> counts;
    for (int k = 0; k < lattice.dim(); ++k) counts.emplace_back(lattice.faces(k).size());
    return FVector(lattice.dim(), std::move(counts));
}

inline FVector f_vector(const IncidencePolytope& p) { return f_vector(enumerate_faces(p)); }

/// Transposes the incidences: vertex i of the dual is facet i of `p` (in its stored order)
/// and each vertex v of `p` becomes the dual facet {i : v in facet i}.
inline IncidencePolytope dual_incidence(const IncidencePolytope& p, bool check_lattice = false) {
    std::vector<VertexSet> facets;
    for (int v = 0; v < p.num_vertices(); ++v) {
        VertexSet s;
        for (int i = 0; i < p.num_facets(); ++i)
            if (p.facets()[static_cast<std::size_t>(i)].contains(v)) s.insert(i);
        facets.push_back(s);
    }
    IncidencePolytope dual(p.dim(), p.num_facets(), std::move(facets));
    if (check_lattice) (void)enumerate_faces(dual);
    return dual;
}

struct VertexProfile {
    std::vector<int> degrees;
    std::vector<int> facet_counts;
    std::vector<bool> simple_flags;
    std::vector<bool> pyramidal_flags;
    std::vector<std::pair<int, int>> missing_edges;  // (u, v) with u < v

    int num_simple() const {
        return static_cast<int>(std::count(simple_flags.begin(), simple_flags.end(), true));
    }
};

inline std::vector<std::pair<int, int>> edges(const FaceLattice& lattice) {
    std::vector<std::pair<int, int>> out;
    for (VertexSet e : lattice.faces(1)) {
        const auto ends = e.elements();
        out.emplace_back(ends.at(0), ends.at(1));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Per-vertex degree, simplicity and pyramidality. Simplicity is computed both from the
/// edge degree and from the facet count; a disagreement means the input is not a polytope.
inline VertexProfile vertex_profile(const IncidencePolytope& p, const FaceLattice& lattice) {
    const int n = p.num_vertices();
    const int d = p.dim();
    VertexProfile out;
    out.degrees.assign(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<bool>> adjacent(static_cast<std::size_t>(n),
                                            std::vector<bool>(static_cast<std::size_t>(n)));
    for (auto [u, v] : edges(lattice)) {
        ++out.degrees[static_cast<std::size_t>(u)];
        ++out.degrees[static_cast<std::size_t>(v)];
        adjacent[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
    }
    for (int v = 0; v < n; ++v) {
        VertexSet single;
        single.insert(v);
        const int in_facets = static_cast<int>(p.facets_containing(single).size());
        const bool simple_by_degree = out.degrees[static_cast<std::size_t>(v)] == d;
        if (simple_by_degree != (in_facets == d))
            throw NonPolytopalInput("vertex " + std::to_string(v) +
                                    ": degree and facet count disagree on simplicity");
        out.facet_counts.push_back(in_facets);
        out.simple_flags.push_back(simple_by_degree);

        VertexSet others = p.vertices();
        others.erase(v);
        int avoiding = 0;
        bool base_is_rest = false;
        for (VertexSet f : p.facets())
            if (!f.contains(v)) {
                ++avoiding;
                base_is_rest = (f == others);
            }
        out.pyramidal_flags.push_back(avoiding == 1 && base_is_rest);
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!adjacent[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)])
                out.missing_edges.emplace_back(u, v);
    return out;
}

inline VertexProfile vertex_profile(const IncidencePolytope& p) {
    return vertex_profile(p, enumerate_faces(p));
}

}  // namespace polyface
