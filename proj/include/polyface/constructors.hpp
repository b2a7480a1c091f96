#pragma once

#include <string>
#include <vector>

#include "polyface/errors.hpp"
#include "polyface/geometry.hpp"
#include "polyface/incidence.hpp"
#include "polyface/lattice.hpp"

// Combinatorial builders. Each documents its vertex numbering so that tests and reports
// can address individual vertices.

namespace polyface::build {

/// Vertices 0..d; facet i omits vertex i.
inline IncidencePolytope simplex(int d) {
    if (d < 0) throw DomainError("simplex: need d >= 0");
    const VertexSet all = VertexSet::range(d + 1);
    std::vector<VertexSet> facets;
    for (int v = 0; v <= d; ++v) {
        VertexSet f = all;
        f.erase(v);
        facets.push_back(f);
    }
    return IncidencePolytope(d, d + 1, std::move(facets));
}

inline IncidencePolytope segment() { return simplex(1); }

/// t-fold pyramid; apexes get indices n, n+1, ..., n+t-1.
inline IncidencePolytope pyramid(const IncidencePolytope& p, int t = 1) {
    if (t < 0) throw DomainError("pyramid: need t >= 0");
    IncidencePolytope cur = p;
    for (int fold = 0; fold < t; ++fold) {
        const int apex = cur.num_vertices();
        std::vector<VertexSet> facets{cur.vertices()};
        for (VertexSet f : cur.facets()) {
            f.insert(apex);
            facets.push_back(f);
        }
        cur = IncidencePolytope(cur.dim() + 1, apex + 1, std::move(facets));
    }
    return cur;
}

/// Vertex (i, j) of P x Q gets index i * n_Q + j. Facets are F x V(Q) and V(P) x G.
inline IncidencePolytope product(const IncidencePolytope& p, const IncidencePolytope& q) {
    if (p.dim() == 0) return q;
    if (q.dim() == 0) return p;
    const int nq = q.num_vertices();
    auto lift = [&](VertexSet ps, VertexSet qs) {
        VertexSet out;
        for (int i : ps.elements())
            for (int j : qs.elements()) out.insert(i * nq + j);
        return out;
    };
    std::vector<VertexSet> facets;
    for (VertexSet f : p.facets()) facets.push_back(lift(f, q.vertices()));
    for (VertexSet g : q.facets()) facets.push_back(lift(p.vertices(), g));
    return IncidencePolytope(p.dim() + q.dim(), p.num_vertices() * nq, std::move(facets));
}

inline IncidencePolytope prism(const IncidencePolytope& p) { return product(p, segment()); }

/// Product of d segments.
inline IncidencePolytope cube(int d) {
    if (d < 1) throw DomainError("cube: need d >= 1");
    IncidencePolytope out = segment();
    for (int i = 1; i < d; ++i) out = product(out, segment());
    return out;
}

/// Apexes n (first) and n+1 (second); facets F+a and F+b.
inline IncidencePolytope bipyramid(const IncidencePolytope& p) {
    const int a = p.num_vertices();
    const int b = a + 1;
    std::vector<VertexSet> facets;
    for (VertexSet f : p.facets()) {
        VertexSet fa = f;
        fa.insert(a);
        VertexSet fb = f;
        fb.insert(b);
        facets.push_back(fa);
        facets.push_back(fb);
    }
    return IncidencePolytope(p.dim() + 1, a + 2, std::move(facets));
}

/// Vertices of P keep their indices, vertex j of Q becomes n_P + j.
/// Facets are F + V(Q) and V(P) + G.
inline IncidencePolytope free_join(const IncidencePolytope& p, const IncidencePolytope& q) {
    const int np = p.num_vertices();
    auto shift = [np](VertexSet s) { return VertexSet(s.bits() << np); };
    VertexSet::check_size(np + q.num_vertices());
    std::vector<VertexSet> facets;
    for (VertexSet f : p.facets()) facets.push_back(f | shift(q.vertices()));
    for (VertexSet g : q.facets()) facets.push_back(p.vertices() | shift(g));
    return IncidencePolytope(p.dim() + q.dim() + 1, np + q.num_vertices(), std::move(facets));
}

/// Cyclic polytope C(n, d) via the evenness condition; vertex i is the (i+1)-th point on
/// the moment curve.
inline IncidencePolytope cyclic(int n, int d) {
    if (d < 2 || n <= d) throw DomainError("cyclic: need n > d >= 2");
    if (n > 24) throw DomainError("cyclic: n <= 24 supported");
    std::vector<VertexSet> facets;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const VertexSet s(mask);
        if (s.size() != d) continue;
        bool even = true;
        for (int i = 0; i < n && even; ++i) {
            if (s.contains(i)) continue;
            int between = 0;
            for (int j = i + 1; j < n; ++j) {
                if (!s.contains(j)) {
                    if (between % 2 != 0) even = false;
                    break;
                }
                ++between;
            }
        }
        if (even) facets.push_back(s);
    }
    return IncidencePolytope(d, n, std::move(facets));
}

inline IncidencePolytope polygon(int n) { return cyclic(n, 2); }

/// M(s, t): t-fold pyramid over the simplicial s-prism. The prism comes first
/// (vertex 2i + j is corner i of the simplex at end j of the segment), then the apexes.
inline IncidencePolytope triplex(int s, int t) {
    if (s < 1 || t < 0) throw DomainError("triplex: need s >= 1, t >= 0");
    return pyramid(product(simplex(s - 1), segment()), t);
}

/// t-fold pyramid over Delta(r, s) = simplex(r) x simplex(s).
inline IncidencePolytope delta(int r, int s, int t = 0) {
    if (r < 1 || s < 1 || t < 0) throw DomainError("delta: need r,s >= 1, t >= 0");
    return pyramid(product(simplex(r), simplex(s)), t);
}

/// Cuts off the simple vertex v. The remaining vertices keep their order (indices above v
/// shift down by one); the d new vertices follow, ordered by the neighbour of v whose edge
/// they lie on.
inline IncidencePolytope truncate_simple_vertex(const IncidencePolytope& p, int v) {
    if (v < 0 || v >= p.num_vertices()) throw DomainError("truncate: vertex index out of range");
    const auto lattice = enumerate_faces(p);
    const auto profile = vertex_profile(p, lattice);
    if (!profile.simple_flags[static_cast<std::size_t>(v)])
        throw NotSimpleVertex("vertex " + std::to_string(v) + " is not simple");

    std::vector<int> neighbours;
    for (auto [a, b] : edges(lattice)) {
        if (a == v) neighbours.push_back(b);
        if (b == v) neighbours.push_back(a);
    }
    std::sort(neighbours.begin(), neighbours.end());
    const int n = p.num_vertices();
    auto relabel = [v](int w) { return w < v ? w : w - 1; };
    auto new_vertex = [&](int w) {
        const auto it = std::find(neighbours.begin(), neighbours.end(), w);
        return n - 1 + static_cast<int>(it - neighbours.begin());
    };

    std::vector<VertexSet> facets;
    VertexSet cap;
    for (int w : neighbours) cap.insert(new_vertex(w));
    facets.push_back(cap);
    for (VertexSet f : p.facets()) {
        VertexSet g;
        for (int w : f.elements())
            if (w != v) g.insert(relabel(w));
        if (f.contains(v))
            for (int w : neighbours)
                if (f.contains(w)) g.insert(new_vertex(w));
        facets.push_back(g);
    }
    return IncidencePolytope(p.dim(), n - 1 + p.dim(), std::move(facets));
}

/// Index of u_i (1 <= i <= d) in pentasm(d).
inline int pentasm_u(int i) { return i - 1; }
/// Index of v_j (0 <= j <= d) in pentasm(d).
inline int pentasm_v(int d, int j) { return d + j; }

/// The d-pentasm from its explicit facet list. Vertices u_1..u_d are 0..d-1 and
/// v_0..v_d are d..2d. Facets: for 3 <= i <= d everything but u_i, v_i (lower pentasms);
/// everything but u_1, v_1, v_0 and everything but u_2, v_2, v_0 (prisms); all u_i, all v_j
/// but v_1, all v_j but v_2 (simplices).
inline IncidencePolytope pentasm(int d) {
    if (d < 3) throw DomainError("pentasm: need d >= 3");
    const int n = 2 * d + 1;
    const VertexSet all = VertexSet::range(n);
    auto without = [&](std::initializer_list<int> drop) {
        VertexSet s = all;
        for (int w : drop) s.erase(w);
        return s;
    };
    std::vector<VertexSet> facets;
    for (int i = 3; i <= d; ++i) facets.push_back(without({pentasm_u(i), pentasm_v(d, i)}));
    facets.push_back(without({pentasm_u(1), pentasm_v(d, 1), pentasm_v(d, 0)}));
    facets.push_back(without({pentasm_u(2), pentasm_v(d, 2), pentasm_v(d, 0)}));
    VertexSet us;
    VertexSet vs;
    for (int i = 1; i <= d; ++i) us.insert(pentasm_u(i));
    for (int j = 0; j <= d; ++j) vs.insert(pentasm_v(d, j));
    facets.push_back(us);
    VertexSet no_v1 = vs;
    no_v1.erase(pentasm_v(d, 1));
    VertexSet no_v2 = vs;
    no_v2.erase(pentasm_v(d, 2));
    facets.push_back(no_v1);
    facets.push_back(no_v2);
    return IncidencePolytope(d, n, std::move(facets));
}

/// The d-pentasm as the truncation of simple vertex 0 of M(2, d-2).
inline IncidencePolytope pentasm_by_truncation(int d) {
    if (d < 3) throw DomainError("pentasm: need d >= 3");
    return truncate_simple_vertex(triplex(2, d - 2), 0);
}

/// CP(l, d): truncation of a simple apex of the (d-l)-fold pyramid over the bipyramid over
/// an (l-1)-simplex. Before truncation the simplex is 0..l-1, the bipyramid apexes are l
/// (kept, called v_0) and l+1 (cut), and the pyramid apexes follow.
inline IncidencePolytope capped_prism(int l, int d) {
    if (l < 3 || l > d) throw DomainError("capped_prism: need 3 <= l <= d");
    return truncate_simple_vertex(pyramid(bipyramid(simplex(l - 1)), d - l), l + 1);
}

/// Sigma(3), computed once from its coordinate list; vertices follow the list order
/// 0, e1, e1+e3, e2, e2+e3, e1+e2, e1+e2+2e3.
inline IncidencePolytope sigma3() {
    static const IncidencePolytope cached = geometry::hull_incidence(geometry::sigma3_points()).polytope;
    return cached;
}

}  // namespace polyface::build
