#pragma once

#include <algorithm>
#include <concepts>
#include <functional>
#include <string>
#include <unordered_set>
#include <vector>

#include "polyface/constructors.hpp"
#include "polyface/corpus.hpp"
#include "polyface/errors.hpp"
#include "polyface/expr.hpp"
#include "polyface/formulas.hpp"
#include "polyface/gale2d.hpp"
#include "polyface/geometry.hpp"
#include "polyface/isomorphism.hpp"
#include "polyface/lattice.hpp"

// Named check suites. Each result is one (construction, k, expected, actual) comparison.

namespace polyface::suites {

struct CheckResult {
    std::string construction;
    int k = 0;
    std::string relation;  // how actual must compare to expected: "=", ">", ">=", "<="
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct SuiteReport {
    std::string name;
    std::vector<CheckResult> results;

    bool passed() const {
        return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
    }
    std::vector<CheckResult> failures() const {
        std::vector<CheckResult> out;
        for (const auto& r : results)
            if (!r.pass) out.push_back(r);
        return out;
    }
};

namespace detail {

struct Recorder {
    std::vector<CheckResult>& out;

    template <class A, class E>
    void cmp(const std::string& what, int k, const std::string& rel, const A& actual, const E& expected) {
        bool ok = false;
        if (rel == "=") {
            ok = actual == expected;
        } else if constexpr (requires { actual < expected; }) {
            if (rel == ">") ok = actual > expected;
            else if (rel == ">=") ok = actual >= expected;
            else if (rel == "<=") ok = actual <= expected;
        }
        out.push_back({what, k, rel, str(expected), str(actual), ok});
    }
    void flag(const std::string& what, int k, bool ok, const std::string& expected = "true") {
        out.push_back({what, k, "=", expected, ok ? expected : "false", ok});
    }

    static std::string str(const Integer& x) { return polyface::to_string(x); }
    template <std::integral T>
    static std::string str(T x) { return std::to_string(x); }
    static std::string str(const FVector& f) { return polyface::to_string(f); }
    static std::string str(const std::string& s) { return s; }
};

inline Integer fk(const FVector& f, int k) { return f[static_cast<std::size_t>(k)]; }

/// Simple polytopes (and their duals' sources) used as pyramid bases.
inline std::vector<std::string> simple_bases() {
    return {"polygon(6)",       "polygon(7)",         "polygon(9)",
            "cube(3)",          "prism(polygon(5))",  "prism(polygon(6))",
            "truncate(v=0, truncate(v=0, simplex(3)))",
            "cube(4)",          "delta(2, 2)",        "product(polygon(4), polygon(5))",
            "product(simplex(2), polygon(4))",        "dual(cyclic(7, 4))",
            "dual(cyclic(8, 4))", "truncate(v=0, delta(2, 2))",
            "prism(prism(simplex(2)))", "dual(cyclic(8, 5))", "truncate(v=0, cube(4))"};
}

inline FVector reversed_pentasm(int d) {
    std::vector<Integer> c;
    for (int k = d - 1; k >= 0; --k) c.push_back(formulas::pentasm_f(k, d));
    return FVector(d, std::move(c));
}

}  // namespace detail

inline void capped_vs_pentasm(std::vector<CheckResult>& out) {
    detail::Recorder rec{out};
    for (int d = 3; d <= 8; ++d)
        for (int l = 3; l <= d; ++l) {
            const std::string name = "capped_prism(" + std::to_string(l) + ", " + std::to_string(d) + ")";
            const FVector f = f_vector(build::capped_prism(l, d));
            rec.cmp(name, 0, "=", detail::fk(f, 0), Integer(2 * d + 1));
            rec.cmp(name, 1, "=", detail::fk(f, 1), Integer(d * d + d));
            rec.cmp(name, d - 1, "=", detail::fk(f, d - 1), Integer(d + l + 1));
            for (int k = 1; k <= d - 1; ++k)
                rec.cmp(name, k, ">", detail::fk(f, k), formulas::pentasm_f(k, d));
        }
    // Same graph for every l at fixed d.
    for (int d = 4; d <= 6; ++d) {
        const auto ref = enumerate_faces(build::capped_prism(3, d));
        for (int l = 4; l <= d; ++l)
            rec.flag("graph(capped_prism(" + std::to_string(l) + ", " + std::to_string(d) +
                         ")) ~ graph(capped_prism(3, " + std::to_string(d) + "))",
                     1, graphs_isomorphic(enumerate_faces(build::capped_prism(l, d)), ref));
    }
}

/// t-fold pyramids over simple polytopes with >= 2d+1 vertices and >= d+3 facets have
/// strictly more k-faces than the pentasm for 1 <= k <= d-2; simple ones also satisfy the
/// lower bound theorem.
inline void pyramid_over_simple(std::vector<CheckResult>& out) {
    detail::Recorder rec{out};
    for (const auto& base_text : detail::simple_bases()) {
        const IncidencePolytope base = expr::build(base_text);
        const auto prof = vertex_profile(base);
        rec.flag(base_text + " is simple", 0, prof.num_simple() == base.num_vertices());
        for (int t = 0; t <= 3; ++t) {
            const int d = base.dim() + t;
            const IncidencePolytope p = build::pyramid(base, t);
            if (d < 3 || p.num_vertices() < 2 * d + 1 || p.num_facets() < d + 3) continue;
            if (p.num_vertices() > 40) continue;
            const std::string name = "pyramid(t=" + std::to_string(t) + ", " + base_text + ")";
            const FVector f = f_vector(p);
            rec.cmp(name, 0, ">=", detail::fk(f, 0), formulas::pentasm_f(0, d));
            rec.cmp(name, d - 1, ">=", detail::fk(f, d - 1), formulas::pentasm_f(d - 1, d));
            for (int k = 1; k <= d - 2; ++k) rec.cmp(name, k, ">", detail::fk(f, k), formulas::pentasm_f(k, d));
            if (t == 0)
                for (int k = 0; k <= d - 2; ++k)
                    rec.cmp(name, k, ">=", detail::fk(f, k), formulas::simple_lbt(k, d, p.num_facets()));
        }
    }
}

inline void pentasm_tables(std::vector<CheckResult>& out) {
    detail::Recorder rec{out};
    const std::vector<std::pair<std::string, FVector>> table = {
        {"pentasm(3)", FVector{7, 11, 6}},
        {"pentasm(4)", FVector{9, 19, 17, 7}},
        {"pentasm(5)", FVector{11, 29, 36, 24, 8}},
        {"delta(2, 2)", FVector{9, 18, 15, 6}},
        {"pyramid(cube(3))", FVector{9, 20, 18, 7}},
        {"sigma3", FVector{7, 11, 6}},
        {"pyramid(delta(2, 2))", FVector{10, 27, 33, 21, 7}},
    };
    for (const auto& [text, expected] : table) rec.cmp(text, -1, "=", f_vector(expr::build(text)), expected);
    for (int d = 3; d <= 5; ++d)
        for (int k = 0; k < d; ++k)
            rec.cmp("pentasm_f(d=" + std::to_string(d) + ")", k, "=", formulas::pentasm_f(k, d),
                    table[static_cast<std::size_t>(d - 3)].second[static_cast<std::size_t>(k)]);
    for (int k = 0; k < 4; ++k)
        rec.cmp("delta_pyramid_f(2,2,0)", k, "=", formulas::delta_pyramid_f(k, {2, 2, 0}), table[3].second[static_cast<std::size_t>(k)]);
    rec.flag("pentasm(3) !~ sigma3", -1, !is_isomorphic(build::pentasm(3), build::sigma3()));
}

/// The five simple 4-polytopes with 7 facets, realized geometrically.
inline std::vector<std::pair<std::string, geometry::VPolytope>> bruckner_polytopes() {
    using namespace geometry;
    const VPolytope prism4 = product_points(simplex_points(3), simplex_points(1));
    const VPolytope d22 = product_points(simplex_points(2), simplex_points(2));
    return {
        {"simplicial 4-prism, vertex truncated", truncate_face(prism4, VertexSet{0})},
        {"delta(2,2), vertex truncated", truncate_face(d22, VertexSet{0})},
        {"square x triangle", product_points(cube_points(2), simplex_points(2))},
        {"delta(2,2), edge truncated", truncate_face(d22, VertexSet{0, 1})},
        {"polar of cyclic(7,4)", polar_dual(centered(moment_curve_points(7, 4)))},
    };
}

inline void min_facets(std::vector<CheckResult>& out) {
    detail::Recorder rec{out};
    for (long long f0 = 10; f0 <= 14; ++f0)
        rec.cmp("min_facets_4d(" + std::to_string(f0) + ")", 3, "=", formulas::min_facets_4d(f0), 7LL);
    // Independent form: smallest n whose dual cyclic 4-polytope has >= f0 vertices.
    for (long long f0 = 5; f0 <= 400; ++f0) {
        long long n = 5;
        while (formulas::cyclic4_facets(n) < f0) ++n;
        rec.cmp("min_facets_4d(" + std::to_string(f0) + ")", 3, "=", formulas::min_facets_4d(f0), n);
    }
    const Integer lbt = formulas::simple_lbt(0, 4, 7);
    rec.cmp("simple_lbt(0, 4, 7)", 0, "=", lbt, Integer(11));
    const std::vector<long long> expected_vertices = {11, 12, 12, 13, 14};
    const auto list = bruckner_polytopes();
    for (std::size_t i = 0; i < list.size(); ++i) {
        const auto hull = geometry::hull_incidence(list[i].second);
        const auto& p = hull.polytope;
        const auto prof = vertex_profile(p);
        rec.cmp(list[i].first, 0, "=", Integer(p.num_vertices()), Integer(expected_vertices[i]));
        rec.cmp(list[i].first, 3, "=", Integer(p.num_facets()), Integer(7));
        rec.flag(list[i].first + " is simple", 0, prof.num_simple() == p.num_vertices());
        rec.cmp(list[i].first, 0, ">=", Integer(p.num_vertices()), lbt);
        rec.cmp(list[i].first + ": min_facets_4d(f0)", 3, "=", formulas::min_facets_4d(p.num_vertices()), 7LL);
    }
}

inline void gale_six(std::vector<CheckResult>& out) {
    using namespace gale;
    detail::Recorder rec{out};
    const std::vector<Variant> all = {Variant::i, Variant::ii, Variant::iii, Variant::iv, Variant::v, Variant::vi};
    for (Variant tag : all)
        for (int d = 3; d <= 8; ++d) {
            const DiagramVariant var{tag, d};
            if (!compatible(var)) continue;
            const std::string name = "gale(" + to_string(tag) + ", " + std::to_string(d) + ")";
            const GaleDiagram2D g = figure2_diagram(var);
            rec.flag(name + " valid", -1, is_valid(g));
            const IncidencePolytope p = gale_faces(g);
            const FVector f = f_vector(p);
            rec.cmp(name + " missing edges", 1, "=", gale_missing_edges(g).size(), std::size_t{4});
            rec.cmp(name + " missing edges (lattice)", 1, "=", vertex_profile(p).missing_edges.size(), std::size_t{4});
            rec.cmp(name + " facets", d - 1, "=", p.num_facets(), expected_facets(var));
            rec.cmp(name + " euler", -1, "=", euler_residual(f), Integer(0));
            if (tag == Variant::ii) rec.cmp(name, -1, "=", f, detail::reversed_pentasm(d));
            if (tag == Variant::ii) rec.flag(name + " ~ dual(pentasm)", -1, is_isomorphic(p, dual_incidence(build::pentasm(d))));
            if (tag == Variant::i) rec.flag(name + " ~ dual(sigma3)", -1, is_isomorphic(p, dual_incidence(build::sigma3())));
            if (tag == Variant::vi) {
                const auto join = build::free_join(build::polygon(4), build::polygon(4));
                rec.cmp(name, -1, "=", f, f_vector(join).reversed());
                rec.flag(name + " ~ dual(free_join(polygon(4), polygon(4)))", -1, is_isomorphic(p, dual_incidence(join)));
            }
        }
}

inline void truncation(std::vector<CheckResult>& out) {
    detail::Recorder rec{out};
    const std::vector<std::string> sources = {
        "simplex(3)", "simplex(4)", "simplex(5)", "simplex(6)", "simplex(7)", "cube(3)", "cube(4)",
        "triplex(2, 1)", "triplex(2, 2)", "triplex(2, 3)", "triplex(2, 4)", "triplex(2, 5)",
        "triplex(3, 2)", "prism(polygon(5))", "delta(2, 2)", "delta(2, 3)", "pentasm(4)",
        "pentasm(5)", "bipyramid(simplex(3))", "capped_prism(3, 5)", "pyramid(prism(simplex(3)))"};
    for (const auto& text : sources) {
        const IncidencePolytope p = expr::build(text);
        const int d = p.dim();
        const auto prof = vertex_profile(p);
        const FVector before = f_vector(p);
        for (int v = 0; v < p.num_vertices(); ++v) {
            if (!prof.simple_flags[static_cast<std::size_t>(v)]) continue;
            const std::string name = "truncate(v=" + std::to_string(v) + ", " + text + ")";
            const FVector after = f_vector(build::truncate_simple_vertex(p, v));
            rec.cmp(name, 0, "=", detail::fk(after, 0) - detail::fk(before, 0), Integer(d - 1));
            for (int k = 1; k < d; ++k)
                rec.cmp(name, k, "=", detail::fk(after, k) - detail::fk(before, k), binom(d, k + 1));
        }
    }
    for (int d = 3; d <= 7; ++d)
        rec.flag("pentasm(" + std::to_string(d) + ") ~ truncate(v=0, triplex(2, " + std::to_string(d - 2) + "))",
                 -1, is_isomorphic(build::pentasm(d), build::pentasm_by_truncation(d)));

    // Geometric slice against the combinatorial cut, d <= 5.
    using namespace geometry;
    const std::vector<std::pair<std::string, VPolytope>> realized = {
        {"simplex(3)", simplex_points(3)},
        {"simplex(5)", simplex_points(5)},
        {"cube(3)", cube_points(3)},
        {"cube(4)", cube_points(4)},
        {"triplex(2, 2)", pyramid_points(pyramid_points(cube_points(2)))},
        {"triplex(3, 1)", pyramid_points(product_points(simplex_points(2), simplex_points(1)))},
        {"triplex(2, 3)", pyramid_points(pyramid_points(pyramid_points(cube_points(2))))},
        {"delta(2, 2)", product_points(simplex_points(2), simplex_points(2))},
        {"pentasm(4)", pentasm_points(4)},
    };
    for (const auto& [text, pts] : realized) {
        const auto hull = hull_incidence(pts);
        const auto prof = vertex_profile(hull.polytope);
        const VPolytope verts{pts.d, vertex_coordinates(pts, hull)};
        for (int v = 0; v < hull.polytope.num_vertices(); ++v) {
            if (!prof.simple_flags[static_cast<std::size_t>(v)]) continue;
            const auto cut = hull_incidence(truncate_face(verts, VertexSet{v}));
            rec.flag("slice(" + text + ", vertex " + std::to_string(v) + ") ~ truncate", -1,
                     is_isomorphic(cut.polytope, build::truncate_simple_vertex(hull.polytope, v)));
        }
    }
}

/// On polytopes with 2d+1 vertices, the number of k-faces meeting a sequence of r vertices
/// starting at v is at least xue_bound(k, d, deg v, r).
inline void xue(std::vector<CheckResult>& out) {
    detail::Recorder rec{out};
    std::vector<std::string> sources;
    for (int d = 3; d <= 7; ++d) sources.push_back("pentasm(" + std::to_string(d) + ")");
    for (int d = 4; d <= 6; ++d) sources.push_back("capped_prism(3, " + std::to_string(d) + ")");
    sources.push_back("capped_prism(5, 5)");
    sources.push_back("delta(2, 2)");
    sources.push_back("delta(2, 3, 1)");
    sources.push_back("truncate(v=0, triplex(3, 1))");
    for (const auto& text : sources) {
        const IncidencePolytope p = expr::build(text);
        const int d = p.dim();
        if (p.num_vertices() != 2 * d + 1) continue;
        const auto lattice = enumerate_faces(p);
        const auto prof = vertex_profile(p, lattice);
        for (int v = 0; v < p.num_vertices(); ++v) {
            const int deg = prof.degrees[static_cast<std::size_t>(v)];
            if (deg > 2 * (d - 1)) continue;
            for (int dir = 0; dir < 2; ++dir) {
                std::vector<int> seq{v};
                for (int i = 0; i < p.num_vertices(); ++i) {
                    const int w = dir == 0 ? i : p.num_vertices() - 1 - i;
                    if (w != v) seq.push_back(w);
                }
                for (int r = 1; r <= d; ++r) {
                    VertexSet s;
                    for (int i = 0; i < r; ++i) s.insert(seq[static_cast<std::size_t>(i)]);
                    for (int k = 2; k <= d - 1; ++k) {
                        long long touching = 0;
                        for (VertexSet f : lattice.faces(k))
                            if (!(f & s).empty()) ++touching;
                        const bool nonsimple = !prof.simple_flags[static_cast<std::size_t>(v)];
                        rec.cmp(text + " v=" + std::to_string(v) + " r=" + std::to_string(r) +
                                    (dir ? " desc" : " asc"),
                                k, ">=", Integer(touching), formulas::xue_bound(k, d, deg, r, nonsimple));
                    }
                }
            }
        }
    }
}

/// Invariants of one constructed polytope.
inline void polytope_properties(const std::string& name, const IncidencePolytope& p,
                                std::vector<CheckResult>& out) {
    detail::Recorder rec{out};
    const auto lattice = enumerate_faces(p);
    const FVector f = f_vector(lattice);
    const int d = p.dim();
    rec.cmp(name + " euler", -1, "=", euler_residual(f), Integer(0));

    std::unordered_set<VertexSet> faces;
    for (VertexSet x : lattice.all_faces()) faces.insert(x);
    const auto all = lattice.all_faces();
    bool closed = true;
    for (std::size_t i = 0; i < all.size() && closed; ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            if (!faces.contains(all[i] & all[j])) {
                closed = false;
                break;
            }
    rec.flag(name + " intersection-closed", -1, closed);

    // Graded: each face's maximal proper subfaces sit exactly one level below.
    bool graded = lattice.faces(-1).size() == 1 && lattice.faces(d).size() == 1;
    for (int k = 0; k <= d && graded; ++k)
        for (VertexSet x : lattice.faces(k)) {
            for (int j = -1; j < k - 1 && graded; ++j)
                for (VertexSet y : lattice.faces(j)) {
                    if (!y.subset_of(x)) continue;
                    bool covered = false;
                    for (VertexSet z : lattice.faces(j + 1))
                        if (y.subset_of(z) && z.subset_of(x)) {
                            covered = true;
                            break;
                        }
                    if (!covered) graded = false;
                }
            if (!graded) break;
        }
    rec.flag(name + " graded", -1, graded);

    bool singletons = true;
    for (VertexSet v : lattice.faces(0)) singletons = singletons && v.size() == 1;
    rec.flag(name + " vertices are singletons", 0, singletons && static_cast<int>(lattice.faces(0).size()) == p.num_vertices());

    if (d >= 2) {
        const auto prof = vertex_profile(p, lattice);
        long long degree_sum = 0;
        int odd = 0;
        for (int deg : prof.degrees) {
            degree_sum += deg;
            odd += deg % 2;
        }
        rec.cmp(name + " degree sum", 1, "=", Integer(degree_sum), 2 * detail::fk(f, 1));
        rec.flag(name + " odd-degree count even", 1, odd % 2 == 0);
        rec.cmp(name + " missing edges", 1, "=", Integer(prof.missing_edges.size()),
                binom(p.num_vertices(), 2) - detail::fk(f, 1));
    }
    for (int k = 0; k < d; ++k) rec.cmp(name + " f_k >= d+1", k, ">=", detail::fk(f, k), Integer(d + 1));
    rec.cmp(name + " dual", -1, "=", f_vector(dual_incidence(p)), f.reversed());
    const FVector pyr = f_vector(build::pyramid(p));
    for (int k = 1; k < d; ++k)
        rec.cmp(name + " pyramid recurrence", k, "=", detail::fk(pyr, k), detail::fk(f, k) + detail::fk(f, k - 1));
}

inline void binomial_identities(std::vector<CheckResult>& out) {
    detail::Recorder rec{out};
    bool id1 = true, id2 = true, id3 = true;
    for (int a = 0; a <= 60; ++a)
        for (int b = 0; b <= a; ++b) {
            id1 = id1 && (a - b) * binom(a, b) == a * binom(a - 1, b);
            if (a >= 1) id2 = id2 && binom(a, b) == binom(a - 1, b - 1) + binom(a - 1, b);
        }
    for (int d = 0; d <= 60; ++d)
        for (int k = 0; k <= d; ++k) {
            Integer sum = 0;
            for (int j = 0; j <= d; ++j) sum += binom(j, k);
            id3 = id3 && sum == binom(d + 1, k + 1);
        }
    rec.flag("(a-b) C(a,b) = a C(a-1,b), 0 <= b <= a <= 60", -1, id1);
    rec.flag("C(a,b) = C(a-1,b-1) + C(a-1,b), 0 <= b <= a <= 60", -1, id2);
    rec.flag("sum_j C(j,k) = C(d+1,k+1), 0 <= k <= d <= 60", -1, id3);
}

inline void properties(std::vector<CheckResult>& out) {
    for (const auto& e : corpus::build_all()) polytope_properties(e.expression, e.polytope, out);
    binomial_identities(out);
}

inline const std::vector<std::pair<std::string, std::function<void(std::vector<CheckResult>&)>>>& registry() {
    static const std::vector<std::pair<std::string, std::function<void(std::vector<CheckResult>&)>>> table = {
        {"capped-vs-pentasm", capped_vs_pentasm},
        {"pyramid-over-simple", pyramid_over_simple},
        {"pentasm-tables", pentasm_tables},
        {"min-facets", min_facets},
        {"gale-six", gale_six},
        {"truncation", truncation},
        {"xue-bound", xue},
        {"properties", properties},
    };
    return table;
}

inline std::vector<std::string> names() {
    std::vector<std::string> out;
    for (const auto& [n, fn] : registry()) out.push_back(n);
    return out;
}

inline SuiteReport run(const std::string& name) {
    for (const auto& [n, fn] : registry())
        if (n == name) {
            SuiteReport report{name, {}};
            fn(report.results);
            return report;
        }
    throw UnknownSuite("unknown suite '" + name + "'");
}

}  // namespace polyface::suites
