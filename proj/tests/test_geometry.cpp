#include <gtest/gtest.h>

#include "polyface/constructors.hpp"
#include "polyface/geometry.hpp"
#include "polyface/isomorphism.hpp"
#include "polyface/lattice.hpp"

using namespace polyface;
using namespace polyface::geometry;

TEST(Hull, Simplex) {
    for (int d = 1; d <= 5; ++d) {
        const auto h = hull_incidence(simplex_points(d));
        EXPECT_TRUE(is_isomorphic(h.polytope, build::simplex(d)));
        EXPECT_TRUE(h.non_vertices.empty());
    }
}

TEST(Hull, PentasmAndSigma) {
    for (int d = 3; d <= 5; ++d)
        EXPECT_TRUE(is_isomorphic(hull_incidence(pentasm_points(d)).polytope, build::pentasm(d))) << d;
    EXPECT_TRUE(is_isomorphic(hull_incidence(sigma3_points()).polytope, build::sigma3()));
    EXPECT_FALSE(is_isomorphic(hull_incidence(sigma3_points()).polytope, build::pentasm(3)));
}

TEST(Hull, CubeProductAndCyclic) {
    EXPECT_TRUE(is_isomorphic(hull_incidence(cube_points(3)).polytope, build::cube(3)));
    EXPECT_TRUE(is_isomorphic(hull_incidence(product_points(simplex_points(2), simplex_points(2))).polytope,
                              build::delta(2, 2)));
    for (int n = 5; n <= 8; ++n)
        EXPECT_TRUE(is_isomorphic(hull_incidence(moment_curve_points(n, 4)).polytope, build::cyclic(n, 4))) << n;
    EXPECT_TRUE(is_isomorphic(hull_incidence(pyramid_points(cube_points(2))).polytope,
                              build::pyramid(build::polygon(4))));
    EXPECT_TRUE(is_isomorphic(hull_incidence(bipyramid_points(simplex_points(2))).polytope,
                              build::bipyramid(build::simplex(2))));
}

TEST(Hull, ReportsNonVertices) {
    VPolytope sq = cube_points(2);
    sq.points.push_back(make_point({0, 0}));  // duplicate
    sq.points.push_back(Point{Rational(1, 2), Rational(1, 2)});  // interior
    sq.points.push_back(Point{Rational(1, 2), Rational(0)});  // on an edge
    const auto h = hull_incidence(sq);
    EXPECT_EQ(h.polytope.num_vertices(), 4);
    EXPECT_EQ(h.non_vertices.size(), 3U);
    EXPECT_EQ(h.vertex_points.size(), 4U);
}

TEST(Hull, FacetPlanesSupport) {
    const auto v = pentasm_points(4);
    const auto h = hull_incidence(v);
    const auto verts = vertex_coordinates(v, h);
    for (std::size_t i = 0; i < h.facet_planes.size(); ++i)
        for (std::size_t j = 0; j < verts.size(); ++j) {
            const auto pos = position(verts[j], h.facet_planes[i]);
            EXPECT_EQ(pos == Position::on, h.polytope.facets()[i].contains(static_cast<int>(j)));
            EXPECT_NE(pos, Position::beyond);
        }
}

TEST(Hull, RejectsDegenerate) {
    VPolytope flat{3, {make_point({0, 0, 0}), make_point({1, 0, 0}), make_point({0, 1, 0}), make_point({1, 1, 0})}};
    EXPECT_THROW(hull_incidence(flat), DegenerateInput);
}

TEST(Polar, ReversesFVector) {
    for (const auto& v : {centered(pentasm_points(4)), centered(cube_points(3)), centered(sigma3_points()),
                          centered(moment_curve_points(7, 4))}) {
        const auto p = hull_incidence(v).polytope;
        const auto q = hull_incidence(polar_dual(v)).polytope;
        EXPECT_EQ(f_vector(q), f_vector(p).reversed());
        EXPECT_TRUE(is_isomorphic(q, dual_incidence(p)));
    }
    EXPECT_THROW(polar_dual(cube_points(3)), OriginNotInterior);
}

TEST(Slice, VertexTruncationMatchesCombinatorial) {
    const auto v = product_points(simplex_points(2), simplex_points(2));
    const auto h = hull_incidence(v);
    for (int i = 0; i < h.polytope.num_vertices(); ++i) {
        const auto cut = hull_incidence(truncate_face(v, VertexSet{i})).polytope;
        EXPECT_TRUE(is_isomorphic(cut, build::truncate_simple_vertex(h.polytope, i)));
    }
}

TEST(Slice, Errors) {
    const auto sq = cube_points(2);
    EXPECT_THROW(slice(sq, Hyperplane{make_point({1, 0}), Rational(1)}), VertexOnHyperplane);
    EXPECT_THROW(slice(sq, Hyperplane{make_point({1, 0}), Rational(5)}), NoIntersection);
    EXPECT_THROW(face_truncation_plane(sq, VertexSet{0, 3}), DomainError);
}

TEST(VertexFigure, SimpleVertexGivesSimplex) {
    const auto v = pentasm_points(4);
    const auto h = hull_incidence(v);
    const auto prof = vertex_profile(h.polytope);
    for (int i = 0; i < h.polytope.num_vertices(); ++i) {
        const auto fig = hull_incidence(vertex_figure(v, i)).polytope;
        EXPECT_EQ(fig.num_vertices(), prof.degrees[static_cast<std::size_t>(i)]);
        if (prof.simple_flags[static_cast<std::size_t>(i)]) EXPECT_TRUE(is_isomorphic(fig, build::simplex(3)));
    }
}
