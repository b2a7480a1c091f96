#include <gtest/gtest.h>

#include "oracles.hpp"
#include "polyface/constructors.hpp"
#include "polyface/isomorphism.hpp"
#include "polyface/lattice.hpp"

using namespace polyface;

TEST(VertexSet, BasicOps) {
    VertexSet a{0, 2, 5};
    VertexSet b{2, 3};
    EXPECT_EQ((a & b), VertexSet{2});
    EXPECT_EQ((a | b).size(), 4);
    EXPECT_EQ((a - b), (VertexSet{0, 5}));
    EXPECT_TRUE(VertexSet{2}.subset_of(a));
    EXPECT_EQ(VertexSet::range(64).size(), 64);
    EXPECT_THROW(VertexSet::range(65), std::length_error);
    EXPECT_EQ(to_string(a), "{0,2,5}");
}

TEST(IncidencePolytope, RejectsBrokenInput) {
    EXPECT_THROW(IncidencePolytope(2, 3, {VertexSet{0, 1}, VertexSet{1, 2}}), NonPolytopalInput);  // too few facets
    EXPECT_THROW(IncidencePolytope(2, 3, {VertexSet{0, 1}, VertexSet{1, 2}, VertexSet{0, 1, 2}}),
                 NonPolytopalInput);  // not an antichain
    EXPECT_THROW(IncidencePolytope(2, 4, {VertexSet{0, 1}, VertexSet{1, 2}, VertexSet{2, 0}}),
                 NonPolytopalInput);  // vertex 3 in no facet
}

TEST(EnumerateFaces, PaperTables) {
    EXPECT_EQ(f_vector(build::simplex(3)), (FVector{4, 6, 4}));
    EXPECT_EQ(f_vector(build::pentasm(4)), (FVector{9, 19, 17, 7}));
    EXPECT_EQ(f_vector(build::delta(2, 2, 0)), (FVector{9, 18, 15, 6}));
    EXPECT_EQ(f_vector(build::simplex(5)), (FVector{6, 15, 20, 15, 6}));
    EXPECT_EQ(f_vector(build::pentasm(5)), (FVector{11, 29, 36, 24, 8}));
}

TEST(EnumerateFaces, CappedPrismCounts) {
    const FVector f = f_vector(build::capped_prism(3, 4));
    EXPECT_EQ(f[0], 9);
    EXPECT_EQ(f[1], 20);
    EXPECT_EQ(f[3], 8);
}

TEST(EnumerateFaces, MatchesSubfamilyOracle) {
    for (const auto& p : {build::pentasm(4), build::delta(2, 2), build::cube(3), build::sigma3(),
                          build::capped_prism(3, 4), build::cyclic(7, 4), build::triplex(3, 2)}) {
        const auto lattice = enumerate_faces(p);
        std::set<std::uint64_t> mine;
        for (VertexSet f : lattice.all_faces()) mine.insert(f.bits());
        EXPECT_EQ(mine, oracle::faces_by_subfamilies(p));
    }
}

TEST(EnumerateFaces, RejectsWrongDimension) {
    // Valid incidences paired with the wrong dimension give chains of the wrong length.
    const auto cube = build::cube(3);
    EXPECT_THROW((void)enumerate_faces(IncidencePolytope(2, 8, cube.facets())), NonPolytopalInput);
    const auto pm = build::pentasm(4);
    EXPECT_THROW((void)enumerate_faces(IncidencePolytope(3, 9, pm.facets())), NonPolytopalInput);
}

TEST(EulerResidual, Examples) {
    EXPECT_EQ(euler_residual(FVector{7, 11, 6}), 0);
    EXPECT_EQ(euler_residual(FVector{4, 6, 4}), 0);
    EXPECT_EQ(euler_residual(FVector{9, 20, 18, 7}), 0);
    EXPECT_NE(euler_residual(FVector{9, 20, 18, 8}), 0);
}

TEST(Dual, Examples) {
    for (int d = 2; d <= 6; ++d) EXPECT_TRUE(is_isomorphic(dual_incidence(build::simplex(d)), build::simplex(d)));
    // reversal of (9,19,17,7), confirmed by enumerating the dual
    EXPECT_EQ(f_vector(dual_incidence(build::pentasm(4))), (FVector{7, 17, 19, 9}));
    EXPECT_EQ(f_vector(dual_incidence(build::sigma3())), (FVector{6, 11, 7}));
    EXPECT_NO_THROW((void)dual_incidence(build::cube(4), true));
}

TEST(VertexProfile, Pentasm) {
    for (int d = 4; d <= 7; ++d) {
        const auto prof = vertex_profile(build::pentasm(d));
        EXPECT_EQ(prof.num_simple(), d + 3) << d;
        EXPECT_EQ(std::count(prof.degrees.begin(), prof.degrees.end(), d + 1), d - 2) << d;
        EXPECT_EQ(std::count(prof.degrees.begin(), prof.degrees.end(), d), d + 3) << d;
    }
}

TEST(VertexProfile, PyramidApex) {
    const auto prof = vertex_profile(build::pyramid(build::simplex(2), 1));
    EXPECT_TRUE(prof.pyramidal_flags[3]);
    EXPECT_EQ(prof.degrees[3], 3);
    const auto sq = vertex_profile(build::pyramid(build::polygon(4)));
    EXPECT_TRUE(sq.pyramidal_flags[4]);
    EXPECT_FALSE(sq.pyramidal_flags[0]);
    EXPECT_FALSE(sq.simple_flags[4]);
}

TEST(VertexProfile, CappedPrismBeforeTruncation) {
    // The polytope cut to make capped_prism(3, 5): two of its vertices are simple.
    const auto p = build::pyramid(build::bipyramid(build::simplex(2)), 2);
    EXPECT_EQ(vertex_profile(p).num_simple(), 2);
}

TEST(VertexProfile, MissingEdgesOfPrism) {
    const auto prof = vertex_profile(build::triplex(3, 0));
    EXPECT_EQ(prof.missing_edges.size(), 6U);
}

TEST(Isomorphism, Examples) {
    for (int d = 3; d <= 7; ++d) EXPECT_TRUE(is_isomorphic(build::pentasm_by_truncation(d), build::pentasm(d))) << d;
    EXPECT_TRUE(is_isomorphic(build::simplex(4), build::pyramid(build::simplex(3), 1)));
    EXPECT_FALSE(is_isomorphic(build::delta(2, 2, 0), build::pentasm(4)));
    EXPECT_FALSE(is_isomorphic(build::pentasm(3), build::sigma3()));
    EXPECT_TRUE(is_isomorphic(build::prism(build::simplex(2)), build::triplex(3, 0)));
}

TEST(Isomorphism, RelabelledCopies) {
    // Reversing vertex labels gives an isomorphic copy; the matcher must find it.
    for (const auto& p : {build::pentasm(5), build::capped_prism(4, 5), build::cyclic(8, 4)}) {
        const int n = p.num_vertices();
        std::vector<VertexSet> flipped;
        for (VertexSet f : p.facets()) {
            VertexSet g;
            for (int v : f.elements()) g.insert(n - 1 - v);
            flipped.push_back(g);
        }
        EXPECT_TRUE(is_isomorphic(p, IncidencePolytope(p.dim(), n, flipped)));
    }
}

TEST(Isomorphism, Graphs) {
    EXPECT_TRUE(graphs_isomorphic(enumerate_faces(build::capped_prism(3, 5)), enumerate_faces(build::capped_prism(5, 5))));
    EXPECT_FALSE(is_isomorphic(build::capped_prism(3, 5), build::capped_prism(5, 5)));
    EXPECT_FALSE(graphs_isomorphic(enumerate_faces(build::pentasm(5)), enumerate_faces(build::capped_prism(3, 5))));
}
