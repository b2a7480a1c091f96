#include <gtest/gtest.h>

#include "oracles.hpp"
#include "polyface/constructors.hpp"
#include "polyface/gale2d.hpp"
#include "polyface/isomorphism.hpp"
#include "polyface/lattice.hpp"

using namespace polyface;
using namespace polyface::gale;

namespace {

GaleDiagram2D prism_diagram(int d, int apexes) {
    return {d, apexes, {vec2(1, 0), vec2(-1, 0), vec2(0, 1), vec2(0, -1), vec2(1, 1), vec2(-1, -1)}};
}

std::vector<DiagramVariant> all_variants() {
    std::vector<DiagramVariant> out;
    for (Variant t : {Variant::i, Variant::ii, Variant::iii, Variant::iv, Variant::v, Variant::vi})
        for (int d = 3; d <= 7; ++d)
            if (compatible({t, d})) out.push_back({t, d});
    return out;
}

}  // namespace

TEST(Gale, ValidityCondition) {
    EXPECT_TRUE(is_valid(prism_diagram(3, 0)));
    // everything in an open halfplane
    EXPECT_FALSE(is_valid({3, 0, {vec2(1, 0), vec2(1, 1), vec2(1, -1), vec2(2, 1), vec2(1, 2), vec2(3, -1)}}));
    // nothing strictly below the x-axis
    EXPECT_FALSE(is_valid({3, 0, {vec2(1, 0), vec2(-1, 0), vec2(0, 1), vec2(1, 1), vec2(-1, 1), vec2(2, 1)}}));
    EXPECT_THROW(gale_faces({3, 0, {vec2(1, 0), vec2(1, 1), vec2(1, 2)}}), InvalidDiagram);
}

TEST(Gale, CofaceMatchesLpOracle) {
    std::vector<GaleDiagram2D> diagrams = {prism_diagram(3, 0), prism_diagram(4, 1)};
    for (const auto& v : all_variants()) diagrams.push_back(figure2_diagram(v));
    for (const auto& g : diagrams) {
        const int n = g.num_points();
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask)
            ASSERT_EQ(is_coface(g, VertexSet(mask)), oracle::coface(g, VertexSet(mask)))
                << to_string(VertexSet(mask));
    }
}

TEST(Gale, PrismAndTriplexes) {
    const auto prism = gale_faces(prism_diagram(3, 0));
    EXPECT_TRUE(is_isomorphic(prism, build::triplex(3, 0)));
    EXPECT_EQ(gale_missing_edges(prism_diagram(3, 0)).size(), 6U);
    EXPECT_TRUE(is_isomorphic(gale_faces(prism_diagram(4, 1)), build::triplex(3, 1)));
    EXPECT_TRUE(is_isomorphic(gale_faces(prism_diagram(5, 2)), build::triplex(3, 2)));
}

TEST(Gale, OriginPointsArePyramidalApexes) {
    const auto g = prism_diagram(5, 2);
    const auto p = gale_faces(g);
    const auto prof = vertex_profile(p);
    for (int v = 0; v < g.num_points(); ++v)
        EXPECT_EQ(prof.pyramidal_flags[static_cast<std::size_t>(v)], g.is_origin(v)) << v;
}

TEST(Gale, SixVariantsFourMissingEdges) {
    for (const auto& v : all_variants()) {
        const auto g = figure2_diagram(v);
        EXPECT_EQ(g.num_points(), v.d + 3);
        const auto p = gale_faces(g);
        EXPECT_EQ(p.num_facets(), expected_facets(v)) << to_string(v.tag) << v.d;
        EXPECT_EQ(gale_missing_edges(g).size(), 4U) << to_string(v.tag) << v.d;
        EXPECT_EQ(euler_residual(f_vector(p)), 0);
        // missing edges read off the diagram agree with the face lattice
        EXPECT_EQ(gale_missing_edges(g), vertex_profile(p).missing_edges);
    }
    EXPECT_EQ(f_vector(gale_faces(figure2_diagram({Variant::i, 3}))), (FVector{6, 11, 7}));
    EXPECT_EQ(f_vector(gale_faces(figure2_diagram({Variant::vi, 5}))), (FVector{8, 24, 34, 24, 8}));
    EXPECT_TRUE(is_isomorphic(gale_faces(figure2_diagram({Variant::vi, 5})),
                              build::free_join(build::polygon(4), build::polygon(4))));
    EXPECT_THROW(figure2_diagram({Variant::v, 5}), DomainError);
    EXPECT_THROW(figure2_diagram({Variant::i, 4}), DomainError);
}

TEST(Gale, VariantsPairwiseDistinct) {
    for (int d = 4; d <= 6; ++d) {
        std::vector<IncidencePolytope> ps;
        for (Variant t : {Variant::ii, Variant::iii, Variant::iv})
            ps.push_back(gale_faces(figure2_diagram({t, d})));
        for (std::size_t a = 0; a < ps.size(); ++a)
            for (std::size_t b = a + 1; b < ps.size(); ++b) EXPECT_FALSE(is_isomorphic(ps[a], ps[b]));
    }
}

TEST(Gale, DimensionThreeDegenerations) {
    // The one-diametral-pair and two-diametral-pair shapes still encode 3-polytopes, but
    // with five missing edges (tetragonal antiwedge) and six (simplicial prism).
    auto shape = [](Vec2 t, Vec2 x) {
        return GaleDiagram2D{3, 0, {t, vec2(-1, -4), vec2(0, -1), vec2(1, -4), x, vec2(0, 1)}};
    };
    const auto one = shape(vec2(-1, 4), vec2(1, 5));
    const auto two = shape(vec2(-1, 4), vec2(1, 4));
    ASSERT_TRUE(is_valid(one));
    ASSERT_TRUE(is_valid(two));
    EXPECT_EQ(gale_missing_edges(one).size(), 5U);
    EXPECT_EQ(gale_missing_edges(two).size(), 6U);
    EXPECT_TRUE(is_isomorphic(gale_faces(two), build::triplex(3, 0)));
    const auto antiwedge = gale_faces(one);
    EXPECT_EQ(f_vector(antiwedge), (FVector{6, 10, 6}));
    EXPECT_EQ(vertex_profile(antiwedge).pyramidal_flags, std::vector<bool>(6, false));
}

TEST(Contiguity, Definitions) {
    const Vec2 a = vec2(1, 0), b = vec2(0, 1);
    EXPECT_TRUE(on_short_arc(a, b, vec2(1, 1)));
    EXPECT_TRUE(on_short_arc(a, b, vec2(2, 0)));
    EXPECT_FALSE(on_short_arc(a, b, vec2(-1, 1)));
    EXPECT_FALSE(on_short_arc(a, b, vec2(-1, -1)));
    EXPECT_THROW(on_short_arc(a, -a, b), std::invalid_argument);
    EXPECT_TRUE(on_short_arc(a, vec2(3, 0), vec2(2, 0)));
    EXPECT_FALSE(on_short_arc(a, vec2(3, 0), vec2(2, 1)));
}

TEST(Contiguity, ColocatedAndDiametral) {
    GaleDiagram2D g{3, 0, {vec2(1, 0), vec2(2, 0), vec2(-1, 0), vec2(0, 1), vec2(0, -1), vec2(0, 1)}};
    EXPECT_TRUE(contiguous(g, 0, 1));   // co-located pair with nothing else there
    EXPECT_FALSE(contiguous(g, 0, 2));  // diametral
    EXPECT_TRUE(contiguous(g, 3, 5));
    EXPECT_FALSE(contiguous(g, 0, 3));  // 1 sits on the arc from 0 to 3
    g.dirs.push_back(vec2(3, 0));
    EXPECT_FALSE(contiguous(g, 0, 1));  // three co-located points
    for (const auto& rel : contiguity_report(g)) {
        if (rel.diametral) {
            EXPECT_FALSE(rel.contiguous);
            EXPECT_TRUE(rel.on_arc.empty());
        }
        EXPECT_EQ(rel.contiguous, !rel.diametral && rel.on_arc.empty());
    }
}

TEST(Contiguity, PrismNeighbours) {
    // around the circle: (1,0) (1,1) (0,1) (-1,0) (-1,-1) (0,-1)
    const auto g = prism_diagram(3, 0);
    EXPECT_TRUE(contiguous(g, 0, 4));
    EXPECT_TRUE(contiguous(g, 4, 2));
    EXPECT_FALSE(contiguous(g, 0, 2));
    EXPECT_FALSE(contiguous(g, 0, 1));
    int pairs = 0;
    for (const auto& rel : contiguity_report(g)) pairs += rel.contiguous;
    EXPECT_EQ(pairs, 6);
}

TEST(Variant, ParseAndPrint) {
    for (Variant t : {Variant::i, Variant::ii, Variant::iii, Variant::iv, Variant::v, Variant::vi})
        EXPECT_EQ(parse_variant(to_string(t)), t);
    EXPECT_FALSE(parse_variant("vii").has_value());
    EXPECT_FALSE(compatible({Variant::i, 5}));
    EXPECT_TRUE(compatible({Variant::ii, 3}));
}
