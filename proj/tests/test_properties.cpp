#include <gtest/gtest.h>

#include <functional>

#include "oracles.hpp"
#include "polyface/corpus.hpp"
#include "polyface/formulas.hpp"
#include "polyface/isomorphism.hpp"
#include "polyface/lattice.hpp"
#include "polyface/suites.hpp"

using namespace polyface;

namespace {
const std::vector<corpus::Entry>& entries() {
    static const auto all = corpus::build_all();
    return all;
}
}  // namespace

TEST(Corpus, Size) {
    EXPECT_GE(entries().size(), 200U);
    std::set<std::string> names;
    std::function<void(const expr::ConstructionExpr&)> collect = [&](const expr::ConstructionExpr& x) {
        names.insert(x.name);
        for (const auto& c : x.children) collect(c);
    };
    for (const auto& e : entries()) collect(expr::parse(e.expression));
    EXPECT_EQ(names.size(), expr::builders().size());
}

TEST(Corpus, EulerAndDual) {
    for (const auto& e : entries()) {
        const FVector f = f_vector(e.polytope);
        EXPECT_EQ(euler_residual(f), 0) << e.expression;
        EXPECT_EQ(f[0], e.polytope.num_vertices()) << e.expression;
        EXPECT_EQ(f[e.polytope.dim() - 1], e.polytope.num_facets()) << e.expression;
        if (e.polytope.num_facets() <= 64)
            EXPECT_EQ(f_vector(dual_incidence(e.polytope)), f.reversed()) << e.expression;
    }
}

TEST(Corpus, FacesMatchSubfamilyOracle) {
    int checked = 0;
    for (const auto& e : entries()) {
        if (e.polytope.num_facets() > 14) continue;
        std::set<std::uint64_t> mine;
        for (VertexSet f : enumerate_faces(e.polytope).all_faces()) mine.insert(f.bits());
        ASSERT_EQ(mine, oracle::faces_by_subfamilies(e.polytope)) << e.expression;
        ++checked;
    }
    EXPECT_GT(checked, 100);
}

TEST(Corpus, PyramidRecurrence) {
    for (const auto& e : entries()) {
        if (e.polytope.num_vertices() > 40) continue;
        const FVector f = f_vector(e.polytope);
        const FVector g = f_vector(build::pyramid(e.polytope));
        const int d = e.polytope.dim();
        EXPECT_EQ(g[0], f[0] + 1);
        for (int k = 1; k < d; ++k) EXPECT_EQ(g[k], f[k] + f[k - 1]) << e.expression << " k=" << k;
        EXPECT_EQ(g[d], f[d - 1] + 1);
    }
}

TEST(Corpus, LowerBoundForFewVertices) {
    // every d-polytope with d+s vertices (s <= d) has at least phi_k(d+s, d) k-faces
    int checked = 0;
    for (const auto& e : entries()) {
        const int d = e.polytope.dim();
        const int n = e.polytope.num_vertices();
        if (d < 2 || n > 2 * d) continue;
        const FVector f = f_vector(e.polytope);
        for (int k = 0; k < d; ++k) EXPECT_GE(f[k], formulas::phi(k, n, d)) << e.expression << " k=" << k;
        ++checked;
    }
    EXPECT_GT(checked, 30);
}

TEST(Corpus, PentasmMinimalAmongTwoDPlusOne) {
    // among corpus polytopes with 2d+1 vertices, none has fewer edges than the pentasm
    for (const auto& e : entries()) {
        const int d = e.polytope.dim();
        if (d < 3 || e.polytope.num_vertices() != 2 * d + 1) continue;
        const FVector f = f_vector(e.polytope);
        if (d == 4 && is_isomorphic(e.polytope, build::delta(2, 2))) continue;
        EXPECT_GE(f[1], formulas::pentasm_f(1, d)) << e.expression;
    }
}

TEST(Binomial, Identities) {
    for (int a = 0; a <= 80; ++a)
        for (int b = 0; b <= a; ++b) {
            ASSERT_EQ((a - b) * binom(a, b), a * binom(a - 1, b));
            if (a >= 1) ASSERT_EQ(binom(a, b), binom(a - 1, b - 1) + binom(a - 1, b));
        }
    for (int d = 0; d <= 80; ++d)
        for (int k = 0; k <= d; ++k) {
            Integer sum = 0;
            for (int j = 0; j <= d; ++j) sum += oracle::choose(j, k);
            ASSERT_EQ(sum, binom(d + 1, k + 1));
        }
}

TEST(Suites, UnknownName) {
    EXPECT_THROW(suites::run("no-such-suite"), UnknownSuite);
    EXPECT_EQ(suites::names().size(), 8U);
}

class SuiteTest : public ::testing::TestWithParam<std::string> {};

TEST_P(SuiteTest, Passes) {
    const auto report = suites::run(GetParam());
    EXPECT_FALSE(report.results.empty());
    for (const auto& r : report.failures())
        ADD_FAILURE() << r.construction << " k=" << r.k << " " << r.relation << " expected " << r.expected
                      << " actual " << r.actual;
}

INSTANTIATE_TEST_SUITE_P(All, SuiteTest,
                         ::testing::Values("capped-vs-pentasm", "pyramid-over-simple", "pentasm-tables",
                                           "min-facets", "gale-six", "xue-bound"),
                         [](const auto& info) {
                             std::string s = info.param;
                             std::replace(s.begin(), s.end(), '-', '_');
                             return s;
                         });
