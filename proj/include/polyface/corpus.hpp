#pragma once

#include <string>
#include <vector>

#include "polyface/expr.hpp"

// A fixed list of construction expressions covering every builder, used for property sweeps.

namespace polyface::corpus {

inline std::vector<std::string> expressions() {
    std::vector<std::string> out;
    auto add = [&](const std::string& e) { out.push_back(e); };
    auto s = [](int x) { return std::to_string(x); };

    for (int d = 1; d <= 8; ++d) add("simplex(" + s(d) + ")");
    for (int d = 2; d <= 4; ++d) add("cube(" + s(d) + ")");
    for (int n = 3; n <= 12; ++n) add("polygon(" + s(n) + ")");
    for (int d = 3; d <= 6; ++d)
        for (int n = d + 1; n <= std::min(d + 6, d == 6 ? 10 : 12); ++n) add("cyclic(" + s(n) + ", " + s(d) + ")");
    for (int st = 2; st <= 8; ++st)
        for (int sx = 1; sx <= st; ++sx) add("triplex(" + s(sx) + ", " + s(st - sx) + ")");
    for (int r = 1; r <= 4; ++r)
        for (int q = r; q <= 5; ++q)
            for (int t = 0; r + q + t <= 8; ++t) {
                if ((r + 1) * (q + 1) + t > 24) continue;
                add("delta(" + s(r) + ", " + s(q) + ", " + s(t) + ")");
            }
    for (int d = 3; d <= 8; ++d) add("pentasm(" + s(d) + ")");
    for (int d = 3; d <= 7; ++d)
        for (int l = 3; l <= d; ++l) add("capped_prism(" + s(l) + ", " + s(d) + ")");
    add("sigma3");

    const std::vector<std::string> bases = {"polygon(4)", "polygon(5)", "polygon(6)", "cube(3)",
                                            "sigma3", "pentasm(3)", "simplex(3)"};
    for (const auto& b : bases) {
        add("pyramid(" + b + ")");
        add("pyramid(t=2, " + b + ")");
        add("bipyramid(" + b + ")");
        add("prism(" + b + ")");
        add("dual(" + b + ")");
        add("dual(pyramid(" + b + "))");
    }
    for (int a = 3; a <= 5; ++a)
        for (int b = a; b <= 5; ++b) {
            add("product(polygon(" + s(a) + "), polygon(" + s(b) + "))");
            add("free_join(polygon(" + s(a) + "), polygon(" + s(b) + "))");
        }
    for (int n = 3; n <= 7; ++n) add("free_join(segment, polygon(" + s(n) + "))");
    add("free_join(simplex(2), sigma3)");
    for (int d = 2; d <= 6; ++d) add("truncate(v=0, simplex(" + s(d) + "))");
    for (int d = 3; d <= 4; ++d) add("truncate(v=0, cube(" + s(d) + "))");
    add("truncate(v=0, truncate(v=0, simplex(3)))");
    add("truncate(v=0, truncate(v=0, simplex(4)))");
    add("truncate(v=0, delta(2, 2))");
    add("truncate(v=0, prism(simplex(3)))");
    add("product(simplex(2), polygon(4))");
    for (int d = 4; d <= 6; ++d) add("truncate(v=0, triplex(2, " + s(d - 2) + "))");
    for (int n = 6; n <= 9; ++n) add("dual(cyclic(" + s(n) + ", 4))");
    for (int n = 7; n <= 9; ++n) add("dual(cyclic(" + s(n) + ", 5))");
    for (int d = 3; d <= 7; ++d) add("dual(pentasm(" + s(d) + "))");
    for (int d = 4; d <= 6; ++d) add("dual(capped_prism(3, " + s(d) + "))");
    for (int r = 2; r <= 3; ++r)
        for (int q = r; q <= 3; ++q) add("dual(delta(" + s(r) + ", " + s(q) + ", 1))");
    return out;
}

struct Entry {
    std::string expression;
    IncidencePolytope polytope;
};

inline std::vector<Entry> build_all() {
    std::vector<Entry> out;
    for (const auto& e : expressions()) out.push_back({e, expr::build(e)});
    return out;
}

}  // namespace polyface::corpus
