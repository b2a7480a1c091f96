#pragma once

// Independent reference computations used only by tests. None of these share code paths
// with the library routines they check.

#include <set>
#include <vector>

#include "polyface/gale2d.hpp"
#include "polyface/incidence.hpp"
#include "polyface/integer.hpp"

namespace oracle {

using polyface::Integer;
using polyface::Rational;
using polyface::VertexSet;

/// Pascal's triangle, rows 0..n.
inline std::vector<std::vector<Integer>> pascal(int n) {
    std::vector<std::vector<Integer>> rows(static_cast<std::size_t>(n + 1));
    for (int a = 0; a <= n; ++a) {
        rows[a].assign(static_cast<std::size_t>(a + 1), Integer(1));
        for (int b = 1; b < a; ++b) rows[a][b] = rows[a - 1][b - 1] + rows[a - 1][b];
    }
    return rows;
}

inline Integer choose(int a, int b) {
    static const auto table = pascal(220);
    if (a < 0 || b < 0 || b > a) return 0;
    return table.at(static_cast<std::size_t>(a)).at(static_cast<std::size_t>(b));
}

/// Is there lambda >= 1 (componentwise) with sum lambda_i z_i = 0? Substituting
/// mu = lambda - 1 gives A mu = -sum z, mu >= 0, a 2-row system; if it is feasible it has a
/// basic feasible solution with at most two nonzero entries, so we try every support of
/// size <= 2 exactly.
inline bool positive_dependence(const std::vector<polyface::gale::Vec2>& z) {
    if (z.empty()) return true;
    Rational bx = 0, by = 0;
    for (const auto& p : z) {
        bx -= p.x;
        by -= p.y;
    }
    if (bx == 0 && by == 0) return true;
    const std::size_t m = z.size();
    for (std::size_t i = 0; i < m; ++i) {
        // single column: mu_i z_i = b
        const auto& a = z[i];
        Rational mu;
        bool found = false;
        if (a.x != 0) {
            mu = bx / a.x;
            found = mu * a.y == by;
        } else if (a.y != 0) {
            mu = by / a.y;
            found = mu * a.x == bx;
        }
        if (found && mu >= 0) return true;
        for (std::size_t j = i + 1; j < m; ++j) {
            const auto& c = z[j];
            const Rational det = a.x * c.y - a.y * c.x;
            if (det == 0) continue;
            const Rational mi = (bx * c.y - by * c.x) / det;
            const Rational mj = (a.x * by - a.y * bx) / det;
            if (mi >= 0 && mj >= 0) return true;
        }
    }
    return false;
}

inline bool coface(const polyface::gale::GaleDiagram2D& g, VertexSet s) {
    std::vector<polyface::gale::Vec2> pts;
    for (int v : s.elements())
        if (v < static_cast<int>(g.dirs.size())) pts.push_back(g.dirs[static_cast<std::size_t>(v)]);
    return !s.empty() && positive_dependence(pts);
}

/// All faces as intersections of arbitrary subfamilies of facets (the empty family gives
/// the whole vertex set). Exponential in the facet count; for small inputs only.
inline std::set<std::uint64_t> faces_by_subfamilies(const polyface::IncidencePolytope& p) {
    const auto& facets = p.facets();
    const std::size_t m = facets.size();
    std::set<std::uint64_t> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        VertexSet s = p.vertices();
        for (std::size_t i = 0; i < m; ++i)
            if ((mask >> i) & 1U) s = s & facets[i];
        out.insert(s.bits());
    }
    return out;
}

/// f-vector of a product from factor f-vectors: f_k(PxQ) = sum_{a+b=k} f_a(P) f_b(Q), where
/// each factor's f_dim = 1 (the factor itself) is included.
inline std::vector<Integer> product_fvector(std::vector<Integer> fp, std::vector<Integer> fq) {
    fp.push_back(1);
    fq.push_back(1);
    const int dp = static_cast<int>(fp.size()) - 1;
    const int dq = static_cast<int>(fq.size()) - 1;
    std::vector<Integer> out;
    for (int k = 0; k < dp + dq; ++k) {
        Integer s = 0;
        for (int a = 0; a <= dp; ++a) {
            const int b = k - a;
            if (b >= 0 && b <= dq) s += fp[a] * fq[b];
        }
        out.push_back(s);
    }
    return out;
}

/// f-vector of a free join: f_k = sum_{a+b+1=k} f_a(P) f_b(Q) over -1 <= a <= dim P and
/// -1 <= b <= dim Q, with f_{-1} = f_dim = 1.
inline std::vector<Integer> join_fvector(std::vector<Integer> fp, std::vector<Integer> fq) {
    auto extend = [](std::vector<Integer> f) {
        f.insert(f.begin(), Integer(1));
        f.push_back(1);
        return f;  // index i holds f_{i-1}
    };
    const auto ep = extend(std::move(fp));
    const auto eq = extend(std::move(fq));
    const int dp = static_cast<int>(ep.size()) - 2;
    const int dq = static_cast<int>(eq.size()) - 2;
    const int d = dp + dq + 1;
    std::vector<Integer> out;
    for (int k = 0; k < d; ++k) {
        Integer s = 0;
        for (int a = -1; a <= dp; ++a) {
            const int b = k - 1 - a;
            if (b >= -1 && b <= dq) s += ep[a + 1] * eq[b + 1];
        }
        out.push_back(s);
    }
    return out;
}

}  // namespace oracle
