#pragma once

#include <cstdint>
#include <string>

#include "polyface/errors.hpp"
#include "polyface/integer.hpp"

// Closed-form face counts and lower bounds. Every function is total on its stated domain
// and throws DomainError outside it.

namespace polyface::formulas {

namespace detail {
inline void require(bool ok, const std::string& what) {
    if (!ok) throw DomainError(what);
}
}  // namespace detail

/// Minimum number of k-faces of a d-polytope with n = d+s vertices, 1 <= s <= d:
/// C(d+1,k+1) + C(d,k+1) - C(d+1-s,k+1). Attained by the triplex M(s, d-s).
/// k = 0 is accepted and yields n.
inline Integer phi(std::int64_t k, std::int64_t n, std::int64_t d) {
    const std::int64_t s = n - d;
    detail::require(d >= 1 && s >= 1 && s <= d, "phi: need d+1 <= n <= 2d");
    detail::require(k >= 0 && k <= d - 1, "phi: need 0 <= k <= d-1");
    return binom(d + 1, k + 1) + binom(d, k + 1) - binom(d + 1 - s, k + 1);
}

/// Lower bound for f_k of a simple d-polytope with m facets (0 <= k <= d-2).
inline Integer simple_lbt(std::int64_t k, std::int64_t d, std::int64_t m) {
    detail::require(d >= 2 && m >= d + 1, "simple_lbt: need d >= 2 and m >= d+1");
    detail::require(k >= 0 && k <= d - 2, "simple_lbt: need 0 <= k <= d-2");
    if (k == 0) return Integer(d - 1) * m - Integer(d + 1) * (d - 2);
    return binom(d, k + 1) * m - binom(d + 1, k + 1) * (d - 1 - k);
}

/// f_k of the d-pentasm.
inline Integer pentasm_f(std::int64_t k, std::int64_t d) {
    detail::require(d >= 3, "pentasm_f: need d >= 3");
    detail::require(k >= 0 && k <= d - 1, "pentasm_f: need 0 <= k <= d-1");
    if (k == 0) return 2 * d + 1;
    return binom(d + 1, k + 1) + binom(d, k + 1) + binom(d - 1, k);
}

/// Parameters of the t-fold pyramid over Delta(r,s), the product of an r- and an s-simplex.
struct DeltaPyramidSpec {
    std::int64_t r = 1;
    std::int64_t s = 1;
    std::int64_t t = 0;

    std::int64_t dim() const { return r + s + t; }
    std::int64_t num_vertices() const { return (r + 1) * (s + 1) + t; }
    std::int64_t num_facets() const { return dim() + 2; }

    friend bool operator==(const DeltaPyramidSpec&, const DeltaPyramidSpec&) = default;
};

inline Integer delta_pyramid_f(std::int64_t k, const DeltaPyramidSpec& spec) {
    const auto [r, s, t] = spec;
    detail::require(r >= 1 && s >= 1 && t >= 0, "delta_pyramid_f: need r,s >= 1 and t >= 0");
    detail::require(k >= 0 && k <= spec.dim() - 1, "delta_pyramid_f: need 0 <= k <= d-1");
    return binom(r + s + t + 2, k + 2) - binom(s + t + 1, k + 2) - binom(r + t + 1, k + 2) +
           binom(t + 1, k + 2);
}

/// Facets of the cyclic 4-polytope with n vertices.
inline Integer cyclic4_facets(std::int64_t n) {
    detail::require(n >= 5, "cyclic4_facets: need n >= 5");
    return Integer(n) * (n - 3) / 2;
}

/// Minimum facet count of a 4-polytope with f0 vertices: the unique n with
/// C(n-2,2) <= f0 <= C(n-1,2) - 1.
inline std::int64_t min_facets_4d(std::int64_t f0) {
    detail::require(f0 >= 5, "min_facets_4d: need f0 >= 5");
    std::int64_t n = 5;
    while (binom(n - 1, 2) - 1 < f0) ++n;
    return n;
}

/// Lower bound on the number of k-faces containing at least one vertex of a sequence of r
/// vertices in a d-polytope with 2d+1 vertices, one of which (v) has degree deg_v:
/// phi_{k-1}(deg_v, d-1) + sum_{i=2}^{r} C(d-i+1, k).
/// For nonsimple v the result is also checked against the weaker closed-form branch.
inline Integer xue_bound(std::int64_t k, std::int64_t d, std::int64_t deg_v, std::int64_t r,
                         bool v_nonsimple) {
    detail::require(d >= 3 && r >= 1 && r <= d, "xue_bound: need 1 <= r <= d");
    detail::require(k >= 2 && k <= d - 1, "xue_bound: need 2 <= k <= d-1");
    detail::require(deg_v >= d && deg_v <= 2 * (d - 1), "xue_bound: need d <= deg_v <= 2(d-1)");
    detail::require(!v_nonsimple || deg_v > d, "xue_bound: a nonsimple vertex has degree > d");
    Integer tail = 0;
    for (std::int64_t i = 2; i <= r; ++i) tail += binom(d - i + 1, k);
    const Integer bound = phi(k - 1, deg_v, d - 1) + tail;
    if (v_nonsimple) {
        const Integer weaker = binom(d, k) + binom(d - 1, k) - binom(d - 2, k) + tail;
        if (bound < weaker) throw std::logic_error("xue_bound: nonsimple branch violated");
    }
    return bound;
}

}  // namespace polyface::formulas
