#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "polyface/incidence.hpp"
#include "polyface/lattice.hpp"

namespace polyface {

namespace detail {

/// Backtracking search for a bijection of {0..n-1} mapping the set system `a` onto `b`.
/// Candidates are restricted to vertices with the same multiset of incident set sizes, and
/// every partial map must send the traces of `a` onto the traces of `b` as multisets.
class SetSystemMatcher {
public:
    SetSystemMatcher(int n, std::vector<VertexSet> a, std::vector<VertexSet> b)
        : n_(n), a_(std::move(a)), b_(std::move(b)) {}

    bool run() {
        if (a_.size() != b_.size()) return false;
        auto sizes = [](const std::vector<VertexSet>& sets) {
            std::vector<int> out;
            for (VertexSet s : sets) out.push_back(s.size());
            std::sort(out.begin(), out.end());
            return out;
        };
        if (sizes(a_) != sizes(b_)) return false;

        sig_a_ = signatures(a_);
        sig_b_ = signatures(b_);
        auto sorted_a = sig_a_;
        auto sorted_b = sig_b_;
        std::sort(sorted_a.begin(), sorted_a.end());
        std::sort(sorted_b.begin(), sorted_b.end());
        if (sorted_a != sorted_b) return false;

        order_ = search_order();
        image_.assign(static_cast<std::size_t>(n_), -1);
        used_.assign(static_cast<std::size_t>(n_), false);
        return extend(0);
    }

    const std::vector<int>& mapping() const { return image_; }

private:
    std::vector<std::vector<int>> signatures(const std::vector<VertexSet>& sets) const {
        std::vector<std::vector<int>> sig(static_cast<std::size_t>(n_));
        for (VertexSet s : sets)
            for (int v : s.elements()) sig[static_cast<std::size_t>(v)].push_back(s.size());
        for (auto& s : sig) std::sort(s.begin(), s.end());
        return sig;
    }

    // Rare signatures first, then vertices sharing the most sets with those already placed.
    std::vector<int> search_order() const {
        std::map<std::vector<int>, int> class_size;
        for (const auto& s : sig_a_) ++class_size[s];
        std::vector<int> order;
        std::vector<bool> placed(static_cast<std::size_t>(n_), false);
        VertexSet placed_set;
        for (int step = 0; step < n_; ++step) {
            int best = -1;
            std::pair<int, int> best_key{0, 0};
            for (int v = 0; v < n_; ++v) {
                if (placed[static_cast<std::size_t>(v)]) continue;
                int shared = 0;
                for (VertexSet s : a_)
                    if (s.contains(v)) shared += (s & placed_set).size();
                const std::pair<int, int> key{shared, -class_size[sig_a_[static_cast<std::size_t>(v)]]};
                if (best < 0 || key > best_key) {
                    best = v;
                    best_key = key;
                }
            }
            placed[static_cast<std::size_t>(best)] = true;
            placed_set.insert(best);
            order.push_back(best);
        }
        return order;
    }

    bool consistent(int depth) const {
        VertexSet domain;
        VertexSet range;
        for (int i = 0; i < depth; ++i) {
            const int v = order_[static_cast<std::size_t>(i)];
            domain.insert(v);
            range.insert(image_[static_cast<std::size_t>(v)]);
        }
        std::vector<std::pair<int, std::uint64_t>> traces_a;
        std::vector<std::pair<int, std::uint64_t>> traces_b;
        for (VertexSet s : a_) {
            VertexSet mapped;
            for (int v : (s & domain).elements()) mapped.insert(image_[static_cast<std::size_t>(v)]);
            traces_a.emplace_back(s.size(), mapped.bits());
        }
        for (VertexSet t : b_) traces_b.emplace_back(t.size(), (t & range).bits());
        std::sort(traces_a.begin(), traces_a.end());
        std::sort(traces_b.begin(), traces_b.end());
        return traces_a == traces_b;
    }

    bool extend(int depth) {
        if (depth == n_) return true;
        const int v = order_[static_cast<std::size_t>(depth)];
        for (int w = 0; w < n_; ++w) {
            if (used_[static_cast<std::size_t>(w)]) continue;
            if (sig_b_[static_cast<std::size_t>(w)] != sig_a_[static_cast<std::size_t>(v)]) continue;
            image_[static_cast<std::size_t>(v)] = w;
            used_[static_cast<std::size_t>(w)] = true;
            if (consistent(depth + 1) && extend(depth + 1)) return true;
            used_[static_cast<std::size_t>(w)] = false;
            image_[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    }

    int n_;
    std::vector<VertexSet> a_;
    std::vector<VertexSet> b_;
    std::vector<std::vector<int>> sig_a_;
    std::vector<std::vector<int>> sig_b_;
    std::vector<int> order_;
    std::vector<int> image_;
    std::vector<bool> used_;
};

}  // namespace detail

/// True iff some vertex bijection maps the facets of `p` onto the facets of `q`.
inline bool is_isomorphic(const IncidencePolytope& p, const IncidencePolytope& q) {
    if (p.dim() != q.dim() || p.num_vertices() != q.num_vertices() ||
        p.num_facets() != q.num_facets())
        return false;
    return detail::SetSystemMatcher(p.num_vertices(), p.facets(), q.facets()).run();
}

/// Isomorphism of the vertex-edge graphs.
inline bool graphs_isomorphic(const FaceLattice& p, const FaceLattice& q) {
    if (p.num_vertices() != q.num_vertices()) return false;
    return detail::SetSystemMatcher(p.num_vertices(), p.faces(1), q.faces(1)).run();
}

}  // namespace polyface
