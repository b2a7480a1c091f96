#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "polyface/errors.hpp"
#include "polyface/vertex_set.hpp"

namespace polyface {

/// A d-polytope given by its vertex-facet incidences. Vertices are 0..n-1; each facet is
/// stored as the set of its vertices. Facets are kept sorted, so two values built from the
/// same facets in any order compare equal.
class IncidencePolytope {
public:
    IncidencePolytope() = default;

    /// Throws NonPolytopalInput when the incidence invariants fail: facets must form an
    /// antichain, every facet needs >= d vertices, every vertex must lie in >= d facets,
    /// and there must be >= d+1 facets.
    IncidencePolytope(int d, int n, std::vector<VertexSet> facets)
        : d_(d), n_(n), facets_(std::move(facets)) {
        VertexSet::check_size(n);
        std::sort(facets_.begin(), facets_.end());
        facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
        validate();
    }

    int dim() const { return d_; }
    int num_vertices() const { return n_; }
    int num_facets() const { return static_cast<int>(facets_.size()); }
    const std::vector<VertexSet>& facets() const { return facets_; }
    VertexSet vertices() const { return VertexSet::range(n_); }

    /// Indices of the facets containing every vertex of `s`.
    std::vector<int> facets_containing(VertexSet s) const {
        std::vector<int> out;
        for (int i = 0; i < num_facets(); ++i)
            if (s.subset_of(facets_[static_cast<std::size_t>(i)])) out.push_back(i);
        return out;
    }

    /// Intersection of all facets containing `s`; the whole vertex set if none does.
    VertexSet closure(VertexSet s) const {
        VertexSet out = vertices();
        for (VertexSet f : facets_)
            if (s.subset_of(f)) out = out & f;
        return out;
    }

    friend bool operator==(const IncidencePolytope&, const IncidencePolytope&) = default;

private:
    void validate() const {
        auto fail = [](const std::string& why) { throw NonPolytopalInput(why); };
        if (d_ < 0) fail("negative dimension");
        if (num_facets() < d_ + 1)
            fail("need at least d+1 facets, got " + std::to_string(num_facets()));
        const VertexSet all = vertices();
        for (std::size_t i = 0; i < facets_.size(); ++i) {
            if (!facets_[i].subset_of(all)) fail("facet uses a vertex index >= n");
            if (facets_[i].size() < d_) fail("facet " + to_string(facets_[i]) + " has fewer than d vertices");
            for (std::size_t j = 0; j < facets_.size(); ++j)
                if (i != j && facets_[i].subset_of(facets_[j]))
                    fail("facet " + to_string(facets_[i]) + " is contained in " + to_string(facets_[j]));
        }
        for (int v = 0; v < n_; ++v) {
            int count = 0;
            for (VertexSet f : facets_) count += f.contains(v) ? 1 : 0;
            if (count < d_) fail("vertex " + std::to_string(v) + " lies in fewer than d facets");
        }
    }

    int d_ = 0;
    int n_ = 0;
    std::vector<VertexSet> facets_;
};

}  // namespace polyface
