#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

#include "polyface/integer.hpp"

namespace polyface {

/// Face counts (f_0, ..., f_{d-1}) of a d-polytope.
struct FVector {
    int d = 0;
    std::vector<Integer> counts;

    FVector() = default;
    FVector(int dim, std::vector<Integer> values) : d(dim), counts(std::move(values)) {}
    FVector(std::initializer_list<long long> values) : d(static_cast<int>(values.size())) {
        for (long long v : values) counts.emplace_back(v);
    }

    const Integer& operator[](int k) const { return counts.at(static_cast<std::size_t>(k)); }

    /// (f_{d-1}, ..., f_0): the f-vector of any dual polytope.
    FVector reversed() const {
        FVector out = *this;
        std::reverse(out.counts.begin(), out.counts.end());
        return out;
    }

    friend bool operator==(const FVector&, const FVector&) = default;
};

inline std::string to_string(const FVector& f) {
    std::string out = "(";
    for (std::size_t i = 0; i < f.counts.size(); ++i) {
        if (i) out += ",";
        out += f.counts[i].str();
    }
    return out + ")";
}

/// Sum_k (-1)^k f_k - (1 - (-1)^d); zero for every polytope.
inline Integer euler_residual(const FVector& f) {
    Integer alternating = 0;
    for (std::size_t k = 0; k < f.counts.size(); ++k)
        alternating += (k % 2 == 0) ? f.counts[k] : Integer(-f.counts[k]);
    const int expected = (f.d % 2 == 0) ? 0 : 2;
    return alternating - expected;
}

}  // namespace polyface
