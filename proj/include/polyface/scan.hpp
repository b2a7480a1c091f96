#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <tuple>
#include <string>
#include <vector>

#include <json.hpp>

#include "polyface/formulas.hpp"
#include "polyface/integer.hpp"

// Minimiser scan over d-polytopes with 2d+1 vertices and d+2 facets. For each d the
// competitors of the pentasm are the pyramids Delta^t(r, s) with (r+1)(s+1)+t = 2d+1, i.e.
// rs = d. The claim checked for composite d >= 5:
//   (a) k <= floor(d/2): the pentasm has strictly fewer k-faces than every candidate;
//   (b) d/2 < k <= d-2: the candidate with r = smallest prime factor of d is the unique
//       minimiser.
// d = 4 is reported separately: Delta(2,2) has fewer edges and ridges than the pentasm.

namespace polyface::scan {

using formulas::DeltaPyramidSpec;

inline int smallest_prime_factor(int d) {
    for (int p = 2; p * p <= d; ++p)
        if (d % p == 0) return p;
    return d;
}

inline bool is_prime(int d) { return d >= 2 && smallest_prime_factor(d) == d; }

/// {(r, d/r, d - r - d/r) : r | d, 2 <= r <= d/r}
inline std::vector<DeltaPyramidSpec> candidates(int d) {
    std::vector<DeltaPyramidSpec> out;
    for (int r = 2; r * r <= d; ++r)
        if (d % r == 0) out.push_back({r, d / r, d - r - d / r});
    return out;
}

/// Every (r, s, t) with 1 <= r <= s, t >= 0, r+s+t = d and (r+1)(s+1)+t = 2d+1, found by
/// exhaustion rather than by factoring.
inline std::vector<DeltaPyramidSpec> candidates_by_search(int d) {
    std::vector<DeltaPyramidSpec> out;
    for (int r = 1; r <= d; ++r)
        for (int s = r; r + s <= d; ++s) {
            const int t = d - r - s;
            if ((r + 1) * (s + 1) + t == 2 * d + 1) out.push_back({r, s, t});
        }
    return out;
}

enum class Status { holds, violated, exception_d4 };

inline std::string to_string(Status s) {
    switch (s) {
        case Status::holds: return "holds";
        case Status::violated: return "violated";
        case Status::exception_d4: return "exception-d4";
    }
    return "?";
}

inline std::string label(const DeltaPyramidSpec& c) {
    return "delta(" + std::to_string(c.r) + "," + std::to_string(c.s) + "," + std::to_string(c.t) + ")";
}

struct Row {
    int d = 0;
    int k = 0;
    std::optional<DeltaPyramidSpec> candidate;  // empty for the pentasm row
    Integer f_k;
    std::string minimiser;
    bool unique = true;
    Status status = Status::holds;

    std::string polytope() const { return candidate ? "delta" : "pentasm"; }
};

struct DimensionSummary {
    int d = 0;
    bool prime = false;
    int smallest_prime_factor = 0;
    std::vector<DeltaPyramidSpec> candidates;
    bool search_agrees = true;   // factor list equals exhaustive search
    int claimed_boundary = 0;    // floor(d/2)
    int pentasm_wins_through = 0;  // largest K with the pentasm the unique minimiser for all k <= K
    int violations = 0;
};

struct ScanReport {
    int d_max = 0;
    std::vector<Row> rows;
    std::vector<DimensionSummary> dims;

    int violations() const {
        int n = 0;
        for (const auto& s : dims) n += s.violations;
        return n;
    }
    bool search_consistent() const {
        return std::all_of(dims.begin(), dims.end(), [](const auto& s) { return s.search_agrees; });
    }
    bool holds() const { return violations() == 0 && search_consistent(); }
};

inline DimensionSummary scan_dimension(int d, std::vector<Row>& rows) {
    DimensionSummary sum;
    sum.d = d;
    sum.prime = is_prime(d);
    sum.smallest_prime_factor = smallest_prime_factor(d);
    sum.candidates = candidates(d);
    sum.claimed_boundary = d / 2;
    sum.search_agrees = candidates_by_search(d) == sum.candidates;

    bool still_winning = true;
    for (int k = 1; k <= d - 2; ++k) {
        const Integer pm = formulas::pentasm_f(k, d);
        std::vector<Integer> vals;
        for (const auto& c : sum.candidates) vals.push_back(formulas::delta_pyramid_f(k, c));

        Integer best = pm;
        for (const auto& v : vals) best = std::min(best, v);
        std::vector<std::string> argmin;
        if (pm == best) argmin.push_back("pentasm");
        for (std::size_t i = 0; i < vals.size(); ++i)
            if (vals[i] == best) argmin.push_back(label(sum.candidates[i]));
        const bool unique = argmin.size() == 1;
        std::string minimiser;
        for (std::size_t i = 0; i < argmin.size(); ++i) minimiser += (i ? "|" : "") + argmin[i];

        const bool pentasm_unique = unique && argmin.front() == "pentasm";
        if (still_winning && pentasm_unique) sum.pentasm_wins_through = k;
        else still_winning = false;

        Status status = Status::holds;
        if (d == 4) {
            status = pentasm_unique ? Status::holds : Status::exception_d4;
        } else if (!sum.candidates.empty()) {
            bool ok = false;
            if (2 * k <= d) {
                ok = pentasm_unique;
            } else {
                const int r = sum.smallest_prime_factor;
                const DeltaPyramidSpec expected{r, d / r, d - r - d / r};
                ok = unique && argmin.front() == label(expected);
            }
            if (!ok) {
                status = Status::violated;
                ++sum.violations;
            }
        }

        rows.push_back({d, k, std::nullopt, pm, minimiser, unique, status});
        for (std::size_t i = 0; i < vals.size(); ++i)
            rows.push_back({d, k, sum.candidates[i], vals[i], minimiser, unique, status});
    }
    return sum;
}

inline ScanReport run(int d_max) {
    if (d_max < 4) throw DomainError("scan: need dmax >= 4");
    ScanReport report;
    report.d_max = d_max;
    for (int d = 4; d <= d_max; ++d) report.dims.push_back(scan_dimension(d, report.rows));
    std::stable_sort(report.rows.begin(), report.rows.end(), [](const Row& a, const Row& b) {
        auto key = [](const Row& r) {
            return std::tuple(r.d, r.k, r.candidate.has_value(), r.candidate ? r.candidate->r : 0);
        };
        return key(a) < key(b);
    });
    return report;
}

inline std::string to_csv(const ScanReport& report) {
    std::ostringstream out;
    out << "d,k,polytope,r,s,t,f_k,minimiser,unique,status\n";
    for (const auto& row : report.rows) {
        out << row.d << ',' << row.k << ',' << row.polytope() << ',';
        if (row.candidate)
            out << row.candidate->r << ',' << row.candidate->s << ',' << row.candidate->t;
        else
            out << ",,";
        out << ',' << polyface::to_string(row.f_k) << ',' << row.minimiser << ','
            << (row.unique ? "true" : "false") << ',' << to_string(row.status) << '\n';
    }
    return out.str();
}

/// Nested by dimension; integers are decimal strings.
inline nlohmann::json to_json(const ScanReport& report) {
    using nlohmann::json;
    json dims = json::array();
    for (const auto& s : report.dims) {
        json cands = json::array();
        for (const auto& c : s.candidates) cands.push_back({{"r", c.r}, {"s", c.s}, {"t", c.t}});
        json ks = json::array();
        for (const auto& row : report.rows) {
            if (row.d != s.d || row.candidate) continue;
            json values = json::object();
            values["pentasm"] = polyface::to_string(row.f_k);
            for (const auto& other : report.rows)
                if (other.d == row.d && other.k == row.k && other.candidate)
                    values[label(*other.candidate)] = polyface::to_string(other.f_k);
            ks.push_back({{"k", row.k},
                          {"values", values},
                          {"minimiser", row.minimiser},
                          {"unique", row.unique},
                          {"status", to_string(row.status)}});
        }
        dims.push_back({{"d", s.d},
                        {"prime", s.prime},
                        {"smallest_prime_factor", s.smallest_prime_factor},
                        {"candidates", cands},
                        {"candidates_match_search", s.search_agrees},
                        {"claimed_boundary", s.claimed_boundary},
                        {"pentasm_unique_minimiser_through_k", s.pentasm_wins_through},
                        {"violations", s.violations},
                        {"rows", ks}});
    }
    return {{"dmax", report.d_max},
            {"holds", report.holds()},
            {"violations", report.violations()},
            {"dimensions", dims}};
}

}  // namespace polyface::scan
