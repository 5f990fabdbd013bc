#pragma once

#include "detinv/geometry.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace detinv {

// Dominant integral weight: a weakly decreasing integer tuple, entries
// possibly negative.
struct DomWeight {
    std::vector<int> entries;

    bool is_dominant() const;
    std::string str() const;  // "(1,-2,-2)"

    friend bool operator==(const DomWeight&, const DomWeight&) = default;
};

// Finite enumeration window: length-n weights with lo <= entry <= hi.
struct WeightBox {
    int n = 0;
    int lo = 0;
    int hi = 0;
};

// Standard window for a case: [-(T + radius), radius] where T is the
// largest classification threshold magnitude (n for general and skew,
// n+1 for symmetric).
WeightBox default_box(MatrixCase kind, int n, int radius);

// Rank classification of dominant weights. Each returns the unique s
// whose defining inequalities hold, or nullopt when no class matches.
//
//   general:   lambda_s >= s - n >= lambda_{s+1},          s in 0..n
//   skew:      lambda_{2s} >= 2s - n, lambda_{2s+1} <= 2s - n + 1,
//              s in 0..n/2; requires n even and paired entries
//   symmetric: lambda_{s-1} >= s - n - 1 >= lambda_{s+1},  s in 0..n+1
//              with n - s odd; requires all entries even
//
// Out-of-range indices are read as +infinity (below 1) and -infinity
// (above n). Non-dominant or malformed input throws.
std::optional<int> classify_general(const DomWeight& lambda, int n);
std::optional<int> classify_skew(const DomWeight& lambda, int n);
std::optional<int> classify_symmetric(const DomWeight& lambda, int n);
std::optional<int> classify(MatrixCase kind, const DomWeight& lambda, int n);

// All weights in the box (with the case's shape constraints) whose
// classification equals s.
std::vector<DomWeight> enumerate_class(MatrixCase kind, int s, const WeightBox& box);

struct RemovalIssue {
    DomWeight from;
    int from_class = 0;
    DomWeight to;
    std::optional<int> to_class;  // empty when the removal left every class
};

struct ClosureReport {
    std::int64_t checked = 0;
    std::vector<RemovalIssue> violations;    // classification moved up within reach of p
    std::vector<RemovalIssue> unclassified;  // removal produced an unclassifiable weight

    bool ok() const { return violations.empty() && unclassified.empty(); }
};

// For every weight of class s <= p in the box and every legal box
// removal (one box for general; a column pair for skew; a row pair for
// symmetric) that stays dominant and inside the box, confirm the result
// classifies and does not move to a class t with s < t <= p.
ClosureReport closure_check(MatrixCase kind, int p, const WeightBox& box);

std::string closure_report_json(const ClosureReport& report);

}  // namespace detinv
