#include "detinv/weights.hpp"

#include <json.hpp>

#include <functional>
#include <limits>
#include <stdexcept>

namespace detinv {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();
constexpr int kMinusInf = std::numeric_limits<int>::min();

// Entry lookup with lambda_i = +inf for i < 1 and -inf for i > n.
int entry_at(const DomWeight& lambda, int i) {
    const int n = static_cast<int>(lambda.entries.size());
    if (i < 1) return kInf;
    if (i > n) return kMinusInf;
    return lambda.entries[i - 1];
}

void require_dominant(const DomWeight& lambda) {
    if (!lambda.is_dominant())
        throw std::invalid_argument("weight is not dominant: " + lambda.str());
}

void require_length(const DomWeight& lambda, int n) {
    if (static_cast<int>(lambda.entries.size()) != n)
        throw std::invalid_argument("weight length does not match n");
}

// Weakly decreasing tuples with values drawn from `values` (sorted
// descending), streamed to the callback.
void for_each_dominant(const std::vector<int>& values, int length,
                       const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> current(length);
    std::function<void(int, std::size_t)> rec = [&](int pos, std::size_t first) {
        if (pos == length) {
            fn(current);
            return;
        }
        for (std::size_t i = first; i < values.size(); ++i) {
            current[pos] = values[i];
            rec(pos + 1, i);
        }
    };
    if (length == 0)
        fn(current);
    else
        rec(0, 0);
}

std::vector<int> descending_values(int lo, int hi, bool even_only) {
    std::vector<int> out;
    for (int v = hi; v >= lo; --v)
        if (!even_only || v % 2 == 0) out.push_back(v);
    return out;
}

// Streams every case-shaped dominant weight in the box together with its
// classification.
void for_each_classified(MatrixCase kind, const WeightBox& box,
                         const std::function<void(const DomWeight&, std::optional<int>)>& fn) {
    switch (kind) {
        case MatrixCase::general: {
            for_each_dominant(descending_values(box.lo, box.hi, false), box.n,
                              [&](const std::vector<int>& entries) {
                                  DomWeight lambda{entries};
                                  fn(lambda, classify_general(lambda, box.n));
                              });
            return;
        }
        case MatrixCase::skew: {
            if (box.n % 2 != 0)
                throw std::invalid_argument("skew weight enumeration requires n even");
            const int pairs = box.n / 2;
            for_each_dominant(descending_values(box.lo, box.hi, false), pairs,
                              [&](const std::vector<int>& halves) {
                                  DomWeight lambda;
                                  lambda.entries.reserve(box.n);
                                  for (int v : halves) {
                                      lambda.entries.push_back(v);
                                      lambda.entries.push_back(v);
                                  }
                                  fn(lambda, classify_skew(lambda, box.n));
                              });
            return;
        }
        case MatrixCase::symmetric: {
            for_each_dominant(descending_values(box.lo, box.hi, true), box.n,
                              [&](const std::vector<int>& entries) {
                                  DomWeight lambda{entries};
                                  fn(lambda, classify_symmetric(lambda, box.n));
                              });
            return;
        }
    }
    throw std::logic_error("bad case");
}

// Legal one-step removals for the case: a single box (general), a
// vertical pair on a paired row block (skew), a horizontal pair (two
// boxes of one row, symmetric). Results that stop being dominant are
// dropped here; box membership is the caller's concern.
std::vector<DomWeight> removals(MatrixCase kind, const DomWeight& lambda) {
    const int n = static_cast<int>(lambda.entries.size());
    std::vector<DomWeight> out;
    switch (kind) {
        case MatrixCase::general:
            for (int r = 1; r <= n; ++r) {
                if (entry_at(lambda, r) - 1 < entry_at(lambda, r + 1)) continue;
                DomWeight nu = lambda;
                nu.entries[r - 1] -= 1;
                out.push_back(std::move(nu));
            }
            break;
        case MatrixCase::skew:
            for (int r = 1; 2 * r <= n; ++r) {
                if (entry_at(lambda, 2 * r) - 1 < entry_at(lambda, 2 * r + 1)) continue;
                DomWeight nu = lambda;
                nu.entries[2 * r - 2] -= 1;
                nu.entries[2 * r - 1] -= 1;
                out.push_back(std::move(nu));
            }
            break;
        case MatrixCase::symmetric:
            for (int r = 1; r <= n; ++r) {
                if (entry_at(lambda, r) - 2 < entry_at(lambda, r + 1)) continue;
                DomWeight nu = lambda;
                nu.entries[r - 1] -= 2;
                out.push_back(std::move(nu));
            }
            break;
    }
    return out;
}

bool inside_box(const DomWeight& lambda, const WeightBox& box) {
    for (int v : lambda.entries)
        if (v < box.lo || v > box.hi) return false;
    return true;
}

}  // namespace

bool DomWeight::is_dominant() const {
    for (std::size_t i = 1; i < entries.size(); ++i)
        if (entries[i - 1] < entries[i]) return false;
    return true;
}

std::string DomWeight::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(entries[i]);
    }
    return out + ")";
}

WeightBox default_box(MatrixCase kind, int n, int radius) {
    if (n < 1 || radius < 0) throw std::invalid_argument("bad box parameters");
    const int threshold = kind == MatrixCase::symmetric ? n + 1 : n;
    return WeightBox{n, -(threshold + radius), radius};
}

std::optional<int> classify_general(const DomWeight& lambda, int n) {
    require_length(lambda, n);
    require_dominant(lambda);
    for (int s = 0; s <= n; ++s)
        if (entry_at(lambda, s) >= s - n && s - n >= entry_at(lambda, s + 1)) return s;
    return std::nullopt;
}

std::optional<int> classify_skew(const DomWeight& lambda, int n) {
    require_length(lambda, n);
    require_dominant(lambda);
    if (n % 2 != 0) throw std::invalid_argument("skew classification requires n even");
    for (int i = 1; 2 * i <= n; ++i)
        if (lambda.entries[2 * i - 2] != lambda.entries[2 * i - 1])
            throw std::invalid_argument("skew weight must have paired entries: " + lambda.str());
    for (int s = 0; 2 * s <= n; ++s)
        if (entry_at(lambda, 2 * s) >= 2 * s - n && entry_at(lambda, 2 * s + 1) <= 2 * s - n + 1)
            return s;
    return std::nullopt;
}

std::optional<int> classify_symmetric(const DomWeight& lambda, int n) {
    require_length(lambda, n);
    require_dominant(lambda);
    for (int v : lambda.entries)
        if (v % 2 != 0)
            throw std::invalid_argument("symmetric weight must have even entries: " + lambda.str());
    for (int s = 0; s <= n + 1; ++s) {
        if ((n - s) % 2 == 0) continue;
        if (entry_at(lambda, s - 1) >= s - n - 1 && s - n - 1 >= entry_at(lambda, s + 1))
            return s;
    }
    return std::nullopt;
}

std::optional<int> classify(MatrixCase kind, const DomWeight& lambda, int n) {
    switch (kind) {
        case MatrixCase::general: return classify_general(lambda, n);
        case MatrixCase::skew: return classify_skew(lambda, n);
        case MatrixCase::symmetric: return classify_symmetric(lambda, n);
    }
    throw std::logic_error("bad case");
}

std::vector<DomWeight> enumerate_class(MatrixCase kind, int s, const WeightBox& box) {
    std::vector<DomWeight> out;
    for_each_classified(kind, box, [&](const DomWeight& lambda, std::optional<int> cls) {
        if (cls == s) out.push_back(lambda);
    });
    return out;
}

ClosureReport closure_check(MatrixCase kind, int p, const WeightBox& box) {
    if (box.lo > box.hi) throw std::invalid_argument("empty box");
    ClosureReport report;
    for_each_classified(kind, box, [&](const DomWeight& lambda, std::optional<int> cls) {
        if (!cls || *cls > p) return;
        // Only the classes that occur inside the rank-p module: for the
        // symmetric case that means s of the same parity as p.
        if (kind == MatrixCase::symmetric && (*cls - p) % 2 != 0) return;
        const int s = *cls;
        for (const DomWeight& nu : removals(kind, lambda)) {
            if (!inside_box(nu, box)) continue;
            ++report.checked;
            std::optional<int> target = classify(kind, nu, box.n);
            if (!target)
                report.unclassified.push_back({lambda, s, nu, target});
            else if (*target <= p && *target > s)
                report.violations.push_back({lambda, s, nu, target});
        }
    });
    return report;
}

std::string closure_report_json(const ClosureReport& report) {
    nlohmann::ordered_json out;
    out["checked"] = report.checked;
    auto issues = [](const std::vector<RemovalIssue>& list) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& issue : list) {
            nlohmann::ordered_json item;
            item["from"] = issue.from.entries;
            item["from_class"] = issue.from_class;
            item["to"] = issue.to.entries;
            if (issue.to_class)
                item["to_class"] = *issue.to_class;
            else
                item["to_class"] = nullptr;
            arr.push_back(std::move(item));
        }
        return arr;
    };
    out["violations"] = issues(report.violations);
    out["unclassified"] = issues(report.unclassified);
    return out.dump();
}

}  // namespace detinv
