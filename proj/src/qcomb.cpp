#include "detinv/qcomb.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace detinv {

namespace {

void require_ab(int a, int b) {
    if (b < 0 || a < b)
        throw std::invalid_argument("qbinom requires a >= b >= 0");
}

// Memoized C(a,b)_q via the q-Pascal recursion
// C(i,j) = q^j C(i-1,j) + C(i-1,j-1), run as a row DP.
MPoly qbinom_q(int a, int b) {
    static std::map<std::pair<int, int>, MPoly> cache;
    static std::mutex mutex;

    if (b == 0 || b == a) return 1;
    const auto key = std::make_pair(a, b);
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    std::vector<MPoly> row(b + 1);
    row[0] = 1;
    for (int i = 1; i <= a; ++i) {
        for (int j = std::min(i, b); j >= 1; --j) {
            MPoly upper = (j <= i - 1) ? row[j] : MPoly();
            row[j] = MPoly::q(j) * upper + row[j - 1];
        }
    }

    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(key, std::move(row[b])).first->second;
}

}  // namespace

MPoly qbinom_at(int a, int b, const Exps& base) {
    require_ab(a, b);
    MPoly univariate = qbinom_q(a, b);
    MPoly out;
    for (const auto& [e, c] : univariate.terms())
        out += MPoly::monomial(c, base * e.q);
    return out;
}

MPoly qbinom(const QBinSpec& spec) {
    if (spec.step == 0) throw std::invalid_argument("qbinom step must be nonzero");
    return qbinom_at(spec.a, spec.b, unit_exps(spec.var, spec.step));
}

MPoly qbinom(int a, int b, Var var, int step) {
    return qbinom(QBinSpec{a, b, var, step});
}

MPoly qbinom_or_zero(int a, int b, Var var, int step) {
    if (b < 0 || a < b) return 0;
    return qbinom(a, b, var, step);
}

MPoly qbinom_oracle(int a, int b) {
    require_ab(a, b);
    if (a > 14) throw std::invalid_argument("qbinom_oracle capped at a <= 14");
    const int rows = a - b;
    const int cols = b;
    MPoly out;
    // Enumerate weakly decreasing part lists inside the rows x cols box.
    auto rec = [&](auto&& self, int row, int bound, int size) -> void {
        if (row == rows) {
            out += MPoly::q(size);
            return;
        }
        for (int part = 0; part <= bound; ++part) self(self, row + 1, part, size + part);
    };
    rec(rec, 0, cols, 0);
    return out;
}

bool rescale_identity_check(int a, int b, int step) {
    require_ab(a, b);
    if (step == 0) throw std::invalid_argument("step must be nonzero");
    MPoly lhs = qbinom(a, b, Var::q, -step);
    MPoly rhs = MPoly::q(-step * b * (a - b)) * qbinom(a, b, Var::q, step);
    return lhs == rhs;
}

MPoly gauss_product(int n, const Exps& a, const Exps& b) {
    if (n < 0) throw std::invalid_argument("gauss_product requires n >= 0");
    MPoly out = 1;
    for (int k = 0; k < n; ++k)
        out *= MPoly(1) + MPoly::monomial(1, a * k + b);
    return out;
}

Int binomial(int a, int b) {
    if (b < 0 || a < b) return 0;
    b = std::min(b, a - b);
    Int num = 1;
    for (int i = 0; i < b; ++i) {
        num *= a - i;
        num /= i + 1;  // exact at each step: product of i+1 consecutive ints
    }
    return num;
}

}  // namespace detinv
