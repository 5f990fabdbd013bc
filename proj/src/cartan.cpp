#include "detinv/cartan.hpp"

#include <stdexcept>

namespace detinv {

namespace {

// Exact division of a univariate polynomial in q by (1 - q^d). The
// quotient is built ascending via coefficient recurrence (equivalently,
// multiplication by the truncated geometric series); a nonzero remainder
// throws.
MPoly divide_by_one_minus_q(const MPoly& poly, int d) {
    if (poly.is_zero()) return poly;
    auto range = poly.support_range(Var::q);
    if (range->first < 0)
        throw std::domain_error("cartan division expects nonnegative support");
    const int top = range->second;

    std::vector<Int> coeffs(top + 1);
    for (const auto& [e, c] : poly.terms()) coeffs[e.q] = c;

    // quotient[k] = coeffs[k] + quotient[k-d]
    std::vector<Int> quotient(std::max(top - d + 1, 0));
    MPoly out;
    for (int k = 0; k + d <= top; ++k) {
        quotient[k] = coeffs[k] + (k >= d ? quotient[k - d] : Int(0));
        if (quotient[k] != 0) out += MPoly::monomial(quotient[k], {k, 0, 0});
    }
    MPoly remainder = poly - (MPoly(1) - MPoly::q(d)) * out;
    if (!remainder.is_zero())
        throw std::domain_error("inconsistent presentation data: nonzero remainder");
    return out;
}

void validate(const Presentation& pres) {
    if (pres.gen_degrees.size() != pres.rel_degrees.size())
        throw std::invalid_argument(
            "presentation requires equally many generators and relations");
    for (int d : pres.gen_degrees)
        if (d <= 0 || d % 2 != 0)
            throw std::invalid_argument("generator degrees must be positive and even");
    for (int d : pres.rel_degrees)
        if (d <= 0 || d % 2 != 0)
            throw std::invalid_argument("relation degrees must be positive and even");
    for (int d : pres.ext_degrees)
        if (d <= 0 || d % 2 != 1)
            throw std::invalid_argument("exterior degrees must be positive and odd");
}

std::vector<int> arithmetic(int first, int step, int count) {
    std::vector<int> out;
    for (int j = 0; j < count; ++j) out.push_back(first + j * step);
    return out;
}

}  // namespace

MPoly cartan_poincare(const Presentation& pres) {
    validate(pres);
    MPoly numerator = 1;
    for (int d : pres.rel_degrees) numerator *= MPoly(1) - MPoly::q(d);
    for (int d : pres.gen_degrees) numerator = divide_by_one_minus_q(numerator, d);
    for (int d : pres.ext_degrees) numerator *= MPoly(1) + MPoly::q(d);
    return numerator;
}

Presentation presentation_for(const Space& X, int p) {
    X.require_valid_p(p);
    const int m = X.m();
    const int n = X.n();
    const int eps = X.epsilon();
    Presentation pres;
    switch (X.kind()) {
        case MatrixCase::general:
            // Grassmannian factorial form: the quotient on degree-2i
            // generators a_1..a_p, c_1..c_{n-p} with relations in degrees
            // 2,4,...,2n divides out to C(n,p)_{q^2}.
            pres.gen_degrees = arithmetic(2, 2, p);
            for (int d : arithmetic(2, 2, n - p)) pres.gen_degrees.push_back(d);
            pres.rel_degrees = arithmetic(2, 2, n);
            pres.ext_degrees = arithmetic(2 * (m - p) + 1, 2, p);
            break;
        case MatrixCase::skew:
            pres.gen_degrees = arithmetic(4, 4, p);
            pres.rel_degrees = arithmetic(4 * (m - p + 1), 4, p);
            pres.ext_degrees = arithmetic(2 * (n + eps) - 4 * p + 1, 4, p);
            break;
        case MatrixCase::symmetric: {
            const int r = p / 2;
            pres.gen_degrees = arithmetic(4, 4, r);
            if (p % 2 == 0) {
                pres.rel_degrees = arithmetic(4 * (m - r + 1), 4, r);
                pres.ext_degrees = arithmetic(2 * (n + eps) - 4 * r + 1, 4, r);
            } else {
                pres.rel_degrees = arithmetic(4 * (m - r + eps), 4, r);
                pres.ext_degrees = arithmetic(4 * m - 4 * r + 1, 4, r);
                pres.ext_degrees.push_back(2 * n - 1);
            }
            break;
        }
    }
    return pres;
}

}  // namespace detinv
