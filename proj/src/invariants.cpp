#include "detinv/invariants.hpp"

#include "detinv/qcomb.hpp"

#include <stdexcept>

namespace detinv {

namespace {

int choose2(int k) { return k * (k - 1) / 2; }

void require_below_dense(const Space& X, int p) {
    X.require_valid_p(p);
    if (p == X.p_max())
        throw std::invalid_argument(
            "dense orbit: composition series formula not applicable");
}

}  // namespace

MPoly bm_poincare(const Space& X, int p) {
    X.require_valid_p(p);
    if (p == X.p_max()) return MPoly::q(2 * X.ambient_dim());

    const int m = X.m();
    const int n = X.n();
    MPoly out;
    switch (X.kind()) {
        case MatrixCase::general:
            for (int s = 0; s <= p; ++s)
                out += MPoly::q(2 * s * (m + n - s) + (p - s) * (p - s + 2)) *
                       qbinom(n, s, Var::q, -2) *
                       qbinom_or_zero(n - 1 - s, p - s, Var::q, 2);
            break;
        case MatrixCase::skew:
            for (int s = 0; s <= p; ++s)
                out += MPoly::q(2 * s * (2 * n - 1 - 2 * s) + (p - s) * (2 * p - 2 * s + 3)) *
                       qbinom(m, s, Var::q, -4) *
                       qbinom_or_zero(m - 1 - s, p - s, Var::q, 4);
            break;
        case MatrixCase::symmetric: {
            const int eps = epsilon_p(X, p);
            for (int s = p % 2; s <= p; s += 2)
                out += MPoly::q(s * (2 * n + 1 - s) + (p - s) * (p - s + 3) / 2) *
                       qbinom(m + eps, s / 2, Var::q, -4) *
                       qbinom_or_zero((n - s - 1) / 2, (p - s) / 2, Var::q, 4);
            break;
        }
    }
    return out;
}

MPoly orbit_cohomology(const Space& X, int p) {
    X.require_valid_p(p);
    const int m = X.m();
    const int n = X.n();
    const int eps = X.epsilon();
    MPoly out;
    switch (X.kind()) {
        case MatrixCase::general:
            out = qbinom(n, p, Var::q, 2);
            for (int j = 0; j < p; ++j) out *= MPoly(1) + MPoly::q(2 * m - 2 * p + 1 + 2 * j);
            break;
        case MatrixCase::skew:
            out = qbinom(m, p, Var::q, 4);
            for (int j = 0; j < p; ++j)
                out *= MPoly(1) + MPoly::q(2 * (n + eps) - 4 * p + 1 + 4 * j);
            break;
        case MatrixCase::symmetric: {
            const int r = p / 2;
            if (p % 2 == 0) {
                out = qbinom(m, r, Var::q, 4);
                for (int j = 0; j < r; ++j)
                    out *= MPoly(1) + MPoly::q(2 * (n + eps) - 4 * r + 1 + 4 * j);
            } else {
                out = qbinom(m - 1 + eps, r, Var::q, 4);
                for (int j = 0; j < r; ++j)
                    out *= MPoly(1) + MPoly::q(4 * m - 4 * r + 1 + 4 * j);
                out *= MPoly(1) + MPoly::q(2 * n - 1);
            }
            break;
        }
    }
    return out;
}

Int total_betti(const Space& X, int p) {
    X.require_valid_p(p);
    switch (X.kind()) {
        case MatrixCase::general: return binomial(X.n(), p) << p;
        case MatrixCase::skew: return binomial(X.m(), p) << p;
        case MatrixCase::symmetric: {
            // Odd rank counts the quotient on m - 1 + epsilon generators;
            // for odd n this is the familiar C(m,r) 2^{r+1}.
            const int r = p / 2;
            if (p % 2 == 0) return binomial(X.m(), r) << r;
            return binomial(X.m() - 1 + X.epsilon(), r) << (r + 1);
        }
    }
    throw std::logic_error("bad case");
}

MPoly derham_simple(const Space& X, int s) {
    X.require_valid_p(s);
    const int m = X.m();
    const int n = X.n();
    switch (X.kind()) {
        case MatrixCase::general:
            return qbinom(n, s, Var::q, 2) * MPoly::q((m - s) * (n - s));
        case MatrixCase::skew:
            return qbinom(m, s, Var::q, 4) *
                   MPoly::q(choose2(n) - s * (2 * n - 2 * s - 1));
        case MatrixCase::symmetric:
            return qbinom(m + epsilon_p(X, s), s / 2, Var::q, 4) *
                   MPoly::q(choose2(n - s + 1));
    }
    throw std::logic_error("bad case");
}

CompSeries loccoh_series(const Space& X, int p) {
    require_below_dense(X, p);
    const int m = X.m();
    const int n = X.n();
    CompSeries series;
    switch (X.kind()) {
        case MatrixCase::general:
            for (int s = 0; s <= p; ++s)
                series.entries[s] =
                    MPoly::w((n - p) * (n - p) + (n - s) * (m - n)) *
                    qbinom_or_zero(n - 1 - s, p - s, Var::w, 2);
            break;
        case MatrixCase::skew: {
            const int eps = X.epsilon();
            for (int s = 0; s <= p; ++s)
                series.entries[s] =
                    MPoly::w(2 * (m - p) * (m - p) + p - m + 2 * eps * (m - s)) *
                    qbinom_or_zero(m - 1 - s, p - s, Var::w, 4);
            break;
        }
        case MatrixCase::symmetric:
            for (int s = p % 2; s <= p; s += 2)
                series.entries[s] =
                    MPoly::w(1 + choose2(n - s + 1) - choose2(p - s + 2)) *
                    qbinom_or_zero((n - s - 1) / 2, (p - s) / 2, Var::w, -4);
            break;
    }
    return series;
}

MPoly cdr_section_form(const Space& X, int p) {
    MPoly out;
    for (const auto& [s, mult] : loccoh_series(X, p).entries)
        out += derham_simple(X, s) * mult;
    return out;
}

MPoly cdr_intro_form(const Space& X, int p) {
    X.require_valid_p(p);
    const int d = X.ambient_dim();
    if (p == X.p_max()) return MPoly::monomial(1, {d, d, 0});

    const int m = X.m();
    const int n = X.n();
    MPoly out;
    switch (X.kind()) {
        case MatrixCase::general:
            for (int s = 0; s <= p; ++s) {
                const int e = s * (m + n - s);
                out += MPoly::monomial(1, {e, e, 0}) * qbinom(n, s, Var::q, -2) *
                       MPoly::w((p - s) * (p - s + 2)) *
                       qbinom_or_zero(n - 1 - s, p - s, Var::w, 2);
            }
            break;
        case MatrixCase::skew:
            for (int s = 0; s <= p; ++s) {
                const int e = s * (2 * n - 1 - 2 * s);
                out += MPoly::monomial(1, {e, e, 0}) * qbinom(m, s, Var::q, -4) *
                       MPoly::w((p - s) * (2 * p - 2 * s + 3)) *
                       qbinom_or_zero(m - 1 - s, p - s, Var::w, 4);
            }
            break;
        case MatrixCase::symmetric: {
            const int eps = epsilon_p(X, p);
            for (int s = p % 2; s <= p; s += 2) {
                const int e = s * (2 * n + 1 - s) / 2;
                out += MPoly::monomial(1, {e, e, 0}) * qbinom(m + eps, s / 2, Var::q, -4) *
                       MPoly::w((p - s) * (p - s + 3) / 2) *
                       qbinom_or_zero((n - s - 1) / 2, (p - s) / 2, Var::w, 4);
            }
            break;
        }
    }
    return out;
}

Int np_total(const Space& X, int p) {
    X.require_valid_p(p);
    if (p == X.p_max()) return 1;
    return cdr_section_form(X, p).eval_all_one();
}

MPoly ih_poincare(const Space& X, int s) {
    return derham_simple(X, s) * MPoly::q(-codim_orbit(X, s));
}

MPoly weight_bm_general_summand(int m, int n, int p, int s) {
    const Exps u{1, -1, 0};  // q w^{-1}
    return MPoly::w(p - s) *
           MPoly::monomial(1, u * (2 * s * m + (p - s) * (p - s + 2))) *
           qbinom_at(n, s, u * 2) * qbinom_at(n - 1 - s, p - s, u * 2);
}

MPoly weight_bm_general(int m, int n, int p) {
    if (!(m >= n && n > p && p >= 0))
        throw std::invalid_argument("weight_bm_general requires m >= n > p >= 0");
    MPoly out;
    for (int s = 0; s <= p; ++s) out += weight_bm_general_summand(m, n, p, s);
    return out;
}

MPoly weight_orbit_general(int m, int n, int p) {
    if (!(m >= n && n >= p && p >= 0))
        throw std::invalid_argument("weight_orbit_general requires 0 <= p <= n <= m");
    MPoly out = qbinom_at(n, p, {2, 2, 0});
    for (int s = 0; s < p; ++s)
        out *= MPoly(1) + MPoly::monomial(1, {2 * m - 2 * s - 1, 2 * m - 2 * s, 0});
    return out;
}

MPoly weight_cdr_trivariate(int m, int n, int p) {
    if (!(m >= n && n > p && p >= 0))
        throw std::invalid_argument("weight_cdr_trivariate requires 0 <= p < n <= m");
    const Exps qt{1, 0, 1};
    const Exps wt{0, 1, 1};
    MPoly out;
    for (int s = 0; s <= p; ++s)
        out += MPoly::t(p - s) *
               MPoly::monomial(1, qt * ((m - s) * (n - s))) *
               qbinom_at(n, s, qt * 2) *
               MPoly::monomial(1, wt * ((n - p) * (n - p) + (n - s) * (m - n))) *
               qbinom_at(n - 1 - s, p - s, wt * 2);
    return out;
}

}  // namespace detinv
