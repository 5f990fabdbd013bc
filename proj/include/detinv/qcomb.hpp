#pragma once

#include "detinv/mpoly.hpp"

namespace detinv {

// A q-binomial coefficient request: C(a,b) evaluated at var^step.
// Negative steps give Laurent support directly.
struct QBinSpec {
    int a = 0;
    int b = 0;
    Var var = Var::q;
    int step = 1;
};

// C(a,b)_{var^step}, built by the q-Pascal recursion (no division).
// Requires a >= b >= 0 and step != 0.
MPoly qbinom(const QBinSpec& spec);
MPoly qbinom(int a, int b, Var var = Var::q, int step = 1);

// C(a,b) with an arbitrary unit-monomial base in place of q.
MPoly qbinom_at(int a, int b, const Exps& base);

// Empty-sum convention used by the closed formulas: b < 0 or a < b
// contributes zero instead of raising.
MPoly qbinom_or_zero(int a, int b, Var var, int step);

// Independent oracle: sum of q^|lambda| over partitions lambda fitting
// in the (a-b) x b box, by explicit enumeration. Capped at a <= 14.
MPoly qbinom_oracle(int a, int b);

// Checks C(a,b)_{x^{-1}} == x^{-b(a-b)} C(a,b)_x with x = q^step, as
// exact Laurent polynomials.
bool rescale_identity_check(int a, int b, int step);

// Expanded product prod_{k=0}^{n-1} (1 + a^k b) for unit monomials a, b.
MPoly gauss_product(int n, const Exps& a, const Exps& b);

// Ordinary binomial coefficient, exact.
Int binomial(int a, int b);

}  // namespace detinv
