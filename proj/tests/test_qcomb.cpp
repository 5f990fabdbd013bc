#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "detinv/qcomb.hpp"

#include <atomic>
#include <thread>

using namespace detinv;

TEST_CASE("small q-binomials") {
    CHECK(qbinom(2, 1) == MPoly(1) + MPoly::q(1));
    // C(4,2)_q = 1 + q + 2q^2 + q^3 + q^4, matching the box-partition count
    MPoly expected = MPoly(1) + MPoly::q(1) + MPoly::monomial(2, {2, 0, 0}) +
                     MPoly::q(3) + MPoly::q(4);
    CHECK(qbinom(4, 2) == expected);
    CHECK(qbinom(4, 2) == qbinom_oracle(4, 2));
    for (int n = 0; n <= 8; ++n) CHECK(qbinom(n, 0) == MPoly(1));
}

TEST_CASE("steps and variables") {
    CHECK(qbinom(2, 1, Var::q, 2) == MPoly(1) + MPoly::q(2));
    CHECK(qbinom(2, 1, Var::w, 4) == MPoly(1) + MPoly::w(4));
    CHECK(qbinom(2, 1, Var::q, -2) == MPoly(1) + MPoly::q(-2));
    CHECK(qbinom(3, 1, Var::t, -1) == MPoly(1) + MPoly::t(-1) + MPoly::t(-2));
}

TEST_CASE("qbinom_at with a mixed monomial base") {
    // C(2,1) at qw^{-1} squared
    MPoly got = qbinom_at(2, 1, Exps{2, -2, 0});
    CHECK(got == MPoly(1) + MPoly::monomial(1, {2, -2, 0}));
}

TEST_CASE("invalid arguments") {
    CHECK_THROWS_AS(qbinom(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(qbinom(-1, 0), std::invalid_argument);
    CHECK_THROWS_AS(qbinom(3, -1), std::invalid_argument);
    CHECK_THROWS_AS(qbinom(QBinSpec{3, 1, Var::q, 0}), std::invalid_argument);
    CHECK_THROWS_AS(qbinom_oracle(15, 7), std::invalid_argument);
    CHECK(qbinom_or_zero(1, 2, Var::q, 1).is_zero());
    CHECK(qbinom_or_zero(3, -1, Var::q, 1).is_zero());
    CHECK(qbinom_or_zero(3, 1, Var::q, 1) == qbinom(3, 1));
}

TEST_CASE("oracle on tiny boxes") {
    CHECK(qbinom_oracle(3, 1) == MPoly(1) + MPoly::q(1) + MPoly::q(2));
    CHECK(qbinom_oracle(5, 0) == MPoly(1));
    CHECK(qbinom_oracle(0, 0) == MPoly(1));
}

TEST_CASE("recursion equals partition enumeration up to a = 12") {
    for (int a = 0; a <= 12; ++a)
        for (int b = 0; b <= a; ++b) CHECK(qbinom(a, b) == qbinom_oracle(a, b));
}

TEST_CASE("q-Pascal recursion") {
    for (int a = 1; a <= 12; ++a)
        for (int b = 1; b < a; ++b)
            CHECK(qbinom(a, b) == MPoly::q(b) * qbinom(a - 1, b) + qbinom(a - 1, b - 1));
}

TEST_CASE("subset identity") {
    for (int a = 0; a <= 10; ++a)
        for (int c = 0; c <= a; ++c)
            for (int b = 0; b <= c; ++b)
                CHECK(qbinom(a, b) * qbinom(a - b, c - b) == qbinom(a, c) * qbinom(c, b));
}

TEST_CASE("symmetry and coefficient sums") {
    for (int a = 0; a <= 12; ++a)
        for (int b = 0; b <= a; ++b) {
            CHECK(qbinom(a, b) == qbinom(a, a - b));
            CHECK(qbinom(a, b).eval_all_one() == binomial(a, b));
            CHECK(qbinom(a, b).is_nonneg());
        }
}

TEST_CASE("support lies on multiples of the step") {
    for (int step : {2, -2, 4, -4})
        for (int a = 0; a <= 8; ++a)
            for (int b = 0; b <= a; ++b) {
                MPoly poly = qbinom(a, b, Var::q, step);
                for (const auto& [e, c] : poly.terms()) CHECK(e.q % step == 0);
            }
}

TEST_CASE("rescale identity") {
    CHECK(rescale_identity_check(2, 1, 2));
    CHECK(rescale_identity_check(4, 2, 4));
    CHECK(rescale_identity_check(7, 3, -2));
    for (int a = 0; a <= 10; ++a)
        for (int b = 0; b <= a; ++b)
            for (int step : {1, -1, 2, -2, 4, -4}) CHECK(rescale_identity_check(a, b, step));
}

TEST_CASE("gauss product small cases") {
    CHECK(gauss_product(0, Exps{2, 0, 0}, Exps{0, 1, 0}) == MPoly(1));
    // n=2, a=q^2, b=w: 1 + (1+q^2)w + q^2 w^2
    MPoly expected = MPoly(1) + MPoly::w(1) + MPoly::monomial(1, {2, 1, 0}) +
                     MPoly::monomial(1, {2, 2, 0});
    CHECK(gauss_product(2, Exps{2, 0, 0}, Exps{0, 1, 0}) == expected);
}

TEST_CASE("gaussian binomial theorem") {
    const std::vector<Exps> bases = {{1, 0, 0}, {2, 0, 0}, {4, 0, 0}};
    const std::vector<Exps> outer = {{0, 1, 0}, {1, 1, 0}, {0, 1, 1}};
    for (int n = 0; n <= 10; ++n)
        for (const Exps& a : bases)
            for (const Exps& b : outer) {
                MPoly sum;
                for (int k = 0; k <= n; ++k)
                    sum += MPoly::monomial(1, a * (k * (k - 1) / 2)) * qbinom_at(n, k, a) *
                           MPoly::monomial(1, b * k);
                CHECK(gauss_product(n, a, b) == sum);
            }
}

TEST_CASE("memo is safe under concurrent use") {
    std::vector<std::thread> workers;
    std::atomic<bool> mismatch{false};
    for (int t = 0; t < 4; ++t)
        workers.emplace_back([&] {
            for (int a = 0; a <= 12; ++a)
                for (int b = 0; b <= a; ++b)
                    if (qbinom(a, b).eval_all_one() != binomial(a, b)) mismatch = true;
        });
    for (auto& worker : workers) worker.join();
    CHECK_FALSE(mismatch.load());
}

TEST_CASE("plain binomials") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(20, 10) == 184756);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(3, -1) == 0);
}
