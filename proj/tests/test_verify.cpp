#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "detinv/verify.hpp"

using namespace detinv;

TEST_CASE("degeneration check") {
    CHECK(check_degeneration(Space::general(2, 2), 1).status == CheckStatus::pass);
    CHECK(check_degeneration(Space::symmetric(5), 2).status == CheckStatus::pass);
    for (const Space& X : all_spaces(6, 6))
        CHECK(check_degeneration(X, X.p_max()).status == CheckStatus::pass);
}

TEST_CASE("les check in the vanishing regime") {
    CHECK(check_les(Space::general(2, 2), 1).status == CheckStatus::pass);
    CHECK(check_les(Space::symmetric(4), 2).status == CheckStatus::pass);
    CHECK(check_les(Space::symmetric(5), 1).status == CheckStatus::pass);
    CHECK(les_defect_ranks(Space::general(3, 2), 2).value().empty());
}

TEST_CASE("les defect for symmetric odd n at rank two") {
    // The single nonvanishing connecting map has rank one and sits at
    // homological degree 2n.
    for (int n : {3, 5, 7}) {
        CheckResult result = check_les(Space::symmetric(n), 2);
        CHECK(result.status == CheckStatus::pass);
        CHECK(result.notes.size() == 1);
        auto ranks = les_defect_ranks(Space::symmetric(n), 2);
        REQUIRE(ranks.has_value());
        REQUIRE(ranks->size() == 1);
        CHECK(ranks->begin()->first == 2 * n);
        CHECK(ranks->begin()->second == 1);
    }
}

TEST_CASE("rho vanishing check") {
    for (const Space& X : all_spaces(8, 8))
        for (int p = 0; p <= X.p_max(); ++p)
            CHECK(check_rho_vanishing(X, p).status == CheckStatus::pass);
}

TEST_CASE("totals check") {
    CHECK(check_totals(Space::general(3, 3), 1).status == CheckStatus::pass);
    CHECK(check_totals(Space::skew(6), 2).status == CheckStatus::pass);
    CHECK(check_totals(Space::symmetric(4), 2).status == CheckStatus::pass);
    CheckResult outside = check_totals(Space::symmetric(5), 2);
    CHECK(outside.status == CheckStatus::skipped);
    REQUIRE(outside.notes.size() == 1);
    CHECK(outside.notes.front().find("N_p + N_{p-1} = 6") != std::string::npos);
    CHECK(outside.notes.front().find("b_tot = 4") != std::string::npos);
}

TEST_CASE("locally closed splitting check") {
    CHECK(check_locally_closed(Space::general(2, 2), 1).status == CheckStatus::pass);
    CHECK(check_locally_closed(Space::skew(5), 1).status == CheckStatus::pass);
    CHECK(check_locally_closed(Space::symmetric(5), 1).status == CheckStatus::pass);
    CHECK(check_locally_closed(Space::symmetric(5), 2).status == CheckStatus::skipped);
    for (const Space& X : all_spaces(8, 8))
        for (int p = 1; p <= X.p_max(); ++p) {
            CheckResult result = check_locally_closed(X, p);
            if (X.kind() == MatrixCase::symmetric && (X.n() - p) % 2 != 0 && p != 1)
                CHECK(result.status == CheckStatus::skipped);
            else
                CHECK(result.status == CheckStatus::pass);
        }
}

TEST_CASE("weight suite check") {
    CHECK(check_weight_suite(2, 2, 1).status == CheckStatus::pass);
    CHECK(check_weight_suite(4, 4, 2).status == CheckStatus::pass);
    CHECK(check_weight_suite(5, 3, 0).status == CheckStatus::pass);
}

TEST_CASE("failure wiring produces a witness") {
    // A check is a failure exactly when it carries a witness; exercise
    // the invariant on the pass side here.
    CheckResult ok = check_degeneration(Space::skew(4), 1);
    CHECK(ok.status == CheckStatus::pass);
    CHECK_FALSE(ok.witness.has_value());
}

TEST_CASE("run_all bounds and suites") {
    CHECK_THROWS_AS(run_all(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(run_all(4, 4, "nosuch"), std::invalid_argument);

    VerificationReport tiny = run_all(1, 1);
    CHECK(tiny.all_passed());
    CHECK(!tiny.checks.empty());

    VerificationReport les_only = run_all(5, 5, "les");
    CHECK(les_only.all_passed());
    bool found_informational = false;
    for (const auto& check : les_only.checks)
        if (check.subject == "symmetric n=5 p=2" && !check.notes.empty())
            found_informational = true;
    CHECK(found_informational);
}

TEST_CASE("full sweep is clean") {
    VerificationReport report = run_all(6, 6);
    CHECK(report.all_passed());
    CHECK(report.count(CheckStatus::pass) > 100);
    for (const auto& check : report.checks) {
        CHECK((check.status == CheckStatus::fail) == check.witness.has_value());
    }
}

TEST_CASE("reports are deterministic and well formed") {
    VerificationReport a = run_all(3, 3);
    VerificationReport b = run_all(3, 3);
    CHECK(report_to_json(a) == report_to_json(b));
    CHECK(report_to_text(a) == report_to_text(b));
    CHECK(report_to_text(a).find("summary:") != std::string::npos);
    CHECK(report_to_json(a).find("\"fail\": 0") != std::string::npos);
}
