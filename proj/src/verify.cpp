#include "detinv/verify.hpp"

#include "detinv/cartan.hpp"
#include "detinv/invariants.hpp"
#include "detinv/qcomb.hpp"
#include "detinv/weights.hpp"

#include <json.hpp>

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace detinv {

namespace {

CheckResult pass(std::string suite, std::string subject) {
    return CheckResult{std::move(suite), std::move(subject), CheckStatus::pass, {}, {}};
}

CheckResult fail(std::string suite, std::string subject, std::string witness) {
    return CheckResult{std::move(suite), std::move(subject), CheckStatus::fail,
                       std::move(witness), {}};
}

CheckResult skipped(std::string suite, std::string subject, std::string note) {
    CheckResult r{std::move(suite), std::move(subject), CheckStatus::skipped, {}, {}};
    r.notes.push_back(std::move(note));
    return r;
}

std::string subject_of(const Space& X, int p) {
    return X.describe() + " p=" + std::to_string(p);
}

std::string exps_str(const Exps& e) {
    std::ostringstream out;
    out << "(q^" << e.q << ", w^" << e.w << ", t^" << e.t << ")";
    return out.str();
}

// First offending term of a nonzero difference, for witnesses.
std::string first_term(const MPoly& diff) {
    const auto& [e, c] = *diff.terms().begin();
    return "coefficient " + c.str() + " at " + exps_str(e);
}

// The maps d_i vanish for general and skew spaces, and for symmetric
// ones exactly when n - p is even or p = 1.
bool les_maps_vanish(const Space& X, int p) {
    if (X.kind() != MatrixCase::symmetric) return true;
    return (X.n() - p) % 2 == 0 || p == 1;
}

MPoly les_defect(const Space& X, int p) {
    return orbit_cohomology(X, p).reversed(Var::q, 2 * dim_orbit(X, p)) -
           bm_poincare(X, p) - MPoly::q(1) * bm_poincare(X, p - 1);
}

}  // namespace

int VerificationReport::count(CheckStatus s) const {
    int total = 0;
    for (const auto& check : checks)
        if (check.status == s) ++total;
    return total;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "all",       "degeneration", "les",    "rho",   "totals",
        "locally-closed", "weights", "qcomb", "cartan", "closure"};
    return names;
}

CheckResult check_degeneration(const Space& X, int p) {
    MPoly specialized = cdr_intro_form(X, p).substitute(Subst::one(Var::w, unit_exps(Var::q)));
    MPoly diff = specialized - bm_poincare(X, p);
    if (diff.is_zero()) return pass("degeneration", subject_of(X, p));
    return fail("degeneration", subject_of(X, p), first_term(diff));
}

std::optional<std::map<int, long long>> les_defect_ranks(const Space& X, int p) {
    MPoly delta = les_defect(X, p);
    std::map<int, long long> ranks;
    if (delta.is_zero()) return ranks;
    auto range = delta.support_range(Var::q);
    long long prev = 0;
    for (int i = range->first; i <= range->second + 1; ++i) {
        Int d = delta.coeff(i, 0, 0);
        Int r = -d - prev;
        if (r < 0 || r > std::numeric_limits<long long>::max()) return std::nullopt;
        prev = static_cast<long long>(r);
        if (prev != 0) ranks[i] = prev;
    }
    if (prev != 0) return std::nullopt;  // ranks must return to zero above the support
    return ranks;
}

CheckResult check_les(const Space& X, int p) {
    const std::string subject = subject_of(X, p);
    MPoly delta = les_defect(X, p);
    if (les_maps_vanish(X, p)) {
        if (delta.is_zero()) return pass("les", subject);
        return fail("les", subject, "nonzero defect, " + first_term(delta));
    }
    // Outside the vanishing regime only the inequality direction is
    // guaranteed: the defect must be <= 0 slotwise.
    for (const auto& [e, c] : delta.terms())
        if (c > 0)
            return fail("les", subject,
                        "defect exceeds the homology bound, " + first_term(delta));
    CheckResult result = pass("les", subject);
    if (auto ranks = les_defect_ranks(X, p)) {
        for (const auto& [degree, rank] : *ranks)
            result.notes.push_back("connecting map of rank " + std::to_string(rank) +
                                   " at homological degree " + std::to_string(degree));
    } else {
        for (const auto& [e, c] : delta.terms())
            result.notes.push_back("defect " + c.str() + " at degree " + std::to_string(e.q));
    }
    return result;
}

CheckResult check_rho_vanishing(const Space& X, int p) {
    MPoly rho = cdr_intro_form(X, p);
    for (const auto& [e, c] : rho.terms())
        if (e.q > e.w)
            return fail("rho", subject_of(X, p),
                        "rho_{i,j} != 0 with i > j at " + exps_str(e));
    return pass("rho", subject_of(X, p));
}

CheckResult check_totals(const Space& X, int p) {
    const std::string subject = subject_of(X, p);
    const Int betti_closed = total_betti(X, p);
    const Int betti_sum = orbit_cohomology(X, p).eval_all_one();
    if (betti_closed != betti_sum)
        return fail("totals", subject,
                    "closed form " + betti_closed.str() + " != coefficient sum " +
                        betti_sum.str());
    const Int np = np_total(X, p);
    const Int np_prev = np_total(X, p - 1);
    const Int total = np + np_prev;
    if (!les_maps_vanish(X, p)) {
        CheckResult r = skipped("totals", subject,
                                "outside the vanishing regime: N_p + N_{p-1} = " +
                                    total.str() + ", b_tot = " + betti_closed.str());
        return r;
    }
    if (total != betti_closed)
        return fail("totals", subject,
                    "N_p + N_{p-1} = " + total.str() + " != b_tot = " + betti_closed.str());
    return pass("totals", subject);
}

CheckResult check_locally_closed(const Space& X, int p) {
    const std::string subject = subject_of(X, p);
    if (!les_maps_vanish(X, p))
        return skipped("locally-closed", subject, "outside the vanishing regime");
    // Dense orbit: the ambient space itself has local cohomology only in
    // degree zero, with one-dimensional de Rham cohomology.
    MPoly closure_part = (p == X.p_max()) ? MPoly(1) : cdr_section_form(X, p);
    MPoly combined = closure_part + MPoly::w(-1) * cdr_section_form(X, p - 1);
    MPoly lhs = combined.substitute(Subst::one(Var::w, unit_exps(Var::q))) *
                MPoly::q(-2 * codim_orbit(X, p));
    MPoly diff = lhs - orbit_cohomology(X, p);
    if (diff.is_zero()) return pass("locally-closed", subject);
    return fail("locally-closed", subject, first_term(diff));
}

CheckResult check_weight_suite(int m, int n, int p) {
    const std::string subject = "general m=" + std::to_string(m) + " n=" +
                                std::to_string(n) + " p=" + std::to_string(p);
    const Space X = Space::general(m, n);
    const Subst collapse_w = Subst::one(Var::w, Exps{0, 0, 0});
    const Subst collapse_t = Subst::one(Var::t, Exps{0, 0, 0});

    MPoly wbm = weight_bm_general(m, n, p);
    if (wbm.substitute(collapse_w) != bm_poincare(X, p))
        return fail("weights", subject, "w -> 1 does not recover the BM polynomial");

    MPoly worb = weight_orbit_general(m, n, p);
    if (worb.substitute(collapse_w) != orbit_cohomology(X, p))
        return fail("weights", subject, "w -> 1 does not recover orbit cohomology");

    for (const MPoly* form : {&wbm, &worb})
        for (const auto& [e, c] : form->terms())
            if (e.w % 2 != 0)
                return fail("weights", subject, "odd weight exponent at " + exps_str(e));

    if (weight_cdr_trivariate(m, n, p).substitute(collapse_t) != cdr_section_form(X, p))
        return fail("weights", subject, "t -> 1 does not recover the bivariate form");

    // Lowest weight piece: the s = p summand, weight collapsed, is the
    // intersection cohomology of the closure shifted by q^{2pm}.
    MPoly lowest = weight_bm_general_summand(m, n, p, p).substitute(collapse_w);
    if (lowest != MPoly::q(2 * p * m) * ih_poincare(X, p) ||
        lowest != MPoly::q(2 * p * m) * qbinom(n, p, Var::q, 2))
        return fail("weights", subject, "lowest weight piece mismatch");

    return pass("weights", subject);
}

namespace {

void run_qcomb_suite(VerificationReport& report) {
    {
        CheckResult r = pass("qcomb", "oracle a<=12");
        for (int a = 0; a <= 12 && r.status == CheckStatus::pass; ++a)
            for (int b = 0; b <= a; ++b)
                if (qbinom(a, b) != qbinom_oracle(a, b)) {
                    r = fail("qcomb", "oracle a<=12",
                             "mismatch at a=" + std::to_string(a) + " b=" + std::to_string(b));
                    break;
                }
        report.checks.push_back(std::move(r));
    }
    {
        CheckResult r = pass("qcomb", "pascal a<=12");
        for (int a = 1; a <= 12 && r.status == CheckStatus::pass; ++a)
            for (int b = 1; b < a; ++b)
                if (qbinom(a, b) != MPoly::q(b) * qbinom(a - 1, b) + qbinom(a - 1, b - 1)) {
                    r = fail("qcomb", "pascal a<=12",
                             "mismatch at a=" + std::to_string(a) + " b=" + std::to_string(b));
                    break;
                }
        report.checks.push_back(std::move(r));
    }
    {
        CheckResult r = pass("qcomb", "subset a<=10");
        for (int a = 0; a <= 10 && r.status == CheckStatus::pass; ++a)
            for (int c = 0; c <= a && r.status == CheckStatus::pass; ++c)
                for (int b = 0; b <= c; ++b)
                    if (qbinom(a, b) * qbinom(a - b, c - b) != qbinom(a, c) * qbinom(c, b)) {
                        r = fail("qcomb", "subset a<=10",
                                 "mismatch at a=" + std::to_string(a) + " b=" +
                                     std::to_string(b) + " c=" + std::to_string(c));
                        break;
                    }
        report.checks.push_back(std::move(r));
    }
    {
        CheckResult r = pass("qcomb", "symmetry and column sums a<=12");
        for (int a = 0; a <= 12 && r.status == CheckStatus::pass; ++a)
            for (int b = 0; b <= a; ++b) {
                if (qbinom(a, b) != qbinom(a, a - b) ||
                    qbinom(a, b).eval_all_one() != binomial(a, b)) {
                    r = fail("qcomb", "symmetry and column sums a<=12",
                             "mismatch at a=" + std::to_string(a) + " b=" + std::to_string(b));
                    break;
                }
            }
        report.checks.push_back(std::move(r));
    }
    {
        CheckResult r = pass("qcomb", "rescale a<=10");
        for (int a = 0; a <= 10 && r.status == CheckStatus::pass; ++a)
            for (int b = 0; b <= a && r.status == CheckStatus::pass; ++b)
                for (int step : {1, -1, 2, -2, 4, -4})
                    if (!rescale_identity_check(a, b, step)) {
                        r = fail("qcomb", "rescale a<=10",
                                 "identity fails at a=" + std::to_string(a) + " b=" +
                                     std::to_string(b) + " step=" + std::to_string(step));
                        break;
                    }
        report.checks.push_back(std::move(r));
    }
    {
        CheckResult r = pass("qcomb", "gauss n<=10");
        const std::vector<Exps> bases = {{1, 0, 0}, {2, 0, 0}, {4, 0, 0}};
        const std::vector<Exps> outer = {{0, 1, 0}, {1, 1, 0}, {0, 1, 1}};
        for (int n = 0; n <= 10 && r.status == CheckStatus::pass; ++n)
            for (const Exps& a : bases)
                for (const Exps& b : outer) {
                    MPoly sum;
                    for (int k = 0; k <= n; ++k)
                        sum += MPoly::monomial(1, a * (k * (k - 1) / 2)) * qbinom_at(n, k, a) *
                               MPoly::monomial(1, b * k);
                    if (gauss_product(n, a, b) != sum) {
                        r = fail("qcomb", "gauss n<=10", "expansion mismatch at n=" + std::to_string(n));
                        break;
                    }
                }
        report.checks.push_back(std::move(r));
    }
}

CheckResult check_cartan(const Space& X, int p) {
    const std::string subject = subject_of(X, p);
    MPoly lhs;
    try {
        lhs = cartan_poincare(presentation_for(X, p));
    } catch (const std::domain_error& err) {
        return fail("cartan", subject, err.what());
    }
    MPoly diff = lhs - orbit_cohomology(X, p);
    if (diff.is_zero()) return pass("cartan", subject);
    return fail("cartan", subject, first_term(diff));
}

CheckResult check_closure(MatrixCase kind, int n, int p, int radius) {
    Space X = kind == MatrixCase::general
                  ? Space::general(n, n)
                  : (kind == MatrixCase::skew ? Space::skew(n) : Space::symmetric(n));
    const std::string subject =
        X.name() + " n=" + std::to_string(n) + " p=" + std::to_string(p) +
        " radius=" + std::to_string(radius);
    ClosureReport closure = closure_check(kind, p, default_box(kind, n, radius));
    if (closure.ok()) {
        CheckResult r = pass("closure", subject);
        r.notes.push_back(std::to_string(closure.checked) + " removals checked");
        return r;
    }
    std::string witness;
    if (!closure.violations.empty()) {
        const auto& v = closure.violations.front();
        witness = "class rose from " + std::to_string(v.from_class) + " at " + v.from.str();
    } else {
        witness = "unclassified removal from " + closure.unclassified.front().from.str();
    }
    return fail("closure", subject, witness);
}

}  // namespace

VerificationReport run_all(int max_n, int max_m, const std::string& suite) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end())
        throw std::invalid_argument("unknown suite: " + suite);
    if (max_n < 1 || max_m < 1) throw std::invalid_argument("bounds must be >= 1");
    auto want = [&](const char* name) { return suite == "all" || suite == name; };

    // Enumeration above this cap is too large for a routine sweep.
    constexpr int kClosureCap = 6;

    VerificationReport report;
    for (const Space& X : all_spaces(max_n, max_m)) {
        for (int p = 0; p <= X.p_max(); ++p) {
            if (want("cartan")) report.checks.push_back(check_cartan(X, p));

            if (want("closure") && (X.kind() != MatrixCase::general || X.m() == X.n())) {
                const bool admissible =
                    X.kind() != MatrixCase::symmetric || (X.n() - p) % 2 == 1;
                if (X.kind() == MatrixCase::skew && X.n() % 2 != 0) {
                    // no paired weights for odd n
                } else if (!admissible) {
                    // symmetric classes exist only when n - p is odd
                } else if (X.n() > kClosureCap) {
                    report.checks.push_back(skipped(
                        "closure", subject_of(X, p), "box enumeration capped at n=6"));
                } else {
                    report.checks.push_back(
                        check_closure(X.kind(), X.n(), p, X.n() + 3));
                }
            }

            if (want("degeneration")) report.checks.push_back(check_degeneration(X, p));
            if (want("les") && p >= 1) report.checks.push_back(check_les(X, p));
            if (want("locally-closed") && p >= 1)
                report.checks.push_back(check_locally_closed(X, p));
            if (want("rho")) report.checks.push_back(check_rho_vanishing(X, p));
            if (want("totals") && p >= 1) report.checks.push_back(check_totals(X, p));
            if (want("weights") && X.kind() == MatrixCase::general && p < X.n())
                report.checks.push_back(check_weight_suite(X.m(), X.n(), p));
        }
    }
    if (want("qcomb")) run_qcomb_suite(report);
    return report;
}

namespace {

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

}  // namespace

std::string report_to_text(const VerificationReport& report) {
    std::ostringstream out;
    for (const auto& check : report.checks) {
        out << "[" << status_name(check.status) << "] " << check.suite << ": "
            << check.subject << "\n";
        if (check.witness) out << "    witness: " << *check.witness << "\n";
        for (const auto& note : check.notes) out << "    note: " << note << "\n";
    }
    out << "summary: " << report.count(CheckStatus::pass) << " passed, "
        << report.count(CheckStatus::fail) << " failed, "
        << report.count(CheckStatus::skipped) << " skipped\n";
    return out.str();
}

std::string report_to_json(const VerificationReport& report) {
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& check : report.checks) {
        nlohmann::ordered_json item;
        item["suite"] = check.suite;
        item["subject"] = check.subject;
        item["status"] = status_name(check.status);
        if (check.witness) item["witness"] = *check.witness;
        if (!check.notes.empty()) item["notes"] = check.notes;
        checks.push_back(std::move(item));
    }
    nlohmann::ordered_json out;
    out["summary"] = {{"pass", report.count(CheckStatus::pass)},
                      {"fail", report.count(CheckStatus::fail)},
                      {"skipped", report.count(CheckStatus::skipped)}};
    out["checks"] = std::move(checks);
    return out.dump(2);
}

}  // namespace detinv
