#pragma once

#include "detinv/geometry.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace detinv {

enum class CheckStatus { pass, fail, skipped };

struct CheckResult {
    std::string suite;    // e.g. "degeneration"
    std::string subject;  // e.g. "general m=2 n=2 p=1"
    CheckStatus status = CheckStatus::pass;
    std::optional<std::string> witness;  // present exactly when status == fail
    std::vector<std::string> notes;      // informational; never affects status
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    int count(CheckStatus s) const;
    bool all_passed() const { return count(CheckStatus::fail) == 0; }
};

// Suite names accepted by run_all and the CLI, "all" included.
const std::vector<std::string>& suite_names();

// Specializing w -> q in the Cech-de Rham generating function must
// reproduce the Borel-Moore Poincare polynomial.
CheckResult check_degeneration(const Space& X, int p);

// Defect of the long exact sequence relating orbit cohomology to the
// Borel-Moore homology of the two nested closures. Zero wherever the
// connecting maps vanish; elsewhere it must stay coefficientwise <= 0
// and the nonzero slots are reported.
CheckResult check_les(const Space& X, int p);

// rho_{i,j} = 0 for i > j.
CheckResult check_rho_vanishing(const Space& X, int p);

// N_p + N_{p-1} equals the total Betti number of the orbit (wherever
// the connecting maps vanish), and the total matches both the closed
// binomial form and the coefficient sum of the cohomology polynomial.
CheckResult check_totals(const Space& X, int p);

// Generating-function shadow of the splitting of local cohomology along
// a locally closed orbit: specializing and shifting the combined series
// must give the orbit cohomology.
CheckResult check_locally_closed(const Space& X, int p);

// Weight-filtration suite for the general case: specializations, even
// weight support, and the lowest-weight piece against intersection
// cohomology.
CheckResult check_weight_suite(int m, int n, int p);

// Ranks of the connecting maps d_i in the long exact sequence, derived
// from the defect polynomial; empty when every map vanishes, nullopt
// when the defect is not consistent with any rank sequence.
std::optional<std::map<int, long long>> les_defect_ranks(const Space& X, int p);

// Runs the selected suite (or all of them) over every space within the
// bounds, plus the parameter-free q-binomial suite. Deterministic order.
// Throws std::invalid_argument for unknown suite names.
VerificationReport run_all(int max_n, int max_m, const std::string& suite = "all");

std::string report_to_text(const VerificationReport& report);
std::string report_to_json(const VerificationReport& report);

}  // namespace detinv
