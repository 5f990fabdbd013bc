#pragma once

#include "detinv/geometry.hpp"
#include "detinv/mpoly.hpp"

#include <map>

namespace detinv {

// Composition-series table of the local cohomology with support in one
// orbit closure: s maps to the multiplicity generating function (in w)
// of the simple factor D_s.
struct CompSeries {
    std::map<int, MPoly> entries;
};

// Poincare polynomial (in q) of the Borel-Moore homology of the orbit
// closure of rank index p; q^{2 d_X} for the dense orbit.
MPoly bm_poincare(const Space& X, int p);

// Poincare polynomial (in q) of the singular cohomology of the orbit.
MPoly orbit_cohomology(const Space& X, int p);

// Total Betti number of the orbit, by the closed binomial forms.
Int total_betti(const Space& X, int p);

// Generating function (in q) of the de Rham cohomology of the simple
// equivariant module D_s.
MPoly derham_simple(const Space& X, int s);

// Composition series of local cohomology; requires p < p_max (the dense
// orbit has no such series).
CompSeries loccoh_series(const Space& X, int p);

// Bivariate generating function (q for de Rham degree, w for local
// cohomology degree) assembled from derham_simple and loccoh_series.
// Requires p < p_max.
MPoly cdr_section_form(const Space& X, int p);

// The same data reindexed intrinsically: generating function of the
// Cech-de Rham numbers rho_{i,j}. Defined for all p; the dense orbit
// gives (qw)^{d_X}.
MPoly cdr_intro_form(const Space& X, int p);

// Total Cech-de Rham number N_p; equals 1 for the dense orbit.
Int np_total(const Space& X, int p);

// Intersection cohomology Poincare polynomial of the orbit closure:
// derham_simple shifted down by the orbit codimension.
MPoly ih_poincare(const Space& X, int s);

// Weight-filtration refinements; general case only.

// Gr^W of Borel-Moore homology: q tracks homological degree, w weight.
// Requires m >= n > p >= 0.
MPoly weight_bm_general(int m, int n, int p);

// Gr^W of orbit cohomology. Requires 0 <= p <= n <= m.
MPoly weight_orbit_general(int m, int n, int p);

// Trivariate refinement of cdr_section_form: t tracks the weight.
// Requires 0 <= p < n <= m.
MPoly weight_cdr_trivariate(int m, int n, int p);

// One summand of weight_bm_general, exposed for cross-checks against
// the intersection cohomology of the closure.
MPoly weight_bm_general_summand(int m, int n, int p, int s);

}  // namespace detinv
