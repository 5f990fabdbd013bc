#pragma once

#include "detinv/geometry.hpp"
#include "detinv/mpoly.hpp"

#include <vector>

namespace detinv {

// Degree data of a compact homogeneous-space cohomology presentation: a
// finite-dimensional quotient (equally many polynomial generators and
// relations) tensored with an exterior algebra on odd-degree generators.
struct Presentation {
    std::vector<int> gen_degrees;  // positive, even
    std::vector<int> rel_degrees;  // positive, even; same length as gen_degrees
    std::vector<int> ext_degrees;  // positive, odd
};

// prod_i (1 - q^{rel_i}) / prod_i (1 - q^{gen_i}) * prod_j (1 + q^{ext_j}),
// with the quotient computed by exact polynomial division (geometric-series
// multiplication with a verified zero remainder). Throws std::domain_error
// when a division leaves a remainder, i.e. the degree data is inconsistent.
MPoly cartan_poincare(const Presentation& pres);

// The presentation degree data for the cohomology ring of the orbit of
// rank index p.
Presentation presentation_for(const Space& X, int p);

}  // namespace detinv
