#pragma once

#include "detinv/mpoly.hpp"

#include <string>

namespace detinv {

// "q^3 + q^4 + 2*q^6", "q^-2 + 1", "0"; terms ascend lexicographically
// in (e_q, e_w, e_t).
std::string to_text(const MPoly& p);

// "q^{3}+q^{4}+2q^{6}" with braces on every exponent != 1.
std::string to_latex(const MPoly& p);

}  // namespace detinv
