#include "detinv/geometry.hpp"

#include <stdexcept>

namespace detinv {

Space Space::general(int m, int n) {
    if (n < 1 || m < n)
        throw std::invalid_argument("general case requires m >= n >= 1");
    return Space(MatrixCase::general, m, n);
}

Space Space::skew(int n) {
    if (n < 2) throw std::invalid_argument("skew case requires n >= 2");
    return Space(MatrixCase::skew, n / 2, n);
}

Space Space::symmetric(int n) {
    if (n < 1) throw std::invalid_argument("symmetric case requires n >= 1");
    return Space(MatrixCase::symmetric, n / 2, n);
}

int Space::ambient_dim() const {
    switch (kind_) {
        case MatrixCase::general: return m_ * n_;
        case MatrixCase::skew: return n_ * (n_ - 1) / 2;
        case MatrixCase::symmetric: return n_ * (n_ + 1) / 2;
    }
    throw std::logic_error("bad case");
}

int Space::p_max() const {
    return kind_ == MatrixCase::skew ? n_ / 2 : n_;
}

void Space::require_valid_p(int p) const {
    if (p < 0 || p > p_max())
        throw std::out_of_range("orbit index p out of range for " + describe());
}

std::string Space::name() const {
    switch (kind_) {
        case MatrixCase::general: return "general";
        case MatrixCase::skew: return "skew";
        case MatrixCase::symmetric: return "symmetric";
    }
    throw std::logic_error("bad case");
}

std::string Space::describe() const {
    if (kind_ == MatrixCase::general)
        return name() + " m=" + std::to_string(m_) + " n=" + std::to_string(n_);
    return name() + " n=" + std::to_string(n_);
}

int dim_orbit(const Space& X, int p) {
    X.require_valid_p(p);
    switch (X.kind()) {
        case MatrixCase::general: return p * (X.m() + X.n() - p);
        case MatrixCase::skew:
            return X.ambient_dim() - (X.n() - 2 * p) * (X.n() - 2 * p - 1) / 2;
        case MatrixCase::symmetric:
            return X.ambient_dim() - (X.n() - p) * (X.n() - p + 1) / 2;
    }
    throw std::logic_error("bad case");
}

int codim_orbit(const Space& X, int p) {
    return X.ambient_dim() - dim_orbit(X, p);
}

int epsilon_p(const Space& X, int p) {
    if (X.kind() != MatrixCase::symmetric)
        throw std::invalid_argument("epsilon_p is defined for symmetric spaces only");
    X.require_valid_p(p);
    return (p % 2 == 0 && X.n() % 2 == 1) ? 1 : 0;
}

std::vector<Space> all_spaces(int max_n, int max_m) {
    std::vector<Space> out;
    for (int n = 1; n <= std::min(max_n, max_m); ++n)
        for (int m = n; m <= max_m; ++m) out.push_back(Space::general(m, n));
    for (int n = 2; n <= max_n; ++n) out.push_back(Space::skew(n));
    for (int n = 1; n <= max_n; ++n) out.push_back(Space::symmetric(n));
    return out;
}

}  // namespace detinv
