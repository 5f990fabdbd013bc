#pragma once

#include <string>
#include <vector>

namespace detinv {

enum class MatrixCase { general, skew, symmetric };

// Descriptor of one of the three classical matrix spaces, with the
// dimension bookkeeping shared by every formula module. In the skew
// case p indexes the orbit of rank 2p.
class Space {
public:
    static Space general(int m, int n);  // m x n matrices, m >= n >= 1
    static Space skew(int n);            // n x n skew-symmetric, n >= 2
    static Space symmetric(int n);       // n x n symmetric, n >= 1

    MatrixCase kind() const { return kind_; }
    // general: the row count; skew/symmetric: floor(n/2).
    int m() const { return m_; }
    int n() const { return n_; }

    // Complex dimension d_X of the matrix space.
    int ambient_dim() const;
    // Index of the dense orbit: n (general), floor(n/2) (skew), n (symmetric).
    int p_max() const;
    // n - 2 floor(n/2); meaningful for skew/symmetric.
    int epsilon() const { return n_ - 2 * (n_ / 2); }

    void require_valid_p(int p) const;

    std::string name() const;      // "general" | "skew" | "symmetric"
    std::string describe() const;  // e.g. "general m=3 n=2"

    friend bool operator==(const Space&, const Space&) = default;

private:
    Space(MatrixCase k, int m, int n) : kind_(k), m_(m), n_(n) {}

    MatrixCase kind_;
    int m_;
    int n_;
};

int dim_orbit(const Space& X, int p);
int codim_orbit(const Space& X, int p);

// 1 iff p is even and n is odd; symmetric spaces only.
int epsilon_p(const Space& X, int p);

// Every space with n <= max_n (and, for the general case, n <= m <= max_m),
// in deterministic order: general sorted by (n, m), then skew, then
// symmetric.
std::vector<Space> all_spaces(int max_n, int max_m);

}  // namespace detinv
