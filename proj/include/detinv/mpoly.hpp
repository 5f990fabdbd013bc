#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace detinv {

using Int = boost::multiprecision::cpp_int;

enum class Var { q, w, t };

// Exponent triple (e_q, e_w, e_t) of a Laurent monomial. Ordered
// lexicographically; this fixes term order everywhere (storage,
// serialization, rendering).
struct Exps {
    int q = 0;
    int w = 0;
    int t = 0;

    friend auto operator<=>(const Exps&, const Exps&) = default;

    int get(Var v) const;
    void set(Var v, int e);

    Exps operator+(const Exps& o) const { return {q + o.q, w + o.w, t + o.t}; }
    Exps operator*(int k) const { return {q * k, w * k, t * k}; }
};

// Unit monomial exponents for var^e.
Exps unit_exps(Var v, int e = 1);

// Substitution sending each variable to a Laurent monomial with unit
// coefficient. Defaults to the identity; substitutions are simultaneous.
struct Subst {
    Exps q_to{1, 0, 0};
    Exps w_to{0, 1, 0};
    Exps t_to{0, 0, 1};

    // Substitution that moves a single variable and fixes the others.
    static Subst one(Var v, const Exps& image);
};

// Laurent polynomial in the fixed variable set {q, w, t} over
// arbitrary-precision integers. Canonical form: zero coefficients are
// never stored, so equality is equality of term maps.
class MPoly {
public:
    MPoly() = default;
    MPoly(long long constant);  // implicit: lets formulas read naturally
    MPoly(const Int& constant);

    static MPoly monomial(const Int& c, const Exps& e);
    static MPoly q(int e = 1);
    static MPoly w(int e = 1);
    static MPoly t(int e = 1);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exps, Int>& terms() const { return terms_; }

    Int coeff(const Exps& e) const;
    Int coeff(int e_q, int e_w, int e_t) const;

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o);
    MPoly operator-() const;

    friend MPoly operator+(MPoly a, const MPoly& b) { a += b; return a; }
    friend MPoly operator-(MPoly a, const MPoly& b) { a -= b; return a; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend bool operator==(const MPoly&, const MPoly&) = default;

    // Exponent arithmetic applied termwise, then re-canonicalized.
    MPoly substitute(const Subst& s) const;

    // Each exponent e of v becomes center - e. An involution.
    MPoly reversed(Var v, int center) const;

    // Sum of all coefficients (evaluation at q = w = t = 1).
    Int eval_all_one() const;

    // True when no stored coefficient is negative.
    bool is_nonneg() const;

    // (min, max) exponent of v over the support; empty for the zero
    // polynomial.
    std::optional<std::pair<int, int>> support_range(Var v) const;

    // max over terms of |e_q| + |e_w| + |e_t|; 0 for the zero polynomial.
    int max_abs_degree() const;

    // JSON array of {"e":[e_q,e_w,e_t],"c":"<decimal>"} in term order.
    std::string to_json() const;
    static MPoly from_json(const std::string& text);

private:
    std::map<Exps, Int> terms_;

    void add_term(const Exps& e, const Int& c);
};

}  // namespace detinv
