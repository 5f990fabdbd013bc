#include "detinv/mpoly.hpp"

#include <json.hpp>

#include <cstdlib>
#include <stdexcept>

namespace detinv {

int Exps::get(Var v) const {
    switch (v) {
        case Var::q: return q;
        case Var::w: return w;
        case Var::t: return t;
    }
    throw std::logic_error("bad Var");
}

void Exps::set(Var v, int e) {
    switch (v) {
        case Var::q: q = e; return;
        case Var::w: w = e; return;
        case Var::t: t = e; return;
    }
    throw std::logic_error("bad Var");
}

Exps unit_exps(Var v, int e) {
    Exps out;
    out.set(v, e);
    return out;
}

Subst Subst::one(Var v, const Exps& image) {
    Subst s;
    switch (v) {
        case Var::q: s.q_to = image; break;
        case Var::w: s.w_to = image; break;
        case Var::t: s.t_to = image; break;
    }
    return s;
}

MPoly::MPoly(long long constant) {
    if (constant != 0) terms_.emplace(Exps{}, Int(constant));
}

MPoly::MPoly(const Int& constant) {
    if (constant != 0) terms_.emplace(Exps{}, constant);
}

MPoly MPoly::monomial(const Int& c, const Exps& e) {
    MPoly p;
    if (c != 0) p.terms_.emplace(e, c);
    return p;
}

MPoly MPoly::q(int e) { return monomial(1, {e, 0, 0}); }
MPoly MPoly::w(int e) { return monomial(1, {0, e, 0}); }
MPoly MPoly::t(int e) { return monomial(1, {0, 0, e}); }

Int MPoly::coeff(const Exps& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

Int MPoly::coeff(int e_q, int e_w, int e_t) const {
    return coeff(Exps{e_q, e_w, e_t});
}

void MPoly::add_term(const Exps& e, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MPoly MPoly::operator-() const {
    MPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
}

MPoly& MPoly::operator*=(const MPoly& o) {
    *this = *this * o;
    return *this;
}

MPoly MPoly::substitute(const Subst& s) const {
    MPoly out;
    for (const auto& [e, c] : terms_)
        out.add_term(s.q_to * e.q + s.w_to * e.w + s.t_to * e.t, c);
    return out;
}

MPoly MPoly::reversed(Var v, int center) const {
    MPoly out;
    for (const auto& [e, c] : terms_) {
        Exps r = e;
        r.set(v, center - e.get(v));
        out.add_term(r, c);
    }
    return out;
}

Int MPoly::eval_all_one() const {
    Int sum = 0;
    for (const auto& [e, c] : terms_) sum += c;
    return sum;
}

bool MPoly::is_nonneg() const {
    for (const auto& [e, c] : terms_)
        if (c < 0) return false;
    return true;
}

std::optional<std::pair<int, int>> MPoly::support_range(Var v) const {
    if (terms_.empty()) return std::nullopt;
    int lo = terms_.begin()->first.get(v);
    int hi = lo;
    for (const auto& [e, c] : terms_) {
        lo = std::min(lo, e.get(v));
        hi = std::max(hi, e.get(v));
    }
    return std::make_pair(lo, hi);
}

int MPoly::max_abs_degree() const {
    int best = 0;
    for (const auto& [e, c] : terms_)
        best = std::max(best, std::abs(e.q) + std::abs(e.w) + std::abs(e.t));
    return best;
}

std::string MPoly::to_json() const {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [e, c] : terms_) {
        nlohmann::ordered_json term;
        term["e"] = {e.q, e.w, e.t};
        term["c"] = c.str();
        arr.push_back(std::move(term));
    }
    return arr.dump();
}

MPoly MPoly::from_json(const std::string& text) {
    nlohmann::json arr = nlohmann::json::parse(text);
    if (!arr.is_array()) throw std::invalid_argument("MPoly JSON must be an array of terms");
    MPoly out;
    for (const auto& term : arr) {
        const auto& e = term.at("e");
        if (!e.is_array() || e.size() != 3)
            throw std::invalid_argument("MPoly term exponent must be a triple");
        Exps exps{e[0].get<int>(), e[1].get<int>(), e[2].get<int>()};
        out.add_term(exps, Int(term.at("c").get<std::string>()));
    }
    return out;
}

}  // namespace detinv
