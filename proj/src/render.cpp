#include "detinv/render.hpp"

#include <string>
#include <vector>

namespace detinv {

namespace {

struct VarPart {
    const char* name;
    int exponent;
};

std::string text_term(const Exps& e, const Int& c) {
    std::vector<std::string> factors;
    const Int abs_c = c < 0 ? Int(-c) : c;
    for (VarPart part : {VarPart{"q", e.q}, VarPart{"w", e.w}, VarPart{"t", e.t}}) {
        if (part.exponent == 0) continue;
        std::string factor = part.name;
        if (part.exponent != 1) factor += "^" + std::to_string(part.exponent);
        factors.push_back(std::move(factor));
    }
    std::string out;
    if (factors.empty()) return abs_c.str();
    if (abs_c != 1) out = abs_c.str() + "*";
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i > 0) out += "*";
        out += factors[i];
    }
    return out;
}

std::string latex_term(const Exps& e, const Int& c) {
    const Int abs_c = c < 0 ? Int(-c) : c;
    std::string vars;
    for (VarPart part : {VarPart{"q", e.q}, VarPart{"w", e.w}, VarPart{"t", e.t}}) {
        if (part.exponent == 0) continue;
        vars += part.name;
        if (part.exponent != 1) vars += "^{" + std::to_string(part.exponent) + "}";
    }
    if (vars.empty()) return abs_c.str();
    if (abs_c != 1) return abs_c.str() + vars;
    return vars;
}

}  // namespace

std::string to_text(const MPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        out += text_term(e, c);
    }
    return out;
}

std::string to_latex(const MPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? "-" : "+";
        }
        out += latex_term(e, c);
    }
    return out;
}

}  // namespace detinv
