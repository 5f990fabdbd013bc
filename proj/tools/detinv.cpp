// detinv: closed-form homological invariants of determinantal varieties
// in the three classical matrix spaces, with a verification engine for
// the identities relating them.
//
// Subcommands:
//   compute  one invariant at one (case, m, n, p)
//   table    invariants over parameter ranges
//   verify   run the identity suites, exit 0 iff everything passed
//   weights  dominant-weight closure report as JSON
//
// In the skew case p is the half-rank index: the orbit O_p consists of
// matrices of rank 2p.

#include "detinv/cartan.hpp"
#include "detinv/geometry.hpp"
#include "detinv/invariants.hpp"
#include "detinv/render.hpp"
#include "detinv/verify.hpp"
#include "detinv/weights.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace detinv;

const std::vector<std::string> kInvariantNames = {
    "bm",        "orbit-cohomology", "cdr-intro",  "cdr-section",
    "loccoh-series", "derham-simple", "ih",        "weight-bm",
    "weight-orbit",  "weight-cdr3",   "np",        "btot",
    "cartan-check"};

struct Value {
    enum class Kind { poly, integer, series } kind = Kind::poly;
    bool defined = true;  // table cells may be undefined at some (space, p)
    MPoly poly;
    Int integer;
    CompSeries series;

    static Value undefined() {
        Value v;
        v.defined = false;
        return v;
    }
};

Value poly_value(MPoly p) {
    Value v;
    v.kind = Value::Kind::poly;
    v.poly = std::move(p);
    return v;
}

Value int_value(Int n) {
    Value v;
    v.kind = Value::Kind::integer;
    v.integer = std::move(n);
    return v;
}

Space make_space(const std::string& case_name, std::optional<int> m, int n) {
    if (case_name == "general") {
        if (!m) throw std::invalid_argument("the general case requires --m");
        return Space::general(*m, n);
    }
    if (case_name == "skew") return Space::skew(n);
    if (case_name == "symmetric") return Space::symmetric(n);
    throw std::invalid_argument("unknown case: " + case_name);
}

Value eval_invariant(const Space& X, int p, const std::string& name) {
    if (name == "bm") return poly_value(bm_poincare(X, p));
    if (name == "orbit-cohomology") return poly_value(orbit_cohomology(X, p));
    if (name == "cdr-intro") return poly_value(cdr_intro_form(X, p));
    if (name == "cdr-section") return poly_value(cdr_section_form(X, p));
    if (name == "derham-simple") return poly_value(derham_simple(X, p));
    if (name == "ih") return poly_value(ih_poincare(X, p));
    if (name == "np") return int_value(np_total(X, p));
    if (name == "btot") return int_value(total_betti(X, p));
    if (name == "loccoh-series") {
        Value v;
        v.kind = Value::Kind::series;
        v.series = loccoh_series(X, p);
        return v;
    }
    if (name == "cartan-check") {
        MPoly cartan = cartan_poincare(presentation_for(X, p));
        if (cartan != orbit_cohomology(X, p))
            throw std::runtime_error("cartan presentation disagrees with the closed form");
        return poly_value(std::move(cartan));
    }
    if (name == "weight-bm" || name == "weight-orbit" || name == "weight-cdr3") {
        if (X.kind() != MatrixCase::general)
            throw std::invalid_argument("weight invariants are defined for the general case only");
        if (name == "weight-bm") return poly_value(weight_bm_general(X.m(), X.n(), p));
        if (name == "weight-orbit") return poly_value(weight_orbit_general(X.m(), X.n(), p));
        return poly_value(weight_cdr_trivariate(X.m(), X.n(), p));
    }
    throw std::invalid_argument("unknown invariant: " + name);
}

std::optional<int> degree_cap() {
    const char* raw = std::getenv("DETINV_MAX_DEGREE");
    if (!raw || !*raw) return std::nullopt;
    return std::stoi(raw);
}

void enforce_degree_cap(const Value& v) {
    auto cap = degree_cap();
    if (!cap) return;
    int degree = 0;
    switch (v.kind) {
        case Value::Kind::poly: degree = v.poly.max_abs_degree(); break;
        case Value::Kind::series:
            for (const auto& [s, entry] : v.series.entries)
                degree = std::max(degree, entry.max_abs_degree());
            break;
        case Value::Kind::integer: return;
    }
    if (degree > *cap)
        throw std::invalid_argument("result degree " + std::to_string(degree) +
                                    " exceeds DETINV_MAX_DEGREE=" + std::to_string(*cap));
}

std::string series_text(const CompSeries& series) {
    std::string out;
    bool first = true;
    for (const auto& [s, entry] : series.entries) {
        if (!first) out += "; ";
        out += "s=" + std::to_string(s) + ": " + to_text(entry);
        first = false;
    }
    return out;
}

std::string value_text(const Value& v) {
    switch (v.kind) {
        case Value::Kind::poly: return to_text(v.poly);
        case Value::Kind::integer: return v.integer.str();
        case Value::Kind::series: return series_text(v.series);
    }
    return "";
}

std::string value_latex(const Value& v) {
    switch (v.kind) {
        case Value::Kind::poly: return to_latex(v.poly);
        case Value::Kind::integer: return v.integer.str();
        case Value::Kind::series: return series_text(v.series);
    }
    return "";
}

nlohmann::ordered_json value_json(const Value& v) {
    switch (v.kind) {
        case Value::Kind::poly: return nlohmann::ordered_json::parse(v.poly.to_json());
        case Value::Kind::integer: return v.integer.str();
        case Value::Kind::series: {
            nlohmann::ordered_json obj = nlohmann::ordered_json::object();
            for (const auto& [s, entry] : v.series.entries)
                obj[std::to_string(s)] = nlohmann::ordered_json::parse(entry.to_json());
            return obj;
        }
    }
    return nullptr;
}

std::string csv_escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream file(output_path);
    if (!file) throw std::invalid_argument("cannot open output file: " + output_path);
    file << text;
    if (!text.empty() && text.back() != '\n') file << "\n";
}

// One endpoint of a range token: a literal integer or the symbol "n".
struct Bound {
    bool is_n = false;
    int value = 0;

    int resolve(int n) const { return is_n ? n : value; }
};

struct Range {
    Bound lo;
    Bound hi;
};

Bound parse_bound(const std::string& token) {
    if (token == "n") return Bound{true, 0};
    try {
        return Bound{false, std::stoi(token)};
    } catch (const std::exception&) {
        throw std::invalid_argument("bad range bound: " + token);
    }
}

Range parse_range(const std::string& token) {
    auto dots = token.find("..");
    if (dots == std::string::npos) {
        Bound b = parse_bound(token);
        return Range{b, b};
    }
    return Range{parse_bound(token.substr(0, dots)), parse_bound(token.substr(dots + 2))};
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

struct TableRow {
    Space space;
    int p;
    std::vector<Value> values;

    TableRow(Space X, int p_) : space(std::move(X)), p(p_) {}
};

int run_table(const std::string& case_name, const std::string& n_range,
              const std::string& m_range, const std::string& p_range,
              const std::string& invariants_raw, const std::string& format,
              const std::string& output_path) {
    const std::vector<std::string> invariants = split_list(invariants_raw);
    if (invariants.empty()) throw std::invalid_argument("no invariants requested");
    for (const auto& name : invariants)
        if (std::find(kInvariantNames.begin(), kInvariantNames.end(), name) ==
            kInvariantNames.end())
            throw std::invalid_argument("unknown invariant: " + name);

    const Range nr = parse_range(n_range);
    const Range mr = parse_range(m_range);
    const bool all_p = p_range == "all";
    const Range pr = all_p ? Range{} : parse_range(p_range);

    std::vector<TableRow> rows;
    for (int n = nr.lo.resolve(0), n_hi = nr.hi.resolve(0); n <= n_hi; ++n) {
        if (n < 1) continue;
        std::vector<Space> spaces;
        if (case_name == "general") {
            for (int m = mr.lo.resolve(n); m <= mr.hi.resolve(n); ++m)
                if (m >= n) spaces.push_back(Space::general(m, n));
        } else if (case_name == "skew") {
            if (n >= 2) spaces.push_back(Space::skew(n));
        } else if (case_name == "symmetric") {
            spaces.push_back(Space::symmetric(n));
        } else {
            throw std::invalid_argument("unknown case: " + case_name);
        }
        for (const Space& X : spaces) {
            const int p_lo = all_p ? 0 : std::max(0, pr.lo.resolve(n));
            const int p_hi = all_p ? X.p_max() : std::min(X.p_max(), pr.hi.resolve(n));
            for (int p = p_lo; p <= p_hi; ++p) {
                TableRow row(X, p);
                for (const auto& name : invariants) {
                    try {
                        Value v = eval_invariant(X, p, name);
                        enforce_degree_cap(v);
                        row.values.push_back(std::move(v));
                    } catch (const std::invalid_argument&) {
                        row.values.push_back(Value::undefined());
                    }
                }
                rows.push_back(std::move(row));
            }
        }
    }

    std::ostringstream out;
    if (format == "csv") {
        out << "case,m,n,p";
        for (const auto& name : invariants) out << "," << csv_escape(name);
        out << "\n";
        for (const auto& row : rows) {
            out << row.space.name() << "," << row.space.m() << "," << row.space.n()
                << "," << row.p;
            for (const auto& v : row.values)
                out << "," << csv_escape(v.defined ? value_text(v) : "-");
            out << "\n";
        }
    } else if (format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& row : rows) {
            nlohmann::ordered_json item;
            item["case"] = row.space.name();
            item["m"] = row.space.m();
            item["n"] = row.space.n();
            item["p"] = row.p;
            nlohmann::ordered_json values = nlohmann::ordered_json::object();
            for (std::size_t i = 0; i < invariants.size(); ++i)
                values[invariants[i]] =
                    row.values[i].defined ? value_json(row.values[i]) : nlohmann::ordered_json();
            item["values"] = std::move(values);
            arr.push_back(std::move(item));
        }
        out << arr.dump(2);
    } else if (format == "latex") {
        out << "\\begin{tabular}{llll";
        for (std::size_t i = 0; i < invariants.size(); ++i) out << "l";
        out << "}\n";
        out << "case & $m$ & $n$ & $p$";
        for (const auto& name : invariants) out << " & " << name;
        out << " \\\\\n\\hline\n";
        for (const auto& row : rows) {
            out << row.space.name() << " & " << row.space.m() << " & " << row.space.n()
                << " & " << row.p;
            for (const auto& v : row.values)
                out << " & " << (v.defined ? "$" + value_latex(v) + "$" : "-");
            out << " \\\\\n";
        }
        out << "\\end{tabular}";
    } else if (format == "text") {
        for (const auto& row : rows) {
            out << row.space.name() << "\t" << row.space.m() << "\t" << row.space.n()
                << "\t" << row.p;
            for (const auto& v : row.values) out << "\t" << (v.defined ? value_text(v) : "-");
            out << "\n";
        }
    } else {
        throw std::invalid_argument("unknown format: " + format);
    }
    emit(out.str(), output_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact homological invariants of determinantal varieties"};
    app.require_subcommand(1);

    std::string case_name;
    std::string invariant = "bm";
    std::string format = "text";
    std::string output_path;
    std::optional<int> opt_m;
    int n = 1;
    int p = 0;

    CLI::App* compute = app.add_subcommand("compute", "Compute one invariant");
    compute->add_option("--case", case_name, "general | skew | symmetric")->required();
    compute->add_option("--m", opt_m, "row count (general case only)");
    compute->add_option("--n", n, "matrix size n")->required();
    compute->add_option("--p", p,
                        "orbit index (rank; half-rank for skew; the simple index s "
                        "for derham-simple and ih)");
    compute->add_option("--invariant", invariant, "invariant name")->required();
    compute->add_option("--format", format, "text | json | csv | latex");
    compute->add_option("--output,-o", output_path, "output path (default stdout)");

    std::string n_range = "1..1";
    std::string m_range = "n";
    std::string p_range = "all";
    std::string invariants_raw = "bm";
    CLI::App* table = app.add_subcommand("table", "Tabulate invariants over ranges");
    table->add_option("--case", case_name, "general | skew | symmetric")->required();
    table->add_option("--n", n_range, "n range, e.g. 2..5 or 4")->required();
    table->add_option("--m", m_range, "m range (general), bounds may be 'n', e.g. n..6");
    table->add_option("--p", p_range, "p range or 'all'");
    table->add_option("--invariant", invariants_raw, "comma-separated invariant names")
        ->required();
    table->add_option("--format", format, "text | json | csv | latex");
    table->add_option("--output,-o", output_path, "output path (default stdout)");

    int max_n = 6;
    std::optional<int> opt_max_m;
    std::string suite = "all";
    std::string verify_format = "text";
    CLI::App* verify = app.add_subcommand("verify", "Run the identity suites");
    verify->add_option("--max-n", max_n, "largest n in the sweep (default 6)");
    verify->add_option("--max-m", opt_max_m, "largest m in the sweep (default --max-n)");
    verify->add_option("--suite", suite,
                       "all | degeneration | les | rho | totals | locally-closed | "
                       "weights | qcomb | cartan | closure");
    verify->add_option("--format", verify_format, "text | json");
    verify->add_option("--output,-o", output_path, "output path (default stdout)");

    std::optional<int> opt_radius;
    std::string check_name = "closure";
    CLI::App* weights = app.add_subcommand("weights", "Dominant-weight closure report");
    weights->add_option("--case", case_name, "general | skew | symmetric")->required();
    weights->add_option("--n", n, "weight length n")->required();
    weights->add_option("--p", p, "rank bound p")->required();
    weights->add_option("--radius", opt_radius, "box radius (default n+3)");
    weights->add_option("--check", check_name, "closure (the only check)");
    weights->add_option("--output,-o", output_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed()) {
            Space X = make_space(case_name, opt_m, n);
            Value v = eval_invariant(X, p, invariant);
            enforce_degree_cap(v);
            std::string rendered;
            if (format == "text")
                rendered = value_text(v);
            else if (format == "latex")
                rendered = value_latex(v);
            else if (format == "json")
                rendered = value_json(v).dump();
            else if (format == "csv")
                rendered = "case,m,n,p,invariant,value\n" + X.name() + "," +
                           std::to_string(X.m()) + "," + std::to_string(X.n()) + "," +
                           std::to_string(p) + "," + invariant + "," +
                           csv_escape(value_text(v));
            else
                throw std::invalid_argument("unknown format: " + format);
            emit(rendered, output_path);
            return 0;
        }
        if (table->parsed())
            return run_table(case_name, n_range, m_range, p_range, invariants_raw,
                             format, output_path);
        if (verify->parsed()) {
            if (verify_format != "text" && verify_format != "json")
                throw std::invalid_argument("unknown format: " + verify_format);
            VerificationReport report =
                run_all(max_n, opt_max_m.value_or(max_n), suite);
            emit(verify_format == "json" ? report_to_json(report)
                                         : report_to_text(report),
                 output_path);
            return report.all_passed() ? 0 : 1;
        }
        if (weights->parsed()) {
            if (check_name != "closure")
                throw std::invalid_argument("unknown check: " + check_name);
            Space X = make_space(case_name, std::optional<int>(n), n);
            X.require_valid_p(p);
            const int radius = opt_radius.value_or(n + 3);
            ClosureReport report =
                closure_check(X.kind(), p, default_box(X.kind(), n, radius));
            emit(closure_report_json(report), output_path);
            return report.ok() ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
