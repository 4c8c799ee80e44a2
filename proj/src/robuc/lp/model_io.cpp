// SPDX-License-Identifier: Apache-2.0
#include "robuc/lp/model_io.hpp"

#include <cmath>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace robuc::lp {

namespace {

void write_expr(std::ostream& os, const std::vector<LinTerm>& terms) {
    bool first = true;
    for (const auto& t : terms) {
        if (t.coef == 0.0) continue;
        if (first) {
            if (t.coef < 0) os << "- ";
        } else {
            os << (t.coef < 0 ? " - " : " + ");
        }
        os << std::abs(t.coef) << " x" << t.var;
        first = false;
    }
    if (first) os << "0 x0";
}

}  // namespace

void write_lp_format(const MathProgram& p, std::ostream& os) {
    os << std::setprecision(17);
    os << "Minimize\n obj: ";
    std::vector<LinTerm> objterms;
    for (int j = 0; j < p.num_vars(); ++j)
        if (p.objective()[j] != 0.0) objterms.push_back({j, p.objective()[j]});
    write_expr(os, objterms);
    os << "\nSubject To\n";
    for (int r = 0; r < p.num_rows(); ++r) {
        const LinRow& row = p.row(r);
        os << " c" << r << ": ";
        write_expr(os, row.terms);
        switch (row.sense) {
            case RowSense::LE: os << " <= "; break;
            case RowSense::GE: os << " >= "; break;
            case RowSense::EQ: os << " = "; break;
        }
        os << row.rhs << "\n";
    }
    os << "Bounds\n";
    for (int j = 0; j < p.num_vars(); ++j) {
        const auto& v = p.var(j);
        if (std::isinf(v.lb) && std::isinf(v.ub))
            os << " x" << j << " free\n";
        else if (std::isinf(v.ub))
            os << " " << v.lb << " <= x" << j << "\n";
        else if (std::isinf(v.lb))
            os << " x" << j << " <= " << v.ub << "\n";
        else
            os << " " << v.lb << " <= x" << j << " <= " << v.ub << "\n";
    }
    bool any_bin = false;
    for (int j = 0; j < p.num_vars(); ++j) {
        if (p.var(j).kind != VarKind::Binary) continue;
        if (!any_bin) os << "Binaries\n";
        any_bin = true;
        os << " x" << j << "\n";
    }
    os << "End\n";
}

std::string to_lp_format(const MathProgram& p) {
    std::ostringstream ss;
    write_lp_format(p, ss);
    return ss.str();
}

namespace {

struct Tokenizer {
    std::vector<std::string> toks;
    std::size_t pos = 0;
    bool done() const { return pos >= toks.size(); }
    const std::string& peek() const { return toks[pos]; }
    std::string next() { return toks[pos++]; }
};

bool is_number(const std::string& s) {
    char* end = nullptr;
    std::strtod(s.c_str(), &end);
    return end && *end == '\0' && end != s.c_str();
}

int var_index(const std::string& tok, std::map<std::string, int>& names,
              MathProgram& p) {
    auto it = names.find(tok);
    if (it != names.end()) return it->second;
    const int j = p.add_var(tok, -kInf, kInf);
    names[tok] = j;
    return j;
}

// parses "[+-] [coef] var [+-] [coef] var ..." until a relational token
std::vector<LinTerm> parse_expr(Tokenizer& tz, std::map<std::string, int>& names,
                                MathProgram& p) {
    std::vector<LinTerm> terms;
    double sign = 1.0;
    double coef = 1.0;
    bool have_coef = false;
    while (!tz.done()) {
        const std::string& t = tz.peek();
        if (t == "<=" || t == ">=" || t == "=" || t == "Subject" || t == "To" ||
            t == "Bounds" || t == "Binaries" || t == "End")
            break;
        tz.next();
        if (t == "+") {
            sign = 1.0;
        } else if (t == "-") {
            sign = -1.0;
        } else if (is_number(t)) {
            coef = std::stod(t);
            have_coef = true;
        } else {
            terms.push_back({var_index(t, names, p),
                             sign * (have_coef ? coef : 1.0)});
            sign = 1.0;
            coef = 1.0;
            have_coef = false;
        }
    }
    return terms;
}

}  // namespace

MathProgram read_lp_format(std::istream& is) {
    Tokenizer tz;
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            if (tok.back() == ':') continue;  // row labels
            tz.toks.push_back(tok);
        }
    }
    MathProgram p;
    std::map<std::string, int> names;
    auto expect = [&](const std::string& s) {
        if (tz.done() || tz.next() != s)
            throw std::runtime_error("LP parse: expected '" + s + "'");
    };
    expect("Minimize");
    std::vector<LinTerm> obj = parse_expr(tz, names, p);
    expect("Subject");
    expect("To");
    while (!tz.done() && tz.peek() != "Bounds" && tz.peek() != "Binaries" &&
           tz.peek() != "End") {
        LinRow row;
        row.terms = parse_expr(tz, names, p);
        const std::string rel = tz.next();
        row.sense = rel == "<=" ? RowSense::LE
                                : (rel == ">=" ? RowSense::GE : RowSense::EQ);
        row.rhs = std::stod(tz.next());
        p.add_row(std::move(row));
    }
    if (!tz.done() && tz.peek() == "Bounds") {
        tz.next();
        while (!tz.done() && tz.peek() != "Binaries" && tz.peek() != "End") {
            // forms: "L <= x <= U", "L <= x", "x <= U", "x free"
            std::string a = tz.next();
            if (is_number(a)) {
                const double lo = std::stod(a);
                expect("<=");
                const int j = var_index(tz.next(), names, p);
                p.var(j).lb = lo;
                if (!tz.done() && tz.peek() == "<=") {
                    tz.next();
                    p.var(j).ub = std::stod(tz.next());
                }
            } else {
                const int j = var_index(a, names, p);
                const std::string t = tz.next();
                if (t == "free") {
                    p.var(j).lb = -kInf;
                    p.var(j).ub = kInf;
                } else if (t == "<=") {
                    p.var(j).lb = -kInf;
                    p.var(j).ub = std::stod(tz.next());
                }
            }
        }
    }
    if (!tz.done() && tz.peek() == "Binaries") {
        tz.next();
        while (!tz.done() && tz.peek() != "End") {
            const int j = var_index(tz.next(), names, p);
            p.var(j).kind = VarKind::Binary;
            p.var(j).lb = std::max(p.var(j).lb, 0.0);
            p.var(j).ub = std::min(p.var(j).ub, 1.0);
        }
    }
    for (const auto& t : obj) p.set_objective(t.var, t.coef);
    // default bounds for variables never mentioned in Bounds
    return p;
}

}  // namespace robuc::lp
