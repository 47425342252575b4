#include "segcalc/formula.hpp"

#include "segcalc/errors.hpp"

#include <algorithm>
#include <vector>

namespace segcalc {

DistFormula DistFormula::constant(bool value) {
    DistFormula f;
    if (value) f.clauses_.insert(Clause{});
    return f;
}

void DistFormula::add(Clause clause) {
    for (const auto& existing : clauses_)
        if (std::includes(clause.begin(), clause.end(), existing.begin(), existing.end())) return;
    std::erase_if(clauses_, [&](const Clause& existing) {
        return std::includes(existing.begin(), existing.end(), clause.begin(), clause.end());
    });
    clauses_.insert(std::move(clause));
}

void DistFormula::add(const DistFormula& other) {
    for (const auto& clause : other.clauses_) add(clause);
}

bool DistFormula::is_true() const { return clauses_.contains(Clause{}); }

std::set<std::string> DistFormula::atom_labels() const {
    std::set<std::string> out;
    for (const auto& clause : clauses_)
        for (const auto& atom : clause) out.insert(atom.label());
    return out;
}

std::string DistFormula::str() const {
    if (is_false()) return "FALSE";
    if (is_true()) return "TRUE";
    std::string out;
    bool first_clause = true;
    for (const auto& clause : clauses_) {
        if (!first_clause) out += " | ";
        first_clause = false;
        bool first_atom = true;
        for (const auto& atom : clause) {
            if (!first_atom) out += " & ";
            first_atom = false;
            out += "Dist(" + atom.label() + ")";
        }
    }
    return out;
}

namespace {

bool holds(const DistFormula& f, const std::map<std::string, bool>& assignment) {
    return std::any_of(f.clauses().begin(), f.clauses().end(), [&](const Clause& clause) {
        return std::all_of(clause.begin(), clause.end(),
                           [&](const Atom& a) { return assignment.at(a.label()); });
    });
}

}  // namespace

bool formulas_equivalent(const DistFormula& f, const DistFormula& g) {
    std::set<std::string> labels = f.atom_labels();
    labels.merge(g.atom_labels());
    const std::vector<std::string> atoms(labels.begin(), labels.end());
    if (atoms.size() > 24) throw PreconditionError("too many atoms for truth-table comparison");
    std::map<std::string, bool> assignment;
    const std::uint64_t rows = std::uint64_t{1} << atoms.size();
    for (std::uint64_t mask = 0; mask < rows; ++mask) {
        for (std::size_t i = 0; i < atoms.size(); ++i) assignment[atoms[i]] = (mask >> i) & 1U;
        if (holds(f, assignment) != holds(g, assignment)) return false;
    }
    return true;
}

DistFormula dual_formula(const DistFormula& f) {
    DistFormula out;
    for (const auto& clause : f.clauses()) {
        Clause dual;
        for (const auto& atom : clause) dual.insert(Atom(dual_segment(atom.segment())));
        out.add(std::move(dual));
    }
    return out;
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::distinguished: return "distinguished";
        case Verdict::not_distinguished: return "not-distinguished";
        case Verdict::undetermined: return "undetermined";
    }
    return "undetermined";
}

Verdict evaluate(const DistFormula& f, const OracleTable& oracle) {
    bool all_false = true;
    for (const auto& clause : f.clauses()) {
        bool clause_true = true;
        bool clause_false = false;
        for (const auto& atom : clause) {
            auto it = oracle.find(atom.label());
            if (it == oracle.end()) {
                clause_true = false;
            } else if (!it->second) {
                clause_true = false;
                clause_false = true;
            }
        }
        if (clause_true) return Verdict::distinguished;
        if (!clause_false) all_false = false;
    }
    return all_false ? Verdict::not_distinguished : Verdict::undetermined;
}

namespace {

std::string_view trim(std::string_view s) {
    const auto* ws = " \t\r";
    const auto first = s.find_first_not_of(ws);
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(ws);
    return s.substr(first, last - first + 1);
}

}  // namespace

OracleTable parse_oracle_table(std::string_view text) {
    OracleTable table;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        ++line_no;
        pos = end + 1;
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        if (trim(line).empty()) {
            if (end == text.size()) break;
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError("expected 'atom = true|false'", line_no, 1);
        const auto label = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        const int value_col = static_cast<int>(line.find_first_not_of(" \t", eq + 1)) + 1;
        if (label.empty()) throw ParseError("missing atom label", line_no, 1);
        bool parsed;
        if (value == "true") {
            parsed = true;
        } else if (value == "false") {
            parsed = false;
        } else {
            throw ParseError("expected true or false", line_no, value_col);
        }
        if (!table.emplace(std::string(label), parsed).second)
            throw ParseError("duplicate atom " + std::string(label), line_no, 1);
        if (end == text.size()) break;
    }
    return table;
}

}  // namespace segcalc
