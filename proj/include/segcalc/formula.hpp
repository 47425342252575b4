#pragma once

// Disjunctive normal form over base-case atoms "Dist(Δ)": the essentially
// square-integrable representation L(Δ) is distinguished.

#include "segcalc/segments.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace segcalc {

class Atom {
public:
    explicit Atom(const Segment& seg) : segment_(seg), label_(seg.label()) {}

    const Segment& segment() const { return segment_; }
    /// Stable key, e.g. "A[-1,1]".
    const std::string& label() const { return label_; }

    friend bool operator==(const Atom& x, const Atom& y) { return x.label_ == y.label_; }
    friend auto operator<=>(const Atom& x, const Atom& y) { return x.label_ <=> y.label_; }

private:
    Segment segment_;
    std::string label_;
};

using Clause = std::set<Atom>;

/// Disjunction of conjunctions, kept deduplicated and absorbed.
class DistFormula {
public:
    /// FALSE.
    DistFormula() = default;

    static DistFormula constant(bool value);

    /// Adds a clause, dropping it if absorbed and removing clauses it absorbs.
    void add(Clause clause);
    void add(const DistFormula& other);

    const std::set<Clause>& clauses() const { return clauses_; }

    bool is_true() const;
    bool is_false() const { return clauses_.empty(); }

    /// All atom labels occurring in the formula, sorted.
    std::set<std::string> atom_labels() const;

    /// "TRUE", "FALSE" or e.g. "Dist(A[-1,1]) & Dist(B[0,0]) | Dist(C[0,0])".
    std::string str() const;

    friend bool operator==(const DistFormula&, const DistFormula&) = default;

private:
    std::set<Clause> clauses_;
};

/// Exhaustive truth-table comparison over the union of atoms.
bool formulas_equivalent(const DistFormula& f, const DistFormula& g);

/// Replaces every atom by Dist(dual(Δ)).
DistFormula dual_formula(const DistFormula& f);

/// Truth values for atoms by label; absent atoms are unknown.
using OracleTable = std::map<std::string, bool, std::less<>>;

enum class Verdict { distinguished, not_distinguished, undetermined };

std::string_view to_string(Verdict v);

/// Three-valued (Kleene) evaluation.
Verdict evaluate(const DistFormula& f, const OracleTable& oracle);

/// Parses `label = true|false` lines with `#` comments. Throws ParseError.
OracleTable parse_oracle_table(std::string_view text);

}  // namespace segcalc
