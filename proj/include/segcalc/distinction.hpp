#pragma once

// Distinction of standard modules by the centralizer H = C_G(E^×):
// the involution classification, the brute-force Mackey route over I(P),
// and the check that only P-admissible cosets can contribute.

#include "segcalc/cosets.hpp"
#include "segcalc/formula.hpp"
#include "segcalc/permutation.hpp"
#include "segcalc/segments.hpp"

#include <span>
#include <string>
#include <vector>

namespace segcalc {

/// Throws PreconditionError when the multisegment is empty or n·d is odd.
void require_embedding(std::span<const Segment> ms, const Context& ctx);

/// A witness involution σ with Δ_{σ(i)} ≅ Δ_i^∨ and its fixed-point atoms.
struct Witness {
    Permutation sigma;
    Clause atoms;
};

/// Every involution σ ∈ 𝔖_t with Δ_{σ(i)} = Δ_i^∨ for all i whose fixed
/// points satisfy the embedding condition, in lexicographic order.
std::vector<Witness> distinction_witnesses(std::span<const Segment> ms, const Context& ctx);

/// Disjunction over the witnesses of their fixed-point atoms.
DistFormula classify_standard_module(std::span<const Segment> ms, const Context& ctx);

/// Mackey route on a fixed right-ordered tuple: disjunction over s ∈ I(P) of
/// the diagonal atoms of every splitting satisfying the duality conditions.
/// Throws PreconditionError if `ordered` is not right-ordered.
DistFormula mackey_formula(std::span<const Segment> ordered, const Context& ctx);

/// mackey_formula applied to right_ordered_form(ms).
DistFormula classify_via_mackey(std::span<const Segment> ms, const Context& ctx);

struct ExclusionEntry {
    CosetMatrix matrix;
    /// Why the coset contributes nothing, or "satisfiable" for a counterexample.
    std::string reason;
};

struct ExclusionReport {
    Multisegment ordered;
    std::size_t matrices = 0;
    std::size_t non_admissible = 0;
    /// Non-admissible matrices that pass the off-diagonal check alone; they
    /// are ruled out by diagonal self-duality.
    std::size_t offdiagonal_only = 0;
    std::vector<ExclusionEntry> entries;
    std::vector<CosetMatrix> counterexamples;
};

/// Walks every non-admissible s ∈ I(P) for right_ordered_form(ms) and records
/// why it fails. Any s whose splitting satisfies the duality conditions is a
/// counterexample.
ExclusionReport verify_admissibility_exclusion(std::span<const Segment> ms, const Context& ctx);

}  // namespace segcalc
