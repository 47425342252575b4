#include "segcalc/distinction.hpp"

#include "segcalc/errors.hpp"

namespace segcalc {

void require_embedding(std::span<const Segment> ms, const Context& ctx) {
    ctx.validate();
    const auto n = total_group_size(ms);
    if (n < 1) throw PreconditionError("empty multisegment: n must be at least 1");
    if (!embeds(n, ctx))
        throw PreconditionError("E does not embed: n·d odd (n=" + std::to_string(n) +
                                ", d=" + std::to_string(ctx.d) + ")");
}

std::vector<Witness> distinction_witnesses(std::span<const Segment> ms, const Context& ctx) {
    require_embedding(ms, ctx);
    std::vector<Witness> out;
    const Multisegment duals = dual_multisegment(ms);
    for (auto& sigma : involutions(ms.size())) {
        bool ok = true;
        Clause atoms;
        for (std::size_t i = 0; i < ms.size() && ok; ++i) {
            ok = ms[sigma(i)] == duals[i];
            if (ok && sigma.is_fixed(i)) {
                ok = embeds(ms[i].group_size(), ctx);
                atoms.insert(Atom(ms[i]));
            }
        }
        if (ok) out.push_back(Witness{std::move(sigma), std::move(atoms)});
    }
    return out;
}

DistFormula classify_standard_module(std::span<const Segment> ms, const Context& ctx) {
    DistFormula f;
    for (auto& w : distinction_witnesses(ms, ctx)) f.add(std::move(w.atoms));
    return f;
}

namespace {

std::vector<int> partition_of(std::span<const Segment> ms) {
    std::vector<int> sizes;
    sizes.reserve(ms.size());
    for (const auto& seg : ms) sizes.push_back(seg.group_size());
    return sizes;
}

}  // namespace

DistFormula mackey_formula(std::span<const Segment> ordered, const Context& ctx) {
    require_embedding(ordered, ctx);
    if (!is_right_ordered(ordered))
        throw PreconditionError("Mackey route requires a right-ordered form, got " + render(ordered));
    DistFormula f;
    for (const auto& s : enumerate_coset_matrices(partition_of(ordered), ctx.d)) {
        const auto split = jacquet_splitting(ordered, s);
        if (!split) continue;
        if (auto clause = mackey_atoms(*split, ctx)) f.add(std::move(*clause));
    }
    return f;
}

DistFormula classify_via_mackey(std::span<const Segment> ms, const Context& ctx) {
    return mackey_formula(right_ordered_form(ms), ctx);
}

ExclusionReport verify_admissibility_exclusion(std::span<const Segment> ms, const Context& ctx) {
    ctx.validate();
    ExclusionReport report;
    report.ordered = right_ordered_form(ms);
    if (report.ordered.empty()) return report;
    for (const auto& s : enumerate_coset_matrices(partition_of(report.ordered), ctx.d)) {
        ++report.matrices;
        if (is_admissible(s)) continue;
        ++report.non_admissible;
        const auto split = jacquet_splitting(report.ordered, s);
        if (!split) {
            report.entries.push_back({s, "chunk size not divisible by k"});
            continue;
        }
        if (const auto bad = first_duality_failure(*split)) {
            const auto [i, j] = *bad;
            if (mackey_offdiagonal_ok(*split)) ++report.offdiagonal_only;
            report.entries.push_back({s, "duality fails at (" + std::to_string(i + 1) + "," +
                                             std::to_string(j + 1) + ")"});
            continue;
        }
        report.entries.push_back({s, "satisfiable"});
        report.counterexamples.push_back(s);
    }
    return report;
}

}  // namespace segcalc
