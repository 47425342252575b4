#include "segcalc/commands.hpp"

#include "segcalc/cosets.hpp"
#include "segcalc/distinction.hpp"
#include "segcalc/epsilon.hpp"
#include "segcalc/errors.hpp"
#include "segcalc/jl.hpp"
#include "segcalc/random.hpp"

#include <array>
#include <utility>

namespace segcalc {

using json = nlohmann::ordered_json;

namespace {

constexpr std::array<std::pair<Command, std::string_view>, 7> command_names{{
    {Command::order, "order"},
    {Command::classify, "classify"},
    {Command::mackey, "mackey"},
    {Command::verify, "verify"},
    {Command::jl, "jl"},
    {Command::cosets, "cosets"},
    {Command::epsilon, "epsilon"},
}};

json labels(std::span<const Segment> ms) {
    json out = json::array();
    for (const auto& seg : ms) out.push_back(seg.label());
    return out;
}

json formula_json(const DistFormula& f) {
    json clauses = json::array();
    for (const auto& clause : f.clauses()) {
        json atoms = json::array();
        for (const auto& atom : clause) atoms.push_back(atom.label());
        clauses.push_back(std::move(atoms));
    }
    json out;
    out["formula"] = f.str();
    out["clauses"] = std::move(clauses);
    return out;
}

json matrix_json(const CosetMatrix& s) {
    json rows = json::array();
    for (std::size_t i = 0; i < s.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < s.size(); ++j) row.push_back(s.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<int> sizes_of(std::span<const Segment> ms) {
    std::vector<int> out;
    for (const auto& seg : ms) out.push_back(seg.group_size());
    return out;
}

json order_result(const SessionFile& session, json& /*diagnostics*/) {
    json r;
    r["right_ordered_form"] = labels(right_ordered_form(session.segments));
    r["input_is_standard_order"] = is_standard_order(session.segments);
    r["totally_unlinked"] = is_totally_unlinked(session.segments);
    r["group_size"] = total_group_size(session.segments);
    return r;
}

json classify_result(const SessionFile& session, const Context& ctx, const CommandOptions& opts,
                     json& diagnostics) {
    const auto witnesses = distinction_witnesses(session.segments, ctx);
    DistFormula f;
    json ws = json::array();
    for (const auto& w : witnesses) {
        json entry;
        entry["sigma"] = w.sigma.cycles();
        json atoms = json::array();
        for (const auto& a : w.atoms) atoms.push_back(a.label());
        entry["atoms"] = std::move(atoms);
        ws.push_back(std::move(entry));
        f.add(w.atoms);
    }
    json r = formula_json(f);
    r["witnesses"] = std::move(ws);
    r["totally_unlinked"] = is_totally_unlinked(session.segments);
    if (opts.oracle) {
        r["evaluation"] = std::string(to_string(evaluate(f, *opts.oracle)));
        json unknown = json::array();
        for (const auto& label : f.atom_labels())
            if (!opts.oracle->contains(label)) unknown.push_back(label);
        if (!unknown.empty()) diagnostics.push_back("atoms missing from oracle: " + unknown.dump());
    }
    return r;
}

json mackey_result(const SessionFile& session, const Context& ctx, int& status, json& diagnostics) {
    const auto ordered = right_ordered_form(session.segments);
    const DistFormula brute = mackey_formula(ordered, ctx);
    const DistFormula theorem = classify_standard_module(session.segments, ctx);
    const bool equivalent = formulas_equivalent(brute, theorem);
    json r;
    r["right_ordered_form"] = labels(ordered);
    r["mackey"] = formula_json(brute);
    r["classify"] = formula_json(theorem);
    r["equivalent"] = equivalent;
    if (!equivalent) {
        status = exit_counterexample;
        diagnostics.push_back("Mackey formula differs from the involution classification");
    }
    return r;
}

json exclusion_json(const ExclusionReport& rep) {
    json r;
    r["right_ordered_form"] = labels(rep.ordered);
    r["matrices"] = rep.matrices;
    r["non_admissible"] = rep.non_admissible;
    r["offdiagonal_only"] = rep.offdiagonal_only;
    json entries = json::array();
    for (const auto& e : rep.entries) {
        json entry;
        entry["matrix"] = matrix_json(e.matrix);
        entry["reason"] = e.reason;
        entries.push_back(std::move(entry));
    }
    r["entries"] = std::move(entries);
    json ce = json::array();
    for (const auto& s : rep.counterexamples) ce.push_back(matrix_json(s));
    r["counterexamples"] = std::move(ce);
    return r;
}

json verify_result(const SessionFile& session, const Context& ctx, const CommandOptions& opts, int& status,
                   json& diagnostics) {
    const auto rep = verify_admissibility_exclusion(session.segments, ctx);
    json r = exclusion_json(rep);
    std::size_t counterexamples = rep.counterexamples.size();
    if (opts.random_count) {
        const auto lines = session.lines->lines();
        std::mt19937_64 rng(opts.seed);
        std::size_t checked = 0;
        std::size_t non_admissible = 0;
        json found = json::array();
        for (std::size_t n = 0; n < *opts.random_count; ++n) {
            const auto ms = random_multisegment(rng, lines, RandomShape{});
            const auto sub = verify_admissibility_exclusion(ms, ctx);
            ++checked;
            non_admissible += sub.non_admissible;
            for (const auto& s : sub.counterexamples) {
                json entry;
                entry["instance"] = labels(sub.ordered);
                entry["matrix"] = matrix_json(s);
                found.push_back(std::move(entry));
            }
        }
        counterexamples += found.size();
        json random;
        random["instances"] = checked;
        random["seed"] = opts.seed;
        random["non_admissible_checked"] = non_admissible;
        random["counterexamples"] = std::move(found);
        r["random"] = std::move(random);
    }
    if (counterexamples > 0) {
        status = exit_counterexample;
        diagnostics.push_back("non-admissible coset satisfies the Mackey duality conditions");
    }
    return r;
}

json jl_result(const SessionFile& session, const Context& ctx) {
    json segs = json::array();
    for (const auto& seg : session.segments) {
        const FSegment f = jl_segment(seg, ctx);
        json entry;
        entry["source"] = seg.label();
        entry["image"] = f.label();
        entry["endpoints"] = json::array({render_half(f.a2), render_half(f.b2)});
        entry["k_f"] = f.k_f;
        entry["group_size"] = f.group_size();
        segs.push_back(std::move(entry));
    }
    json r;
    r["segments"] = std::move(segs);
    r["generic"] = is_totally_unlinked(session.segments);
    return r;
}

json cosets_result(const SessionFile& session, const Context& ctx) {
    const auto partition = sizes_of(session.segments);
    if (partition.empty()) throw PreconditionError("empty multisegment: no partition");
    const auto matrices = enumerate_coset_matrices(partition, ctx.d);
    json list = json::array();
    for (const auto& s : matrices) {
        json entry;
        entry["matrix"] = matrix_json(s);
        const bool admissible = is_admissible(s);
        entry["admissible"] = admissible;
        entry["involution"] = admissible ? json(involution_of(s).cycles()) : json(nullptr);
        list.push_back(std::move(entry));
    }
    json r;
    r["partition"] = partition;
    r["count"] = matrices.size();
    r["matrices"] = std::move(list);
    return r;
}

json sign_config_json(const SignConfig& cfg, bool& all_match) {
    json pairs = json::array();
    json fixed = json::array();
    for (std::size_t i = 0; i < cfg.sigma.size(); ++i) {
        const auto j = static_cast<std::size_t>(cfg.sigma(i));
        json entry;
        if (j == i) {
            entry["i"] = i + 1;
            entry["sign"] = fixed_contribution(i, cfg).value();
            fixed.push_back(std::move(entry));
        } else if (j < i) {
            entry["pair"] = json::array({j + 1, i + 1});
            entry["sign"] = paired_contribution(i, cfg).value();
            pairs.push_back(std::move(entry));
        }
    }
    const Sign total = total_sign(cfg);
    const Sign predicted = predicted_sign(cfg.total_size(), cfg.ctx);
    json omega = json::array();
    for (const auto s : cfg.omega) omega.push_back(s.value());
    json r;
    r["sigma"] = cfg.sigma.cycles();
    r["sizes"] = cfg.sizes;
    r["omega"] = std::move(omega);
    r["pairs"] = std::move(pairs);
    r["fixed"] = std::move(fixed);
    r["total"] = total.value();
    r["predicted"] = predicted.value();
    r["match"] = total == predicted;
    all_match = all_match && total == predicted;
    return r;
}

json epsilon_result(const SessionFile& session, const Context& ctx, const CommandOptions& opts, int& status,
                    json& diagnostics) {
    require_embedding(session.segments, ctx);
    std::vector<Permutation> sigmas;
    if (opts.sigma) {
        if (opts.sigma->size() != session.segments.size())
            throw PreconditionError("sigma has " + std::to_string(opts.sigma->size()) + " entries but the session has " +
                                    std::to_string(session.segments.size()) + " segments");
        const auto duals = dual_multisegment(session.segments);
        for (std::size_t i = 0; i < duals.size(); ++i)
            if (session.segments[(*opts.sigma)(i)] != duals[i]) {
                diagnostics.push_back("sigma " + opts.sigma->cycles() + " does not pair each segment with its dual");
                break;
            }
        sigmas.push_back(*opts.sigma);
    } else {
        for (auto& w : distinction_witnesses(session.segments, ctx)) sigmas.push_back(std::move(w.sigma));
        if (sigmas.empty()) diagnostics.push_back("no witness involution: the standard module is not distinguished");
    }
    SignConfig base{ctx, {}, sizes_of(session.segments), {}};
    for (const auto& seg : session.segments) base.omega.push_back(seg.line().omega());
    json configs = json::array();
    bool all_match = true;
    for (const auto& sigma : sigmas) {
        SignConfig cfg = base;
        cfg.sigma = sigma;
        configs.push_back(sign_config_json(cfg, all_match));
    }
    if (!all_match) {
        status = exit_counterexample;
        diagnostics.push_back("total sign differs from the predicted sign");
    }
    json r;
    r["configs"] = std::move(configs);
    return r;
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
    for (const auto& [cmd, text] : command_names)
        if (text == name) return cmd;
    return std::nullopt;
}

std::string_view to_string(Command cmd) {
    for (const auto& [c, text] : command_names)
        if (c == cmd) return text;
    return "unknown";
}

Report run_command(Command cmd, const SessionFile& session, const CommandOptions& options) {
    const Context ctx = session.context(options.d, options.eta);
    Report report;
    json diagnostics = json::array();
    json result;
    switch (cmd) {
        case Command::order: result = order_result(session, diagnostics); break;
        case Command::classify: result = classify_result(session, ctx, options, diagnostics); break;
        case Command::mackey: result = mackey_result(session, ctx, report.status, diagnostics); break;
        case Command::verify: result = verify_result(session, ctx, options, report.status, diagnostics); break;
        case Command::jl: result = jl_result(session, ctx); break;
        case Command::cosets: result = cosets_result(session, ctx); break;
        case Command::epsilon: result = epsilon_result(session, ctx, options, report.status, diagnostics); break;
    }
    json& out = report.json;
    out["command"] = std::string(to_string(cmd));
    out["context"] = json{{"d", ctx.d}, {"eta", ctx.eta_sign.value()}};
    out["input"] = labels(session.segments);
    out["result"] = std::move(result);
    out["diagnostics"] = std::move(diagnostics);
    return report;
}

std::string render_json(const Report& report) { return report.json.dump(2) + "\n"; }

namespace {

bool is_scalar_array(const json& v) {
    if (!v.is_array()) return false;
    for (const auto& e : v)
        if (e.is_object() || (e.is_array() && !is_scalar_array(e))) return false;
    return true;
}

std::string scalar(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    if (v.is_array()) {
        std::string out = "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += ", ";
            out += scalar(v[i]);
        }
        return out + "]";
    }
    return v.dump();
}

void pretty(const json& v, int indent, std::string& out) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (v.is_object()) {
        for (const auto& [key, value] : v.items()) {
            if (value.is_object() || (value.is_array() && !is_scalar_array(value) && !value.empty())) {
                out += pad + key + ":\n";
                pretty(value, indent + 2, out);
            } else {
                out += pad + key + ": " + scalar(value) + "\n";
            }
        }
    } else if (v.is_array()) {
        for (const auto& e : v) {
            if (e.is_object()) {
                std::string inner;
                pretty(e, indent + 2, inner);
                // Bullet on the first line of each element.
                inner[static_cast<std::size_t>(indent)] = '-';
                out += inner;
            } else {
                out += pad + "- " + scalar(e) + "\n";
            }
        }
    } else {
        out += pad + scalar(v) + "\n";
    }
}

}  // namespace

std::string render_pretty(const Report& report) {
    std::string out;
    pretty(report.json, 0, out);
    return out;
}

}  // namespace segcalc
