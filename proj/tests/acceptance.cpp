// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include "segcalc/commands.hpp"
#include "segcalc/cosets.hpp"
#include "segcalc/distinction.hpp"
#include "segcalc/epsilon.hpp"
#include "segcalc/errors.hpp"
#include "segcalc/jl.hpp"
#include "segcalc/random.hpp"
#include "segcalc/session.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

using namespace segcalc;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << id << ". " << name << ": " << detail << std::endl;
    if (!pass) ++failures;
}

std::shared_ptr<const LineRegistry> family_lines(int l) {
    return LineRegistry::build({
        {"A", 1, l, "A*", Sign::plus()},
        {"A*", 1, l, "A", Sign::plus()},
        {"S", 1, l, "S", Sign::plus()},
    });
}

// Every multisegment with 1..3 segments of length ≤ 3, endpoints in
// [-2, 2], drawn from one self-dual line and one dual pair.
void for_each_family_instance(const std::function<void(const Multisegment&, int l)>& visit) {
    for (int l : {1, 2}) {
        const auto reg = family_lines(l);
        std::vector<Segment> pool;
        for (const char* id : {"A", "A*", "S"})
            for (int a = -2; a <= 2; ++a)
                for (int b = a; b <= std::min(2, a + 2); ++b) pool.emplace_back(reg->at(id), a, b);
        const std::size_t p = pool.size();
        for (std::size_t i = 0; i < p; ++i) {
            visit(Multisegment{pool[i]}, l);
            for (std::size_t j = i; j < p; ++j) {
                visit(Multisegment{pool[i], pool[j]}, l);
                for (std::size_t k = j; k < p; ++k) visit(Multisegment{pool[i], pool[j], pool[k]}, l);
            }
        }
    }
}

void criterion_1() {
    const auto start = std::chrono::steady_clock::now();
    std::size_t instances = 0, agree = 0, refused = 0;
    for_each_family_instance([&](const Multisegment& ms, int) {
        for (int d : {1, 2, 3}) {
            const Context ctx{d};
            ++instances;
            bool theorem_refused = false, mackey_refused = false;
            DistFormula f, g;
            try {
                f = classify_standard_module(ms, ctx);
            } catch (const PreconditionError&) {
                theorem_refused = true;
            }
            try {
                g = classify_via_mackey(ms, ctx);
            } catch (const PreconditionError&) {
                mackey_refused = true;
            }
            if (theorem_refused || mackey_refused) {
                if (theorem_refused && mackey_refused) {
                    ++agree;
                    ++refused;
                }
                continue;
            }
            if (formulas_equivalent(f, g)) ++agree;
        }
    });
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream detail;
    detail << agree << "/" << instances << " equivalent (" << refused << " with n·d odd refused by both), "
           << secs << " s";
    report(1, "classify ⇔ mackey equivalence", agree == instances && secs < 60.0, detail.str());
}

void criterion_2() {
    std::size_t instances = 0, non_admissible = 0, counterexamples = 0;
    for_each_family_instance([&](const Multisegment& ms, int) {
        for (int d : {1, 2, 3}) {
            const auto rep = verify_admissibility_exclusion(ms, Context{d});
            ++instances;
            non_admissible += rep.non_admissible;
            counterexamples += rep.counterexamples.size();
        }
    });
    const std::size_t exhaustive = instances;
    std::mt19937_64 rng(20240601);
    const auto reg = LineRegistry::build({
        {"A", 1, 1, "A*", Sign::plus()},
        {"A*", 1, 1, "A", Sign::plus()},
        {"S", 1, 1, "S", Sign::plus()},
        {"T", 2, 2, "T", Sign::plus()},
    });
    const auto lines = reg->lines();
    std::uniform_int_distribution<int> pick_d(1, 3);
    for (int n = 0; n < 10000; ++n) {
        const auto ms = right_ordered_form(random_multisegment(rng, lines, {1, 4, 4, 4}));
        const auto rep = verify_admissibility_exclusion(ms, Context{pick_d(rng)});
        ++instances;
        non_admissible += rep.non_admissible;
        counterexamples += rep.counterexamples.size();
    }
    std::ostringstream detail;
    detail << counterexamples << " counterexamples over " << exhaustive << " exhaustive + 10000 random instances ("
           << non_admissible << " non-admissible matrices checked)";
    report(2, "non-admissible cosets excluded", counterexamples == 0, detail.str());
}

// Random involution built by pairing off a shuffled index list.
Permutation random_involution(std::mt19937_64& rng, std::size_t t) {
    std::vector<int> idx(t);
    for (std::size_t i = 0; i < t; ++i) idx[i] = static_cast<int>(i);
    std::shuffle(idx.begin(), idx.end(), rng);
    std::vector<int> image(t);
    std::bernoulli_distribution pair(0.5);
    std::size_t i = 0;
    while (i < t) {
        if (i + 1 < t && pair(rng)) {
            image[idx[i]] = idx[i + 1];
            image[idx[i + 1]] = idx[i];
            i += 2;
        } else {
            image[idx[i]] = idx[i];
            ++i;
        }
    }
    return Permutation(std::move(image));
}

void criterion_3() {
    std::mt19937_64 rng(1729);
    std::uniform_int_distribution<std::size_t> pick_t(1, 6);
    std::uniform_int_distribution<int> pick_d(1, 4);
    std::uniform_int_distribution<int> pick_n(1, 8);
    std::uniform_int_distribution<int> pick_even(1, 4);
    std::bernoulli_distribution coin(0.5);
    std::size_t configs = 0, evaluations = 0, failures_here = 0;
    for (int c = 0; c < 10000; ++c) {
        const std::size_t t = pick_t(rng);
        const Permutation sigma = random_involution(rng, t);
        const int d = pick_d(rng);
        const Sign eta = coin(rng) ? Sign::minus() : Sign::plus();
        std::vector<int> sizes(t);
        std::vector<Sign> omega(t);
        for (std::size_t i = 0; i < t; ++i) {
            const auto j = static_cast<std::size_t>(sigma(i));
            if (j < i) {
                sizes[i] = sizes[j];
                omega[i] = omega[j];
                continue;
            }
            sizes[i] = (j == i && d % 2 == 1) ? 2 * pick_even(rng) : pick_n(rng);
            omega[i] = coin(rng) ? Sign::minus() : Sign::plus();
        }
        SignConfig cfg{Context{d, eta}, sigma, sizes, omega};
        ++configs;
        const std::int64_t n = cfg.total_size();
        // (-1)^n η^{nd/2}, written out independently of predicted_sign.
        const int expected = ((n % 2 == 0) ? 1 : -1) * ((eta.is_negative() && (n * d / 2) % 2 == 1) ? -1 : 1);
        auto check = [&](const SignConfig& x) {
            ++evaluations;
            const bool ok = verify_sign_identity(x) && total_sign(x).value() == expected &&
                            predicted_sign(n, x.ctx).value() == expected;
            if (!ok) ++failures_here;
        };
        if (t <= 3) {
            for (unsigned mask = 0; mask < (1U << t); ++mask) {
                SignConfig x = cfg;
                for (std::size_t i = 0; i < t; ++i) {
                    const auto rep = std::min<std::size_t>(i, static_cast<std::size_t>(sigma(i)));
                    x.omega[i] = (mask >> rep) & 1U ? Sign::minus() : Sign::plus();
                }
                // Only masks consistent on orbits are distinct configs; others repeat.
                check(x);
            }
        } else {
            check(cfg);
        }
    }
    std::ostringstream detail;
    detail << failures_here << " failures over " << configs << " configs (" << evaluations << " evaluations)";
    report(3, "total_sign = predicted_sign", failures_here == 0, detail.str());
}

void criterion_4() {
    std::size_t pairs = 0, precedence_ok = 0, size_ok = 0, singles = 0;
    for (auto [k, l] : {std::pair{1, 1}, {1, 2}, {2, 2}, {1, 3}}) {
        const auto reg = LineRegistry::build({{"A", k, l, "A", Sign::plus()}});
        const auto& line = reg->at("A");
        for (int d = 1; d <= 6; ++d) {
            if ((k * d) % l != 0) continue;
            const Context ctx{d};
            for (int a = -4; a <= 4; ++a)
                for (int b = a; b <= 4; ++b) {
                    const Segment x(line, a, b);
                    const FSegment fx = jl_segment(x, ctx);
                    ++singles;
                    if (fx.group_size() == x.group_size() * d) ++size_ok;
                    for (int c = -4; c <= 4; ++c)
                        for (int e = c; e <= 4; ++e) {
                            const Segment y(line, c, e);
                            ++pairs;
                            if (precedes(x, y) == f_precedes(fx, jl_segment(y, ctx))) ++precedence_ok;
                        }
                }
        }
    }
    std::ostringstream detail;
    detail << precedence_ok << "/" << pairs << " pairs preserve precedence, " << size_ok << "/" << singles
           << " sizes transfer";
    report(4, "JL precedence preservation", precedence_ok == pairs && size_ok == singles, detail.str());
}

void criterion_5() {
    std::vector<std::size_t> recurrence{1, 1};
    for (std::size_t t = 2; t <= 6; ++t) recurrence.push_back(recurrence[t - 1] + (t - 1) * recurrence[t - 2]);
    const std::vector<std::size_t> involution_numbers{1, 2, 4, 10, 26, 76};
    bool ok = true;
    std::ostringstream detail;
    for (std::size_t t = 1; t <= 6; ++t) {
        const std::vector<int> ones(t, 1);
        const auto count = enumerate_coset_matrices(ones, 2).size();
        ok = ok && count == recurrence[t] && count == involution_numbers[t - 1];
        detail << (t > 1 ? "," : "") << count;
    }
    report(5, "|I(1,...,1)| = involution numbers", ok, "counts " + detail.str());
}

void criterion_6() {
    const auto reg = LineRegistry::build({
        {"A", 1, 2, "A*", Sign::plus()},
        {"A*", 1, 2, "A", Sign::plus()},
        {"S", 1, 1, "S", Sign::plus()},
        {"T", 2, 2, "T", Sign::plus()},
    });
    const auto lines = reg->lines();
    std::mt19937_64 rng(6006);
    const RandomShape shape{1, 5, 3, 3};
    std::size_t dual_fail = 0, order_fail = 0, perm_fail = 0, sym_fail = 0;
    for (int n = 0; n < 1000; ++n) {
        const auto ms = random_multisegment(rng, lines, shape);
        if (dual_multisegment(dual_multisegment(ms)) != ms) ++dual_fail;
    }
    for (int n = 0; n < 1000; ++n) {
        const auto ordered = right_ordered_form(random_multisegment(rng, lines, shape));
        if (!is_standard_order(ordered) || !is_right_ordered(ordered)) ++order_fail;
    }
    auto context_for = [](const Multisegment& ms, int n) {
        const Context c{1 + n % 3};
        return embeds(total_group_size(ms), c) ? c : Context{2};
    };
    for (int n = 0; n < 1000; ++n) {
        const auto ms = random_multisegment(rng, lines, shape);
        const Context ctx = context_for(ms, n);
        auto shuffled = ms;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        if (classify_standard_module(ms, ctx) != classify_standard_module(shuffled, ctx)) ++perm_fail;
    }
    for (int n = 0; n < 1000; ++n) {
        const auto ms = random_multisegment(rng, lines, shape);
        const Context ctx = context_for(ms, n);
        if (classify_standard_module(ms, ctx) != dual_formula(classify_standard_module(dual_multisegment(ms), ctx)))
            ++sym_fail;
    }
    std::ostringstream detail;
    detail << "failures: dual " << dual_fail << ", order " << order_fail << ", permutation " << perm_fail
           << ", duality symmetry " << sym_fail << " (1000 each)";
    report(6, "duality/ordering invariants", dual_fail + order_fail + perm_fail + sym_fail == 0, detail.str());
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void criterion_7() {
    const std::filesystem::path dir = SEGCALC_GOLDEN_DIR;
    std::size_t files = 0, stable = 0, matching = 0;
    std::string mismatch;
    std::vector<std::filesystem::path> sessions;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.path().extension() == ".seg") sessions.push_back(entry.path());
    std::sort(sessions.begin(), sessions.end());
    for (const auto& path : sessions) {
        const auto session = parse_session(slurp(path));
        for (const char* name : {"order", "classify", "jl", "cosets", "epsilon"}) {
            const auto golden = dir / (path.stem().string() + "." + name + ".json");
            if (!std::filesystem::exists(golden)) continue;
            ++files;
            const auto cmd = *parse_command(name);
            const std::string first = render_json(run_command(cmd, session, {}));
            const std::string second = render_json(run_command(cmd, session, {}));
            if (first == second) ++stable;
            if (first == slurp(golden)) {
                ++matching;
            } else if (mismatch.empty()) {
                mismatch = ", first mismatch " + golden.filename().string();
            }
        }
    }
    std::ostringstream detail;
    detail << stable << "/" << files << " reports stable across runs, " << matching << "/" << files
           << " byte-identical to golden" << mismatch;
    report(7, "CLI golden files", files >= 5 && stable == files && matching == files, detail.str());
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
