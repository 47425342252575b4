#pragma once

// Cuspidal lines, segments and multisegments with the linked/precedes
// combinatorics of the Zelevinsky/Langlands classification.

#include "segcalc/sign.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace segcalc {

/// Ambient data: D has dimension d² over F, eta_sign = η_{E/F}(-1).
struct Context {
    int d = 1;
    Sign eta_sign = Sign::plus();

    /// Throws PreconditionError if d < 1.
    void validate() const;
};

/// True iff E embeds in mat_m(D), i.e. m·d is even.
bool embeds(std::int64_t m, const Context& ctx);

/// A formal supercuspidal orbit {ρν^{m·l}} on which segments live.
///
/// Lines are owned by a LineRegistry; segments refer to them by address, so
/// the registry must outlive every segment built on it.
class CuspidalLine {
public:
    const std::string& id() const { return id_; }
    int k() const { return k_; }
    int l() const { return l_; }
    Sign omega() const { return omega_; }
    const CuspidalLine& dual() const { return *dual_; }
    bool self_dual() const { return dual_ == this; }

private:
    friend class LineRegistry;

    std::string id_;
    int k_ = 1;
    int l_ = 1;
    Sign omega_;
    const CuspidalLine* dual_ = nullptr;
};

/// Immutable, validated set of cuspidal lines.
class LineRegistry {
public:
    struct Declaration {
        std::string id;
        int k = 1;
        int l = 1;
        std::string dual_id;
        Sign omega;

        friend bool operator==(const Declaration&, const Declaration&) = default;
    };

    /// Validates k, l ≥ 1, unique ids, resolvable duals, dual-of-dual = id and
    /// matching (k, l) across dual pairs. Throws InvalidLineError.
    static std::shared_ptr<const LineRegistry> build(const std::vector<Declaration>& decls);

    LineRegistry(const LineRegistry&) = delete;
    LineRegistry& operator=(const LineRegistry&) = delete;

    /// nullptr when absent.
    const CuspidalLine* find(std::string_view id) const;
    /// Throws PreconditionError when absent.
    const CuspidalLine& at(std::string_view id) const;

    /// All lines, sorted by id.
    std::vector<const CuspidalLine*> lines() const;

private:
    LineRegistry() = default;

    std::map<std::string, CuspidalLine, std::less<>> lines_;
};

/// The segment [a,b]_ρ = {ρν^{a·l}, ..., ρν^{b·l}}.
class Segment {
public:
    /// Throws PreconditionError if a > b.
    Segment(const CuspidalLine& line, int a, int b);

    const CuspidalLine& line() const { return *line_; }
    int a() const { return a_; }
    int b() const { return b_; }

    /// Number of cuspidals t = b - a + 1.
    int length() const { return b_ - a_ + 1; }
    /// n such that the segment lives on G_n: t·k.
    int group_size() const { return length() * line_->k(); }

    /// Canonical text key, e.g. "A[0,1]".
    std::string label() const;

    friend bool operator==(const Segment& x, const Segment& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.line_->id() == y.line_->id();
    }
    friend std::strong_ordering operator<=>(const Segment& x, const Segment& y) {
        if (auto c = x.line_->id() <=> y.line_->id(); c != 0) return c;
        if (auto c = x.a_ <=> y.a_; c != 0) return c;
        return x.b_ <=> y.b_;
    }

private:
    const CuspidalLine* line_;
    int a_;
    int b_;
};

/// Ordered list with multiset semantics.
using Multisegment = std::vector<Segment>;

/// [a,b]_ρ ↦ [-b,-a]_{ρ^∨}.
Segment dual_segment(const Segment& seg);
Multisegment dual_multisegment(std::span<const Segment> ms);

/// Same line, union is an interval, neither contains the other.
bool linked(const Segment& x, const Segment& y);
/// linked(x, y) and y starts strictly higher.
bool precedes(const Segment& x, const Segment& y);

/// No earlier segment precedes a later one.
bool is_standard_order(std::span<const Segment> ms);

/// Lines in contiguous blocks, right endpoints weakly decreasing per block.
bool is_right_ordered(std::span<const Segment> ms);

/// Blocks by line id ascending; within a block b descending, then a
/// ascending, then input order.
Multisegment right_ordered_form(std::span<const Segment> ms);

bool is_totally_unlinked(std::span<const Segment> ms);

/// Σ group sizes.
std::int64_t total_group_size(std::span<const Segment> ms);

/// "A[0,1] + B[2,2]".
std::string render(std::span<const Segment> ms);

}  // namespace segcalc
