#pragma once

// Session files:
//
//   # comment
//   line A k=1 l=2 dual=B [omega=+1|-1]
//   set d=2 eta=-1
//   A[0,1] + B[-1,0]
//
// Statements are one per line; declarations may appear in any order.

#include "segcalc/segments.hpp"
#include "segcalc/sign.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace segcalc {

struct SessionFile {
    std::vector<LineRegistry::Declaration> declarations;
    std::shared_ptr<const LineRegistry> lines;
    std::optional<int> d;
    std::optional<Sign> eta;
    Multisegment segments;

    /// Session context with overrides applied; defaults d=1, eta=+1.
    Context context(std::optional<int> d_override = {}, std::optional<Sign> eta_override = {}) const;

    friend bool operator==(const SessionFile& x, const SessionFile& y) {
        return x.declarations == y.declarations && x.d == y.d && x.eta == y.eta && x.segments == y.segments;
    }
};

/// Throws ParseError with a 1-based line/column.
SessionFile parse_session(std::string_view text);

/// Canonical text; parse_session(render_session(s)) == s.
std::string render_session(const SessionFile& session);

}  // namespace segcalc
