#pragma once

// Jacquet–Langlands transfer of cuspidals, segments and multisegments of
// GL_n(D) to GL_{nd}(F). Half-integer endpoints are stored doubled.

#include "segcalc/segments.hpp"

#include <span>
#include <string>
#include <vector>

namespace segcalc {

/// The F-side segment [a2/2, b2/2]_{ρ'} with ρ' cuspidal of GL_{k_f}(F).
struct FSegment {
    std::string line;
    int k_f = 1;
    int a2 = 0;
    int b2 = 0;

    /// Number of cuspidals on the F side.
    int length() const { return (b2 - a2) / 2 + 1; }
    int group_size() const { return length() * k_f; }

    /// "[-1/2,5/2]_JL(A)".
    std::string label() const;

    friend bool operator==(const FSegment&, const FSegment&) = default;
};

/// Exact rendering of a doubled coordinate: 4 → "2", -1 → "-1/2".
std::string render_half(int doubled);

/// F-side line id for a source line.
std::string jl_line_id(const CuspidalLine& line);

/// JL(ρ) = L([(1-l)/2, (l-1)/2]_{ρ'}). Throws InvalidLineError unless l | k·d.
FSegment jl_cuspidal(const CuspidalLine& line, const Context& ctx);

/// JL([a,b]_ρ) = [((2a-1)l+1)/2, ((2b+1)l-1)/2]_{ρ'}.
FSegment jl_segment(const Segment& seg, const Context& ctx);

std::vector<FSegment> jl_multisegment(std::span<const Segment> ms, const Context& ctx);

bool f_linked(const FSegment& x, const FSegment& y);
bool f_precedes(const FSegment& x, const FSegment& y);

}  // namespace segcalc
