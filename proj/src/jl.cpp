#include "segcalc/jl.hpp"

#include "segcalc/errors.hpp"

namespace segcalc {

std::string render_half(int doubled) {
    if (doubled % 2 == 0) return std::to_string(doubled / 2);
    return std::to_string(doubled) + "/2";
}

std::string FSegment::label() const {
    return "[" + render_half(a2) + "," + render_half(b2) + "]_" + line;
}

std::string jl_line_id(const CuspidalLine& line) { return "JL(" + line.id() + ")"; }

namespace {

int checked_k_f(const CuspidalLine& line, const Context& ctx) {
    ctx.validate();
    const long long kd = static_cast<long long>(line.k()) * ctx.d;
    if (kd % line.l() != 0)
        throw InvalidLineError("line " + line.id() + ": l=" + std::to_string(line.l()) +
                               " does not divide k·d=" + std::to_string(kd));
    return static_cast<int>(kd / line.l());
}

}  // namespace

FSegment jl_cuspidal(const CuspidalLine& line, const Context& ctx) {
    const int k_f = checked_k_f(line, ctx);
    return FSegment{jl_line_id(line), k_f, 1 - line.l(), line.l() - 1};
}

FSegment jl_segment(const Segment& seg, const Context& ctx) {
    const int k_f = checked_k_f(seg.line(), ctx);
    const int l = seg.line().l();
    return FSegment{jl_line_id(seg.line()), k_f, (2 * seg.a() - 1) * l + 1,
                    (2 * seg.b() + 1) * l - 1};
}

std::vector<FSegment> jl_multisegment(std::span<const Segment> ms, const Context& ctx) {
    std::vector<FSegment> out;
    out.reserve(ms.size());
    for (const auto& seg : ms) out.push_back(jl_segment(seg, ctx));
    return out;
}

bool f_linked(const FSegment& x, const FSegment& y) {
    if (x.line != y.line) return false;
    // Both must sit on the same half-integer lattice.
    if ((x.a2 - y.a2) % 2 != 0) return false;
    const bool union_is_interval = y.a2 <= x.b2 + 2 && x.a2 <= y.b2 + 2;
    const bool x_in_y = y.a2 <= x.a2 && x.b2 <= y.b2;
    const bool y_in_x = x.a2 <= y.a2 && y.b2 <= x.b2;
    return union_is_interval && !x_in_y && !y_in_x;
}

bool f_precedes(const FSegment& x, const FSegment& y) { return f_linked(x, y) && y.a2 > x.a2; }

}  // namespace segcalc
