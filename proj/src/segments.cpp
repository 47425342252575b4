#include "segcalc/segments.hpp"

#include "segcalc/errors.hpp"

#include <algorithm>
#include <numeric>

namespace segcalc {

void Context::validate() const {
    if (d < 1) throw PreconditionError("d must be a positive integer, got " + std::to_string(d));
}

bool embeds(std::int64_t m, const Context& ctx) { return (m * ctx.d) % 2 == 0; }

std::shared_ptr<const LineRegistry> LineRegistry::build(const std::vector<Declaration>& decls) {
    std::shared_ptr<LineRegistry> reg(new LineRegistry());
    for (const auto& decl : decls) {
        if (decl.id.empty()) throw InvalidLineError("line id must be non-empty");
        if (decl.k < 1) throw InvalidLineError("line " + decl.id + ": k must be positive");
        if (decl.l < 1) throw InvalidLineError("line " + decl.id + ": l must be positive");
        CuspidalLine line;
        line.id_ = decl.id;
        line.k_ = decl.k;
        line.l_ = decl.l;
        line.omega_ = decl.omega;
        if (!reg->lines_.emplace(decl.id, std::move(line)).second)
            throw InvalidLineError("line " + decl.id + " declared twice");
    }
    for (const auto& decl : decls) {
        auto& line = reg->lines_.find(decl.id)->second;
        auto it = reg->lines_.find(decl.dual_id);
        if (it == reg->lines_.end())
            throw InvalidLineError("line " + decl.id + ": undeclared dual line " + decl.dual_id);
        line.dual_ = &it->second;
    }
    for (const auto& [id, line] : reg->lines_) {
        const CuspidalLine& dual = *line.dual_;
        if (dual.dual_ != &line)
            throw InvalidLineError("dual mismatch: dual of " + id + " is " + dual.id() +
                                   " but dual of " + dual.id() + " is " + dual.dual_->id());
        if (dual.k_ != line.k_ || dual.l_ != line.l_)
            throw InvalidLineError("dual lines " + id + " and " + dual.id() +
                                   " must have equal k and l");
    }
    return reg;
}

const CuspidalLine* LineRegistry::find(std::string_view id) const {
    auto it = lines_.find(id);
    return it == lines_.end() ? nullptr : &it->second;
}

const CuspidalLine& LineRegistry::at(std::string_view id) const {
    if (const auto* line = find(id)) return *line;
    throw PreconditionError("undeclared line " + std::string(id));
}

std::vector<const CuspidalLine*> LineRegistry::lines() const {
    std::vector<const CuspidalLine*> out;
    out.reserve(lines_.size());
    for (const auto& [id, line] : lines_) out.push_back(&line);
    return out;
}

Segment::Segment(const CuspidalLine& line, int a, int b) : line_(&line), a_(a), b_(b) {
    if (a > b) throw PreconditionError("segment requires a ≤ b");
}

std::string Segment::label() const {
    return line_->id() + "[" + std::to_string(a_) + "," + std::to_string(b_) + "]";
}

Segment dual_segment(const Segment& seg) { return Segment(seg.line().dual(), -seg.b(), -seg.a()); }

Multisegment dual_multisegment(std::span<const Segment> ms) {
    Multisegment out;
    out.reserve(ms.size());
    for (const auto& seg : ms) out.push_back(dual_segment(seg));
    return out;
}

bool linked(const Segment& x, const Segment& y) {
    if (x.line().id() != y.line().id()) return false;
    const bool union_is_interval = y.a() <= x.b() + 1 && x.a() <= y.b() + 1;
    const bool x_in_y = y.a() <= x.a() && x.b() <= y.b();
    const bool y_in_x = x.a() <= y.a() && y.b() <= x.b();
    return union_is_interval && !x_in_y && !y_in_x;
}

bool precedes(const Segment& x, const Segment& y) { return linked(x, y) && y.a() > x.a(); }

bool is_standard_order(std::span<const Segment> ms) {
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j)
            if (precedes(ms[i], ms[j])) return false;
    return true;
}

bool is_right_ordered(std::span<const Segment> ms) {
    std::vector<std::string_view> closed;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        const auto& id = ms[i].line().id();
        if (i > 0 && ms[i - 1].line().id() == id) {
            if (ms[i].b() > ms[i - 1].b()) return false;
            continue;
        }
        if (std::find(closed.begin(), closed.end(), id) != closed.end()) return false;
        closed.push_back(id);
    }
    return true;
}

Multisegment right_ordered_form(std::span<const Segment> ms) {
    Multisegment out(ms.begin(), ms.end());
    std::stable_sort(out.begin(), out.end(), [](const Segment& x, const Segment& y) {
        if (x.line().id() != y.line().id()) return x.line().id() < y.line().id();
        if (x.b() != y.b()) return x.b() > y.b();
        return x.a() < y.a();
    });
    return out;
}

bool is_totally_unlinked(std::span<const Segment> ms) {
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j)
            if (linked(ms[i], ms[j])) return false;
    return true;
}

std::int64_t total_group_size(std::span<const Segment> ms) {
    return std::accumulate(ms.begin(), ms.end(), std::int64_t{0},
                           [](std::int64_t acc, const Segment& s) { return acc + s.group_size(); });
}

std::string render(std::span<const Segment> ms) {
    std::string out;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (i > 0) out += " + ";
        out += ms[i].label();
    }
    return out;
}

}  // namespace segcalc
