#include "segcalc/session.hpp"

#include "segcalc/errors.hpp"

#include <cctype>
#include <charconv>
#include <map>

namespace segcalc {

Context SessionFile::context(std::optional<int> d_override, std::optional<Sign> eta_override) const {
    Context ctx;
    ctx.d = d_override.value_or(d.value_or(1));
    ctx.eta_sign = eta_override.value_or(eta.value_or(Sign::plus()));
    ctx.validate();
    return ctx;
}

namespace {

struct Position {
    int line;
    int column;
};

// Cursor over a single statement line.
class LineCursor {
public:
    LineCursor(std::string_view text, int line_no) : text_(text), line_no_(line_no) {}

    void skip_space() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
    }
    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    /// Position of the next token.
    Position position() {
        skip_space();
        return {line_no_, static_cast<int>(pos_) + 1};
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, line_no_, static_cast<int>(pos_) + 1);
    }
    [[noreturn]] void fail_at(const std::string& message, Position p) const {
        throw ParseError(message, p.line, p.column);
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'" + found());
        ++pos_;
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
    static bool ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '*' || c == '\'' || c == '.';
    }

    std::string ident() {
        skip_space();
        if (pos_ >= text_.size() || !ident_start(text_[pos_])) fail("expected identifier" + found());
        const auto begin = pos_;
        while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
        return std::string(text_.substr(begin, pos_ - begin));
    }

    int integer() {
        skip_space();
        const auto begin = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
        const auto digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits) {
            pos_ = begin;
            fail("expected integer" + found());
        }
        std::string_view tok = text_.substr(begin, pos_ - begin);
        if (tok.front() == '+') tok.remove_prefix(1);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size()) {
            pos_ = begin;
            fail("integer out of range");
        }
        return value;
    }

    Sign sign() {
        const Position p = position();
        const int v = integer();
        if (v != 1 && v != -1) fail_at("expected +1 or -1", p);
        return Sign::from_int(v);
    }

    /// `key=`; returns the key.
    std::string key() {
        std::string k = ident();
        expect('=');
        return k;
    }

    bool keyword(std::string_view word) {
        skip_space();
        if (text_.substr(pos_, word.size()) != word) return false;
        const auto after = pos_ + word.size();
        if (after < text_.size() && text_[after] != ' ' && text_[after] != '\t') return false;
        pos_ = after;
        return true;
    }

private:
    std::string found() {
        skip_space();
        if (pos_ >= text_.size()) return ", found end of line";
        return std::string(", found '") + text_[pos_] + "'";
    }

    std::string_view text_;
    int line_no_;
    std::size_t pos_ = 0;
};

struct PendingSegment {
    std::string line;
    int a;
    int b;
    Position where;
};

struct PendingDecl {
    LineRegistry::Declaration decl;
    Position where;
    Position dual_where;
};

void parse_line_decl(LineCursor& cur, std::vector<PendingDecl>& decls) {
    PendingDecl pending{};
    pending.where = cur.position();
    pending.decl.id = cur.ident();
    std::map<std::string, bool> seen;
    while (!cur.at_end()) {
        const Position p = cur.position();
        const std::string k = cur.key();
        if (seen[k]) cur.fail_at("duplicate field " + k, p);
        seen[k] = true;
        if (k == "k") {
            pending.decl.k = cur.integer();
            if (pending.decl.k < 1) cur.fail_at("k must be positive", p);
        } else if (k == "l") {
            pending.decl.l = cur.integer();
            if (pending.decl.l < 1) cur.fail_at("l must be positive", p);
        } else if (k == "dual") {
            pending.dual_where = cur.position();
            pending.decl.dual_id = cur.ident();
        } else if (k == "omega") {
            pending.decl.omega = cur.sign();
        } else {
            cur.fail_at("unknown field " + k, p);
        }
    }
    for (const char* required : {"k", "l", "dual"})
        if (!seen[required]) cur.fail(std::string("line declaration requires ") + required + "=");
    decls.push_back(std::move(pending));
}

void parse_set(LineCursor& cur, SessionFile& session) {
    if (cur.at_end()) cur.fail("expected d= or eta=");
    while (!cur.at_end()) {
        const Position p = cur.position();
        const std::string k = cur.key();
        if (k == "d") {
            if (session.d) cur.fail_at("d set twice", p);
            const Position vp = cur.position();
            session.d = cur.integer();
            if (*session.d < 1) cur.fail_at("d must be a positive integer", vp);
        } else if (k == "eta") {
            if (session.eta) cur.fail_at("eta set twice", p);
            session.eta = cur.sign();
        } else {
            cur.fail_at("unknown parameter " + k, p);
        }
    }
}

void parse_multisegment(LineCursor& cur, std::vector<PendingSegment>& out) {
    do {
        PendingSegment seg{};
        seg.where = cur.position();
        seg.line = cur.ident();
        cur.expect('[');
        seg.a = cur.integer();
        cur.expect(',');
        seg.b = cur.integer();
        cur.expect(']');
        if (seg.a > seg.b) cur.fail_at("segment requires a ≤ b", seg.where);
        out.push_back(std::move(seg));
    } while (cur.accept('+'));
    if (!cur.at_end()) cur.fail("expected '+' or end of line, found '" + std::string(1, cur.peek()) + "'");
}

}  // namespace

SessionFile parse_session(std::string_view text) {
    SessionFile session;
    std::vector<PendingDecl> decls;
    std::vector<PendingSegment> segments;
    bool have_expression = false;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        ++line_no;
        pos = end + 1;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        LineCursor cur(line, line_no);
        if (!cur.at_end()) {
            if (cur.keyword("line")) {
                parse_line_decl(cur, decls);
            } else if (cur.keyword("set")) {
                parse_set(cur, session);
            } else {
                if (have_expression) cur.fail("multiple multisegment expressions");
                have_expression = true;
                parse_multisegment(cur, segments);
            }
        }
        if (end == text.size()) break;
    }

    std::map<std::string, const PendingDecl*> by_id;
    for (const auto& d : decls) {
        if (!by_id.emplace(d.decl.id, &d).second)
            throw ParseError("line " + d.decl.id + " declared twice", d.where.line, d.where.column);
    }
    for (const auto& d : decls) {
        auto it = by_id.find(d.decl.dual_id);
        if (it == by_id.end())
            throw ParseError("undeclared line " + d.decl.dual_id, d.dual_where.line, d.dual_where.column);
        const auto& dual = it->second->decl;
        if (dual.dual_id != d.decl.id)
            throw ParseError("dual mismatch: dual of " + d.decl.id + " is " + dual.id + " but dual of " +
                                 dual.id + " is " + dual.dual_id,
                             d.where.line, d.where.column);
        if (dual.k != d.decl.k || dual.l != d.decl.l)
            throw ParseError("dual lines " + d.decl.id + " and " + dual.id + " must have equal k and l",
                             d.where.line, d.where.column);
    }
    for (const auto& d : decls) session.declarations.push_back(d.decl);
    session.lines = LineRegistry::build(session.declarations);

    for (const auto& seg : segments) {
        const CuspidalLine* line = session.lines->find(seg.line);
        if (!line) throw ParseError("undeclared line " + seg.line, seg.where.line, seg.where.column);
        session.segments.emplace_back(*line, seg.a, seg.b);
    }
    return session;
}

std::string render_session(const SessionFile& session) {
    std::string out;
    for (const auto& d : session.declarations) {
        out += "line " + d.id + " k=" + std::to_string(d.k) + " l=" + std::to_string(d.l) + " dual=" + d.dual_id +
               " omega=" + d.omega.str() + "\n";
    }
    if (session.d || session.eta) {
        out += "set";
        if (session.d) out += " d=" + std::to_string(*session.d);
        if (session.eta) out += " eta=" + session.eta->str();
        out += "\n";
    }
    if (!session.segments.empty()) out += render(session.segments) + "\n";
    return out;
}

}  // namespace segcalc
