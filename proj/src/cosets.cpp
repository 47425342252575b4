#include "segcalc/cosets.hpp"

#include "segcalc/errors.hpp"

namespace segcalc {

CosetMatrix::CosetMatrix(std::size_t t, std::vector<int> entries) : t_(t), entries_(std::move(entries)) {
    if (entries_.size() != t_ * t_) throw PreconditionError("coset matrix must be square");
    for (std::size_t i = 0; i < t_; ++i)
        for (std::size_t j = 0; j < t_; ++j) {
            if (at(i, j) < 0) throw PreconditionError("coset matrix entries must be non-negative");
            if (at(i, j) != at(j, i)) throw PreconditionError("coset matrix must be symmetric");
        }
}

int CosetMatrix::row_sum(std::size_t i) const {
    int sum = 0;
    for (std::size_t j = 0; j < t_; ++j) sum += at(i, j);
    return sum;
}

std::string CosetMatrix::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < t_; ++i) {
        out += i ? ",[" : "[";
        for (std::size_t j = 0; j < t_; ++j) {
            if (j) out += ",";
            out += std::to_string(at(i, j));
        }
        out += "]";
    }
    return out + "]";
}

namespace {

struct Enumerator {
    std::size_t t;
    bool even_diagonal;
    std::vector<int> remaining;  // unfilled row budget
    std::vector<int> entries;
    std::vector<CosetMatrix> out;

    // Fills upper-triangle cell (i, j), row-major; the mirror is set with it.
    void fill(std::size_t i, std::size_t j) {
        if (j == t) {
            if (remaining[i] != 0) return;
            if (i + 1 == t) {
                out.emplace_back(t, entries);
                return;
            }
            fill(i + 1, i + 1);
            return;
        }
        if (j == t - 1) {
            // Last cell of the row is forced.
            place(i, j, remaining[i]);
            return;
        }
        const int limit = i == j ? remaining[i] : std::min(remaining[i], remaining[j]);
        for (int v = 0; v <= limit; ++v) place(i, j, v);
    }

    void place(std::size_t i, std::size_t j, int v) {
        if (i == j) {
            if (v > remaining[i] || (even_diagonal && v % 2 != 0)) return;
            remaining[i] -= v;
        } else {
            if (v > remaining[i] || v > remaining[j]) return;
            remaining[i] -= v;
            remaining[j] -= v;
        }
        entries[i * t + j] = v;
        entries[j * t + i] = v;
        fill(i, j + 1);
        entries[i * t + j] = 0;
        entries[j * t + i] = 0;
        remaining[i] += v;
        if (i != j) remaining[j] += v;
    }
};

}  // namespace

std::vector<CosetMatrix> enumerate_coset_matrices(std::span<const int> partition, int d) {
    if (partition.empty()) throw PreconditionError("partition must be non-empty");
    if (d < 1) throw PreconditionError("d must be a positive integer");
    for (int n : partition)
        if (n < 1) throw PreconditionError("partition entries must be positive");
    const std::size_t t = partition.size();
    Enumerator e{t, d % 2 != 0, std::vector<int>(partition.begin(), partition.end()),
                 std::vector<int>(t * t, 0), {}};
    e.fill(0, 0);
    return std::move(e.out);
}

bool is_admissible(const CosetMatrix& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        int nonzero = 0;
        for (std::size_t j = 0; j < s.size(); ++j)
            if (s.at(i, j) != 0) ++nonzero;
        if (nonzero != 1) return false;
    }
    return true;
}

Permutation involution_of(const CosetMatrix& s) {
    if (!is_admissible(s)) throw PreconditionError("coset matrix " + s.str() + " is not P-admissible");
    std::vector<int> image(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j)
            if (s.at(i, j) != 0) image[i] = static_cast<int>(j);
    return Permutation(std::move(image));
}

std::optional<SplitData> jacquet_splitting(std::span<const Segment> segments, const CosetMatrix& s) {
    const std::size_t t = s.size();
    if (segments.size() != t) throw PreconditionError("segment count does not match coset matrix size");
    for (std::size_t i = 0; i < t; ++i)
        if (segments[i].group_size() != s.row_sum(i))
            throw PreconditionError("row " + std::to_string(i + 1) + " of " + s.str() +
                                    " does not sum to the group size of " + segments[i].label());
    SplitData split(t);
    for (std::size_t i = 0; i < t; ++i) {
        const Segment& seg = segments[i];
        const int k = seg.line().k();
        int top = seg.b();
        for (std::size_t j = 0; j < t; ++j) {
            const int n = s.at(i, j);
            if (n == 0) continue;
            if (n % k != 0) return std::nullopt;
            const int points = n / k;
            split.at(i, j) = Segment(seg.line(), top - points + 1, top);
            top -= points;
        }
    }
    return split;
}

namespace {

bool cell_dual(const std::optional<Segment>& x, const std::optional<Segment>& y) {
    if (x.has_value() != y.has_value()) return false;
    return !x || *x == dual_segment(*y);
}

}  // namespace

bool mackey_offdiagonal_ok(const SplitData& split) {
    for (std::size_t i = 0; i < split.size(); ++i)
        for (std::size_t j = i + 1; j < split.size(); ++j)
            if (!cell_dual(split.at(i, j), split.at(j, i))) return false;
    return true;
}

std::optional<std::pair<std::size_t, std::size_t>> first_duality_failure(const SplitData& split) {
    for (std::size_t i = 0; i < split.size(); ++i)
        for (std::size_t j = i; j < split.size(); ++j)
            if (!cell_dual(split.at(i, j), split.at(j, i))) return std::pair{i, j};
    return std::nullopt;
}

bool mackey_duality_ok(const SplitData& split) { return !first_duality_failure(split); }

std::optional<Clause> mackey_atoms(const SplitData& split, const Context& ctx) {
    if (!mackey_duality_ok(split)) return std::nullopt;
    Clause clause;
    for (std::size_t i = 0; i < split.size(); ++i) {
        const auto& cell = split.at(i, i);
        if (!cell) continue;
        if (!embeds(cell->group_size(), ctx)) return std::nullopt;
        clause.insert(Atom(*cell));
    }
    return clause;
}

}  // namespace segcalc
