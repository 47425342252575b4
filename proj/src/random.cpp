#include "segcalc/random.hpp"

#include "segcalc/errors.hpp"

#include <algorithm>

namespace segcalc {

Multisegment random_multisegment(std::mt19937_64& rng, std::span<const CuspidalLine* const> lines,
                                 const RandomShape& shape) {
    if (lines.empty()) throw PreconditionError("no cuspidal lines to draw from");
    const int max_length = std::min(shape.max_length, 2 * shape.coord_bound + 1);
    if (max_length < 1 || shape.min_t > shape.max_t) throw PreconditionError("bad random shape");
    std::uniform_int_distribution<std::size_t> count(shape.min_t, shape.max_t);
    std::uniform_int_distribution<std::size_t> pick(0, lines.size() - 1);
    std::uniform_int_distribution<int> length(1, max_length);
    Multisegment out;
    const std::size_t t = count(rng);
    for (std::size_t i = 0; i < t; ++i) {
        const CuspidalLine& line = *lines[pick(rng)];
        const int len = length(rng);
        std::uniform_int_distribution<int> start(-shape.coord_bound, shape.coord_bound - len + 1);
        const int a = start(rng);
        out.emplace_back(line, a, a + len - 1);
    }
    return out;
}

}  // namespace segcalc
