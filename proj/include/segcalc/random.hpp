#pragma once

#include "segcalc/segments.hpp"

#include <random>
#include <span>

namespace segcalc {

struct RandomShape {
    std::size_t min_t = 1;
    std::size_t max_t = 4;
    int max_length = 4;
    /// Endpoints lie in [-coord_bound, coord_bound].
    int coord_bound = 4;
};

/// Uniform segment choices over the given lines; not reordered.
Multisegment random_multisegment(std::mt19937_64& rng, std::span<const CuspidalLine* const> lines,
                                 const RandomShape& shape);

}  // namespace segcalc
