#pragma once

// Sign bookkeeping for ε(π)ε(π⊗η) = (-1)^n η(-1)^{nd/2} given a witness
// involution: pairs {i, σ(i)} contribute ω_i(-1)²·η(-1)^{n_i d}, fixed points
// contribute (-1)^{n_i}·η(-1)^{n_i d/2}.

#include "segcalc/permutation.hpp"
#include "segcalc/segments.hpp"
#include "segcalc/sign.hpp"

#include <cstdint>
#include <vector>

namespace segcalc {

struct SignConfig {
    Context ctx;
    Permutation sigma;
    std::vector<int> sizes;
    std::vector<Sign> omega;

    /// Throws PreconditionError on any violated invariant: σ² = id,
    /// n_{σ(i)} = n_i, ω_{σ(i)} = ω_i, n_i·d even at fixed points, n·d even.
    void validate() const;

    std::int64_t total_size() const;
};

Sign paired_contribution(std::size_t i, const SignConfig& cfg);
Sign fixed_contribution(std::size_t i, const SignConfig& cfg);

/// Product over unordered pairs and fixed points.
Sign total_sign(const SignConfig& cfg);

/// (-1)^n · η(-1)^{nd/2}. Throws PreconditionError when n·d is odd.
Sign predicted_sign(std::int64_t n, const Context& ctx);

bool verify_sign_identity(const SignConfig& cfg);

/// Raw exponents of -1 and of η(-1) accumulated by total_sign.
struct SignExponents {
    std::int64_t minus_one = 0;
    std::int64_t eta = 0;
};

SignExponents accumulated_exponents(const SignConfig& cfg);

}  // namespace segcalc
