#include "segcalc/epsilon.hpp"

#include "segcalc/errors.hpp"

#include <numeric>

namespace segcalc {

void SignConfig::validate() const {
    ctx.validate();
    const std::size_t t = sigma.size();
    if (sizes.size() != t || omega.size() != t)
        throw PreconditionError("sigma, sizes and omega must have the same length");
    if (!sigma.is_involution()) throw PreconditionError("sigma " + sigma.cycles() + " is not an involution");
    for (std::size_t i = 0; i < t; ++i) {
        if (sizes[i] < 1) throw PreconditionError("group sizes must be positive");
        const auto j = static_cast<std::size_t>(sigma(i));
        if (sizes[j] != sizes[i])
            throw PreconditionError("n_" + std::to_string(i + 1) + " != n_" + std::to_string(j + 1));
        if (omega[j] != omega[i])
            throw PreconditionError("omega_" + std::to_string(i + 1) + " != omega_" + std::to_string(j + 1));
        if (j == i && !embeds(sizes[i], ctx))
            throw PreconditionError("E does not embed: n_" + std::to_string(i + 1) + "·d odd");
    }
    if (!embeds(total_size(), ctx)) throw PreconditionError("E does not embed: n·d odd");
}

std::int64_t SignConfig::total_size() const {
    return std::accumulate(sizes.begin(), sizes.end(), std::int64_t{0});
}

Sign paired_contribution(std::size_t i, const SignConfig& cfg) {
    if (cfg.sigma.is_fixed(i)) throw PreconditionError("paired_contribution needs sigma(i) != i");
    const Sign omega = cfg.omega[i];
    // ε(Δ_i)ε(Δ_σ(i)) = ω_i(-1); with η twist: ω_i(-1)·η(-1)^{n_i d}.
    return omega * (omega * cfg.ctx.eta_sign.pow(std::int64_t{cfg.sizes[i]} * cfg.ctx.d));
}

Sign fixed_contribution(std::size_t i, const SignConfig& cfg) {
    if (!cfg.sigma.is_fixed(i)) throw PreconditionError("fixed_contribution needs sigma(i) = i");
    const std::int64_t nd = std::int64_t{cfg.sizes[i]} * cfg.ctx.d;
    if (nd % 2 != 0) throw PreconditionError("E does not embed: n_i·d odd");
    return Sign::parity(cfg.sizes[i]) * cfg.ctx.eta_sign.pow(nd / 2);
}

Sign total_sign(const SignConfig& cfg) {
    cfg.validate();
    Sign total;
    for (std::size_t i = 0; i < cfg.sigma.size(); ++i) {
        const auto j = static_cast<std::size_t>(cfg.sigma(i));
        if (j == i) {
            total *= fixed_contribution(i, cfg);
        } else if (j < i) {
            total *= paired_contribution(i, cfg);
        }
    }
    return total;
}

Sign predicted_sign(std::int64_t n, const Context& ctx) {
    ctx.validate();
    const std::int64_t nd = n * ctx.d;
    if (nd % 2 != 0) throw PreconditionError("E does not embed: n·d odd");
    return Sign::parity(n) * ctx.eta_sign.pow(nd / 2);
}

bool verify_sign_identity(const SignConfig& cfg) {
    return total_sign(cfg) == predicted_sign(cfg.total_size(), cfg.ctx);
}

SignExponents accumulated_exponents(const SignConfig& cfg) {
    cfg.validate();
    SignExponents e;
    for (std::size_t i = 0; i < cfg.sigma.size(); ++i) {
        const auto j = static_cast<std::size_t>(cfg.sigma(i));
        const std::int64_t nd = std::int64_t{cfg.sizes[i]} * cfg.ctx.d;
        if (j == i) {
            e.minus_one += cfg.sizes[i];
            e.eta += nd / 2;
        } else if (j < i) {
            e.eta += nd;
        }
    }
    return e;
}

}  // namespace segcalc
