#pragma once

// Deterministic hierarchical random streams.
//
// Stream derivation (frozen; see docs/randomness.md for the bit-exact spec):
//   h = seed
//   h = splitmix64(h ^ (0x9E3779B97F4A7C15 * (scenario_index   + 1)))
//   h = splitmix64(h ^ (0xBF58476D1CE4E5B9 * (policy_index      + 1)))
//   h = splitmix64(h ^ (0x94D049BB133111EB * (replication_index + 1)))
// The four 64-bit words of xoshiro256** state are then the next four
// outputs of the splitmix64 sequence continued from h.
//
// next_uniform maps a 64-bit output to [0,1) as (x >> 11) * 2^-53.

#include <array>
#include <cstdint>

#include "banditlab/errors.hpp"

namespace banditlab {

struct MasterSeed {
    std::uint64_t value = 0;
};

// splitmix64 step: advances *state and returns the mixed output.
std::uint64_t splitmix64_next(std::uint64_t& state);

class RngStream {
public:
    RngStream() = default;

    // Seeds xoshiro256** state from a splitmix64 sequence starting at h.
    explicit RngStream(std::uint64_t h);

    std::uint64_t next_u64();

    // Uniform on [0,1), 53-bit resolution. Consumes one variate.
    double next_uniform();

    // Returns 1 iff next_uniform() < p. Consumes exactly one variate.
    int next_bernoulli(double p);

    // Gamma(shape, 1) via Marsaglia-Tsang; shape < 1 handled by the
    // boost transform Gamma(a) = Gamma(a+1) * U^(1/a). Consumes a
    // variable but stream-deterministic number of uniforms.
    double next_gamma(double shape);

    // Beta(alpha, beta) as X/(X+Y), X ~ Gamma(alpha,1) drawn first, then
    // Y ~ Gamma(beta,1). Result clamped to [2^-53, 1 - 2^-53].
    double next_beta(double alpha, double beta);

    // Count of 64-bit variates consumed so far.
    std::uint64_t position() const { return position_; }

private:
    // Standard normal via Box-Muller; consumes exactly two uniforms.
    double next_normal();

    std::array<std::uint64_t, 4> state_{1, 2, 3, 4};
    std::uint64_t position_ = 0;
};

RngStream derive_stream(MasterSeed seed,
                        std::uint64_t scenario_index,
                        std::uint64_t policy_index,
                        std::uint64_t replication_index);

}  // namespace banditlab
