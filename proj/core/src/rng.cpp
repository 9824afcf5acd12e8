#include "banditlab/rng.hpp"

#include <cmath>

namespace banditlab {

namespace {

constexpr std::uint64_t kGamma64 = 0x9E3779B97F4A7C15ull;
constexpr std::uint64_t kMix1 = 0xBF58476D1CE4E5B9ull;
constexpr std::uint64_t kMix2 = 0x94D049BB133111EBull;

constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kUlpHalf = 1.0 / 9007199254740992.0;  // 2^-53

}  // namespace

std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += kGamma64);
    z = (z ^ (z >> 30)) * kMix1;
    z = (z ^ (z >> 27)) * kMix2;
    return z ^ (z >> 31);
}

RngStream::RngStream(std::uint64_t h) {
    for (auto& word : state_) {
        word = splitmix64_next(h);
    }
}

std::uint64_t RngStream::next_u64() {
    // xoshiro256**
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    ++position_;
    return result;
}

double RngStream::next_uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

int RngStream::next_bernoulli(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw OutOfRangeProbability("bernoulli p must lie in [0,1]");
    }
    return next_uniform() < p ? 1 : 0;
}

double RngStream::next_normal() {
    double u1 = next_uniform();
    const double u2 = next_uniform();
    if (u1 <= 0.0) {
        u1 = kUlpHalf;
    }
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

double RngStream::next_gamma(double shape) {
    if (!(shape > 0.0)) {
        throw InvalidShapeParameter("gamma shape must be positive");
    }
    if (shape < 1.0) {
        const double g = next_gamma(shape + 1.0);
        double u = next_uniform();
        if (u <= 0.0) {
            u = kUlpHalf;
        }
        return g * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x;
        double v;
        do {
            x = next_normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        double u = next_uniform();
        if (u <= 0.0) {
            u = kUlpHalf;
        }
        if (u < 1.0 - 0.0331 * (x * x) * (x * x)) {
            return d * v;
        }
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) {
            return d * v;
        }
    }
}

double RngStream::next_beta(double alpha, double beta) {
    if (!(alpha > 0.0) || !(beta > 0.0)) {
        throw InvalidShapeParameter("beta shape parameters must be positive");
    }
    const double x = next_gamma(alpha);
    const double y = next_gamma(beta);
    double r = x / (x + y);
    if (r < kUlpHalf) {
        r = kUlpHalf;
    }
    if (r > 1.0 - kUlpHalf) {
        r = 1.0 - kUlpHalf;
    }
    return r;
}

RngStream derive_stream(MasterSeed seed,
                        std::uint64_t scenario_index,
                        std::uint64_t policy_index,
                        std::uint64_t replication_index) {
    std::uint64_t h = seed.value;
    h = h ^ (kGamma64 * (scenario_index + 1));
    {
        std::uint64_t s = h;
        h = splitmix64_next(s);
    }
    h = h ^ (kMix1 * (policy_index + 1));
    {
        std::uint64_t s = h;
        h = splitmix64_next(s);
    }
    h = h ^ (kMix2 * (replication_index + 1));
    {
        std::uint64_t s = h;
        h = splitmix64_next(s);
    }
    return RngStream(h);
}

}  // namespace banditlab
