#pragma once

// Offers, scenarios, and the Bernoulli reward environment.

#include <cstdint>
#include <string>
#include <vector>

#include "banditlab/errors.hpp"
#include "banditlab/rng.hpp"

namespace banditlab {

struct OfferSpec {
    int id = 0;
    double payoff_prob = 0.0;  // Bernoulli success probability, $1 per click
};

struct ScenarioSpec {
    std::vector<OfferSpec> offers;
    std::uint64_t budget = 1;  // impression count B
    std::string label;

    int num_arms() const { return static_cast<int>(offers.size()); }

    double best_prob() const;
};

struct RewardDraw {
    int arm_id = 0;
    int value = 0;  // {0, 1}
};

ScenarioSpec make_scenario_explicit(const std::vector<double>& probs,
                                    std::uint64_t budget,
                                    std::string label);

// k payoff probabilities drawn i.i.d. Uniform(0,1) from the stream.
ScenarioSpec make_scenario_uniform(int k, std::uint64_t budget, RngStream& stream);

// k payoff probabilities drawn i.i.d. Beta(alpha, beta) from the stream.
ScenarioSpec make_scenario_beta(int k, std::uint64_t budget,
                                double alpha, double beta, RngStream& stream);

// One Bernoulli pull of the given arm; consumes exactly one uniform.
RewardDraw draw_reward(const ScenarioSpec& scenario, int arm_id, RngStream& stream);

}  // namespace banditlab
