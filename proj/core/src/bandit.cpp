#include "banditlab/bandit.hpp"

#include <algorithm>
#include <utility>

namespace banditlab {

double ScenarioSpec::best_prob() const {
    double best = 0.0;
    for (const auto& offer : offers) {
        best = std::max(best, offer.payoff_prob);
    }
    return best;
}

ScenarioSpec make_scenario_explicit(const std::vector<double>& probs,
                                    std::uint64_t budget,
                                    std::string label) {
    if (probs.empty()) {
        throw EmptyScenario("scenario needs at least one offer");
    }
    if (budget < 1) {
        throw InvalidBudget("budget must be at least 1");
    }
    ScenarioSpec scenario;
    scenario.offers.reserve(probs.size());
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (!(probs[i] >= 0.0 && probs[i] <= 1.0)) {
            throw OutOfRangeProbability("payoff probability outside [0,1]");
        }
        scenario.offers.push_back({static_cast<int>(i), probs[i]});
    }
    scenario.budget = budget;
    scenario.label = std::move(label);
    return scenario;
}

ScenarioSpec make_scenario_uniform(int k, std::uint64_t budget, RngStream& stream) {
    if (k < 1) {
        throw EmptyScenario("scenario needs at least one offer");
    }
    std::vector<double> probs(static_cast<std::size_t>(k));
    for (auto& p : probs) {
        p = stream.next_uniform();
    }
    return make_scenario_explicit(probs, budget, "uniform-k" + std::to_string(k));
}

ScenarioSpec make_scenario_beta(int k, std::uint64_t budget,
                                double alpha, double beta, RngStream& stream) {
    if (k < 1) {
        throw EmptyScenario("scenario needs at least one offer");
    }
    if (!(alpha > 0.0) || !(beta > 0.0)) {
        throw InvalidShapeParameter("beta shape parameters must be positive");
    }
    std::vector<double> probs(static_cast<std::size_t>(k));
    for (auto& p : probs) {
        p = stream.next_beta(alpha, beta);
    }
    return make_scenario_explicit(probs, budget, "beta-k" + std::to_string(k));
}

RewardDraw draw_reward(const ScenarioSpec& scenario, int arm_id, RngStream& stream) {
    if (arm_id < 0 || arm_id >= scenario.num_arms()) {
        throw UnknownArm("arm index out of range");
    }
    const double p = scenario.offers[static_cast<std::size_t>(arm_id)].payoff_prob;
    return {arm_id, stream.next_bernoulli(p)};
}

}  // namespace banditlab
