#include "banditlab/policies.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace banditlab {

namespace {

void check_arm(std::size_t k, int arm_id) {
    if (arm_id < 0 || static_cast<std::size_t>(arm_id) >= k) {
        throw UnknownArm("arm index out of range");
    }
}

void check_reward(int reward) {
    if (reward != 0 && reward != 1) {
        throw InvalidReward("reward must be 0 or 1");
    }
}

void bump(ArmCounters& c, int reward) {
    c.plays += 1;
    c.payout += static_cast<std::uint64_t>(reward);
}

}  // namespace

EpsilonGreedyState make_epsilon_greedy(int k, double epsilon) {
    if (k < 1) {
        throw EmptyScenario("policy needs at least one arm");
    }
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
        throw OutOfRangeProbability("epsilon must lie in [0,1]");
    }
    return {epsilon, std::vector<ArmCounters>(static_cast<std::size_t>(k))};
}

Ucb1State make_ucb1(int k) {
    if (k < 1) {
        throw EmptyScenario("policy needs at least one arm");
    }
    return {std::vector<ArmCounters>(static_cast<std::size_t>(k)), 0};
}

ThompsonState make_thompson(int k) {
    if (k < 1) {
        throw EmptyScenario("policy needs at least one arm");
    }
    return {std::vector<ArmCounters>(static_cast<std::size_t>(k))};
}

int select_epsilon_greedy(const EpsilonGreedyState& state, RngStream& stream) {
    const std::size_t k = state.counters.size();
    // The coin is always flipped, even at epsilon 0 or 1, so stream
    // consumption does not depend on epsilon.
    const double coin = stream.next_uniform();
    if (coin < state.epsilon) {
        const auto pick = static_cast<std::size_t>(stream.next_uniform() * static_cast<double>(k));
        return static_cast<int>(pick < k ? pick : k - 1);
    }
    int best = 0;
    double best_score = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < k; ++j) {
        const double score = state.counters[j].plays == 0
                                 ? std::numeric_limits<double>::infinity()
                                 : state.counters[j].mean();
        if (score > best_score) {
            best_score = score;
            best = static_cast<int>(j);
        }
    }
    return best;
}

int select_ucb1(const Ucb1State& state) {
    const std::size_t k = state.counters.size();
    for (std::size_t j = 0; j < k; ++j) {
        if (state.counters[j].plays == 0) {
            return static_cast<int>(j);
        }
    }
    int best = 0;
    double best_index = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < k; ++j) {
        const double index = ucb1_index(state.counters[j], state.total_plays);
        if (index > best_index) {
            best_index = index;
            best = static_cast<int>(j);
        }
    }
    return best;
}

int select_thompson(const ThompsonState& state, RngStream& stream) {
    const std::size_t k = state.counters.size();
    int best = 0;
    double best_sample = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < k; ++j) {
        const auto posterior = BetaPosterior::from_counters(state.counters[j]);
        const double sample = stream.next_beta(posterior.alpha, posterior.beta);
        if (sample > best_sample) {
            best_sample = sample;
            best = static_cast<int>(j);
        }
    }
    return best;
}

double ucb1_index(const ArmCounters& counters, std::uint64_t total_plays) {
    if (counters.plays == 0) {
        throw UnplayedArm("ucb1 index undefined for an unplayed arm");
    }
    const double n = static_cast<double>(total_plays);
    const double n_j = static_cast<double>(counters.plays);
    return counters.mean() + std::sqrt(2.0 * std::log(n) / n_j);
}

void update(EpsilonGreedyState& state, int arm_id, int reward) {
    check_arm(state.counters.size(), arm_id);
    check_reward(reward);
    bump(state.counters[static_cast<std::size_t>(arm_id)], reward);
}

void update(Ucb1State& state, int arm_id, int reward) {
    check_arm(state.counters.size(), arm_id);
    check_reward(reward);
    bump(state.counters[static_cast<std::size_t>(arm_id)], reward);
    state.total_plays += 1;
}

void update(ThompsonState& state, int arm_id, int reward) {
    check_arm(state.counters.size(), arm_id);
    check_reward(reward);
    bump(state.counters[static_cast<std::size_t>(arm_id)], reward);
}

std::string PolicyConfig::name() const {
    switch (kind) {
        case PolicyKind::EpsilonGreedy:
            return "epsilon_greedy";
        case PolicyKind::Ucb1:
            return "ucb1";
        case PolicyKind::Thompson:
            return "thompson";
    }
    return "unknown";
}

std::string PolicyConfig::params() const {
    if (kind != PolicyKind::EpsilonGreedy) {
        return "";
    }
    std::ostringstream out;
    out << "epsilon=" << epsilon;
    return out.str();
}

PolicyRunner::PolicyRunner(const PolicyConfig& config, int k) : kind_(config.kind) {
    switch (kind_) {
        case PolicyKind::EpsilonGreedy:
            eps_ = make_epsilon_greedy(k, config.epsilon);
            break;
        case PolicyKind::Ucb1:
            ucb_ = make_ucb1(k);
            break;
        case PolicyKind::Thompson:
            thompson_ = make_thompson(k);
            break;
    }
}

int PolicyRunner::select(RngStream& stream) {
    switch (kind_) {
        case PolicyKind::EpsilonGreedy:
            return select_epsilon_greedy(eps_, stream);
        case PolicyKind::Ucb1:
            return select_ucb1(ucb_);
        case PolicyKind::Thompson:
            return select_thompson(thompson_, stream);
    }
    throw BanditError("unreachable policy kind");
}

void PolicyRunner::observe(int arm_id, int reward) {
    switch (kind_) {
        case PolicyKind::EpsilonGreedy:
            update(eps_, arm_id, reward);
            return;
        case PolicyKind::Ucb1:
            update(ucb_, arm_id, reward);
            return;
        case PolicyKind::Thompson:
            update(thompson_, arm_id, reward);
            return;
    }
}

const std::vector<ArmCounters>& PolicyRunner::counters() const {
    switch (kind_) {
        case PolicyKind::EpsilonGreedy:
            return eps_.counters;
        case PolicyKind::Ucb1:
            return ucb_.counters;
        case PolicyKind::Thompson:
            return thompson_.counters;
    }
    throw BanditError("unreachable policy kind");
}

}  // namespace banditlab
