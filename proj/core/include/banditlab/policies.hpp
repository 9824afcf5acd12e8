#pragma once

// The three selection policies: epsilon-greedy, UCB1, Thompson sampling.
//
// Stream consumption is fixed so runs are bit-reproducible:
//   - epsilon-greedy always burns one uniform for the epsilon coin, plus
//     one more only on the explore branch;
//   - UCB1 consumes no randomness;
//   - Thompson draws exactly k Beta variates per step, in arm-index order.
// Ties break toward the lowest arm index everywhere.

#include <cstdint>
#include <string>
#include <vector>

#include "banditlab/errors.hpp"
#include "banditlab/rng.hpp"

namespace banditlab {

struct ArmCounters {
    std::uint64_t plays = 0;
    std::uint64_t payout = 0;  // total clicks (dollars)

    double mean() const { return static_cast<double>(payout) / static_cast<double>(plays); }
};

struct EpsilonGreedyState {
    double epsilon = 0.1;
    std::vector<ArmCounters> counters;
};

struct Ucb1State {
    std::vector<ArmCounters> counters;
    std::uint64_t total_plays = 0;
};

// Beta(1 + payout, 1 + plays - payout) posterior of a Bernoulli arm.
struct BetaPosterior {
    double alpha = 1.0;
    double beta = 1.0;

    static BetaPosterior from_counters(const ArmCounters& c) {
        return {1.0 + static_cast<double>(c.payout),
                1.0 + static_cast<double>(c.plays - c.payout)};
    }

    double mean() const { return alpha / (alpha + beta); }
};

struct ThompsonState {
    std::vector<ArmCounters> counters;
};

EpsilonGreedyState make_epsilon_greedy(int k, double epsilon);
Ucb1State make_ucb1(int k);
ThompsonState make_thompson(int k);

int select_epsilon_greedy(const EpsilonGreedyState& state, RngStream& stream);
int select_ucb1(const Ucb1State& state);
int select_thompson(const ThompsonState& state, RngStream& stream);

// x_bar_j + sqrt(2 ln(n) / n_j), natural log.
double ucb1_index(const ArmCounters& counters, std::uint64_t total_plays);

void update(EpsilonGreedyState& state, int arm_id, int reward);
void update(Ucb1State& state, int arm_id, int reward);
void update(ThompsonState& state, int arm_id, int reward);

// Policy selection for the sim engine.
enum class PolicyKind { EpsilonGreedy, Ucb1, Thompson };

struct PolicyConfig {
    PolicyKind kind = PolicyKind::EpsilonGreedy;
    double epsilon = 0.1;  // epsilon-greedy only

    std::string name() const;
    std::string params() const;  // e.g. "epsilon=0.1", empty otherwise
};

// Owns one policy state for the lifetime of a run.
class PolicyRunner {
public:
    PolicyRunner(const PolicyConfig& config, int k);

    int select(RngStream& stream);
    void observe(int arm_id, int reward);

    const std::vector<ArmCounters>& counters() const;

private:
    PolicyKind kind_;
    EpsilonGreedyState eps_;
    Ucb1State ucb_;
    ThompsonState thompson_;
};

}  // namespace banditlab
