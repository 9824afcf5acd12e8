#pragma once

// Experiment harness: runs a policy against a scenario for B impressions,
// keeps the regret ledger, replicates runs across budgets and policies,
// and aggregates regret curves.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "banditlab/bandit.hpp"
#include "banditlab/policies.hpp"
#include "banditlab/rng.hpp"

namespace banditlab {

class RegretLedger {
public:
    explicit RegretLedger(double p_star) : p_star_(p_star) {}

    void record(double chosen_mean, int reward) {
        trials_ += 1;
        cumulative_reward_ += static_cast<std::uint64_t>(reward);
        cumulative_pseudo_regret_ += p_star_ - chosen_mean;
    }

    std::uint64_t trials() const { return trials_; }
    double p_star() const { return p_star_; }
    std::uint64_t cumulative_reward() const { return cumulative_reward_; }
    double cumulative_pseudo_regret() const { return cumulative_pseudo_regret_; }

    // rho = n * p_star - sum of collected rewards; negative on lucky runs.
    double realized_regret() const {
        return static_cast<double>(trials_) * p_star_ -
               static_cast<double>(cumulative_reward_);
    }

    double average_regret_per_offer(int k) const {
        return realized_regret() / static_cast<double>(k);
    }

private:
    std::uint64_t trials_ = 0;
    double p_star_ = 0.0;
    std::uint64_t cumulative_reward_ = 0;
    double cumulative_pseudo_regret_ = 0.0;
};

struct Checkpoint {
    std::uint64_t step = 0;
    double realized_regret = 0.0;
    double pseudo_regret = 0.0;
    double avg_regret_per_offer = 0.0;
    std::uint64_t cumulative_reward = 0;
};

struct RunResult {
    std::string scenario_label;
    std::string policy_name;
    std::string policy_params;
    std::uint64_t budget = 0;
    int replication = 0;
    double p_star = 0.0;
    std::vector<Checkpoint> checkpoints;
    std::vector<ArmCounters> final_counters;
};

enum class ScenarioKind { Uniform, Beta, Explicit };
enum class ScenarioMode { Fresh, Fixed };

struct ScenarioGenSpec {
    ScenarioKind kind = ScenarioKind::Uniform;
    double alpha = 1.0;  // Beta only
    double beta = 1.0;   // Beta only
    std::vector<double> probs;  // Explicit only
};

struct ExperimentConfig {
    MasterSeed seed;
    ScenarioGenSpec scenario;
    int k = 20;
    std::vector<std::uint64_t> budgets;
    std::vector<PolicyConfig> policies;
    int replications = 50;
    int checkpoints = 20;
    ScenarioMode mode = ScenarioMode::Fresh;
};

// Throws ConfigInvalid naming the offending field.
void validate_config(const ExperimentConfig& config);

// count log-spaced unique steps in [1, budget], last one exactly budget.
// Step i (1-based) is round(10^(log10(budget) * i / count)).
std::vector<std::uint64_t> checkpoint_schedule(std::uint64_t budget, int count);

RunResult run_once(const ScenarioSpec& scenario,
                   const PolicyConfig& policy,
                   RngStream& stream,
                   const std::vector<std::uint64_t>& checkpoints);

// Runs every (budget, policy, replication) cell on its own derived stream.
// Output order is canonical (budget, policy, replication) regardless of
// worker count.
std::vector<RunResult> run_experiment(const ExperimentConfig& config, int workers = 1);

// Flat per-checkpoint record, the unit of CSV serialization and aggregation.
struct ResultRow {
    std::string scenario;
    std::string policy;
    std::string params;
    int replication = 0;
    std::uint64_t step = 0;
    std::uint64_t reward = 0;
    double realized_regret = 0.0;
    double pseudo_regret = 0.0;
    double avg_regret_per_offer = 0.0;
};

std::vector<ResultRow> flatten(const std::vector<RunResult>& results);

enum class Metric { Realized, Pseudo, AvgPerOffer };

struct AggregateRow {
    std::string policy;  // display name, params folded in
    std::uint64_t step = 0;
    int n = 0;
    double mean = 0.0;
    std::optional<double> sd;      // absent when n == 1
    std::optional<double> stderr_;
    std::optional<double> ci95;    // normal-approximation half-width
};

// Groups rows by (policy, step); throws MixedConfig when scenarios differ.
std::vector<AggregateRow> aggregate(const std::vector<ResultRow>& rows, Metric metric);

std::string policy_display_name(const std::string& name, const std::string& params);

}  // namespace banditlab
