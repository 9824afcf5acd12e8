#include "banditlab/sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <thread>
#include <utility>

namespace banditlab {

namespace {

// Reserved policy index for scenario-generation streams; real policy
// indices are small list positions and can never collide with it.
constexpr std::uint64_t kScenarioStreamPolicyIndex = 0xFFFFFFFFull;

ScenarioSpec generate_scenario(const ExperimentConfig& config,
                               std::uint64_t budget,
                               RngStream& stream) {
    switch (config.scenario.kind) {
        case ScenarioKind::Uniform:
            return make_scenario_uniform(config.k, budget, stream);
        case ScenarioKind::Beta:
            return make_scenario_beta(config.k, budget, config.scenario.alpha,
                                      config.scenario.beta, stream);
        case ScenarioKind::Explicit:
            return make_scenario_explicit(
                config.scenario.probs, budget,
                "explicit-k" + std::to_string(config.scenario.probs.size()));
    }
    throw BanditError("unreachable scenario kind");
}

double pick_metric(const ResultRow& row, Metric metric) {
    switch (metric) {
        case Metric::Realized:
            return row.realized_regret;
        case Metric::Pseudo:
            return row.pseudo_regret;
        case Metric::AvgPerOffer:
            return row.avg_regret_per_offer;
    }
    throw BanditError("unreachable metric");
}

}  // namespace

void validate_config(const ExperimentConfig& config) {
    if (config.k < 1) {
        throw ConfigInvalid("k: must be at least 1");
    }
    switch (config.scenario.kind) {
        case ScenarioKind::Uniform:
            break;
        case ScenarioKind::Beta:
            if (!(config.scenario.alpha > 0.0)) {
                throw ConfigInvalid("scenario.alpha: must be positive");
            }
            if (!(config.scenario.beta > 0.0)) {
                throw ConfigInvalid("scenario.beta: must be positive");
            }
            break;
        case ScenarioKind::Explicit:
            if (config.scenario.probs.empty()) {
                throw ConfigInvalid("scenario.probs: must be non-empty");
            }
            if (static_cast<int>(config.scenario.probs.size()) != config.k) {
                throw ConfigInvalid("scenario.probs: length must equal k");
            }
            for (std::size_t i = 0; i < config.scenario.probs.size(); ++i) {
                const double p = config.scenario.probs[i];
                if (!(p >= 0.0 && p <= 1.0)) {
                    throw ConfigInvalid("scenario.probs[" + std::to_string(i) +
                                        "]: must lie in [0,1]");
                }
            }
            break;
    }
    if (config.budgets.empty()) {
        throw ConfigInvalid("budgets: must be non-empty");
    }
    for (std::size_t i = 0; i < config.budgets.size(); ++i) {
        if (config.budgets[i] < 1) {
            throw ConfigInvalid("budgets[" + std::to_string(i) + "]: must be at least 1");
        }
        if (i > 0 && config.budgets[i] <= config.budgets[i - 1]) {
            throw ConfigInvalid("budgets: must be strictly increasing");
        }
    }
    if (config.policies.empty()) {
        throw ConfigInvalid("policies: must be non-empty");
    }
    for (std::size_t i = 0; i < config.policies.size(); ++i) {
        const auto& policy = config.policies[i];
        if (policy.kind == PolicyKind::EpsilonGreedy &&
            !(policy.epsilon >= 0.0 && policy.epsilon <= 1.0)) {
            throw ConfigInvalid("policies[" + std::to_string(i) +
                                "].epsilon: must lie in [0,1]");
        }
    }
    if (config.replications < 1) {
        throw ConfigInvalid("replications: must be at least 1");
    }
    if (config.checkpoints < 1) {
        throw ConfigInvalid("checkpoints: must be at least 1");
    }
}

std::vector<std::uint64_t> checkpoint_schedule(std::uint64_t budget, int count) {
    std::vector<std::uint64_t> steps;
    steps.reserve(static_cast<std::size_t>(count));
    const double lg = std::log10(static_cast<double>(budget));
    for (int i = 1; i <= count; ++i) {
        const double exact = std::pow(10.0, lg * static_cast<double>(i) /
                                                static_cast<double>(count));
        auto step = static_cast<std::uint64_t>(std::llround(exact));
        step = std::clamp<std::uint64_t>(step, 1, budget);
        steps.push_back(step);
    }
    steps.back() = budget;
    std::sort(steps.begin(), steps.end());
    steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
    return steps;
}

RunResult run_once(const ScenarioSpec& scenario,
                   const PolicyConfig& policy,
                   RngStream& stream,
                   const std::vector<std::uint64_t>& checkpoints) {
    const int k = scenario.num_arms();
    PolicyRunner runner(policy, k);
    RegretLedger ledger(scenario.best_prob());

    RunResult result;
    result.scenario_label = scenario.label;
    result.policy_name = policy.name();
    result.policy_params = policy.params();
    result.budget = scenario.budget;
    result.p_star = ledger.p_star();
    result.checkpoints.reserve(checkpoints.size());

    std::size_t next_checkpoint = 0;
    for (std::uint64_t t = 1; t <= scenario.budget; ++t) {
        const int arm = runner.select(stream);
        const RewardDraw draw = draw_reward(scenario, arm, stream);
        runner.observe(arm, draw.value);
        ledger.record(scenario.offers[static_cast<std::size_t>(arm)].payoff_prob,
                      draw.value);
        while (next_checkpoint < checkpoints.size() && checkpoints[next_checkpoint] == t) {
            result.checkpoints.push_back({t, ledger.realized_regret(),
                                          ledger.cumulative_pseudo_regret(),
                                          ledger.average_regret_per_offer(k),
                                          ledger.cumulative_reward()});
            ++next_checkpoint;
        }
    }
    result.final_counters = runner.counters();
    return result;
}

std::vector<RunResult> run_experiment(const ExperimentConfig& config, int workers) {
    validate_config(config);

    // Fixed mode: one scenario for the whole experiment, drawn from a
    // dedicated stream so policy streams are untouched.
    ScenarioSpec fixed_scenario;
    if (config.mode == ScenarioMode::Fixed || config.scenario.kind == ScenarioKind::Explicit) {
        RngStream scenario_stream =
            derive_stream(config.seed, 0, kScenarioStreamPolicyIndex, 0);
        fixed_scenario = generate_scenario(config, config.budgets.front(), scenario_stream);
    }

    struct Cell {
        std::size_t budget_index;
        std::size_t policy_index;
        int replication;
    };
    std::vector<Cell> cells;
    cells.reserve(config.budgets.size() * config.policies.size() *
                  static_cast<std::size_t>(config.replications));
    for (std::size_t b = 0; b < config.budgets.size(); ++b) {
        for (std::size_t p = 0; p < config.policies.size(); ++p) {
            for (int r = 0; r < config.replications; ++r) {
                cells.push_back({b, p, r});
            }
        }
    }

    std::vector<std::vector<std::uint64_t>> schedules;
    schedules.reserve(config.budgets.size());
    for (const auto budget : config.budgets) {
        schedules.push_back(checkpoint_schedule(budget, config.checkpoints));
    }

    std::vector<RunResult> results(cells.size());
    std::atomic<std::size_t> next_cell{0};

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next_cell.fetch_add(1);
            if (i >= cells.size()) {
                return;
            }
            const Cell& cell = cells[i];
            const std::uint64_t budget = config.budgets[cell.budget_index];

            ScenarioSpec scenario;
            if (config.mode == ScenarioMode::Fixed ||
                config.scenario.kind == ScenarioKind::Explicit) {
                scenario = fixed_scenario;
                scenario.budget = budget;
            } else {
                // Fresh scenarios depend on (budget, replication) only, so
                // every policy in a cell row faces the same arms.
                RngStream scenario_stream = derive_stream(
                    config.seed, cell.budget_index, kScenarioStreamPolicyIndex,
                    static_cast<std::uint64_t>(cell.replication));
                scenario = generate_scenario(config, budget, scenario_stream);
            }

            RngStream stream = derive_stream(config.seed, cell.budget_index,
                                             cell.policy_index,
                                             static_cast<std::uint64_t>(cell.replication));
            RunResult result = run_once(scenario, config.policies[cell.policy_index],
                                        stream, schedules[cell.budget_index]);
            result.replication = cell.replication;
            results[i] = std::move(result);
        }
    };

    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back(worker);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    return results;
}

std::vector<ResultRow> flatten(const std::vector<RunResult>& results) {
    std::vector<ResultRow> rows;
    for (const auto& run : results) {
        for (const auto& cp : run.checkpoints) {
            rows.push_back({run.scenario_label, run.policy_name, run.policy_params,
                            run.replication, cp.step, cp.cumulative_reward,
                            cp.realized_regret, cp.pseudo_regret,
                            cp.avg_regret_per_offer});
        }
    }
    return rows;
}

std::string policy_display_name(const std::string& name, const std::string& params) {
    return params.empty() ? name : name + "(" + params + ")";
}

std::vector<AggregateRow> aggregate(const std::vector<ResultRow>& rows, Metric metric) {
    if (rows.empty()) {
        throw MixedConfig("no rows to aggregate");
    }
    const std::string& scenario = rows.front().scenario;
    for (const auto& row : rows) {
        if (row.scenario != scenario) {
            throw MixedConfig("rows mix scenarios '" + scenario + "' and '" +
                              row.scenario + "'");
        }
    }

    std::map<std::pair<std::string, std::uint64_t>, std::vector<double>> groups;
    for (const auto& row : rows) {
        groups[{policy_display_name(row.policy, row.params), row.step}].push_back(
            pick_metric(row, metric));
    }

    std::vector<AggregateRow> out;
    out.reserve(groups.size());
    for (const auto& [key, values] : groups) {
        AggregateRow agg;
        agg.policy = key.first;
        agg.step = key.second;
        agg.n = static_cast<int>(values.size());
        double sum = 0.0;
        for (const double v : values) {
            sum += v;
        }
        agg.mean = sum / static_cast<double>(values.size());
        if (values.size() > 1) {
            double ss = 0.0;
            for (const double v : values) {
                ss += (v - agg.mean) * (v - agg.mean);
            }
            const double sd = std::sqrt(ss / static_cast<double>(values.size() - 1));
            agg.sd = sd;
            agg.stderr_ = sd / std::sqrt(static_cast<double>(values.size()));
            agg.ci95 = 1.96 * *agg.stderr_;
        }
        out.push_back(std::move(agg));
    }
    return out;
}

}  // namespace banditlab
