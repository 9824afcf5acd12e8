// bandit-lab: run bandit experiments, aggregate regret curves, and
// self-check the sampler stack.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "banditlab/io.hpp"
#include "banditlab/sim.hpp"
#include "banditlab/validation.hpp"

namespace {

constexpr int kExitConfigError = 2;
constexpr int kExitIoError = 3;

int resolve_workers(int cli_workers) {
    if (cli_workers > 0) {
        return cli_workers;
    }
    if (const char* env = std::getenv("BANDIT_LAB_WORKERS")) {
        const int n = std::atoi(env);
        if (n > 0) {
            return n;
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

int cmd_run(const std::string& config_path, const std::string& out_path, int workers) {
    banditlab::ExperimentConfig config;
    try {
        config = banditlab::load_config(config_path);
    } catch (const banditlab::ConfigInvalid& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoError;
    }

    const auto results = banditlab::run_experiment(config, resolve_workers(workers));
    const auto rows = banditlab::flatten(results);
    try {
        banditlab::write_results_csv(out_path, rows);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoError;
    }

    // One summary line per policy: final mean avg-regret-per-offer +- CI.
    const auto aggregates = banditlab::aggregate(rows, banditlab::Metric::AvgPerOffer);
    std::uint64_t max_step = 0;
    for (const auto& agg : aggregates) {
        max_step = std::max(max_step, agg.step);
    }
    for (const auto& agg : aggregates) {
        if (agg.step != max_step) {
            continue;
        }
        std::cout << agg.policy << ": avg regret/offer at B=" << agg.step << " = "
                  << banditlab::format_number(agg.mean);
        if (agg.ci95) {
            std::cout << " +- " << banditlab::format_number(*agg.ci95);
        }
        std::cout << "\n";
    }
    return 0;
}

int cmd_aggregate(const std::string& in_path, const std::string& metric_name,
                  const std::string& out_path) {
    banditlab::Metric metric;
    if (metric_name == "realized") {
        metric = banditlab::Metric::Realized;
    } else if (metric_name == "pseudo") {
        metric = banditlab::Metric::Pseudo;
    } else if (metric_name == "avg_per_offer") {
        metric = banditlab::Metric::AvgPerOffer;
    } else {
        std::cerr << "config error: --metric must be realized, pseudo, or avg_per_offer\n";
        return kExitConfigError;
    }
    try {
        const auto rows = banditlab::read_results_csv(in_path);
        const auto aggregates = banditlab::aggregate(rows, metric);
        banditlab::write_aggregate_csv(out_path, aggregates);
    } catch (const banditlab::ConfigInvalid& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const banditlab::MixedConfig& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoError;
    }
    return 0;
}

int cmd_validate_samplers(std::uint64_t seed) {
    const auto checks = banditlab::run_sampler_battery({seed});
    bool all_pass = true;
    for (const auto& check : checks) {
        std::printf("%s %-42s observed %-12.6g expected %-12.6g tol %.3g\n",
                    check.pass ? "PASS" : "FAIL", check.name.c_str(), check.observed,
                    check.expected, check.tolerance);
        all_pass = all_pass && check.pass;
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-armed bandit experiment lab"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    int workers = 0;
    auto* run = app.add_subcommand("run", "Run an experiment config, write results CSV");
    run->add_option("--config", config_path, "Experiment config (JSON)")->required();
    run->add_option("--out", out_path, "Output results CSV path")->required();
    run->add_option("--workers", workers, "Worker threads (default: BANDIT_LAB_WORKERS or all cores)");

    std::string in_path;
    std::string metric = "avg_per_offer";
    std::string agg_out;
    auto* agg = app.add_subcommand("aggregate", "Aggregate a results CSV into a plot-ready table");
    agg->add_option("--in", in_path, "Results CSV path")->required();
    agg->add_option("--metric", metric, "realized|pseudo|avg_per_offer");
    agg->add_option("--out", agg_out, "Output aggregate CSV path")->required();

    std::uint64_t seed = 20260823;
    auto* validate = app.add_subcommand("validate-samplers", "Run the sampler statistics battery");
    validate->add_option("--seed", seed, "Master seed");

    CLI11_PARSE(app, argc, argv);

    if (run->parsed()) {
        return cmd_run(config_path, out_path, workers);
    }
    if (agg->parsed()) {
        return cmd_aggregate(in_path, metric, agg_out);
    }
    return cmd_validate_samplers(seed);
}
