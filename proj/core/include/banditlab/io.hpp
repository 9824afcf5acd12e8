#pragma once

// Config parsing (strict JSON) and CSV serialization.
//
// Results CSV schema (frozen):
//   scenario,policy,params,replication,step,reward,realized_regret,
//   pseudo_regret,avg_regret_per_offer
// Aggregate CSV schema (frozen):
//   policy,step,mean,sd,stderr,ci95

#include <string>
#include <vector>

#include "banditlab/sim.hpp"

namespace banditlab {

// Doubles serialized with 9 significant digits.
std::string format_number(double value);

// Strict: unknown keys are fatal. Defaults: epsilon 0.1, replications 50,
// checkpoints 20, mode "fresh".
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::string& path);
std::string serialize_config(const ExperimentConfig& config);

std::string results_csv_header();
std::string to_results_csv(const std::vector<ResultRow>& rows);
void write_results_csv(const std::string& path, const std::vector<ResultRow>& rows);

// Throws ConfigInvalid naming the offending line on malformed input.
std::vector<ResultRow> parse_results_csv(const std::string& text);
std::vector<ResultRow> read_results_csv(const std::string& path);

std::string to_aggregate_csv(const std::vector<AggregateRow>& rows);
void write_aggregate_csv(const std::string& path, const std::vector<AggregateRow>& rows);

}  // namespace banditlab
