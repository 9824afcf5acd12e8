#include "banditlab/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace banditlab {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::vector<std::string>& known,
                         const std::string& path) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        bool ok = false;
        for (const auto& k : known) {
            if (key == k) {
                ok = true;
                break;
            }
        }
        if (!ok) {
            throw ConfigInvalid(path + key + ": unknown key");
        }
    }
}

PolicyConfig parse_policy(const json& obj, std::size_t index) {
    const std::string path = "policies[" + std::to_string(index) + "].";
    if (!obj.is_object()) {
        throw ConfigInvalid("policies[" + std::to_string(index) + "]: must be an object");
    }
    reject_unknown_keys(obj, {"name", "epsilon"}, path);
    if (!obj.contains("name")) {
        throw ConfigInvalid(path + "name: required");
    }
    const std::string name = obj.at("name").get<std::string>();
    PolicyConfig policy;
    if (name == "epsilon_greedy") {
        policy.kind = PolicyKind::EpsilonGreedy;
        policy.epsilon = obj.value("epsilon", 0.1);
        if (!(policy.epsilon >= 0.0 && policy.epsilon <= 1.0)) {
            throw ConfigInvalid(path + "epsilon: must lie in [0,1]");
        }
    } else if (name == "ucb1") {
        policy.kind = PolicyKind::Ucb1;
        if (obj.contains("epsilon")) {
            throw ConfigInvalid(path + "epsilon: only valid for epsilon_greedy");
        }
    } else if (name == "thompson") {
        policy.kind = PolicyKind::Thompson;
        if (obj.contains("epsilon")) {
            throw ConfigInvalid(path + "epsilon: only valid for epsilon_greedy");
        }
    } else {
        throw ConfigInvalid(path + "name: unknown policy '" + name + "'");
    }
    return policy;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw BanditError("cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw BanditError("cannot open " + path + " for writing");
    }
    out << text;
    if (!out) {
        throw BanditError("write failed: " + path);
    }
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) {
        fields.push_back(field);
    }
    if (!line.empty() && line.back() == ',') {
        fields.emplace_back();
    }
    return fields;
}

}  // namespace

std::string format_number(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.9g", value);
    return buffer;
}

ExperimentConfig parse_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigInvalid(std::string("config: not valid JSON: ") + e.what());
    }
    if (!root.is_object()) {
        throw ConfigInvalid("config: top level must be an object");
    }
    reject_unknown_keys(root,
                        {"seed", "k", "scenario", "mode", "budgets", "policies",
                         "replications", "checkpoints"},
                        "");

    ExperimentConfig config;
    if (!root.contains("seed")) {
        throw ConfigInvalid("seed: required");
    }
    config.seed.value = root.at("seed").get<std::uint64_t>();

    if (!root.contains("scenario")) {
        throw ConfigInvalid("scenario: required");
    }
    const json& scenario = root.at("scenario");
    if (!scenario.is_object()) {
        throw ConfigInvalid("scenario: must be an object");
    }
    reject_unknown_keys(scenario, {"kind", "alpha", "beta", "probs"}, "scenario.");
    if (!scenario.contains("kind")) {
        throw ConfigInvalid("scenario.kind: required");
    }
    const std::string kind = scenario.at("kind").get<std::string>();
    if (kind == "uniform") {
        config.scenario.kind = ScenarioKind::Uniform;
        if (scenario.contains("alpha") || scenario.contains("beta") ||
            scenario.contains("probs")) {
            throw ConfigInvalid("scenario: uniform takes no extra parameters");
        }
    } else if (kind == "beta") {
        config.scenario.kind = ScenarioKind::Beta;
        if (!scenario.contains("alpha") || !scenario.contains("beta")) {
            throw ConfigInvalid("scenario.alpha/beta: required for kind 'beta'");
        }
        config.scenario.alpha = scenario.at("alpha").get<double>();
        config.scenario.beta = scenario.at("beta").get<double>();
        if (scenario.contains("probs")) {
            throw ConfigInvalid("scenario.probs: only valid for kind 'explicit'");
        }
    } else if (kind == "explicit") {
        config.scenario.kind = ScenarioKind::Explicit;
        if (!scenario.contains("probs")) {
            throw ConfigInvalid("scenario.probs: required for kind 'explicit'");
        }
        config.scenario.probs = scenario.at("probs").get<std::vector<double>>();
        if (scenario.contains("alpha") || scenario.contains("beta")) {
            throw ConfigInvalid("scenario.alpha/beta: only valid for kind 'beta'");
        }
    } else {
        throw ConfigInvalid("scenario.kind: unknown kind '" + kind + "'");
    }

    if (root.contains("k")) {
        config.k = root.at("k").get<int>();
    } else if (config.scenario.kind == ScenarioKind::Explicit) {
        config.k = static_cast<int>(config.scenario.probs.size());
    } else {
        throw ConfigInvalid("k: required");
    }

    if (!root.contains("budgets")) {
        throw ConfigInvalid("budgets: required");
    }
    config.budgets = root.at("budgets").get<std::vector<std::uint64_t>>();

    if (!root.contains("policies")) {
        throw ConfigInvalid("policies: required");
    }
    const json& policies = root.at("policies");
    if (!policies.is_array()) {
        throw ConfigInvalid("policies: must be an array");
    }
    for (std::size_t i = 0; i < policies.size(); ++i) {
        config.policies.push_back(parse_policy(policies[i], i));
    }

    config.replications = root.value("replications", 50);
    config.checkpoints = root.value("checkpoints", 20);

    const std::string mode = root.value("mode", "fresh");
    if (mode == "fresh") {
        config.mode = ScenarioMode::Fresh;
    } else if (mode == "fixed") {
        config.mode = ScenarioMode::Fixed;
    } else {
        throw ConfigInvalid("mode: must be 'fresh' or 'fixed'");
    }

    validate_config(config);
    return config;
}

ExperimentConfig load_config(const std::string& path) {
    return parse_config(read_file(path));
}

std::string serialize_config(const ExperimentConfig& config) {
    json root;
    root["seed"] = config.seed.value;
    root["k"] = config.k;
    json scenario;
    switch (config.scenario.kind) {
        case ScenarioKind::Uniform:
            scenario["kind"] = "uniform";
            break;
        case ScenarioKind::Beta:
            scenario["kind"] = "beta";
            scenario["alpha"] = config.scenario.alpha;
            scenario["beta"] = config.scenario.beta;
            break;
        case ScenarioKind::Explicit:
            scenario["kind"] = "explicit";
            scenario["probs"] = config.scenario.probs;
            break;
    }
    root["scenario"] = scenario;
    root["mode"] = config.mode == ScenarioMode::Fresh ? "fresh" : "fixed";
    root["budgets"] = config.budgets;
    json policies = json::array();
    for (const auto& policy : config.policies) {
        json p;
        p["name"] = policy.name();
        if (policy.kind == PolicyKind::EpsilonGreedy) {
            p["epsilon"] = policy.epsilon;
        }
        policies.push_back(p);
    }
    root["policies"] = policies;
    root["replications"] = config.replications;
    root["checkpoints"] = config.checkpoints;
    return root.dump(2) + "\n";
}

std::string results_csv_header() {
    return "scenario,policy,params,replication,step,reward,realized_regret,"
           "pseudo_regret,avg_regret_per_offer";
}

std::string to_results_csv(const std::vector<ResultRow>& rows) {
    std::ostringstream out;
    out << results_csv_header() << "\n";
    for (const auto& row : rows) {
        out << row.scenario << ',' << row.policy << ',' << row.params << ','
            << row.replication << ',' << row.step << ',' << row.reward << ','
            << format_number(row.realized_regret) << ','
            << format_number(row.pseudo_regret) << ','
            << format_number(row.avg_regret_per_offer) << "\n";
    }
    return out.str();
}

void write_results_csv(const std::string& path, const std::vector<ResultRow>& rows) {
    write_file(path, to_results_csv(rows));
}

std::vector<ResultRow> parse_results_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::vector<ResultRow> rows;
    while (std::getline(in, line)) {
        ++lineno;
        if (lineno == 1) {
            if (line != results_csv_header()) {
                throw ConfigInvalid("line 1: unexpected header");
            }
            continue;
        }
        if (line.empty()) {
            continue;
        }
        const auto fields = split_csv_line(line);
        if (fields.size() != 9) {
            throw ConfigInvalid("line " + std::to_string(lineno) + ": expected 9 fields, got " +
                                std::to_string(fields.size()));
        }
        try {
            ResultRow row;
            row.scenario = fields[0];
            row.policy = fields[1];
            row.params = fields[2];
            row.replication = std::stoi(fields[3]);
            row.step = std::stoull(fields[4]);
            row.reward = std::stoull(fields[5]);
            row.realized_regret = std::stod(fields[6]);
            row.pseudo_regret = std::stod(fields[7]);
            row.avg_regret_per_offer = std::stod(fields[8]);
            rows.push_back(std::move(row));
        } catch (const std::exception&) {
            throw ConfigInvalid("line " + std::to_string(lineno) + ": malformed numeric field");
        }
    }
    return rows;
}

std::vector<ResultRow> read_results_csv(const std::string& path) {
    return parse_results_csv(read_file(path));
}

std::string to_aggregate_csv(const std::vector<AggregateRow>& rows) {
    std::ostringstream out;
    out << "policy,step,mean,sd,stderr,ci95\n";
    for (const auto& row : rows) {
        out << row.policy << ',' << row.step << ',' << format_number(row.mean) << ',';
        if (row.sd) {
            out << format_number(*row.sd);
        }
        out << ',';
        if (row.stderr_) {
            out << format_number(*row.stderr_);
        }
        out << ',';
        if (row.ci95) {
            out << format_number(*row.ci95);
        }
        out << "\n";
    }
    return out.str();
}

void write_aggregate_csv(const std::string& path, const std::vector<AggregateRow>& rows) {
    write_file(path, to_aggregate_csv(rows));
}

}  // namespace banditlab
