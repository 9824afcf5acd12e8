#pragma once

// Statistical self-checks for the sampler stack. Each check draws a large
// sample from a freshly derived stream and compares an empirical statistic
// against its analytic value.

#include <cstdint>
#include <string>
#include <vector>

#include "banditlab/rng.hpp"

namespace banditlab {

struct SamplerCheck {
    std::string name;
    double observed = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;  // |observed - expected| must not exceed this
    bool pass = false;
};

// Moment and KS battery over Uniform, Bernoulli, Gamma, and Beta samplers.
std::vector<SamplerCheck> run_sampler_battery(MasterSeed seed);

// Two-sided Kolmogorov-Smirnov distance of a sample against Uniform(0,1).
double ks_distance_uniform(std::vector<double> sample);

}  // namespace banditlab
