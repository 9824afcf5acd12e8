#include "banditlab/validation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace banditlab {

namespace {

struct Moments {
    double mean = 0.0;
    double variance = 0.0;  // population variance of the sample
};

template <typename Draw>
Moments sample_moments(int n, Draw&& draw) {
    double sum = 0.0;
    double sum_sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = draw();
        sum += x;
        sum_sq += x * x;
    }
    const double mean = sum / n;
    return {mean, sum_sq / n - mean * mean};
}

std::string format_shape(double shape) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%g", shape);
    return buffer;
}

SamplerCheck make_check(std::string name, double observed, double expected,
                        double tolerance) {
    SamplerCheck check{std::move(name), observed, expected, tolerance, false};
    check.pass = std::abs(observed - expected) <= tolerance;
    return check;
}

}  // namespace

double ks_distance_uniform(std::vector<double> sample) {
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double f = sample[i];  // Uniform(0,1) CDF is the identity
        d = std::max(d, std::abs((static_cast<double>(i) + 1.0) / n - f));
        d = std::max(d, std::abs(static_cast<double>(i) / n - f));
    }
    return d;
}

std::vector<SamplerCheck> run_sampler_battery(MasterSeed seed) {
    std::vector<SamplerCheck> checks;
    std::uint64_t stream_index = 0;
    auto fresh = [&] { return derive_stream(seed, 0, 0, stream_index++); };

    {
        auto s = fresh();
        const auto m = sample_moments(1000000, [&] { return s.next_uniform(); });
        checks.push_back(make_check("uniform mean (1e6 draws)", m.mean, 0.5, 0.002));
        checks.push_back(
            make_check("uniform variance (1e6 draws)", m.variance, 1.0 / 12.0, 0.002));
    }
    {
        auto s = fresh();
        const auto m = sample_moments(
            100000, [&] { return static_cast<double>(s.next_bernoulli(0.3)); });
        // 4 sigma band, sigma = sqrt(p(1-p)/n)
        checks.push_back(make_check("bernoulli(0.3) frequency (1e5 draws)", m.mean, 0.3,
                                    4.0 * std::sqrt(0.3 * 0.7 / 100000.0)));
    }

    const double gamma_shapes[] = {0.5, 1.0, 3.0, 9.0};
    for (const double shape : gamma_shapes) {
        auto s = fresh();
        const auto m = sample_moments(100000, [&] { return s.next_gamma(shape); });
        // Gamma(a,1): mean a, variance a; 5 standard errors of each.
        const double se_mean = std::sqrt(shape / 100000.0);
        // Var of sample variance ~ (mu4 - var^2)/n, mu4 = 3a^2 + 6a for Gamma.
        const double se_var = std::sqrt((3.0 * shape * shape + 6.0 * shape -
                                         shape * shape) / 100000.0);
        checks.push_back(make_check("gamma(" + format_shape(shape) + ") mean (1e5 draws)",
                                    m.mean, shape, 5.0 * se_mean));
        checks.push_back(make_check("gamma(" + format_shape(shape) + ") variance (1e5 draws)",
                                    m.variance, shape, 5.0 * se_var));
    }

    {
        auto s = fresh();
        std::vector<double> sample(100000);
        for (auto& x : sample) {
            x = s.next_beta(1.0, 1.0);
        }
        checks.push_back(
            make_check("beta(1,1) KS vs uniform (1e5 draws)",
                       ks_distance_uniform(std::move(sample)), 0.0, 0.01));
    }
    {
        auto s = fresh();
        const auto m = sample_moments(100000, [&] { return s.next_beta(4.0, 8.0); });
        checks.push_back(
            make_check("beta(4,8) mean (1e5 draws)", m.mean, 1.0 / 3.0, 0.005));
    }
    {
        auto s = fresh();
        const auto m = sample_moments(100000, [&] { return s.next_beta(1.0, 3.0); });
        checks.push_back(make_check("beta(1,3) mean (1e5 draws)", m.mean, 0.25, 0.005));
        checks.push_back(
            make_check("beta(1,3) variance (1e5 draws)", m.variance, 3.0 / 80.0, 0.002));
    }
    return checks;
}

}  // namespace banditlab
