#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "banditlab/rng.hpp"
#include "banditlab/validation.hpp"

using namespace banditlab;

namespace {

std::vector<double> draw_uniforms(RngStream& s, int n) {
    std::vector<double> out(static_cast<std::size_t>(n));
    for (auto& x : out) {
        x = s.next_uniform();
    }
    return out;
}

}  // namespace

TEST_CASE("identical derivation tuples give identical sequences") {
    auto a = derive_stream({42}, 1, 2, 3);
    auto b = derive_stream({42}, 1, 2, 3);
    CHECK(draw_uniforms(a, 100) == draw_uniforms(b, 100));
}

TEST_CASE("tuples differing only in replication index diverge") {
    auto a = derive_stream({42}, 1, 2, 3);
    auto b = derive_stream({42}, 1, 2, 4);
    CHECK(draw_uniforms(a, 100) != draw_uniforms(b, 100));
}

TEST_CASE("seed zero is legal and distinct from seed one") {
    auto a = derive_stream({0}, 0, 0, 0);
    auto b = derive_stream({1}, 0, 0, 0);
    CHECK(draw_uniforms(a, 100) != draw_uniforms(b, 100));
}

TEST_CASE("replayed stream is bit-identical across sampler kinds") {
    auto a = derive_stream({7}, 0, 1, 2);
    auto b = derive_stream({7}, 0, 1, 2);
    for (int i = 0; i < 200; ++i) {
        CHECK(a.next_uniform() == b.next_uniform());
        CHECK(a.next_bernoulli(0.4) == b.next_bernoulli(0.4));
        CHECK(a.next_gamma(0.7) == b.next_gamma(0.7));
        CHECK(a.next_beta(2.0, 5.0) == b.next_beta(2.0, 5.0));
    }
    CHECK(a.position() == b.position());
}

TEST_CASE("pairwise correlation across 1000 distinct tuples stays small") {
    constexpr int kStreams = 1000;
    constexpr int kLen = 1000;
    std::vector<std::vector<double>> z(kStreams);
    for (int i = 0; i < kStreams; ++i) {
        auto s = derive_stream({99}, 0, 0, static_cast<std::uint64_t>(i));
        auto x = draw_uniforms(s, kLen);
        double mean = 0.0;
        for (double v : x) mean += v;
        mean /= kLen;
        double norm = 0.0;
        for (double v : x) norm += (v - mean) * (v - mean);
        norm = std::sqrt(norm);
        z[i].resize(kLen);
        for (int j = 0; j < kLen; ++j) {
            z[i][static_cast<std::size_t>(j)] = (x[static_cast<std::size_t>(j)] - mean) / norm;
        }
    }
    // For independent streams each correlation is ~N(0, 1/sqrt(n-1)),
    // sd ~ 0.0316; over ~5e5 pairs the expected maximum is ~0.16, so the
    // bound must sit above that. 0.2 is 6.3 sigma per pair, which truly
    // independent streams exceed with probability ~1e-4 while correlated
    // ones blow through it.
    double worst = 0.0;
    double sum_abs = 0.0;
    long pairs = 0;
    for (int i = 0; i < kStreams; ++i) {
        for (int j = i + 1; j < kStreams; ++j) {
            double dot = 0.0;
            for (int t = 0; t < kLen; ++t) {
                dot += z[i][static_cast<std::size_t>(t)] * z[j][static_cast<std::size_t>(t)];
            }
            worst = std::max(worst, std::abs(dot));
            sum_abs += std::abs(dot);
            ++pairs;
        }
    }
    CHECK(worst < 0.2);
    // Mean |corr| for N(0, 0.0316^2) is sd * sqrt(2/pi) ~ 0.0252.
    CHECK(sum_abs / static_cast<double>(pairs) < 0.03);
}

TEST_CASE("uniform range and moments") {
    auto s = derive_stream({5}, 0, 0, 0);
    double sum = 0.0;
    double sum_sq = 0.0;
    constexpr int kN = 1000000;
    for (int i = 0; i < kN; ++i) {
        const double u = s.next_uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        sum += u;
        sum_sq += u * u;
    }
    const double mean = sum / kN;
    CHECK(std::abs(mean - 0.5) < 0.002);
    CHECK(std::abs(sum_sq / kN - mean * mean - 1.0 / 12.0) < 0.002);
}

TEST_CASE("bernoulli degenerate probabilities") {
    auto s = derive_stream({5}, 0, 0, 1);
    for (int i = 0; i < 1000; ++i) {
        CHECK(s.next_bernoulli(0.0) == 0);
        CHECK(s.next_bernoulli(1.0) == 1);
    }
    CHECK_THROWS_AS(s.next_bernoulli(1.5), OutOfRangeProbability);
    CHECK_THROWS_AS(s.next_bernoulli(-0.1), OutOfRangeProbability);
}

TEST_CASE("bernoulli frequency at p=0.3") {
    auto s = derive_stream({5}, 0, 0, 2);
    constexpr int kN = 100000;
    int ones = 0;
    for (int i = 0; i < kN; ++i) {
        ones += s.next_bernoulli(0.3);
    }
    CHECK(std::abs(static_cast<double>(ones) / kN - 0.3) < 0.006);
}

TEST_CASE("gamma moments for several shapes") {
    // Gamma(a,1) has mean a and variance a.
    const double shapes[] = {0.5, 1.0, 3.0, 9.0};
    std::uint64_t rep = 0;
    for (const double a : shapes) {
        auto s = derive_stream({11}, 0, 0, rep++);
        constexpr int kN = 100000;
        double sum = 0.0;
        double sum_sq = 0.0;
        for (int i = 0; i < kN; ++i) {
            const double x = s.next_gamma(a);
            CHECK(x > 0.0);
            sum += x;
            sum_sq += x * x;
        }
        const double mean = sum / kN;
        const double var = sum_sq / kN - mean * mean;
        const double se_mean = std::sqrt(a / kN);
        const double se_var = std::sqrt((2.0 * a * a + 6.0 * a) / kN);
        CHECK(std::abs(mean - a) < 5.0 * se_mean);
        CHECK(std::abs(var - a) < 5.0 * se_var);
    }
}

TEST_CASE("gamma shape=1 matches the exponential mean") {
    auto s = derive_stream({11}, 0, 0, 10);
    constexpr int kN = 100000;
    double sum = 0.0;
    for (int i = 0; i < kN; ++i) {
        sum += s.next_gamma(1.0);
    }
    CHECK(std::abs(sum / kN - 1.0) < 0.02);
}

TEST_CASE("gamma rejects nonpositive shape") {
    auto s = derive_stream({11}, 0, 0, 11);
    CHECK_THROWS_AS(s.next_gamma(0.0), InvalidShapeParameter);
    CHECK_THROWS_AS(s.next_gamma(-2.0), InvalidShapeParameter);
}

TEST_CASE("beta(1,1) is uniform by KS distance") {
    auto s = derive_stream({13}, 0, 0, 0);
    std::vector<double> sample(100000);
    for (auto& x : sample) {
        x = s.next_beta(1.0, 1.0);
    }
    CHECK(ks_distance_uniform(std::move(sample)) < 0.01);
}

TEST_CASE("beta moments match alpha/(alpha+beta)") {
    auto s = derive_stream({13}, 0, 0, 1);
    constexpr int kN = 100000;
    double sum = 0.0;
    for (int i = 0; i < kN; ++i) {
        sum += s.next_beta(4.0, 8.0);
    }
    CHECK(std::abs(sum / kN - 1.0 / 3.0) < 0.005);
}

TEST_CASE("beta(1,3) mean and variance") {
    auto s = derive_stream({13}, 0, 0, 2);
    constexpr int kN = 100000;
    double sum = 0.0;
    double sum_sq = 0.0;
    for (int i = 0; i < kN; ++i) {
        const double x = s.next_beta(1.0, 3.0);
        CHECK(x > 0.0);
        CHECK(x < 1.0);
        sum += x;
        sum_sq += x * x;
    }
    const double mean = sum / kN;
    CHECK(std::abs(mean - 0.25) < 0.005);
    CHECK(std::abs(sum_sq / kN - mean * mean - 3.0 / 80.0) < 0.002);
}

TEST_CASE("beta rejects nonpositive shapes") {
    auto s = derive_stream({13}, 0, 0, 3);
    CHECK_THROWS_AS(s.next_beta(0.0, 1.0), InvalidShapeParameter);
    CHECK_THROWS_AS(s.next_beta(1.0, -1.0), InvalidShapeParameter);
}

TEST_CASE("sampler battery passes on the default seed") {
    for (const auto& check : run_sampler_battery({20260823})) {
        INFO(check.name);
        CHECK(check.pass);
    }
}
