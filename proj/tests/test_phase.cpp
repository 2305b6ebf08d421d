#include <doctest.h>

#include <cmath>
#include <random>

#include "quenchscape/phase.hpp"
#include "quenchscape/rng.hpp"

using namespace qsc;

TEST_CASE("spacing_ratios examples") {
    CHECK(spacing_ratios({0.0, 1.0, 3.0}) == std::vector<double>{0.5});
    CHECK(spacing_ratios({0.0, 1.0, 2.0, 3.0}) == std::vector<double>{1.0, 1.0});
    CHECK(spacing_ratios({0.0, 2.0, 3.0, 7.0}) == std::vector<double>{0.5, 0.25});
    SUBCASE("degenerate gaps emit r = 0") {
        std::vector<double> r = spacing_ratios({0.0, 0.0, 1.0});
        REQUIRE(r.size() == 1);
        CHECK(r[0] == doctest::Approx(0.0));
    }
    SUBCASE("unsorted input rejected") {
        CHECK_THROWS_AS(spacing_ratios({1.0, 0.0, 2.0}), std::invalid_argument);
    }
}

TEST_CASE("reference distributions") {
    CHECK(poisson_pdf(0.0) == doctest::Approx(2.0));
    CHECK(goe_pdf(0.0) == doctest::Approx(0.0));
    CHECK(poisson_pdf(1.0) == doctest::Approx(0.5));
    CHECK_THROWS_AS(goe_pdf(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(poisson_pdf(1.1), std::invalid_argument);

    SUBCASE("both pdfs integrate to 1 and reproduce the analytic means") {
        // Simpson quadrature of r^k * pdf(r) over [0, 1].
        auto moment = [](double (*pdf)(double), int k) {
            const int steps = 20000;
            double acc = 0.0;
            for (int i = 0; i <= steps; ++i) {
                double r = static_cast<double>(i) / steps;
                double w = (i == 0 || i == steps) ? 1.0 : (i % 2 ? 4.0 : 2.0);
                acc += w * std::pow(r, k) * pdf(r);
            }
            return acc / (3.0 * steps);
        };
        CHECK(moment(goe_pdf, 0) == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(moment(poisson_pdf, 0) == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(moment(goe_pdf, 1) == doctest::Approx(kGoeMeanR).epsilon(1e-6));
        CHECK(moment(poisson_pdf, 1) == doctest::Approx(kPoissonMeanR).epsilon(1e-6));
    }
}

TEST_CASE("compute_level_statistics histogram normalization") {
    Rng rng = make_rng(derive_seed(17, "hist"));
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<double> ratios(5000);
    for (double& r : ratios) r = unif(rng);
    LevelStatistics stats = compute_level_statistics(ratios, 25);
    REQUIRE(stats.bin_edges.size() == 26);
    REQUIRE(stats.densities.size() == 25);
    double integral = 0.0;
    for (std::size_t b = 0; b < stats.densities.size(); ++b)
        integral += stats.densities[b] * (stats.bin_edges[b + 1] - stats.bin_edges[b]);
    CHECK(integral == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(stats.mean_r >= 0.0);
    CHECK(stats.mean_r <= 1.0);
}

namespace {

// Rejection-sample ratios from a reference pdf bounded above by `cap`.
std::vector<double> sample_pdf(double (*pdf)(double), double cap, std::size_t count,
                               std::uint64_t seed) {
    Rng rng = make_rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<double> out;
    out.reserve(count);
    while (out.size() < count) {
        double r = unif(rng);
        if (cap * unif(rng) <= pdf(r)) out.push_back(r);
    }
    return out;
}

}  // namespace

TEST_CASE("classify_phase on synthetic reference samples") {
    SUBCASE("GOE draws classify as Thermalized") {
        auto ratios = sample_pdf(goe_pdf, 1.6, 100000, derive_seed(23, "goe-sample"));
        PhaseLabel label = classify_phase(compute_level_statistics(std::move(ratios)));
        CHECK(label.phase == Phase::Thermalized);
        CHECK(label.tv_goe < 0.08);
        CHECK(std::abs(label.mean_r - kGoeMeanR) < 0.02);
    }
    SUBCASE("Poisson draws classify as MBL") {
        auto ratios = sample_pdf(poisson_pdf, 2.0, 100000, derive_seed(23, "poi-sample"));
        PhaseLabel label = classify_phase(compute_level_statistics(std::move(ratios)));
        CHECK(label.phase == Phase::MBL);
        CHECK(label.tv_poisson < 0.08);
    }
    SUBCASE("uniform ratios are Indeterminate") {
        Rng rng = make_rng(derive_seed(29, "unif-sample"));
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        std::vector<double> ratios(20000);
        for (double& r : ratios) r = unif(rng);
        PhaseLabel label = classify_phase(compute_level_statistics(std::move(ratios)));
        CHECK(label.phase == Phase::Indeterminate);
    }
    SUBCASE("too few pooled ratios are rejected") {
        auto ratios = sample_pdf(goe_pdf, 1.6, 100, derive_seed(31, "few"));
        CHECK_THROWS_AS(classify_phase(compute_level_statistics(std::move(ratios))),
                        std::invalid_argument);
    }
}

TEST_CASE("phase_name") {
    CHECK(phase_name(Phase::Thermalized) == "Thermalized");
    CHECK(phase_name(Phase::MBL) == "MBL");
    CHECK(phase_name(Phase::Indeterminate) == "Indeterminate");
}
