#include <doctest.h>

#include <cmath>

#include "quenchscape/landscape.hpp"

using namespace qsc;

namespace {

ScanGrid small_grid() {
    ScanGrid g;
    g.model = ModelKind::NearestNeighbor;
    g.W = 5.0;
    g.phase = "thermal";
    g.n_list = {3};
    g.m_list = {0, 1, 3};
    g.realizations = 24;
    g.seed = 5;
    return g;
}

}  // namespace

TEST_CASE("page_entropy") {
    CHECK(page_entropy(2, 2) == doctest::Approx(std::log(2.0) - 0.5));
    CHECK(page_entropy(16, 32) == doctest::Approx(std::log(16.0) - 0.25));
    CHECK(page_entropy(16, 32) == doctest::Approx(2.5226).epsilon(1e-4));
    CHECK(page_entropy(1, 8) == doctest::Approx(-1.0 / 16.0).epsilon(1e-12));
    // Subsystem order does not matter.
    CHECK(page_entropy(32, 16) == doctest::Approx(page_entropy(16, 32)));
}

TEST_CASE("loss_variance_scan basics") {
    ScanGrid g = small_grid();
    ScanResult res = loss_variance_scan(g);

    SUBCASE("M = 0 has exactly zero variance and loss +1") {
        auto var_rows = res.select(3, StatKind::LossVariance);
        auto mean_rows = res.select(3, StatKind::LossMean);
        REQUIRE(var_rows.size() == 3);
        CHECK(var_rows[0].M == 0);
        CHECK(var_rows[0].value == doctest::Approx(0.0));
        CHECK(mean_rows[0].value == doctest::Approx(1.0));
    }
    SUBCASE("variances are non-negative") {
        for (const ScanRow& r : res.select(3, StatKind::LossVariance))
            CHECK(r.value >= 0.0);
    }
    SUBCASE("deterministic and worker-count independent") {
        ScanResult res3 = loss_variance_scan(g, 3);
        REQUIRE(res.rows.size() == res3.rows.size());
        for (std::size_t i = 0; i < res.rows.size(); ++i) {
            CHECK(res.rows[i].value == res3.rows[i].value);
            CHECK(res.rows[i].kind == res3.rows[i].kind);
        }
    }
    SUBCASE("grid validation") {
        ScanGrid bad = g;
        bad.m_list = {2, 2};
        CHECK_THROWS_AS(loss_variance_scan(bad), std::invalid_argument);
        bad.m_list = {};
        CHECK_THROWS_AS(loss_variance_scan(bad), std::invalid_argument);
        bad = g;
        bad.realizations = 1;
        CHECK_THROWS_AS(loss_variance_scan(bad), std::invalid_argument);
    }
}

TEST_CASE("entanglement_scan basics") {
    ScanGrid g = small_grid();
    g.n_list = {4};
    ScanResult res = entanglement_scan(g);
    auto ent = res.select(4, StatKind::EntropyMean);
    REQUIRE(ent.size() == 3);
    SUBCASE("M = 0 product state has zero entropy") {
        CHECK(ent[0].M == 0);
        CHECK(ent[0].value == doctest::Approx(0.0).epsilon(1e-9));
    }
    SUBCASE("entropy bounded by the Page value plus noise") {
        for (const ScanRow& r : ent) {
            CHECK(r.value >= -1e-12);
            CHECK(r.value <= page_entropy(4, 4) + 3.0 * r.uncertainty + 0.2);
        }
    }
}

TEST_CASE("scan with frame potentials carries bounds") {
    ScanGrid g = small_grid();
    g.with_frame_potentials = true;
    ScanResult res = loss_variance_scan(g);
    auto f2 = res.select(3, StatKind::F2);
    auto bound = res.select(3, StatKind::Bound);
    auto emp = res.select(3, StatKind::EmpiricalBound);
    auto var = res.select(3, StatKind::LossVariance);
    REQUIRE(f2.size() == 3);
    REQUIRE(bound.size() == 3);
    SUBCASE("M = 0 has F2 = 1 exactly") {
        CHECK(f2[0].value == doctest::Approx(1.0));
    }
    SUBCASE("sample variance respects the bound at every grid point") {
        for (std::size_t i = 0; i < var.size(); ++i)
            CHECK(var[i].value <= bound[i].value + 3.0 * var[i].uncertainty + 1e-9);
    }
    SUBCASE("empirical bound is no larger than the theoretical bound") {
        // ||O||_2^(2k) <= ||O||_2^2 whenever ||O||_2 >= 1 and k <= 1.
        for (std::size_t i = 0; i < emp.size(); ++i)
            CHECK(emp[i].value <= bound[i].value + 1e-12);
    }
}

TEST_CASE("saturation_onset") {
    SUBCASE("constant series saturates at the first point") {
        std::vector<SeriesPoint> s;
        for (int m = 1; m <= 8; ++m) s.push_back({m, 2.5, 0.0});
        SaturationResult r = saturation_onset(s);
        CHECK(r.m_sat == 1);
        CHECK(r.plateau == doctest::Approx(2.5));
    }
    SUBCASE("worked example: onset at M = 4") {
        std::vector<SeriesPoint> s = {{1, 8.0, 0}, {2, 4.0, 0}, {3, 2.0, 0}, {4, 1.05, 0},
                                      {5, 1.0, 0}, {6, 1.0, 0}, {7, 1.0, 0}, {8, 1.0, 0}};
        SaturationResult r = saturation_onset(s, 0.1);
        CHECK(r.m_sat == 4);
        CHECK(r.plateau == doctest::Approx(1.0));
    }
    SUBCASE("non-flat tail reports a too-short scan") {
        std::vector<SeriesPoint> s;
        for (int m = 1; m <= 16; ++m) s.push_back({m, static_cast<double>(m), 0.0});
        CHECK_THROWS_WITH_AS(saturation_onset(s), doctest::Contains("scan range too short"),
                             std::runtime_error);
    }
    SUBCASE("input validation") {
        CHECK_THROWS_AS(saturation_onset({{1, 1.0, 0}, {2, 1.0, 0}}), std::invalid_argument);
        CHECK_THROWS_AS(saturation_onset({{1, 1.0, 0}, {1, 1.0, 0}, {2, 1.0, 0}, {3, 1.0, 0}}),
                        std::invalid_argument);
    }
}

TEST_CASE("regime_classify") {
    CHECK(regime_classify(3, 5, 12) == Regime::I);
    CHECK(regime_classify(8, 5, 12) == Regime::II);
    CHECK(regime_classify(20, 5, 12) == Regime::III);
    CHECK(regime_classify(5, 5, 12) == Regime::II);
    CHECK(regime_classify(12, 5, 12) == Regime::III);
    RegimeReport rep{7, 5, 12};
    CHECK(rep.width() == 7);
}
