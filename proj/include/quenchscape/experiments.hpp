#pragma once

#include <cstdint>
#include <vector>

#include "quenchscape/landscape.hpp"
#include "quenchscape/phase.hpp"
#include "quenchscape/variational.hpp"

namespace qsc {

struct LevelStatsResult {
    double W = 0.0;
    LevelStatistics stats;
    PhaseLabel label;
};

// Pools spacing ratios over `realizations` disorder draws and classifies the
// phase. The NN model uses B = -2J; the long-range model alpha = 1, B = 0.
LevelStatsResult level_stats_experiment(ModelKind model, int n, double W, int realizations,
                                        std::uint64_t seed, int bins = 25, int workers = 1,
                                        double tau = 0.08);

struct VqeInstanceResult {
    double exact_energy = 0.0;
    double best_energy = 0.0;
    double relative_error = 0.0;
    std::vector<double> epoch_loss;
};

struct VqeBenchmarkResult {
    std::vector<VqeInstanceResult> instances;
    double mean_relative_error = 0.0;
    double std_relative_error = 0.0;
};

// Appendix-style ground-state benchmarks on 7 qubits, MBL-initialised.
// Example 1: NN ansatz, long-range thermalized target.
// Example 2: long-range ansatz, NN thermalized target.
VqeBenchmarkResult vqe_benchmark(int example, int quenches, int instances, int epochs,
                                 const OptimizerConfig& opt, std::uint64_t seed,
                                 int workers = 1, int n = 7);

struct MaxCutInstanceResult {
    double ratio = 0.0;
    bool empty_selection = false;
    std::vector<double> epoch_loss;
    std::vector<SelectedBitstring> selected;
};

struct MaxCutBenchmarkResult {
    MaxCutSolution oracle;
    std::vector<MaxCutInstanceResult> instances;
    double mean_ratio = 0.0;
    double std_ratio = 0.0;
};

// MBL-initialised quench ansatz on the 5-vertex benchmark graph.
MaxCutBenchmarkResult maxcut_benchmark(ModelKind ansatz, int quenches, int instances,
                                       int epochs, double threshold,
                                       const OptimizerConfig& opt, std::uint64_t seed,
                                       int workers = 1);

struct RegimeScanResult {
    ScanResult thermal;
    ScanResult mbl;
    std::vector<RegimeReport> variance_reports;  // per n
    std::vector<RegimeReport> entropy_reports;   // per n
};

// Variance + entropy scans for both phases over the grid, with M_sat per
// series. `delta` is the saturation tolerance.
RegimeScanResult regime_scan(const std::vector<int>& n_list, const std::vector<int>& m_list,
                             int realizations, std::uint64_t seed, int workers = 1,
                             double delta = 0.1, ModelKind model = ModelKind::NearestNeighbor);

std::vector<SeriesPoint> series_from_rows(const std::vector<ScanRow>& rows);

}  // namespace qsc
