#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quenchscape/expressivity.hpp"
#include "quenchscape/models.hpp"

namespace qsc {

enum class StatKind { LossVariance, LossMean, EntropyMean, F1, F2, Bound, EmpiricalBound };

std::string stat_name(StatKind k);

struct ScanGrid {
    ModelKind model = ModelKind::NearestNeighbor;
    double W = 5.0;
    std::string phase = "thermal";
    std::vector<int> n_list;
    std::vector<int> m_list;  // strictly increasing
    int realizations = 400;
    int obs_qubit_a = 1, obs_qubit_b = 2;  // loss observable Z_a Z_b
    std::optional<int> cut;                // bipartition size; default floor(n/2)
    double J = 1.0, B = -2.0, alpha = 1.0, t = 1.0;
    InitialStateKind initial = InitialStateKind::AllZero;
    bool with_frame_potentials = false;  // store per-M states, report F1/F2 + bounds
    bool with_entropy = false;
    std::uint64_t seed = 0;
};

struct ScanRow {
    int n = 0;
    int M = 0;
    std::string phase;
    StatKind kind = StatKind::LossVariance;
    double value = 0.0;
    double uncertainty = 0.0;
};

struct ScanResult {
    std::vector<ScanRow> rows;
    std::uint64_t seed = 0;

    std::vector<ScanRow> select(int n, StatKind kind) const;
};

// Loss statistics (and optionally entropy / frame potentials / bounds) on the
// (n, M) grid. One trajectory per realization; the state after m quenches
// doubles as the depth-m draw.
ScanResult loss_variance_scan(const ScanGrid& grid, int workers = 1);

// Mean half-chain entropy per (n, M); loss statistics are reported as well.
ScanResult entanglement_scan(const ScanGrid& grid, int workers = 1);

// Average bipartite entropy of Haar-random pure states, ln(dA) - dA/(2 dB).
double page_entropy(double d_a, double d_b);

struct SeriesPoint {
    int m = 0;
    double value = 0.0;
    double uncertainty = 0.0;
};

struct SaturationResult {
    int m_sat = 0;
    double plateau = 0.0;  // mean of the last quartile
};

// Convergence onset: plateau = mean of the last quartile of the series;
// m_sat = smallest M from which |V(M) - plateau| <= delta * |plateau| +
// 2 * uncertainty(M) holds for every later point (the 2-sigma term keeps the
// onset insensitive to Monte-Carlo noise). Throws if the tail is not flat:
// the last-quartile slope is inconsistent with 0 at 2 sigma AND the drift it
// implies across the tail window exceeds half the convergence band.
SaturationResult saturation_onset(const std::vector<SeriesPoint>& series, double delta = 0.1);

enum class Regime { I, II, III };

Regime regime_classify(int m, int m_sat_thermal, int m_sat_mbl);

struct RegimeReport {
    int n = 0;
    int m_sat_thermal = 0;
    int m_sat_mbl = 0;
    int width() const { return m_sat_mbl - m_sat_thermal; }
};

}  // namespace qsc
