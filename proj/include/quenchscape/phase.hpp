#pragma once

#include <string>
#include <vector>

#include "quenchscape/core.hpp"

namespace qsc {

// Consecutive level-spacing ratios r_i = min(d_i, d_{i+1}) / max(d_i, d_{i+1}).
// Near-degenerate spacings (max gap < 1e-12) emit r = 0 and are kept: the
// W=0 limit is physically dominated by degeneracies.
std::vector<double> spacing_ratios(const std::vector<double>& energies);

double goe_pdf(double r);
double poisson_pdf(double r);

// Analytic means of r under the two reference distributions.
constexpr double kGoeMeanR = 0.535898384862245412;      // 4 - 2*sqrt(3)
constexpr double kPoissonMeanR = 0.386294361119890619;  // 2 ln 2 - 1

struct LevelStatistics {
    std::vector<double> ratios;
    double mean_r = 0.0;
    std::vector<double> bin_edges;  // size bins+1, uniform on [0,1]
    std::vector<double> densities;  // normalized: sum(density * width) = 1
};

LevelStatistics compute_level_statistics(std::vector<double> ratios, int bins = 25);

enum class Phase { Thermalized, MBL, Indeterminate };

std::string phase_name(Phase p);

struct PhaseLabel {
    Phase phase = Phase::Indeterminate;
    double tv_goe = 0.0;      // total-variation distance of histogram to GOE
    double tv_poisson = 0.0;  // ... and to Poisson
    double mean_r = 0.0;
};

// Thermalized if mean_r is nearer the GOE mean and TV(hist, GOE) < tau;
// MBL symmetrically against Poisson; otherwise Indeterminate.
PhaseLabel classify_phase(const LevelStatistics& stats, double tau = 0.08,
                          std::size_t min_ratios = 500);

// Per-bin reference probabilities (Gauss-Legendre quadrature of the pdf).
std::vector<double> goe_bin_probabilities(const std::vector<double>& bin_edges);
std::vector<double> poisson_bin_probabilities(const std::vector<double>& bin_edges);

}  // namespace qsc
