#pragma once

#include <cstdint>
#include <vector>

#include "quenchscape/core.hpp"
#include "quenchscape/models.hpp"

namespace qsc {

// Phase-constrained ansatz ensemble: N independent draws of an M-quench
// schedule, all quenches sharing one disorder strength.
struct EnsembleConfig {
    ModelKind model = ModelKind::NearestNeighbor;
    int n = 0;
    int M = 0;
    DisorderSpec disorder;
    double J = 1.0;
    double B = -2.0;
    double alpha = 1.0;
    double t = 1.0;  // evolution time per quench, units of 1/J
    InitialStateKind initial = InitialStateKind::AllZero;
    int N = 2;
    std::uint64_t seed = 0;
};

struct EnsembleSample {
    EnsembleConfig config;
    std::vector<StateVector> states;
};

struct FramePotentialEstimate {
    int order = 1;
    double value = 0.0;
    double std_error = 0.0;        // U-statistic (per-state projection) estimate
    double std_error_naive = 0.0;  // pairwise sd / sqrt(pairs); lower bound on uncertainty
    long pair_count = 0;
};

EnsembleSample sample_ensemble(const EnsembleConfig& config, int workers = 1);

FramePotentialEstimate frame_potential(const EnsembleSample& sample, int order);

struct FrameCurvePoint {
    int M = 0;
    FramePotentialEstimate f1;
    FramePotentialEstimate f2;
};

// Frame potentials at several quench depths from one set of N trajectories;
// the state after m quenches of a trajectory is a valid draw at depth m.
std::vector<FrameCurvePoint> frame_potential_curve(const EnsembleConfig& config,
                                                   const std::vector<int>& m_list,
                                                   int workers = 1);

double haar_frame_potential(int n, int order);

// Variance of <psi|O|psi> over Haar-random pure states.
double haar_loss_variance(const DenseHermitian& op, int n);

// Var_Haar + (sqrt(F2-F2_H) - F1 + F1_H)*||O||_2^2 + Tr[O]/2^(n-1)*sqrt(F1-F1_H)*||O||_2.
// Negative radicands (Monte-Carlo dips below the Haar floor) are clamped to 0.
double variance_bound(double f1, double f2, const DenseHermitian& op, int n);

// Same with the first term's norm power softened to ||O||_2^(2k).
double empirical_bound(double f1, double f2, const DenseHermitian& op, int n, double k = 0.7);

// Schatten-2 norm of (Haar t-th moment of rho0) - (sample-averaged moment).
// Dense 4^n operators at t=2, so n <= 6.
double moment_deviation_norm(const std::vector<StateVector>& states, int order);

}  // namespace qsc
