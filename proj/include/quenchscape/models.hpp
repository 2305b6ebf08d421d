#pragma once

#include <optional>
#include <vector>

#include "quenchscape/core.hpp"
#include "quenchscape/rng.hpp"

namespace qsc {

enum class ModelKind { NearestNeighbor, LongRange };
enum class InitialStateKind { AllZero, NeelX };

// H = J sum_i Z_i Z_{i+1} + B sum_i X_i + sum_i h_i Z_i, periodic (Z_{n+1}=Z_1).
struct NNIsingParams {
    int n = 0;
    double J = 1.0;
    double B = -2.0;
    RealVec h;  // length n
};

// H = J sum_{i>j} Z_i Z_j / |i-j|^alpha + B sum_i X_i + sum_i h_i X_i, open chain.
struct LongRangeIsingParams {
    int n = 0;
    double J = 1.0;
    double B = 0.0;
    double alpha = 1.0;
    RealVec h;  // length n, couples to X_i
};

// Uniform on-site disorder on [-W/2, W/2].
struct DisorderSpec {
    double W = 0.0;
};

struct Quench {
    RealVec h;
    double t = 1.0;
    std::optional<double> B;  // overrides the schedule's shared B when set
};

struct QuenchSchedule {
    ModelKind model = ModelKind::NearestNeighbor;
    double J = 1.0;
    double B = -2.0;
    double alpha = 1.0;  // long-range only
    std::vector<Quench> quenches;

    int size() const { return static_cast<int>(quenches.size()); }
};

// Paper defaults: NN model J=1, B=-2J, t=1/J, thermal W=5J / MBL W=50J;
// long-range model alpha=1, B=0, thermal W=0.6J / MBL W=15J.
struct PhaseDefaults {
    double W_thermal;
    double W_mbl;
    double B;
};
PhaseDefaults model_defaults(ModelKind model);

DenseHermitian build_nn_ising(const NNIsingParams& params);
DenseHermitian build_long_range_ising(const LongRangeIsingParams& params);

// Raw matrices for hot loops (skip the hermiticity validation pass).
Mat nn_ising_matrix(const NNIsingParams& params);
Mat long_range_ising_matrix(const LongRangeIsingParams& params);

RealVec sample_disorder(const DisorderSpec& spec, int n, Rng& rng);

StateVector initial_state(InitialStateKind kind, int n);

// Applies quench m=1 first: psi -> e^{-iH(theta_M)t_M} ... e^{-iH(theta_1)t_1} psi.
StateVector apply_ansatz(const QuenchSchedule& schedule, int n, const StateVector& psi0);

// Single quench step shared by apply_ansatz and the scan drivers.
StateVector apply_quench(const QuenchSchedule& schedule, int n, const Quench& q,
                         const StateVector& psi);

// Diagonal of the Z_i Z_j product observable (z = +1 for bit 0).
RealVec pauli_zz_diagonal(int n, int qubit_a, int qubit_b);

DenseHermitian pauli_zz_observable(int n, int qubit_a, int qubit_b);

}  // namespace qsc
