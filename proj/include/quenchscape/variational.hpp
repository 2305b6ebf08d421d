#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quenchscape/core.hpp"
#include "quenchscape/models.hpp"

namespace qsc {

// Per-quench trainable parameters. Evolution times are carried as log-times
// so gradient steps cannot make them non-positive.
struct TrainableParams {
    Eigen::MatrixXd h;               // M x n on-site fields
    std::optional<RealVec> b;        // per-quench transverse fields
    std::optional<RealVec> log_t;    // per-quench log evolution times
    bool train_h = true;
    bool train_b = false;
    bool train_t = false;

    int quenches() const { return static_cast<int>(h.rows()); }
    int sites() const { return static_cast<int>(h.cols()); }
    int trainable_count() const;
    void validate() const;
};

enum class LossKind { ObservableExpectation, VqeEnergy, MaxCutEnergy };

struct LossSpec {
    LossKind kind = LossKind::ObservableExpectation;
    ModelKind ansatz_model = ModelKind::NearestNeighbor;
    int n = 0;
    double J = 1.0;
    double B = -2.0;  // shared transverse field when params.b is absent
    double alpha = 1.0;
    InitialStateKind initial = InitialStateKind::AllZero;
    Mat target;  // Hermitian observable / problem Hamiltonian
};

QuenchSchedule schedule_from_params(const TrainableParams& params, const LossSpec& spec);

double loss(const TrainableParams& params, const LossSpec& spec);

// Central finite differences over the flattened trainable coordinates
// (h row-major, then b, then log_t).
RealVec finite_diff_gradient(const TrainableParams& params, const LossSpec& spec,
                             double eps = 1e-3);

struct OptimizerConfig {
    double learning_rate = 0.05;
    double momentum = 0.9;
    int epochs = 100;
    double fd_eps = 1e-3;
    // Box constraint on the log_t coordinates (t in [e^-b, e^b]). Rugged
    // landscapes can otherwise random-walk the quench time until exp(log_t)
    // overflows; times beyond this range are physically uninformative anyway.
    double log_t_bound = 3.0;
};

struct OptimizeTrajectory {
    std::vector<double> epoch_loss;  // loss after each epoch's update
    double initial_loss = 0.0;
    double best_loss = 0.0;
    TrainableParams best_params;
    std::optional<StateVector> best_state;  // state prepared by best_params
};

// Gradient descent with momentum on finite-difference gradients.
OptimizeTrajectory optimize(const LossSpec& spec, const TrainableParams& init,
                            const OptimizerConfig& cfg);

// Phase initializers: h ~ U[-W/2, W/2] with the phase's default W for the
// model, B_m at the model default, t_m = 1/J.
TrainableParams mbl_init(ModelKind model, int n, int m_quenches, std::uint64_t seed);
TrainableParams thermal_init(ModelKind model, int n, int m_quenches, std::uint64_t seed);

struct MaxCutInstance {
    Eigen::MatrixXd adjacency;  // symmetric, zero diagonal

    explicit MaxCutInstance(Eigen::MatrixXd w);
    int vertices() const { return static_cast<int>(adjacency.rows()); }
};

// The 5-vertex instance studied in the benchmark.
MaxCutInstance paper_maxcut_instance();

// Diagonal H = sum_{i>j} w_ij Z_i Z_j.
RealVec maxcut_diagonal(const MaxCutInstance& instance);
DenseHermitian maxcut_hamiltonian(const MaxCutInstance& instance);

// Cut weight of a bitstring (bit 0 -> z = +1): sum_edges w_ij (1 - z_i z_j)/2.
double cut_value(const MaxCutInstance& instance, long bitstring);

struct MaxCutSolution {
    double min_energy = 0.0;
    double max_cut = 0.0;
    std::vector<long> optimal_bitstrings;  // minimizers of the energy
};

MaxCutSolution brute_force_maxcut(const MaxCutInstance& instance);

struct SelectedBitstring {
    long bitstring = 0;
    double probability = 0.0;
};

// Basis states with probability >= threshold, sorted by probability descending.
std::vector<SelectedBitstring> maxcut_solutions(const StateVector& psi, double threshold);

struct ApproximationRatio {
    double ratio = 0.0;
    bool empty_selection = false;  // fell back to the single most probable string
};

ApproximationRatio approximation_ratio(const StateVector& psi, const MaxCutInstance& instance,
                                       double threshold = 0.01);

}  // namespace qsc
