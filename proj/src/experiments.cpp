#include "quenchscape/experiments.hpp"

#include <cmath>
#include <stdexcept>

#include "quenchscape/parallel.hpp"
#include "quenchscape/rng.hpp"

namespace qsc {

LevelStatsResult level_stats_experiment(ModelKind model, int n, double W, int realizations,
                                        std::uint64_t seed, int bins, int workers, double tau) {
    if (realizations < 1) throw std::invalid_argument("level_stats: need realizations >= 1");
    const PhaseDefaults defaults = model_defaults(model);
    std::vector<std::vector<double>> per_real(realizations);
    parallel_for(realizations, workers, [&](std::size_t r) {
        Rng rng = make_rng(derive_seed(seed, "level-stats", n, r));
        RealVec h = sample_disorder({W}, n, rng);
        Mat H = (model == ModelKind::NearestNeighbor)
                    ? nn_ising_matrix({n, 1.0, defaults.B, h})
                    : long_range_ising_matrix({n, 1.0, defaults.B, 1.0, h});
        Spectrum spec = diagonalize_raw(H);
        std::vector<double> energies(spec.eigenvalues.data(),
                                     spec.eigenvalues.data() + spec.eigenvalues.size());
        per_real[r] = spacing_ratios(energies);
    });
    std::vector<double> pooled;
    for (const auto& v : per_real) pooled.insert(pooled.end(), v.begin(), v.end());
    LevelStatsResult result;
    result.W = W;
    result.stats = compute_level_statistics(std::move(pooled), bins);
    result.label = classify_phase(result.stats, tau);
    return result;
}

namespace {

struct VqeSetup {
    ModelKind ansatz;
    ModelKind target_model;
};

VqeSetup vqe_setup(int example) {
    if (example == 1) return {ModelKind::NearestNeighbor, ModelKind::LongRange};
    if (example == 2) return {ModelKind::LongRange, ModelKind::NearestNeighbor};
    throw std::invalid_argument("vqe_benchmark: example must be 1 or 2");
}

void summarize(const std::vector<double>& xs, double& mean, double& sd) {
    mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    sd = 0.0;
    for (double x : xs) sd += (x - mean) * (x - mean);
    sd = xs.size() > 1 ? std::sqrt(sd / (xs.size() - 1.0)) : 0.0;
}

}  // namespace

VqeBenchmarkResult vqe_benchmark(int example, int quenches, int instances, int epochs,
                                 const OptimizerConfig& opt, std::uint64_t seed, int workers,
                                 int n) {
    const VqeSetup setup = vqe_setup(example);
    const PhaseDefaults target_defaults = model_defaults(setup.target_model);
    const PhaseDefaults ansatz_defaults = model_defaults(setup.ansatz);

    VqeBenchmarkResult result;
    result.instances.resize(instances);
    OptimizerConfig cfg = opt;
    cfg.epochs = epochs;

    parallel_for(instances, workers, [&](std::size_t i) {
        // Target drawn in its thermalized phase, fresh disorder per instance.
        Rng rng = make_rng(derive_seed(seed, "vqe-target", example, i));
        RealVec h = sample_disorder({target_defaults.W_thermal}, n, rng);
        Mat target = (setup.target_model == ModelKind::NearestNeighbor)
                         ? nn_ising_matrix({n, 1.0, target_defaults.B, h})
                         : long_range_ising_matrix({n, 1.0, target_defaults.B, 1.0, h});
        const double exact = diagonalize_raw(target).eigenvalues.minCoeff();

        LossSpec spec;
        spec.kind = LossKind::VqeEnergy;
        spec.ansatz_model = setup.ansatz;
        spec.n = n;
        spec.B = ansatz_defaults.B;
        spec.target = std::move(target);
        TrainableParams init =
            mbl_init(setup.ansatz, n, quenches, derive_seed(seed, "vqe-init", example, i));
        OptimizeTrajectory traj = optimize(spec, init, cfg);

        VqeInstanceResult& inst = result.instances[i];
        inst.exact_energy = exact;
        inst.best_energy = traj.best_loss;
        inst.relative_error = std::abs(traj.best_loss - exact) / std::abs(exact);
        inst.epoch_loss = std::move(traj.epoch_loss);
    });

    std::vector<double> errors;
    errors.reserve(instances);
    for (const auto& inst : result.instances) errors.push_back(inst.relative_error);
    summarize(errors, result.mean_relative_error, result.std_relative_error);
    return result;
}

MaxCutBenchmarkResult maxcut_benchmark(ModelKind ansatz, int quenches, int instances,
                                       int epochs, double threshold,
                                       const OptimizerConfig& opt, std::uint64_t seed,
                                       int workers) {
    const MaxCutInstance graph = paper_maxcut_instance();
    const int n = graph.vertices();
    const PhaseDefaults ansatz_defaults = model_defaults(ansatz);

    MaxCutBenchmarkResult result;
    result.oracle = brute_force_maxcut(graph);
    result.instances.resize(instances);
    OptimizerConfig cfg = opt;
    cfg.epochs = epochs;

    LossSpec base_spec;
    base_spec.kind = LossKind::MaxCutEnergy;
    base_spec.ansatz_model = ansatz;
    base_spec.n = n;
    base_spec.B = ansatz_defaults.B;
    base_spec.target = maxcut_diagonal(graph).cast<cplx>().asDiagonal();

    parallel_for(instances, workers, [&](std::size_t i) {
        TrainableParams init = mbl_init(ansatz, n, quenches, derive_seed(seed, "maxcut-init", i));
        OptimizeTrajectory traj = optimize(base_spec, init, cfg);
        MaxCutInstanceResult& inst = result.instances[i];
        ApproximationRatio ar = approximation_ratio(*traj.best_state, graph, threshold);
        inst.ratio = ar.ratio;
        inst.empty_selection = ar.empty_selection;
        inst.epoch_loss = std::move(traj.epoch_loss);
        inst.selected = maxcut_solutions(*traj.best_state, threshold);
    });

    std::vector<double> ratios;
    ratios.reserve(instances);
    for (const auto& inst : result.instances) ratios.push_back(inst.ratio);
    summarize(ratios, result.mean_ratio, result.std_ratio);
    return result;
}

std::vector<SeriesPoint> series_from_rows(const std::vector<ScanRow>& rows) {
    std::vector<SeriesPoint> series;
    series.reserve(rows.size());
    for (const ScanRow& r : rows) series.push_back({r.M, r.value, r.uncertainty});
    return series;
}

RegimeScanResult regime_scan(const std::vector<int>& n_list, const std::vector<int>& m_list,
                             int realizations, std::uint64_t seed, int workers, double delta,
                             ModelKind model) {
    const PhaseDefaults defaults = model_defaults(model);
    ScanGrid grid;
    grid.model = model;
    grid.n_list = n_list;
    grid.m_list = m_list;
    grid.realizations = realizations;
    grid.B = defaults.B;
    grid.with_entropy = true;
    grid.seed = seed;
    grid.initial = (model == ModelKind::NearestNeighbor) ? InitialStateKind::AllZero
                                                         : InitialStateKind::NeelX;

    RegimeScanResult result;
    grid.W = defaults.W_thermal;
    grid.phase = "thermal";
    result.thermal = loss_variance_scan(grid, workers);
    grid.W = defaults.W_mbl;
    grid.phase = "mbl";
    result.mbl = loss_variance_scan(grid, workers);

    for (int n : n_list) {
        auto sat = [&](const ScanResult& sr, StatKind kind) {
            return saturation_onset(series_from_rows(sr.select(n, kind)), delta);
        };
        RegimeReport var_report{n, sat(result.thermal, StatKind::LossVariance).m_sat,
                                sat(result.mbl, StatKind::LossVariance).m_sat};
        RegimeReport ent_report{n, sat(result.thermal, StatKind::EntropyMean).m_sat,
                                sat(result.mbl, StatKind::EntropyMean).m_sat};
        result.variance_reports.push_back(var_report);
        result.entropy_reports.push_back(ent_report);
    }
    return result;
}

}  // namespace qsc
