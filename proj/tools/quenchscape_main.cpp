// Command-line driver: quench-ansatz phase diagnostics, expressivity and
// landscape scans, and the VQE / Max-Cut benchmarks. All subcommands are
// deterministic given (--config, --seed) and independent of --workers.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "quenchscape/experiments.hpp"
#include "quenchscape/io.hpp"

using nlohmann::json;
using namespace qsc;

namespace {

struct CommonOpts {
    std::string config_path;
    std::uint64_t seed = 1;
    int workers = 1;
    std::string out = "out";
    std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "JSON config file");
    cmd->add_option("--seed", opts.seed, "master seed");
    cmd->add_option("--workers", opts.workers, "worker thread count");
    cmd->add_option("--out", opts.out, "output directory");
    cmd->add_option("--format", opts.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
}

json load_config(const CommonOpts& opts) {
    json cfg = json::object();
    if (!opts.config_path.empty()) {
        std::ifstream in(opts.config_path);
        if (!in) throw CLI::ValidationError("--config", "cannot open " + opts.config_path);
        in >> cfg;
    }
    return cfg;
}

json canonical_config(const json& cfg, const CommonOpts& opts) {
    json full = cfg;
    full["seed"] = opts.seed;
    full["format"] = opts.format;
    return full;
}

ModelKind parse_model(const json& cfg, const char* key = "model") {
    std::string name = cfg.value(key, "nn");
    if (name == "nn" || name == "nearest-neighbor") return ModelKind::NearestNeighbor;
    if (name == "long-range" || name == "lr") return ModelKind::LongRange;
    throw CLI::ValidationError(key, "unknown model '" + name + "'");
}

double phase_disorder(ModelKind model, const std::string& phase) {
    const PhaseDefaults d = model_defaults(model);
    if (phase == "thermal" || phase == "thermalized") return d.W_thermal;
    if (phase == "mbl") return d.W_mbl;
    throw CLI::ValidationError("phase", "unknown phase '" + phase + "'");
}

OptimizerConfig parse_optimizer(const json& cfg) {
    OptimizerConfig opt;
    opt.learning_rate = cfg.value("learning_rate", 0.05);
    opt.momentum = cfg.value("momentum", 0.9);
    opt.fd_eps = cfg.value("fd_eps", 1e-3);
    return opt;
}

std::string fmt_int(long v) { return std::to_string(v); }

int run_level_stats(const CommonOpts& opts) {
    json cfg = load_config(opts);
    const ModelKind model = parse_model(cfg);
    const int n = cfg.value("n", 9);
    const std::vector<double> w_list = cfg.value("W_list", std::vector<double>{5.0, 50.0});
    const int realizations = cfg.value("realizations", 500);
    const int bins = cfg.value("bins", 25);
    const double tau = cfg.value("tau", 0.08);
    if (w_list.empty()) throw CLI::ValidationError("W_list", "must not be empty");

    auto t0 = std::chrono::steady_clock::now();
    RunManifest manifest(config_hash(canonical_config(cfg, opts)), opts.seed);
    OutputTable summary{{"W", "mean_r", "tv_goe", "tv_poisson", "label"}, {}};
    for (double w : w_list) {
        LevelStatsResult res = level_stats_experiment(model, n, w, realizations, opts.seed,
                                                      bins, opts.workers, tau);
        OutputTable hist{{"bin_center", "density"}, {}};
        for (std::size_t b = 0; b < res.stats.densities.size(); ++b) {
            double center = 0.5 * (res.stats.bin_edges[b] + res.stats.bin_edges[b + 1]);
            hist.rows.push_back({format_value(center), format_value(res.stats.densities[b])});
        }
        std::ostringstream stem;
        stem << "level_stats_W" << format_value(w);
        manifest.write_table(opts.out, stem.str(), hist, opts.format);
        summary.rows.push_back({format_value(w), format_value(res.stats.mean_r),
                                format_value(res.label.tv_goe),
                                format_value(res.label.tv_poisson),
                                phase_name(res.label.phase)});
        std::cout << "W=" << w << " mean_r=" << res.stats.mean_r << " label="
                  << phase_name(res.label.phase) << "\n";
    }
    manifest.write_table(opts.out, "level_stats_summary", summary, opts.format);
    manifest.finalize(opts.out, std::chrono::duration<double>(
                                    std::chrono::steady_clock::now() - t0).count());
    return 0;
}

int run_frame_potential(const CommonOpts& opts) {
    json cfg = load_config(opts);
    EnsembleConfig base;
    base.model = parse_model(cfg);
    const PhaseDefaults defaults = model_defaults(base.model);
    base.B = defaults.B;
    const std::string phase = cfg.value("phase", "thermal");
    base.disorder.W = cfg.contains("W") ? cfg["W"].get<double>()
                                        : phase_disorder(base.model, phase);
    base.t = cfg.value("t", 1.0);
    base.N = cfg.value("N", 5000);
    base.initial = (base.model == ModelKind::NearestNeighbor) ? InitialStateKind::AllZero
                                                              : InitialStateKind::NeelX;
    const std::vector<int> n_list = cfg.value("n_list", std::vector<int>{5});
    const std::vector<int> m_list = cfg.value("M_list", std::vector<int>{1, 2, 4, 8, 16, 30});
    if (base.N < 2) throw CLI::ValidationError("N", "need N >= 2");

    auto t0 = std::chrono::steady_clock::now();
    RunManifest manifest(config_hash(canonical_config(cfg, opts)), opts.seed);
    OutputTable table{
        {"n", "M", "order", "estimate", "std_error", "haar", "difference"}, {}};
    for (int n : n_list) {
        EnsembleConfig c = base;
        c.n = n;
        c.M = m_list.back();
        c.seed = derive_seed(opts.seed, "frame-potential", n);
        auto curve = frame_potential_curve(c, m_list, opts.workers);
        for (const auto& pt : curve) {
            for (const FramePotentialEstimate* est : {&pt.f1, &pt.f2}) {
                const double haar = haar_frame_potential(n, est->order);
                table.rows.push_back({fmt_int(n), fmt_int(pt.M), fmt_int(est->order),
                                      format_value(est->value), format_value(est->std_error),
                                      format_value(haar), format_value(est->value - haar)});
            }
        }
    }
    manifest.write_table(opts.out, "frame_potential", table, opts.format);
    manifest.finalize(opts.out, std::chrono::duration<double>(
                                    std::chrono::steady_clock::now() - t0).count());
    return 0;
}

OutputTable scan_table(const ScanResult& result) {
    OutputTable table{{"n", "M", "phase", "statistic", "value", "uncertainty"}, {}};
    for (const ScanRow& r : result.rows)
        table.rows.push_back({fmt_int(r.n), fmt_int(r.M), r.phase, stat_name(r.kind),
                              format_value(r.value), format_value(r.uncertainty)});
    return table;
}

ScanGrid parse_grid(const json& cfg, const CommonOpts& opts) {
    ScanGrid grid;
    grid.model = parse_model(cfg);
    const PhaseDefaults defaults = model_defaults(grid.model);
    grid.B = defaults.B;
    grid.n_list = cfg.value("n_list", std::vector<int>{5});
    grid.m_list = cfg.value("M_list", std::vector<int>{1, 2, 4, 8, 16, 32});
    grid.realizations = cfg.value("realizations", 400);
    grid.with_frame_potentials = cfg.value("frame_potentials", false);
    grid.initial = (grid.model == ModelKind::NearestNeighbor) ? InitialStateKind::AllZero
                                                              : InitialStateKind::NeelX;
    if (cfg.contains("observable")) {
        auto obs = cfg["observable"].get<std::vector<int>>();
        if (obs.size() != 2) throw CLI::ValidationError("observable", "expected two qubits");
        grid.obs_qubit_a = obs[0];
        grid.obs_qubit_b = obs[1];
    }
    if (cfg.contains("cut")) grid.cut = cfg["cut"].get<int>();
    grid.seed = opts.seed;
    return grid;
}

int run_scan_cmd(const CommonOpts& opts, bool entropy_mode) {
    json cfg = load_config(opts);
    ScanGrid grid = parse_grid(cfg, opts);
    grid.with_entropy = entropy_mode || cfg.value("entropy", false);
    const std::vector<std::string> phases =
        cfg.value("phases", std::vector<std::string>{"thermal", "mbl"});

    auto t0 = std::chrono::steady_clock::now();
    RunManifest manifest(config_hash(canonical_config(cfg, opts)), opts.seed);
    ScanResult all;
    all.seed = opts.seed;
    for (const std::string& phase : phases) {
        grid.phase = phase;
        grid.W = cfg.contains("W") ? cfg["W"].get<double>()
                                   : phase_disorder(grid.model, phase);
        ScanResult res = entropy_mode ? entanglement_scan(grid, opts.workers)
                                      : loss_variance_scan(grid, opts.workers);
        all.rows.insert(all.rows.end(), res.rows.begin(), res.rows.end());
    }
    manifest.write_table(opts.out, entropy_mode ? "entropy_scan" : "bp_scan",
                         scan_table(all), opts.format);
    manifest.finalize(opts.out, std::chrono::duration<double>(
                                    std::chrono::steady_clock::now() - t0).count());
    return 0;
}

int run_regimes(const CommonOpts& opts) {
    json cfg = load_config(opts);
    const ModelKind model = parse_model(cfg);
    const std::vector<int> n_list = cfg.value("n_list", std::vector<int>{6, 7, 8});
    std::vector<int> m_list;
    if (cfg.contains("M_list")) {
        m_list = cfg["M_list"].get<std::vector<int>>();
    } else {
        for (int m = 1; m <= cfg.value("M_max", 60); ++m) m_list.push_back(m);
    }
    const int realizations = cfg.value("realizations", 100);
    const double delta = cfg.value("delta", 0.1);

    auto t0 = std::chrono::steady_clock::now();
    RunManifest manifest(config_hash(canonical_config(cfg, opts)), opts.seed);
    RegimeScanResult res =
        regime_scan(n_list, m_list, realizations, opts.seed, opts.workers, delta, model);
    ScanResult all;
    all.rows = res.thermal.rows;
    all.rows.insert(all.rows.end(), res.mbl.rows.begin(), res.mbl.rows.end());
    manifest.write_table(opts.out, "regime_scan", scan_table(all), opts.format);

    OutputTable table{{"n", "series", "M_sat_thermal", "M_sat_mbl", "regime_II_width"}, {}};
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        const RegimeReport& v = res.variance_reports[i];
        const RegimeReport& e = res.entropy_reports[i];
        table.rows.push_back({fmt_int(v.n), "loss-variance", fmt_int(v.m_sat_thermal),
                              fmt_int(v.m_sat_mbl), fmt_int(v.width())});
        table.rows.push_back({fmt_int(e.n), "entropy-mean", fmt_int(e.m_sat_thermal),
                              fmt_int(e.m_sat_mbl), fmt_int(e.width())});
        std::cout << "n=" << v.n << " M_sat(thermal)=" << v.m_sat_thermal
                  << " M_sat(MBL)=" << v.m_sat_mbl << " width=" << v.width() << "\n";
    }
    manifest.write_table(opts.out, "regimes", table, opts.format);
    manifest.finalize(opts.out, std::chrono::duration<double>(
                                    std::chrono::steady_clock::now() - t0).count());
    return 0;
}

int run_vqe(const CommonOpts& opts) {
    json cfg = load_config(opts);
    const int example = cfg.value("example", 1);
    const int quenches = cfg.value("quenches", 6);
    const int instances = cfg.value("instances", 20);
    const int epochs = cfg.value("epochs", 100);
    const int n = cfg.value("n", 7);

    auto t0 = std::chrono::steady_clock::now();
    RunManifest manifest(config_hash(canonical_config(cfg, opts)), opts.seed);
    VqeBenchmarkResult res = vqe_benchmark(example, quenches, instances, epochs,
                                           parse_optimizer(cfg), opts.seed, opts.workers, n);

    OutputTable inst_table{{"instance", "exact_energy", "best_energy", "relative_error"}, {}};
    OutputTable epoch_table{{"instance", "epoch", "loss"}, {}};
    for (std::size_t i = 0; i < res.instances.size(); ++i) {
        const auto& inst = res.instances[i];
        inst_table.rows.push_back({fmt_int(i), format_value(inst.exact_energy),
                                   format_value(inst.best_energy),
                                   format_value(inst.relative_error)});
        for (std::size_t e = 0; e < inst.epoch_loss.size(); ++e)
            epoch_table.rows.push_back(
                {fmt_int(i), fmt_int(e + 1), format_value(inst.epoch_loss[e])});
    }
    OutputTable summary{{"example", "quenches", "instances", "epochs",
                         "mean_relative_error", "std_relative_error"},
                        {{fmt_int(example), fmt_int(quenches), fmt_int(instances),
                          fmt_int(epochs), format_value(res.mean_relative_error),
                          format_value(res.std_relative_error)}}};
    manifest.write_table(opts.out, "vqe_instances", inst_table, opts.format);
    manifest.write_table(opts.out, "vqe_epochs", epoch_table, opts.format);
    manifest.write_table(opts.out, "vqe_summary", summary, opts.format);
    manifest.finalize(opts.out, std::chrono::duration<double>(
                                    std::chrono::steady_clock::now() - t0).count());
    std::cout << "mean relative error = " << res.mean_relative_error << " (std "
              << res.std_relative_error << ")\n";
    return 0;
}

int run_maxcut(const CommonOpts& opts) {
    json cfg = load_config(opts);
    const ModelKind ansatz = parse_model(cfg, "ansatz");
    const int quenches = cfg.value("quenches", 6);
    const int instances = cfg.value("instances", 20);
    const int epochs = cfg.value("epochs", 50);
    const double threshold = cfg.value("threshold", 0.01);

    auto t0 = std::chrono::steady_clock::now();
    RunManifest manifest(config_hash(canonical_config(cfg, opts)), opts.seed);
    MaxCutBenchmarkResult res = maxcut_benchmark(ansatz, quenches, instances, epochs,
                                                 threshold, parse_optimizer(cfg), opts.seed,
                                                 opts.workers);

    OutputTable oracle{{"bitstring", "energy", "cut_value"}, {}};
    const MaxCutInstance graph = paper_maxcut_instance();
    for (long s : res.oracle.optimal_bitstrings) {
        std::string bits;
        for (int b = graph.vertices() - 1; b >= 0; --b) bits += ((s >> b) & 1) ? '1' : '0';
        oracle.rows.push_back(
            {bits, format_value(res.oracle.min_energy), format_value(cut_value(graph, s))});
    }
    OutputTable inst_table{{"instance", "ratio", "empty_selection"}, {}};
    OutputTable epoch_table{{"instance", "epoch", "loss"}, {}};
    for (std::size_t i = 0; i < res.instances.size(); ++i) {
        const auto& inst = res.instances[i];
        inst_table.rows.push_back(
            {fmt_int(i), format_value(inst.ratio), inst.empty_selection ? "1" : "0"});
        for (std::size_t e = 0; e < inst.epoch_loss.size(); ++e)
            epoch_table.rows.push_back(
                {fmt_int(i), fmt_int(e + 1), format_value(inst.epoch_loss[e])});
    }
    OutputTable summary{{"ansatz", "quenches", "instances", "epochs", "threshold",
                         "max_cut", "mean_ratio", "std_ratio"},
                        {{cfg.value("ansatz", std::string("nn")), fmt_int(quenches),
                          fmt_int(instances), fmt_int(epochs), format_value(threshold),
                          format_value(res.oracle.max_cut), format_value(res.mean_ratio),
                          format_value(res.std_ratio)}}};
    manifest.write_table(opts.out, "maxcut_oracle", oracle, opts.format);
    manifest.write_table(opts.out, "maxcut_instances", inst_table, opts.format);
    manifest.write_table(opts.out, "maxcut_epochs", epoch_table, opts.format);
    manifest.write_table(opts.out, "maxcut_summary", summary, opts.format);
    manifest.finalize(opts.out, std::chrono::duration<double>(
                                    std::chrono::steady_clock::now() - t0).count());
    std::cout << "mean approximation ratio = " << res.mean_ratio << " (std "
              << res.std_ratio << ")\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Disordered-Ising quench-ansatz experiments"};
    app.require_subcommand(1);

    CommonOpts opts[7];
    const char* names[7] = {"level-stats", "frame-potential", "bp-scan", "entropy-scan",
                            "regimes", "vqe", "maxcut"};
    const char* descs[7] = {"level-spacing statistics and phase labels per disorder strength",
                            "frame-potential curves vs quench depth",
                            "loss-variance scan with expressivity bounds",
                            "entanglement-entropy scan",
                            "saturation onsets and regime-II widths",
                            "ground-state benchmark with MBL initialisation",
                            "Max-Cut benchmark with MBL initialisation"};
    for (int i = 0; i < 7; ++i) add_common(app.add_subcommand(names[i], descs[i]), opts[i]);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("level-stats")) return run_level_stats(opts[0]);
        if (app.got_subcommand("frame-potential")) return run_frame_potential(opts[1]);
        if (app.got_subcommand("bp-scan")) return run_scan_cmd(opts[2], false);
        if (app.got_subcommand("entropy-scan")) return run_scan_cmd(opts[3], true);
        if (app.got_subcommand("regimes")) return run_regimes(opts[4]);
        if (app.got_subcommand("vqe")) return run_vqe(opts[5]);
        if (app.got_subcommand("maxcut")) return run_maxcut(opts[6]);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
