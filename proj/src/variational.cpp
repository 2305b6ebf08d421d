#include "quenchscape/variational.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "quenchscape/rng.hpp"

namespace qsc {

int TrainableParams::trainable_count() const {
    int count = 0;
    if (train_h) count += quenches() * sites();
    if (train_b && b) count += quenches();
    if (train_t && log_t) count += quenches();
    return count;
}

void TrainableParams::validate() const {
    if (b && b->size() != quenches())
        throw std::invalid_argument("TrainableParams: b length must equal quench count");
    if (log_t && log_t->size() != quenches())
        throw std::invalid_argument("TrainableParams: log_t length must equal quench count");
    if (train_b && !b) throw std::invalid_argument("TrainableParams: train_b without b");
    if (train_t && !log_t) throw std::invalid_argument("TrainableParams: train_t without log_t");
}

QuenchSchedule schedule_from_params(const TrainableParams& params, const LossSpec& spec) {
    params.validate();
    if (params.sites() != spec.n && params.quenches() > 0)
        throw std::invalid_argument("schedule_from_params: site count mismatch");
    QuenchSchedule sched;
    sched.model = spec.ansatz_model;
    sched.J = spec.J;
    sched.B = spec.B;
    sched.alpha = spec.alpha;
    sched.quenches.resize(params.quenches());
    for (int m = 0; m < params.quenches(); ++m) {
        Quench& q = sched.quenches[m];
        q.h = params.h.row(m);
        q.t = params.log_t ? std::exp((*params.log_t)[m]) : 1.0;
        if (params.b) q.B = (*params.b)[m];
    }
    return sched;
}

double loss(const TrainableParams& params, const LossSpec& spec) {
    if (spec.target.rows() != (1L << spec.n))
        throw std::invalid_argument("loss: target dimension mismatch");
    const StateVector psi0 = initial_state(spec.initial, spec.n);
    const StateVector psi = apply_ansatz(schedule_from_params(params, spec), spec.n, psi0);
    cplx v = psi.amplitudes().dot(spec.target * psi.amplitudes());
    return v.real();
}

namespace {

// Flattened view over the trainable coordinates: h row-major, then b, then log_t.
double* coordinate(TrainableParams& p, int idx) {
    int offset = 0;
    if (p.train_h) {
        const int nh = p.quenches() * p.sites();
        if (idx < nh) return &p.h(idx / p.sites(), idx % p.sites());
        offset = nh;
    }
    if (p.train_b && p.b) {
        if (idx - offset < p.quenches()) return &(*p.b)[idx - offset];
        offset += p.quenches();
    }
    if (p.train_t && p.log_t) return &(*p.log_t)[idx - offset];
    throw std::out_of_range("TrainableParams: coordinate index out of range");
}

}  // namespace

RealVec finite_diff_gradient(const TrainableParams& params, const LossSpec& spec, double eps) {
    if (eps <= 0.0) throw std::invalid_argument("finite_diff_gradient: eps must be > 0");
    params.validate();
    TrainableParams work = params;
    const int count = params.trainable_count();
    RealVec grad(count);
    for (int i = 0; i < count; ++i) {
        double* x = coordinate(work, i);
        const double x0 = *x;
        *x = x0 + eps;
        const double lp = loss(work, spec);
        *x = x0 - eps;
        const double lm = loss(work, spec);
        *x = x0;
        grad[i] = (lp - lm) / (2.0 * eps);
    }
    return grad;
}

OptimizeTrajectory optimize(const LossSpec& spec, const TrainableParams& init,
                            const OptimizerConfig& cfg) {
    if (cfg.learning_rate <= 0.0 || cfg.fd_eps <= 0.0 || cfg.epochs < 1 ||
        cfg.log_t_bound <= 0.0)
        throw std::invalid_argument("optimize: invalid config");
    init.validate();

    TrainableParams params = init;
    const int count = params.trainable_count();
    RealVec velocity = RealVec::Zero(count);

    OptimizeTrajectory traj;
    traj.initial_loss = loss(params, spec);
    traj.best_loss = traj.initial_loss;
    traj.best_params = params;
    traj.epoch_loss.reserve(cfg.epochs);

    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        RealVec grad = finite_diff_gradient(params, spec, cfg.fd_eps);
        velocity = cfg.momentum * velocity - cfg.learning_rate * grad;
        for (int i = 0; i < count; ++i) *coordinate(params, i) += velocity[i];
        if (params.train_t && params.log_t)
            for (int m = 0; m < params.quenches(); ++m)
                (*params.log_t)[m] = std::clamp((*params.log_t)[m], -cfg.log_t_bound,
                                                cfg.log_t_bound);
        double l = loss(params, spec);
        if (!std::isfinite(l)) throw std::runtime_error("optimize: loss became non-finite");
        traj.epoch_loss.push_back(l);
        if (l < traj.best_loss) {
            traj.best_loss = l;
            traj.best_params = params;
        }
    }
    const StateVector psi0 = initial_state(spec.initial, spec.n);
    traj.best_state =
        apply_ansatz(schedule_from_params(traj.best_params, spec), spec.n, psi0);
    return traj;
}

namespace {

TrainableParams phase_init(ModelKind model, int n, int m_quenches, double w,
                           std::uint64_t seed) {
    const PhaseDefaults defaults = model_defaults(model);
    TrainableParams p;
    p.h.resize(m_quenches, n);
    Rng rng = make_rng(derive_seed(seed, "phase-init"));
    for (int m = 0; m < m_quenches; ++m)
        p.h.row(m) = sample_disorder({w}, n, rng);
    p.b = RealVec::Constant(m_quenches, defaults.B);
    p.log_t = RealVec::Zero(m_quenches);  // t_m = 1/J
    p.train_h = true;
    p.train_b = true;
    p.train_t = true;
    return p;
}

}  // namespace

TrainableParams mbl_init(ModelKind model, int n, int m_quenches, std::uint64_t seed) {
    return phase_init(model, n, m_quenches, model_defaults(model).W_mbl, seed);
}

TrainableParams thermal_init(ModelKind model, int n, int m_quenches, std::uint64_t seed) {
    return phase_init(model, n, m_quenches, model_defaults(model).W_thermal, seed);
}

MaxCutInstance::MaxCutInstance(Eigen::MatrixXd w) : adjacency(std::move(w)) {
    if (adjacency.rows() != adjacency.cols())
        throw std::invalid_argument("MaxCutInstance: adjacency must be square");
    if ((adjacency - adjacency.transpose()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("MaxCutInstance: adjacency must be symmetric");
    if (adjacency.diagonal().cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("MaxCutInstance: diagonal must be zero");
}

MaxCutInstance paper_maxcut_instance() {
    Eigen::MatrixXd w(5, 5);
    w << 0, 1, -1, 0, 1,
         1, 0, 1, 0, 0,
        -1, 1, 0, -1, 1,
         0, 0, -1, 0, -1,
         1, 0, 1, -1, 0;
    return MaxCutInstance(w);
}

namespace {

inline double z_of_bit(long s, int vertex, int n) {
    return ((s >> (n - 1 - vertex)) & 1) ? -1.0 : 1.0;
}

}  // namespace

RealVec maxcut_diagonal(const MaxCutInstance& inst) {
    const int n = inst.vertices();
    RealVec d(1L << n);
    for (long s = 0; s < d.size(); ++s) {
        double e = 0.0;
        for (int i = 1; i < n; ++i)
            for (int j = 0; j < i; ++j)
                e += inst.adjacency(i, j) * z_of_bit(s, i, n) * z_of_bit(s, j, n);
        d[s] = e;
    }
    return d;
}

DenseHermitian maxcut_hamiltonian(const MaxCutInstance& inst) {
    return DenseHermitian(maxcut_diagonal(inst).cast<cplx>().asDiagonal());
}

double cut_value(const MaxCutInstance& inst, long bitstring) {
    const int n = inst.vertices();
    double cut = 0.0;
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < i; ++j)
            cut += inst.adjacency(i, j) *
                   (1.0 - z_of_bit(bitstring, i, n) * z_of_bit(bitstring, j, n)) / 2.0;
    return cut;
}

MaxCutSolution brute_force_maxcut(const MaxCutInstance& inst) {
    const RealVec diag = maxcut_diagonal(inst);
    MaxCutSolution sol;
    sol.min_energy = diag.minCoeff();
    for (long s = 0; s < diag.size(); ++s) {
        if (diag[s] <= sol.min_energy + 1e-12) sol.optimal_bitstrings.push_back(s);
        sol.max_cut = std::max(sol.max_cut, cut_value(inst, s));
    }
    return sol;
}

std::vector<SelectedBitstring> maxcut_solutions(const StateVector& psi, double threshold) {
    if (threshold <= 0.0 || threshold > 1.0)
        throw std::invalid_argument("maxcut_solutions: threshold must be in (0, 1]");
    std::vector<SelectedBitstring> out;
    for (long s = 0; s < psi.dim(); ++s) {
        double p = std::norm(psi.amplitudes()[s]);
        if (p >= threshold) out.push_back({s, p});
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.probability > b.probability; });
    return out;
}

ApproximationRatio approximation_ratio(const StateVector& psi, const MaxCutInstance& inst,
                                       double threshold) {
    auto selected = maxcut_solutions(psi, threshold);
    ApproximationRatio result;
    if (selected.empty()) {
        result.empty_selection = true;
        Eigen::Index best = 0;
        psi.amplitudes().cwiseAbs2().maxCoeff(&best);
        selected.push_back({static_cast<long>(best), std::norm(psi.amplitudes()[best])});
    }
    const MaxCutSolution sol = brute_force_maxcut(inst);
    double best_cut = cut_value(inst, selected.front().bitstring);
    for (const auto& s : selected) best_cut = std::max(best_cut, cut_value(inst, s.bitstring));
    result.ratio = best_cut / sol.max_cut;
    return result;
}

}  // namespace qsc
