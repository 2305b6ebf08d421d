#include "quenchscape/expressivity.hpp"

#include <cmath>
#include <stdexcept>

#include "quenchscape/parallel.hpp"
#include "quenchscape/rng.hpp"

namespace qsc {

namespace {

QuenchSchedule schedule_for(const EnsembleConfig& c) {
    QuenchSchedule s;
    s.model = c.model;
    s.J = c.J;
    s.B = c.B;
    s.alpha = c.alpha;
    return s;
}

struct PairSums {
    long n_states = 0;
    long pairs = 0;
    double sum_f1 = 0.0, sum_f1_sq = 0.0;
    double sum_f2 = 0.0, sum_f2_sq = 0.0;
    std::vector<double> row_f1, row_f2;  // per-state sums over partners
};

// Pairwise fidelity moments over all unordered pairs via blocked Gram
// products. Single-threaded with a fixed accumulation order so the result
// is bit-stable across worker counts.
PairSums pair_sums(const Mat& states) {
    const long n = states.cols();
    PairSums ps;
    ps.n_states = n;
    ps.pairs = n * (n - 1) / 2;
    ps.row_f1.assign(n, 0.0);
    ps.row_f2.assign(n, 0.0);
    const long bs = 512;
    for (long i0 = 0; i0 < n; i0 += bs) {
        const long ib = std::min(bs, n - i0);
        for (long j0 = i0; j0 < n; j0 += bs) {
            const long jb = std::min(bs, n - j0);
            Mat g = states.middleCols(i0, ib).adjoint() * states.middleCols(j0, jb);
            for (long j = 0; j < jb; ++j) {
                const long lim = (j0 == i0) ? j : ib;
                for (long i = 0; i < lim; ++i) {
                    double f = std::norm(g(i, j));
                    double f2 = f * f;
                    ps.sum_f1 += f;
                    ps.sum_f1_sq += f2;
                    ps.sum_f2 += f2;
                    ps.sum_f2_sq += f2 * f2;
                    ps.row_f1[i0 + i] += f;
                    ps.row_f1[j0 + j] += f;
                    ps.row_f2[i0 + i] += f2;
                    ps.row_f2[j0 + j] += f2;
                }
            }
        }
    }
    return ps;
}

FramePotentialEstimate estimate_from_sums(const PairSums& ps, int order) {
    const double sum = (order == 1) ? ps.sum_f1 : ps.sum_f2;
    const double sum_sq = (order == 1) ? ps.sum_f1_sq : ps.sum_f2_sq;
    const auto& rows = (order == 1) ? ps.row_f1 : ps.row_f2;
    FramePotentialEstimate est;
    est.order = order;
    est.pair_count = ps.pairs;
    est.value = sum / static_cast<double>(ps.pairs);
    if (ps.pairs > 1) {
        double var = (sum_sq - sum * sum / ps.pairs) / (ps.pairs - 1);
        est.std_error_naive = std::sqrt(std::max(var, 0.0) / ps.pairs);
    }
    // U-statistic error: variance of per-state projections g_k = mean_l f_kl.
    const long n = ps.n_states;
    if (n > 2) {
        double mean_g = 0.0;
        for (double r : rows) mean_g += r / (n - 1);
        mean_g /= n;
        double var_g = 0.0;
        for (double r : rows) {
            double d = r / (n - 1) - mean_g;
            var_g += d * d;
        }
        var_g /= (n - 1);
        est.std_error = 2.0 * std::sqrt(var_g / n);
    }
    est.std_error = std::max(est.std_error, est.std_error_naive);
    return est;
}

Mat states_matrix(const std::vector<StateVector>& states) {
    if (states.empty()) throw std::invalid_argument("frame_potential: empty sample");
    Mat m(states.front().dim(), static_cast<long>(states.size()));
    for (std::size_t k = 0; k < states.size(); ++k) m.col(k) = states[k].amplitudes();
    return m;
}

}  // namespace

EnsembleSample sample_ensemble(const EnsembleConfig& c, int workers) {
    if (c.N < 2) throw std::invalid_argument("sample_ensemble: need N >= 2");
    if (c.M < 0) throw std::invalid_argument("sample_ensemble: M must be >= 0");
    EnsembleSample sample;
    sample.config = c;
    const StateVector psi0 = initial_state(c.initial, c.n);
    sample.states.assign(c.N, psi0);
    const QuenchSchedule base = schedule_for(c);
    parallel_for(c.N, workers, [&](std::size_t k) {
        Rng rng = make_rng(derive_seed(c.seed, "ensemble-draw", k));
        QuenchSchedule sched = base;
        sched.quenches.resize(c.M);
        for (int m = 0; m < c.M; ++m)
            sched.quenches[m] = Quench{sample_disorder(c.disorder, c.n, rng), c.t, {}};
        sample.states[k] = apply_ansatz(sched, c.n, psi0);
    });
    return sample;
}

FramePotentialEstimate frame_potential(const EnsembleSample& sample, int order) {
    if (order != 1 && order != 2)
        throw std::invalid_argument("frame_potential: order must be 1 or 2");
    if (sample.states.size() < 2)
        throw std::invalid_argument("frame_potential: need at least 2 states");
    return estimate_from_sums(pair_sums(states_matrix(sample.states)), order);
}

std::vector<FrameCurvePoint> frame_potential_curve(const EnsembleConfig& c,
                                                   const std::vector<int>& m_list,
                                                   int workers) {
    if (c.N < 2) throw std::invalid_argument("frame_potential_curve: need N >= 2");
    for (std::size_t i = 1; i < m_list.size(); ++i)
        if (m_list[i] <= m_list[i - 1])
            throw std::invalid_argument("frame_potential_curve: M list must be increasing");
    const StateVector psi0 = initial_state(c.initial, c.n);
    Mat states(psi0.dim(), c.N);
    for (int k = 0; k < c.N; ++k) states.col(k) = psi0.amplitudes();
    std::vector<Rng> rngs;
    rngs.reserve(c.N);
    for (int k = 0; k < c.N; ++k)
        rngs.push_back(make_rng(derive_seed(c.seed, "ensemble-draw", k)));
    const QuenchSchedule base = schedule_for(c);

    std::vector<FrameCurvePoint> curve;
    int depth = 0;
    for (int m_target : m_list) {
        const int steps = m_target - depth;
        parallel_for(c.N, workers, [&](std::size_t k) {
            StateVector psi(c.n, states.col(k));
            for (int s = 0; s < steps; ++s) {
                Quench q{sample_disorder(c.disorder, c.n, rngs[k]), c.t, {}};
                psi = apply_quench(base, c.n, q, psi);
            }
            states.col(k) = psi.amplitudes();
        });
        depth = m_target;
        PairSums ps = pair_sums(states);
        curve.push_back({m_target, estimate_from_sums(ps, 1), estimate_from_sums(ps, 2)});
    }
    return curve;
}

double haar_frame_potential(int n, int order) {
    const double d = std::pow(2.0, n);
    if (order == 1) return 1.0 / d;
    if (order == 2) return 2.0 / (d * (d + 1.0));
    throw std::invalid_argument("haar_frame_potential: order must be 1 or 2");
}

double haar_loss_variance(const DenseHermitian& op, int n) {
    const double d = std::pow(2.0, n);
    if (op.dim() != static_cast<long>(d))
        throw std::invalid_argument("haar_loss_variance: dimension mismatch");
    const double tr = op.trace();
    const double tr2 = op.hs_norm() * op.hs_norm();  // Tr[O^2] for Hermitian O
    return (tr * tr + tr2) / (d * (d + 1.0)) - tr * tr / (d * d);
}

namespace {

double bound_impl(double f1, double f2, const DenseHermitian& op, int n, double k) {
    const double f1_haar = haar_frame_potential(n, 1);
    const double f2_haar = haar_frame_potential(n, 2);
    const double d1 = std::max(f1 - f1_haar, 0.0);
    const double d2 = std::max(f2 - f2_haar, 0.0);
    const double norm2 = op.hs_norm();
    const double first = (std::sqrt(d2) - f1 + f1_haar) * std::pow(norm2, 2.0 * k);
    const double second = op.trace() / std::pow(2.0, n - 1) * std::sqrt(d1) * norm2;
    return haar_loss_variance(op, n) + first + second;
}

}  // namespace

double variance_bound(double f1, double f2, const DenseHermitian& op, int n) {
    return bound_impl(f1, f2, op, n, 1.0);
}

double empirical_bound(double f1, double f2, const DenseHermitian& op, int n, double k) {
    return bound_impl(f1, f2, op, n, k);
}

double moment_deviation_norm(const std::vector<StateVector>& states, int order) {
    if (states.empty()) throw std::invalid_argument("moment_deviation_norm: empty ensemble");
    if (order != 1 && order != 2)
        throw std::invalid_argument("moment_deviation_norm: order must be 1 or 2");
    const int n = states.front().n_qubits();
    if (order == 2 && n > 6)
        throw std::invalid_argument("moment_deviation_norm: n too large for dense 4^n operators");
    const long d = states.front().dim();
    const long dd = (order == 1) ? d : d * d;

    Mat avg = Mat::Zero(dd, dd);
    for (const StateVector& psi : states) {
        if (psi.dim() != d)
            throw std::invalid_argument("moment_deviation_norm: inconsistent dimensions");
        if (order == 1) {
            avg.noalias() += psi.amplitudes() * psi.amplitudes().adjoint();
        } else {
            Vec doubled(dd);
            for (long i = 0; i < d; ++i)
                doubled.segment(i * d, d) = psi.amplitudes()[i] * psi.amplitudes();
            avg.noalias() += doubled * doubled.adjoint();
        }
    }
    avg /= static_cast<double>(states.size());

    Mat haar;
    if (order == 1) {
        haar = Mat::Identity(d, d) / static_cast<double>(d);
    } else {
        // Haar 2nd moment of a pure state: (I + SWAP) / (d(d+1)).
        haar = Mat::Identity(dd, dd);
        for (long i = 0; i < d; ++i)
            for (long j = 0; j < d; ++j) haar(i * d + j, j * d + i) += 1.0;
        haar /= static_cast<double>(d) * (d + 1.0);
    }
    return (haar - avg).norm();
}

}  // namespace qsc
