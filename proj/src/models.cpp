#include "quenchscape/models.hpp"

#include <cmath>
#include <stdexcept>

namespace qsc {

namespace {

// z_i(s) = +1 when the bit of qubit i (1-based, MSB first) is 0.
inline double z_sign(long state, int qubit, int n) {
    return ((state >> qubit_bit_shift(qubit, n)) & 1) ? -1.0 : 1.0;
}

}  // namespace

PhaseDefaults model_defaults(ModelKind model) {
    if (model == ModelKind::NearestNeighbor) return {5.0, 50.0, -2.0};
    return {0.6, 15.0, 0.0};
}

Mat nn_ising_matrix(const NNIsingParams& p) {
    // n = 1 is allowed: the periodic coupling degenerates to the constant J.
    if (p.n < 1) throw std::invalid_argument("build_nn_ising: need n >= 1");
    if (p.h.size() != p.n) throw std::invalid_argument("build_nn_ising: h must have length n");
    const long dim = 1L << p.n;
    Mat H = Mat::Zero(dim, dim);
    for (long s = 0; s < dim; ++s) {
        double diag = 0.0;
        for (int i = 1; i <= p.n; ++i) {
            int j = (i % p.n) + 1;  // periodic: Z_{n+1} = Z_1
            diag += p.J * z_sign(s, i, p.n) * z_sign(s, j, p.n);
            diag += p.h[i - 1] * z_sign(s, i, p.n);
        }
        H(s, s) = diag;
        if (p.B != 0.0)
            for (int i = 1; i <= p.n; ++i) H(s ^ (1L << qubit_bit_shift(i, p.n)), s) += p.B;
    }
    return H;
}

Mat long_range_ising_matrix(const LongRangeIsingParams& p) {
    if (p.n < 2) throw std::invalid_argument("build_long_range_ising: need n >= 2");
    if (p.alpha <= 0.0) throw std::invalid_argument("build_long_range_ising: alpha must be > 0");
    if (p.h.size() != p.n)
        throw std::invalid_argument("build_long_range_ising: h must have length n");
    const long dim = 1L << p.n;
    Mat H = Mat::Zero(dim, dim);
    for (long s = 0; s < dim; ++s) {
        double diag = 0.0;
        for (int i = 2; i <= p.n; ++i)
            for (int j = 1; j < i; ++j)
                diag += p.J * z_sign(s, i, p.n) * z_sign(s, j, p.n) /
                        std::pow(static_cast<double>(i - j), p.alpha);
        H(s, s) = diag;
        for (int i = 1; i <= p.n; ++i) {
            double x_coeff = p.B + p.h[i - 1];
            if (x_coeff != 0.0) H(s ^ (1L << qubit_bit_shift(i, p.n)), s) += x_coeff;
        }
    }
    return H;
}

DenseHermitian build_nn_ising(const NNIsingParams& p) {
    return DenseHermitian(nn_ising_matrix(p));
}

DenseHermitian build_long_range_ising(const LongRangeIsingParams& p) {
    return DenseHermitian(long_range_ising_matrix(p));
}

RealVec sample_disorder(const DisorderSpec& spec, int n, Rng& rng) {
    if (spec.W < 0.0) throw std::invalid_argument("sample_disorder: W must be >= 0");
    RealVec h(n);
    std::uniform_real_distribution<double> dist(-spec.W / 2.0, spec.W / 2.0);
    for (int i = 0; i < n; ++i) h[i] = spec.W == 0.0 ? 0.0 : dist(rng);
    return h;
}

StateVector initial_state(InitialStateKind kind, int n) {
    if (n < 1) throw std::invalid_argument("initial_state: need n >= 1");
    if (kind == InitialStateKind::AllZero) return StateVector::basis_state(n, 0);
    // Neel-x: |+ - + - ...>, qubit 1 gets |+>.
    const long dim = 1L << n;
    Vec amp(dim);
    const double scale = std::pow(2.0, -0.5 * n);
    for (long s = 0; s < dim; ++s) {
        int minus_ones = 0;
        for (int i = 2; i <= n; i += 2)  // even qubits carry |->
            if ((s >> qubit_bit_shift(i, n)) & 1) ++minus_ones;
        amp[s] = (minus_ones % 2 ? -scale : scale);
    }
    return StateVector(n, std::move(amp));
}

StateVector apply_quench(const QuenchSchedule& schedule, int n, const Quench& q,
                         const StateVector& psi) {
    const double B = q.B.value_or(schedule.B);
    Mat H;
    if (schedule.model == ModelKind::NearestNeighbor) {
        H = nn_ising_matrix({n, schedule.J, B, q.h});
    } else {
        H = long_range_ising_matrix({n, schedule.J, B, schedule.alpha, q.h});
    }
    return evolve(diagonalize_raw(H), q.t, psi);
}

StateVector apply_ansatz(const QuenchSchedule& schedule, int n, const StateVector& psi0) {
    if (psi0.n_qubits() != n) throw std::invalid_argument("apply_ansatz: dimension mismatch");
    StateVector psi = psi0;
    for (const Quench& q : schedule.quenches) {
        if (q.h.size() != n) throw std::invalid_argument("apply_ansatz: quench h length mismatch");
        psi = apply_quench(schedule, n, q, psi);
    }
    return psi;
}

RealVec pauli_zz_diagonal(int n, int qubit_a, int qubit_b) {
    const long dim = 1L << n;
    RealVec d(dim);
    for (long s = 0; s < dim; ++s) d[s] = z_sign(s, qubit_a, n) * z_sign(s, qubit_b, n);
    return d;
}

DenseHermitian pauli_zz_observable(int n, int qubit_a, int qubit_b) {
    return DenseHermitian(pauli_zz_diagonal(n, qubit_a, qubit_b).cast<cplx>().asDiagonal());
}

}  // namespace qsc
