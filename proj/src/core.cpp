#include "quenchscape/core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <lapacke.h>

namespace qsc {

StateVector::StateVector(int n_qubits, Vec amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
    if (n_qubits_ < 1) throw std::invalid_argument("StateVector: need at least one qubit");
    if (amplitudes_.size() != (1L << n_qubits_))
        throw std::invalid_argument("StateVector: amplitude length must be 2^n");
    if (std::abs(amplitudes_.squaredNorm() - 1.0) > 1e-10)
        throw std::invalid_argument("StateVector: not normalized");
}

StateVector StateVector::basis_state(int n_qubits, long index) {
    Vec amp = Vec::Zero(1L << n_qubits);
    amp[index] = 1.0;
    return StateVector(n_qubits, std::move(amp));
}

DenseHermitian::DenseHermitian(Mat entries, double tol) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols())
        throw std::invalid_argument("DenseHermitian: matrix must be square");
    if ((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() > tol)
        throw std::invalid_argument("DenseHermitian: matrix is not Hermitian within tolerance");
}

DensityMatrix::DensityMatrix(Mat entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols())
        throw std::invalid_argument("DensityMatrix: matrix must be square");
    if ((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("DensityMatrix: not Hermitian");
    if (std::abs(entries_.trace().real() - 1.0) > 1e-10 ||
        std::abs(entries_.trace().imag()) > 1e-10)
        throw std::invalid_argument("DensityMatrix: trace must be 1");
    Eigen::SelfAdjointEigenSolver<Mat> es(entries_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10)
        throw std::invalid_argument("DensityMatrix: negative eigenvalue");
}

Spectrum diagonalize_raw(const Mat& h) {
    const lapack_int n = static_cast<lapack_int>(h.rows());
    Spectrum spec;
    spec.eigenvectors = h;  // zheevd overwrites in place with eigenvectors
    spec.eigenvalues.resize(n);
    lapack_int info = LAPACKE_zheevd(
        LAPACK_COL_MAJOR, 'V', 'L', n,
        reinterpret_cast<lapack_complex_double*>(spec.eigenvectors.data()), n,
        spec.eigenvalues.data());
    if (info != 0) throw std::runtime_error("diagonalize: zheevd failed");
    return spec;
}

Spectrum diagonalize(const DenseHermitian& h) { return diagonalize_raw(h.matrix()); }

StateVector evolve(const Spectrum& spec, double t, const StateVector& psi) {
    if (spec.dim() != psi.dim())
        throw std::invalid_argument("evolve: dimension mismatch");
    if (!std::isfinite(t)) throw std::invalid_argument("evolve: time must be finite");
    Vec coeff = spec.eigenvectors.adjoint() * psi.amplitudes();
    for (long i = 0; i < coeff.size(); ++i)
        coeff[i] *= std::exp(cplx(0.0, -spec.eigenvalues[i] * t));
    return StateVector(psi.n_qubits(), spec.eigenvectors * coeff);
}

double expectation(const StateVector& psi, const DenseHermitian& op) {
    if (op.dim() != psi.dim()) throw std::invalid_argument("expectation: dimension mismatch");
    cplx v = psi.amplitudes().dot(op.matrix() * psi.amplitudes());
    if (std::abs(v.imag()) > 1e-10)
        throw std::runtime_error("expectation: imaginary residual exceeds tolerance");
    return v.real();
}

double expectation_diagonal(const StateVector& psi, const RealVec& diag) {
    if (diag.size() != psi.dim())
        throw std::invalid_argument("expectation_diagonal: dimension mismatch");
    return (psi.amplitudes().cwiseAbs2().array() * diag.array()).sum();
}

double fidelity(const StateVector& psi, const StateVector& phi) {
    if (psi.dim() != phi.dim()) throw std::invalid_argument("fidelity: dimension mismatch");
    return std::norm(phi.amplitudes().dot(psi.amplitudes()));
}

DensityMatrix reduced_density(const StateVector& psi, const std::vector<int>& subsystem) {
    const int n = psi.n_qubits();
    if (subsystem.empty() || static_cast<int>(subsystem.size()) >= n)
        throw std::invalid_argument("reduced_density: subsystem must be a proper non-empty subset");
    std::vector<bool> in_a(n + 1, false);
    for (int q : subsystem) {
        if (q < 1 || q > n) throw std::invalid_argument("reduced_density: qubit index out of range");
        if (in_a[q]) throw std::invalid_argument("reduced_density: duplicate qubit index");
        in_a[q] = true;
    }
    std::vector<int> a_qubits, b_qubits;
    for (int q = 1; q <= n; ++q) (in_a[q] ? a_qubits : b_qubits).push_back(q);

    const long da = 1L << a_qubits.size();
    const long db = 1L << b_qubits.size();
    // psi reshaped as a (da x db) matrix; rho_A = Psi Psi^dagger.
    Mat m(da, db);
    for (long a = 0; a < da; ++a) {
        for (long b = 0; b < db; ++b) {
            long idx = 0;
            for (std::size_t k = 0; k < a_qubits.size(); ++k)
                if ((a >> (a_qubits.size() - 1 - k)) & 1)
                    idx |= 1L << qubit_bit_shift(a_qubits[k], n);
            for (std::size_t k = 0; k < b_qubits.size(); ++k)
                if ((b >> (b_qubits.size() - 1 - k)) & 1)
                    idx |= 1L << qubit_bit_shift(b_qubits[k], n);
            m(a, b) = psi.amplitudes()[idx];
        }
    }
    Mat rho = m * m.adjoint();
    rho = 0.5 * (rho + rho.adjoint().eval());  // scrub roundoff asymmetry
    return DensityMatrix(std::move(rho));
}

double von_neumann_entropy(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<Mat> es(rho.matrix(), Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (long i = 0; i < es.eigenvalues().size(); ++i) {
        double lam = es.eigenvalues()[i];
        if (lam > 1e-15) s -= lam * std::log(lam);
    }
    return std::max(s, 0.0);
}

double bipartite_entropy(const StateVector& psi, int n_a) {
    const int n = psi.n_qubits();
    if (n_a < 1 || n_a >= n) throw std::invalid_argument("bipartite_entropy: bad cut");
    const long da = 1L << n_a;
    const long db = psi.dim() / da;
    // Leading qubits are the high bits, so the reshape is contiguous.
    Eigen::Map<const Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(
        psi.amplitudes().data(), da, db);
    Eigen::JacobiSVD<Mat> svd(m);
    double s = 0.0;
    for (long i = 0; i < svd.singularValues().size(); ++i) {
        double lam = svd.singularValues()[i] * svd.singularValues()[i];
        if (lam > 1e-15) s -= lam * std::log(lam);
    }
    return std::max(s, 0.0);
}

}  // namespace qsc
