#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace qsc {

using cplx = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;
using RealVec = Eigen::VectorXd;

// Basis convention: qubit 1 is the most significant bit, |0...0> is index 0.
inline int qubit_bit_shift(int qubit, int n_qubits) { return n_qubits - qubit; }

// Normalized pure state on n qubits.
class StateVector {
public:
    StateVector(int n_qubits, Vec amplitudes);

    static StateVector basis_state(int n_qubits, long index);

    int n_qubits() const { return n_qubits_; }
    long dim() const { return amplitudes_.size(); }
    const Vec& amplitudes() const { return amplitudes_; }

    double norm() const { return amplitudes_.norm(); }

private:
    int n_qubits_;
    Vec amplitudes_;
};

// Dense Hermitian operator; hermiticity is validated at construction.
class DenseHermitian {
public:
    explicit DenseHermitian(Mat entries, double tol = 1e-12);

    long dim() const { return entries_.rows(); }
    const Mat& matrix() const { return entries_; }

    double trace() const { return entries_.trace().real(); }
    double hs_norm() const { return entries_.norm(); }  // Schatten-2

private:
    Mat entries_;
};

struct Spectrum {
    RealVec eigenvalues;  // ascending
    Mat eigenvectors;     // columns

    long dim() const { return eigenvalues.size(); }
};

class DensityMatrix {
public:
    explicit DensityMatrix(Mat entries);

    long dim() const { return entries_.rows(); }
    const Mat& matrix() const { return entries_; }

private:
    Mat entries_;
};

Spectrum diagonalize(const DenseHermitian& h);

// Eigenvalues/vectors of a Hermitian matrix without the DenseHermitian wrapper
// (hot path for quench evolution; uses LAPACK zheevd).
Spectrum diagonalize_raw(const Mat& h);

StateVector evolve(const Spectrum& spec, double t, const StateVector& psi);

double expectation(const StateVector& psi, const DenseHermitian& op);

// Expectation of a diagonal operator given by its diagonal entries.
double expectation_diagonal(const StateVector& psi, const RealVec& diag);

double fidelity(const StateVector& psi, const StateVector& phi);

// Reduced state on `subsystem` (1-based qubit indices, proper non-empty subset).
DensityMatrix reduced_density(const StateVector& psi, const std::vector<int>& subsystem);

double von_neumann_entropy(const DensityMatrix& rho);

// Half-chain entropy of a pure state without forming the full DensityMatrix
// (subsystem = first n_a qubits); used in scan hot loops.
double bipartite_entropy(const StateVector& psi, int n_a);

}  // namespace qsc
