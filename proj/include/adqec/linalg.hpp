#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace adqec {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

struct EigenSystem {
    Eigen::VectorXd eigenvalues;  // ascending
    Matrix eigenvectors;          // columns, unitary
};

// Rejects matrices that deviate from M = M^dagger by more than `tol`.
EigenSystem hermitian_eigendecomposition(const Matrix& m, double hermitian_tol = 1e-9);

// Sum of square roots of the eigenvalues of a Hermitian PSD matrix.
// Eigenvalues in [-1e-10, 0) are clamped to zero; below -1e-6 is an error.
double psd_sqrt_trace(const Matrix& m);

struct DensityMatrix {
    Matrix m;

    int dim() const { return static_cast<int>(m.rows()); }
    // Throws unless Hermitian, unit trace and PSD within the stated tolerances.
    void validate(double tol = 1e-10) const;

    static DensityMatrix pure(const Vector& psi);
    static DensityMatrix maximally_mixed(int dim);
};

// tr sqrt(rho^{1/2} sigma rho^{1/2}).
double uhlmann_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

// Same quantity for rho = P/k with P the projector onto the span of the
// orthonormal columns of `basis`: reduces to a k x k problem.
double projector_fidelity(const Matrix& basis, const DensityMatrix& sigma);

// Kronecker product; the left factor owns the most significant bits of the
// basis index (qubit 1 leftmost).
Matrix tensor(const Matrix& a, const Matrix& b);

// Sparse operator as a triplet list; at most one entry per (row, col).
struct SparseOperator {
    struct Entry {
        uint32_t row;
        uint32_t col;
        Complex amp;
    };

    int dim = 0;
    std::vector<Entry> entries;

    void add(uint32_t row, uint32_t col, Complex amp) { entries.push_back({row, col, amp}); }
    Matrix to_dense() const;
    Vector apply(const Vector& v) const;
    // Accumulates K rho K^dagger into `out`.
    void conjugate_into(const Matrix& rho, Matrix& out) const;
    // Accumulates K^dagger K into `out`.
    void gram_into(Matrix& out) const;
};

SparseOperator sparse_tensor(const SparseOperator& a, const SparseOperator& b);

}  // namespace adqec
