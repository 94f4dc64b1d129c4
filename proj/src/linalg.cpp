#include "adqec/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace adqec {

EigenSystem hermitian_eigendecomposition(const Matrix& m, double hermitian_tol) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix must be square");
    double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
    double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if (dev > hermitian_tol * scale)
        throw std::invalid_argument("matrix is not Hermitian (deviation " + std::to_string(dev) + ")");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

double psd_sqrt_trace(const Matrix& m) {
    EigenSystem es = hermitian_eigendecomposition(m);
    double total = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues.size(); ++i) {
        double lambda = es.eigenvalues[i];
        if (lambda < -1e-6)
            throw std::invalid_argument("matrix is not PSD (eigenvalue " + std::to_string(lambda) + ")");
        total += std::sqrt(std::max(lambda, 0.0));
    }
    return total;
}

void DensityMatrix::validate(double tol) const {
    if (m.rows() != m.cols()) throw std::invalid_argument("density matrix must be square");
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tol)
        throw std::invalid_argument("density matrix is not Hermitian");
    if (std::abs(m.trace() - Complex(1.0)) > tol)
        throw std::invalid_argument("density matrix trace differs from 1");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -tol)
        throw std::invalid_argument("density matrix has a negative eigenvalue");
}

DensityMatrix DensityMatrix::pure(const Vector& psi) {
    double norm = psi.norm();
    if (norm == 0.0) throw std::invalid_argument("cannot form a state from the zero vector");
    Vector unit = psi / norm;
    return {unit * unit.adjoint()};
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
    return {Matrix::Identity(dim, dim) / static_cast<double>(dim)};
}

double uhlmann_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
    if (rho.dim() != sigma.dim()) throw std::invalid_argument("dimension mismatch");
    EigenSystem es = hermitian_eigendecomposition(rho.m);
    Eigen::VectorXd roots(es.eigenvalues.size());
    for (Eigen::Index i = 0; i < roots.size(); ++i)
        roots[i] = std::sqrt(std::max(es.eigenvalues[i], 0.0));
    Matrix sqrt_rho = es.eigenvectors * roots.asDiagonal() * es.eigenvectors.adjoint();
    return psd_sqrt_trace(sqrt_rho * sigma.m * sqrt_rho);
}

double projector_fidelity(const Matrix& basis, const DensityMatrix& sigma) {
    if (basis.rows() != sigma.dim()) throw std::invalid_argument("dimension mismatch");
    const auto k = basis.cols();
    Matrix reduced = basis.adjoint() * sigma.m * basis;  // k x k
    return psd_sqrt_trace(reduced) / std::sqrt(static_cast<double>(k));
}

Matrix tensor(const Matrix& a, const Matrix& b) {
    const auto rows = a.rows() * b.rows();
    const auto cols = a.cols() * b.cols();
    if (rows > (1 << 16) || cols > (1 << 16)) throw std::invalid_argument("tensor product too large");
    Matrix out(rows, cols);
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Matrix SparseOperator::to_dense() const {
    Matrix out = Matrix::Zero(dim, dim);
    for (const auto& e : entries) out(e.row, e.col) += e.amp;
    return out;
}

Vector SparseOperator::apply(const Vector& v) const {
    if (v.size() != dim) throw std::invalid_argument("dimension mismatch");
    Vector out = Vector::Zero(dim);
    for (const auto& e : entries) out[e.row] += e.amp * v[e.col];
    return out;
}

void SparseOperator::conjugate_into(const Matrix& rho, Matrix& out) const {
    if (rho.rows() != dim || out.rows() != dim) throw std::invalid_argument("dimension mismatch");
    for (const auto& a : entries)
        for (const auto& b : entries)
            out(a.row, b.row) += a.amp * std::conj(b.amp) * rho(a.col, b.col);
}

void SparseOperator::gram_into(Matrix& out) const {
    if (out.rows() != dim) throw std::invalid_argument("dimension mismatch");
    std::vector<Entry> by_row(entries);
    std::sort(by_row.begin(), by_row.end(),
              [](const Entry& a, const Entry& b) { return a.row < b.row; });
    std::size_t i = 0;
    while (i < by_row.size()) {
        std::size_t j = i;
        while (j < by_row.size() && by_row[j].row == by_row[i].row) ++j;
        for (std::size_t p = i; p < j; ++p)
            for (std::size_t q = i; q < j; ++q)
                out(by_row[p].col, by_row[q].col) += std::conj(by_row[p].amp) * by_row[q].amp;
        i = j;
    }
}

SparseOperator sparse_tensor(const SparseOperator& a, const SparseOperator& b) {
    SparseOperator out;
    out.dim = a.dim * b.dim;
    out.entries.reserve(a.entries.size() * b.entries.size());
    for (const auto& ea : a.entries)
        for (const auto& eb : b.entries)
            out.add(ea.row * static_cast<uint32_t>(b.dim) + eb.row,
                    ea.col * static_cast<uint32_t>(b.dim) + eb.col, ea.amp * eb.amp);
    return out;
}

}  // namespace adqec
