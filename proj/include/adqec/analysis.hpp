#pragma once

#include <string>
#include <vector>

#include "adqec/channel.hpp"
#include "adqec/codeset.hpp"
#include "adqec/linalg.hpp"
#include "adqec/recovery.hpp"

namespace adqec {

// Encode (identity injection into the code space), damp, recover.
struct CompositeChannel {
    CodeSet code;
    double gamma = 0.0;
    KrausChannel damping;
    RecoveryChannel recovery;
    KrausChannel recovery_kraus;  // cached operator form of `recovery`

    static CompositeChannel build(const CodeSet& code, double gamma);
    DensityMatrix apply(const DensityMatrix& rho) const;
    Matrix apply_raw(const Matrix& x) const;

    // Orthonormal codeword states (|u> + |u~>)/sqrt(2) as columns, pair
    // representatives ascending.
    Matrix codeword_basis() const;
};

// tr sqrt(rho^{1/2} C(rho) rho^{1/2}) on rho = P/k, via the code-space
// reduction.
double code_fidelity(const CodeSet& code, double gamma);

// Same on rho = I/2^m for m bare qubits; closed form
// ((sqrt(1+gamma)+sqrt(1-gamma))/2)^m.
double bare_fidelity(int m, double gamma);

// Dense-simulation oracle for bare_fidelity; test support.
double bare_fidelity_simulated(int m, double gamma);

struct FidelityCurve {
    std::vector<double> gammas;
    std::vector<double> f_code;
    std::vector<double> f_bare;
    int bare_qubit_count = 0;

    std::string to_csv() const;
    std::string to_svg() const;
};

FidelityCurve fidelity_curve(const CodeSet& code, const std::vector<double>& gamma_grid);

// Least-squares fit of y = a1 x + a2 x^2.
struct QuadraticFit {
    double a1 = 0.0;
    double a2 = 0.0;
    double residual = 0.0;  // max absolute misfit over the samples
};

QuadraticFit fit_linear_quadratic(const std::vector<double>& x, const std::vector<double>& y);

struct ResidualEntry {
    int i = 0;
    int j = 0;          // j == i: diagonal (retention); else coherence term
    int leak_to = -1;   // >= 0: population leaked from codeword i into this one
    double a1 = 0.0;    // modulus of the fitted linear coefficient
    double a2 = 0.0;
    double fit_residual = 0.0;
};

struct ResidualReport {
    std::vector<double> gamma_samples;
    std::vector<ResidualEntry> entries;

    double max_abs_a1() const;
};

// Small enough that the cubic tail of the deviation cannot alias into the
// fitted linear coefficient above ~1e-7: the quadratic-model bleed scales as
// 24 * a3 * gamma_max^2, and a3 reaches ~20 for the larger codes.
inline const std::vector<double> kDefaultResidualGammas = {1e-5, 2e-5, 4e-5, 8e-5};

// First-order residual-error scan over all codeword pairs: fits the
// deviation 1 - <w_i|C(|w_i><w_j|)|w_j> (and, on the diagonal, every
// cross-codeword population) to a1*gamma + a2*gamma^2.
ResidualReport first_order_residuals(const CodeSet& code,
                                     const std::vector<double>& gamma_samples = kDefaultResidualGammas);

}  // namespace adqec
