#pragma once

#include <string>
#include <vector>

#include "adqec/channel.hpp"
#include "adqec/codeset.hpp"
#include "adqec/linalg.hpp"

namespace adqec {

// Orthonormal basis of span{|u>, |u~>} adapted to the damped codeword: f is
// the unit vector the channel sends (|u>+|u~>)/sqrt(2) to at first order, g
// its orthogonal complement in the same span.
struct DampedPairBasis {
    uint32_t representative = 0;  // numerically smaller of {u, u~}
    int n = 0;
    double f_coeff_u = 0.0;       // f = f_coeff_u |u> + f_coeff_ubar |u~>
    double f_coeff_ubar = 0.0;
    double g_coeff_u = 0.0;       // g = g_coeff_u |u> + g_coeff_ubar |u~>
    double g_coeff_ubar = 0.0;

    Vector f_vector(int dim) const;
    Vector g_vector(int dim) const;
};

DampedPairBasis damped_pair_vectors(const CodeWord& u, double gamma);

enum class SourceKind { Basis, F, G };

struct Assignment {
    SourceKind kind = SourceKind::Basis;
    uint32_t word = 0;       // basis word, or the pair member identifying f/g
    uint32_t target_pair = 0;  // representative of the codeword pair corrected to
};

struct RecoveryChannel {
    double gamma = 0.0;
    CodeSet code;
    std::vector<std::vector<Assignment>> elements;
    std::vector<Vector> completion_basis;  // unassigned directions, mapped to themselves

    int dim() const { return 1 << code.n; }
    int completion_rank() const { return static_cast<int>(completion_basis.size()); }
    int assigned_rank() const;

    Vector source_vector(const Assignment& a) const;
    Vector target_vector(const Assignment& a) const;  // (|u> + |u~>)/sqrt(2)

    KrausChannel to_kraus() const;

    std::string to_json() const;
};

// Maximum-likelihood recovery: element 1 corrects the damped codeword images
// f(u); later elements walk the error vectors in weight-then-dictionary
// order and attribute each damped basis word to its unique parent codeword.
RecoveryChannel build_recovery(const CodeSet& code, double gamma);

struct RecoveryReport {
    bool sources_orthonormal = false;
    double max_gram_deviation = 0.0;
    bool trace_preserving = false;
    double max_tp_deviation = 0.0;
    bool targets_valid = false;

    bool pass() const { return sources_orthonormal && trace_preserving && targets_valid; }
};

RecoveryReport verify_recovery(const RecoveryChannel& r, double tol = 1e-10);

}  // namespace adqec
