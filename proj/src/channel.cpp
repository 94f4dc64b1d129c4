#include "adqec/channel.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace adqec {

namespace {

void check_gamma(double gamma) {
    if (!(gamma >= 0.0 && gamma <= 1.0))
        throw std::invalid_argument("gamma must lie in [0, 1]");
}

}  // namespace

KrausChannel single_qubit_ad_kraus(double gamma) {
    check_gamma(gamma);
    KrausChannel ch;
    ch.dim = 2;
    SparseOperator e0;
    e0.dim = 2;
    e0.add(0, 0, 1.0);
    e0.add(1, 1, std::sqrt(1.0 - gamma));
    SparseOperator e1;
    e1.dim = 2;
    e1.add(0, 1, std::sqrt(gamma));
    ch.elements = {std::move(e0), std::move(e1)};
    return ch;
}

KrausChannel multi_qubit_ad_kraus(const ChannelParams& params, bool acknowledge_cap) {
    check_gamma(params.gamma);
    if (params.n < 1 || params.n > 20) throw std::invalid_argument("qubit count out of range");
    if (params.n > kSimulationCap && !acknowledge_cap)
        throw std::runtime_error("n = " + std::to_string(params.n) +
                                 " exceeds the simulation cap; pass the acknowledgment flag");
    const uint32_t dim = 1u << params.n;
    const double root_keep = std::sqrt(1.0 - params.gamma);
    const double root_decay = std::sqrt(params.gamma);
    KrausChannel ch;
    ch.dim = static_cast<int>(dim);
    ch.elements.resize(dim);
    for (uint32_t e = 0; e < dim; ++e) {
        SparseOperator& op = ch.elements[e];
        op.dim = static_cast<int>(dim);
        const int decayed = std::popcount(e);
        // |x> -> sqrt(gamma)^{|e|} sqrt(1-gamma)^{w(x)-|e|} |x-e> for e <= x.
        for (uint32_t x = e;; x = (x + 1) | e) {
            double amp = std::pow(root_decay, decayed) *
                         std::pow(root_keep, std::popcount(x) - decayed);
            if (amp != 0.0) op.add(x ^ e, x, amp);
            if (x == dim - 1) break;
        }
    }
    return ch;
}

Matrix apply_channel_raw(const KrausChannel& ch, const Matrix& x) {
    if (x.rows() != ch.dim || x.cols() != ch.dim) throw std::invalid_argument("dimension mismatch");
    Matrix out = Matrix::Zero(ch.dim, ch.dim);
    for (const auto& k : ch.elements) k.conjugate_into(x, out);
    return out;
}

DensityMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho) {
    if (rho.dim() != ch.dim) throw std::invalid_argument("dimension mismatch");
    DensityMatrix out{apply_channel_raw(ch, rho.m)};
    out.validate(1e-8);
    return out;
}

bool verify_trace_preserving(const KrausChannel& ch, double tol) {
    Matrix gram = Matrix::Zero(ch.dim, ch.dim);
    for (const auto& k : ch.elements) k.gram_into(gram);
    return (gram - Matrix::Identity(ch.dim, ch.dim)).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace adqec
