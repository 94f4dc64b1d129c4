#pragma once

#include <vector>

#include "adqec/linalg.hpp"

namespace adqec {

inline constexpr int kSimulationCap = 12;

struct ChannelParams {
    double gamma = 0.0;  // decay probability, in [0, 1]
    int n = 1;           // qubit count
};

struct KrausChannel {
    int dim = 0;
    std::vector<SparseOperator> elements;
};

// The one-qubit pair E0 = diag(1, sqrt(1-gamma)), E1 = sqrt(gamma)|0><1|.
KrausChannel single_qubit_ad_kraus(double gamma);

// 2^n elements indexed by decay pattern; each has at most one entry per
// column. Set `acknowledge_cap` to exceed the default simulation cap.
KrausChannel multi_qubit_ad_kraus(const ChannelParams& params, bool acknowledge_cap = false);

DensityMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho);

// Raw linear action sum_m K_m X K_m^dagger, without density-matrix checks.
Matrix apply_channel_raw(const KrausChannel& ch, const Matrix& x);

bool verify_trace_preserving(const KrausChannel& ch, double tol = 1e-12);

}  // namespace adqec
