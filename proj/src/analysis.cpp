#include "adqec/analysis.hpp"

#include <cmath>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace adqec {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

std::string fmt12(double x) {
    std::ostringstream os;
    os << std::setprecision(12) << x;
    return os.str();
}

}  // namespace

CompositeChannel CompositeChannel::build(const CodeSet& code, double gamma) {
    ValidationReport report = validate_code_set(code);
    if (!report.valid())
        throw std::invalid_argument("code set fails validation: " + report.summary(code.n));
    CompositeChannel cc;
    cc.code = code;
    cc.gamma = gamma;
    cc.damping = multi_qubit_ad_kraus({gamma, code.n});
    cc.recovery = build_recovery(code, gamma);
    cc.recovery_kraus = cc.recovery.to_kraus();
    return cc;
}

Matrix CompositeChannel::apply_raw(const Matrix& x) const {
    Matrix damped = apply_channel_raw(damping, x);
    return apply_channel_raw(recovery_kraus, damped);
}

DensityMatrix CompositeChannel::apply(const DensityMatrix& rho) const {
    Matrix basis = codeword_basis();
    Matrix projected = basis * (basis.adjoint() * rho.m * basis) * basis.adjoint();
    if ((projected - rho.m).cwiseAbs().maxCoeff() > 1e-9)
        std::cerr << "warning: input state is not supported on the code space\n";
    DensityMatrix out{apply_raw(rho.m)};
    out.validate(1e-8);
    return out;
}

Matrix CompositeChannel::codeword_basis() const {
    const int dim = 1 << code.n;
    const uint32_t mask = CodeWord(0, code.n).mask();
    auto reps = code.pair_representatives();
    Matrix basis = Matrix::Zero(dim, static_cast<Eigen::Index>(reps.size()));
    for (std::size_t i = 0; i < reps.size(); ++i) {
        basis(reps[i], static_cast<Eigen::Index>(i)) = kInvSqrt2;
        basis(~reps[i] & mask, static_cast<Eigen::Index>(i)) = kInvSqrt2;
    }
    return basis;
}

double code_fidelity(const CodeSet& code, double gamma) {
    CompositeChannel cc = CompositeChannel::build(code, gamma);
    Matrix basis = cc.codeword_basis();
    const auto k = basis.cols();
    Matrix rho = basis * basis.adjoint() / static_cast<double>(k);
    DensityMatrix sigma{cc.apply_raw(rho)};
    return projector_fidelity(basis, sigma);
}

double bare_fidelity(int m, double gamma) {
    if (m < 1) throw std::invalid_argument("qubit count must be positive");
    double single = (std::sqrt(1.0 + gamma) + std::sqrt(1.0 - gamma)) / 2.0;
    return std::pow(single, m);
}

double bare_fidelity_simulated(int m, double gamma) {
    KrausChannel ch = multi_qubit_ad_kraus({gamma, m});
    DensityMatrix rho = DensityMatrix::maximally_mixed(ch.dim);
    DensityMatrix sigma{apply_channel_raw(ch, rho.m)};
    return uhlmann_fidelity(rho, sigma);
}

FidelityCurve fidelity_curve(const CodeSet& code, const std::vector<double>& gamma_grid) {
    for (std::size_t i = 1; i < gamma_grid.size(); ++i)
        if (gamma_grid[i] <= gamma_grid[i - 1])
            throw std::invalid_argument("gamma grid must be strictly ascending");
    if (!gamma_grid.empty() && (gamma_grid.front() < 0.0 || gamma_grid.back() >= 1.0))
        throw std::invalid_argument("gamma grid must lie in [0, 1)");
    FidelityCurve curve;
    int k = static_cast<int>(validate_code_set(code).k);
    curve.bare_qubit_count = static_cast<int>(std::floor(std::log2(static_cast<double>(k))));
    for (double g : gamma_grid) {
        curve.gammas.push_back(g);
        curve.f_code.push_back(code_fidelity(code, g));
        curve.f_bare.push_back(bare_fidelity(curve.bare_qubit_count, g));
    }
    return curve;
}

std::string FidelityCurve::to_csv() const {
    std::ostringstream os;
    os << "gamma,f_code,f_bare\n";
    for (std::size_t i = 0; i < gammas.size(); ++i)
        os << fmt12(gammas[i]) << "," << fmt12(f_code[i]) << "," << fmt12(f_bare[i]) << "\n";
    return os.str();
}

std::string FidelityCurve::to_svg() const {
    const double width = 640, height = 480;
    const double ml = 60, mr = 20, mt = 20, mb = 50;
    double x0 = gammas.empty() ? 0.0 : gammas.front();
    double x1 = gammas.empty() ? 1.0 : gammas.back();
    if (x1 <= x0) x1 = x0 + 1.0;
    double y0 = 1.0, y1 = 1.0;
    for (double v : f_code) y0 = std::min(y0, v);
    for (double v : f_bare) y0 = std::min(y0, v);
    y0 = std::floor(y0 * 20.0) / 20.0;
    auto px = [&](double g) { return ml + (g - x0) / (x1 - x0) * (width - ml - mr); };
    auto py = [&](double f) { return mt + (y1 - f) / (y1 - y0) * (height - mt - mb); };
    auto polyline = [&](const std::vector<double>& ys, const char* style) {
        std::ostringstream os;
        os << "<polyline fill=\"none\" " << style << " points=\"";
        for (std::size_t i = 0; i < gammas.size(); ++i) {
            if (i) os << " ";
            os << std::fixed << std::setprecision(2) << px(gammas[i]) << "," << py(ys[i]);
        }
        os << "\"/>\n";
        return os.str();
    };
    std::ostringstream os;
    os << std::fixed << std::setprecision(2);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    os << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    os << "<line x1=\"" << ml << "\" y1=\"" << height - mb << "\" x2=\"" << width - mr << "\" y2=\""
       << height - mb << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << height - mb
       << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << (width / 2) << "\" y=\"" << height - 12 << "\" text-anchor=\"middle\">gamma</text>\n";
    os << "<text x=\"16\" y=\"" << (height / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
       << (height / 2) << ")\">fidelity</text>\n";
    os << polyline(f_code, "stroke=\"#1f77b4\" stroke-width=\"2\"");
    os << polyline(f_bare, "stroke=\"#d62728\" stroke-width=\"2\" stroke-dasharray=\"6,4\"");
    os << "<text x=\"" << width - mr - 10 << "\" y=\"" << mt + 16
       << "\" text-anchor=\"end\" fill=\"#1f77b4\">code</text>\n";
    os << "<text x=\"" << width - mr - 10 << "\" y=\"" << mt + 34
       << "\" text-anchor=\"end\" fill=\"#d62728\">bare (" << bare_qubit_count << " qubits)</text>\n";
    os << "</svg>\n";
    return os.str();
}

QuadraticFit fit_linear_quadratic(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("need at least two samples");
    double s2 = 0, s3 = 0, s4 = 0, sxy = 0, sx2y = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double xi = x[i];
        s2 += xi * xi;
        s3 += xi * xi * xi;
        s4 += xi * xi * xi * xi;
        sxy += xi * y[i];
        sx2y += xi * xi * y[i];
    }
    double det = s2 * s4 - s3 * s3;
    if (det == 0.0) throw std::invalid_argument("degenerate sample set");
    QuadraticFit fit;
    fit.a1 = (sxy * s4 - sx2y * s3) / det;
    fit.a2 = (s2 * sx2y - s3 * sxy) / det;
    for (std::size_t i = 0; i < x.size(); ++i)
        fit.residual = std::max(fit.residual, std::abs(y[i] - fit.a1 * x[i] - fit.a2 * x[i] * x[i]));
    return fit;
}

double ResidualReport::max_abs_a1() const {
    double m = 0.0;
    for (const auto& e : entries) m = std::max(m, std::abs(e.a1));
    return m;
}

ResidualReport first_order_residuals(const CodeSet& code, const std::vector<double>& gamma_samples) {
    if (gamma_samples.size() < 2) throw std::invalid_argument("need at least two gamma samples");
    for (double g : gamma_samples)
        if (!(g > 0.0 && g < 0.5)) throw std::invalid_argument("gamma samples must be small and positive");

    ResidualReport report;
    report.gamma_samples = gamma_samples;

    const auto reps_count = code.pair_representatives().size();
    const int k = static_cast<int>(reps_count);
    const std::size_t ns = gamma_samples.size();

    // d_offdiag[i][j][s], populations[i][l][s]
    std::vector<std::vector<std::vector<Complex>>> deviation(
        k, std::vector<std::vector<Complex>>(k, std::vector<Complex>(ns)));
    std::vector<std::vector<std::vector<double>>> population(
        k, std::vector<std::vector<double>>(k, std::vector<double>(ns)));

    for (std::size_t s = 0; s < ns; ++s) {
        CompositeChannel cc = CompositeChannel::build(code, gamma_samples[s]);
        Matrix basis = cc.codeword_basis();
        // C(|w_i><w_i|) for every codeword, reused across pairs.
        std::vector<Matrix> diag_out(k);
        for (int i = 0; i < k; ++i)
            diag_out[i] = cc.apply_raw(basis.col(i) * basis.col(i).adjoint());
        for (int i = 0; i < k; ++i) {
            for (int l = 0; l < k; ++l)
                population[i][l][s] =
                    (basis.col(l).adjoint() * diag_out[i] * basis.col(l))(0, 0).real();
            deviation[i][i][s] = 1.0 - population[i][i][s];
        }
        // The matrix unit |w_i><w_j| is simulated through four Hermitian
        // (pure-state) inputs: with p = (w_i+w_j)/sqrt(2), m = (w_i+i w_j)/sqrt(2),
        //   |w_i><w_j| = pp + i mm - (1+i)/2 (ii + jj).
        for (int i = 0; i < k; ++i) {
            for (int j = i + 1; j < k; ++j) {
                Vector p = (basis.col(i) + basis.col(j)) * kInvSqrt2;
                Vector q = (basis.col(i) + Complex(0, 1) * basis.col(j)) * kInvSqrt2;
                Matrix out = cc.apply_raw(p * p.adjoint()) +
                             Complex(0, 1) * cc.apply_raw(q * q.adjoint()) -
                             (Complex(1, 1) / 2.0) * (diag_out[i] + diag_out[j]);
                Complex kept = (basis.col(i).adjoint() * out * basis.col(j))(0, 0);
                deviation[i][j][s] = 1.0 - kept;
                // C(X^dagger) = C(X)^dagger, so (j, i) mirrors (i, j).
                deviation[j][i][s] = std::conj(deviation[i][j][s]);
            }
        }
    }

    auto fit_complex = [&](const std::vector<Complex>& d) {
        std::vector<double> re(ns), im(ns);
        for (std::size_t s = 0; s < ns; ++s) {
            re[s] = d[s].real();
            im[s] = d[s].imag();
        }
        QuadraticFit fr = fit_linear_quadratic(gamma_samples, re);
        QuadraticFit fi = fit_linear_quadratic(gamma_samples, im);
        QuadraticFit out;
        out.a1 = std::hypot(fr.a1, fi.a1);
        out.a2 = std::hypot(fr.a2, fi.a2);
        out.residual = std::max(fr.residual, fi.residual);
        return out;
    };

    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            QuadraticFit fit = fit_complex(deviation[i][j]);
            report.entries.push_back({i, j, -1, fit.a1, fit.a2, fit.residual});
        }
        for (int l = 0; l < k; ++l) {
            if (l == i) continue;
            QuadraticFit fit = fit_linear_quadratic(gamma_samples, population[i][l]);
            report.entries.push_back({i, i, l, fit.a1, fit.a2, fit.residual});
        }
    }
    return report;
}

}  // namespace adqec
