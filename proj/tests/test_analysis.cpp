#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "adqec/analysis.hpp"

using namespace adqec;

namespace {

CodeSet make_set(int n, ConflictMode mode, const std::vector<std::string>& words) {
    CodeSet s;
    s.n = n;
    s.mode = mode;
    for (const auto& ws : words) s.words.push_back(CodeWord::from_string(ws).bits);
    std::sort(s.words.begin(), s.words.end());
    return s;
}

CodeSet four_two() { return make_set(4, ConflictMode::Strict, {"0000", "1111", "0011", "1100"}); }

CodeSet eight_twelve() {
    std::ifstream in(std::string(ADQEC_DATA_DIR) + "/code_8_12.json");
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return CodeSet::from_json(buf.str());
}

}  // namespace

TEST_CASE("composite channel") {
    SUBCASE("gamma = 0 is the identity on the code space") {
        auto cc = CompositeChannel::build(four_two(), 0.0);
        Matrix basis = cc.codeword_basis();
        Matrix rho = basis * basis.adjoint() / 2.0;
        CHECK((cc.apply_raw(rho) - rho).cwiseAbs().maxCoeff() < 1e-12);
    }
    SUBCASE("recovery beats bare damping on a codeword state") {
        double gamma = 0.1;
        auto cc = CompositeChannel::build(four_two(), gamma);
        Matrix basis = cc.codeword_basis();
        DensityMatrix rho = DensityMatrix::pure(basis.col(0));
        DensityMatrix with_recovery = cc.apply(rho);
        DensityMatrix without{apply_channel_raw(cc.damping, rho.m)};
        CHECK(uhlmann_fidelity(rho, with_recovery) > uhlmann_fidelity(rho, without));
    }
    SUBCASE("output of the (8,12) composite has unit trace") {
        auto cc = CompositeChannel::build(eight_twelve(), 0.1);
        Matrix basis = cc.codeword_basis();
        Matrix rho = basis * basis.adjoint() / 12.0;
        CHECK(cc.apply_raw(rho).trace().real() == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("code fidelity") {
    CHECK(code_fidelity(four_two(), 0.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(code_fidelity(eight_twelve(), 0.0) == doctest::Approx(1.0).epsilon(1e-12));

    SUBCASE("projector reduction equals the full-space evaluation") {
        for (double gamma : {0.05, 0.1, 0.2, 0.5}) {
            auto cc = CompositeChannel::build(four_two(), gamma);
            Matrix basis = cc.codeword_basis();
            DensityMatrix rho{basis * basis.adjoint() / 2.0};
            DensityMatrix sigma{cc.apply_raw(rho.m)};
            double full = uhlmann_fidelity(rho, sigma);
            CHECK(code_fidelity(four_two(), gamma) == doctest::Approx(full).epsilon(1e-9));
        }
    }
}

TEST_CASE("bare fidelity") {
    CHECK(bare_fidelity(1, 0.0) == doctest::Approx(1.0));
    CHECK(bare_fidelity(3, 0.2) == doctest::Approx(0.98498).epsilon(1e-4));
    for (int m = 1; m <= 3; ++m)
        for (double gamma : {0.05, 0.3, 0.7})
            CHECK(bare_fidelity(m, gamma) ==
                  doctest::Approx(bare_fidelity_simulated(m, gamma)).epsilon(1e-10));
}

TEST_CASE("fidelity curve") {
    SUBCASE("single point grid") {
        auto curve = fidelity_curve(four_two(), {0.0});
        REQUIRE(curve.gammas.size() == 1);
        CHECK(curve.f_code[0] == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(curve.f_bare[0] == doctest::Approx(1.0));
        CHECK(curve.bare_qubit_count == 1);
    }
    SUBCASE("values stay in range and decrease on a coarse grid") {
        auto curve = fidelity_curve(four_two(), {0.0, 0.1, 0.2, 0.3});
        for (std::size_t i = 0; i < curve.gammas.size(); ++i) {
            CHECK(curve.f_code[i] >= 0.0);
            CHECK(curve.f_code[i] <= 1.0 + 1e-9);
            if (i) CHECK(curve.f_code[i] <= curve.f_code[i - 1] + 1e-9);
        }
    }
    SUBCASE("CSV format") {
        auto curve = fidelity_curve(four_two(), {0.0, 0.1});
        std::string csv = curve.to_csv();
        CHECK(csv.starts_with("gamma,f_code,f_bare\n"));
        CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
    }
    SUBCASE("SVG is deterministic and draws both curves") {
        auto curve = fidelity_curve(four_two(), {0.0, 0.1, 0.2});
        std::string svg = curve.to_svg();
        CHECK(svg == curve.to_svg());
        CHECK(std::count(svg.begin(), svg.end(), '<') > 5);
        CHECK(svg.find("polyline") != std::string::npos);
        CHECK(svg.find("stroke-dasharray") != std::string::npos);
    }
    CHECK_THROWS(fidelity_curve(four_two(), {0.2, 0.1}));
}

TEST_CASE("quadratic fit recovers exact coefficients") {
    std::vector<double> x = {0.001, 0.002, 0.004, 0.008};
    std::vector<double> y;
    for (double xi : x) y.push_back(3.0 * xi - 2.0 * xi * xi);
    auto fit = fit_linear_quadratic(x, y);
    CHECK(fit.a1 == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(fit.a2 == doctest::Approx(-2.0).epsilon(1e-6));
    CHECK(fit.residual < 1e-12);
}

TEST_CASE("first-order residuals") {
    SUBCASE("strict codes have no linear term") {
        CHECK(first_order_residuals(four_two()).max_abs_a1() < 1e-6);
    }
    SUBCASE("the single-pair code is first-order clean for n = 3") {
        auto code = make_set(3, ConflictMode::Strict, {"000", "111"});
        CHECK(first_order_residuals(code).max_abs_a1() < 1e-6);
    }
    SUBCASE("the literal-only six-word set leaks at first order") {
        auto code = make_set(4, ConflictMode::Literal,
                             {"0000", "1111", "0001", "1110", "0011", "1100"});
        auto report = first_order_residuals(code);
        CHECK(report.max_abs_a1() > 0.4);
        bool half_leak = false;
        for (const auto& e : report.entries)
            if (e.i == e.j && e.leak_to < 0 && std::abs(e.a1) > 0.4 && std::abs(e.a1) < 0.6)
                half_leak = true;
        CHECK(half_leak);
    }
}
