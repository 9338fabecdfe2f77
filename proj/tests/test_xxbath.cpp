// Copyright 2026 The cqec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>

#include "cqec/lindblad.hpp"
#include "cqec/xxbath.hpp"

#include <cmath>
#include <numbers>

using namespace cqec;
using numerics::Complex;
using numerics::Matrix;
using numerics::Vector;
using xxbath::XXModel;

namespace {

// transcription of the one-qubit joint superoperator in the pauli-product
// basis {sigma_i^S (x) sigma_j^B}, i major
Matrix tabulated_xx_superop(double al, double ka, double et) {
    Matrix m = Matrix::Zero(16, 16);
    const double a2 = 2 * al;
    m(1, 1) = -ka / 2;
    m(2, 2) = -ka / 2;
    m(2, 7) = -a2;
    m(3, 0) = ka;
    m(3, 3) = -ka;
    m(3, 6) = a2;
    m(4, 4) = -et;
    m(5, 5) = -et - ka / 2;
    m(6, 3) = -a2;
    m(6, 6) = -et - ka / 2;
    m(7, 2) = a2;
    m(7, 4) = ka;
    m(7, 7) = -et - ka;
    m(8, 8) = -et;
    m(8, 13) = -a2;
    m(9, 9) = -et - ka / 2;
    m(9, 12) = -a2;
    m(10, 10) = -et - ka / 2;
    m(11, 8) = ka;
    m(11, 11) = -et - ka;
    m(12, 0) = et;
    m(12, 9) = a2;
    m(12, 12) = -et;
    m(13, 1) = et;
    m(13, 8) = a2;
    m(13, 13) = -et - ka / 2;
    m(14, 2) = et;
    m(14, 14) = -et - ka / 2;
    m(15, 3) = et;
    m(15, 12) = ka;
    m(15, 15) = -et - ka;
    return m;
}

Vector joint_pauli_vector(double x0, double y0, double z0) {
    Vector v = Vector::Zero(16);
    v(0) = 0.25;
    v(3) = 0.25;
    v(4) = 0.25 * x0;
    v(7) = 0.25 * x0;
    v(8) = 0.25 * y0;
    v(11) = 0.25 * y0;
    v(12) = 0.25 * z0;
    v(15) = 0.25 * z0;
    return v;
}

}  // namespace

TEST_CASE("one-qubit joint superoperator matches the transcription entry for entry") {
    const XXModel model(1, 1.0, 1.3, 0.7);
    const auto superop = xxbath::build_xx_superoperator(model);
    CHECK((superop.m - tabulated_xx_superop(1.0, 1.3, 0.7)).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("unitary limit has a purely imaginary spectrum") {
    const XXModel model(1, 1.0, 0.0, 0.0);
    const auto spec = numerics::eigendecompose(xxbath::build_xx_superoperator(model).m);
    for (Eigen::Index i = 0; i < spec.eigenvalues.size(); ++i) {
        CHECK(std::abs(spec.eigenvalues(i).real()) < 1e-12);
    }
}

TEST_CASE("coefficient basics") {
    const auto [c0, d0] = xxbath::xx_coefficients(1.0, 1.0, 1.0, 0.0);
    CHECK(c0 == 1.0);
    CHECK(std::abs(d0) < 1e-15);

    for (double t : {0.2, 1.0, 2.7}) {
        const auto [c, d] = xxbath::xx_coefficients(1.0, 0.0, 0.0, t);
        CHECK(std::abs(c - std::cos(2 * t)) < 1e-14);
        CHECK(d == 0.0);
    }

    const double al = 1.0, ka = 2.0, et = 0.5;
    const auto [cl, dl] = xxbath::xx_coefficients(al, ka, et, 300.0);
    CHECK(std::abs(dl - xxbath::xx_asymptotic_d(al, ka, et)) < 1e-12);
    CHECK(std::abs(cl) < 1e-12);
}

TEST_CASE("closed-form coefficients equal the superoperator solution in all regimes") {
    const double x0 = 0.2, y0 = -0.4, z0 = 0.55;
    for (const double ka : {0.0, 0.5, 1.0, 4.0, 8.0, 8.001, 12.0}) {
        for (const double et : {0.0, 0.5, 1.0, 4.0, 8.0, 8.001, 12.0}) {
            const XXModel model(1, 1.0, ka, et);
            const Matrix m = xxbath::build_xx_superoperator(model).m;
            const Vector v0 = joint_pauli_vector(x0, y0, z0);
            for (int i = 0; i <= 10; ++i) {
                const double t = 2.0 * i;
                const Vector vt = numerics::matrix_exponential(m, t) * v0;
                const auto expect = xxbath::reduced_state_1q(model, x0, y0, z0, t);
                REQUIRE(std::abs(4 * vt(4).real() - 2 * expect(1)) < 1e-8);
                REQUIRE(std::abs(4 * vt(8).real() - 2 * expect(2)) < 1e-8);
                REQUIRE(std::abs(4 * vt(12).real() - 2 * expect(3)) < 1e-8);
            }
        }
    }
}

TEST_CASE("regime classification and continuity at the critical cooling rate") {
    CHECK(XXModel(1, 1.0, 7.9, 0.0).non_markovian());
    CHECK_FALSE(XXModel(1, 1.0, 8.0, 0.0).non_markovian());

    // F is continuous through kappa = 8 alpha: gap scales linearly with eps
    const double eta = 4.0;
    auto gap = [eta](double eps) {
        double worst = 0.0;
        for (int i = 0; i <= 200; ++i) {
            const double t = 0.1 * i;
            worst = std::max(worst, std::abs(xxbath::fidelity_xx_1q(1.0, 8 - eps, eta, t) -
                                             xxbath::fidelity_xx_1q(1.0, 8 + eps, eta, t)));
        }
        return worst;
    };
    const double g6 = gap(1e-6);
    CHECK(g6 < 1e-8);
    const double g5 = gap(1e-5);
    CHECK(g5 > 2 * g6);   // grows with eps
    CHECK(g5 < 20 * g6);  // roughly linearly
}

TEST_CASE("fidelity closed form") {
    CHECK(xxbath::fidelity_xx_1q(1.0, 1.0, 1.0, 0.0) == 1.0);

    const double al = 1.0, ka = 1.0, et = 2.0;
    const double f_inf = xxbath::fidelity_xx_asymptote(al, ka, et);
    CHECK(std::abs(f_inf - (et * (ka + 2 * et) + 4) / (et * (ka + 2 * et) + 8)) < 1e-15);
    CHECK(std::abs(xxbath::fidelity_xx_1q(al, ka, et, 400.0) - f_inf) < 1e-12);

    // short time: 1 - a^2 t^2 + (1/6)(kappa + 4 eta) a^2 t^3
    for (double t : {1e-3, 5e-4}) {
        const double f = xxbath::fidelity_xx_1q(al, ka, et, t);
        const double expansion =
            1 - al * al * t * t + (ka + 4 * et) / 6.0 * al * al * t * t * t;
        CHECK(std::abs(f - expansion) < 1e-11);
    }
}

TEST_CASE("long-time fidelity is strictly increasing in the correction rate") {
    double prev = 0.0;
    for (const double et : {0.0, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0}) {
        const double f = xxbath::fidelity_xx_asymptote(1.0, 1.5, et);
        CHECK(f > prev);
        prev = f;
    }
}

TEST_CASE("six-qubit joint superoperator preserves the trace") {
    const XXModel model(3, 1.0, 1.2, 0.8);
    const auto superop = xxbath::build_xx_superoperator(model);
    REQUIRE(superop.m.rows() == 4096);
    CHECK(lindblad::trace_defect(superop) < 1e-12);
}

TEST_CASE("six-qubit integration: short time, period, trace") {
    const auto codeword = codes::encode_three_qubit(1.0, 0.0);
    Matrix bath = Matrix::Zero(8, 8);
    bath(0, 0) = 1.0;
    const ops::DensityMatrix rho0(6, ops::kron(codeword.rho, bath));

    const double al = 1.0, ka = 1.2, et = 0.8;
    const XXModel model(3, al, ka, et);
    std::vector<double> grid{0.0, 1e-3, 2e-3, 4e-3, 0.5, 1.0};
    const auto trace = xxbath::simulate_xx_code(model, rho0, grid);
    CHECK(std::abs(trace.fidelity[0] - 1.0) < 1e-12);
    for (std::size_t i = 1; i <= 3; ++i) {
        const double t = grid[i];
        // leading order 1 - 3 a^2 t^2 (t^3 coefficient left free)
        CHECK(std::abs((1.0 - trace.fidelity[i]) / (t * t) - 3 * al * al) < 3e-2);
    }
    for (const double tr : trace.trace) CHECK(std::abs(tr - 1.0) < 1e-8);

    // kappa = eta = 0: F = cos^6(alpha t), period pi/alpha
    const XXModel free_model(3, 1.0, 0.0, 0.0);
    std::vector<double> grid2;
    for (int i = 0; i <= 33; ++i) grid2.push_back(0.1 * i);
    const auto free_trace = xxbath::simulate_xx_code(free_model, rho0, grid2);
    for (std::size_t i = 0; i < grid2.size(); ++i) {
        CHECK(std::abs(free_trace.fidelity[i] - std::pow(std::cos(grid2[i]), 6)) < 1e-7);
    }
}

TEST_CASE("six-qubit fidelity works for a general codeword") {
    const auto codeword = codes::encode_three_qubit(0.6, Complex(0, 0.8));
    Matrix bath = Matrix::Zero(8, 8);
    bath(0, 0) = 1.0;
    const ops::DensityMatrix rho0(6, ops::kron(codeword.rho, bath));
    const XXModel model(3, 1.0, 0.5, 1.5);
    const auto trace = xxbath::simulate_xx_code(model, rho0, {0.0, 0.3});
    CHECK(std::abs(trace.fidelity[0] - 1.0) < 1e-10);
    CHECK(trace.fidelity[1] < 1.0);
    CHECK(trace.fidelity[1] > 0.5);
}

TEST_CASE("model validation") {
    CHECK_THROWS_AS(XXModel(2, 1.0, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(XXModel(1, 0.0, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(XXModel(1, 1.0, -1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(xxbath::xx_coefficients(1.0, 1.0, 1.0, -0.5), std::invalid_argument);
}
