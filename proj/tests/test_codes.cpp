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

#include "cqec/codes.hpp"
#include "cqec/error_classes.hpp"

#include <random>
#include <set>

using namespace cqec;
using codes::ClassGenerator;
using numerics::Complex;
using numerics::Matrix;
using numerics::RealMatrix;
using numerics::Vector;
using ops::PauliString;

namespace {

// deterministic generic five-qubit codeword (all logical Bloch components nonzero)
Matrix generic_codeword(const codes::StabilizerCode& code, unsigned seed) {
    const Eigen::Index dim = Eigen::Index(1) << code.n;
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Vector raw(dim);
    for (Eigen::Index i = 0; i < dim; ++i) raw(i) = Complex(u(rng), u(rng));
    Vector psi = codes::code_projector(code) * raw;
    psi /= psi.norm();
    return psi * psi.adjoint();
}

}  // namespace

TEST_CASE("one-qubit code definition") {
    const auto& code = codes::one_qubit_code();
    CHECK(code.n == 1);
    CHECK(code.k == 0);
    CHECK(code.correction_table.at(0).is_identity_word());
    CHECK(code.correction_table.at(1).same_letters(PauliString::from_string("X")));
}

TEST_CASE("three-qubit code definition") {
    const auto& code = codes::three_qubit_code();
    CHECK(code.correction_table.at(0b00).is_identity_word());
    CHECK(code.correction_table.at(0b10).same_letters(PauliString::from_string("XII")));
    CHECK(code.correction_table.at(0b11).same_letters(PauliString::from_string("IXI")));
    CHECK(code.correction_table.at(0b01).same_letters(PauliString::from_string("IIX")));
}

TEST_CASE("five-qubit syndromes match the lookup table") {
    const auto& code = codes::five_qubit_code();
    CHECK(codes::syndrome(code, PauliString::identity(5)) == 0);
    CHECK(codes::syndrome(code, PauliString::single(5, 3, 1)) == 0b1100);  // X3
    CHECK(codes::syndrome(code, PauliString::single(5, 4, 3)) == 0b1001);  // Z4
    CHECK(codes::syndrome(code, PauliString::single(5, 4, 2)) == 0b1111);  // Y4
    CHECK(code.correction_table.at(0b1111).same_letters(PauliString::single(5, 4, 2)));
    CHECK_THROWS_AS(codes::syndrome(code, PauliString::from_string("X")),
                    std::invalid_argument);
    // all 16 syndromes distinct and covered
    std::set<std::uint32_t> seen;
    for (const auto& [s, corr] : code.correction_table) seen.insert(s);
    CHECK(seen.size() == 16);
}

TEST_CASE("three-qubit encoder") {
    const auto zero = codes::encode_three_qubit(1.0, 0.0);
    CHECK(std::abs(zero.rho(0, 0) - Complex(1, 0)) < 1e-14);
    const auto one = codes::encode_three_qubit(0.0, 1.0);
    CHECK(std::abs(one.rho(7, 7) - Complex(1, 0)) < 1e-14);
    const auto ghz = codes::encode_three_qubit(1 / std::sqrt(2.0), 1 / std::sqrt(2.0));
    CHECK(std::abs((ghz.rho * ghz.rho).trace() - Complex(1, 0)) < 1e-12);
    CHECK_THROWS_AS(codes::encode_three_qubit(1.0, 0.5), std::invalid_argument);
}

TEST_CASE("code projectors") {
    const auto& three = codes::three_qubit_code();
    const Matrix p3 = codes::code_projector(three);
    Matrix expected = Matrix::Zero(8, 8);
    expected(0, 0) = 1.0;
    expected(7, 7) = 1.0;
    CHECK((p3 - expected).cwiseAbs().maxCoeff() < 1e-14);

    const auto& five = codes::five_qubit_code();
    const Matrix p5 = codes::code_projector(five);
    CHECK(std::abs(p5.trace() - Complex(2, 0)) < 1e-12);
    CHECK((p5 * p5 - p5).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("correction map recovers single-qubit errors") {
    const auto& one = codes::one_qubit_code();
    Matrix excited = Matrix::Zero(2, 2);
    excited(1, 1) = 1.0;
    const Matrix corrected = codes::apply_correction_map(one, excited);
    CHECK(std::abs(corrected(0, 0) - Complex(1, 0)) < 1e-14);

    const auto& three = codes::three_qubit_code();
    const auto psi = codes::encode_three_qubit(0.6, Complex(0.0, 0.8));
    const Matrix x2 = ops::pauli_to_matrix(PauliString::single(3, 2, 1));
    const Matrix recovered =
        codes::apply_correction_map(three, Matrix(x2 * psi.rho * x2));
    CHECK((recovered - psi.rho).cwiseAbs().maxCoeff() < 1e-12);

    const auto& five = codes::five_qubit_code();
    const Matrix codeword = generic_codeword(five, 17);
    const Matrix y4 = ops::pauli_to_matrix(PauliString::single(5, 4, 2));
    const Matrix rec5 = codes::apply_correction_map(five, Matrix(y4 * codeword * y4));
    CHECK((rec5 - codeword).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("distance-three property: every weight-one error is corrected") {
    const auto& five = codes::five_qubit_code();
    const Matrix codeword = generic_codeword(five, 23);
    for (int site = 1; site <= 5; ++site) {
        for (std::uint8_t letter : {std::uint8_t{1}, std::uint8_t{2}, std::uint8_t{3}}) {
            const Matrix e = ops::pauli_to_matrix(PauliString::single(5, site, letter));
            const Matrix rec =
                codes::apply_correction_map(five, Matrix(e * codeword * e.adjoint()));
            REQUIRE((rec - codeword).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("correction generator vanishes on the code space") {
    const auto& three = codes::three_qubit_code();
    const auto psi = codes::encode_three_qubit(Complex(0.36, 0.48), Complex(0.0, 0.8));
    const Matrix img = codes::apply_correction_map(three, psi.rho) - psi.rho;
    CHECK(img.cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("one-qubit correction generator matches the pauli-basis block") {
    const auto gamma = codes::correction_generator(codes::one_qubit_code(),
                                                   ops::BasisConvention::pauli(1));
    Matrix expected = Matrix::Zero(4, 4);
    expected(1, 1) = -1;
    expected(2, 2) = -1;
    expected(3, 3) = -1;
    expected(3, 0) = 1;
    CHECK((gamma.m - expected).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("error class enumeration") {
    const auto classes5 = codes::enumerate_error_classes(codes::five_qubit_code());
    REQUIRE(classes5.size() == 16);
    const std::vector<int> sizes{1,  15, 30, 60, 30, 180, 60, 90,
                                 120, 180, 15, 30, 60, 90, 60, 3};
    int total = 0;
    for (std::size_t i = 0; i < 16; ++i) {
        CHECK(classes5[i].size == sizes[i]);
        total += classes5[i].size;
    }
    CHECK(total == 1024);
    CHECK(classes5[5].label == "3B");
    CHECK(classes5[5].size == 180);

    const auto classes3 = codes::enumerate_error_classes(codes::three_qubit_code());
    REQUIRE(classes3.size() == 4);
    CHECK(classes3[0].size == 1);
    CHECK(classes3[1].size == 3);
    CHECK(classes3[2].size == 3);
    CHECK(classes3[3].size == 1);

    CHECK_THROWS_AS(codes::enumerate_error_classes(codes::one_qubit_code()),
                    std::invalid_argument);
}

TEST_CASE("three-qubit class reduction reproduces the four-level chain") {
    const RealMatrix l1 =
        codes::class_jump_matrix(codes::three_qubit_code(), ClassGenerator::BitflipDissipator);
    const RealMatrix l0 =
        codes::class_jump_matrix(codes::three_qubit_code(), ClassGenerator::Correction);
    const double g = 0.9, e = 1.7;
    const RealMatrix m = g * l1 + e * l0;
    RealMatrix expected(4, 4);
    expected << -3 * g, e + g, 0, 0,
                3 * g, -(e + 3 * g), 2 * g, 0,
                0, 2 * g, -(e + 3 * g), 3 * g,
                0, 0, e + g, -3 * g;
    CHECK((m - expected).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("asymmetric generators are rejected by the reduction") {
    CHECK_THROWS_AS(codes::class_jump_matrix(codes::five_qubit_code(),
                                             ClassGenerator::BitflipDissipator),
                    codes::ReductionInvalidError);
    CHECK_THROWS_AS(codes::class_jump_matrix(codes::three_qubit_code(),
                                             ClassGenerator::DepolarizingDissipator),
                    codes::ReductionInvalidError);
}

TEST_CASE("five-qubit class matrices: sums, spectra, nullspaces") {
    const auto& five = codes::five_qubit_code();
    const RealMatrix l1 =
        codes::class_jump_matrix(five, ClassGenerator::DepolarizingDissipator);
    const RealMatrix l0 = codes::class_jump_matrix(five, ClassGenerator::Correction);

    CHECK(l1.colwise().sum().cwiseAbs().maxCoeff() < 1e-12);
    CHECK(l0.colwise().sum().cwiseAbs().maxCoeff() < 1e-12);

    // dissipator spectrum: 0, -4, -8 x2, -12 x3, -16 x4, -20 x5
    auto spec1 = numerics::eigendecompose(l1.cast<Complex>());
    std::vector<double> expected1;
    for (int v : {0}) expected1.push_back(v);
    expected1.push_back(-4);
    for (int r = 0; r < 2; ++r) expected1.push_back(-8);
    for (int r = 0; r < 3; ++r) expected1.push_back(-12);
    for (int r = 0; r < 4; ++r) expected1.push_back(-16);
    for (int r = 0; r < 5; ++r) expected1.push_back(-20);
    REQUIRE(spec1.eigenvalues.size() == 16);
    for (int i = 0; i < 16; ++i) {
        CHECK(std::abs(spec1.eigenvalues(i) -
                       Complex(expected1[static_cast<std::size_t>(i)], 0)) < 1e-9);
    }

    // dissipator nullspace is the class multiplicity vector
    const auto null1 = numerics::nullspace(l1.cast<Complex>(), 1e-10);
    REQUIRE(null1.size() == 1);
    Vector v1 = null1[0] / null1[0](0);
    const std::vector<double> mult{1,  15, 30, 60, 30, 180, 60, 90,
                                   120, 180, 15, 30, 60, 90, 60, 3};
    for (int i = 0; i < 16; ++i) {
        CHECK(std::abs(v1(i) - Complex(mult[static_cast<std::size_t>(i)], 0)) < 1e-9);
    }

    // correction spectrum: 0 x3, -1 x11, (-2 +- sqrt(2))/3 x1 each
    auto spec0 = numerics::eigendecompose(l0.cast<Complex>());
    std::vector<double> expected0;
    for (int r = 0; r < 3; ++r) expected0.push_back(0.0);
    expected0.push_back((-2 + std::sqrt(2.0)) / 3);
    for (int r = 0; r < 11; ++r) expected0.push_back(-1.0);
    expected0.push_back((-2 - std::sqrt(2.0)) / 3);
    for (int i = 0; i < 16; ++i) {
        CHECK(std::abs(spec0.eigenvalues(i) -
                       Complex(expected0[static_cast<std::size_t>(i)], 0)) < 1e-9);
    }

    // correction nullspace contains 2 e_{3B} + e_{4A} + e_{5C}, e_0 and e_{5E}
    const auto null0 = numerics::nullspace(l0.cast<Complex>(), 1e-10);
    REQUIRE(null0.size() == 3);
    auto in_span = [&null0](const Vector& target) {
        Vector proj = Vector::Zero(16);
        for (const auto& b : null0) proj += b * (b.adjoint() * target)(0);
        return (proj - target).norm() < 1e-9;
    };
    Vector chain = Vector::Zero(16);
    chain(5) = 2.0;   // 3B
    chain(7) = 1.0;   // 4A
    chain(13) = 1.0;  // 5C
    chain /= chain.norm();
    CHECK(in_span(chain));
    CHECK(in_span(Vector(Vector::Unit(16, 0))));
    CHECK(in_span(Vector(Vector::Unit(16, 15))));
}

TEST_CASE("derived class matrices versus the tabulated transcription") {
    const auto& five = codes::five_qubit_code();
    const RealMatrix l1 =
        codes::class_jump_matrix(five, ClassGenerator::DepolarizingDissipator);
    const auto diff1 =
        codes::class_matrix_diff(l1, codes::tabulated_five_qubit_depolarizing_matrix());
    // exactly one transcribed cell disagrees: (4C, 5D) is 3, printed 0
    REQUIRE(diff1.size() == 1);
    CHECK(diff1[0].row == "4C");
    CHECK(diff1[0].col == "5D");
    CHECK(diff1[0].derived == 3.0);
    CHECK(diff1[0].tabulated == 0.0);

    const RealMatrix l0 = codes::class_jump_matrix(five, ClassGenerator::Correction);
    const auto diff0 =
        codes::class_matrix_diff(l0, codes::tabulated_five_qubit_correction_matrix());
    CHECK(diff0.empty());
}

TEST_CASE("full-space oracles adjudicate the class matrices") {
    const auto& five = codes::five_qubit_code();
    const Matrix codeword = generic_codeword(five, 41);
    CHECK(codes::full_space_dissipator_deviation(five, codeword) < 1e-12);
    CHECK(codes::word_level_correction_deviation(five, codeword) < 1e-12);
}

TEST_CASE("code table export") {
    const auto text = codes::export_code_table(codes::five_qubit_code());
    CHECK(text.find("XZZXI") != std::string::npos);
    CHECK(text.find("1111") != std::string::npos);
}
