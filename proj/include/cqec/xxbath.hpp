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

// xxbath.hpp — X-X system-bath coupling with a cooling bath: the one-qubit
// 16x16 superoperator, closed-form coefficients valid across the
// underdamped/overdamped/critical regimes, and the three-plus-three-qubit
// simulation by direct integration of the joint density matrix.
//
// Qubit order for the joint space: system qubits first, then their bath
// partners, qubit 1 most significant.

#pragma once

#include "cqec/codes.hpp"
#include "cqec/lindblad.hpp"
#include "cqec/numerics.hpp"
#include "cqec/operators.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace cqec::xxbath {

using numerics::Complex;
using numerics::Matrix;
using numerics::Vector;
using ops::BasisConvention;
using ops::DensityMatrix;
using ops::Superoperator;

struct XXModel {
    int n = 1;  // system qubits (1 or 3)
    double alpha = 1.0;
    double kappa = 0.0;
    double eta = 0.0;

    XXModel(int n_, double a, double k, double e) : n(n_), alpha(a), kappa(k), eta(e) {
        if (n != 1 && n != 3) throw std::invalid_argument("XXModel: n must be 1 or 3");
        if (alpha <= 0.0) throw std::invalid_argument("XXModel: alpha must be positive");
        if (kappa < 0.0 || eta < 0.0) {
            throw std::invalid_argument("XXModel: rates must be non-negative");
        }
    }

    bool non_markovian() const { return kappa * kappa < 64 * alpha * alpha; }
};

namespace detail {

// Joint one-qubit-plus-bath generator applied to a raw 4x4 matrix.
inline Matrix joint_action_1q(const XXModel& model, const Matrix& rho) {
    using ops::PauliString;
    static const Matrix xx = ops::pauli_to_matrix(PauliString::from_string("XX"));
    static const Matrix sm = [] {
        Matrix m = Matrix::Zero(2, 2);
        m(0, 1) = 1.0;
        return m;
    }();
    static const Matrix smB = ops::kron(Matrix::Identity(2, 2), sm);
    static const Matrix spB = smB.adjoint();
    static const Matrix nB = spB * smB;
    static const Matrix p0S =
        ops::kron(Matrix{{1, 0}, {0, 0}}, Matrix::Identity(2, 2));
    static const Matrix xp1S =
        ops::kron(Matrix{{0, 1}, {0, 0}}, Matrix::Identity(2, 2));  // X * |1><1|

    Matrix out = Complex(0, -1) * model.alpha * (xx * rho - rho * xx);
    out += model.kappa * (smB * rho * spB - 0.5 * (nB * rho + rho * nB));
    out += model.eta *
           (p0S * rho * p0S.adjoint() + xp1S * rho * xp1S.adjoint() - rho);
    return out;
}

}  // namespace detail

// Structured right-hand side for the three-system/three-bath joint state
// (64x64). Cost is linear in the number of matrix entries.
inline Matrix xx3_rhs(const XXModel& model, const Matrix& rho) {
    static constexpr int kDim = 64;
    if (rho.rows() != kDim || rho.cols() != kDim) {
        throw std::invalid_argument("xx3_rhs: expected a 64x64 joint state");
    }
    // bit layout: [s1 s2 s3 b1 b2 b3], s1 = bit 5
    static const std::array<int, 3> pair_mask = {(1 << 5) | (1 << 2), (1 << 4) | (1 << 1),
                                                 (1 << 3) | (1 << 0)};
    // syndrome of a 3-bit system pattern under ZZI, IZZ and its correction flip
    static const auto tables = [] {
        std::array<int, 8> corr{};
        for (int s = 0; s < 8; ++s) {
            const int b1 = (s >> 2) & 1, b2 = (s >> 1) & 1, b3 = s & 1;
            const int syn = ((b1 ^ b2) << 1) | (b2 ^ b3);
            corr[static_cast<std::size_t>(s)] =
                syn == 0b00 ? 0 : (syn == 0b10 ? 0b100 : (syn == 0b11 ? 0b010 : 0b001));
        }
        std::array<int, 64> target{};
        std::array<int, 64> synof{};
        for (int x = 0; x < 64; ++x) {
            const int sys = x >> 3;
            const int b1 = (sys >> 2) & 1, b2 = (sys >> 1) & 1, b3 = sys & 1;
            synof[static_cast<std::size_t>(x)] = ((b1 ^ b2) << 1) | (b2 ^ b3);
            target[static_cast<std::size_t>(x)] =
                ((sys ^ corr[static_cast<std::size_t>(sys)]) << 3) | (x & 7);
        }
        return std::pair(target, synof);
    }();
    const auto& [target, synof] = tables;

    Matrix out = Matrix::Zero(kDim, kDim);
    const Complex mia(0, -model.alpha);
    for (const int mask : pair_mask) {
        for (int i = 0; i < kDim; ++i) {
            const int ip = i ^ mask;
            for (int j = 0; j < kDim; ++j) {
                out(i, j) += mia * (rho(ip, j) - rho(i, j ^ mask));
            }
        }
    }
    if (model.kappa != 0.0) {
        for (int bb = 0; bb < 3; ++bb) {
            const int bit = 1 << bb;
            for (int i = 0; i < kDim; ++i) {
                const bool ni = i & bit;
                for (int j = 0; j < kDim; ++j) {
                    const bool nj = j & bit;
                    if (ni && nj) out(i ^ bit, j ^ bit) += model.kappa * rho(i, j);
                    out(i, j) -= 0.5 * model.kappa * ((ni ? 1.0 : 0.0) + (nj ? 1.0 : 0.0)) *
                                 rho(i, j);
                }
            }
        }
    }
    if (model.eta != 0.0) {
        for (int i = 0; i < kDim; ++i) {
            for (int j = 0; j < kDim; ++j) {
                if (synof[static_cast<std::size_t>(i)] != synof[static_cast<std::size_t>(j)])
                    continue;
                out(target[static_cast<std::size_t>(i)],
                    target[static_cast<std::size_t>(j)]) += model.eta * rho(i, j);
            }
        }
        out -= model.eta * rho;
    }
    return out;
}

// Superoperator matrix: n=1 in the two-qubit pauli-product basis (16x16),
// n=3 in the six-qubit computational outer-product basis (4096x4096).
inline Superoperator build_xx_superoperator(const XXModel& model) {
    if (model.n == 1) {
        return ops::superoperator_matrix(
            [&model](const Matrix& rho) { return detail::joint_action_1q(model, rho); }, 2,
            BasisConvention::pauli(2));
    }
    return ops::superoperator_matrix(
        [&model](const Matrix& rho) { return xx3_rhs(model, rho); }, 6,
        BasisConvention::computational(6));
}

struct XXCoefficients {
    double c;
    double d;
};

// Closed-form C(t), D(t) with w = sqrt(k^2 - 64 a^2)/4 continued into the
// complex plane (imaginary w oscillates, real w relaxes), so the three
// damping regimes emerge from one expression; evaluated through exponentials
// to stay finite at large times.
inline XXCoefficients xx_coefficients(double alpha, double kappa, double eta, double t) {
    if (t < 0.0) throw std::invalid_argument("xx_coefficients: t must be non-negative");
    const Complex w = std::sqrt(Complex(kappa * kappa - 64 * alpha * alpha, 0.0)) / 4.0;
    const double p = eta + kappa / 4;
    const Complex ch = numerics::damped_cosh(p, w, t);
    const Complex sh = numerics::damped_sinhc(p, w, t);  // e^{-pt} sin(zt)/z for w = iz
    const double c = (kappa / 4 * sh + ch).real();
    if (kappa + 2 * eta == 0.0) return {c, 0.0};
    const double dinf =
        eta * (kappa + 2 * eta) / (eta * (kappa + 2 * eta) + 8 * alpha * alpha);
    const double d =
        dinf *
        (1.0 + ((32 * alpha * alpha / (kappa + 2 * eta) - kappa) * sh / 4.0 - ch).real());
    return {c, d};
}

inline double xx_asymptotic_d(double alpha, double kappa, double eta) {
    return eta * (kappa + 2 * eta) / (eta * (kappa + 2 * eta) + 8 * alpha * alpha);
}

// Reduced system state as pauli half-coefficients (1, x, y, z)/2.
inline Eigen::Vector4d reduced_state_1q(const XXModel& model, double x0, double y0, double z0,
                                        double t) {
    const auto [c, d] = xx_coefficients(model.alpha, model.kappa, model.eta, t);
    return {0.5, 0.5 * x0 * std::exp(-model.eta * t), 0.5 * c * y0, 0.5 * (c * z0 + d)};
}

inline double fidelity_xx_1q(double alpha, double kappa, double eta, double t) {
    const auto [c, d] = xx_coefficients(alpha, kappa, eta, t);
    return (1.0 + c + d) / 2.0;
}

inline double fidelity_xx_asymptote(double alpha, double kappa, double eta) {
    return (eta * (kappa + 2 * eta) + 4 * alpha * alpha) /
           (eta * (kappa + 2 * eta) + 8 * alpha * alpha);
}

struct XXTrace {
    std::vector<double> times;
    std::vector<double> fidelity;
    std::vector<double> trace;
};

// Integrates the 64x64 joint density matrix by applying the master-equation
// right-hand side directly; rho0 must be codeword (x) |000><000| bath.
inline XXTrace simulate_xx_code(const XXModel& model, const DensityMatrix& rho0,
                                const std::vector<double>& t_grid,
                                const numerics::IvpOptions& opt = {.rel_tol = 1e-9,
                                                                   .abs_tol = 1e-12}) {
    if (model.n != 3) throw std::invalid_argument("simulate_xx_code: model.n must be 3");
    if (rho0.n_qubits != 6) {
        throw std::invalid_argument("simulate_xx_code: state must cover 6 qubits");
    }
    const DensityMatrix ref = ops::partial_trace(rho0, {1, 2, 3});

    auto rhs = [&model](double, const Vector& y) {
        const Eigen::Map<const Matrix> rho(y.data(), 64, 64);
        const Matrix out = xx3_rhs(model, rho);
        return Vector(Eigen::Map<const Vector>(out.data(), 64 * 64));
    };
    const Vector y0 = Eigen::Map<const Vector>(rho0.rho.data(), 64 * 64);
    const auto states = numerics::integrate_ivp(rhs, y0, t_grid, opt);

    XXTrace out;
    out.times = t_grid;
    out.fidelity.reserve(t_grid.size());
    out.trace.reserve(t_grid.size());
    for (const auto& s : states) {
        const Eigen::Map<const Matrix> rho(s.data(), 64, 64);
        Complex f = 0.0;
        for (int a = 0; a < 8; ++a) {
            for (int ap = 0; ap < 8; ++ap) {
                if (ref.rho(a, ap) == Complex(0.0, 0.0)) continue;
                for (int b = 0; b < 8; ++b) {
                    f += ref.rho(a, ap) * rho((ap << 3) | b, (a << 3) | b);
                }
            }
        }
        out.fidelity.push_back(f.real());
        out.trace.push_back(rho.trace().real());
    }
    return out;
}

}  // namespace cqec::xxbath
