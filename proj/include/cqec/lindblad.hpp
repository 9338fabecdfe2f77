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

// lindblad.hpp — Markovian dynamics: Liouvillian assembly, propagation,
// stationary states, and the closed-form solutions for the one- and
// three-qubit codes.

#pragma once

#include "cqec/codes.hpp"
#include "cqec/error_classes.hpp"
#include "cqec/numerics.hpp"
#include "cqec/operators.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

namespace cqec::lindblad {

using codes::ClassGenerator;
using codes::StabilizerCode;
using numerics::Complex;
using numerics::Matrix;
using numerics::RealMatrix;
using numerics::RealVector;
using numerics::Vector;
using ops::BasisConvention;
using ops::DensityMatrix;
using ops::PauliString;
using ops::Superoperator;

enum class Channel { BitFlip, Depolarizing };

struct MarkovModel {
    const StabilizerCode* code = nullptr;
    Channel channel = Channel::BitFlip;
    double gamma = 0.0;
    double eta = 0.0;
    std::optional<Matrix> hamiltonian;

    MarkovModel(const StabilizerCode& c, Channel ch, double g, double e,
                std::optional<Matrix> h = std::nullopt)
        : code(&c), channel(ch), gamma(g), eta(e), hamiltonian(std::move(h)) {
        if (gamma < 0.0 || eta < 0.0) {
            throw std::invalid_argument("MarkovModel: rates must be non-negative");
        }
        if (hamiltonian) {
            if ((*hamiltonian - hamiltonian->adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
                throw std::invalid_argument("MarkovModel: hamiltonian must be Hermitian");
            }
        }
    }
};

inline Matrix bitflip_dissipator_action(int n, const Matrix& rho) {
    Matrix out = -static_cast<double>(n) * rho;
    for (int site = 1; site <= n; ++site) {
        const Matrix x = ops::pauli_to_matrix(PauliString::single(n, site, 1));
        out += x * rho * x;
    }
    return out;
}

inline Matrix dissipator_action(Channel channel, int n, const Matrix& rho) {
    return channel == Channel::BitFlip ? bitflip_dissipator_action(n, rho)
                                       : codes::depolarizing_dissipator_action(n, rho);
}

// Full generator -i[H,.] + gamma D + eta Gamma applied to a raw matrix.
inline Matrix liouvillian_action(const MarkovModel& model, const Matrix& rho) {
    Matrix out = model.gamma * dissipator_action(model.channel, model.code->n, rho);
    out += model.eta * (codes::apply_correction_map(*model.code, rho) - rho);
    if (model.hamiltonian) {
        out += Complex(0, -1) * (*model.hamiltonian * rho - rho * *model.hamiltonian);
    }
    return out;
}

inline ClassGenerator dissipator_kind(Channel channel) {
    return channel == Channel::BitFlip ? ClassGenerator::BitflipDissipator
                                       : ClassGenerator::DepolarizingDissipator;
}

// Class-basis jump matrix gamma*L1 + eta*L0 for the model's code.
inline RealMatrix class_liouvillian(const MarkovModel& model) {
    if (model.hamiltonian) {
        throw std::invalid_argument("class_liouvillian: Hamiltonian term not reducible");
    }
    const RealMatrix l1 =
        codes::class_jump_matrix(*model.code, dissipator_kind(model.channel));
    const RealMatrix l0 = codes::class_jump_matrix(*model.code, ClassGenerator::Correction);
    return model.gamma * l1 + model.eta * l0;
}

inline Superoperator build_liouvillian(const MarkovModel& model,
                                       const BasisConvention& basis) {
    if (basis.kind == BasisConvention::Kind::ErrorClass) {
        const RealMatrix m = class_liouvillian(model);
        return Superoperator{m.cast<Complex>(),
                             BasisConvention::error_class(static_cast<int>(m.rows()))};
    }
    if (basis.n_qubits != model.code->n) {
        throw std::invalid_argument("build_liouvillian: basis/code dimension mismatch");
    }
    return ops::superoperator_matrix(
        [&model](const Matrix& rho) { return liouvillian_action(model, rho); },
        model.code->n, basis);
}

inline DensityMatrix propagate(const MarkovModel& model, const DensityMatrix& rho0,
                               double t) {
    if (t < 0.0) throw std::invalid_argument("propagate: t must be non-negative");
    const auto basis = BasisConvention::computational(model.code->n);
    const Superoperator l = build_liouvillian(model, basis);
    const Vector v = numerics::matrix_exponential(l.m, t) * ops::vectorize(rho0, basis);
    Matrix rho = ops::devectorize(v, basis);
    rho = (rho + rho.adjoint().eval()) / 2.0;  // scrub numerical asymmetry
    return DensityMatrix(model.code->n, std::move(rho));
}

inline RealVector propagate_class(const MarkovModel& model, const RealVector& q0, double t) {
    if (t < 0.0) throw std::invalid_argument("propagate_class: t must be non-negative");
    const RealMatrix m = class_liouvillian(model);
    if (q0.size() != m.rows()) {
        throw std::invalid_argument("propagate_class: state size mismatch");
    }
    const Vector v = numerics::matrix_exponential(m.cast<Complex>(), t) * q0.cast<Complex>();
    return v.real();
}

// Trace-preservation defect per column: the rate at which the generator
// changes the trace. Pauli basis: identity-word row; computational basis:
// sum over diagonal-component rows; class basis: full column sums.
inline double trace_defect(const Superoperator& l) {
    using Kind = BasisConvention::Kind;
    switch (l.basis.kind) {
        case Kind::PauliProduct:
            return l.m.row(0).cwiseAbs().maxCoeff();
        case Kind::ComputationalOuter: {
            const Eigen::Index dim = Eigen::Index(1) << l.basis.n_qubits;
            double worst = 0.0;
            for (Eigen::Index j = 0; j < l.m.cols(); ++j) {
                Complex acc = 0.0;
                for (Eigen::Index a = 0; a < dim; ++a) acc += l.m(a * dim + a, j);
                worst = std::max(worst, std::abs(acc));
            }
            return worst;
        }
        case Kind::ErrorClass:
            return l.m.colwise().sum().cwiseAbs().maxCoeff();
    }
    return 0.0;
}

// Stationary state in the class basis: unique nullspace direction when it is
// one-dimensional (normalized to unit probability sum), otherwise the
// spectral projection of q0 onto the nullspace.
inline RealVector stationary_class_state(const MarkovModel& model,
                                         std::optional<RealVector> q0 = std::nullopt) {
    const RealMatrix m = class_liouvillian(model);
    const auto null = numerics::nullspace(m.cast<Complex>(), 1e-10);
    if (null.empty()) throw std::runtime_error("stationary_class_state: empty nullspace");
    if (null.size() == 1) {
        RealVector v = null[0].real();
        const double total = v.sum();
        if (std::abs(total) < 1e-12) {
            throw std::runtime_error("stationary_class_state: traceless null vector");
        }
        return v / total;
    }
    if (!q0) {
        throw std::invalid_argument(
            "stationary_class_state: degenerate nullspace needs an initial state");
    }
    // spectral projector: average of exp(M t) at large t via eigendecomposition
    const auto spec = numerics::eigendecompose(m.cast<Complex>());
    const Matrix qinv = spec.eigenvectors.inverse();
    Vector w = qinv * q0->cast<Complex>();
    for (Eigen::Index i = 0; i < w.size(); ++i) {
        if (std::abs(spec.eigenvalues(i)) > 1e-9) w(i) = 0.0;
    }
    return (spec.eigenvectors * w).real();
}

// One-qubit stationary Bloch state (1/2)(I + eta/(2 gamma + eta) Z).
inline DensityMatrix stationary_state_1q(double gamma, double eta) {
    if (gamma < 0 || eta < 0 || gamma + eta <= 0.0) {
        throw std::invalid_argument("stationary_state_1q: bad rates");
    }
    const double z = eta / (2 * gamma + eta);
    Matrix rho{{Complex((1 + z) / 2, 0), 0}, {0, Complex((1 - z) / 2, 0)}};
    return DensityMatrix(1, std::move(rho));
}

// Closed-form one-qubit solution as pauli half-coefficients (1,x,y,z)/2.
inline Eigen::Vector4d closed_form_1q(double x0, double y0, double z0, double gamma,
                                      double eta, double t) {
    const double decay = std::exp(-(2 * gamma + eta) * t);
    const double feed = (2 * gamma + eta) > 0.0
                            ? eta / (2 * gamma + eta) * (1.0 - decay)
                            : 0.0;
    return {0.5, 0.5 * x0 * std::exp(-eta * t), 0.5 * y0 * decay,
            0.5 * (z0 * decay + feed)};
}

// Closed-form three-qubit class coefficients from q(0) = (1,0,0,0).
inline Eigen::Vector4d closed_form_3q_coeffs(double gamma, double eta, double t) {
    const double w = std::sqrt(eta * eta + 16 * eta * gamma + 16 * gamma * gamma);
    const double slow = std::exp(-(eta + 4 * gamma) * t);
    const double even = (eta + gamma + 3 * gamma * slow) / (2 * (eta + 4 * gamma));
    const double p = eta / 2 + 4 * gamma;
    const double ch = numerics::damped_cosh(p, w / 2, t).real();
    const double sh = numerics::damped_sinhc(p, w / 2, t).real() / 2.0;  // e^{-pt} sinh(tw/2)/w
    const double odd = 0.5 * (ch + (eta + 2 * gamma) * sh);
    const double mid = 1.5 * gamma * (1.0 - slow) / (eta + 4 * gamma);
    const double split = 3 * gamma * sh;
    return {even + odd, mid + split, mid - split, even - odd};
}

inline double fidelity_markov_1q(double gamma, double eta, double t) {
    if (t < 0.0) throw std::invalid_argument("fidelity_markov_1q: t must be non-negative");
    if (2 * gamma + eta == 0.0) return 1.0;
    return (gamma + eta) / (2 * gamma + eta) +
           gamma / (2 * gamma + eta) * std::exp(-(2 * gamma + eta) * t);
}

inline double fidelity_markov_3q(double gamma, double eta, double t) {
    if (t < 0.0) throw std::invalid_argument("fidelity_markov_3q: t must be non-negative");
    const double w = std::sqrt(16 * gamma * gamma + 16 * gamma * eta + eta * eta);
    const double p = 4 * gamma + eta / 2;
    const double ch = numerics::damped_cosh(p, w / 2, t).real();
    const double sh = numerics::damped_sinhc(p, w / 2, t).real() / 2.0;
    return 0.5 + 0.5 * (ch + (8 * gamma + eta) * sh);
}

// Base generators of the one-qubit model in the pauli basis (1,x,y,z)/2
// coordinates: dissipator at unit gamma and correction at unit eta.
inline RealMatrix one_qubit_dissipator_pauli() {
    RealMatrix m = RealMatrix::Zero(4, 4);
    m(2, 2) = -2.0;
    m(3, 3) = -2.0;
    return m;
}

inline RealMatrix one_qubit_correction_pauli() {
    RealMatrix m = RealMatrix::Zero(4, 4);
    m(1, 1) = -1.0;
    m(2, 2) = -1.0;
    m(3, 3) = -1.0;
    m(3, 0) = 1.0;
    return m;
}

}  // namespace cqec::lindblad
