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

// pmme.hpp — post-Markovian master equation with memory kernels:
//
//   dq/dt = L0 q(t) + L1 ∫_0^t k(t') exp[(L0+L1)t'] q(t-t') dt'.
//
// Primary solver: eigendecompose L0+L1, turn each scalar convolution with
// the shifted rational kernel into auxiliary linear state variables, and
// propagate the exact augmented linear system by matrix exponential.
// A composite-trapezoid Volterra integrator serves as the independent,
// discretization-based cross-check.

#pragma once

#include "cqec/kernels.hpp"
#include "cqec/lindblad.hpp"
#include "cqec/numerics.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace cqec::pmme {

using codes::ClassGenerator;
using numerics::Complex;
using numerics::Matrix;
using numerics::RealMatrix;
using numerics::RealVector;
using numerics::Vector;

struct PMMEModel {
    Matrix l0;  // correction generator, rate folded in
    Matrix l1;  // error dissipator, rate folded in
    MemoryKernel kernel;

    PMMEModel(Matrix l0_, Matrix l1_, MemoryKernel k)
        : l0(std::move(l0_)), l1(std::move(l1_)), kernel(k) {
        if (l0.rows() != l0.cols() || l0.rows() != l1.rows() || l1.rows() != l1.cols()) {
            throw std::invalid_argument("PMMEModel: generators must be square, same size");
        }
    }

    Eigen::Index dim() const { return l0.rows(); }
};

// Exact augmented generator: state [q; z_1; ...; z_n] where z_i realizes the
// convolution of the i-th eigenmode with the shifted kernel.
inline Matrix pmme_augmented_matrix(const PMMEModel& model) {
    const Eigen::Index n = model.dim();
    if (model.kernel.kind == MemoryKernel::Kind::Delta) {
        return model.l0 + model.l1;
    }
    const auto spec = numerics::eigendecompose(model.l0 + model.l1);
    if (!spec.diagonalizable) {
        throw std::runtime_error("pmme_augmented_matrix: L0+L1 not reliably diagonalizable");
    }
    const Matrix& q = spec.eigenvectors;
    const Matrix qinv = q.inverse();
    const Matrix l1q = model.l1 * q;
    const int m = model.kernel.laplace().order();
    const Eigen::Index total = n * (1 + m);
    Matrix big = Matrix::Zero(total, total);
    big.topLeftCorner(n, n) = model.l0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto rat = model.kernel.shifted_laplace(spec.eigenvalues(i));
        const Eigen::Index base = n + m * i;
        if (m == 1) {
            // transfer beta/(s + alpha1): z' = -alpha1 z + beta x, u = z
            big.col(base).head(n) = l1q.col(i);
            big(base, base) = -rat.den[1];
            big.row(base).head(n) = rat.num[0] * qinv.row(i);
        } else {
            // transfer (beta1 s + beta2)/(s^2 + alpha1 s + alpha2), controllable
            // canonical form: z1' = z2, z2' = -alpha2 z1 - alpha1 z2 + x,
            // u = beta2 z1 + beta1 z2
            const Complex beta1 = rat.num[0], beta2 = rat.num[1];
            const Complex alpha1 = rat.den[1], alpha2 = rat.den[2];
            big.col(base).head(n) = beta2 * l1q.col(i);
            big.col(base + 1).head(n) = beta1 * l1q.col(i);
            big(base, base + 1) = 1.0;
            big(base + 1, base) = -alpha2;
            big(base + 1, base + 1) = -alpha1;
            big.row(base + 1).head(n) = qinv.row(i);
        }
    }
    return big;
}

struct PmmeTrajectory {
    std::vector<double> times;
    std::vector<RealVector> states;
    bool volterra_fallback = false;
    double max_imaginary_residue = 0.0;
};

// Composite-trapezoid Volterra solver with full stored history, O(N^2).
inline PmmeTrajectory pmme_volterra(const PMMEModel& model, const RealVector& q0,
                                    double t_max, double h) {
    if (h <= 0.0) throw std::invalid_argument("pmme_volterra: step must be positive");
    const Eigen::Index n = model.dim();
    if (q0.size() != n) throw std::invalid_argument("pmme_volterra: state size mismatch");
    const long nsteps = std::lround(t_max / h);
    const RealMatrix l0 = model.l0.real();
    const RealMatrix l1 = model.l1.real();

    PmmeTrajectory out;
    out.times.reserve(static_cast<std::size_t>(nsteps) + 1);
    out.states.reserve(static_cast<std::size_t>(nsteps) + 1);
    out.states.push_back(q0);
    out.times.push_back(0.0);

    if (model.kernel.kind == MemoryKernel::Kind::Delta) {
        // memoryless limit: implicit trapezoid on q' = (L0+L1) q
        const RealMatrix g = l0 + l1;
        const RealMatrix stepper =
            (RealMatrix::Identity(n, n) - h / 2 * g).inverse() *
            (RealMatrix::Identity(n, n) + h / 2 * g);
        RealVector q = q0;
        for (long k = 1; k <= nsteps; ++k) {
            q = stepper * q;
            out.states.push_back(q);
            out.times.push_back(static_cast<double>(k) * h);
        }
        return out;
    }

    // weights E_j = k(j h) exp(G j h)
    const RealMatrix w = numerics::matrix_exponential((l0 + l1).cast<Complex>(), h).real();
    std::vector<RealMatrix> weights(static_cast<std::size_t>(nsteps) + 1);
    RealMatrix p = RealMatrix::Identity(n, n);
    for (long j = 0; j <= nsteps; ++j) {
        weights[static_cast<std::size_t>(j)] =
            model.kernel.time_eval(static_cast<double>(j) * h) * p;
        if (j < nsteps) p = w * p;
    }
    const RealMatrix solver =
        (RealMatrix::Identity(n, n) - h / 2 * l0 - h * h / 4 * (l1 * weights[0])).inverse();
    for (long k = 0; k < nsteps; ++k) {
        RealVector conv_k = RealVector::Zero(n);
        if (k >= 1) {
            for (long j = 0; j <= k; ++j) {
                const double wt = (j == 0 || j == k) ? h / 2 : h;
                conv_k += wt * (weights[static_cast<std::size_t>(j)] *
                                out.states[static_cast<std::size_t>(k - j)]);
            }
        }
        const RealVector f_k = l0 * out.states[static_cast<std::size_t>(k)] + l1 * conv_k;
        RealVector partial = RealVector::Zero(n);
        for (long j = 1; j <= k + 1; ++j) {
            const double wt = (j == k + 1) ? h / 2 : h;
            partial += wt * (weights[static_cast<std::size_t>(j)] *
                             out.states[static_cast<std::size_t>(k + 1 - j)]);
        }
        const RealVector rhs =
            out.states[static_cast<std::size_t>(k)] + h / 2 * f_k + h / 2 * (l1 * partial);
        out.states.push_back(solver * rhs);
        out.times.push_back(static_cast<double>(k + 1) * h);
    }
    return out;
}

// Exact propagation through the augmented system, sampled on t_grid. Falls
// back to the Volterra integrator when L0+L1 is too close to defective.
inline PmmeTrajectory pmme_propagate(const PMMEModel& model, const RealVector& q0,
                                     const std::vector<double>& t_grid,
                                     double fallback_step = 1e-4) {
    const Eigen::Index n = model.dim();
    if (q0.size() != n) throw std::invalid_argument("pmme_propagate: state size mismatch");
    if (t_grid.empty() || t_grid.front() != 0.0) {
        throw std::invalid_argument("pmme_propagate: t_grid must start at 0");
    }
    Matrix big;
    try {
        big = pmme_augmented_matrix(model);
    } catch (const std::runtime_error&) {
        PmmeTrajectory traj =
            pmme_volterra(model, q0, t_grid.back(), fallback_step);
        PmmeTrajectory sampled;
        sampled.volterra_fallback = true;
        sampled.times = t_grid;
        for (const double t : t_grid) {
            const auto idx = static_cast<std::size_t>(std::lround(t / fallback_step));
            sampled.states.push_back(traj.states.at(std::min(idx, traj.states.size() - 1)));
        }
        return sampled;
    }
    Vector v0 = Vector::Zero(big.rows());
    v0.head(n) = q0.cast<Complex>();
    PmmeTrajectory out;
    out.times = t_grid;
    out.states.reserve(t_grid.size());
    for (const double t : t_grid) {
        if (t < 0.0) throw std::invalid_argument("pmme_propagate: negative time");
        const Vector v = numerics::matrix_exponential(big, t) * v0;
        out.max_imaginary_residue =
            std::max(out.max_imaginary_residue, v.head(n).imag().cwiseAbs().maxCoeff());
        out.states.push_back(v.head(n).real());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Closed forms for the exponential kernel a e^{-ct}.
// ---------------------------------------------------------------------------

struct XiChi {
    double xi;
    double chi;
};

// Time-dependent amplitudes of the one-qubit solution. The nominal branch
// has (c/2+gamma)^2 > 2 gamma a; other parameters evaluate through the
// complex continuation of the same expression.
inline XiChi xi_chi_closed_form(double a, double c, double gamma, double eta, double t) {
    if (t < 0.0) throw std::invalid_argument("xi_chi_closed_form: t must be non-negative");
    const Complex w = std::sqrt(Complex((c / 2 + gamma) * (c / 2 + gamma) - 2 * gamma * a, 0));
    const double p = c / 2 + gamma + eta;
    const Complex ch = numerics::damped_cosh(p, w, t);     // e^{-pt} cosh(wt)
    const Complex sh = numerics::damped_sinhc(p, w, t);    // e^{-pt} sinh(wt)/w
    const double xi = (ch + (c / 2 + gamma) * sh).real();
    if (eta == 0.0) return {xi, 0.0};  // every chi term carries a factor eta

    const double delta = 2 * a * gamma + eta * (c + 2 * gamma + eta);
    const double pc = (eta - c) * (2 * gamma + eta) + 2 * gamma * a;  // P(-c)
    if (std::abs(pc) < 1e-12 || delta <= 0.0) {
        throw std::invalid_argument(
            "xi_chi_closed_form: degenerate parameters (pole collision); use the solver");
    }
    const double g2 = (w * w).real() + (gamma + eta) * (gamma + eta) - c * c / 4;
    const double term_stat = eta / 2 * (c + 2 * gamma + eta) / delta;
    const double term_osc =
        eta / 2 *
        ((4 * a * gamma - (c + 2 * gamma) * (c + 2 * gamma + eta)) / delta * sh / 2.0 -
         (c + 2 * gamma + eta) / delta * ch)
            .real();
    const double term_pole =
        -a * gamma * eta / (c * delta) + a * gamma * eta * std::exp(-c * t) / (c * pc) -
        a * gamma * eta * (g2 * sh + 2 * (gamma + eta) * ch).real() / (delta * pc);
    return {xi, term_stat + term_osc + term_pole};
}

// F = (1 + xi)/2 + chi for the initial state |0><0|. Exponential kernels use
// the closed form; the delta kernel reduces to the Markovian fidelity; the
// damped kernel is evaluated through the augmented solver.
inline double fidelity_pmme_1q(const MemoryKernel& kernel, double gamma, double eta,
                               double t) {
    switch (kernel.kind) {
        case MemoryKernel::Kind::Delta:
            return lindblad::fidelity_markov_1q(gamma, eta, t);
        case MemoryKernel::Kind::Exponential: {
            const auto [xi, chi] = xi_chi_closed_form(kernel.a, kernel.c, gamma, eta, t);
            return (1.0 + xi) / 2.0 + chi;
        }
        case MemoryKernel::Kind::Damped: {
            const PMMEModel model(
                (eta * lindblad::one_qubit_correction_pauli()).cast<Complex>(),
                (gamma * lindblad::one_qubit_dissipator_pauli()).cast<Complex>(), kernel);
            RealVector q0(4);
            q0 << 0.5, 0.0, 0.0, 0.5;
            const auto traj = pmme_propagate(model, q0, {0.0, t});
            return 0.5 + traj.states.back()(3);
        }
    }
    return 0.0;
}

// Overlap fidelity q0+q1 of the three-qubit code for the kernel c e^{-ct}.
inline double fidelity_pmme_3q_closed(double c, double gamma, double eta, double t) {
    if (t < 0.0) throw std::invalid_argument("fidelity_pmme_3q_closed: t >= 0 required");
    const double w =
        std::sqrt(16 * gamma * gamma + 16 * gamma * eta + eta * eta);
    const double den = 1.0 - (8 * gamma + eta) / c + 12 * (gamma / c) * (gamma / c);
    if (std::abs(den) < 1e-12) {
        throw std::invalid_argument(
            "fidelity_pmme_3q_closed: degenerate decay rate (pole collision)");
    }
    const double p = 4 * gamma + eta / 2;
    const double ch = numerics::damped_cosh(p, w / 2, t).real();
    const double sh = numerics::damped_sinhc(p, w / 2, t).real() / 2.0;
    const double val =
        12 * (gamma / c) * (gamma / c) * std::exp(-c * t) +
        (1.0 - (8 * gamma + eta) / c) * ch +
        (8 * gamma * (1.0 - 5 * gamma / c) + eta * (1.0 - 16 * gamma / c) -
         eta * eta / c) *
            sh;
    return 0.5 + 0.5 * val / den;
}

struct ClassFidelityTrace {
    std::vector<double> times;
    std::vector<double> fidelity;
    std::vector<RealVector> states;
    bool volterra_fallback = false;
};

// Class-basis PMME run for a coded model; fidelity = q0 + q1.
inline ClassFidelityTrace pmme_class_fidelity(const RealMatrix& l0, const RealMatrix& l1,
                                              const MemoryKernel& kernel,
                                              const std::vector<double>& t_grid) {
    const PMMEModel model(l0.cast<Complex>(), l1.cast<Complex>(), kernel);
    RealVector q0 = RealVector::Zero(l0.rows());
    q0(0) = 1.0;
    const auto traj = pmme_propagate(model, q0, t_grid);
    ClassFidelityTrace out;
    out.times = t_grid;
    out.states = traj.states;
    out.volterra_fallback = traj.volterra_fallback;
    out.fidelity.reserve(traj.states.size());
    for (const auto& q : traj.states) out.fidelity.push_back(q(0) + q(1));
    return out;
}

// Five-qubit overlap fidelity for the exponential kernel c e^{-ct}.
inline ClassFidelityTrace pmme_5q(double c, double gamma, double eta,
                                  const std::vector<double>& t_grid) {
    const auto& code = codes::five_qubit_code();
    const RealMatrix l1 =
        gamma * codes::class_jump_matrix(code, ClassGenerator::DepolarizingDissipator);
    const RealMatrix l0 =
        eta * codes::class_jump_matrix(code, ClassGenerator::Correction);
    return pmme_class_fidelity(l0, l1, MemoryKernel::exponential(c, c), t_grid);
}

}  // namespace cqec::pmme
