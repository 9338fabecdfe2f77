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

// numerics.hpp — dense complex linear-algebra facade: matrix exponential,
// eigendecomposition, nullspace, polynomial roots, and an adaptive
// embedded Runge-Kutta initial-value integrator.

#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cqec::numerics {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Thrown when an adaptive integration cannot proceed; carries the time reached.
class IntegrationError : public std::runtime_error {
  public:
    IntegrationError(const std::string& what, double t_reached)
        : std::runtime_error(what), t_reached_(t_reached) {}
    double t_reached() const noexcept { return t_reached_; }

  private:
    double t_reached_;
};

inline void require_square(const Matrix& a, const char* who) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument(std::string(who) + ": matrix must be square");
    }
}

inline void require_finite(const Matrix& a, const char* who) {
    if (!a.allFinite()) {
        throw std::invalid_argument(std::string(who) + ": matrix entries must be finite");
    }
}

// exp(A t) via scaling-and-squaring with Pade approximation (backward stable,
// handles defective inputs such as critically damped generators).
inline Matrix matrix_exponential(const Matrix& a, double t = 1.0) {
    require_square(a, "matrix_exponential");
    require_finite(a, "matrix_exponential");
    return (a * t).exp();
}

struct Spectrum {
    Vector eigenvalues;    // sorted by real part descending, ties by imaginary part
    Matrix eigenvectors;   // columns, same order
    bool diagonalizable;   // false when the eigenvector condition number exceeds the threshold
    double eigenvector_condition;
};

inline constexpr double kDiagonalizableConditionLimit = 1e12;

inline Spectrum eigendecompose(const Matrix& a) {
    require_square(a, "eigendecompose");
    Eigen::ComplexEigenSolver<Matrix> solver(a, /*computeEigenvectors=*/true);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigendecompose: eigensolver failed to converge");
    }
    const Eigen::Index n = a.rows();
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    const Vector& ev = solver.eigenvalues();
    std::sort(order.begin(), order.end(), [&ev](Eigen::Index i, Eigen::Index j) {
        if (ev(i).real() != ev(j).real()) return ev(i).real() > ev(j).real();
        return ev(i).imag() > ev(j).imag();
    });
    Spectrum s;
    s.eigenvalues.resize(n);
    s.eigenvectors.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        s.eigenvalues(i) = ev(order[static_cast<std::size_t>(i)]);
        s.eigenvectors.col(i) = solver.eigenvectors().col(order[static_cast<std::size_t>(i)]);
    }
    Eigen::JacobiSVD<Matrix> svd(s.eigenvectors);
    const double smin = svd.singularValues()(n - 1);
    s.eigenvector_condition =
        smin > 0.0 ? svd.singularValues()(0) / smin : std::numeric_limits<double>::infinity();
    s.diagonalizable = s.eigenvector_condition <= kDiagonalizableConditionLimit;
    return s;
}

// Orthonormal basis of the right nullspace at singular-value threshold tol*sigma_max.
inline std::vector<Vector> nullspace(const Matrix& a, double tol = 1e-10) {
    require_square(a, "nullspace");
    if (tol <= 0.0) throw std::invalid_argument("nullspace: tol must be positive");
    Eigen::BDCSVD<Matrix> svd(a, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double cutoff = tol * (sv.size() > 0 ? sv(0) : 0.0);
    std::vector<Vector> basis;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) <= cutoff) basis.push_back(svd.matrixV().col(i));
    }
    return basis;
}

// Roots of a real-coefficient polynomial, coefficients ordered from the
// leading power down to the constant term. Companion-matrix eigenvalues
// followed by one Newton polish per root.
inline std::vector<Complex> polynomial_roots(const std::vector<double>& coeffs) {
    std::size_t lead = 0;
    while (lead < coeffs.size() && coeffs[lead] == 0.0) ++lead;
    if (lead == coeffs.size()) {
        throw std::invalid_argument("polynomial_roots: zero polynomial");
    }
    const std::size_t degree = coeffs.size() - lead - 1;
    if (degree == 0) return {};
    std::vector<double> monic(degree);
    for (std::size_t i = 0; i < degree; ++i) monic[i] = coeffs[lead + 1 + i] / coeffs[lead];

    Matrix companion = Matrix::Zero(static_cast<Eigen::Index>(degree),
                                    static_cast<Eigen::Index>(degree));
    for (std::size_t i = 0; i < degree; ++i) {
        companion(0, static_cast<Eigen::Index>(i)) = -monic[i];
        if (i + 1 < degree) companion(static_cast<Eigen::Index>(i) + 1,
                                      static_cast<Eigen::Index>(i)) = 1.0;
    }
    Eigen::ComplexEigenSolver<Matrix> solver(companion, /*computeEigenvectors=*/false);
    auto eval = [&coeffs, lead](Complex x) {
        Complex p = 0.0, dp = 0.0;
        for (std::size_t i = lead; i < coeffs.size(); ++i) {
            dp = dp * x + p;
            p = p * x + coeffs[i];
        }
        return std::pair<Complex, Complex>(p, dp);
    };
    std::vector<Complex> roots;
    roots.reserve(degree);
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(degree); ++i) {
        Complex r = solver.eigenvalues()(i);
        for (int it = 0; it < 2; ++it) {
            auto [p, dp] = eval(r);
            if (std::abs(dp) > 0.0) {
                const Complex step = p / dp;
                if (std::abs(step) < 1.0 + std::abs(r)) r -= step;
            }
        }
        roots.push_back(r);
    }
    std::sort(roots.begin(), roots.end(), [](Complex x, Complex y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    });
    return roots;
}

// e^{-pt} cosh(wt) and e^{-pt} sinh(wt)/w evaluated through exponentials so
// large-t products of huge and tiny factors cannot overflow; w may sit on the
// imaginary axis (oscillatory case), and w = 0 is the critically damped limit.
inline Complex damped_cosh(double p, Complex w, double t) {
    return (std::exp((w - p) * t) + std::exp((-w - p) * t)) / 2.0;
}

inline Complex damped_sinhc(double p, Complex w, double t) {
    if (std::abs(w) * t < 1e-8) {
        const Complex wt = w * t;
        return t * std::exp(-p * t) * (1.0 + wt * wt / 6.0);
    }
    return (std::exp((w - p) * t) - std::exp((-w - p) * t)) / (2.0 * w);
}

struct IvpOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double initial_step = 1e-4;
    long max_steps = 20'000'000;
};

// Adaptive Dormand-Prince 5(4) pair sampled exactly at the requested grid.
// t_grid must be strictly increasing from 0.
inline std::vector<Vector> integrate_ivp(
    const std::function<Vector(double, const Vector&)>& rhs, const Vector& y0,
    const std::vector<double>& t_grid, const IvpOptions& opt = {}) {
    if (opt.rel_tol <= 0.0 || opt.abs_tol <= 0.0) {
        throw std::invalid_argument("integrate_ivp: tolerances must be positive");
    }
    if (t_grid.empty() || t_grid.front() != 0.0) {
        throw std::invalid_argument("integrate_ivp: t_grid must start at 0");
    }
    for (std::size_t i = 1; i < t_grid.size(); ++i) {
        if (t_grid[i] <= t_grid[i - 1]) {
            throw std::invalid_argument("integrate_ivp: t_grid must be strictly increasing");
        }
    }

    // Dormand-Prince coefficients
    static const double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static const double a21 = 1.0 / 5;
    static const double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                        a54 = -212.0 / 729;
    static const double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                        a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                        b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static const double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                        e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                        e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

    std::vector<Vector> out;
    out.reserve(t_grid.size());
    out.push_back(y0);

    Vector y = y0;
    double t = 0.0;
    double h = opt.initial_step;
    Vector k1 = rhs(t, y);
    long steps = 0;

    auto error_norm = [&](const Vector& err, const Vector& ya, const Vector& yb) {
        double acc = 0.0;
        for (Eigen::Index i = 0; i < err.size(); ++i) {
            const double scale =
                opt.abs_tol + opt.rel_tol * std::max(std::abs(ya(i)), std::abs(yb(i)));
            const double q = std::abs(err(i)) / scale;
            acc += q * q;
        }
        return std::sqrt(acc / static_cast<double>(err.size()));
    };

    for (std::size_t g = 1; g < t_grid.size(); ++g) {
        const double t_target = t_grid[g];
        while (t < t_target) {
            if (++steps > opt.max_steps) {
                throw IntegrationError("integrate_ivp: step budget exhausted at t=" +
                                           std::to_string(t), t);
            }
            bool clipped = false;
            double hs = h;
            if (t + hs >= t_target) {
                hs = t_target - t;
                clipped = true;
            }
            if (!(hs > 0.0) || t + hs == t) {
                throw IntegrationError("integrate_ivp: step size underflow at t=" +
                                           std::to_string(t), t);
            }
            const Vector k2 = rhs(t + c2 * hs, y + hs * (a21 * k1));
            const Vector k3 = rhs(t + c3 * hs, y + hs * (a31 * k1 + a32 * k2));
            const Vector k4 = rhs(t + c4 * hs, y + hs * (a41 * k1 + a42 * k2 + a43 * k3));
            const Vector k5 =
                rhs(t + c5 * hs, y + hs * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
            const Vector k6 =
                rhs(t + hs, y + hs * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
            const Vector y5 = y + hs * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
            const Vector k7 = rhs(t + hs, y5);
            const Vector err =
                hs * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
            const double en = error_norm(err, y, y5);
            if (en <= 1.0) {
                t += hs;
                y = y5;
                k1 = k7;  // FSAL
            }
            const double factor =
                en > 0.0 ? std::clamp(0.9 * std::pow(en, -0.2), 0.2, 5.0) : 5.0;
            const double h_new = hs * factor;
            if (!clipped || en > 1.0) {
                h = h_new;
            } else {
                h = std::max(h, h_new);
            }
            if (h < 1e-14 * std::max(1.0, std::abs(t))) {
                throw IntegrationError("integrate_ivp: step size underflow at t=" +
                                           std::to_string(t), t);
            }
        }
        out.push_back(y);
    }
    return out;
}

}  // namespace cqec::numerics
