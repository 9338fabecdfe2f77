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

// kernels.hpp — memory kernels with rational Laplace transforms: the delta
// kernel (memoryless limit), the decaying exponential a e^{-ct}, and the
// damped kernel with transform (s+a)/(s^2+bs+c).

#pragma once

#include "cqec/numerics.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace cqec::pmme {

using numerics::Complex;

// Rational function in s, coefficients from the leading power down.
struct RationalLaplace {
    std::vector<Complex> num;
    std::vector<Complex> den;

    Complex eval(Complex s) const {
        auto horner = [&s](const std::vector<Complex>& c) {
            Complex acc = 0.0;
            for (const auto& v : c) acc = acc * s + v;
            return acc;
        };
        return horner(num) / horner(den);
    }
    // strictly proper degree of the denominator (state dimension per channel)
    int order() const { return static_cast<int>(den.size()) - 1; }
};

struct MemoryKernel {
    enum class Kind { Delta, Exponential, Damped };
    Kind kind = Kind::Delta;
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;

    static MemoryKernel delta() { return {Kind::Delta, 0.0, 0.0, 0.0}; }
    static MemoryKernel exponential(double amplitude, double decay) {
        if (decay <= 0.0) throw std::invalid_argument("exponential kernel: decay must be > 0");
        return {Kind::Exponential, amplitude, 0.0, decay};
    }
    static MemoryKernel damped(double a_, double b_, double c_) {
        if (c_ <= 0.0) throw std::invalid_argument("damped kernel: c must be > 0");
        return {Kind::Damped, a_, b_, c_};
    }

    double time_eval(double t) const {
        switch (kind) {
            case Kind::Exponential:
                return a * std::exp(-c * t);
            case Kind::Damped: {
                const double disc = b * b - 4 * c;
                const double w = std::sqrt(std::abs(disc));
                const double damp = std::exp(-b / 2 * t);
                if (std::abs(disc) < 1e-14) return damp * (1.0 + (a - b / 2) * t);
                if (disc > 0.0) return damp * ((a - b / 2) / w * std::sinh(w * t) +
                                               std::cosh(w * t));
                return damp * ((a - b / 2) / w * std::sin(w * t) + std::cos(w * t));
            }
            case Kind::Delta:
                throw std::invalid_argument(
                    "MemoryKernel: the delta kernel has no pointwise values");
        }
        return 0.0;
    }

    RationalLaplace laplace() const {
        switch (kind) {
            case Kind::Delta:
                return {{1.0}, {1.0}};
            case Kind::Exponential:
                return {{a}, {1.0, c}};
            case Kind::Damped:
                return {{1.0, a}, {1.0, b, c}};
        }
        return {};
    }

    // k~(s - lambda) as a rational function of s.
    RationalLaplace shifted_laplace(Complex lambda) const {
        switch (kind) {
            case Kind::Delta:
                return {{1.0}, {1.0}};
            case Kind::Exponential:
                return {{a}, {1.0, c - lambda}};
            case Kind::Damped:
                return {{1.0, a - lambda},
                        {1.0, b - 2.0 * lambda, lambda * lambda - b * lambda + c}};
        }
        return {};
    }
};

}  // namespace cqec::pmme
