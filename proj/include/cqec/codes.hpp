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

// codes.hpp — stabilizer-code definitions (1, 3, 5 qubits), syndrome
// extraction, the syndrome-conditioned correction map Phi, and the
// continuous error-correcting generator Gamma = Phi - id.

#pragma once

#include "cqec/operators.hpp"
#include "cqec/pauli.hpp"

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cqec::codes {

using ops::BasisConvention;
using ops::DensityMatrix;
using ops::Matrix;
using ops::PauliString;
using ops::Superoperator;
using numerics::Complex;
using numerics::Vector;

// Syndromes are packed with generator 1 in the most significant bit, so the
// integer reads as the bit string (s1 s2 ... s_{n-k}).
struct StabilizerCode {
    int n = 0;
    int k = 0;
    std::vector<PauliString> generators;
    std::map<std::uint32_t, PauliString> correction_table;
    std::vector<PauliString> logicals;

    int syndrome_bits() const { return n - k; }

    std::string syndrome_string(std::uint32_t s) const {
        std::string out;
        for (int i = syndrome_bits() - 1; i >= 0; --i) out += ((s >> i) & 1u) ? '1' : '0';
        return out;
    }
};

inline std::uint32_t syndrome(const StabilizerCode& code, const PauliString& e) {
    if (e.size() != code.n) throw std::invalid_argument("syndrome: length mismatch");
    std::uint32_t s = 0;
    for (const auto& g : code.generators) {
        s = (s << 1) | (ops::commutes(e, g) ? 0u : 1u);
    }
    return s;
}

namespace detail {
inline void validate(const StabilizerCode& code) {
    for (std::size_t i = 0; i < code.generators.size(); ++i) {
        const auto sq = ops::pauli_multiply(code.generators[i], code.generators[i]);
        if (sq.phase_power() != 0) {
            throw std::logic_error("StabilizerCode: generator does not square to +I");
        }
        for (std::size_t j = i + 1; j < code.generators.size(); ++j) {
            if (!ops::commutes(code.generators[i], code.generators[j])) {
                throw std::logic_error("StabilizerCode: generators must commute");
            }
        }
    }
    const std::uint32_t count = 1u << code.syndrome_bits();
    if (code.correction_table.size() != count) {
        throw std::logic_error("StabilizerCode: correction table incomplete");
    }
    for (const auto& [s, corr] : code.correction_table) {
        if (syndrome(code, corr) != s) {
            throw std::logic_error("StabilizerCode: correction has wrong syndrome");
        }
    }
    for (const auto& l : code.logicals) {
        if (syndrome(code, l) != 0) {
            throw std::logic_error("StabilizerCode: logical anticommutes with a generator");
        }
    }
}
}  // namespace detail

// Single qubit held at |0>: stabilizer Z, corrections {0 -> I, 1 -> X}.
inline const StabilizerCode& one_qubit_code() {
    static const StabilizerCode code = [] {
        StabilizerCode c;
        c.n = 1;
        c.k = 0;
        c.generators = {PauliString::from_string("Z")};
        c.correction_table = {{0u, PauliString::from_string("I")},
                              {1u, PauliString::from_string("X")}};
        detail::validate(c);
        return c;
    }();
    return code;
}

// Three-qubit repetition code against bit flips.
inline const StabilizerCode& three_qubit_code() {
    static const StabilizerCode code = [] {
        StabilizerCode c;
        c.n = 3;
        c.k = 1;
        c.generators = {PauliString::from_string("ZZI"), PauliString::from_string("IZZ")};
        c.correction_table = {{0b00u, PauliString::from_string("III")},
                              {0b10u, PauliString::from_string("XII")},
                              {0b11u, PauliString::from_string("IXI")},
                              {0b01u, PauliString::from_string("IIX")}};
        c.logicals = {PauliString::from_string("XXX"), PauliString::from_string("ZZZ")};
        detail::validate(c);
        return c;
    }();
    return code;
}

// Five-qubit [[5,1,3]] code with the standard single-error lookup table.
inline const StabilizerCode& five_qubit_code() {
    static const StabilizerCode code = [] {
        StabilizerCode c;
        c.n = 5;
        c.k = 1;
        c.generators = {PauliString::from_string("XZZXI"), PauliString::from_string("IXZZX"),
                        PauliString::from_string("XIXZZ"), PauliString::from_string("ZXIXZ")};
        c.logicals = {PauliString::from_string("XXXXX"), PauliString::from_string("ZZZZZ")};
        c.correction_table[0] = PauliString::identity(5);
        for (int site = 1; site <= 5; ++site) {
            for (std::uint8_t letter : {std::uint8_t{1}, std::uint8_t{2}, std::uint8_t{3}}) {
                const auto e = PauliString::single(5, site, letter);
                const auto s = syndrome(c, e);
                if (c.correction_table.count(s)) {
                    throw std::logic_error("five_qubit_code: duplicate syndrome");
                }
                c.correction_table[s] = e;
            }
        }
        detail::validate(c);
        return c;
    }();
    return code;
}

// Pure encoded state a|000> + b|111>.
inline DensityMatrix encode_three_qubit(Complex a, Complex b) {
    if (std::abs(std::norm(a) + std::norm(b) - 1.0) > 1e-12) {
        throw std::invalid_argument("encode_three_qubit: amplitudes must be normalized");
    }
    Vector psi = Vector::Zero(8);
    psi(0) = a;
    psi(7) = b;
    return DensityMatrix(3, psi * psi.adjoint());
}

// Projector onto the code space: product of (I + S_i)/2.
inline Matrix code_projector(const StabilizerCode& code) {
    const Eigen::Index dim = Eigen::Index(1) << code.n;
    Matrix p = Matrix::Identity(dim, dim);
    for (const auto& g : code.generators) {
        p = p * (Matrix::Identity(dim, dim) + ops::pauli_to_matrix(g)) / 2.0;
    }
    return p;
}

// Projector onto the syndrome-s subspace: product of (I + (-1)^{s_i} S_i)/2.
inline Matrix syndrome_projector(const StabilizerCode& code, std::uint32_t s) {
    const Eigen::Index dim = Eigen::Index(1) << code.n;
    Matrix p = Matrix::Identity(dim, dim);
    const int bits = code.syndrome_bits();
    for (int i = 0; i < bits; ++i) {
        const double sign = ((s >> (bits - 1 - i)) & 1u) ? -1.0 : 1.0;
        p = p * (Matrix::Identity(dim, dim) +
                 sign * ops::pauli_to_matrix(code.generators[static_cast<std::size_t>(i)])) /
            2.0;
    }
    return p;
}

// Kraus operators C_s P_s of the correction map, cached per code object
// (the built-in codes are immutable singletons).
inline const std::vector<Matrix>& correction_kraus(const StabilizerCode& code) {
    static std::map<const StabilizerCode*, std::vector<Matrix>> cache;
    auto it = cache.find(&code);
    if (it == cache.end()) {
        std::vector<Matrix> kraus;
        kraus.reserve(code.correction_table.size());
        for (const auto& [s, corr] : code.correction_table) {
            kraus.push_back(ops::pauli_to_matrix(corr) * syndrome_projector(code, s));
        }
        it = cache.emplace(&code, std::move(kraus)).first;
    }
    return it->second;
}

// Phi(rho) = sum_s C_s P_s rho P_s C_s^dagger (applied to a raw matrix so it
// can run inside superoperator probes on non-state basis elements).
inline Matrix apply_correction_map(const StabilizerCode& code, const Matrix& rho) {
    const Eigen::Index dim = Eigen::Index(1) << code.n;
    if (rho.rows() != dim || rho.cols() != dim) {
        throw std::invalid_argument("apply_correction_map: dimension mismatch");
    }
    Matrix out = Matrix::Zero(dim, dim);
    for (const auto& a : correction_kraus(code)) {
        out += a * rho * a.adjoint();
    }
    return out;
}

inline DensityMatrix apply_correction_map(const StabilizerCode& code,
                                          const DensityMatrix& rho) {
    return DensityMatrix(code.n, apply_correction_map(code, rho.rho));
}

// Gamma(rho) = Phi(rho) - rho in the requested full-space basis.
// (The class-basis form lives in error_classes.hpp.)
inline Superoperator correction_generator(const StabilizerCode& code,
                                          const BasisConvention& basis) {
    if (basis.n_qubits != code.n) {
        throw std::invalid_argument("correction_generator: basis/code qubit mismatch");
    }
    return ops::superoperator_matrix(
        [&code](const Matrix& rho) -> Matrix { return apply_correction_map(code, rho) - rho; },
        code.n, basis);
}

// Plain-text table of generators, logicals and the syndrome lookup.
inline std::string export_code_table(const StabilizerCode& code) {
    std::ostringstream os;
    os << "[[" << code.n << "," << code.k << "]] code\n";
    os << "generators:";
    for (const auto& g : code.generators) os << " " << g.to_string();
    os << "\nlogicals:";
    for (const auto& l : code.logicals) os << " " << l.to_string();
    os << "\nsyndrome -> correction\n";
    for (const auto& [s, corr] : code.correction_table) {
        os << "  " << code.syndrome_string(s) << " -> " << corr.to_string() << "\n";
    }
    return os.str();
}

}  // namespace cqec::codes
