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

// operators.hpp — density matrices, vectorization conventions, basis
// changes, partial trace, superoperator assembly by column probing, and
// the binary-string indexing used for multi-qubit construction.

#pragma once

#include "cqec/numerics.hpp"
#include "cqec/pauli.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace cqec::ops {

using numerics::Vector;

struct DensityMatrix {
    int n_qubits = 0;
    Matrix rho;

    DensityMatrix() = default;
    DensityMatrix(int n, Matrix m) : n_qubits(n), rho(std::move(m)) {
        const Eigen::Index dim = Eigen::Index(1) << n_qubits;
        if (rho.rows() != dim || rho.cols() != dim) {
            throw std::invalid_argument("DensityMatrix: dimension must be 2^n");
        }
        if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
            throw std::invalid_argument("DensityMatrix: not Hermitian");
        }
        if (std::abs(rho.trace() - Complex(1.0, 0.0)) > 1e-10) {
            throw std::invalid_argument("DensityMatrix: trace must be 1");
        }
    }

    static DensityMatrix pure(int n, const Vector& psi) {
        Vector v = psi / psi.norm();
        return DensityMatrix(n, v * v.adjoint());
    }

    double min_eigenvalue() const {
        Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
        return es.eigenvalues()(0);
    }
};

struct BasisConvention {
    enum class Kind { PauliProduct, ComputationalOuter, ErrorClass };
    Kind kind = Kind::PauliProduct;
    int n_qubits = 0;
    // ErrorClass bases carry their own dimension (number of classes).
    int class_count = 0;

    static BasisConvention pauli(int n) { return {Kind::PauliProduct, n, 0}; }
    static BasisConvention computational(int n) { return {Kind::ComputationalOuter, n, 0}; }
    static BasisConvention error_class(int classes) { return {Kind::ErrorClass, 0, classes}; }

    Eigen::Index dim() const {
        if (kind == Kind::ErrorClass) return class_count;
        return Eigen::Index(1) << (2 * n_qubits);
    }
    bool operator==(const BasisConvention&) const = default;
};

struct Superoperator {
    Matrix m;
    BasisConvention basis;
};

// Pauli word for a base-4 code, qubit 1 most significant.
inline PauliString word_from_code(int n, std::uint32_t code) {
    std::vector<std::uint8_t> letters(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        letters[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(code & 3u);
        code >>= 2;
    }
    return PauliString(std::move(letters));
}

// Index of the outer-product component |ket><bra| : ket bits then bra bits,
// qubit 1 most significant within each group (row-major vec of the matrix).
inline Eigen::Index binary_index(std::uint32_t ket, std::uint32_t bra, int n_qubits) {
    return (static_cast<Eigen::Index>(ket) << n_qubits) | static_cast<Eigen::Index>(bra);
}

inline Eigen::Index binary_index(const std::vector<int>& ket_bits,
                                 const std::vector<int>& bra_bits) {
    if (ket_bits.size() != bra_bits.size()) {
        throw std::invalid_argument("binary_index: ket/bra length mismatch");
    }
    std::uint32_t ket = 0, bra = 0;
    for (std::size_t i = 0; i < ket_bits.size(); ++i) {
        if ((ket_bits[i] & ~1) || (bra_bits[i] & ~1)) {
            throw std::invalid_argument("binary_index: labels must be 0 or 1");
        }
        ket = (ket << 1) | static_cast<std::uint32_t>(ket_bits[i]);
        bra = (bra << 1) | static_cast<std::uint32_t>(bra_bits[i]);
    }
    return binary_index(ket, bra, static_cast<int>(ket_bits.size()));
}

// Pauli-product coefficients c_P = Tr(P rho)/2^n; computational vectorization
// is the row-major vec (entry (ket,bra) at binary_index).
inline Vector vectorize(const Matrix& rho, const BasisConvention& basis) {
    const int n = basis.n_qubits;
    const Eigen::Index dim = Eigen::Index(1) << n;
    if (rho.rows() != dim || rho.cols() != dim) {
        throw std::invalid_argument("vectorize: dimension mismatch with basis");
    }
    switch (basis.kind) {
        case BasisConvention::Kind::ComputationalOuter: {
            Vector v(dim * dim);
            for (Eigen::Index a = 0; a < dim; ++a)
                for (Eigen::Index b = 0; b < dim; ++b) v(a * dim + b) = rho(a, b);
            return v;
        }
        case BasisConvention::Kind::PauliProduct: {
            const double norm = 1.0 / static_cast<double>(dim);
            Vector v(basis.dim());
            for (std::uint32_t code = 0; code < static_cast<std::uint32_t>(basis.dim());
                 ++code) {
                const Matrix p = pauli_to_matrix(word_from_code(n, code));
                v(code) = (p * rho).trace() * norm;
            }
            return v;
        }
        default:
            throw std::invalid_argument("vectorize: unsupported basis");
    }
}

inline Vector vectorize(const DensityMatrix& rho, const BasisConvention& basis) {
    if (rho.n_qubits != basis.n_qubits) {
        throw std::invalid_argument("vectorize: qubit count mismatch with basis");
    }
    return vectorize(rho.rho, basis);
}

inline Matrix devectorize(const Vector& v, const BasisConvention& basis) {
    const int n = basis.n_qubits;
    const Eigen::Index dim = Eigen::Index(1) << n;
    if (v.size() != basis.dim()) throw std::invalid_argument("devectorize: size mismatch");
    switch (basis.kind) {
        case BasisConvention::Kind::ComputationalOuter: {
            Matrix rho(dim, dim);
            for (Eigen::Index a = 0; a < dim; ++a)
                for (Eigen::Index b = 0; b < dim; ++b) rho(a, b) = v(a * dim + b);
            return rho;
        }
        case BasisConvention::Kind::PauliProduct: {
            Matrix rho = Matrix::Zero(dim, dim);
            for (std::uint32_t code = 0; code < static_cast<std::uint32_t>(basis.dim());
                 ++code) {
                rho += v(code) * pauli_to_matrix(word_from_code(n, code));
            }
            return rho;
        }
        default:
            throw std::invalid_argument("devectorize: unsupported basis");
    }
}

// v_to = basis_change_matrix(from, to, n) * v_from for every state.
inline Matrix basis_change_matrix(const BasisConvention& from, const BasisConvention& to,
                                  int n) {
    using Kind = BasisConvention::Kind;
    const Eigen::Index dim = Eigen::Index(1) << n;
    const Eigen::Index sdim = dim * dim;
    if (from.kind == Kind::PauliProduct && to.kind == Kind::ComputationalOuter) {
        // column P holds vec(P) entries <a|P|b>
        Matrix lam(sdim, sdim);
        for (std::uint32_t code = 0; code < static_cast<std::uint32_t>(sdim); ++code) {
            const Matrix p = pauli_to_matrix(word_from_code(n, code));
            for (Eigen::Index a = 0; a < dim; ++a)
                for (Eigen::Index b = 0; b < dim; ++b) lam(a * dim + b, code) = p(a, b);
        }
        return lam;
    }
    if (from.kind == Kind::ComputationalOuter && to.kind == Kind::PauliProduct) {
        return basis_change_matrix(BasisConvention::pauli(n),
                                   BasisConvention::computational(n), n)
            .inverse();
    }
    throw std::invalid_argument("basis_change_matrix: unsupported basis pair");
}

// Trace out every qubit not listed in keep (1-based indices).
inline DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
    if (keep.empty()) throw std::invalid_argument("partial_trace: keep set must be non-empty");
    const int n = rho.n_qubits;
    for (int q : keep) {
        if (q < 1 || q > n) throw std::invalid_argument("partial_trace: qubit out of range");
    }
    const int m = static_cast<int>(keep.size());
    const Eigen::Index kdim = Eigen::Index(1) << m;
    const int r = n - m;
    const Eigen::Index rdim = Eigen::Index(1) << r;
    std::vector<int> traced;
    for (int q = 1; q <= n; ++q) {
        if (std::find(keep.begin(), keep.end(), q) == keep.end()) traced.push_back(q);
    }
    // bit position of qubit q (1-based, qubit 1 = MSB) in an n-bit index
    auto bitpos = [n](int q) { return n - q; };
    Matrix out = Matrix::Zero(kdim, kdim);
    for (Eigen::Index a = 0; a < kdim; ++a) {
        for (Eigen::Index b = 0; b < kdim; ++b) {
            Complex acc = 0.0;
            for (Eigen::Index e = 0; e < rdim; ++e) {
                std::uint32_t ia = 0, ib = 0;
                for (int i = 0; i < m; ++i) {
                    const std::uint32_t abit = (a >> (m - 1 - i)) & 1u;
                    const std::uint32_t bbit = (b >> (m - 1 - i)) & 1u;
                    ia |= abit << bitpos(keep[static_cast<std::size_t>(i)]);
                    ib |= bbit << bitpos(keep[static_cast<std::size_t>(i)]);
                }
                for (int i = 0; i < r; ++i) {
                    const std::uint32_t ebit = (e >> (r - 1 - i)) & 1u;
                    ia |= ebit << bitpos(traced[static_cast<std::size_t>(i)]);
                    ib |= ebit << bitpos(traced[static_cast<std::size_t>(i)]);
                }
                acc += rho.rho(ia, ib);
            }
            out(a, b) = acc;
        }
    }
    return DensityMatrix(m, std::move(out));
}

// Matrix of a linear map on density matrices: column j is the vectorized
// image of the j-th basis element.
inline Superoperator superoperator_matrix(const std::function<Matrix(const Matrix&)>& action,
                                          int n, const BasisConvention& basis) {
    const Eigen::Index sdim = basis.dim();
    Matrix m(sdim, sdim);
    Vector e = Vector::Zero(sdim);
    for (Eigen::Index j = 0; j < sdim; ++j) {
        e(j) = 1.0;
        m.col(j) = vectorize(action(devectorize(e, basis)), basis);
        e(j) = 0.0;
    }
    return Superoperator{std::move(m), basis};
}

}  // namespace cqec::ops
