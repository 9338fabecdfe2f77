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

// error_classes.hpp — grouping of Pauli errors into weight/pattern classes
// and the symmetry reduction of dissipators and of the correction generator
// to small jump matrices acting on class probabilities.
//
// Class-basis vectors hold coefficients against uniform mixtures
// rho_J = (1/|J|) sum_{E in J} E rho0 E, so the all-classes multiplicity
// vector is the maximally mixed state.

#pragma once

#include "cqec/codes.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace cqec::codes {

using numerics::RealMatrix;
using numerics::RealVector;

struct ErrorClass {
    std::string label;
    std::vector<int> pattern;  // letter multiplicities, descending (empty for identity)
    int size = 0;
    PauliString representative;
    std::vector<std::uint32_t> members;  // base-4 word codes
};

enum class ClassGenerator { DepolarizingDissipator, BitflipDissipator, Correction };

class ReductionInvalidError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

namespace detail {

inline std::vector<int> letter_pattern(const PauliString& w) {
    std::array<int, 4> counts{0, 0, 0, 0};
    for (int i = 1; i <= w.size(); ++i) counts[w.letter(i)]++;
    std::vector<int> pat;
    for (int l = 1; l <= 3; ++l) {
        if (counts[static_cast<std::size_t>(l)] > 0)
            pat.push_back(counts[static_cast<std::size_t>(l)]);
    }
    std::sort(pat.rbegin(), pat.rend());
    return pat;
}

inline const std::vector<std::string>& five_labels() {
    static const std::vector<std::string> labels = {"0",  "1",  "2A", "2B", "3A", "3B",
                                                    "3C", "4A", "4B", "4C", "4D", "5A",
                                                    "5B", "5C", "5D", "5E"};
    return labels;
}

inline int five_label_index(const std::vector<int>& pattern) {
    static const std::map<std::vector<int>, int> table = {
        {{}, 0},        {{1}, 1},        {{2}, 2},        {{1, 1}, 3},
        {{3}, 4},       {{2, 1}, 5},     {{1, 1, 1}, 6},  {{2, 2}, 7},
        {{3, 1}, 8},    {{2, 1, 1}, 9},  {{4}, 10},       {{4, 1}, 11},
        {{3, 2}, 12},   {{2, 2, 1}, 13}, {{3, 1, 1}, 14}, {{5}, 15}};
    const auto it = table.find(pattern);
    if (it == table.end()) throw std::logic_error("five_label_index: unknown pattern");
    return it->second;
}

}  // namespace detail

// Index of a five-qubit word's class in the canonical label order.
inline int classify_five_qubit_word(const PauliString& w) {
    if (w.size() != 5) throw std::invalid_argument("classify_five_qubit_word: need 5 qubits");
    return detail::five_label_index(detail::letter_pattern(w));
}

inline std::vector<ErrorClass> enumerate_error_classes(const StabilizerCode& code) {
    std::vector<ErrorClass> classes;
    if (code.n == 5) {
        const auto& labels = detail::five_labels();
        classes.resize(labels.size());
        for (std::size_t i = 0; i < labels.size(); ++i) classes[i].label = labels[i];
        for (std::uint32_t w = 0; w < 1024; ++w) {
            const auto word = ops::word_from_code(5, w);
            auto& cls = classes[static_cast<std::size_t>(classify_five_qubit_word(word))];
            if (cls.members.empty()) {
                cls.representative = word;
                cls.pattern = detail::letter_pattern(word);
            }
            cls.members.push_back(w);
        }
    } else if (code.n == 3) {
        // bit-flip classes: X-type words grouped by Hamming weight
        classes.resize(4);
        for (int wgt = 0; wgt < 4; ++wgt) classes[static_cast<std::size_t>(wgt)].label =
            std::to_string(wgt);
        for (std::uint32_t mask = 0; mask < 8; ++mask) {
            std::vector<std::uint8_t> letters(3, 0);
            int wgt = 0;
            for (int i = 0; i < 3; ++i) {
                if (mask & (1u << (2 - i))) {
                    letters[static_cast<std::size_t>(i)] = 1;
                    ++wgt;
                }
            }
            const PauliString word(std::move(letters));
            auto& cls = classes[static_cast<std::size_t>(wgt)];
            if (cls.members.empty()) {
                cls.representative = word;
                cls.pattern = detail::letter_pattern(word);
            }
            cls.members.push_back(word.word_code());
        }
    } else {
        throw std::invalid_argument("enumerate_error_classes: unsupported code");
    }
    for (auto& cls : classes) cls.size = static_cast<int>(cls.members.size());
    return classes;
}

namespace detail {

// Class index of a word, given the code's partition. Words outside the
// partition universe (for the 3-qubit bit-flip classes) return -1.
inline int class_index_of(const StabilizerCode& code, const PauliString& w) {
    if (code.n == 5) return classify_five_qubit_word(w);
    int wgt = 0;
    for (int i = 1; i <= 3; ++i) {
        const auto l = w.letter(i);
        if (l == 2 || l == 3) return -1;
        wgt += (l == 1);
    }
    return wgt;
}

inline std::vector<PauliString> single_qubit_moves(const StabilizerCode& code,
                                                   ClassGenerator kind) {
    std::vector<PauliString> moves;
    const bool depolarizing = kind == ClassGenerator::DepolarizingDissipator;
    for (int site = 1; site <= code.n; ++site) {
        if (depolarizing) {
            for (std::uint8_t l : {std::uint8_t{1}, std::uint8_t{2}, std::uint8_t{3}}) {
                moves.push_back(PauliString::single(code.n, site, l));
            }
        } else {
            moves.push_back(PauliString::single(code.n, site, 1));
        }
    }
    return moves;
}

}  // namespace detail

// Jump matrix (unit rate) of a dissipator or of Gamma on class coefficients.
//
// Dissipator entry (I,J): number of single-qubit Pauli moves carrying a
// representative of class J into class I, minus the move count on the
// diagonal; identical for every representative (checked exhaustively).
// Correction column J: (1/|J|) sum_{E in J} e_{class(C_{s(E)} E)} - e_J with
// the literal Pauli product routing.
inline RealMatrix class_jump_matrix(const StabilizerCode& code, ClassGenerator kind) {
    const auto classes = enumerate_error_classes(code);
    const int nc = static_cast<int>(classes.size());
    RealMatrix m = RealMatrix::Zero(nc, nc);

    if (kind == ClassGenerator::Correction) {
        for (int j = 0; j < nc; ++j) {
            for (const auto wcode : classes[static_cast<std::size_t>(j)].members) {
                const auto e = ops::word_from_code(code.n, wcode);
                const auto& corr = code.correction_table.at(syndrome(code, e));
                const auto routed = ops::pauli_multiply(corr, e);
                const int target = detail::class_index_of(code, routed);
                if (target < 0) {
                    throw ReductionInvalidError(
                        "class_jump_matrix: correction routes outside the class universe");
                }
                m(target, j) += 1.0 / classes[static_cast<std::size_t>(j)].size;
            }
            m(j, j) -= 1.0;
        }
        return m;
    }

    const auto moves = detail::single_qubit_moves(code, kind);
    for (int j = 0; j < nc; ++j) {
        RealVector column = RealVector::Zero(nc);
        bool first = true;
        for (const auto wcode : classes[static_cast<std::size_t>(j)].members) {
            const auto rep = ops::word_from_code(code.n, wcode);
            RealVector hist = RealVector::Zero(nc);
            for (const auto& mv : moves) {
                const int target = detail::class_index_of(code, ops::pauli_multiply(mv, rep));
                if (target < 0) {
                    throw ReductionInvalidError(
                        "class_jump_matrix: dissipator leaves the class universe");
                }
                hist(target) += 1.0;
            }
            if (first) {
                column = hist;
                first = false;
            } else if (column != hist) {
                throw ReductionInvalidError(
                    "class_jump_matrix: representatives of one class yield different columns");
            }
        }
        m.col(j) = column;
        m(j, j) -= static_cast<double>(moves.size());
    }
    return m;
}

inline Superoperator reduce_to_classes(const StabilizerCode& code, ClassGenerator kind) {
    const RealMatrix m = class_jump_matrix(code, kind);
    return Superoperator{m.cast<Complex>(),
                         BasisConvention::error_class(static_cast<int>(m.rows()))};
}

// ---------------------------------------------------------------------------
// Previously tabulated five-qubit class matrices (unit rate). The derived
// matrices are authoritative; these tables exist so that the verify command
// can print a cell-by-cell diff.
// ---------------------------------------------------------------------------

inline RealMatrix tabulated_five_qubit_depolarizing_matrix() {
    RealMatrix m(16, 16);
    m << -15,  1,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          15, -13,  2,   2,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
           0,  4, -15,   2,   3,   1,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
           0,  8,   4, -13,   0,   2,   3,   0,   0,   0,   0,   0,   0,   0,   0,   0,
           0,  0,   3,   0, -15,   1,   0,   0,   1,   0,   4,   0,   0,   0,   0,   0,
           0,  0,   6,   6,   6, -12,   6,   4,   3,   2,   0,   0,   0,   0,   0,   0,
           0,  0,   0,   3,   0,   2, -15,   0,   0,   2,   0,   0,   0,   0,   0,   0,
           0,  0,   0,   0,   0,   2,   0, -15,   3,   2,   0,   0,   3,   1,   0,   0,
           0,  0,   0,   0,   4,   2,   0,   4, -14,   2,   8,   4,   2,   0,   2,   0,
           0,  0,   0,   0,   0,   2,   6,   4,   3, -11,   0,   0,   0,   4,   0,   0,
           0,  0,   0,   0,   2,   0,   0,   0,   1,   0, -15,   1,   0,   0,   0,   5,
           0,  0,   0,   0,   0,   0,   0,   0,   1,   0,   2, -14,   2,   0,   2,  10,
           0,  0,   0,   0,   0,   0,   0,   2,   1,   0,   0,   4, -12,   2,   2,   0,
           0,  0,   0,   0,   0,   0,   0,   1,   0,   2,   0,   0,   3, -11,   6,   0,
           0,  0,   0,   0,   0,   0,   0,   0,   1,   1,   0,   4,   2,   4, -15,   0,
           0,  0,   0,   0,   0,   0,   0,   0,   0,   0,   1,   1,   0,   0,   0, -15;
    return m;
}

inline RealMatrix tabulated_five_qubit_correction_matrix() {
    RealMatrix m = RealMatrix::Zero(16, 16);
    auto idx = [](const std::string& label) {
        const auto& labels = detail::five_labels();
        return static_cast<Eigen::Index>(
            std::find(labels.begin(), labels.end(), label) - labels.begin());
    };
    m(idx("0"), idx("1")) = 1;
    for (const char* l : {"1", "2A", "2B", "3A", "3C", "4B", "4C", "4D", "5A", "5B", "5D"}) {
        m(idx(l), idx(l)) = -1;
    }
    m(idx("3B"), idx("2A")) = 1;
    m(idx("3B"), idx("2B")) = 1;
    m(idx("3B"), idx("3A")) = 1;
    m(idx("3B"), idx("3B")) = -1.0 / 3;
    m(idx("3B"), idx("3C")) = 1;
    m(idx("3B"), idx("4A")) = 2.0 / 3;
    m(idx("3B"), idx("4B")) = 0.5;
    m(idx("3B"), idx("4C")) = 1.0 / 3;
    m(idx("4A"), idx("3B")) = 1.0 / 3;
    m(idx("4A"), idx("4A")) = -5.0 / 6;
    m(idx("4A"), idx("4B")) = 0.5;
    m(idx("4A"), idx("4C")) = 1.0 / 3;
    m(idx("4A"), idx("5B")) = 0.5;
    m(idx("4A"), idx("5C")) = 1.0 / 6;
    m(idx("5C"), idx("4A")) = 1.0 / 6;
    m(idx("5C"), idx("4C")) = 1.0 / 3;
    m(idx("5C"), idx("5B")) = 0.5;
    m(idx("5C"), idx("5C")) = -1.0 / 6;
    m(idx("5C"), idx("5D")) = 1;
    m(idx("5E"), idx("4D")) = 1;
    m(idx("5E"), idx("5A")) = 1;
    return m;
}

struct ClassMatrixDiff {
    std::string row;
    std::string col;
    double derived;
    double tabulated;
};

inline std::vector<ClassMatrixDiff> class_matrix_diff(const RealMatrix& derived,
                                                      const RealMatrix& tabulated,
                                                      double tol = 1e-12) {
    const auto& labels = detail::five_labels();
    std::vector<ClassMatrixDiff> diffs;
    for (Eigen::Index r = 0; r < derived.rows(); ++r) {
        for (Eigen::Index c = 0; c < derived.cols(); ++c) {
            if (std::abs(derived(r, c) - tabulated(r, c)) > tol) {
                diffs.push_back({labels[static_cast<std::size_t>(r)],
                                 labels[static_cast<std::size_t>(c)], derived(r, c),
                                 tabulated(r, c)});
            }
        }
    }
    return diffs;
}

// ---------------------------------------------------------------------------
// Full-space oracles. The dissipator reduction is an exact identity on the
// uniform class mixtures; the correction map is checked word by word
// (Phi(E rho0 E) equals conjugation by the literal product C_s E).
// ---------------------------------------------------------------------------

inline Matrix class_mixture(const StabilizerCode& code, const ErrorClass& cls,
                            const Matrix& rho0) {
    const Eigen::Index dim = Eigen::Index(1) << code.n;
    Matrix acc = Matrix::Zero(dim, dim);
    for (const auto wcode : cls.members) {
        const Matrix e = ops::pauli_to_matrix(ops::word_from_code(code.n, wcode));
        acc += e * rho0 * e.adjoint();
    }
    return acc / static_cast<double>(cls.size);
}

inline Matrix depolarizing_dissipator_action(int n, const Matrix& rho) {
    Matrix out = -3.0 * n * rho;
    for (int site = 1; site <= n; ++site) {
        for (std::uint8_t l : {std::uint8_t{1}, std::uint8_t{2}, std::uint8_t{3}}) {
            const Matrix s = ops::pauli_to_matrix(PauliString::single(n, site, l));
            out += s * rho * s;
        }
    }
    return out;
}

// Max deviation of the full-space dissipator applied to each class mixture
// from the expansion with the derived class-matrix column.
inline double full_space_dissipator_deviation(const StabilizerCode& code, const Matrix& rho0) {
    const auto classes = enumerate_error_classes(code);
    const RealMatrix cls_m = class_jump_matrix(code, ClassGenerator::DepolarizingDissipator);
    std::vector<Matrix> mixtures;
    mixtures.reserve(classes.size());
    for (const auto& c : classes) mixtures.push_back(class_mixture(code, c, rho0));
    double dev = 0.0;
    for (std::size_t j = 0; j < classes.size(); ++j) {
        Matrix expansion = Matrix::Zero(rho0.rows(), rho0.cols());
        for (std::size_t k = 0; k < classes.size(); ++k) {
            expansion += cls_m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) *
                         mixtures[k];
        }
        const Matrix img =
            depolarizing_dissipator_action(code.n, mixtures[j]);
        dev = std::max(dev, (img - expansion).cwiseAbs().maxCoeff());
    }
    return dev;
}

// Max deviation over all Pauli words of Phi(E rho0 E) from conjugation by the
// literal product C_{s(E)} E.
inline double word_level_correction_deviation(const StabilizerCode& code, const Matrix& rho0) {
    double dev = 0.0;
    const std::uint32_t total = 1u << (2 * code.n);
    for (std::uint32_t w = 0; w < total; ++w) {
        const auto e = ops::word_from_code(code.n, w);
        const Matrix em = ops::pauli_to_matrix(e);
        const auto& corr = code.correction_table.at(syndrome(code, e));
        const Matrix routed = ops::pauli_to_matrix(ops::pauli_multiply(corr, e));
        const Matrix lhs = apply_correction_map(code, Matrix(em * rho0 * em.adjoint()));
        const Matrix rhs = routed * rho0 * routed.adjoint();
        dev = std::max(dev, (lhs - rhs).cwiseAbs().maxCoeff());
    }
    return dev;
}

}  // namespace cqec::codes
