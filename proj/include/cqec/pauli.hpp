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

// pauli.hpp — n-qubit Pauli words with exact symbolic phases.
// Qubit 1 is the leftmost tensor factor (most significant bit).

#pragma once

#include "cqec/numerics.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cqec::ops {

using numerics::Complex;
using numerics::Matrix;

// Letters are encoded 0=I, 1=X, 2=Y, 3=Z; phases as powers of i (i^0..i^3).
class PauliString {
  public:
    PauliString() = default;
    PauliString(std::vector<std::uint8_t> letters, std::uint8_t phase_power = 0)
        : letters_(std::move(letters)), phase_(phase_power % 4) {
        if (letters_.empty()) throw std::invalid_argument("PauliString: length must be >= 1");
        for (auto l : letters_) {
            if (l > 3) throw std::invalid_argument("PauliString: invalid letter code");
        }
    }

    static PauliString from_string(const std::string& s) {
        std::size_t pos = 0;
        std::uint8_t phase = 0;
        if (s.compare(0, 1, "-") == 0) { phase = 2; pos = 1; }
        else if (s.compare(0, 1, "+") == 0) { pos = 1; }
        if (s.compare(pos, 1, "i") == 0) { phase = (phase + 1) % 4; ++pos; }
        std::vector<std::uint8_t> letters;
        for (; pos < s.size(); ++pos) {
            switch (s[pos]) {
                case 'I': letters.push_back(0); break;
                case 'X': letters.push_back(1); break;
                case 'Y': letters.push_back(2); break;
                case 'Z': letters.push_back(3); break;
                default:
                    throw std::invalid_argument("PauliString: unexpected character in \"" + s +
                                                "\"");
            }
        }
        return PauliString(std::move(letters), phase);
    }

    // Single-letter word sigma^a on qubit `site` (1-based) out of n qubits.
    static PauliString single(int n, int site, std::uint8_t letter) {
        if (site < 1 || site > n) throw std::invalid_argument("PauliString::single: bad site");
        std::vector<std::uint8_t> letters(static_cast<std::size_t>(n), 0);
        letters[static_cast<std::size_t>(site - 1)] = letter;
        return PauliString(std::move(letters));
    }

    static PauliString identity(int n) {
        return PauliString(std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0));
    }

    int size() const { return static_cast<int>(letters_.size()); }
    std::uint8_t letter(int qubit1based) const {
        return letters_[static_cast<std::size_t>(qubit1based - 1)];
    }
    const std::vector<std::uint8_t>& letters() const { return letters_; }
    std::uint8_t phase_power() const { return phase_; }
    Complex phase() const {
        static const std::array<Complex, 4> units{Complex(1, 0), Complex(0, 1), Complex(-1, 0),
                                                  Complex(0, -1)};
        return units[phase_];
    }

    int weight() const {
        int w = 0;
        for (auto l : letters_) w += (l != 0);
        return w;
    }

    bool is_identity_word() const { return weight() == 0; }

    std::string to_string() const {
        static const char* phases[4] = {"", "i", "-", "-i"};
        std::string s = phases[phase_];
        for (auto l : letters_) s += "IXYZ"[l];
        return s;
    }

    bool same_letters(const PauliString& o) const { return letters_ == o.letters_; }
    bool operator==(const PauliString& o) const {
        return letters_ == o.letters_ && phase_ == o.phase_;
    }

    // Encode the letters as a base-4 integer, qubit 1 most significant.
    std::uint32_t word_code() const {
        std::uint32_t code = 0;
        for (auto l : letters_) code = code * 4 + l;
        return code;
    }

  private:
    std::vector<std::uint8_t> letters_;
    std::uint8_t phase_ = 0;
};

namespace detail {
// sigma_a * sigma_b = i^{phase_table[a][b]} * sigma_{letter_table[a][b]}
inline constexpr std::uint8_t kLetterTable[4][4] = {
    {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
inline constexpr std::uint8_t kPhaseTable[4][4] = {
    {0, 0, 0, 0}, {0, 0, 1, 3}, {0, 3, 0, 1}, {0, 1, 3, 0}};
}  // namespace detail

inline PauliString pauli_multiply(const PauliString& p, const PauliString& q) {
    if (p.size() != q.size()) {
        throw std::invalid_argument("pauli_multiply: length mismatch");
    }
    std::vector<std::uint8_t> letters(static_cast<std::size_t>(p.size()));
    std::uint8_t phase = (p.phase_power() + q.phase_power()) % 4;
    for (int i = 1; i <= p.size(); ++i) {
        const std::uint8_t a = p.letter(i), b = q.letter(i);
        letters[static_cast<std::size_t>(i - 1)] = detail::kLetterTable[a][b];
        phase = static_cast<std::uint8_t>((phase + detail::kPhaseTable[a][b]) % 4);
    }
    return PauliString(std::move(letters), phase);
}

// True iff the words commute: even number of positions with distinct non-I letters.
inline bool commutes(const PauliString& p, const PauliString& q) {
    if (p.size() != q.size()) {
        throw std::invalid_argument("commutes: length mismatch");
    }
    int anti = 0;
    for (int i = 1; i <= p.size(); ++i) {
        const std::uint8_t a = p.letter(i), b = q.letter(i);
        anti += (a != 0 && b != 0 && a != b);
    }
    return anti % 2 == 0;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

inline const Matrix& pauli_letter_matrix(std::uint8_t letter) {
    static const std::array<Matrix, 4> mats = [] {
        std::array<Matrix, 4> m;
        m[0] = Matrix::Identity(2, 2);
        m[1] = Matrix{{0, 1}, {1, 0}};
        m[2] = Matrix{{Complex(0, 0), Complex(0, -1)}, {Complex(0, 1), Complex(0, 0)}};
        m[3] = Matrix{{1, 0}, {0, -1}};
        return m;
    }();
    return mats[letter];
}

inline Matrix pauli_to_matrix(const PauliString& p) {
    Matrix m = Matrix::Identity(1, 1);
    for (int i = 1; i <= p.size(); ++i) {
        m = kron(m, pauli_letter_matrix(p.letter(i)));
    }
    return p.phase() * m;
}

}  // namespace cqec::ops
