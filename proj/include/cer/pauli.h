// Copyright 2026 The CER Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CER_PAULI_H
#define CER_PAULI_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cer {

/// An ordered set of distinct qubit indices.
///
/// The order of the indices defines the typographic order of restricted
/// Paulis: restricting ZXIIY to {4, 0} yields YZ.
struct QubitSubset {
    std::vector<size_t> indices;

    QubitSubset() = default;
    QubitSubset(std::initializer_list<size_t> idx);
    explicit QubitSubset(std::vector<size_t> idx);

    size_t size() const {
        return indices.size();
    }
    bool contains(size_t q) const;

    /// Throws std::invalid_argument if any index is >= num_qubits.
    void validate_against(size_t num_qubits) const;

    /// Text form "0-9-1-10", used in orbit labels and file formats.
    std::string label() const;
    static QubitSubset from_label(std::string_view text);

    bool operator==(const QubitSubset &other) const = default;
};

/// An n-qubit Pauli operator modulo global phase, in symplectic bit form.
///
/// Bit q of x_bits (z_bits) is the X (Z) component at qubit q. The letter at
/// a site is I/X/Z/Y for (x, z) = (0,0)/(1,0)/(0,1)/(1,1). Phases are never
/// tracked; equality is equality of the bit vectors.
struct PauliOperator {
    static constexpr size_t MAX_QUBITS = 64;

    size_t num_qubits = 1;
    uint64_t x_bits = 0;
    uint64_t z_bits = 0;

    PauliOperator() = default;
    PauliOperator(size_t n, uint64_t x, uint64_t z);

    static PauliOperator identity(size_t n);
    /// Parses text like "ZXIY". Character 0 acts on qubit 0.
    static PauliOperator from_string(std::string_view text);
    /// A single-site letter embedded in an n-qubit identity.
    static PauliOperator single(size_t n, size_t qubit, char letter);

    char letter_at(size_t qubit) const;
    std::string str() const;

    bool is_identity() const {
        return x_bits == 0 && z_bits == 0;
    }
    size_t weight() const;

    /// The |S|-qubit Pauli whose k-th letter is this operator's letter at
    /// S.indices[k].
    PauliOperator restricted_to(const QubitSubset &s) const;

    /// Inverse of restriction: places this operator's k-th letter at qubit
    /// S.indices[k] of an n-qubit identity.
    PauliOperator embedded_in(size_t n, const QubitSubset &s) const;

    bool commutes_with(const PauliOperator &other) const;

    bool operator==(const PauliOperator &other) const = default;
    /// Lexicographic order of the text form, with I < X < Y < Z.
    bool operator<(const PauliOperator &other) const;
};

/// The symplectic form: 1 if P and Q anticommute, 0 if they commute.
int commute(const PauliOperator &p, const PauliOperator &q);

/// Group product of the phase-less Pauli group (bitwise XOR of components).
PauliOperator multiply(const PauliOperator &p, const PauliOperator &q);

}  // namespace cer

#endif
