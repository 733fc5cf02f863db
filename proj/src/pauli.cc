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

#include "cer/pauli.h"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace cer {

namespace {

void check_qubit_count(size_t n) {
    if (n < 1 || n > PauliOperator::MAX_QUBITS) {
        throw std::invalid_argument(
            "qubit count must be in [1, " + std::to_string(PauliOperator::MAX_QUBITS) + "], got " + std::to_string(n));
    }
}

void check_same_size(const PauliOperator &p, const PauliOperator &q) {
    if (p.num_qubits != q.num_qubits) {
        throw std::invalid_argument(
            "mismatched qubit counts: " + std::to_string(p.num_qubits) + " vs " + std::to_string(q.num_qubits));
    }
}

// Site order used for lexicographic comparisons: I < X < Y < Z.
int letter_rank(bool x, bool z) {
    if (!x && !z) {
        return 0;
    }
    if (x && !z) {
        return 1;
    }
    if (x && z) {
        return 2;
    }
    return 3;
}

}  // namespace

QubitSubset::QubitSubset(std::initializer_list<size_t> idx) : QubitSubset(std::vector<size_t>(idx)) {
}

QubitSubset::QubitSubset(std::vector<size_t> idx) : indices(std::move(idx)) {
    std::unordered_set<size_t> seen;
    for (size_t q : indices) {
        if (!seen.insert(q).second) {
            throw std::invalid_argument("duplicate qubit index " + std::to_string(q) + " in subset");
        }
    }
}

bool QubitSubset::contains(size_t q) const {
    return std::find(indices.begin(), indices.end(), q) != indices.end();
}

void QubitSubset::validate_against(size_t num_qubits) const {
    for (size_t q : indices) {
        if (q >= num_qubits) {
            throw std::invalid_argument(
                "subset index " + std::to_string(q) + " out of range for " + std::to_string(num_qubits) + " qubits");
        }
    }
}

std::string QubitSubset::label() const {
    std::string out;
    for (size_t k = 0; k < indices.size(); k++) {
        if (k) {
            out.push_back('-');
        }
        out += std::to_string(indices[k]);
    }
    return out;
}

QubitSubset QubitSubset::from_label(std::string_view text) {
    std::vector<size_t> idx;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t dash = text.find('-', pos);
        std::string token(text.substr(pos, dash == std::string_view::npos ? dash : dash - pos));
        if (token.empty()) {
            throw std::invalid_argument("malformed subset label '" + std::string(text) + "'");
        }
        idx.push_back(static_cast<size_t>(std::stoull(token)));
        if (dash == std::string_view::npos) {
            break;
        }
        pos = dash + 1;
    }
    if (idx.empty()) {
        throw std::invalid_argument("empty subset label");
    }
    return QubitSubset(std::move(idx));
}

PauliOperator::PauliOperator(size_t n, uint64_t x, uint64_t z) : num_qubits(n), x_bits(x), z_bits(z) {
    check_qubit_count(n);
    if (n < 64) {
        uint64_t mask = (uint64_t{1} << n) - 1;
        if ((x & ~mask) || (z & ~mask)) {
            throw std::invalid_argument("component bits set beyond qubit count");
        }
    }
}

PauliOperator PauliOperator::identity(size_t n) {
    return PauliOperator(n, 0, 0);
}

PauliOperator PauliOperator::from_string(std::string_view text) {
    check_qubit_count(text.size());
    uint64_t x = 0;
    uint64_t z = 0;
    for (size_t q = 0; q < text.size(); q++) {
        switch (text[q]) {
            case 'I':
                break;
            case 'X':
                x |= uint64_t{1} << q;
                break;
            case 'Z':
                z |= uint64_t{1} << q;
                break;
            case 'Y':
                x |= uint64_t{1} << q;
                z |= uint64_t{1} << q;
                break;
            default:
                throw std::invalid_argument(std::string("invalid Pauli letter '") + text[q] + "'");
        }
    }
    return PauliOperator(text.size(), x, z);
}

PauliOperator PauliOperator::single(size_t n, size_t qubit, char letter) {
    if (qubit >= n) {
        throw std::invalid_argument("qubit index out of range");
    }
    PauliOperator p = identity(n);
    switch (letter) {
        case 'I':
            break;
        case 'X':
            p.x_bits |= uint64_t{1} << qubit;
            break;
        case 'Z':
            p.z_bits |= uint64_t{1} << qubit;
            break;
        case 'Y':
            p.x_bits |= uint64_t{1} << qubit;
            p.z_bits |= uint64_t{1} << qubit;
            break;
        default:
            throw std::invalid_argument(std::string("invalid Pauli letter '") + letter + "'");
    }
    return p;
}

char PauliOperator::letter_at(size_t qubit) const {
    if (qubit >= num_qubits) {
        throw std::invalid_argument("qubit index out of range");
    }
    bool x = (x_bits >> qubit) & 1;
    bool z = (z_bits >> qubit) & 1;
    if (x && z) {
        return 'Y';
    }
    if (x) {
        return 'X';
    }
    if (z) {
        return 'Z';
    }
    return 'I';
}

std::string PauliOperator::str() const {
    std::string out(num_qubits, 'I');
    for (size_t q = 0; q < num_qubits; q++) {
        out[q] = letter_at(q);
    }
    return out;
}

size_t PauliOperator::weight() const {
    return static_cast<size_t>(std::popcount(x_bits | z_bits));
}

PauliOperator PauliOperator::restricted_to(const QubitSubset &s) const {
    s.validate_against(num_qubits);
    if (s.indices.empty()) {
        throw std::invalid_argument("cannot restrict to an empty subset");
    }
    uint64_t x = 0;
    uint64_t z = 0;
    for (size_t k = 0; k < s.indices.size(); k++) {
        size_t q = s.indices[k];
        x |= ((x_bits >> q) & 1) << k;
        z |= ((z_bits >> q) & 1) << k;
    }
    return PauliOperator(s.indices.size(), x, z);
}

PauliOperator PauliOperator::embedded_in(size_t n, const QubitSubset &s) const {
    if (s.indices.size() != num_qubits) {
        throw std::invalid_argument("subset size does not match operator size");
    }
    s.validate_against(n);
    uint64_t x = 0;
    uint64_t z = 0;
    for (size_t k = 0; k < s.indices.size(); k++) {
        size_t q = s.indices[k];
        x |= ((x_bits >> k) & 1) << q;
        z |= ((z_bits >> k) & 1) << q;
    }
    return PauliOperator(n, x, z);
}

bool PauliOperator::commutes_with(const PauliOperator &other) const {
    return commute(*this, other) == 0;
}

bool PauliOperator::operator<(const PauliOperator &other) const {
    if (num_qubits != other.num_qubits) {
        return num_qubits < other.num_qubits;
    }
    for (size_t q = 0; q < num_qubits; q++) {
        int a = letter_rank((x_bits >> q) & 1, (z_bits >> q) & 1);
        int b = letter_rank((other.x_bits >> q) & 1, (other.z_bits >> q) & 1);
        if (a != b) {
            return a < b;
        }
    }
    return false;
}

int commute(const PauliOperator &p, const PauliOperator &q) {
    check_same_size(p, q);
    uint64_t cross = (p.x_bits & q.z_bits) ^ (p.z_bits & q.x_bits);
    return std::popcount(cross) & 1;
}

PauliOperator multiply(const PauliOperator &p, const PauliOperator &q) {
    check_same_size(p, q);
    return PauliOperator(p.num_qubits, p.x_bits ^ q.x_bits, p.z_bits ^ q.z_bits);
}

}  // namespace cer
