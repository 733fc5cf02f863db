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

#ifndef CER_CYCLE_H
#define CER_CYCLE_H

#include <utility>
#include <vector>

#include "cer/pauli.h"

namespace cer {

/// A Clifford layer acting on Paulis by conjugation, with signs discarded.
///
/// The common case is a layer of CNOTs with pairwise disjoint supports. The
/// general case is any Clifford, specified by the images of the single-site
/// X and Z generators (a tableau without sign rows).
struct HardCycle {
    size_t num_qubits = 1;
    /// (control, target) pairs. Empty for tableau-built or identity cycles.
    std::vector<std::pair<size_t, size_t>> gates;

    static HardCycle identity(size_t n);
    static HardCycle cnot_layer(size_t n, std::vector<std::pair<size_t, size_t>> gates);
    /// Single CNOT on a 2-qubit register, control 0, target 1.
    static HardCycle single_cnot();
    /// CNOTs (i, i+9) for i in [0, n_pairs) on a register of 9 + n_pairs
    /// qubits. For n_pairs = 7 this is the 16-qubit layout with control
    /// block 0-6, target block 9-15, and idle qubits 7, 8.
    static HardCycle transversal(size_t n_pairs);
    /// General Clifford from generator images; validated to be symplectic.
    static HardCycle from_tableau(std::vector<PauliOperator> x_images, std::vector<PauliOperator> z_images);

    /// Image of p under Heisenberg conjugation by the cycle, sign discarded.
    PauliOperator conjugate(const PauliOperator &p) const;

    const std::vector<PauliOperator> &x_images() const {
        return x_images_;
    }
    const std::vector<PauliOperator> &z_images() const {
        return z_images_;
    }

   private:
    std::vector<PauliOperator> x_images_;
    std::vector<PauliOperator> z_images_;
};

/// The set of Paulis reachable from members[0] by repeated conjugation.
/// members[k] is the k-th iterate; applying the cycle to the last member
/// returns the first.
struct Orbit {
    std::vector<PauliOperator> members;

    size_t size() const {
        return members.size();
    }
    /// The lexicographically least member, used as the orbit's name.
    const PauliOperator &representative() const;
    std::string label() const;
    bool contains(const PauliOperator &p) const;
};

/// Orbit of p, ordered starting from p itself.
Orbit orbit_of(const HardCycle &cycle, const PauliOperator &p);

/// Orbit of p, rotated so members[0] is the lexicographically least member.
Orbit canonical_orbit(const HardCycle &cycle, const PauliOperator &p);

/// Least r >= 1 with cycle^r acting trivially on all Paulis.
size_t cycle_order(const HardCycle &cycle);

/// The action induced on the subset's restricted Paulis. Throws if a gate's
/// support straddles the subset boundary, since the induced action would not
/// be well defined there.
HardCycle restrict_cycle(const HardCycle &cycle, const QubitSubset &subset);

/// Partition of all 4^|S| restricted Paulis into orbits under the induced
/// action, sorted by representative. Includes the trivial identity orbit.
std::vector<Orbit> enumerate_orbits(const HardCycle &cycle, const QubitSubset &subset);

}  // namespace cer

#endif
