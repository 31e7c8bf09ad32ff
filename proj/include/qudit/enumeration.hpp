// Copyright 2026 The Qudit Entanglement Authors
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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qudit/circuit.hpp"
#include "qudit/common.hpp"

namespace qudit {

/// prod_{i=2}^{r} (i^2 - i): ordered full-generator circuits. Throws
/// DomainError if the value does not fit in 64 bits.
std::uint64_t formula_circuit_count(int radix);

/// r!: full generators with distinct transfer functions.
std::uint64_t formula_unique_count(int radix);

/// Unordered full generators: r-1 distinct controls, addends 1..r-1 assigned
/// bijectively. Pairs sorted by h, sets sorted lexicographically.
std::vector<GeneratorSpec> enumerate_generator_sets(int radix);

/// Every gate ordering of every generator set; same order as
/// enumerate_generator_specs_ordered.
std::vector<Circuit> enumerate_circuit_forms(int radix);

/// The (ordered) generator spec behind each entry of enumerate_circuit_forms.
std::vector<GeneratorSpec> enumerate_generator_specs_ordered(int radix);

struct VerificationFailure {
    std::string kind;
    std::optional<GeneratorSpec> spec;
    std::string detail;
};

struct VerifyOptions {
    /// Brute force is skipped above this radix.
    int max_brute_force_radix = 6;
    Tolerance dedup_tolerance = Tolerance::unitary();
};

struct EnumerationReport {
    int radix = 0;
    bool brute_force = false;
    std::optional<std::uint64_t> circuit_form_count;
    std::optional<std::uint64_t> unique_transfer_count;
    std::uint64_t formula_circuit_count = 0;
    std::uint64_t formula_unique_count = 0;
    bool all_maximal = false;
    /// Number of circuit forms sharing each distinct transfer matrix, in
    /// order of first appearance.
    std::vector<std::uint64_t> orderings_per_transfer;
    std::vector<VerificationFailure> failures;

    bool passed() const { return brute_force && failures.empty(); }
};

/// Brute-force check of both counting formulas and of maximal entanglement of
/// every full-generator output. Mismatches are reported in `failures`.
EnumerationReport verify_counts(int radix, Tolerance tol = Tolerance::state(),
                                VerifyOptions options = {});

/// A_{h1,k1} A_{h2,k2} == A_{h2,k2} A_{h1,k1} exactly for all h1 != h2 and
/// k1, k2 in 1..r-1.
bool verify_commutativity(int radix);

} // namespace qudit
