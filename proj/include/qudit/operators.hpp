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

#include <cstddef>
#include <span>
#include <vector>

#include "qudit/common.hpp"
#include "qudit/state.hpp"

namespace qudit {

/// Dense square unitary, row-major.
///
/// Every factory in this header produces a unitary by construction and skips
/// the O(dim^3) check; `from_entries` is the validating entry point for
/// externally supplied matrices.
class OperatorMatrix {
  public:
    static OperatorMatrix from_entries(std::size_t dim,
                                       std::vector<Complex> entries,
                                       Tolerance tol = Tolerance::unitary());
    static OperatorMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    const Complex &operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }
    std::span<const Complex> entries() const { return entries_; }

    /// max |U^dagger U - I| entrywise.
    double unitarity_error() const;
    bool is_unitary(Tolerance tol = Tolerance::unitary()) const {
        return unitarity_error() <= tol.eps();
    }
    /// Exactly one entry equal to 1 per row and column, all others exactly 0.
    bool is_permutation() const;

    /// Exact entrywise equality.
    bool operator==(const OperatorMatrix &) const = default;

  private:
    OperatorMatrix(std::size_t dim, std::vector<Complex> entries)
        : dim_(dim), entries_(std::move(entries)) {}

    std::size_t dim_ = 0;
    std::vector<Complex> entries_;

    friend OperatorMatrix unchecked_operator(std::size_t,
                                             std::vector<Complex>);
};

OperatorMatrix unchecked_operator(std::size_t dim,
                                  std::vector<Complex> entries);

/// Entrywise comparison within `tol`.
bool operators_close(const OperatorMatrix &a, const OperatorMatrix &b,
                     Tolerance tol = Tolerance::unitary());

/// w_k = exp(2 pi i k / r), k = 0..r-1.
struct RootsOfUnity {
    int radix;
    std::vector<Complex> values;
};

/// Control value h and addend k of a controlled modulo-add gate.
struct GateParams {
    int h = 0;
    int k = 0;

    bool operator==(const GateParams &) const = default;
    auto operator<=>(const GateParams &) const = default;

    /// Throws DomainError unless 0 <= h, k < radix.
    void validate(int radix) const;
};

RootsOfUnity roots_of_unity(int radix);

/// Chrestenson (radix-r DFT) gate: entry (k, j) = w_k^j / sqrt(r).
OperatorMatrix chrestenson(int radix);

/// |x> -> |(x + k) mod r>.
OperatorMatrix mod_add(int radix, int k);

/// Block-diagonal r^2 x r^2 gate with mod_add(k) on the block of control
/// value h and identity elsewhere. Control is wire 0, target wire 1.
OperatorMatrix controlled_mod_add(int radix, GateParams params);

/// a * b (b acts first).
OperatorMatrix compose(const OperatorMatrix &a, const OperatorMatrix &b);

/// Kronecker product a (x) b; a acts on the more significant wires.
OperatorMatrix matrix_tensor(const OperatorMatrix &a, const OperatorMatrix &b);

QuditState apply(const OperatorMatrix &u, const QuditState &s);

} // namespace qudit
