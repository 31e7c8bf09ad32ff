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
#include <string>
#include <string_view>
#include <vector>

#include "qudit/common.hpp"

namespace qudit {

/// Basis label, most significant digit (wire 0) first.
struct DigitString {
    std::vector<int> digits;

    bool operator==(const DigitString &) const = default;
    auto operator<=>(const DigitString &) const = default;

    /// Renders with 0-9a-z, no separators ("31" for |31>).
    std::string to_string() const;
    /// Inverse of to_string; every digit must be < radix.
    static DigitString parse(std::string_view text, int radix);
};

/// Pure state of `wires` radix-r qudits, amplitudes in linear index order.
/// Index of digit string d is sum_j d[j] * r^(wires-1-j).
class QuditState {
  public:
    /// Validates length r^n, finiteness and normalization within `tol`.
    static QuditState from_amplitudes(int radix, int wires,
                                      std::vector<Complex> amplitudes,
                                      Tolerance tol = Tolerance::state());

    int radix() const { return radix_; }
    int wires() const { return wires_; }
    std::size_t dimension() const { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    const Complex &operator[](std::size_t index) const {
        return amplitudes_[index];
    }

    double norm_squared() const;

  private:
    QuditState(int radix, int wires, std::vector<Complex> amplitudes)
        : radix_(radix), wires_(wires), amplitudes_(std::move(amplitudes)) {}

    int radix_;
    int wires_;
    std::vector<Complex> amplitudes_;

    friend QuditState unchecked_state(int, int, std::vector<Complex>);
};

/// For producers whose output is normalized by construction (unitary
/// evolution, Kronecker products of states).
QuditState unchecked_state(int radix, int wires,
                           std::vector<Complex> amplitudes);

std::size_t basis_index(int radix, const DigitString &digits);
DigitString basis_digits(int radix, int wires, std::size_t index);

QuditState basis_state(int radix, int wires, const DigitString &digits);

QuditState tensor_product(const QuditState &a, const QuditState &b);

std::vector<double> probabilities(const QuditState &s);

/// Projects `wire` of a two-qudit state onto `outcome` and returns the
/// renormalized single-qudit state of the other wire.
QuditState conditional_state(const QuditState &s, int wire, int outcome,
                             Tolerance tol = Tolerance::state());

/// Entrywise comparison, global phase included.
bool states_equal(const QuditState &a, const QuditState &b,
                  Tolerance tol = Tolerance::state());

} // namespace qudit
