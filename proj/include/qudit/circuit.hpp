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

#include <utility>
#include <variant>
#include <vector>

#include "qudit/operators.hpp"
#include "qudit/state.hpp"

namespace qudit {

struct ChrestensonGate {
    int wire = 0;
    bool operator==(const ChrestensonGate &) const = default;
};

/// Controlled modulo-add; the control is always wire 0.
struct ControlledModAddGate {
    GateParams params;
    bool operator==(const ControlledModAddGate &) const = default;
};

using GateSpec = std::variant<ChrestensonGate, ControlledModAddGate>;

/// Two-wire circuit. Gates are listed in diagram order (first entry acts
/// first).
class Circuit {
  public:
    static constexpr int kWires = 2;

    /// Validates every gate against `radix`.
    Circuit(int radix, std::vector<GateSpec> gates);

    int radix() const { return radix_; }
    int wires() const { return kWires; }
    const std::vector<GateSpec> &gates() const { return gates_; }

    bool operator==(const Circuit &) const = default;

  private:
    int radix_;
    std::vector<GateSpec> gates_;
};

/// (h, k) pairs of a partial or full entanglement generator.
struct GeneratorSpec {
    std::vector<GateParams> pairs;

    bool operator==(const GeneratorSpec &) const = default;
    auto operator<=>(const GeneratorSpec &) const = default;

    /// 1 <= size <= r-1, distinct h, distinct nonzero k.
    void validate(int radix) const;
    bool is_full(int radix) const {
        return pairs.size() == static_cast<std::size_t>(radix - 1);
    }
};

/// Chrestenson on wire 0 followed by one controlled modulo-add per pair, in
/// the given order.
Circuit entanglement_generator(int radix, const GeneratorSpec &spec);

/// Product of the per-gate r^2 x r^2 matrices, last gate leftmost.
OperatorMatrix transfer_matrix(const Circuit &c);

QuditState run(const Circuit &c, const QuditState &input);

struct TableRow {
    DigitString input;
    QuditState output;
};

/// All r^2 basis inputs, digit-lexicographic order.
std::vector<TableRow> table_outputs(const Circuit &c);

} // namespace qudit
