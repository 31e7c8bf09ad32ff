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

#include "qudit/circuit.hpp"

#include <string>

namespace qudit {

namespace {

template <class... Ts> struct overloaded : Ts... {
    using Ts::operator()...;
};

OperatorMatrix gate_matrix(int radix, const GateSpec &gate) {
    return std::visit(
        overloaded{
            [&](const ChrestensonGate &g) {
                const OperatorMatrix c = chrestenson(radix);
                const OperatorMatrix id =
                    OperatorMatrix::identity(static_cast<std::size_t>(radix));
                return g.wire == 0 ? matrix_tensor(c, id)
                                   : matrix_tensor(id, c);
            },
            [&](const ControlledModAddGate &g) {
                return controlled_mod_add(radix, g.params);
            },
        },
        gate);
}

} // namespace

Circuit::Circuit(int radix, std::vector<GateSpec> gates)
    : radix_(radix), gates_(std::move(gates)) {
    if (radix < 2 || radix > kMaxRadix) {
        throw DomainError("radix must be in [2, " + std::to_string(kMaxRadix) +
                          "], got " + std::to_string(radix));
    }
    for (std::size_t i = 0; i < gates_.size(); ++i) {
        try {
            std::visit(overloaded{
                           [](const ChrestensonGate &g) {
                               if (g.wire != 0 && g.wire != 1) {
                                   throw DomainError(
                                       "chrestenson wire must be 0 or 1, got " +
                                       std::to_string(g.wire));
                               }
                           },
                           [&](const ControlledModAddGate &g) {
                               g.params.validate(radix_);
                           },
                       },
                       gates_[i]);
        } catch (const DomainError &e) {
            throw DomainError("gate " + std::to_string(i) + ": " + e.what());
        }
    }
}

void GeneratorSpec::validate(int radix) const {
    if (pairs.empty()) {
        throw DomainError("generator needs at least one (h, k) pair");
    }
    if (pairs.size() > static_cast<std::size_t>(radix - 1)) {
        throw DomainError("generator has " + std::to_string(pairs.size()) +
                          " pairs; at most radix-1 = " +
                          std::to_string(radix - 1) + " allowed");
    }
    std::vector<bool> seen_h(static_cast<std::size_t>(radix), false);
    std::vector<bool> seen_k(static_cast<std::size_t>(radix), false);
    for (const GateParams &p : pairs) {
        p.validate(radix);
        if (p.k == 0) {
            throw DomainError("generator addend k must be nonzero");
        }
        if (seen_h[static_cast<std::size_t>(p.h)]) {
            throw DomainError("duplicate control value h=" +
                              std::to_string(p.h));
        }
        if (seen_k[static_cast<std::size_t>(p.k)]) {
            throw DomainError("duplicate addend k=" + std::to_string(p.k));
        }
        seen_h[static_cast<std::size_t>(p.h)] = true;
        seen_k[static_cast<std::size_t>(p.k)] = true;
    }
}

Circuit entanglement_generator(int radix, const GeneratorSpec &spec) {
    if (radix < 2 || radix > kMaxRadix) {
        throw DomainError("radix must be in [2, " + std::to_string(kMaxRadix) +
                          "], got " + std::to_string(radix));
    }
    spec.validate(radix);
    std::vector<GateSpec> gates;
    gates.reserve(spec.pairs.size() + 1);
    gates.emplace_back(ChrestensonGate{0});
    for (const GateParams &p : spec.pairs) {
        gates.emplace_back(ControlledModAddGate{p});
    }
    return Circuit(radix, std::move(gates));
}

OperatorMatrix transfer_matrix(const Circuit &c) {
    const auto r = static_cast<std::size_t>(c.radix());
    OperatorMatrix acc = OperatorMatrix::identity(r * r);
    for (const GateSpec &gate : c.gates()) {
        acc = compose(gate_matrix(c.radix(), gate), acc);
    }
    return acc;
}

QuditState run(const Circuit &c, const QuditState &input) {
    if (input.radix() != c.radix() || input.wires() != c.wires()) {
        throw DomainError("input must be a two-qudit radix-" +
                          std::to_string(c.radix()) + " state");
    }
    return apply(transfer_matrix(c), input);
}

std::vector<TableRow> table_outputs(const Circuit &c) {
    const OperatorMatrix t = transfer_matrix(c);
    const auto n = t.dim();
    std::vector<TableRow> rows;
    rows.reserve(n);
    for (std::size_t index = 0; index < n; ++index) {
        // Column `index` of the transfer matrix is the image of that basis
        // input.
        std::vector<Complex> column(n);
        for (std::size_t i = 0; i < n; ++i) {
            column[i] = t(i, index);
        }
        rows.push_back(
            TableRow{basis_digits(c.radix(), c.wires(), index),
                     unchecked_state(c.radix(), c.wires(), std::move(column))});
    }
    return rows;
}

} // namespace qudit
