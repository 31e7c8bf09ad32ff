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

// Text formats: compact JSON for machines, kets and matrix grids for people.
// JSON output is deterministic, so parse-then-dump reproduces the input bytes.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qudit/circuit.hpp"
#include "qudit/entanglement.hpp"
#include "qudit/enumeration.hpp"
#include "qudit/operators.hpp"
#include "qudit/state.hpp"

namespace qudit {

enum class TableFormat { Pretty, Tsv, Json };

/// {"radix":r,"wires":n,"amplitudes":[{"re":..,"im":..},...]}
std::string state_to_json(const QuditState &s);
QuditState state_from_json(std::string_view text);

/// {"dim":d,"entries":[[{"re":..,"im":..},...],...]}
std::string operator_to_json(const OperatorMatrix &u);
OperatorMatrix operator_from_json(std::string_view text);

/// {"radix":r,"gates":[{"type":"chrestenson","wire":0},
///                     {"type":"cmodadd","h":3,"k":1}]}
/// Structural problems throw ParseError carrying the gate index.
Circuit circuit_from_json(std::string_view text);
std::string circuit_to_json(const Circuit &c);

/// "1/2", "-i/2", "1/√2", "1", "-i", ... or "(re+imi)" with 6 decimals.
std::string format_coefficient(Complex z, Tolerance tol = Tolerance::state());

/// "1/2|00> + i/2|10> - 1/2|20> - i/2|31>"
std::string format_ket(const QuditState &s, Tolerance tol = Tolerance::state());

/// Right-aligned grid, one matrix row per line.
std::string format_operator(const OperatorMatrix &u);

std::string format_table(const Circuit &c, TableFormat format);
TableFormat parse_table_format(std::string_view name);

std::string entanglement_report_json(const QuditState &s,
                                     Tolerance tol = Tolerance::state());

std::string enumeration_report_json(const EnumerationReport &report,
                                    std::optional<bool> commutative);

std::string generator_sets_json(int radix);

} // namespace qudit
