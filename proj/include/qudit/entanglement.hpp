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
#include <string_view>
#include <vector>

#include "qudit/common.hpp"
#include "qudit/state.hpp"

namespace qudit {

/// Singular values at or below this count as zero. Kept well above the state
/// tolerance so a numerical failure shows up as a wrong rank.
inline constexpr double kRankTolerance = 1e-7;

/// r x r complex matrix, row-major.
struct SquareMatrix {
    int radix = 0;
    std::vector<Complex> entries;

    const Complex &operator()(int row, int col) const {
        return entries[static_cast<std::size_t>(row * radix + col)];
    }
};

/// state = sum_{i,j} M[i][j] |i j>.
using CoefficientMatrix = SquareMatrix;

struct SchmidtData {
    /// Non-increasing, length r.
    std::vector<double> singular_values;
    int rank = 0;
};

enum class EntanglementClass {
    ProductState,
    PartiallyEntangled,
    MaximallyEntangled,
    NonMaximallyEntangled,
};

std::string_view to_string(EntanglementClass c);

struct Classification {
    EntanglementClass tag;
    SchmidtData schmidt;
};

struct CorrelationEntry {
    int outcome;
    double probability;
    /// Residual state of the unmeasured wire.
    QuditState conditional;
    /// The conditional state is a single basis state (up to phase).
    bool pinned;
};

struct CorrelationReport {
    int measured_wire;
    std::vector<CorrelationEntry> entries;
    int pinned_count = 0;
    int unpinned_count = 0;
};

CoefficientMatrix coefficient_matrix(const QuditState &s);

SchmidtData schmidt_data(const QuditState &s, Tolerance tol = Tolerance::state());

/// ProductState: Schmidt rank 1.
/// MaximallyEntangled: every Schmidt value is 1/sqrt(r).
/// PartiallyEntangled: 1 < rank < r and every nonzero amplitude has the same
///   magnitude, i.e. entangled basis terms mixed with a factorable remainder.
/// NonMaximallyEntangled: anything else (imbalanced amplitudes).
Classification classify(const QuditState &s, Tolerance tol = Tolerance::state());

/// Partial trace over the other wire.
SquareMatrix reduced_density(const QuditState &s, int wire);

/// Outcomes of `measured_wire` with probability > eps and the state they
/// leave on the other wire.
CorrelationReport correlation_report(const QuditState &s,
                                     Tolerance tol = Tolerance::state(),
                                     int measured_wire = 1);

/// Every |a_i|^2 equals 1/r.
bool is_maximally_superposed(const QuditState &s,
                             Tolerance tol = Tolerance::state());

} // namespace qudit
