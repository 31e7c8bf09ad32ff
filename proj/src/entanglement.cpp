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

#include "qudit/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/SVD>

namespace qudit {

namespace {

void require_pair(const QuditState &s) {
    if (s.wires() != 2) {
        throw DomainError("expected a two-qudit state, got " +
                          std::to_string(s.wires()) + " wires");
    }
}

} // namespace

std::string_view to_string(EntanglementClass c) {
    switch (c) {
    case EntanglementClass::ProductState:
        return "ProductState";
    case EntanglementClass::PartiallyEntangled:
        return "PartiallyEntangled";
    case EntanglementClass::MaximallyEntangled:
        return "MaximallyEntangled";
    case EntanglementClass::NonMaximallyEntangled:
        return "NonMaximallyEntangled";
    }
    return "Unknown";
}

CoefficientMatrix coefficient_matrix(const QuditState &s) {
    require_pair(s);
    const auto amps = s.amplitudes();
    return CoefficientMatrix{s.radix(),
                             std::vector<Complex>(amps.begin(), amps.end())};
}

SchmidtData schmidt_data(const QuditState &s, Tolerance /*tol*/) {
    const CoefficientMatrix m = coefficient_matrix(s);
    const int r = m.radix;
    Eigen::MatrixXcd dense(r, r);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            dense(i, j) = m(i, j);
        }
    }
    // Jacobi SVD on the coefficient matrix directly: small singular values
    // are not squared away as they would be through M M^dagger.
    const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(dense);
    const Eigen::VectorXd &sv = svd.singularValues();

    SchmidtData out;
    out.singular_values.assign(sv.data(), sv.data() + sv.size());
    std::sort(out.singular_values.begin(), out.singular_values.end(),
              std::greater<>());
    out.rank = static_cast<int>(
        std::count_if(out.singular_values.begin(), out.singular_values.end(),
                      [](double v) { return v > kRankTolerance; }));
    return out;
}

Classification classify(const QuditState &s, Tolerance tol) {
    SchmidtData schmidt = schmidt_data(s, tol);
    const int r = s.radix();
    const double uniform = 1.0 / std::sqrt(static_cast<double>(r));

    EntanglementClass tag;
    if (schmidt.rank == 1) {
        tag = EntanglementClass::ProductState;
    } else if (std::all_of(schmidt.singular_values.begin(),
                           schmidt.singular_values.end(), [&](double v) {
                               return std::abs(v - uniform) <= tol.eps();
                           })) {
        tag = EntanglementClass::MaximallyEntangled;
    } else {
        double lo = 2.0;
        double hi = 0.0;
        for (const Complex &a : s.amplitudes()) {
            const double mag = std::abs(a);
            if (mag > tol.eps()) {
                lo = std::min(lo, mag);
                hi = std::max(hi, mag);
            }
        }
        const bool balanced = hi - lo <= tol.eps();
        tag = (schmidt.rank < r && balanced)
                  ? EntanglementClass::PartiallyEntangled
                  : EntanglementClass::NonMaximallyEntangled;
    }
    return Classification{tag, std::move(schmidt)};
}

SquareMatrix reduced_density(const QuditState &s, int wire) {
    const CoefficientMatrix m = coefficient_matrix(s);
    if (wire != 0 && wire != 1) {
        throw DomainError("wire must be 0 or 1, got " + std::to_string(wire));
    }
    const int r = m.radix;
    SquareMatrix rho{r, std::vector<Complex>(static_cast<std::size_t>(r * r))};
    for (int a = 0; a < r; ++a) {
        for (int b = 0; b < r; ++b) {
            Complex acc = 0.0;
            for (int t = 0; t < r; ++t) {
                acc += wire == 0 ? m(a, t) * std::conj(m(b, t))
                                 : m(t, a) * std::conj(m(t, b));
            }
            rho.entries[static_cast<std::size_t>(a * r + b)] = acc;
        }
    }
    return rho;
}

CorrelationReport correlation_report(const QuditState &s, Tolerance tol,
                                     int measured_wire) {
    require_pair(s);
    if (measured_wire != 0 && measured_wire != 1) {
        throw DomainError("wire must be 0 or 1, got " +
                          std::to_string(measured_wire));
    }
    const int r = s.radix();
    const auto ur = static_cast<std::size_t>(r);
    CorrelationReport report{measured_wire, {}, 0, 0};
    for (int outcome = 0; outcome < r; ++outcome) {
        double p = 0.0;
        for (std::size_t other = 0; other < ur; ++other) {
            const std::size_t index =
                measured_wire == 0
                    ? static_cast<std::size_t>(outcome) * ur + other
                    : other * ur + static_cast<std::size_t>(outcome);
            p += std::norm(s[index]);
        }
        if (p <= tol.eps()) {
            continue;
        }
        QuditState conditional = conditional_state(s, measured_wire, outcome, tol);
        const auto probs = probabilities(conditional);
        const bool pinned =
            *std::max_element(probs.begin(), probs.end()) >= 1.0 - tol.eps();
        report.entries.push_back(
            CorrelationEntry{outcome, p, std::move(conditional), pinned});
        ++(pinned ? report.pinned_count : report.unpinned_count);
    }
    return report;
}

bool is_maximally_superposed(const QuditState &s, Tolerance tol) {
    if (s.wires() != 1) {
        throw DomainError("maximal superposition is defined for one qudit");
    }
    const double target = 1.0 / s.radix();
    const auto probs = probabilities(s);
    return std::all_of(probs.begin(), probs.end(), [&](double p) {
        return std::abs(p - target) <= tol.eps();
    });
}

} // namespace qudit
