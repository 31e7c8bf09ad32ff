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

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "qudit/circuit.hpp"
#include "qudit/entanglement.hpp"
#include "qudit/enumeration.hpp"
#include "test_support.hpp"

using namespace qudit;
namespace t = qudit::testing;

namespace {

QuditState swap_wires(const QuditState &s) {
    const auto r = static_cast<std::size_t>(s.radix());
    std::vector<Complex> amps(r * r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            amps[j * r + i] = s[i * r + j];
        }
    }
    return QuditState::from_amplitudes(s.radix(), 2, std::move(amps));
}

void expect_identity_over_r(const SquareMatrix &rho, double eps) {
    for (int a = 0; a < rho.radix; ++a) {
        for (int b = 0; b < rho.radix; ++b) {
            const double want = a == b ? 1.0 / rho.radix : 0.0;
            EXPECT_NEAR(std::abs(rho(a, b) - want), 0.0, eps);
        }
    }
}

} // namespace

TEST(CoefficientMatrix, RowIsControlDigit) {
    const CoefficientMatrix m = coefficient_matrix(t::partial_state_one_gate());
    EXPECT_EQ(m.radix, 4);
    EXPECT_EQ(m(0, 0), Complex(0.5));
    EXPECT_EQ(m(3, 1), Complex(0.5));
    EXPECT_EQ(m(3, 0), Complex(0.0));
    EXPECT_THROW(coefficient_matrix(basis_state(4, 1, DigitString{{0}})),
                 DomainError);
}

TEST(SchmidtData, Examples) {
    const SchmidtData product = schmidt_data(basis_state(4, 2, DigitString{{0, 0}}));
    EXPECT_EQ(product.rank, 1);
    EXPECT_NEAR(product.singular_values[0], 1.0, 1e-12);

    const SchmidtData one = schmidt_data(t::partial_state_one_gate());
    EXPECT_EQ(one.rank, 2);
    EXPECT_NEAR(one.singular_values[0], std::sqrt(3.0) / 2.0, 1e-12);
    EXPECT_NEAR(one.singular_values[1], 0.5, 1e-12);

    const SchmidtData two = schmidt_data(t::partial_state_two_gates());
    EXPECT_EQ(two.rank, 3);
    EXPECT_NEAR(two.singular_values[0], 1.0 / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(two.singular_values[1], 0.5, 1e-12);
    EXPECT_NEAR(two.singular_values[2], 0.5, 1e-12);

    const SchmidtData full = schmidt_data(t::full_state());
    EXPECT_EQ(full.rank, 4);
    for (double v : full.singular_values) {
        EXPECT_NEAR(v, 0.5, 1e-12);
    }
}

TEST(SchmidtData, AgreesWithGramOracle) {
    std::mt19937 rng(11);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 60; ++trial) {
        const int r = 2 + trial % 5;
        std::vector<Complex> amps(static_cast<std::size_t>(r * r));
        double norm = 0.0;
        for (Complex &a : amps) {
            a = {g(rng), g(rng)};
            norm += std::norm(a);
        }
        for (Complex &a : amps) {
            a /= std::sqrt(norm);
        }
        const QuditState s = QuditState::from_amplitudes(r, 2, amps);
        const SchmidtData got = schmidt_data(s);
        const std::vector<double> want = t::schmidt_via_gram(s);
        ASSERT_EQ(got.singular_values.size(), want.size());
        double sum = 0.0;
        for (std::size_t i = 0; i < want.size(); ++i) {
            EXPECT_NEAR(got.singular_values[i], want[i], 1e-7);
            sum += got.singular_values[i] * got.singular_values[i];
        }
        EXPECT_NEAR(sum, 1.0, 1e-9);
    }
}

TEST(Classify, Examples) {
    EXPECT_EQ(classify(basis_state(4, 2, DigitString{{0, 0}})).tag,
              EntanglementClass::ProductState);
    EXPECT_EQ(classify(t::half_ket("+00 +10 +20 +30")).tag,
              EntanglementClass::ProductState);
    EXPECT_EQ(classify(t::partial_state_one_gate()).tag,
              EntanglementClass::PartiallyEntangled);
    EXPECT_EQ(classify(t::partial_state_two_gates()).tag,
              EntanglementClass::PartiallyEntangled);
    EXPECT_EQ(classify(t::full_state()).tag,
              EntanglementClass::MaximallyEntangled);
    EXPECT_EQ(classify(t::ket(2, "+00 +11", 1.0 / std::sqrt(2.0))).tag,
              EntanglementClass::MaximallyEntangled);

    std::vector<Complex> amps(4, 0.0);
    amps[0] = std::sqrt(0.8);
    amps[3] = std::sqrt(0.2);
    EXPECT_EQ(classify(QuditState::from_amplitudes(2, 2, amps)).tag,
              EntanglementClass::NonMaximallyEntangled);

    std::vector<Complex> uneven(16, 0.0);
    uneven[0] = std::sqrt(0.5);
    uneven[5] = std::sqrt(0.3);
    uneven[10] = std::sqrt(0.2);
    EXPECT_EQ(classify(QuditState::from_amplitudes(4, 2, uneven)).tag,
              EntanglementClass::NonMaximallyEntangled);
}

TEST(Classify, TagNames) {
    EXPECT_EQ(to_string(EntanglementClass::PartiallyEntangled),
              "PartiallyEntangled");
    EXPECT_EQ(to_string(EntanglementClass::MaximallyEntangled),
              "MaximallyEntangled");
}

TEST(ReducedDensity, FullAndPartial) {
    expect_identity_over_r(reduced_density(t::full_state(), 0), 1e-12);
    expect_identity_over_r(reduced_density(t::full_state(), 1), 1e-12);

    const SquareMatrix rho = reduced_density(t::partial_state_one_gate(), 1);
    EXPECT_NEAR(rho(0, 0).real(), 0.75, 1e-12);
    EXPECT_NEAR(rho(1, 1).real(), 0.25, 1e-12);
    EXPECT_NEAR(std::abs(rho(0, 1)), 0.0, 1e-12);
    EXPECT_THROW(reduced_density(t::full_state(), 2), DomainError);
}

TEST(CorrelationReport, PartialStatePinsOutcomeOne) {
    const CorrelationReport rep = correlation_report(t::partial_state_one_gate());
    EXPECT_EQ(rep.measured_wire, 1);
    ASSERT_EQ(rep.entries.size(), 2u);
    EXPECT_EQ(rep.pinned_count, 1);
    EXPECT_EQ(rep.unpinned_count, 1);

    EXPECT_EQ(rep.entries[0].outcome, 0);
    EXPECT_FALSE(rep.entries[0].pinned);
    EXPECT_NEAR(rep.entries[0].probability, 0.75, 1e-12);
    EXPECT_TRUE(states_equal(rep.entries[0].conditional,
                             t::ket(4, "+0 +1 +2", 1.0 / std::sqrt(3.0))));

    EXPECT_EQ(rep.entries[1].outcome, 1);
    EXPECT_TRUE(rep.entries[1].pinned);
    EXPECT_TRUE(states_equal(rep.entries[1].conditional,
                             basis_state(4, 1, DigitString{{3}})));
}

TEST(CorrelationReport, FullStatePinsEverything) {
    const CorrelationReport rep = correlation_report(t::full_state());
    EXPECT_EQ(rep.pinned_count, 4);
    EXPECT_EQ(rep.unpinned_count, 0);
    const CorrelationReport other = correlation_report(t::full_state(),
                                                       Tolerance::state(), 0);
    EXPECT_EQ(other.pinned_count, 4);
}

TEST(CorrelationReport, PhaseDoesNotUnpin) {
    const CorrelationReport rep =
        correlation_report(t::half_ket("+00 +i10 -20 -i31"));
    ASSERT_EQ(rep.entries.size(), 2u);
    EXPECT_TRUE(rep.entries[1].pinned);
    EXPECT_FALSE(rep.entries[0].pinned);
}

TEST(MaximallySuperposed, Examples) {
    EXPECT_TRUE(is_maximally_superposed(t::ket(4, "+0 +1 +2 +3", 0.5)));
    EXPECT_TRUE(is_maximally_superposed(t::ket(4, "+0 +i1 -2 -i3", 0.5)));
    EXPECT_FALSE(is_maximally_superposed(basis_state(4, 1, DigitString{{0}})));
    EXPECT_THROW(is_maximally_superposed(t::full_state()), DomainError);
}

TEST(RankLaw, MatchesDistinctShiftCount) {
    for (int r = 3; r <= 4; ++r) {
        // Every distinct-h distinct-k spec with up to r - 1 gates.
        std::vector<GeneratorSpec> frontier{GeneratorSpec{}};
        for (int m = 1; m < r; ++m) {
            std::vector<GeneratorSpec> next;
            for (const GeneratorSpec &base : frontier) {
                for (int h = 0; h < r; ++h) {
                    for (int k = 1; k < r; ++k) {
                        GeneratorSpec spec = base;
                        spec.pairs.push_back({h, k});
                        try {
                            spec.validate(r);
                        } catch (const DomainError &) {
                            continue;
                        }
                        next.push_back(spec);
                    }
                }
            }
            for (const GeneratorSpec &spec : next) {
                const int want = t::expected_generator_rank(r, spec);
                EXPECT_EQ(want, m + 1);
                for (const TableRow &row :
                     table_outputs(entanglement_generator(r, spec))) {
                    EXPECT_EQ(schmidt_data(row.output).rank, want);
                }
            }
            frontier = std::move(next);
        }
    }
}

TEST(Invariance, SwappingWiresKeepsSchmidtValues) {
    for (const QuditState &s : {t::partial_state_one_gate(),
                                t::partial_state_two_gates(), t::full_state()}) {
        const SchmidtData a = schmidt_data(s);
        const SchmidtData b = schmidt_data(swap_wires(s));
        EXPECT_EQ(a.rank, b.rank);
        for (std::size_t i = 0; i < a.singular_values.size(); ++i) {
            EXPECT_NEAR(a.singular_values[i], b.singular_values[i], 1e-12);
        }
        EXPECT_EQ(classify(s).tag, classify(swap_wires(s)).tag);
    }
}

TEST(Maximality, SchmidtAndReducedDensityAgree) {
    for (int r = 2; r <= 5; ++r) {
        for (const GeneratorSpec &spec : enumerate_generator_sets(r)) {
            for (const TableRow &row :
                 table_outputs(entanglement_generator(r, spec))) {
                EXPECT_EQ(classify(row.output).tag,
                          EntanglementClass::MaximallyEntangled);
                expect_identity_over_r(reduced_density(row.output, 0), 1e-9);
                expect_identity_over_r(reduced_density(row.output, 1), 1e-9);
            }
        }
    }
}
