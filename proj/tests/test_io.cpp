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

#include <algorithm>
#include <cmath>
#include <string>

#include "gtest/gtest.h"
#include "json.hpp"

#include "qudit/io.hpp"
#include "test_support.hpp"

using namespace qudit;
namespace t = qudit::testing;

TEST(StateJson, RoundTripIsByteIdentical) {
    for (const QuditState &s :
         {t::half_ket("+00 +i10 -20 -i31"), t::full_state(),
          t::ket(3, "+0 +1 +2", 1.0 / std::sqrt(3.0)),
          basis_state(36, 1, DigitString{{35}})}) {
        const std::string once = state_to_json(s);
        const std::string twice = state_to_json(state_from_json(once));
        EXPECT_EQ(once, twice);
        EXPECT_TRUE(states_equal(state_from_json(once), s, Tolerance(1e-15)));
    }
}

TEST(StateJson, Layout) {
    const auto j = nlohmann::json::parse(
        state_to_json(basis_state(2, 1, DigitString{{1}})));
    EXPECT_EQ(j["radix"], 2);
    EXPECT_EQ(j["wires"], 1);
    ASSERT_EQ(j["amplitudes"].size(), 2u);
    EXPECT_EQ(j["amplitudes"][1]["re"], 1.0);
    EXPECT_EQ(j["amplitudes"][1]["im"], 0.0);
}

TEST(StateJson, Errors) {
    EXPECT_THROW(state_from_json("{"), ParseError);
    EXPECT_THROW(state_from_json("[]"), ParseError);
    EXPECT_THROW(state_from_json(R"({"radix":2,"wires":1})"), ParseError);
    EXPECT_THROW(
        state_from_json(R"({"radix":2,"wires":1,"amplitudes":[{"re":1}]})"),
        ParseError);
    EXPECT_THROW(state_from_json(R"({"radix":2,"wires":1,"amplitudes":)"
                                 R"([{"re":1,"im":0},{"re":1,"im":0}]})"),
                 DomainError);
}

TEST(OperatorJson, RoundTripIsByteIdentical) {
    for (const OperatorMatrix &u :
         {chrestenson(4), chrestenson(3), controlled_mod_add(4, {3, 1}),
          mod_add(5, 2)}) {
        const std::string once = operator_to_json(u);
        EXPECT_EQ(operator_to_json(operator_from_json(once)), once);
    }
    EXPECT_THROW(operator_from_json(R"({"dim":2,"entries":[]})"), ParseError);
}

TEST(CircuitJson, ParsesAndRoundTrips) {
    const std::string text =
        R"({"radix":4,"gates":[{"type":"chrestenson","wire":0},)"
        R"({"type":"cmodadd","h":3,"k":1}]})";
    const Circuit c = circuit_from_json(text);
    EXPECT_EQ(c.radix(), 4);
    ASSERT_EQ(c.gates().size(), 2u);
    EXPECT_EQ(circuit_to_json(c), text);
    EXPECT_EQ(circuit_from_json(R"({"radix":4,"gates":[{"type":"chrestenson"}]})")
                  .gates()[0],
              GateSpec(ChrestensonGate{0}));
}

TEST(CircuitJson, ErrorsNameGateIndex) {
    const auto gate_index = [](const std::string &text) -> long {
        try {
            circuit_from_json(text);
        } catch (const ParseError &e) {
            return e.gate_index();
        }
        return -100;
    };
    EXPECT_EQ(gate_index(R"({"radix":4,"gates":[{"type":"chrestenson"},)"
                         R"({"type":"swap"}]})"),
              1);
    EXPECT_EQ(gate_index(R"({"radix":4,"gates":[{"type":"cmodadd","h":4,"k":1}]})"),
              0);
    EXPECT_EQ(gate_index(R"({"radix":4,"gates":[{"type":"chrestenson"},)"
                         R"({"type":"chrestenson"},{"type":"cmodadd","h":1}]})"),
              2);
    EXPECT_EQ(gate_index(R"({"radix":4,"gates":[{"type":"chrestenson","wire":3}]})"),
              0);
    EXPECT_EQ(gate_index(R"({"radix":1,"gates":[]})"), -1);
    EXPECT_EQ(gate_index("not json"), -1);

    try {
        circuit_from_json(R"({"radix":4,"gates":[{"type":"swap"}]})");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_NE(std::string(e.what()).find("gate 0"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("swap"), std::string::npos);
    }
}

TEST(PrettyKet, Symbols) {
    EXPECT_EQ(format_ket(t::partial_state_one_gate()),
              "1/2|00⟩ + 1/2|10⟩ + 1/2|20⟩ + 1/2|31⟩");
    EXPECT_EQ(format_ket(t::half_ket("+03 -i13 -23 +i30")),
              "1/2|03⟩ - i/2|13⟩ - 1/2|23⟩ + i/2|30⟩");
    EXPECT_EQ(format_ket(t::ket(2, "+00 -11", 1.0 / std::sqrt(2.0))),
              "1/√2|00⟩ - 1/√2|11⟩");
    EXPECT_EQ(format_ket(basis_state(4, 2, DigitString{{3, 1}})), "1|31⟩");
    EXPECT_EQ(format_ket(basis_state(12, 1, DigitString{{11}})), "1|b⟩");
}

TEST(PrettyKet, FixedPointFallback) {
    EXPECT_EQ(format_coefficient(Complex(0.6, 0.0)), "(0.600000+0.000000i)");
    EXPECT_EQ(format_coefficient(Complex(0.0, -0.8)), "(0.000000-0.800000i)");
    EXPECT_EQ(format_coefficient(Complex(0.0, 0.5)), "i/2");
    EXPECT_EQ(format_coefficient(Complex(-1.0, 0.0)), "-1");
}

TEST(PrettyOperator, SymbolicCells) {
    const std::string c4 = format_operator(chrestenson(4));
    EXPECT_EQ(c4.substr(0, c4.find('\n')), " 1/2  1/2  1/2  1/2");
    EXPECT_NE(c4.find("i/2"), std::string::npos);
    const std::string c3 = format_operator(chrestenson(3));
    EXPECT_NE(c3.find("1/√3"), std::string::npos);
    EXPECT_EQ(format_operator(mod_add(2, 1)), "0 1\n1 0\n");
}

TEST(Table, Formats) {
    const Circuit c = entanglement_generator(4, t::kSpecA31);
    const std::string pretty = format_table(c, TableFormat::Pretty);
    EXPECT_NE(pretty.find("|13⟩ -> 1/2|03⟩ + i/2|13⟩ - 1/2|23⟩ - i/2|30⟩\n"),
              std::string::npos);

    const std::string tsv = format_table(c, TableFormat::Tsv);
    EXPECT_EQ(tsv.substr(0, tsv.find('\n')), "input\toutput");
    EXPECT_EQ(std::count(tsv.begin(), tsv.end(), '\n'), 17);

    const auto j = nlohmann::json::parse(format_table(c, TableFormat::Json));
    EXPECT_EQ(j["radix"], 4);
    ASSERT_EQ(j["rows"].size(), 16u);
    EXPECT_EQ(j["rows"][7]["input"], "13");
    EXPECT_TRUE(states_equal(state_from_json(j["rows"][7]["output"].dump()),
                             t::half_ket("+03 +i13 -23 -i30")));

    EXPECT_EQ(parse_table_format("tsv"), TableFormat::Tsv);
    EXPECT_THROW(parse_table_format("csv"), DomainError);
}

TEST(ReportJson, EntanglementKeys) {
    const auto j = nlohmann::json::parse(
        entanglement_report_json(t::partial_state_one_gate()));
    EXPECT_EQ(j["classification"], "PartiallyEntangled");
    EXPECT_EQ(j["schmidt_rank"], 2);
    ASSERT_EQ(j["pinned"].size(), 2u);
    EXPECT_EQ(j["pinned"][1]["outcome"], 1);
    EXPECT_EQ(j["pinned"][1]["pinned"], true);
    EXPECT_EQ(j["pinned"][0]["pinned"], false);
    EXPECT_EQ(j["reduced_density_wire0"].size(), 4u);
}

TEST(ReportJson, EnumerationKeys) {
    const auto j = nlohmann::json::parse(
        enumeration_report_json(verify_counts(3), verify_commutativity(3)));
    EXPECT_EQ(j["radix"], 3);
    EXPECT_EQ(j["circuit_forms"], 12);
    EXPECT_EQ(j["unique_transfers"], 6);
    EXPECT_EQ(j["formula_circuit_count"], 12);
    EXPECT_EQ(j["formula_unique_count"], 6);
    EXPECT_EQ(j["all_maximal"], true);
    EXPECT_EQ(j["commutative"], true);
    EXPECT_TRUE(j["failures"].empty());

    const auto sets = nlohmann::json::parse(generator_sets_json(2));
    EXPECT_EQ(sets["count"], 2);
    EXPECT_EQ(sets["generator_sets"][1][0]["h"], 1);
}
