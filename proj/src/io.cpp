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

#include "qudit/io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace qudit {

namespace {

using Json = nlohmann::ordered_json;

template <class... Ts> struct overloaded : Ts... {
    using Ts::operator()...;
};

Json complex_to_json(Complex z) {
    Json j;
    j["re"] = z.real();
    j["im"] = z.imag();
    return j;
}

Complex complex_from_json(const Json &j, const std::string &where) {
    if (!j.is_object() || !j.contains("re") || !j.contains("im") ||
        !j["re"].is_number() || !j["im"].is_number()) {
        throw ParseError(where + ": expected {\"re\": number, \"im\": number}");
    }
    return {j["re"].get<double>(), j["im"].get<double>()};
}

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

int integer_field(const Json &obj, const char *key, const std::string &where) {
    if (!obj.contains(key)) {
        throw ParseError(where + ": missing \"" + key + "\"");
    }
    const Json &v = obj[key];
    if (!v.is_number_integer()) {
        throw ParseError(where + ": \"" + key + "\" must be an integer");
    }
    return v.get<int>();
}

Json state_json(const QuditState &s) {
    Json j;
    j["radix"] = s.radix();
    j["wires"] = s.wires();
    Json amps = Json::array();
    for (const Complex &a : s.amplitudes()) {
        amps.push_back(complex_to_json(a));
    }
    j["amplitudes"] = std::move(amps);
    return j;
}

Json square_json(const SquareMatrix &m) {
    Json rows = Json::array();
    for (int i = 0; i < m.radix; ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.radix; ++j) {
            row.push_back(complex_to_json(m(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Json spec_json(const GeneratorSpec &spec) {
    Json pairs = Json::array();
    for (const GateParams &p : spec.pairs) {
        Json pj;
        pj["h"] = p.h;
        pj["k"] = p.k;
        pairs.push_back(std::move(pj));
    }
    return pairs;
}

std::string fixed_complex(Complex z) {
    std::array<char, 64> buf{};
    std::snprintf(buf.data(), buf.size(), "(%.6f%+.6fi)", z.real(), z.imag());
    return buf.data();
}

bool near(Complex a, Complex b, double eps) { return std::abs(a - b) <= eps; }

// Symbol for unit-modulus phases 1, -1, i, -i scaled by `scale`, given the
// textual form of the scale denominator ("" when the scale is 1).
std::optional<std::string> phase_symbol(Complex z, double scale,
                                        const std::string &denominator,
                                        double eps) {
    static const std::array<std::pair<Complex, const char *>, 4> phases{{
        {Complex(1, 0), "1"},
        {Complex(-1, 0), "-1"},
        {Complex(0, 1), "i"},
        {Complex(0, -1), "-i"},
    }};
    for (const auto &[phase, name] : phases) {
        if (near(z, phase * scale, eps)) {
            if (denominator.empty()) {
                return std::string(name);
            }
            return std::string(name) + "/" + denominator;
        }
    }
    return std::nullopt;
}

} // namespace

std::string state_to_json(const QuditState &s) { return state_json(s).dump(); }

QuditState state_from_json(std::string_view text) {
    const Json j = parse_json(text);
    if (!j.is_object()) {
        throw ParseError("state: expected a JSON object");
    }
    const int radix = integer_field(j, "radix", "state");
    const int wires = integer_field(j, "wires", "state");
    if (!j.contains("amplitudes") || !j["amplitudes"].is_array()) {
        throw ParseError("state: \"amplitudes\" must be an array");
    }
    std::vector<Complex> amps;
    std::size_t index = 0;
    for (const Json &a : j["amplitudes"]) {
        amps.push_back(
            complex_from_json(a, "state amplitude " + std::to_string(index++)));
    }
    return QuditState::from_amplitudes(radix, wires, std::move(amps));
}

std::string operator_to_json(const OperatorMatrix &u) {
    Json j;
    j["dim"] = u.dim();
    Json rows = Json::array();
    for (std::size_t i = 0; i < u.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < u.dim(); ++k) {
            row.push_back(complex_to_json(u(i, k)));
        }
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j.dump();
}

OperatorMatrix operator_from_json(std::string_view text) {
    const Json j = parse_json(text);
    if (!j.is_object()) {
        throw ParseError("operator: expected a JSON object");
    }
    const int dim = integer_field(j, "dim", "operator");
    if (dim <= 0) {
        throw ParseError("operator: \"dim\" must be positive");
    }
    if (!j.contains("entries") || !j["entries"].is_array() ||
        j["entries"].size() != static_cast<std::size_t>(dim)) {
        throw ParseError("operator: \"entries\" must hold dim rows");
    }
    std::vector<Complex> entries;
    for (std::size_t i = 0; i < j["entries"].size(); ++i) {
        const Json &row = j["entries"][i];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(dim)) {
            throw ParseError("operator: row " + std::to_string(i) +
                             " must hold dim entries");
        }
        for (const Json &e : row) {
            entries.push_back(
                complex_from_json(e, "operator row " + std::to_string(i)));
        }
    }
    return OperatorMatrix::from_entries(static_cast<std::size_t>(dim),
                                        std::move(entries));
}

Circuit circuit_from_json(std::string_view text) {
    const Json j = parse_json(text);
    if (!j.is_object()) {
        throw ParseError("circuit: expected a JSON object");
    }
    const int radix = integer_field(j, "radix", "circuit");
    if (radix < 2 || radix > kMaxRadix) {
        throw ParseError("circuit: radix must be in [2, " +
                         std::to_string(kMaxRadix) + "], got " +
                         std::to_string(radix));
    }
    if (!j.contains("gates") || !j["gates"].is_array()) {
        throw ParseError("circuit: \"gates\" must be an array");
    }
    std::vector<GateSpec> gates;
    const Json &list = j["gates"];
    for (std::size_t i = 0; i < list.size(); ++i) {
        const auto index = static_cast<long>(i);
        const std::string where = "gate " + std::to_string(i);
        const Json &g = list[i];
        if (!g.is_object() || !g.contains("type") || !g["type"].is_string()) {
            throw ParseError(where + ": expected an object with a \"type\"",
                             index);
        }
        const std::string type = g["type"].get<std::string>();
        try {
            if (type == "chrestenson") {
                const int wire =
                    g.contains("wire") ? integer_field(g, "wire", where) : 0;
                if (wire != 0 && wire != 1) {
                    throw ParseError(where + ": wire must be 0 or 1", index);
                }
                gates.emplace_back(ChrestensonGate{wire});
            } else if (type == "cmodadd") {
                GateParams p{integer_field(g, "h", where),
                             integer_field(g, "k", where)};
                p.validate(radix);
                gates.emplace_back(ControlledModAddGate{p});
            } else {
                throw ParseError(where + ": unknown gate type \"" + type + "\"",
                                 index);
            }
        } catch (const ParseError &e) {
            throw ParseError(e.what(), index);
        } catch (const DomainError &e) {
            throw ParseError(where + ": " + e.what(), index);
        }
    }
    return Circuit(radix, std::move(gates));
}

std::string circuit_to_json(const Circuit &c) {
    Json j;
    j["radix"] = c.radix();
    Json gates = Json::array();
    for (const GateSpec &g : c.gates()) {
        Json gj;
        std::visit(overloaded{
                       [&](const ChrestensonGate &cg) {
                           gj["type"] = "chrestenson";
                           gj["wire"] = cg.wire;
                       },
                       [&](const ControlledModAddGate &ag) {
                           gj["type"] = "cmodadd";
                           gj["h"] = ag.params.h;
                           gj["k"] = ag.params.k;
                       },
                   },
                   g);
        gates.push_back(std::move(gj));
    }
    j["gates"] = std::move(gates);
    return j.dump();
}

std::string format_coefficient(Complex z, Tolerance tol) {
    const double eps = tol.eps();
    if (auto s = phase_symbol(z, 1.0, "", eps)) {
        return *s;
    }
    if (auto s = phase_symbol(z, 0.5, "2", eps)) {
        return *s;
    }
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    if (near(z, Complex(inv_sqrt2, 0), eps)) {
        return "1/√2";
    }
    if (near(z, Complex(-inv_sqrt2, 0), eps)) {
        return "-1/√2";
    }
    return fixed_complex(z);
}

std::string format_ket(const QuditState &s, Tolerance tol) {
    std::string out;
    for (std::size_t i = 0; i < s.dimension(); ++i) {
        if (std::abs(s[i]) <= tol.eps()) {
            continue;
        }
        std::string coeff = format_coefficient(s[i], tol);
        const std::string ket =
            "|" + basis_digits(s.radix(), s.wires(), i).to_string() + "⟩";
        if (out.empty()) {
            out = coeff + ket;
        } else if (coeff.front() == '-') {
            out += " - " + coeff.substr(1) + ket;
        } else {
            out += " + " + coeff + ket;
        }
    }
    return out;
}

std::string format_operator(const OperatorMatrix &u) {
    constexpr double eps = 1e-12;
    const auto cell = [&](Complex z) -> std::string {
        if (near(z, 0.0, eps)) {
            return "0";
        }
        if (auto s = phase_symbol(z, 1.0, "", eps)) {
            return *s;
        }
        for (int d = 2; d <= kMaxRadix; ++d) {
            const double root = std::sqrt(static_cast<double>(d));
            const double rounded = std::round(root);
            const bool perfect = rounded * rounded == d;
            const std::string denom =
                perfect ? std::to_string(static_cast<int>(rounded))
                        : "√" + std::to_string(d);
            if (auto s = phase_symbol(z, 1.0 / root, denom, eps)) {
                return *s;
            }
        }
        return fixed_complex(z);
    };

    std::vector<std::string> cells;
    cells.reserve(u.dim() * u.dim());
    std::size_t width = 0;
    for (const Complex &z : u.entries()) {
        cells.push_back(cell(z));
        // Display width; the radical sign is one column but three bytes.
        std::size_t w = cells.back().size();
        if (cells.back().find("√") != std::string::npos) {
            w -= 2;
        }
        width = std::max(width, w);
    }
    std::string out;
    for (std::size_t i = 0; i < u.dim(); ++i) {
        for (std::size_t k = 0; k < u.dim(); ++k) {
            const std::string &c = cells[i * u.dim() + k];
            std::size_t w = c.size();
            if (c.find("√") != std::string::npos) {
                w -= 2;
            }
            if (k != 0) {
                out += ' ';
            }
            out.append(width - w, ' ');
            out += c;
        }
        out += '\n';
    }
    return out;
}

TableFormat parse_table_format(std::string_view name) {
    if (name == "pretty") {
        return TableFormat::Pretty;
    }
    if (name == "tsv") {
        return TableFormat::Tsv;
    }
    if (name == "json") {
        return TableFormat::Json;
    }
    throw DomainError("unknown table format \"" + std::string(name) + "\"");
}

std::string format_table(const Circuit &c, TableFormat format) {
    const std::vector<TableRow> rows = table_outputs(c);
    switch (format) {
    case TableFormat::Json: {
        Json j;
        j["radix"] = c.radix();
        Json list = Json::array();
        for (const TableRow &row : rows) {
            Json rj;
            rj["input"] = row.input.to_string();
            rj["output"] = state_json(row.output);
            list.push_back(std::move(rj));
        }
        j["rows"] = std::move(list);
        return j.dump() + "\n";
    }
    case TableFormat::Tsv: {
        std::string out = "input\toutput\n";
        for (const TableRow &row : rows) {
            out += row.input.to_string() + "\t" + format_ket(row.output) + "\n";
        }
        return out;
    }
    case TableFormat::Pretty:
        break;
    }
    std::string out;
    for (const TableRow &row : rows) {
        out += "|" + row.input.to_string() + "⟩ -> " + format_ket(row.output) +
               "\n";
    }
    return out;
}

std::string entanglement_report_json(const QuditState &s, Tolerance tol) {
    const Classification c = classify(s, tol);
    const CorrelationReport corr = correlation_report(s, tol);
    Json j;
    j["classification"] = std::string(to_string(c.tag));
    j["schmidt_values"] = c.schmidt.singular_values;
    j["schmidt_rank"] = c.schmidt.rank;
    Json pinned = Json::array();
    for (const CorrelationEntry &e : corr.entries) {
        Json ej;
        ej["outcome"] = e.outcome;
        ej["prob"] = e.probability;
        ej["conditional"] = state_json(e.conditional);
        ej["pinned"] = e.pinned;
        pinned.push_back(std::move(ej));
    }
    j["pinned"] = std::move(pinned);
    j["pinned_count"] = corr.pinned_count;
    j["unpinned_count"] = corr.unpinned_count;
    j["reduced_density_wire0"] = square_json(reduced_density(s, 0));
    return j.dump();
}

std::string enumeration_report_json(const EnumerationReport &report,
                                    std::optional<bool> commutative) {
    Json j;
    j["radix"] = report.radix;
    j["circuit_forms"] = report.circuit_form_count
                             ? Json(*report.circuit_form_count)
                             : Json(nullptr);
    j["unique_transfers"] = report.unique_transfer_count
                                ? Json(*report.unique_transfer_count)
                                : Json(nullptr);
    j["formula_circuit_count"] = report.formula_circuit_count;
    j["formula_unique_count"] = report.formula_unique_count;
    j["all_maximal"] = report.all_maximal;
    j["brute_force"] = report.brute_force;
    j["commutative"] = commutative ? Json(*commutative) : Json(nullptr);
    Json failures = Json::array();
    for (const VerificationFailure &f : report.failures) {
        Json fj;
        fj["kind"] = f.kind;
        fj["spec"] = f.spec ? spec_json(*f.spec) : Json(nullptr);
        fj["detail"] = f.detail;
        failures.push_back(std::move(fj));
    }
    j["failures"] = std::move(failures);
    return j.dump();
}

std::string generator_sets_json(int radix) {
    const std::vector<GeneratorSpec> sets = enumerate_generator_sets(radix);
    Json j;
    j["radix"] = radix;
    j["count"] = sets.size();
    Json list = Json::array();
    for (const GeneratorSpec &s : sets) {
        list.push_back(spec_json(s));
    }
    j["generator_sets"] = std::move(list);
    return j.dump();
}

} // namespace qudit
