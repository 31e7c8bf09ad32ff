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

// Shared fixtures for the unit and acceptance tests: hand-transcribed
// reference outputs and oracles that do not go through the library's own
// compose/tensor/SVD paths.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "qudit/circuit.hpp"
#include "qudit/operators.hpp"
#include "qudit/state.hpp"

namespace qudit::testing {

/// Builds a two-or-more-wire state from "+00 +i10 -20 -i31" style terms, all
/// scaled by `scale`. Digits are radix-r characters.
inline QuditState ket(int radix, const std::string &terms, double scale) {
    std::istringstream in(terms);
    std::string term;
    std::vector<Complex> amps;
    int wires = 0;
    std::vector<std::pair<Complex, std::string>> parsed;
    while (in >> term) {
        Complex phase = 1.0;
        std::size_t pos = 0;
        if (term[pos] == '+' || term[pos] == '-') {
            phase = term[pos] == '-' ? -1.0 : 1.0;
            ++pos;
        }
        if (term[pos] == 'i') {
            phase *= Complex(0, 1);
            ++pos;
        }
        const std::string digits = term.substr(pos);
        wires = static_cast<int>(digits.size());
        parsed.emplace_back(phase * scale, digits);
    }
    amps.assign(ipow(static_cast<std::size_t>(radix),
                     static_cast<std::size_t>(wires)),
                0.0);
    for (const auto &[coeff, digits] : parsed) {
        amps[basis_index(radix, DigitString::parse(digits, radix))] += coeff;
    }
    return QuditState::from_amplitudes(radix, wires, std::move(amps));
}

inline QuditState half_ket(const std::string &terms) {
    return ket(4, terms, 0.5);
}

struct TableEntry {
    const char *input;
    const char *output; // terms, overall factor 1/2
};

// Radix-4 generator outputs, Chrestenson on wire 0 then:
//   kTableA31     : A_{3,1}
//   kTableA22A31  : A_{3,1}, A_{2,2}
//   kTableFull    : A_{3,1}, A_{2,2}, A_{1,3}
inline constexpr std::array<TableEntry, 16> kTableA31{{
    {"00", "+00 +10 +20 +31"},   {"01", "+01 +11 +21 +32"},
    {"02", "+02 +12 +22 +33"},   {"03", "+03 +13 +23 +30"},
    {"10", "+00 +i10 -20 -i31"}, {"11", "+01 +i11 -21 -i32"},
    {"12", "+02 +i12 -22 -i33"}, {"13", "+03 +i13 -23 -i30"},
    {"20", "+00 -10 +20 -31"},   {"21", "+01 -11 +21 -32"},
    {"22", "+02 -12 +22 -33"},   {"23", "+03 -13 +23 -30"},
    {"30", "+00 -i10 -20 +i31"}, {"31", "+01 -i11 -21 +i32"},
    {"32", "+02 -i12 -22 +i33"}, {"33", "+03 -i13 -23 +i30"},
}};

inline constexpr std::array<TableEntry, 16> kTableA22A31{{
    {"00", "+00 +10 +22 +31"},   {"01", "+01 +11 +23 +32"},
    {"02", "+02 +12 +20 +33"},   {"03", "+03 +13 +21 +30"},
    {"10", "+00 +i10 -22 -i31"}, {"11", "+01 +i11 -23 -i32"},
    {"12", "+02 +i12 -20 -i33"}, {"13", "+03 +i13 -21 -i30"},
    {"20", "+00 -10 +22 -31"},   {"21", "+01 -11 +23 -32"},
    {"22", "+02 -12 +20 -33"},   {"23", "+03 -13 +21 -30"},
    {"30", "+00 -i10 -22 +i31"}, {"31", "+01 -i11 -23 +i32"},
    {"32", "+02 -i12 -20 +i33"}, {"33", "+03 -i13 -21 +i30"},
}};

inline constexpr std::array<TableEntry, 16> kTableFull{{
    {"00", "+00 +13 +22 +31"},   {"01", "+01 +10 +23 +32"},
    {"02", "+02 +11 +20 +33"},   {"03", "+03 +12 +21 +30"},
    {"10", "+00 +i13 -22 -i31"}, {"11", "+01 +i10 -23 -i32"},
    {"12", "+02 +i11 -20 -i33"}, {"13", "+03 +i12 -21 -i30"},
    {"20", "+00 -13 +22 -31"},   {"21", "+01 -10 +23 -32"},
    {"22", "+02 -11 +20 -33"},   {"23", "+03 -12 +21 -30"},
    {"30", "+00 -i13 -22 +i31"}, {"31", "+01 -i10 -23 +i32"},
    {"32", "+02 -i11 -20 +i33"}, {"33", "+03 -i12 -21 +i30"},
}};

inline GeneratorSpec spec_of(std::initializer_list<std::pair<int, int>> pairs) {
    GeneratorSpec spec;
    for (const auto &[h, k] : pairs) {
        spec.pairs.push_back(GateParams{h, k});
    }
    return spec;
}

inline const GeneratorSpec kSpecA31 = spec_of({{3, 1}});
inline const GeneratorSpec kSpecA22A31 = spec_of({{3, 1}, {2, 2}});
inline const GeneratorSpec kSpecFull = spec_of({{3, 1}, {2, 2}, {1, 3}});

// Output of the radix-4 generators on |00>, as written out in closed form.
inline QuditState partial_state_one_gate() {
    return half_ket("+00 +10 +20 +31");
}
inline QuditState partial_state_two_gates() {
    return half_ket("+00 +10 +22 +31");
}
inline QuditState full_state() { return half_ket("+00 +13 +22 +31"); }

/// Shift applied to the target when the control reads x.
inline std::vector<int> shift_by_control(int radix, const GeneratorSpec &spec) {
    std::vector<int> shift(static_cast<std::size_t>(radix), 0);
    for (const GateParams &p : spec.pairs) {
        shift[static_cast<std::size_t>(p.h)] =
            (shift[static_cast<std::size_t>(p.h)] + p.k) % radix;
    }
    return shift;
}

/// Closed-form generator transfer matrix:
///   T[(x, (b + shift(x)) mod r), (a, b)] = exp(2 pi i x a / r) / sqrt(r).
/// Built entry by entry; no compose, tensor or Chrestenson factory involved.
inline std::vector<Complex> generator_transfer_oracle(int radix,
                                                      const GeneratorSpec &spec) {
    const std::vector<int> shift = shift_by_control(radix, spec);
    const int n = radix * radix;
    std::vector<Complex> t(static_cast<std::size_t>(n * n));
    const double scale = 1.0 / std::sqrt(static_cast<double>(radix));
    for (int a = 0; a < radix; ++a) {
        for (int b = 0; b < radix; ++b) {
            for (int x = 0; x < radix; ++x) {
                const int y = (b + shift[static_cast<std::size_t>(x)]) % radix;
                const double angle =
                    2.0 * std::numbers::pi * ((x * a) % radix) / radix;
                t[static_cast<std::size_t>((x * radix + y) * n + a * radix + b)] =
                    std::polar(scale, angle);
            }
        }
    }
    return t;
}

/// Schmidt rank of a generator output predicted combinatorially: each control
/// row has one nonzero entry, in column (b + shift(x)) mod r, so the rank is
/// the number of distinct shifts.
inline int expected_generator_rank(int radix, const GeneratorSpec &spec) {
    const std::vector<int> shift = shift_by_control(radix, spec);
    return static_cast<int>(std::set<int>(shift.begin(), shift.end()).size());
}

/// Singular values through the eigenvalues of M M^dagger (the library uses a
/// direct SVD instead).
inline std::vector<double> schmidt_via_gram(const QuditState &s) {
    const int r = s.radix();
    Eigen::MatrixXcd m(r, r);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            m(i, j) = s[static_cast<std::size_t>(i * r + j)];
        }
    }
    const Eigen::MatrixXcd gram = m * m.adjoint();
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram);
    std::vector<double> out;
    for (int i = 0; i < r; ++i) {
        out.push_back(std::sqrt(std::max(0.0, solver.eigenvalues()(i))));
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

/// Quadratic-time distinct count, no hashing.
inline std::size_t pairwise_distinct(const std::vector<OperatorMatrix> &ms,
                                     double eps) {
    std::vector<const OperatorMatrix *> reps;
    for (const OperatorMatrix &m : ms) {
        bool seen = false;
        for (const OperatorMatrix *rep : reps) {
            if (operators_close(*rep, m, Tolerance(eps))) {
                seen = true;
                break;
            }
        }
        if (!seen) {
            reps.push_back(&m);
        }
    }
    return reps.size();
}

inline double max_entry_error(const OperatorMatrix &u,
                              const std::vector<Complex> &expected) {
    double worst = 0.0;
    const auto e = u.entries();
    for (std::size_t i = 0; i < e.size(); ++i) {
        worst = std::max(worst, std::abs(e[i] - expected[i]));
    }
    return worst;
}

} // namespace qudit::testing
