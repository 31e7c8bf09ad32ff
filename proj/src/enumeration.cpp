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

#include "qudit/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "qudit/entanglement.hpp"

namespace qudit {

namespace {

void check_radix(int radix) {
    if (radix < 2 || radix > kMaxRadix) {
        throw DomainError("radix must be in [2, " + std::to_string(kMaxRadix) +
                          "], got " + std::to_string(radix));
    }
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw DomainError("count overflows 64 bits");
    }
    return out;
}

std::string describe(const GeneratorSpec &spec) {
    std::string out = "[";
    for (std::size_t i = 0; i < spec.pairs.size(); ++i) {
        if (i != 0) {
            out += ",";
        }
        out += "(" + std::to_string(spec.pairs[i].h) + "," +
               std::to_string(spec.pairs[i].k) + ")";
    }
    return out + "]";
}

// Entries rounded to a 1e-10 grid; candidates in a bucket are then compared
// entrywise within the dedup tolerance.
std::size_t quantized_hash(const OperatorMatrix &m) {
    std::size_t seed = m.dim();
    const auto mix = [&seed](long long v) {
        seed ^= std::hash<long long>{}(v) + 0x9e3779b97f4a7c15ULL +
                (seed << 6) + (seed >> 2);
    };
    for (const Complex &z : m.entries()) {
        mix(std::llround(z.real() * 1e10));
        mix(std::llround(z.imag() * 1e10));
    }
    return seed;
}

} // namespace

std::uint64_t formula_circuit_count(int radix) {
    if (radix < 2) {
        throw DomainError("radix must be >= 2, got " + std::to_string(radix));
    }
    std::uint64_t total = 1;
    for (std::uint64_t i = 2; i <= static_cast<std::uint64_t>(radix); ++i) {
        total = checked_mul(total, i * i - i);
    }
    return total;
}

std::uint64_t formula_unique_count(int radix) {
    if (radix < 2) {
        throw DomainError("radix must be >= 2, got " + std::to_string(radix));
    }
    std::uint64_t total = 1;
    for (std::uint64_t i = 2; i <= static_cast<std::uint64_t>(radix); ++i) {
        total = checked_mul(total, i);
    }
    return total;
}

std::vector<GeneratorSpec> enumerate_generator_sets(int radix) {
    check_radix(radix);
    std::vector<int> addends(static_cast<std::size_t>(radix - 1));
    std::iota(addends.begin(), addends.end(), 1);

    std::vector<GeneratorSpec> sets;
    for (int omitted = 0; omitted < radix; ++omitted) {
        std::vector<int> controls;
        for (int h = 0; h < radix; ++h) {
            if (h != omitted) {
                controls.push_back(h);
            }
        }
        std::vector<int> ks = addends;
        do {
            GeneratorSpec spec;
            for (std::size_t i = 0; i < controls.size(); ++i) {
                spec.pairs.push_back(GateParams{controls[i], ks[i]});
            }
            sets.push_back(std::move(spec));
        } while (std::next_permutation(ks.begin(), ks.end()));
    }
    std::sort(sets.begin(), sets.end());
    return sets;
}

std::vector<GeneratorSpec> enumerate_generator_specs_ordered(int radix) {
    std::vector<GeneratorSpec> ordered;
    for (const GeneratorSpec &set : enumerate_generator_sets(radix)) {
        GeneratorSpec current = set;
        do {
            ordered.push_back(current);
        } while (std::next_permutation(current.pairs.begin(),
                                       current.pairs.end()));
    }
    return ordered;
}

std::vector<Circuit> enumerate_circuit_forms(int radix) {
    std::vector<Circuit> forms;
    for (const GeneratorSpec &spec : enumerate_generator_specs_ordered(radix)) {
        forms.push_back(entanglement_generator(radix, spec));
    }
    return forms;
}

EnumerationReport verify_counts(int radix, Tolerance tol,
                                VerifyOptions options) {
    check_radix(radix);
    EnumerationReport report;
    report.radix = radix;
    report.formula_circuit_count = formula_circuit_count(radix);
    report.formula_unique_count = formula_unique_count(radix);
    if (radix > options.max_brute_force_radix) {
        return report;
    }
    report.brute_force = true;

    const std::vector<GeneratorSpec> specs =
        enumerate_generator_specs_ordered(radix);
    const auto dim = static_cast<std::size_t>(radix * radix);

    std::vector<OperatorMatrix> unique;
    std::unordered_map<std::size_t, std::vector<std::size_t>> buckets;
    bool all_maximal = true;

    for (const GeneratorSpec &spec : specs) {
        const Circuit circuit = entanglement_generator(radix, spec);
        OperatorMatrix t = transfer_matrix(circuit);

        std::vector<std::size_t> &bucket = buckets[quantized_hash(t)];
        const auto match =
            std::find_if(bucket.begin(), bucket.end(), [&](std::size_t u) {
                return operators_close(unique[u], t, options.dedup_tolerance);
            });
        if (match != bucket.end()) {
            // Same transfer within tolerance, so the same output states.
            ++report.orderings_per_transfer[*match];
            continue;
        }
        bucket.push_back(unique.size());
        report.orderings_per_transfer.push_back(1);
        unique.push_back(t);

        for (std::size_t input = 0; input < dim; ++input) {
            std::vector<Complex> column(dim);
            for (std::size_t i = 0; i < dim; ++i) {
                column[i] = t(i, input);
            }
            const QuditState out =
                unchecked_state(radix, 2, std::move(column));
            const Classification c = classify(out, tol);
            if (c.tag != EntanglementClass::MaximallyEntangled) {
                all_maximal = false;
                report.failures.push_back(VerificationFailure{
                    "non_maximal", spec,
                    "input |" + basis_digits(radix, 2, input).to_string() +
                        "> of " + describe(spec) + " gives " +
                        std::string(to_string(c.tag))});
            }
        }
    }

    report.circuit_form_count = specs.size();
    report.unique_transfer_count = unique.size();
    report.all_maximal = all_maximal;

    if (*report.circuit_form_count != report.formula_circuit_count) {
        report.failures.push_back(VerificationFailure{
            "circuit_count_mismatch", std::nullopt,
            "enumerated " + std::to_string(*report.circuit_form_count) +
                " circuit forms, formula gives " +
                std::to_string(report.formula_circuit_count)});
    }
    if (*report.unique_transfer_count != report.formula_unique_count) {
        report.failures.push_back(VerificationFailure{
            "unique_count_mismatch", std::nullopt,
            "found " + std::to_string(*report.unique_transfer_count) +
                " distinct transfer matrices, formula gives " +
                std::to_string(report.formula_unique_count)});
    }
    // Gates of one set commute, so each set's (r-1)! orderings collapse.
    std::uint64_t orderings = 1;
    for (std::uint64_t i = 2; i < static_cast<std::uint64_t>(radix); ++i) {
        orderings *= i;
    }
    for (std::size_t u = 0; u < report.orderings_per_transfer.size(); ++u) {
        if (report.orderings_per_transfer[u] != orderings) {
            report.failures.push_back(VerificationFailure{
                "ordering_multiplicity", std::nullopt,
                "transfer " + std::to_string(u) + " is shared by " +
                    std::to_string(report.orderings_per_transfer[u]) +
                    " orderings, expected " + std::to_string(orderings)});
        }
    }
    return report;
}

bool verify_commutativity(int radix) {
    check_radix(radix);
    std::vector<std::vector<OperatorMatrix>> gates(
        static_cast<std::size_t>(radix));
    for (int h = 0; h < radix; ++h) {
        for (int k = 1; k < radix; ++k) {
            gates[static_cast<std::size_t>(h)].push_back(
                controlled_mod_add(radix, GateParams{h, k}));
        }
    }
    for (std::size_t h1 = 0; h1 < gates.size(); ++h1) {
        for (std::size_t h2 = h1 + 1; h2 < gates.size(); ++h2) {
            for (const OperatorMatrix &a : gates[h1]) {
                for (const OperatorMatrix &b : gates[h2]) {
                    if (!(compose(a, b) == compose(b, a))) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

} // namespace qudit
