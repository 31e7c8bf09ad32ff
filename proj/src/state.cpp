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

#include "qudit/state.hpp"

#include <cmath>
#include <limits>

namespace qudit {

namespace {

void check_radix(int radix) {
    if (radix < 2 || radix > kMaxRadix) {
        throw DomainError("radix must be in [2, " + std::to_string(kMaxRadix) +
                          "], got " + std::to_string(radix));
    }
}

void check_wires(int wires) {
    if (wires < 1) {
        throw DomainError("wire count must be >= 1, got " +
                          std::to_string(wires));
    }
}

char digit_char(int d) {
    return static_cast<char>(d < 10 ? '0' + d : 'a' + (d - 10));
}

} // namespace

std::size_t ipow(std::size_t base, std::size_t exponent) {
    std::size_t result = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
        if (result > std::numeric_limits<std::size_t>::max() / base) {
            throw DomainError("dimension overflow");
        }
        result *= base;
    }
    return result;
}

std::string DigitString::to_string() const {
    std::string out;
    out.reserve(digits.size());
    for (int d : digits) {
        out.push_back(digit_char(d));
    }
    return out;
}

DigitString DigitString::parse(std::string_view text, int radix) {
    check_radix(radix);
    if (text.empty()) {
        throw DomainError("empty digit string");
    }
    DigitString out;
    for (char c : text) {
        int d;
        if (c >= '0' && c <= '9') {
            d = c - '0';
        } else if (c >= 'a' && c <= 'z') {
            d = c - 'a' + 10;
        } else if (c >= 'A' && c <= 'Z') {
            d = c - 'A' + 10;
        } else {
            throw DomainError(std::string("invalid digit character '") + c +
                              "'");
        }
        if (d >= radix) {
            throw DomainError(std::string("digit '") + c +
                              "' out of range for radix " +
                              std::to_string(radix));
        }
        out.digits.push_back(d);
    }
    return out;
}

QuditState QuditState::from_amplitudes(int radix, int wires,
                                       std::vector<Complex> amplitudes,
                                       Tolerance tol) {
    check_radix(radix);
    check_wires(wires);
    const std::size_t expected =
        ipow(static_cast<std::size_t>(radix), static_cast<std::size_t>(wires));
    if (amplitudes.size() != expected) {
        throw DomainError("state length " + std::to_string(amplitudes.size()) +
                          " != radix^wires = " + std::to_string(expected));
    }
    double total = 0.0;
    for (const Complex &a : amplitudes) {
        if (!is_finite(a)) {
            throw DomainError("non-finite amplitude");
        }
        total += std::norm(a);
    }
    if (std::abs(total - 1.0) > tol.eps()) {
        throw DomainError("state is not normalized (sum |a|^2 = " +
                          std::to_string(total) + ")");
    }
    return QuditState(radix, wires, std::move(amplitudes));
}

double QuditState::norm_squared() const {
    double total = 0.0;
    for (const Complex &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

QuditState unchecked_state(int radix, int wires,
                           std::vector<Complex> amplitudes) {
    return QuditState(radix, wires, std::move(amplitudes));
}

std::size_t basis_index(int radix, const DigitString &digits) {
    std::size_t index = 0;
    for (int d : digits.digits) {
        if (d < 0 || d >= radix) {
            throw DomainError("digit " + std::to_string(d) +
                              " out of range for radix " +
                              std::to_string(radix));
        }
        index = index * static_cast<std::size_t>(radix) +
                static_cast<std::size_t>(d);
    }
    return index;
}

DigitString basis_digits(int radix, int wires, std::size_t index) {
    DigitString out;
    out.digits.assign(static_cast<std::size_t>(wires), 0);
    for (int w = wires - 1; w >= 0; --w) {
        out.digits[static_cast<std::size_t>(w)] =
            static_cast<int>(index % static_cast<std::size_t>(radix));
        index /= static_cast<std::size_t>(radix);
    }
    return out;
}

QuditState basis_state(int radix, int wires, const DigitString &digits) {
    check_radix(radix);
    check_wires(wires);
    if (digits.digits.size() != static_cast<std::size_t>(wires)) {
        throw DomainError("expected " + std::to_string(wires) +
                          " digits, got " +
                          std::to_string(digits.digits.size()));
    }
    const std::size_t index = basis_index(radix, digits);
    std::vector<Complex> amps(
        ipow(static_cast<std::size_t>(radix), static_cast<std::size_t>(wires)));
    amps[index] = 1.0;
    return QuditState::from_amplitudes(radix, wires, std::move(amps));
}

QuditState tensor_product(const QuditState &a, const QuditState &b) {
    if (a.radix() != b.radix()) {
        throw DomainError("radix mismatch in tensor product: " +
                          std::to_string(a.radix()) + " vs " +
                          std::to_string(b.radix()));
    }
    std::vector<Complex> amps;
    amps.reserve(a.dimension() * b.dimension());
    for (const Complex &x : a.amplitudes()) {
        for (const Complex &y : b.amplitudes()) {
            amps.push_back(x * y);
        }
    }
    return QuditState::from_amplitudes(a.radix(), a.wires() + b.wires(),
                                       std::move(amps));
}

std::vector<double> probabilities(const QuditState &s) {
    std::vector<double> out;
    out.reserve(s.dimension());
    for (const Complex &a : s.amplitudes()) {
        out.push_back(std::norm(a));
    }
    return out;
}

QuditState conditional_state(const QuditState &s, int wire, int outcome,
                             Tolerance tol) {
    if (s.wires() != 2) {
        throw DomainError("conditioning requires a two-qudit state");
    }
    if (wire != 0 && wire != 1) {
        throw DomainError("wire must be 0 or 1, got " + std::to_string(wire));
    }
    const int r = s.radix();
    if (outcome < 0 || outcome >= r) {
        throw DomainError("outcome " + std::to_string(outcome) +
                          " out of range for radix " + std::to_string(r));
    }
    const auto ur = static_cast<std::size_t>(r);
    const auto uo = static_cast<std::size_t>(outcome);
    std::vector<Complex> residual(ur);
    for (std::size_t other = 0; other < ur; ++other) {
        const std::size_t index =
            wire == 0 ? uo * ur + other : other * ur + uo;
        residual[other] = s[index];
    }
    double p = 0.0;
    for (const Complex &a : residual) {
        p += std::norm(a);
    }
    if (p < tol.eps()) {
        throw ZeroProbabilityError("outcome " + std::to_string(outcome) +
                                   " on wire " + std::to_string(wire) +
                                   " has zero probability");
    }
    const double scale = 1.0 / std::sqrt(p);
    for (Complex &a : residual) {
        a *= scale;
    }
    return QuditState::from_amplitudes(r, 1, std::move(residual));
}

bool states_equal(const QuditState &a, const QuditState &b, Tolerance tol) {
    if (a.radix() != b.radix() || a.wires() != b.wires()) {
        throw DomainError("cannot compare states of different shape");
    }
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        if (std::abs(a[i] - b[i]) > tol.eps()) {
            return false;
        }
    }
    return true;
}

} // namespace qudit
