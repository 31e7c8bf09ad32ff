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

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace qudit {

using Complex = std::complex<double>;

/// Largest radix whose digits can be rendered with 0-9a-z.
inline constexpr int kMaxRadix = 36;

/// Absolute comparison tolerance. States compare at 1e-9, operators at 1e-12.
class Tolerance {
  public:
    constexpr Tolerance() = default;
    explicit Tolerance(double eps) : eps_(eps) {
        if (!(eps > 0.0)) {
            throw std::invalid_argument("tolerance must be positive");
        }
    }

    static Tolerance state() { return Tolerance(1e-9); }
    static Tolerance unitary() { return Tolerance(1e-12); }

    constexpr double eps() const { return eps_; }

  private:
    double eps_ = 1e-9;
};

/// Invalid argument, out-of-range digit, shape or radix mismatch.
class DomainError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Conditioning on a measurement outcome that cannot occur.
class ZeroProbabilityError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Malformed JSON or ket input. Carries the offending gate index when known.
class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string &what, long gate_index = -1)
        : std::runtime_error(what), gate_index_(gate_index) {}

    long gate_index() const { return gate_index_; }

  private:
    long gate_index_;
};

inline bool is_finite(const Complex &z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// r^n with overflow guarded by the radix/wire limits of the callers.
std::size_t ipow(std::size_t base, std::size_t exponent);

} // namespace qudit
