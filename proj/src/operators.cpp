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

#include "qudit/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace qudit {

namespace {

void check_radix(int radix) {
    if (radix < 2 || radix > kMaxRadix) {
        throw DomainError("radix must be in [2, " + std::to_string(kMaxRadix) +
                          "], got " + std::to_string(radix));
    }
}

} // namespace

OperatorMatrix unchecked_operator(std::size_t dim,
                                  std::vector<Complex> entries) {
    return OperatorMatrix(dim, std::move(entries));
}

OperatorMatrix OperatorMatrix::from_entries(std::size_t dim,
                                            std::vector<Complex> entries,
                                            Tolerance tol) {
    if (dim == 0) {
        throw DomainError("operator dimension must be positive");
    }
    if (entries.size() != dim * dim) {
        throw DomainError("operator needs " + std::to_string(dim * dim) +
                          " entries, got " + std::to_string(entries.size()));
    }
    if (!std::all_of(entries.begin(), entries.end(), is_finite)) {
        throw DomainError("non-finite operator entry");
    }
    OperatorMatrix m(dim, std::move(entries));
    if (!m.is_unitary(tol)) {
        throw DomainError("operator is not unitary (error " +
                          std::to_string(m.unitarity_error()) + ")");
    }
    return m;
}

OperatorMatrix OperatorMatrix::identity(std::size_t dim) {
    std::vector<Complex> e(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        e[i * dim + i] = 1.0;
    }
    return OperatorMatrix(dim, std::move(e));
}

double OperatorMatrix::unitarity_error() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            Complex acc = 0.0;
            for (std::size_t k = 0; k < dim_; ++k) {
                acc += std::conj((*this)(k, i)) * (*this)(k, j);
            }
            if (i == j) {
                acc -= 1.0;
            }
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

bool OperatorMatrix::is_permutation() const {
    std::vector<int> col_count(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i) {
        int row_count = 0;
        for (std::size_t j = 0; j < dim_; ++j) {
            const Complex &z = (*this)(i, j);
            if (z == Complex(1.0, 0.0)) {
                ++row_count;
                ++col_count[j];
            } else if (z != Complex(0.0, 0.0)) {
                return false;
            }
        }
        if (row_count != 1) {
            return false;
        }
    }
    return std::all_of(col_count.begin(), col_count.end(),
                       [](int c) { return c == 1; });
}

bool operators_close(const OperatorMatrix &a, const OperatorMatrix &b,
                     Tolerance tol) {
    if (a.dim() != b.dim()) {
        return false;
    }
    const auto ea = a.entries();
    const auto eb = b.entries();
    for (std::size_t i = 0; i < ea.size(); ++i) {
        if (std::abs(ea[i] - eb[i]) > tol.eps()) {
            return false;
        }
    }
    return true;
}

void GateParams::validate(int radix) const {
    if (h < 0 || h >= radix) {
        throw DomainError("control value h=" + std::to_string(h) +
                          " out of range for radix " + std::to_string(radix));
    }
    if (k < 0 || k >= radix) {
        throw DomainError("addend k=" + std::to_string(k) +
                          " out of range for radix " + std::to_string(radix));
    }
}

RootsOfUnity roots_of_unity(int radix) {
    check_radix(radix);
    RootsOfUnity roots{radix, {}};
    roots.values.reserve(static_cast<std::size_t>(radix));
    roots.values.emplace_back(1.0, 0.0);
    for (int k = 1; k < radix; ++k) {
        roots.values.push_back(
            std::polar(1.0, 2.0 * std::numbers::pi * k / radix));
    }
    return roots;
}

OperatorMatrix chrestenson(int radix) {
    check_radix(radix);
    const auto r = static_cast<std::size_t>(radix);
    // w_k^j = w_{(k*j) mod r}, evaluated from the closed form.
    const RootsOfUnity roots = roots_of_unity(radix);
    const double scale = 1.0 / std::sqrt(static_cast<double>(radix));
    std::vector<Complex> e(r * r);
    for (std::size_t k = 0; k < r; ++k) {
        for (std::size_t j = 0; j < r; ++j) {
            e[k * r + j] = roots.values[(k * j) % r] * scale;
        }
    }
    return unchecked_operator(r, std::move(e));
}

OperatorMatrix mod_add(int radix, int k) {
    check_radix(radix);
    if (k < 0 || k >= radix) {
        throw DomainError("addend k=" + std::to_string(k) +
                          " out of range for radix " + std::to_string(radix));
    }
    const auto r = static_cast<std::size_t>(radix);
    std::vector<Complex> e(r * r);
    for (std::size_t x = 0; x < r; ++x) {
        e[((x + static_cast<std::size_t>(k)) % r) * r + x] = 1.0;
    }
    return unchecked_operator(r, std::move(e));
}

OperatorMatrix controlled_mod_add(int radix, GateParams params) {
    check_radix(radix);
    params.validate(radix);
    const auto r = static_cast<std::size_t>(radix);
    const std::size_t n = r * r;
    const auto h = static_cast<std::size_t>(params.h);
    const auto k = static_cast<std::size_t>(params.k);
    std::vector<Complex> e(n * n);
    for (std::size_t control = 0; control < r; ++control) {
        for (std::size_t target = 0; target < r; ++target) {
            const std::size_t shifted =
                control == h ? (target + k) % r : target;
            e[(control * r + shifted) * n + control * r + target] = 1.0;
        }
    }
    return unchecked_operator(n, std::move(e));
}

OperatorMatrix compose(const OperatorMatrix &a, const OperatorMatrix &b) {
    if (a.dim() != b.dim()) {
        throw DomainError("cannot compose operators of dimension " +
                          std::to_string(a.dim()) + " and " +
                          std::to_string(b.dim()));
    }
    const std::size_t n = a.dim();
    std::vector<Complex> e(n * n);
    // Zero entries of `a` are skipped; permutation gates compose in O(n^2).
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0, 0.0)) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                e[i * n + j] += aik * b(k, j);
            }
        }
    }
    return unchecked_operator(n, std::move(e));
}

OperatorMatrix matrix_tensor(const OperatorMatrix &a, const OperatorMatrix &b) {
    const std::size_t na = a.dim();
    const std::size_t nb = b.dim();
    const std::size_t n = na * nb;
    std::vector<Complex> e(n * n);
    for (std::size_t ia = 0; ia < na; ++ia) {
        for (std::size_t ja = 0; ja < na; ++ja) {
            const Complex x = a(ia, ja);
            for (std::size_t ib = 0; ib < nb; ++ib) {
                for (std::size_t jb = 0; jb < nb; ++jb) {
                    e[(ia * nb + ib) * n + ja * nb + jb] = x * b(ib, jb);
                }
            }
        }
    }
    return unchecked_operator(n, std::move(e));
}

QuditState apply(const OperatorMatrix &u, const QuditState &s) {
    if (u.dim() != s.dimension()) {
        throw DomainError("operator dimension " + std::to_string(u.dim()) +
                          " does not match state dimension " +
                          std::to_string(s.dimension()));
    }
    const std::size_t n = u.dim();
    std::vector<Complex> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        Complex acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            acc += u(i, j) * s[j];
        }
        out[i] = acc;
    }
    return unchecked_state(s.radix(), s.wires(), std::move(out));
}

} // namespace qudit
