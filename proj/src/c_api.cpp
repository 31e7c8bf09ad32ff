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

#include "qudit/qudit.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "qudit/circuit.hpp"
#include "qudit/entanglement.hpp"
#include "qudit/enumeration.hpp"
#include "qudit/io.hpp"
#include "qudit/operators.hpp"
#include "qudit/state.hpp"

struct qd_state {
    qudit::QuditState value;
};

struct qd_operator {
    qudit::OperatorMatrix value;
};

struct qd_circuit {
    qudit::Circuit value;
};

namespace {

thread_local std::string g_last_error;
thread_local long g_last_gate_index = -1;

qd_status fail(qd_status status, const std::string &message,
               long gate_index = -1) {
    g_last_error = message;
    g_last_gate_index = gate_index;
    return status;
}

// Runs `body`, translating exceptions into status codes.
template <class F> qd_status guarded(F &&body) {
    try {
        g_last_error.clear();
        g_last_gate_index = -1;
        return body();
    } catch (const qudit::ParseError &e) {
        return fail(QD_ERR_PARSE, e.what(), e.gate_index());
    } catch (const qudit::ZeroProbabilityError &e) {
        return fail(QD_ERR_ZERO_PROBABILITY, e.what());
    } catch (const qudit::DomainError &e) {
        return fail(QD_ERR_DOMAIN, e.what());
    } catch (const std::bad_alloc &) {
        return fail(QD_ERR_INTERNAL, "out of memory");
    } catch (const std::exception &e) {
        return fail(QD_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(QD_ERR_INTERNAL, "unknown error");
    }
}

char *copy_string(const std::string &s) {
    auto *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

qd_status null_arg(const char *name) {
    return fail(QD_ERR_NULL_ARGUMENT, std::string(name) + " is null");
}

#define QD_REQUIRE(ptr)                                                        \
    do {                                                                       \
        if ((ptr) == nullptr) {                                                \
            return null_arg(#ptr);                                             \
        }                                                                      \
    } while (0)

qd_status emit_state(qudit::QuditState s, qd_state **out) {
    *out = new qd_state{std::move(s)};
    return QD_OK;
}

qd_status emit_operator(qudit::OperatorMatrix u, qd_operator **out) {
    *out = new qd_operator{std::move(u)};
    return QD_OK;
}

qd_status emit_string(const std::string &s, char **out) {
    *out = copy_string(s);
    return QD_OK;
}

} // namespace

extern "C" {

const char *qd_last_error(void) { return g_last_error.c_str(); }

long qd_last_error_gate_index(void) { return g_last_gate_index; }

const char *qd_status_name(qd_status status) {
    switch (status) {
    case QD_OK:
        return "ok";
    case QD_ERR_NULL_ARGUMENT:
        return "null argument";
    case QD_ERR_DOMAIN:
        return "domain error";
    case QD_ERR_ZERO_PROBABILITY:
        return "zero probability";
    case QD_ERR_PARSE:
        return "parse error";
    case QD_ERR_VERIFICATION:
        return "verification failure";
    case QD_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

void qd_string_free(char *s) { std::free(s); }

// ---- states ---------------------------------------------------------------

qd_status qd_state_basis(int radix, int wires, const int *digits,
                         size_t n_digits, qd_state **out) {
    QD_REQUIRE(out);
    if (n_digits != 0) {
        QD_REQUIRE(digits);
    }
    return guarded([&] {
        qudit::DigitString d{std::vector<int>(digits, digits + n_digits)};
        return emit_state(qudit::basis_state(radix, wires, d), out);
    });
}

qd_status qd_state_basis_from_string(int radix, const char *digits,
                                     qd_state **out) {
    QD_REQUIRE(digits);
    QD_REQUIRE(out);
    return guarded([&] {
        const qudit::DigitString d = qudit::DigitString::parse(digits, radix);
        return emit_state(
            qudit::basis_state(radix, static_cast<int>(d.digits.size()), d),
            out);
    });
}

qd_status qd_state_from_json(const char *json, qd_state **out) {
    QD_REQUIRE(json);
    QD_REQUIRE(out);
    return guarded(
        [&] { return emit_state(qudit::state_from_json(json), out); });
}

qd_status qd_state_to_json(const qd_state *s, char **out) {
    QD_REQUIRE(s);
    QD_REQUIRE(out);
    return guarded(
        [&] { return emit_string(qudit::state_to_json(s->value), out); });
}

qd_status qd_state_to_ket(const qd_state *s, char **out) {
    QD_REQUIRE(s);
    QD_REQUIRE(out);
    return guarded(
        [&] { return emit_string(qudit::format_ket(s->value), out); });
}

int qd_state_radix(const qd_state *s) { return s ? s->value.radix() : 0; }

int qd_state_wires(const qd_state *s) { return s ? s->value.wires() : 0; }

size_t qd_state_dimension(const qd_state *s) {
    return s ? s->value.dimension() : 0;
}

qd_status qd_state_amplitude(const qd_state *s, size_t index, double *re,
                             double *im) {
    QD_REQUIRE(s);
    QD_REQUIRE(re);
    QD_REQUIRE(im);
    if (index >= s->value.dimension()) {
        return fail(QD_ERR_DOMAIN, "amplitude index out of range");
    }
    *re = s->value[index].real();
    *im = s->value[index].imag();
    return QD_OK;
}

qd_status qd_state_tensor(const qd_state *a, const qd_state *b,
                          qd_state **out) {
    QD_REQUIRE(a);
    QD_REQUIRE(b);
    QD_REQUIRE(out);
    return guarded([&] {
        return emit_state(qudit::tensor_product(a->value, b->value), out);
    });
}

qd_status qd_state_conditional(const qd_state *s, int wire, int outcome,
                               qd_state **out) {
    QD_REQUIRE(s);
    QD_REQUIRE(out);
    return guarded([&] {
        return emit_state(qudit::conditional_state(s->value, wire, outcome),
                          out);
    });
}

qd_status qd_state_equal(const qd_state *a, const qd_state *b, double eps,
                         int *out) {
    QD_REQUIRE(a);
    QD_REQUIRE(b);
    QD_REQUIRE(out);
    return guarded([&] {
        *out = qudit::states_equal(a->value, b->value, qudit::Tolerance(eps))
                   ? 1
                   : 0;
        return QD_OK;
    });
}

void qd_state_free(qd_state *s) { delete s; }

// ---- operators ------------------------------------------------------------

qd_status qd_operator_chrestenson(int radix, qd_operator **out) {
    QD_REQUIRE(out);
    return guarded(
        [&] { return emit_operator(qudit::chrestenson(radix), out); });
}

qd_status qd_operator_mod_add(int radix, int k, qd_operator **out) {
    QD_REQUIRE(out);
    return guarded(
        [&] { return emit_operator(qudit::mod_add(radix, k), out); });
}

qd_status qd_operator_controlled_mod_add(int radix, int h, int k,
                                         qd_operator **out) {
    QD_REQUIRE(out);
    return guarded([&] {
        return emit_operator(
            qudit::controlled_mod_add(radix, qudit::GateParams{h, k}), out);
    });
}

qd_status qd_operator_compose(const qd_operator *a, const qd_operator *b,
                              qd_operator **out) {
    QD_REQUIRE(a);
    QD_REQUIRE(b);
    QD_REQUIRE(out);
    return guarded([&] {
        return emit_operator(qudit::compose(a->value, b->value), out);
    });
}

qd_status qd_operator_tensor(const qd_operator *a, const qd_operator *b,
                             qd_operator **out) {
    QD_REQUIRE(a);
    QD_REQUIRE(b);
    QD_REQUIRE(out);
    return guarded([&] {
        return emit_operator(qudit::matrix_tensor(a->value, b->value), out);
    });
}

qd_status qd_operator_apply(const qd_operator *u, const qd_state *s,
                            qd_state **out) {
    QD_REQUIRE(u);
    QD_REQUIRE(s);
    QD_REQUIRE(out);
    return guarded(
        [&] { return emit_state(qudit::apply(u->value, s->value), out); });
}

size_t qd_operator_dim(const qd_operator *u) { return u ? u->value.dim() : 0; }

qd_status qd_operator_entry(const qd_operator *u, size_t row, size_t col,
                            double *re, double *im) {
    QD_REQUIRE(u);
    QD_REQUIRE(re);
    QD_REQUIRE(im);
    if (row >= u->value.dim() || col >= u->value.dim()) {
        return fail(QD_ERR_DOMAIN, "operator index out of range");
    }
    *re = u->value(row, col).real();
    *im = u->value(row, col).imag();
    return QD_OK;
}

qd_status qd_operator_to_json(const qd_operator *u, char **out) {
    QD_REQUIRE(u);
    QD_REQUIRE(out);
    return guarded(
        [&] { return emit_string(qudit::operator_to_json(u->value), out); });
}

qd_status qd_operator_to_pretty(const qd_operator *u, char **out) {
    QD_REQUIRE(u);
    QD_REQUIRE(out);
    return guarded(
        [&] { return emit_string(qudit::format_operator(u->value), out); });
}

void qd_operator_free(qd_operator *u) { delete u; }

// ---- circuits -------------------------------------------------------------

qd_status qd_circuit_from_json(const char *json, qd_circuit **out) {
    QD_REQUIRE(json);
    QD_REQUIRE(out);
    return guarded([&] {
        *out = new qd_circuit{qudit::circuit_from_json(json)};
        return QD_OK;
    });
}

qd_status qd_circuit_to_json(const qd_circuit *c, char **out) {
    QD_REQUIRE(c);
    QD_REQUIRE(out);
    return guarded(
        [&] { return emit_string(qudit::circuit_to_json(c->value), out); });
}

qd_status qd_circuit_generator(int radix, const int *hs, const int *ks,
                               size_t n_pairs, qd_circuit **out) {
    QD_REQUIRE(out);
    if (n_pairs != 0) {
        QD_REQUIRE(hs);
        QD_REQUIRE(ks);
    }
    return guarded([&] {
        qudit::GeneratorSpec spec;
        for (size_t i = 0; i < n_pairs; ++i) {
            spec.pairs.push_back(qudit::GateParams{hs[i], ks[i]});
        }
        *out = new qd_circuit{qudit::entanglement_generator(radix, spec)};
        return QD_OK;
    });
}

int qd_circuit_radix(const qd_circuit *c) { return c ? c->value.radix() : 0; }

qd_status qd_circuit_transfer_matrix(const qd_circuit *c, qd_operator **out) {
    QD_REQUIRE(c);
    QD_REQUIRE(out);
    return guarded(
        [&] { return emit_operator(qudit::transfer_matrix(c->value), out); });
}

qd_status qd_circuit_run(const qd_circuit *c, const qd_state *input,
                         qd_state **out) {
    QD_REQUIRE(c);
    QD_REQUIRE(input);
    QD_REQUIRE(out);
    return guarded(
        [&] { return emit_state(qudit::run(c->value, input->value), out); });
}

qd_status qd_circuit_table(const qd_circuit *c, qd_table_format format,
                           char **out) {
    QD_REQUIRE(c);
    QD_REQUIRE(out);
    return guarded([&] {
        qudit::TableFormat f;
        switch (format) {
        case QD_TABLE_PRETTY:
            f = qudit::TableFormat::Pretty;
            break;
        case QD_TABLE_TSV:
            f = qudit::TableFormat::Tsv;
            break;
        case QD_TABLE_JSON:
            f = qudit::TableFormat::Json;
            break;
        default:
            return fail(QD_ERR_DOMAIN, "unknown table format");
        }
        return emit_string(qudit::format_table(c->value, f), out);
    });
}

void qd_circuit_free(qd_circuit *c) { delete c; }

// ---- analysis -------------------------------------------------------------

qd_status qd_classify(const qd_state *s, qd_entanglement_class *tag,
                      int *schmidt_rank) {
    QD_REQUIRE(s);
    QD_REQUIRE(tag);
    return guarded([&] {
        const qudit::Classification c = qudit::classify(s->value);
        *tag = static_cast<qd_entanglement_class>(c.tag);
        if (schmidt_rank != nullptr) {
            *schmidt_rank = c.schmidt.rank;
        }
        return QD_OK;
    });
}

qd_status qd_entanglement_report_json(const qd_state *s, char **out) {
    QD_REQUIRE(s);
    QD_REQUIRE(out);
    return guarded([&] {
        return emit_string(qudit::entanglement_report_json(s->value), out);
    });
}

qd_status qd_is_maximally_superposed(const qd_state *s, int *out) {
    QD_REQUIRE(s);
    QD_REQUIRE(out);
    return guarded([&] {
        *out = qudit::is_maximally_superposed(s->value) ? 1 : 0;
        return QD_OK;
    });
}

// ---- generator enumeration ------------------------------------------------

qd_status qd_formula_circuit_count(int radix, uint64_t *out) {
    QD_REQUIRE(out);
    return guarded([&] {
        *out = qudit::formula_circuit_count(radix);
        return QD_OK;
    });
}

qd_status qd_formula_unique_count(int radix, uint64_t *out) {
    QD_REQUIRE(out);
    return guarded([&] {
        *out = qudit::formula_unique_count(radix);
        return QD_OK;
    });
}

qd_status qd_generator_sets_json(int radix, char **out) {
    QD_REQUIRE(out);
    return guarded(
        [&] { return emit_string(qudit::generator_sets_json(radix), out); });
}

qd_status qd_verify_commutativity(int radix, int *out) {
    QD_REQUIRE(out);
    return guarded([&] {
        *out = qudit::verify_commutativity(radix) ? 1 : 0;
        return QD_OK;
    });
}

qd_status qd_verify_json(int radix, int max_brute_force_radix, char **out) {
    QD_REQUIRE(out);
    return guarded([&] {
        qudit::VerifyOptions options;
        options.max_brute_force_radix = max_brute_force_radix;
        const qudit::EnumerationReport report =
            qudit::verify_counts(radix, qudit::Tolerance::state(), options);
        std::optional<bool> commutative;
        if (report.brute_force) {
            commutative = qudit::verify_commutativity(radix);
        }
        *out = copy_string(
            qudit::enumeration_report_json(report, commutative));
        const bool ok = !report.brute_force ||
                        (report.passed() && commutative.value_or(false));
        if (!ok) {
            return fail(QD_ERR_VERIFICATION,
                        "radix-" + std::to_string(radix) +
                            " verification failed");
        }
        return QD_OK;
    });
}

} // extern "C"
