/*
 * Copyright 2026 The Qudit Entanglement Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the qudit simulator.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a qd_status; on
 * failure the out-parameters are left untouched and qd_last_error() describes
 * the problem (thread-local, valid until the next call on the same thread).
 * Strings returned through char** are heap allocated; release them with
 * qd_string_free.
 */

#ifndef QUDIT_QUDIT_H
#define QUDIT_QUDIT_H

#include <stddef.h>
#include <stdint.h>

#if defined _WIN32 || defined __CYGWIN__
#ifdef QUDIT_BUILDING_LIBRARY
#define QD_API __declspec(dllexport)
#else
#define QD_API __declspec(dllimport)
#endif
#else
#define QD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qd_status {
    QD_OK = 0,
    QD_ERR_NULL_ARGUMENT = 1,
    QD_ERR_DOMAIN = 2,
    QD_ERR_ZERO_PROBABILITY = 3,
    QD_ERR_PARSE = 4,
    QD_ERR_VERIFICATION = 5,
    QD_ERR_INTERNAL = 99
} qd_status;

typedef enum qd_table_format {
    QD_TABLE_PRETTY = 0,
    QD_TABLE_TSV = 1,
    QD_TABLE_JSON = 2
} qd_table_format;

typedef enum qd_entanglement_class {
    QD_PRODUCT_STATE = 0,
    QD_PARTIALLY_ENTANGLED = 1,
    QD_MAXIMALLY_ENTANGLED = 2,
    QD_NON_MAXIMALLY_ENTANGLED = 3
} qd_entanglement_class;

typedef struct qd_state qd_state;
typedef struct qd_operator qd_operator;
typedef struct qd_circuit qd_circuit;

QD_API const char *qd_last_error(void);
QD_API const char *qd_status_name(qd_status status);
/* Gate index of the last QD_ERR_PARSE from a circuit, or -1. */
QD_API long qd_last_error_gate_index(void);
QD_API void qd_string_free(char *s);

/* ---- states ------------------------------------------------------------ */

QD_API qd_status qd_state_basis(int radix, int wires, const int *digits,
                                size_t n_digits, qd_state **out);
/* Digits given as text, 0-9a-z. */
QD_API qd_status qd_state_basis_from_string(int radix, const char *digits,
                                            qd_state **out);
QD_API qd_status qd_state_from_json(const char *json, qd_state **out);
QD_API qd_status qd_state_to_json(const qd_state *s, char **out);
QD_API qd_status qd_state_to_ket(const qd_state *s, char **out);
QD_API int qd_state_radix(const qd_state *s);
QD_API int qd_state_wires(const qd_state *s);
QD_API size_t qd_state_dimension(const qd_state *s);
QD_API qd_status qd_state_amplitude(const qd_state *s, size_t index,
                                    double *re, double *im);
QD_API qd_status qd_state_tensor(const qd_state *a, const qd_state *b,
                                 qd_state **out);
QD_API qd_status qd_state_conditional(const qd_state *s, int wire, int outcome,
                                      qd_state **out);
QD_API qd_status qd_state_equal(const qd_state *a, const qd_state *b,
                                double eps, int *out);
QD_API void qd_state_free(qd_state *s);

/* ---- operators --------------------------------------------------------- */

QD_API qd_status qd_operator_chrestenson(int radix, qd_operator **out);
QD_API qd_status qd_operator_mod_add(int radix, int k, qd_operator **out);
QD_API qd_status qd_operator_controlled_mod_add(int radix, int h, int k,
                                                qd_operator **out);
QD_API qd_status qd_operator_compose(const qd_operator *a, const qd_operator *b,
                                     qd_operator **out);
QD_API qd_status qd_operator_tensor(const qd_operator *a, const qd_operator *b,
                                    qd_operator **out);
QD_API qd_status qd_operator_apply(const qd_operator *u, const qd_state *s,
                                   qd_state **out);
QD_API size_t qd_operator_dim(const qd_operator *u);
QD_API qd_status qd_operator_entry(const qd_operator *u, size_t row,
                                   size_t col, double *re, double *im);
QD_API qd_status qd_operator_to_json(const qd_operator *u, char **out);
QD_API qd_status qd_operator_to_pretty(const qd_operator *u, char **out);
QD_API void qd_operator_free(qd_operator *u);

/* ---- circuits ---------------------------------------------------------- */

QD_API qd_status qd_circuit_from_json(const char *json, qd_circuit **out);
QD_API qd_status qd_circuit_to_json(const qd_circuit *c, char **out);
/* Chrestenson on wire 0 followed by A_{hs[i], ks[i]} in order. */
QD_API qd_status qd_circuit_generator(int radix, const int *hs, const int *ks,
                                      size_t n_pairs, qd_circuit **out);
QD_API int qd_circuit_radix(const qd_circuit *c);
QD_API qd_status qd_circuit_transfer_matrix(const qd_circuit *c,
                                            qd_operator **out);
QD_API qd_status qd_circuit_run(const qd_circuit *c, const qd_state *input,
                                qd_state **out);
QD_API qd_status qd_circuit_table(const qd_circuit *c, qd_table_format format,
                                  char **out);
QD_API void qd_circuit_free(qd_circuit *c);

/* ---- analysis ---------------------------------------------------------- */

QD_API qd_status qd_classify(const qd_state *s, qd_entanglement_class *tag,
                             int *schmidt_rank);
QD_API qd_status qd_entanglement_report_json(const qd_state *s, char **out);
QD_API qd_status qd_is_maximally_superposed(const qd_state *s, int *out);

/* ---- generator enumeration --------------------------------------------- */

QD_API qd_status qd_formula_circuit_count(int radix, uint64_t *out);
QD_API qd_status qd_formula_unique_count(int radix, uint64_t *out);
QD_API qd_status qd_generator_sets_json(int radix, char **out);
QD_API qd_status qd_verify_commutativity(int radix, int *out);
/*
 * Runs the brute-force count and maximality checks plus the commutativity
 * check when radix <= max_brute_force_radix. *out receives the report JSON in
 * every case except argument errors; the status is QD_ERR_VERIFICATION when a
 * check failed.
 */
QD_API qd_status qd_verify_json(int radix, int max_brute_force_radix,
                                char **out);

#ifdef __cplusplus
}
#endif

#endif /* QUDIT_QUDIT_H */
