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

// Command-line front end. Talks to the simulator only through the C API.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qudit/qudit.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

struct UsageError {
    std::string message;
};

struct Deleter {
    void operator()(qd_state *s) const { qd_state_free(s); }
    void operator()(qd_operator *u) const { qd_operator_free(u); }
    void operator()(qd_circuit *c) const { qd_circuit_free(c); }
    void operator()(char *s) const { qd_string_free(s); }
};

template <class T> using Owned = std::unique_ptr<T, Deleter>;

void check(qd_status status, const std::string &context) {
    if (status == QD_OK) {
        return;
    }
    std::string message = context + ": " + qd_last_error();
    if (status == QD_ERR_PARSE && qd_last_error_gate_index() >= 0) {
        message += " (gate index " + std::to_string(qd_last_error_gate_index()) +
                   ")";
    }
    throw UsageError{message};
}

std::string take(char *raw) {
    Owned<char> owned(raw);
    return std::string(owned.get());
}

std::string read_circuit_text(const std::string &path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    }
    std::ifstream in(path);
    if (!in) {
        throw UsageError{"--circuit: cannot open '" + path + "'"};
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Owned<qd_circuit> load_circuit(const std::string &path) {
    const std::string text = read_circuit_text(path);
    qd_circuit *raw = nullptr;
    check(qd_circuit_from_json(text.c_str(), &raw), "--circuit " + path);
    return Owned<qd_circuit>(raw);
}

Owned<qd_state> run_input(const qd_circuit *circuit, const std::string &digits) {
    qd_state *input = nullptr;
    check(qd_state_basis_from_string(qd_circuit_radix(circuit), digits.c_str(),
                                     &input),
          "--input");
    Owned<qd_state> owned_input(input);
    qd_state *output = nullptr;
    check(qd_circuit_run(circuit, input, &output), "--input");
    return Owned<qd_state>(output);
}

void require_range(const char *flag, const std::optional<int> &value,
                   const char *kind, int lo, int radix) {
    if (!value) {
        throw UsageError{std::string(flag) + " is required for " + kind};
    }
    if (*value < lo || *value >= radix) {
        throw UsageError{std::string(flag) + ": " + std::to_string(*value) +
                         " out of range [" + std::to_string(lo) + ", " +
                         std::to_string(radix - 1) + "] for radix " +
                         std::to_string(radix)};
    }
}

int cmd_gate(const std::string &kind, int radix, const std::optional<int> &h,
             const std::optional<int> &k, const std::string &format) {
    qd_operator *raw = nullptr;
    if (kind == "chrestenson") {
        check(qd_operator_chrestenson(radix, &raw), "gate");
    } else if (kind == "modadd") {
        require_range("--k", k, "modadd", 0, radix);
        check(qd_operator_mod_add(radix, *k, &raw), "gate");
    } else {
        require_range("--h", h, "cmodadd", 0, radix);
        require_range("--k", k, "cmodadd", 0, radix);
        check(qd_operator_controlled_mod_add(radix, *h, *k, &raw), "gate");
    }
    Owned<qd_operator> op(raw);
    char *text = nullptr;
    if (format == "json") {
        check(qd_operator_to_json(op.get(), &text), "gate");
        std::cout << take(text) << '\n';
    } else {
        check(qd_operator_to_pretty(op.get(), &text), "gate");
        std::cout << take(text);
    }
    return kExitOk;
}

int cmd_run(const std::string &circuit_path, const std::string &input,
            const std::string &format) {
    const Owned<qd_circuit> circuit = load_circuit(circuit_path);
    const Owned<qd_state> out = run_input(circuit.get(), input);
    char *text = nullptr;
    if (format == "json") {
        check(qd_state_to_json(out.get(), &text), "run");
    } else {
        check(qd_state_to_ket(out.get(), &text), "run");
    }
    std::cout << take(text) << '\n';
    return kExitOk;
}

int cmd_table(const std::string &circuit_path, const std::string &format) {
    const Owned<qd_circuit> circuit = load_circuit(circuit_path);
    qd_table_format f = QD_TABLE_PRETTY;
    if (format == "tsv") {
        f = QD_TABLE_TSV;
    } else if (format == "json") {
        f = QD_TABLE_JSON;
    }
    char *text = nullptr;
    check(qd_circuit_table(circuit.get(), f, &text), "table");
    std::cout << take(text);
    return kExitOk;
}

int cmd_classify(const std::string &circuit_path, const std::string &input) {
    const Owned<qd_circuit> circuit = load_circuit(circuit_path);
    const Owned<qd_state> out = run_input(circuit.get(), input);
    char *text = nullptr;
    check(qd_entanglement_report_json(out.get(), &text), "classify");
    std::cout << take(text) << '\n';
    return kExitOk;
}

int cmd_enumerate(int radix) {
    char *text = nullptr;
    check(qd_generator_sets_json(radix, &text), "enumerate");
    std::cout << take(text) << '\n';
    return kExitOk;
}

int cmd_verify(int radix, int max_radix) {
    char *text = nullptr;
    const qd_status status = qd_verify_json(radix, max_radix, &text);
    if (status != QD_OK && status != QD_ERR_VERIFICATION) {
        check(status, "verify");
    }
    std::cout << take(text) << '\n';
    if (status == QD_ERR_VERIFICATION) {
        std::cerr << "verify: " << qd_last_error() << '\n';
        return kExitVerification;
    }
    if (radix > max_radix) {
        std::cerr << "verify: radix " << radix
                  << " exceeds the brute-force limit " << max_radix
                  << "; only the formulas were evaluated\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Radix-r qudit entanglement generator simulator"};
    app.require_subcommand(1);

    int radix = 4;
    std::optional<int> h;
    std::optional<int> k;
    std::string circuit_path;
    std::string input;
    std::string format = "pretty";
    std::string gate_kind;
    int max_radix = 6;

    const auto radix_range = CLI::Range(2, 36);
    const auto add_radix = [&](CLI::App *cmd, bool required) {
        auto *opt = cmd->add_option("-r,--radix", radix, "Radix r in [2, 36]")
                        ->check(radix_range);
        if (required) {
            opt->required();
        }
    };

    auto *gate = app.add_subcommand("gate", "Print a gate matrix");
    // --h is the control value, so help is long-form only here.
    gate->set_help_flag("--help", "Print this help message and exit");
    gate->add_option("kind", gate_kind, "chrestenson | modadd | cmodadd")
        ->required()
        ->check(CLI::IsMember({"chrestenson", "modadd", "cmodadd"}));
    add_radix(gate, true);
    gate->add_option("--h", h, "Control value");
    gate->add_option("--k", k, "Addend");
    gate->add_option("--format", format, "json | pretty")
        ->check(CLI::IsMember({"json", "pretty"}));

    auto *run = app.add_subcommand("run", "Evolve a basis input through a circuit");
    run->add_option("--circuit", circuit_path, "Circuit JSON file, - for stdin")
        ->required();
    run->add_option("--input", input, "Input digits, e.g. 00")->required();
    run->add_option("--format", format, "json | pretty")
        ->check(CLI::IsMember({"json", "pretty"}));

    auto *table = app.add_subcommand("table", "Outputs for every basis input");
    table->add_option("--circuit", circuit_path, "Circuit JSON file, - for stdin")
        ->required();
    table->add_option("--format", format, "json | tsv | pretty")
        ->check(CLI::IsMember({"json", "tsv", "pretty"}));

    auto *classify =
        app.add_subcommand("classify", "Entanglement report for one output");
    classify
        ->add_option("--circuit", circuit_path, "Circuit JSON file, - for stdin")
        ->required();
    classify->add_option("--input", input, "Input digits, e.g. 00")->required();

    auto *enumerate =
        app.add_subcommand("enumerate", "List all full entanglement generators");
    add_radix(enumerate, true);

    auto *verify = app.add_subcommand(
        "verify", "Brute-force check of the generator counting formulas");
    add_radix(verify, true);
    verify
        ->add_option("--max-radix-override", max_radix,
                     "Largest radix to brute force (default 6)")
        ->check(CLI::Range(2, 36));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*gate) {
            return cmd_gate(gate_kind, radix, h, k, format);
        }
        if (*run) {
            return cmd_run(circuit_path, input, format);
        }
        if (*table) {
            return cmd_table(circuit_path, format);
        }
        if (*classify) {
            return cmd_classify(circuit_path, input);
        }
        if (*enumerate) {
            return cmd_enumerate(radix);
        }
        return cmd_verify(radix, max_radix);
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.message << '\n';
        return kExitUsage;
    }
}
