// Copyright 2026 The purecliff Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "purecliff/circuit_io.h"
#include "purecliff/harness.h"

using namespace purecliff;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kIo = 2, kFlagged = 3 };

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string protocol;
    std::string in;
    std::string out;
    std::optional<double> eps;
    std::optional<double> f_in;
    double p_gate = 0;
    double p_meas = 0;
    bool noisy_prep = false;
    uint64_t trials = 100000;
    uint64_t seed = 0;
    int threads = 0;
    std::string engine = "mc";
    std::string vars = "eps";
    std::string format = "text";
    std::vector<double> check_eps;
    double allowance = 50;
    // sweep
    std::vector<std::string> protocols;
    std::string x_axis = "eps";
    std::vector<double> xs;
    std::vector<double> p_gates{0.0};
    std::vector<double> p_meass;
};

std::string read_file(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw IoError("cannot read " + path);
    }
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

void emit(const Options &o, const std::string &text) {
    if (o.out.empty() || o.out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!(f << text)) {
        throw IoError("cannot write " + o.out);
    }
}

// (name, circuit) from --protocol or --in.
std::pair<std::string, Circuit> load(const Options &o) {
    if (!o.in.empty()) {
        return {o.in, deserialize(read_file(o.in))};
    }
    if (o.protocol.empty()) {
        throw CatalogError("one of --protocol or --in is required");
    }
    return {o.protocol, builtin(o.protocol).circuit};
}

NoiseModel model_for(const Options &o) {
    NoiseModel m;
    if (o.eps && o.f_in) {
        throw std::invalid_argument("--eps and --f-in are exclusive");
    }
    if (o.f_in) {
        if (o.protocol.empty()) {
            throw std::invalid_argument("--f-in needs --protocol");
        }
        m.eps = invert_input_fidelity(builtin(o.protocol).purified_state, *o.f_in);
    } else {
        m.eps = o.eps.value_or(0);
    }
    m.p_gate = o.p_gate;
    m.p_meas = o.p_meas;
    m.noisy_prep = o.noisy_prep;
    m.check();
    return m;
}

int cmd_simulate(const Options &o) {
    auto [name, circuit] = load(o);
    MonteCarloReport r = run_mc(name, circuit, model_for(o), o.trials, o.seed, o.threads);
    emit(o, mc_csv_header() + "\n" + mc_csv_row(r) + "\n");
    return kOk;
}

int cmd_expand(const Options &o) {
    auto [name, circuit] = load(o);
    NoiseModel symbolic;
    symbolic.noisy_prep = o.noisy_prep;
    std::stringstream vs(o.vars);
    for (std::string v; std::getline(vs, v, ',');) {
        if (v == "eps") {
            symbolic.eps = 1e-3;
        } else if (v == "p_gate") {
            symbolic.p_gate = 1e-3;
        } else if (v == "p_meas") {
            symbolic.p_meas = 1e-3;
        } else {
            throw std::invalid_argument("unknown variable " + v);
        }
    }
    ExpansionReport rep = expand(name, circuit, symbolic, o.threads);
    std::string text;
    if (o.format == "csv") {
        text = ExpansionReport::csv_header() + "\n" + rep.csv_rows();
    } else {
        text = rep.text() + "branches = " + std::to_string(rep.branch_count) +
               "\ndetected = " + std::to_string(rep.count(FaultTag::Detected)) +
               "\nundetected_harmless = " + std::to_string(rep.count(FaultTag::UndetectedHarmless)) +
               "\nundetected_harmful = " + std::to_string(rep.count(FaultTag::UndetectedHarmful)) + "\n";
    }
    bool flagged = false;
    if (!o.check_eps.empty()) {
        if (o.protocol.empty()) {
            throw std::invalid_argument("--check-eps needs --protocol");
        }
        NoiseModel base{0, o.p_gate, o.p_meas, o.noisy_prep};
        auto rows = cross_validate(builtin(o.protocol), base, o.check_eps, o.trials, o.seed, o.allowance, o.threads);
        text += "eps,mc_success,poly_success,bound_success,mc_fidelity,poly_fidelity,bound_fidelity,flagged\n";
        for (const auto &r : rows) {
            text += format_double(r.eps) + "," + format_double(r.mc_success) + "," + format_double(r.poly_success) +
                    "," + format_double(r.bound_success) + "," + format_double(r.mc_fidelity) + "," +
                    format_double(r.poly_fidelity) + "," + format_double(r.bound_fidelity) + "," +
                    (r.flagged ? "1" : "0") + "\n";
            flagged |= r.flagged;
        }
    }
    emit(o, text);
    return flagged ? kFlagged : kOk;
}

int cmd_sweep(const Options &o) {
    SweepSpec spec;
    spec.protocols = o.protocols;
    auto axis = x_axis_from_name(o.x_axis);
    auto engine = engine_from_name(o.engine);
    if (!axis || !engine) {
        throw std::invalid_argument("bad --x-axis or --engine");
    }
    spec.x_axis = *axis;
    spec.engine = *engine;
    spec.x_values = o.xs;
    spec.p_gate_values = o.p_gates;
    spec.p_meas_values = o.p_meass;
    spec.trials = o.trials;
    spec.seed = o.seed;
    spec.noisy_prep = o.noisy_prep;
    spec.threads = o.threads;
    spec.allowance = o.allowance;
    SweepResult r = run_sweep(spec);
    emit(o, r.csv);
    return r.flagged ? kFlagged : kOk;
}

int cmd_export(const Options &o) {
    emit(o, serialize(builtin(o.protocol).circuit));
    return kOk;
}

int cmd_import(const Options &o) {
    Circuit c = deserialize(read_file(o.in));
    auto diag = validate(c);
    for (const auto &d : diag) {
        std::cerr << o.in << ": " << d << "\n";
    }
    if (!diag.empty()) {
        return kInvalid;
    }
    if (!o.out.empty()) {
        emit(o, serialize(c));
    } else {
        std::cout << o.in << ": ok, " << c.n_qubits() << " qubits, " << c.ops.size() << " ops\n";
    }
    return kOk;
}

int cmd_validate(const Options &o) {
    auto [name, circuit] = load(o);
    auto diag = validate(circuit);
    for (const auto &d : diag) {
        std::cout << name << ": " << d << "\n";
    }
    if (diag.empty()) {
        std::cout << name << ": ok\n";
    }
    return diag.empty() ? kOk : kInvalid;
}

int cmd_list() {
    for (const auto &n : builtin_names()) {
        ProtocolSpec p = builtin(n);
        std::cout << n << "\t" << p.purified_state.name;
        for (const auto &s : p.sacrificial_states) {
            std::cout << " " << s.name;
        }
        std::cout << "\n";
    }
    return kOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Simulate entanglement purification circuits with stabilizer tableaux."};
    app.require_subcommand(1);
    Options o;

    auto add_noise = [&](CLI::App *c) {
        c->add_option("--eps", o.eps, "per-Pauli network error probability");
        c->add_option("--f-in", o.f_in, "raw input fidelity, converted to eps");
        c->add_option("--p-gate", o.p_gate, "gate depolarization probability");
        c->add_option("--p-meas", o.p_meas, "measurement flip probability");
        c->add_flag("--noisy-prep", o.noisy_prep, "apply gate noise to resource preparation gates");
    };
    auto add_run = [&](CLI::App *c) {
        c->add_option("--trials", o.trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
        c->add_option("--seed", o.seed, "seed");
        c->add_option("--threads", o.threads, "workers (0: PURECLIFF_THREADS or all cores)");
    };

    auto *sim = app.add_subcommand("simulate", "single Monte Carlo point, CSV");
    sim->add_option("--protocol", o.protocol);
    sim->add_option("--in", o.in, "circuit file instead of a builtin");
    sim->add_option("--out", o.out);
    add_noise(sim);
    add_run(sim);

    auto *exp = app.add_subcommand("expand", "first-order polynomials");
    exp->add_option("--protocol", o.protocol);
    exp->add_option("--in", o.in);
    exp->add_option("--out", o.out);
    exp->add_option("--vars", o.vars, "comma list of eps, p_gate, p_meas");
    exp->add_option("--format", o.format)->check(CLI::IsMember({"text", "csv"}));
    exp->add_option("--check-eps", o.check_eps, "cross-check against Monte Carlo at these eps values");
    exp->add_option("--allowance", o.allowance, "second-order allowance C");
    exp->add_option("--p-gate", o.p_gate);
    exp->add_option("--p-meas", o.p_meas);
    exp->add_flag("--noisy-prep", o.noisy_prep);
    add_run(exp);

    auto *sw = app.add_subcommand("sweep", "parameter sweep, CSV");
    sw->add_option("--protocol", o.protocols, "protocol names")->required()->delimiter(',');
    sw->add_option("--x-axis", o.x_axis)->check(CLI::IsMember({"eps", "input_fidelity"}));
    sw->add_option("--x", o.xs, "x values")->delimiter(',');
    sw->add_option("--p-gate", o.p_gates)->delimiter(',');
    sw->add_option("--p-meas", o.p_meass, "default: equal to p_gate")->delimiter(',');
    sw->add_option("--engine", o.engine)->check(CLI::IsMember({"mc", "perturbative", "both"}));
    sw->add_option("--allowance", o.allowance);
    sw->add_option("--out", o.out);
    sw->add_flag("--noisy-prep", o.noisy_prep);
    add_run(sw);

    auto *ex = app.add_subcommand("export-circuit", "write a builtin in the circuit file format");
    ex->add_option("--protocol", o.protocol)->required();
    ex->add_option("--out", o.out);

    auto *im = app.add_subcommand("import-circuit", "parse and validate a circuit file");
    im->add_option("--in", o.in)->required();
    im->add_option("--out", o.out, "re-serialize here");

    auto *va = app.add_subcommand("validate", "structural and noiseless checks");
    va->add_option("--protocol", o.protocol);
    va->add_option("--in", o.in);

    auto *ls = app.add_subcommand("list-protocols", "builtin protocol names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInvalid;
    }

    try {
        if (*sim) return cmd_simulate(o);
        if (*exp) return cmd_expand(o);
        if (*sw) return cmd_sweep(o);
        if (*ex) return cmd_export(o);
        if (*im) return cmd_import(o);
        if (*va) return cmd_validate(o);
        if (*ls) return cmd_list();
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kIo;
    } catch (const IoError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
    return kInvalid;
}
