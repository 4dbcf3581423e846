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

#include "purecliff/harness.h"

#include <cmath>
#include <map>
#include <mutex>

namespace purecliff {

namespace {

const ExactEnumeration &raw_table(const StateSpec &state) {
    static std::mutex mu;
    static std::map<std::string, ExactEnumeration> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = state.name + "/" + state.tableau.render();
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, ExactEnumeration(raw_distribution(state))).first;
    }
    return it->second;
}

double argmin_raw(const ExactEnumeration &t) {
    const int steps = 3000;
    int best = steps;
    for (int k = steps; k >= 0; k--) {
        if (t.joint(k / (3.0 * steps)) < t.joint(best / (3.0 * steps))) {
            best = k;
        }
    }
    return std::min(1.0 / 3, (best + 1) / (3.0 * steps));
}

}  // namespace

double raw_fidelity(const StateSpec &state, double eps) {
    return raw_table(state).joint(eps);
}

double invert_input_fidelity(const StateSpec &state, double f_in) {
    const ExactEnumeration &t = raw_table(state);
    double f_min = t.joint(1.0 / 3);
    if (!(f_in > f_min && f_in <= 1)) {
        throw std::domain_error("input fidelity " + format_double(f_in) + " outside (" + format_double(f_min) +
                                ", 1] for " + state.name);
    }
    if (f_in == 1) {
        return 0;
    }
    // Not monotone for every state (GHZ3 has its minimum at 0.3), so bisect
    // on the decreasing part only. Past the minimum f < f(1/3) < f_in.
    double lo = 0;
    double hi = argmin_raw(t);
    while (hi - lo > 1e-13) {
        double mid = (lo + hi) / 2;
        if (t.joint(mid) > f_in) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return (lo + hi) / 2;
}

const char *x_axis_name(XAxis a) {
    return a == XAxis::Eps ? "eps" : "input_fidelity";
}

const char *engine_name(Engine e) {
    switch (e) {
        case Engine::MonteCarlo:
            return "mc";
        case Engine::Perturbative:
            return "perturbative";
        default:
            return "both";
    }
}

std::optional<XAxis> x_axis_from_name(const std::string &s) {
    if (s == "eps") {
        return XAxis::Eps;
    }
    if (s == "input_fidelity" || s == "f_in") {
        return XAxis::InputFidelity;
    }
    return std::nullopt;
}

std::optional<Engine> engine_from_name(const std::string &s) {
    if (s == "mc") {
        return Engine::MonteCarlo;
    }
    if (s == "perturbative") {
        return Engine::Perturbative;
    }
    if (s == "both") {
        return Engine::Both;
    }
    return std::nullopt;
}

std::string sweep_csv_header() {
    return mc_csv_header() + ",engine,x_axis,x";
}

namespace {

struct Point {
    size_t protocol;
    double x;
    NoiseModel model;
    uint64_t seed;
};

std::string tail(const SweepSpec &spec, const char *engine, double x) {
    return std::string(",") + engine + "," + x_axis_name(spec.x_axis) + "," + format_double(x);
}

// Perturbative rows reuse the Monte Carlo columns with the polynomial values
// and empty trial and interval fields.
std::string poly_row(const ProtocolSpec &p, const SweepSpec &spec, const Point &pt, double success,
                     double fidelity) {
    const NoiseModel &m = pt.model;
    return p.name + "," + format_double(m.eps) + "," + format_double(m.p_gate) + "," + format_double(m.p_meas) +
           ",," + std::to_string(pt.seed) + "," + format_double(success) + ",,," + format_double(fidelity) + ",," +
           tail(spec, "perturbative", pt.x);
}

}  // namespace

SweepResult run_sweep(const SweepSpec &spec) {
    std::vector<ProtocolSpec> protocols;
    for (const auto &name : spec.protocols) {
        protocols.push_back(builtin(name));
    }
    std::vector<Point> points;
    for (size_t i = 0; i < protocols.size(); i++) {
        for (double x : spec.x_values) {
            double eps =
                spec.x_axis == XAxis::Eps ? x : invert_input_fidelity(protocols[i].purified_state, x);
            for (double pg : spec.p_gate_values) {
                std::vector<double> pms = spec.p_meas_values.empty() ? std::vector<double>{pg} : spec.p_meas_values;
                for (double pm : pms) {
                    Point pt;
                    pt.protocol = i;
                    pt.x = x;
                    pt.model = NoiseModel{eps, pg, pm, spec.noisy_prep};
                    pt.model.check();
                    pt.seed = trial_seed(spec.seed, points.size());
                    points.push_back(pt);
                }
            }
        }
    }

    bool want_mc = spec.engine != Engine::Perturbative;
    bool want_poly = spec.engine != Engine::MonteCarlo;
    std::vector<ExpansionReport> expansions;
    if (want_poly) {
        for (const auto &p : protocols) {
            // every parameter symbolic; zero values drop out on evaluation
            expansions.push_back(expand(p, NoiseModel{1e-3, 1e-3, 1e-3, spec.noisy_prep}, spec.threads));
        }
    }

    SweepResult out;
    out.csv = sweep_csv_header() + "\n";
    // Points run one after another; each Monte Carlo run is parallel over
    // trials, so row order and values do not depend on the worker count.
    for (const Point &pt : points) {
        const ProtocolSpec &p = protocols[pt.protocol];
        std::optional<MonteCarloReport> mc;
        if (want_mc) {
            mc = run_mc(p, pt.model, spec.trials, pt.seed, spec.threads);
            out.csv += mc_csv_row(*mc) + tail(spec, "mc", pt.x) + "\n";
            out.rows++;
        }
        if (want_poly) {
            const auto &e = expansions[pt.protocol];
            const NoiseModel &m = pt.model;
            double s = e.success.eval(m.eps, m.p_gate, m.p_meas);
            double f = e.fidelity.eval(m.eps, m.p_gate, m.p_meas);
            out.csv += poly_row(p, spec, pt, s, f) + "\n";
            out.rows++;
            if (mc) {
                double total = m.eps + m.p_gate + m.p_meas;
                bool bad = std::abs(mc->success - s) > cross_validation_bound(s, mc->trials, total, spec.allowance);
                bad |= !mc->fidelity ||
                       std::abs(*mc->fidelity - f) > cross_validation_bound(f, mc->passes, total, spec.allowance);
                out.flagged |= bad;
            }
        }
    }
    return out;
}

}  // namespace purecliff
