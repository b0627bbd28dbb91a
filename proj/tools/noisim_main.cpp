// Copyright 2026 The noisim Authors
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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "noisim/circuit.hpp"
#include "noisim/engine.hpp"
#include "noisim/harness.hpp"
#include "noisim/layout.hpp"
#include "noisim/noise_models.hpp"

using namespace noisim;

namespace {

struct CommonArgs {
    std::string algorithm = "bv";
    std::size_t trials = 0;
    std::uint64_t seed = 1;
    std::size_t workers = 1;
    std::string gate_times;
    std::string out;
};

void add_common(CLI::App *cmd, CommonArgs &args, bool with_trials = true) {
    cmd->add_option("--algorithm", args.algorithm, "bv | ccnot | qft | grover1 | grover2 | grover3")
        ->capture_default_str();
    if (with_trials) {
        cmd->add_option("--trials", args.trials, "Trials per point (default depends on the algorithm)");
        cmd->add_option("--seed", args.seed, "Master seed")->capture_default_str();
        cmd->add_option("--workers", args.workers, "Worker threads")->capture_default_str();
    }
    cmd->add_option("--gate-times", args.gate_times, "KEY=VALUE gate durations file (microseconds)");
    cmd->add_option("--out", args.out, "Output path (stdout if omitted)");
}

Algorithm require_algorithm(const std::string &name) {
    auto a = parse_algorithm(name);
    if (!a) {
        throw std::invalid_argument("unknown algorithm '" + name + "'");
    }
    return *a;
}

DistributionKind require_dist(const std::string &name) {
    if (name == "p1") {
        return DistributionKind::P1;
    }
    if (name == "p2") {
        return DistributionKind::P2;
    }
    throw std::invalid_argument("unknown distribution '" + name + "' (expected p1 or p2)");
}

SweepOptions options_from(const CommonArgs &args) {
    SweepOptions opts;
    opts.trials = args.trials;
    opts.seed = args.seed;
    opts.workers = args.workers;
    if (!args.gate_times.empty()) {
        opts.times = GateTimes::load(args.gate_times);
    }
    return opts;
}

void emit(const std::string &text, const std::string &path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw std::invalid_argument("cannot write '" + path + "'");
    }
    out << text;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Noisy state-vector benchmarks on a limited-connectivity qubit layout"};
    app.require_subcommand(1);

    CommonArgs run_args;
    std::optional<double> run_f, run_t1, run_t1_star;
    std::string run_dist = "p1";
    auto *run = app.add_subcommand("run", "Monte Carlo trials at one parameter point");
    add_common(run, run_args);
    run->add_option("--avg-fidelity", run_f, "Average gate fidelity (omit for perfect gates)");
    run->add_option("--dist", run_dist, "p1 | p2")->capture_default_str()->check(CLI::IsMember({"p1", "p2"}));
    run->add_option("--t1", run_t1, "T1 in microseconds (omit to disable decoherence)");
    run->add_option("--t1-star", run_t1_star, "T1* in microseconds (default T1 / 2)");

    CommonArgs sf_args;
    std::vector<double> sf_values{0.9, 0.99, 0.999, 0.9999};
    std::string sf_dist = "p1";
    auto *sf = app.add_subcommand("sweep-fidelity", "Average-fidelity sweep with perfect coherence");
    add_common(sf, sf_args);
    sf->add_option("--fidelities", sf_values, "Comma-separated <f> grid")->delimiter(',')->capture_default_str();
    sf->add_option("--dist", sf_dist, "p1 | p2")->capture_default_str()->check(CLI::IsMember({"p1", "p2"}));

    CommonArgs sc_args;
    std::vector<double> sc_values{10, 20, 30, 50, 75, 100, 150, 200, 250};
    double sc_ratio = 0.5;
    auto *sc = app.add_subcommand("sweep-coherence", "T1 sweep with perfect gates");
    add_common(sc, sc_args);
    sc->add_option("--t1-values", sc_values, "Comma-separated T1 grid (microseconds)")
        ->delimiter(',')
        ->capture_default_str();
    sc->add_option("--t1-star-ratio", sc_ratio, "T1* / T1")->capture_default_str();

    CommonArgs cb_args;
    std::size_t cb_points = 40;
    std::string cb_dist = "p1";
    auto *cb = app.add_subcommand("sweep-combined", "Joint sweep from (0.99, 20us) with 10% / 5% steps");
    add_common(cb, cb_args);
    cb->add_option("--points", cb_points, "Number of grid points")->capture_default_str();
    cb->add_option("--dist", cb_dist, "p1 | p2")->capture_default_str()->check(CLI::IsMember({"p1", "p2"}));

    CommonArgs in_args;
    std::optional<std::size_t> in_moment;
    std::string in_qubit;
    std::optional<int> in_outcome;
    auto *inj = app.add_subcommand("inject", "Single forced collapse on a perfect run");
    add_common(inj, in_args, false);
    inj->add_option("--moment", in_moment, "0-based moment index (omit for the full table)");
    inj->add_option("--qubit", in_qubit, "Qubit label such as Q2 or a1");
    inj->add_option("--outcome", in_outcome, "Collapse outcome 0 or 1 (omit for both)");

    std::size_t layout_level = 2;
    std::string layout_out;
    auto *lay = app.add_subcommand("layout", "Print the qubit layout as an edge list");
    lay->add_option("--level", layout_level, "N: 2^N computational qubits")->capture_default_str();
    lay->add_option("--out", layout_out, "Output path (stdout if omitted)");

    CommonArgs dump_args;
    bool dump_timing = false;
    auto *dump = app.add_subcommand("circuit", "Print a benchmark circuit, one moment per line");
    add_common(dump, dump_args, false);
    dump->add_flag("--timing", dump_timing, "Append the timing summary");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*run) {
            Algorithm alg = require_algorithm(run_args.algorithm);
            NoiseConfig noise;
            if (run_f) {
                noise.fidelity = FidelitySpec{*run_f, require_dist(run_dist)};
            }
            if (run_t1) {
                noise.coherence = CoherenceSpec{*run_t1, run_t1_star.value_or(*run_t1 / 2)};
            } else if (run_t1_star) {
                throw std::invalid_argument("--t1-star requires --t1");
            }
            SweepResult result;
            result.points.push_back(evaluate_point(alg, noise, options_from(run_args), 0));
            emit(result.to_csv(), run_args.out);
        } else if (*sf) {
            auto r = sweep_fidelity(require_algorithm(sf_args.algorithm), sf_values, require_dist(sf_dist),
                                    options_from(sf_args));
            emit(r.to_csv(), sf_args.out);
        } else if (*sc) {
            auto r = sweep_coherence(require_algorithm(sc_args.algorithm), sc_values, options_from(sc_args), sc_ratio);
            emit(r.to_csv(), sc_args.out);
        } else if (*cb) {
            auto r = sweep_combined(require_algorithm(cb_args.algorithm), cb_points, options_from(cb_args),
                                    require_dist(cb_dist));
            emit(r.to_csv(), cb_args.out);
        } else if (*inj) {
            Circuit circuit = build_algorithm(require_algorithm(in_args.algorithm), options_from(in_args).times);
            std::vector<InjectionResult> rows;
            if (in_moment) {
                if (in_qubit.empty()) {
                    throw std::invalid_argument("--moment needs --qubit");
                }
                Node q = circuit.layout().parse(in_qubit);
                if (in_outcome && *in_outcome != 0 && *in_outcome != 1) {
                    throw std::invalid_argument("--outcome must be 0 or 1");
                }
                for (int b : {0, 1}) {
                    if (!in_outcome || *in_outcome == b) {
                        rows.push_back(inject_single_error(circuit, *in_moment, q, b == 1));
                    }
                }
            } else {
                rows = inject_study(circuit);
            }
            emit(injections_to_csv(circuit, rows), in_args.out);
        } else if (*lay) {
            emit(Layout::build(layout_level).edge_list(), layout_out);
        } else if (*dump) {
            auto times = options_from(dump_args).times;
            Circuit circuit = build_algorithm(require_algorithm(dump_args.algorithm), times);
            std::string text = circuit.dump();
            if (dump_timing) {
                auto t = timing_summary(circuit, times);
                char buf[256];
                std::snprintf(buf, sizeof(buf),
                              "# moments=%zu total_us=%.6g superposed_qubit_us=%.6g excited_qubit_us=%.6g "
                              "one_qubit_gates=%zu two_qubit_gates=%zu\n",
                              t.num_moments, t.total_time, t.total_superposed_time(), t.total_excited_time(),
                              t.one_qubit_gates, t.two_qubit_gates);
                text += buf;
            }
            emit(text, dump_args.out);
        }
    } catch (const InternalFault &e) {
        std::cerr << "internal fault: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::out_of_range &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "internal fault: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
