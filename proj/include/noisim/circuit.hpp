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

#ifndef NOISIM_CIRCUIT_HPP
#define NOISIM_CIRCUIT_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "noisim/layout.hpp"
#include "noisim/statevector.hpp"

namespace noisim {

/// Gate durations in microseconds.
struct GateTimes {
    double x = 0.05;
    double h = 0.05;
    double t = 0.05;
    double tdg = 0.05;
    double phase = 0.05;
    double cnot = 0.3;

    double duration(GateKind kind) const;

    /// Line-oriented "KEY=VALUE" (keys X, H, T, Tdg, R, CNOT; '#' starts a
    /// comment). Unlisted keys keep their defaults. Throws
    /// std::invalid_argument on unknown keys or nonpositive values.
    static GateTimes parse(std::istream &in);
    static GateTimes load(const std::string &path);
};

/// Gates that run in parallel on disjoint qubits.
struct Moment {
    std::vector<GateOp> ops;

    bool touches(Node q) const;
};

/// Longest member gate. Throws std::invalid_argument for an empty moment.
double moment_duration(const Moment &moment, const GateTimes &times);

GateMatrix ideal_matrix(const GateOp &op);
void apply_ideal(StateVector &state, const GateOp &op);

enum class Algorithm { BV, CCNOT, QFT, Grover1, Grover2, Grover3 };

const char *to_string(Algorithm algorithm);
/// "bv", "ccnot", "qft", "grover1".."grover3".
std::optional<Algorithm> parse_algorithm(const std::string &name);
/// Grover iteration count, or 0 for the other benchmarks.
int grover_iterations(Algorithm algorithm);

enum class MetricKind { BVTarget, CCNOTTarget, QFTState, GroverTarget };

/// prefactor * |<target|psi>|^2 over the full register, ancillas included.
struct SuccessMetric {
    MetricKind kind = MetricKind::BVTarget;
    StateVector target = StateVector::basis(1, 0);
    double prefactor = 1;

    /// Throws std::invalid_argument when `final` has a different qubit count.
    double evaluate(const StateVector &final) const;
    /// |<target|psi>|^2 without the prefactor.
    double overlap(const StateVector &final) const;
};

/// Ideal probability of the marked state after k Grover iterations over
/// four qubits: sin^2((2k + 1) asin(1/4)).
double grover_ideal_probability(int iterations);

/// A benchmark program: perfect initial state, moments, success metric.
class Circuit {
   public:
    Circuit(Layout layout, StateVector initial, SuccessMetric metric, std::string name);

    /// Appends a moment. Throws std::invalid_argument if two ops share a
    /// qubit, a two-qubit op spans a non-edge, or the moment is empty.
    void append(Moment moment);
    /// Each op becomes its own moment.
    void append_serial(const std::vector<GateOp> &ops);

    const Layout &layout() const { return layout_; }
    const std::vector<Moment> &moments() const { return moments_; }
    const StateVector &initial_state() const { return initial_; }
    const SuccessMetric &metric() const { return metric_; }
    const std::string &name() const { return name_; }
    std::size_t num_qubits() const { return layout_.num_qubits(); }

    const GateTimes &gate_times() const { return times_; }
    void set_gate_times(const GateTimes &times) { times_ = times; }

    std::vector<GateOp> flat_ops() const;

    /// One moment per line: "[t=0.30us] CNOT Q1 a1 | H Q3".
    std::string dump() const;

   private:
    Layout layout_;
    StateVector initial_;
    SuccessMetric metric_;
    std::string name_;
    std::vector<Moment> moments_;
    GateTimes times_;
};

/// Toffoli over {H, T, Tdg, CNOT} on three mutually adjacent nodes, as a
/// list of moments (7 T-type gates, 6 CNOTs).
std::vector<Moment> toffoli_moments(Node control_a, Node control_b, Node target);

/// Bernstein-Vazirani with hidden string `hidden` (one char per computational
/// qubit, '0' or '1'); the oracle target is a1.
Circuit build_bv(const Layout &layout, const std::string &hidden);
/// Toffoli on (Q1, Q2 -> a1) starting from Q1 = Q2 = |1>.
Circuit build_ccnot(const Layout &layout);
/// Four-qubit QFT without terminal swaps.
Circuit build_qft(const Layout &layout);
/// Grover search for `marked` (four chars) with 1..3 iterations.
Circuit build_grover(const Layout &layout, const std::string &marked, int iterations);

/// The benchmark configurations used throughout: N = 2 layout, BV hidden
/// string 1010, Grover marked state 0101.
Circuit build_algorithm(Algorithm algorithm, const GateTimes &times = {});

struct TimingSummary {
    double total_time = 0;
    std::size_t num_moments = 0;
    /// Per qubit: time spent Superposed / DefiniteOne at moment ends under
    /// noiseless evolution, weighted by the moment duration.
    std::vector<double> superposed_time;
    std::vector<double> excited_time;
    std::size_t one_qubit_gates = 0;
    std::size_t two_qubit_gates = 0;

    double total_superposed_time() const;
    double total_excited_time() const;
};

TimingSummary timing_summary(const Circuit &circuit, const GateTimes &times);

}  // namespace noisim

#endif
