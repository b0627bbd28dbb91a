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

#include "noisim/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace noisim {

namespace {

std::string trim(const std::string &s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) {
        return "";
    }
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

void require_level_two(const Layout &layout, const char *what) {
    if (layout.level() != 2) {
        throw std::invalid_argument(std::string(what) + " is defined on the N = 2 layout only");
    }
}

void check_bits(const std::string &bits, std::size_t expected, const char *what) {
    if (bits.size() != expected || bits.find_first_not_of("01") != std::string::npos) {
        throw std::invalid_argument(std::string(what) + " must be " + std::to_string(expected) +
                                    " characters of 0/1, got '" + bits + "'");
    }
}

// Basis index of a full-register ket given per-node bit values.
std::uint64_t basis_index(const Layout &layout, const std::vector<int> &bits) {
    std::uint64_t index = 0;
    for (Node n = 0; n < layout.num_qubits(); n++) {
        index = (index << 1) | static_cast<std::uint64_t>(bits[n] & 1);
    }
    return index;
}

Moment single_layer(GateKind kind, const std::vector<Node> &nodes) {
    Moment m;
    for (Node n : nodes) {
        m.ops.push_back(GateOp::single(kind, n));
    }
    return m;
}

void append_routed_cnot(Circuit &circuit, Node control, Node target) {
    circuit.append_serial(route_cnot(circuit.layout(), control, target));
}

// Two Toffolis on disjoint triangles run step by step in shared moments.
void append_parallel_toffolis(Circuit &circuit, const std::vector<Moment> &first, const std::vector<Moment> &second) {
    std::size_t steps = std::max(first.size(), second.size());
    for (std::size_t i = 0; i < steps; i++) {
        Moment m;
        if (i < first.size()) {
            m.ops.insert(m.ops.end(), first[i].ops.begin(), first[i].ops.end());
        }
        if (i < second.size()) {
            m.ops.insert(m.ops.end(), second[i].ops.begin(), second[i].ops.end());
        }
        circuit.append(std::move(m));
    }
}

// Phase flip on |1111> of Q1..Q4, computed into a1/a2 and uncomputed.
void append_four_controlled_z(Circuit &circuit) {
    const Layout &l = circuit.layout();
    Node q1 = l.computational(1), q2 = l.computational(2), q3 = l.computational(3), q4 = l.computational(4);
    Node a1 = l.ancilla(1), a2 = l.ancilla(2);
    auto left = toffoli_moments(q1, q2, a1);
    auto right = toffoli_moments(q3, q4, a2);
    append_parallel_toffolis(circuit, left, right);
    circuit.append(single_layer(GateKind::H, {a2}));
    circuit.append_serial({GateOp::cnot(a1, a2)});
    circuit.append(single_layer(GateKind::H, {a2}));
    append_parallel_toffolis(circuit, left, right);
}

std::vector<Node> computational_nodes(const Layout &layout) {
    std::vector<Node> out;
    for (std::size_t i = 1; i <= layout.num_computational(); i++) {
        out.push_back(layout.computational(i));
    }
    return out;
}

// Controlled phase diag(1, 1, 1, e^{i phi}) from the allowed gate set:
// CNOT, R(-phi/2) on target, CNOT, then R(phi/2) on both.
void append_controlled_phase(Circuit &circuit, Node control, Node target, double phi) {
    append_routed_cnot(circuit, control, target);
    circuit.append(Moment{{GateOp::single(GateKind::Phase, target, -phi / 2)}});
    append_routed_cnot(circuit, control, target);
    circuit.append(Moment{{GateOp::single(GateKind::Phase, control, phi / 2),
                           GateOp::single(GateKind::Phase, target, phi / 2)}});
}

}  // namespace

double GateTimes::duration(GateKind kind) const {
    switch (kind) {
        case GateKind::X:
            return x;
        case GateKind::H:
            return h;
        case GateKind::T:
            return t;
        case GateKind::Tdg:
            return tdg;
        case GateKind::Phase:
            return phase;
        case GateKind::CNOT:
            return cnot;
    }
    return 0;
}

GateTimes GateTimes::parse(std::istream &in) {
    GateTimes times;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("gate times line " + std::to_string(line_no) + ": expected KEY=VALUE");
        }
        std::string key = trim(line.substr(0, eq));
        std::string value_text = trim(line.substr(eq + 1));
        double value = 0;
        try {
            std::size_t used = 0;
            value = std::stod(value_text, &used);
            if (used != value_text.size()) {
                throw std::invalid_argument("trailing characters");
            }
        } catch (const std::exception &) {
            throw std::invalid_argument("gate times line " + std::to_string(line_no) + ": bad value '" +
                                        value_text + "'");
        }
        if (!(value > 0) || !std::isfinite(value)) {
            throw std::invalid_argument("gate times line " + std::to_string(line_no) + ": durations must be positive");
        }
        if (key == "X") {
            times.x = value;
        } else if (key == "H") {
            times.h = value;
        } else if (key == "T") {
            times.t = value;
        } else if (key == "Tdg") {
            times.tdg = value;
        } else if (key == "R" || key == "Rphi") {
            times.phase = value;
        } else if (key == "CNOT") {
            times.cnot = value;
        } else {
            throw std::invalid_argument("gate times line " + std::to_string(line_no) + ": unknown gate '" + key + "'");
        }
    }
    return times;
}

GateTimes GateTimes::load(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open gate times file '" + path + "'");
    }
    return parse(in);
}

bool Moment::touches(Node q) const {
    return std::any_of(ops.begin(), ops.end(), [q](const GateOp &op) { return op.touches(q); });
}

double moment_duration(const Moment &moment, const GateTimes &times) {
    if (moment.ops.empty()) {
        throw std::invalid_argument("empty moment has no duration");
    }
    double longest = 0;
    for (const auto &op : moment.ops) {
        longest = std::max(longest, times.duration(op.kind));
    }
    return longest;
}

GateMatrix ideal_matrix(const GateOp &op) {
    switch (op.kind) {
        case GateKind::X:
            return gates::x();
        case GateKind::H:
            return gates::h();
        case GateKind::T:
            return gates::t();
        case GateKind::Tdg:
            return gates::tdg();
        case GateKind::Phase:
            return gates::phase(op.angle);
        case GateKind::CNOT:
            return gates::cnot();
    }
    throw std::logic_error("unhandled gate kind");
}

void apply_ideal(StateVector &state, const GateOp &op) {
    if (op.arity() == 2) {
        state.apply_two(ideal_matrix(op), op.qubits[0], op.qubits[1]);
    } else {
        state.apply_single(ideal_matrix(op), op.qubits[0]);
    }
}

const char *to_string(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::BV:
            return "bv";
        case Algorithm::CCNOT:
            return "ccnot";
        case Algorithm::QFT:
            return "qft";
        case Algorithm::Grover1:
            return "grover1";
        case Algorithm::Grover2:
            return "grover2";
        case Algorithm::Grover3:
            return "grover3";
    }
    return "?";
}

std::optional<Algorithm> parse_algorithm(const std::string &name) {
    for (auto a : {Algorithm::BV, Algorithm::CCNOT, Algorithm::QFT, Algorithm::Grover1, Algorithm::Grover2,
                   Algorithm::Grover3}) {
        if (name == to_string(a)) {
            return a;
        }
    }
    return std::nullopt;
}

int grover_iterations(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::Grover1:
            return 1;
        case Algorithm::Grover2:
            return 2;
        case Algorithm::Grover3:
            return 3;
        default:
            return 0;
    }
}

double SuccessMetric::overlap(const StateVector &final) const {
    if (final.num_qubits() != target.num_qubits()) {
        throw std::invalid_argument("success metric does not match the circuit's register size");
    }
    return std::norm(inner_product(target, final));
}

double SuccessMetric::evaluate(const StateVector &final) const { return prefactor * overlap(final); }

double grover_ideal_probability(int iterations) {
    double theta = std::asin(0.25);
    double s = std::sin((2 * iterations + 1) * theta);
    return s * s;
}

Circuit::Circuit(Layout layout, StateVector initial, SuccessMetric metric, std::string name)
    : layout_(std::move(layout)), initial_(std::move(initial)), metric_(std::move(metric)), name_(std::move(name)) {
    if (initial_.num_qubits() != layout_.num_qubits() || metric_.target.num_qubits() != layout_.num_qubits()) {
        throw std::invalid_argument("initial state and metric must cover every layout qubit");
    }
}

void Circuit::append(Moment moment) {
    if (moment.ops.empty()) {
        throw std::invalid_argument("cannot append an empty moment");
    }
    std::vector<bool> used(layout_.num_qubits(), false);
    for (const auto &op : moment.ops) {
        for (std::size_t k = 0; k < op.arity(); k++) {
            Node q = op.qubits[k];
            if (q >= used.size()) {
                throw std::invalid_argument("gate names a qubit outside the layout");
            }
            if (used[q]) {
                throw std::invalid_argument("qubit " + layout_.name(q) + " appears twice in one moment");
            }
            used[q] = true;
        }
    }
    auto violations = validate_circuit(layout_, moment.ops);
    if (!violations.empty()) {
        throw std::invalid_argument(violations.front().message);
    }
    moments_.push_back(std::move(moment));
}

void Circuit::append_serial(const std::vector<GateOp> &ops) {
    for (const auto &op : ops) {
        append(Moment{{op}});
    }
}

std::vector<GateOp> Circuit::flat_ops() const {
    std::vector<GateOp> out;
    for (const auto &m : moments_) {
        out.insert(out.end(), m.ops.begin(), m.ops.end());
    }
    return out;
}

std::string Circuit::dump() const {
    std::ostringstream out;
    char buf[64];
    for (const auto &m : moments_) {
        std::snprintf(buf, sizeof(buf), "[t=%.2fus] ", moment_duration(m, times_));
        out << buf;
        for (std::size_t i = 0; i < m.ops.size(); i++) {
            const auto &op = m.ops[i];
            if (i > 0) {
                out << " | ";
            }
            if (op.kind == GateKind::Phase) {
                std::snprintf(buf, sizeof(buf), "R(%.6g)", op.angle);
                out << buf;
            } else {
                out << to_string(op.kind);
            }
            for (std::size_t k = 0; k < op.arity(); k++) {
                out << ' ' << layout_.name(op.qubits[k]);
            }
        }
        out << '\n';
    }
    return out.str();
}

std::vector<Moment> toffoli_moments(Node a, Node b, Node c) {
    using K = GateKind;
    auto one = [](K kind, Node q) { return GateOp::single(kind, q); };
    return {
        Moment{{one(K::H, c)}},
        Moment{{GateOp::cnot(b, c)}},
        Moment{{one(K::Tdg, c)}},
        Moment{{GateOp::cnot(a, c)}},
        Moment{{one(K::T, c)}},
        Moment{{GateOp::cnot(b, c)}},
        Moment{{one(K::Tdg, c)}},
        Moment{{GateOp::cnot(a, c)}},
        Moment{{one(K::T, b), one(K::T, c)}},
        Moment{{one(K::H, c), GateOp::cnot(a, b)}},
        Moment{{one(K::T, a), one(K::Tdg, b)}},
        Moment{{GateOp::cnot(a, b)}},
    };
}

Circuit build_bv(const Layout &layout, const std::string &hidden) {
    check_bits(hidden, layout.num_computational(), "hidden string");
    Node target = layout.ancilla(1);
    // Ideal output: the hidden string on top, the oracle ancilla back in |1>.
    std::vector<int> out_bits(layout.num_qubits(), 0);
    for (std::size_t i = 0; i < hidden.size(); i++) {
        out_bits[i] = hidden[i] - '0';
    }
    out_bits[target] = 1;
    SuccessMetric metric{MetricKind::BVTarget, StateVector::basis(layout.num_qubits(), basis_index(layout, out_bits)),
                         1.0};
    Circuit c(layout, StateVector::basis(layout.num_qubits(), 0), std::move(metric), "bv");

    auto top = computational_nodes(layout);
    auto with_target = top;
    with_target.push_back(target);
    c.append(single_layer(GateKind::X, {target}));
    c.append(single_layer(GateKind::H, with_target));
    for (std::size_t i = 0; i < hidden.size(); i++) {
        if (hidden[i] == '1') {
            append_routed_cnot(c, top[i], target);
        }
    }
    c.append(single_layer(GateKind::H, with_target));
    return c;
}

Circuit build_ccnot(const Layout &layout) {
    require_level_two(layout, "the CCNOT benchmark");
    Node q1 = layout.computational(1), q2 = layout.computational(2), a1 = layout.ancilla(1);
    std::vector<int> in_bits(layout.num_qubits(), 0);
    in_bits[q1] = in_bits[q2] = 1;
    auto out_bits = in_bits;
    out_bits[a1] = 1;
    SuccessMetric metric{MetricKind::CCNOTTarget, StateVector::basis(layout.num_qubits(), basis_index(layout, out_bits)),
                         1.0};
    Circuit c(layout, StateVector::basis(layout.num_qubits(), basis_index(layout, in_bits)), std::move(metric),
              "ccnot");
    for (auto &m : toffoli_moments(q1, q2, a1)) {
        c.append(std::move(m));
    }
    return c;
}

Circuit build_qft(const Layout &layout) {
    require_level_two(layout, "the QFT benchmark");
    const std::size_t n = layout.num_qubits();
    const std::size_t shift = n - 4;  // ancilla bits sit below the computational ones

    // Input 1/2 (|0011> + |0111> + |1011> + |1111>), ancillas |000>.
    std::vector<Amplitude> in(std::size_t{1} << n);
    for (std::uint64_t top : {0b0011u, 0b0111u, 0b1011u, 0b1111u}) {
        in[top << shift] = 0.5;
    }
    // Its transform without the closing swaps:
    // 1/2 (|0000> - i|0010> - |0001> + i|0011>), ancillas |000>.
    std::vector<Amplitude> out(std::size_t{1} << n);
    out[0b0000u << shift] = 0.5;
    out[0b0010u << shift] = Amplitude(0, -0.5);
    out[0b0001u << shift] = -0.5;
    out[0b0011u << shift] = Amplitude(0, 0.5);

    SuccessMetric metric{MetricKind::QFTState, StateVector::from_amplitudes(std::move(out)), 1.0};
    Circuit c(layout, StateVector::from_amplitudes(std::move(in)), std::move(metric), "qft");
    auto top = computational_nodes(layout);
    for (std::size_t k = 0; k < 4; k++) {
        c.append(single_layer(GateKind::H, {top[k]}));
        for (std::size_t j = 1; k + j < 4; j++) {
            append_controlled_phase(c, top[k + j], top[k], std::numbers::pi / static_cast<double>(1u << j));
        }
    }
    return c;
}

Circuit build_grover(const Layout &layout, const std::string &marked, int iterations) {
    require_level_two(layout, "the Grover benchmark");
    check_bits(marked, 4, "marked state");
    if (iterations < 1 || iterations > 3) {
        throw std::invalid_argument("Grover iterations must be 1, 2 or 3");
    }
    std::vector<int> out_bits(layout.num_qubits(), 0);
    for (std::size_t i = 0; i < 4; i++) {
        out_bits[i] = marked[i] - '0';
    }
    SuccessMetric metric{MetricKind::GroverTarget,
                         StateVector::basis(layout.num_qubits(), basis_index(layout, out_bits)),
                         1.0 / grover_ideal_probability(iterations)};
    Circuit c(layout, StateVector::basis(layout.num_qubits(), 0), std::move(metric),
              "grover" + std::to_string(iterations));

    auto top = computational_nodes(layout);
    // X on every qubit whose marked bit is 0 maps the marked state to |1111>.
    std::vector<Node> flips;
    for (std::size_t i = 0; i < 4; i++) {
        if (marked[i] == '0') {
            flips.push_back(top[i]);
        }
    }

    c.append(single_layer(GateKind::H, top));
    for (int it = 0; it < iterations; it++) {
        if (!flips.empty()) {
            c.append(single_layer(GateKind::X, flips));
        }
        append_four_controlled_z(c);
        if (!flips.empty()) {
            c.append(single_layer(GateKind::X, flips));
        }
        c.append(single_layer(GateKind::H, top));
        c.append(single_layer(GateKind::X, top));
        append_four_controlled_z(c);
        c.append(single_layer(GateKind::X, top));
        c.append(single_layer(GateKind::H, top));
    }
    return c;
}

Circuit build_algorithm(Algorithm algorithm, const GateTimes &times) {
    Layout layout = Layout::build(2);
    auto circuit = [&] {
        switch (algorithm) {
            case Algorithm::BV:
                return build_bv(layout, "1010");
            case Algorithm::CCNOT:
                return build_ccnot(layout);
            case Algorithm::QFT:
                return build_qft(layout);
            default:
                return build_grover(layout, "0101", grover_iterations(algorithm));
        }
    }();
    circuit.set_gate_times(times);
    return circuit;
}

double TimingSummary::total_superposed_time() const {
    double total = 0;
    for (double t : superposed_time) {
        total += t;
    }
    return total;
}

double TimingSummary::total_excited_time() const {
    double total = 0;
    for (double t : excited_time) {
        total += t;
    }
    return total;
}

TimingSummary timing_summary(const Circuit &circuit, const GateTimes &times) {
    TimingSummary summary;
    const std::size_t n = circuit.num_qubits();
    summary.superposed_time.assign(n, 0);
    summary.excited_time.assign(n, 0);
    StateVector state = circuit.initial_state();
    for (const auto &m : circuit.moments()) {
        double dt = moment_duration(m, times);
        summary.total_time += dt;
        summary.num_moments++;
        for (const auto &op : m.ops) {
            apply_ideal(state, op);
            (op.arity() == 2 ? summary.two_qubit_gates : summary.one_qubit_gates)++;
        }
        for (Node q = 0; q < n; q++) {
            switch (state.status(q)) {
                case QubitStatus::Superposed:
                    summary.superposed_time[q] += dt;
                    break;
                case QubitStatus::DefiniteOne:
                    summary.excited_time[q] += dt;
                    break;
                case QubitStatus::DefiniteZero:
                    break;
            }
        }
    }
    return summary;
}

}  // namespace noisim
