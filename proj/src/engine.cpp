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

#include "noisim/engine.hpp"

#include <cmath>
#include <stdexcept>

namespace noisim {

namespace {

struct GateNoise {
    const EpsilonSampler *sampler = nullptr;
    Rng *rng = nullptr;
    std::uint64_t draws = 0;
};

void apply_moment(StateVector &state, const Moment &moment, GateNoise &noise) {
    for (const auto &op : moment.ops) {
        if (noise.sampler == nullptr) {
            apply_ideal(state, op);
            continue;
        }
        GateMatrix ideal = ideal_matrix(op);
        if (op.arity() == 2) {
            double e_control = noise.sampler->draw_two(*noise.rng);
            double e_target = noise.sampler->draw_two(*noise.rng);
            noise.draws += 2;
            state.apply_two(noisy_two(ideal, e_control, e_target), op.qubits[0], op.qubits[1]);
        } else {
            double e = noise.sampler->draw_single(*noise.rng);
            noise.draws += 1;
            state.apply_single(noisy_single(ideal, e), op.qubits[0]);
        }
    }
}

void apply_event(StateVector &state, const ErrorEvent &event) {
    if (event.kind == DecoherenceKind::T1) {
        state.relax(event.qubit);
    } else {
        state.collapse(event.qubit, event.outcome);
    }
}

// One pass over every qubit after a moment: T1 on qubits in |1>, T1* on
// superposed ones, nothing for |0>.
void sample_decoherence(StateVector &state, std::size_t moment_index, double dt, const CoherenceSpec &spec, Rng &rng,
                        std::vector<ErrorEvent> &log) {
    for (Node q = 0; q < state.num_qubits(); q++) {
        double p1 = state.marginal_one(q);
        ErrorEvent event{moment_index, q, DecoherenceKind::T1, false};
        if (p1 > 1 - kClassifyTolerance) {
            if (!sample_event(dt, spec.t1, rng)) {
                continue;
            }
        } else if (p1 >= kClassifyTolerance) {
            if (!sample_event(dt, spec.t1_star, rng)) {
                continue;
            }
            event.kind = DecoherenceKind::T1Star;
            event.outcome = std::generate_canonical<double, 64>(rng) < p1;
        } else {
            continue;
        }
        apply_event(state, event);
        log.push_back(event);
    }
}

void check_coherence(const CoherenceSpec &spec) {
    if (!(spec.t1 > 0) || !(spec.t1_star > 0)) {
        throw std::invalid_argument("coherence times must be positive");
    }
}

TrialRecord finish(const Circuit &circuit, StateVector state, std::vector<ErrorEvent> events, std::uint64_t draws) {
    TrialRecord record;
    record.overlap = circuit.metric().overlap(state);
    record.success = circuit.metric().prefactor * record.overlap;
    record.error_events = std::move(events);
    record.epsilon_draw_count = draws;
    record.final_state = std::move(state);
    return record;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

const char *to_string(DecoherenceKind kind) { return kind == DecoherenceKind::T1 ? "T1" : "T1*"; }

TrialStreams::TrialStreams(std::uint64_t seed)
    : gates_(splitmix64(seed ^ 0x67617465ull)), decoherence_(splitmix64(seed ^ 0x6465636full)) {
}

StateVector run_noiseless(const Circuit &circuit) {
    StateVector state = circuit.initial_state();
    GateNoise none;
    for (const auto &m : circuit.moments()) {
        apply_moment(state, m, none);
    }
    return state;
}

TrialRecord run_trial(const Circuit &circuit, const NoiseConfig &noise, std::uint64_t seed) {
    TrialStreams streams(seed);
    std::optional<EpsilonSampler> sampler;
    if (noise.fidelity) {
        sampler.emplace(*noise.fidelity);
    }
    if (noise.coherence) {
        check_coherence(*noise.coherence);
    }
    GateNoise gate_noise{sampler ? &*sampler : nullptr, &streams.gates(), 0};
    StateVector state = circuit.initial_state();
    std::vector<ErrorEvent> events;
    const auto &moments = circuit.moments();
    for (std::size_t i = 0; i < moments.size(); i++) {
        apply_moment(state, moments[i], gate_noise);
        if (noise.coherence) {
            double dt = moment_duration(moments[i], circuit.gate_times());
            sample_decoherence(state, i, dt, *noise.coherence, streams.decoherence(), events);
        }
    }
    return finish(circuit, std::move(state), std::move(events), gate_noise.draws);
}

TrialRecord run_fidelity(const Circuit &circuit, const FidelitySpec &spec, std::uint64_t seed) {
    return run_trial(circuit, NoiseConfig{spec, std::nullopt}, seed);
}

TrialRecord run_decoherence(const Circuit &circuit, const CoherenceSpec &spec, std::uint64_t seed) {
    return run_trial(circuit, NoiseConfig{std::nullopt, spec}, seed);
}

TrialRecord run_combined(const Circuit &circuit, const FidelitySpec &fspec, const CoherenceSpec &cspec,
                         std::uint64_t seed) {
    return run_trial(circuit, NoiseConfig{fspec, cspec}, seed);
}

TrialRecord run_with_events(const Circuit &circuit, const std::optional<FidelitySpec> &fidelity,
                            const std::vector<ErrorEvent> &events, std::uint64_t seed) {
    TrialStreams streams(seed);
    std::optional<EpsilonSampler> sampler;
    if (fidelity) {
        sampler.emplace(*fidelity);
    }
    GateNoise gate_noise{sampler ? &*sampler : nullptr, &streams.gates(), 0};
    const auto &moments = circuit.moments();
    for (std::size_t k = 0; k < events.size(); k++) {
        if (events[k].moment_index >= moments.size() || events[k].qubit >= circuit.num_qubits()) {
            throw std::out_of_range("forced event outside the circuit");
        }
        if (k > 0 && events[k].moment_index < events[k - 1].moment_index) {
            throw std::invalid_argument("forced events must be ordered by moment");
        }
    }
    StateVector state = circuit.initial_state();
    std::size_t next = 0;
    for (std::size_t i = 0; i < moments.size(); i++) {
        apply_moment(state, moments[i], gate_noise);
        for (; next < events.size() && events[next].moment_index == i; next++) {
            apply_event(state, events[next]);
        }
    }
    return finish(circuit, std::move(state), events, gate_noise.draws);
}

double evaluate_success(const SuccessMetric &metric, const StateVector &final) { return metric.evaluate(final); }

double analytic_zero_error(const TimingSummary &timing, const CoherenceSpec &spec) {
    check_coherence(spec);
    return std::exp(-timing.total_excited_time() / spec.t1 - timing.total_superposed_time() / spec.t1_star);
}

}  // namespace noisim
