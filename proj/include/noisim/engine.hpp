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

#ifndef NOISIM_ENGINE_HPP
#define NOISIM_ENGINE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "noisim/circuit.hpp"
#include "noisim/noise_models.hpp"

namespace noisim {

enum class DecoherenceKind { T1, T1Star };

const char *to_string(DecoherenceKind kind);

/// One collapse. T1 events always land in |0>; T1Star events carry the
/// Born-sampled outcome.
struct ErrorEvent {
    std::size_t moment_index = 0;
    Node qubit = 0;
    DecoherenceKind kind = DecoherenceKind::T1Star;
    bool outcome = false;

    bool operator==(const ErrorEvent &) const = default;
};

struct TrialRecord {
    /// Metric value, Grover prefactor included.
    double success = 0;
    /// Squared overlap with the target, no prefactor.
    double overlap = 0;
    std::vector<ErrorEvent> error_events;
    std::uint64_t epsilon_draw_count = 0;
    StateVector final_state = StateVector::basis(1, 0);
};

/// SplitMix64 finalizer; a bijection on 64-bit words.
std::uint64_t splitmix64(std::uint64_t x);

/// Independent random streams for one trial: gate errors and decoherence
/// draw from separate engines so either can be replayed alone.
class TrialStreams {
   public:
    explicit TrialStreams(std::uint64_t seed);

    Rng &gates() { return gates_; }
    Rng &decoherence() { return decoherence_; }

   private:
    Rng gates_;
    Rng decoherence_;
};

/// Which noise families are active. A missing family is perfect.
struct NoiseConfig {
    std::optional<FidelitySpec> fidelity;
    std::optional<CoherenceSpec> coherence;
};

StateVector run_noiseless(const Circuit &circuit);

TrialRecord run_fidelity(const Circuit &circuit, const FidelitySpec &spec, std::uint64_t seed);
TrialRecord run_decoherence(const Circuit &circuit, const CoherenceSpec &spec, std::uint64_t seed);
TrialRecord run_combined(const Circuit &circuit, const FidelitySpec &fspec, const CoherenceSpec &cspec,
                         std::uint64_t seed);

/// Dispatches on which families are present in `noise`.
TrialRecord run_trial(const Circuit &circuit, const NoiseConfig &noise, std::uint64_t seed);

/// Replays a trial with the given collapses forced after their moments and no
/// stochastic decoherence. Gate errors (if `fidelity` is set) come from the
/// gate stream of `seed`, so replaying a logged trial with its own seed
/// reproduces its final state exactly. Events must be ordered by moment.
TrialRecord run_with_events(const Circuit &circuit, const std::optional<FidelitySpec> &fidelity,
                            const std::vector<ErrorEvent> &events, std::uint64_t seed);

double evaluate_success(const SuccessMetric &metric, const StateVector &final);

/// exp(-sum dt / T) over (moment, qubit) pairs of the noiseless run, T1 for
/// qubits in |1>, T1* for superposed ones: the chance a trial sees no collapse.
double analytic_zero_error(const TimingSummary &timing, const CoherenceSpec &spec);

}  // namespace noisim

#endif
