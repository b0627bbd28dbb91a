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

#ifndef NOISIM_NOISE_MODELS_HPP
#define NOISIM_NOISE_MODELS_HPP

#include <cstdint>
#include <random>
#include <stdexcept>

#include "noisim/statevector.hpp"

namespace noisim {

/// Raised when a sampler or engine hits a state it cannot recover from.
class InternalFault : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

using Rng = std::mt19937_64;

/// P1: one Gaussian centered at zero. P2: equal mixture of Gaussians at +peak
/// and -peak, each with width peak / 4.
enum class DistributionKind { P1, P2 };

const char *to_string(DistributionKind kind);

struct FidelitySpec {
    double avg_fidelity = 1.0;
    DistributionKind kind = DistributionKind::P1;
};

struct EpsilonParams {
    double sigma = 0;
    double peak = 0;
};

/// Coherence times in microseconds.
struct CoherenceSpec {
    double t1 = 0;
    double t1_star = 0;

    /// T1* defaults to half of T1.
    static CoherenceSpec from_t1(double t1);
};

/// Rejection loop cap for sample_epsilon.
inline constexpr std::uint64_t kMaxEpsilonRedraws = 1'000'000;

double p1_sigma_single(double avg_f);
EpsilonParams p2_params_single(double avg_f);
/// Per-qubit parameters for a two-qubit gate, so that the product of the two
/// independent single-qubit fidelities averages to avg_f.
EpsilonParams two_qubit_params(double avg_f, DistributionKind kind);

/// E[eps^2] of the untruncated distribution.
double second_moment(const EpsilonParams &params, DistributionKind kind);

/// E[eps^2 | |eps| <= 1] and P(|eps| > 1), from closed-form Gaussian integrals.
double truncated_second_moment(const EpsilonParams &params, DistributionKind kind);
double rejection_probability(const EpsilonParams &params, DistributionKind kind);

/// Rescales params (keeping sigma = peak / 4 for P2) so that the second moment
/// after discarding |eps| > 1 equals the untruncated second moment of the
/// input. Returns the input unchanged when that target is out of reach for a
/// truncated distribution.
EpsilonParams truncation_corrected(const EpsilonParams &params, DistributionKind kind);

/// Draws eps, redrawing whenever |eps| > 1. Throws InternalFault after
/// kMaxEpsilonRedraws consecutive rejections. Each rejected draw bumps
/// *redraws when given.
double sample_epsilon(const EpsilonParams &params, DistributionKind kind, Rng &rng,
                      std::uint64_t *redraws = nullptr);

/// Real rotation by asin(eps): [[sqrt(1-eps^2), -eps], [eps, sqrt(1-eps^2)]].
GateMatrix error_rotation(double eps);

/// ideal * R(eps).
GateMatrix noisy_single(const GateMatrix &ideal, double eps);

/// ideal * (R(eps_control) (x) R(eps_target)).
GateMatrix noisy_two(const GateMatrix &ideal, double eps_control, double eps_target);

/// exp(-dt / t).
double survival_probability(double dt, double t);

/// True (an error happened) with probability 1 - exp(-dt / t).
bool sample_event(double dt, double t, Rng &rng);

/// Draws fresh epsilons for each gate application at a fixed average fidelity.
/// Uses truncation-corrected parameters so the realized average fidelity
/// matches the requested one.
class EpsilonSampler {
   public:
    explicit EpsilonSampler(const FidelitySpec &spec);

    const FidelitySpec &spec() const { return spec_; }
    const EpsilonParams &single_params() const { return single_; }
    const EpsilonParams &two_qubit_params() const { return two_; }

    double draw_single(Rng &rng) const { return sample_epsilon(single_, spec_.kind, rng); }
    double draw_two(Rng &rng) const { return sample_epsilon(two_, spec_.kind, rng); }

   private:
    FidelitySpec spec_;
    EpsilonParams single_;
    EpsilonParams two_;
};

}  // namespace noisim

#endif
