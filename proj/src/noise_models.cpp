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

#include "noisim/noise_models.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace noisim {

namespace {

void check_fidelity(double avg_f) {
    if (!(avg_f > 0 && avg_f <= 1)) {
        throw std::invalid_argument("average fidelity must be in (0, 1], got " + std::to_string(avg_f));
    }
}

void check_epsilon(double eps) {
    if (!(std::abs(eps) <= 1)) {
        throw std::invalid_argument("|eps| must be <= 1, got " + std::to_string(eps));
    }
}

double std_normal_pdf(double z) { return std::exp(-0.5 * z * z) / std::sqrt(2 * std::numbers::pi); }

double std_normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

struct TruncatedMoments {
    double inside = 0;     // P(|x| <= 1)
    double second = 0;     // E[x^2; |x| <= 1]
};

// One Gaussian N(mu, s^2) restricted to [-1, 1].
TruncatedMoments gaussian_on_unit_interval(double mu, double s) {
    if (s == 0) {
        if (std::abs(mu) <= 1) {
            return {1, mu * mu};
        }
        return {0, 0};
    }
    double a = (-1 - mu) / s;
    double b = (1 - mu) / s;
    double pa = std_normal_pdf(a), pb = std_normal_pdf(b);
    double p = std_normal_cdf(b) - std_normal_cdf(a);
    double ez = pa - pb;
    double ez2 = p + a * pa - b * pb;
    return {p, mu * mu * p + 2 * mu * s * ez + s * s * ez2};
}

TruncatedMoments truncated(const EpsilonParams &params, DistributionKind kind) {
    if (kind == DistributionKind::P1) {
        return gaussian_on_unit_interval(0, params.sigma);
    }
    // The mixture is symmetric, so both components contribute equally.
    return gaussian_on_unit_interval(params.peak, params.sigma);
}

EpsilonParams scaled(const EpsilonParams &params, double factor) {
    return {params.sigma * factor, params.peak * factor};
}

}  // namespace

const char *to_string(DistributionKind kind) { return kind == DistributionKind::P1 ? "p1" : "p2"; }

CoherenceSpec CoherenceSpec::from_t1(double t1) { return {t1, t1 / 2}; }

double p1_sigma_single(double avg_f) {
    check_fidelity(avg_f);
    return std::sqrt(1 - avg_f);
}

EpsilonParams p2_params_single(double avg_f) {
    check_fidelity(avg_f);
    double peak = std::sqrt(16.0 / 17.0 * (1 - avg_f));
    return {peak / 4, peak};
}

EpsilonParams two_qubit_params(double avg_f, DistributionKind kind) {
    check_fidelity(avg_f);
    double per_qubit = 1 - std::sqrt(avg_f);
    if (kind == DistributionKind::P1) {
        return {std::sqrt(per_qubit), 0};
    }
    double peak = std::sqrt(16.0 / 17.0 * per_qubit);
    return {peak / 4, peak};
}

double second_moment(const EpsilonParams &params, DistributionKind kind) {
    if (kind == DistributionKind::P1) {
        return params.sigma * params.sigma;
    }
    return params.peak * params.peak + params.sigma * params.sigma;
}

double truncated_second_moment(const EpsilonParams &params, DistributionKind kind) {
    auto m = truncated(params, kind);
    if (m.inside <= 0) {
        throw std::invalid_argument("distribution has no mass inside |eps| <= 1");
    }
    return m.second / m.inside;
}

double rejection_probability(const EpsilonParams &params, DistributionKind kind) {
    return 1 - truncated(params, kind).inside;
}

EpsilonParams truncation_corrected(const EpsilonParams &params, DistributionKind kind) {
    double target = second_moment(params, kind);
    if (target == 0) {
        return params;
    }
    auto moment_at = [&](double factor) {
        auto m = truncated(scaled(params, factor), kind);
        return m.inside > 0 ? m.second / m.inside : 0.0;
    };
    double lo = 1, hi = 2;
    while (moment_at(hi) < target) {
        hi *= 2;
        if (hi > 1e4) {
            return params;
        }
    }
    for (int i = 0; i < 200 && hi - lo > 1e-15; i++) {
        double mid = 0.5 * (lo + hi);
        if (moment_at(mid) < target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return scaled(params, 0.5 * (lo + hi));
}

double sample_epsilon(const EpsilonParams &params, DistributionKind kind, Rng &rng, std::uint64_t *redraws) {
    if (params.sigma == 0 && params.peak == 0) {
        return 0;
    }
    std::normal_distribution<double> normal(0, 1);
    for (std::uint64_t attempt = 0; attempt < kMaxEpsilonRedraws; attempt++) {
        double center = 0;
        if (kind == DistributionKind::P2) {
            center = (rng() >> 63) ? params.peak : -params.peak;
        }
        double eps = center + params.sigma * normal(rng);
        if (std::abs(eps) <= 1) {
            return eps;
        }
        if (redraws) {
            ++*redraws;
        }
    }
    throw InternalFault("epsilon rejection sampling exceeded its redraw cap");
}

GateMatrix error_rotation(double eps) {
    check_epsilon(eps);
    double c = std::sqrt(1 - eps * eps);
    return GateMatrix(2, {c, -eps, eps, c});
}

GateMatrix noisy_single(const GateMatrix &ideal, double eps) {
    if (ideal.dim() != 2) {
        throw std::invalid_argument("noisy_single needs a 2x2 gate");
    }
    if (eps == 0) {
        return ideal;
    }
    return ideal * error_rotation(eps);
}

GateMatrix noisy_two(const GateMatrix &ideal, double eps_control, double eps_target) {
    if (ideal.dim() != 4) {
        throw std::invalid_argument("noisy_two needs a 4x4 gate");
    }
    if (eps_control == 0 && eps_target == 0) {
        return ideal;
    }
    return ideal * GateMatrix::kron(error_rotation(eps_control), error_rotation(eps_target));
}

double survival_probability(double dt, double t) {
    if (!(t > 0)) {
        throw std::invalid_argument("coherence time must be positive");
    }
    if (!(dt >= 0)) {
        throw std::invalid_argument("time step must be nonnegative");
    }
    return std::exp(-dt / t);
}

bool sample_event(double dt, double t, Rng &rng) {
    double error_probability = 1 - survival_probability(dt, t);
    return std::generate_canonical<double, 64>(rng) < error_probability;
}

EpsilonSampler::EpsilonSampler(const FidelitySpec &spec) : spec_(spec) {
    check_fidelity(spec.avg_fidelity);
    EpsilonParams single = spec.kind == DistributionKind::P1 ? EpsilonParams{p1_sigma_single(spec.avg_fidelity), 0}
                                                             : p2_params_single(spec.avg_fidelity);
    single_ = truncation_corrected(single, spec.kind);
    two_ = truncation_corrected(noisim::two_qubit_params(spec.avg_fidelity, spec.kind), spec.kind);
}

}  // namespace noisim
