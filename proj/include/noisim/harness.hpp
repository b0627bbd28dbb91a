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

#ifndef NOISIM_HARNESS_HPP
#define NOISIM_HARNESS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "noisim/circuit.hpp"
#include "noisim/engine.hpp"

namespace noisim {

/// Per-trial seed: splitmix64(splitmix64(splitmix64(master) + point) + trial).
/// For fixed (master, point) this is a bijection of the trial index.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t point, std::uint64_t trial);

/// Trial counts used by default: 10000 for the small circuits and
/// 2000 / 1500 / 1000 for one / two / three Grover iterations.
std::size_t default_trials(Algorithm algorithm);

/// What a sweep keeps from each trial.
struct TrialOutcome {
    double success = 0;
    double overlap = 0;
    std::size_t error_count = 0;
};

/// Summary of one parameter point.
struct PointStats {
    std::size_t trials = 0;
    double mean_success = 0;
    /// Population standard deviation of success.
    double std_success = 0;
    double mean_overlap = 0;
    /// Population standard deviation of the unscaled overlap.
    double std_overlap = 0;
    double zero_error_fraction = 0;
    /// histogram[k] = trials with exactly k collapses.
    std::vector<std::size_t> error_histogram;
    /// Mean success per collapse count (NaN for empty buckets).
    std::vector<double> errcount_mean;
};

/// Throws std::invalid_argument for an empty input.
PointStats aggregate(const std::vector<TrialOutcome> &outcomes);
PointStats aggregate(const std::vector<TrialRecord> &records);

struct SweepOptions {
    std::size_t trials = 0;  // 0 selects default_trials()
    std::uint64_t seed = 1;
    std::size_t workers = 1;
    GateTimes times;
};

struct SweepPoint {
    Algorithm algorithm = Algorithm::BV;
    NoiseConfig noise;
    PointStats stats;
    /// Probability of a collapse-free trial, 1 without decoherence.
    double analytic_zero_error = 1;

    /// Reported spread: overlap std for Grover (no prefactor), success std
    /// otherwise.
    double reported_std() const;
};

struct SweepResult {
    std::vector<SweepPoint> points;

    /// CSV with a leading '#' comment line, the header row, one row per point.
    std::string to_csv() const;
};

/// Runs `trials` trials at one parameter point on `workers` threads. Results
/// are stored by trial index, so they do not depend on the worker count.
std::vector<TrialOutcome> run_point(const Circuit &circuit, const NoiseConfig &noise, std::size_t trials,
                                    std::uint64_t seed, std::uint64_t point_index, std::size_t workers);

SweepPoint evaluate_point(Algorithm algorithm, const NoiseConfig &noise, const SweepOptions &options,
                          std::uint64_t point_index);

SweepResult sweep_fidelity(Algorithm algorithm, const std::vector<double> &f_values, DistributionKind kind,
                           const SweepOptions &options);

/// T1* is t1_star_ratio * T1 (one half unless overridden).
SweepResult sweep_coherence(Algorithm algorithm, const std::vector<double> &t1_values, const SweepOptions &options,
                            double t1_star_ratio = 0.5);

/// (<f>, T1) pairs: start at (0.99, 20us), then f <- 0.9 f + 0.1 and
/// T1 <- 1.05 T1.
std::vector<std::pair<double, double>> combined_grid(std::size_t points);

SweepResult sweep_combined(Algorithm algorithm, std::size_t points, const SweepOptions &options,
                           DistributionKind kind = DistributionKind::P1);

/// First T1 on the (ascending) grid where the mean success reaches
/// `threshold`, interpolated linearly in log T1 against the previous point.
/// NaN if the grid never reaches it.
double threshold_crossing(const SweepResult &coherence_sweep, double threshold);

/// Least-squares line of mean success against log T1 over the points within
/// a factor exp(log_window) of threshold_crossing(), solved for `threshold`.
/// Falls back to threshold_crossing() with fewer than three points in the
/// window or a nonincreasing fit.
double threshold_crossing_fit(const SweepResult &coherence_sweep, double threshold, double log_window);

struct InjectionResult {
    std::size_t moment = 0;
    Node qubit = 0;
    bool outcome = false;
    double success = 0;
    /// The qubit was not superposed at that moment, so nothing was collapsed.
    bool vacuous = false;
};

/// Perfect gates with a single forced collapse of `qubit` onto `outcome`
/// right after moment `moment`. Throws std::out_of_range for bad indices.
InjectionResult inject_single_error(const Circuit &circuit, std::size_t moment, Node qubit, bool outcome);

/// Every (moment, qubit, outcome) combination.
std::vector<InjectionResult> inject_study(const Circuit &circuit);

/// "moment,qubit,outcome,success,vacuous".
std::string injections_to_csv(const Circuit &circuit, const std::vector<InjectionResult> &rows);

}  // namespace noisim

#endif
