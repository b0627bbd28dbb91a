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

#include "noisim/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <exception>
#include <thread>

namespace noisim {

namespace {

std::string fmt6(double v) {
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    if (std::isnan(v)) {
        return "";
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

void check_nonempty_grid(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("parameter grid is empty");
    }
}

std::size_t resolve_trials(Algorithm algorithm, const SweepOptions &options) {
    return options.trials > 0 ? options.trials : default_trials(algorithm);
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t point, std::uint64_t trial) {
    return splitmix64(splitmix64(splitmix64(master) + point) + trial);
}

std::size_t default_trials(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::Grover1:
            return 2000;
        case Algorithm::Grover2:
            return 1500;
        case Algorithm::Grover3:
            return 1000;
        default:
            return 10000;
    }
}

PointStats aggregate(const std::vector<TrialOutcome> &outcomes) {
    if (outcomes.empty()) {
        throw std::invalid_argument("cannot aggregate zero trials");
    }
    PointStats stats;
    stats.trials = outcomes.size();
    double n = static_cast<double>(outcomes.size());
    std::size_t max_errors = 0;
    for (const auto &o : outcomes) {
        stats.mean_success += o.success;
        stats.mean_overlap += o.overlap;
        max_errors = std::max(max_errors, o.error_count);
    }
    stats.mean_success /= n;
    stats.mean_overlap /= n;

    stats.error_histogram.assign(max_errors + 1, 0);
    std::vector<double> bucket_sum(max_errors + 1, 0);
    double var_s = 0, var_o = 0;
    for (const auto &o : outcomes) {
        var_s += (o.success - stats.mean_success) * (o.success - stats.mean_success);
        var_o += (o.overlap - stats.mean_overlap) * (o.overlap - stats.mean_overlap);
        stats.error_histogram[o.error_count]++;
        bucket_sum[o.error_count] += o.success;
    }
    stats.std_success = std::sqrt(var_s / n);
    stats.std_overlap = std::sqrt(var_o / n);
    stats.zero_error_fraction = static_cast<double>(stats.error_histogram[0]) / n;
    stats.errcount_mean.resize(max_errors + 1);
    for (std::size_t k = 0; k <= max_errors; k++) {
        stats.errcount_mean[k] = stats.error_histogram[k] > 0
                                     ? bucket_sum[k] / static_cast<double>(stats.error_histogram[k])
                                     : std::numeric_limits<double>::quiet_NaN();
    }
    return stats;
}

PointStats aggregate(const std::vector<TrialRecord> &records) {
    std::vector<TrialOutcome> outcomes;
    outcomes.reserve(records.size());
    for (const auto &r : records) {
        outcomes.push_back({r.success, r.overlap, r.error_events.size()});
    }
    return aggregate(outcomes);
}

double SweepPoint::reported_std() const {
    return grover_iterations(algorithm) > 0 ? stats.std_overlap : stats.std_success;
}

std::string SweepResult::to_csv() const {
    std::size_t max_k = 0;
    for (const auto &p : points) {
        max_k = std::max(max_k, p.stats.errcount_mean.empty() ? 0 : p.stats.errcount_mean.size() - 1);
    }
    std::ostringstream out;
    out << "# std_success: population standard deviation over per-trial values "
           "(unscaled overlap for grover, success otherwise)\n";
    out << "algorithm,dist,avg_fidelity,t1_us,t1_star_us,trials,mean_success,std_success,zero_error_fraction,"
           "analytic_zero_error";
    for (std::size_t k = 0; k <= max_k; k++) {
        out << ",errcount_" << k << "_mean";
    }
    out << '\n';
    for (const auto &p : points) {
        out << to_string(p.algorithm) << ',';
        if (p.noise.fidelity) {
            out << to_string(p.noise.fidelity->kind) << ',' << fmt6(p.noise.fidelity->avg_fidelity) << ',';
        } else {
            out << "none,1,";
        }
        if (p.noise.coherence) {
            out << fmt6(p.noise.coherence->t1) << ',' << fmt6(p.noise.coherence->t1_star) << ',';
        } else {
            out << "inf,inf,";
        }
        out << p.stats.trials << ',' << fmt6(p.stats.mean_success) << ',' << fmt6(p.reported_std()) << ','
            << fmt6(p.stats.zero_error_fraction) << ',' << fmt6(p.analytic_zero_error);
        for (std::size_t k = 0; k <= max_k; k++) {
            out << ',';
            if (k < p.stats.errcount_mean.size()) {
                out << fmt6(p.stats.errcount_mean[k]);
            }
        }
        out << '\n';
    }
    return out.str();
}

std::vector<TrialOutcome> run_point(const Circuit &circuit, const NoiseConfig &noise, std::size_t trials,
                                    std::uint64_t seed, std::uint64_t point_index, std::size_t workers) {
    if (trials == 0) {
        throw std::invalid_argument("trial count must be positive");
    }
    std::vector<TrialOutcome> outcomes(trials);
    auto work = [&](std::size_t first, std::size_t stride) {
        for (std::size_t t = first; t < trials; t += stride) {
            auto record = run_trial(circuit, noise, trial_seed(seed, point_index, t));
            outcomes[t] = {record.success, record.overlap, record.error_events.size()};
        }
    };
    workers = std::max<std::size_t>(1, std::min(workers, trials));
    if (workers == 1) {
        work(0, 1);
        return outcomes;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; w++) {
        pool.emplace_back([&, w] {
            try {
                work(w, workers);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto &th : pool) {
        th.join();
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return outcomes;
}

SweepPoint evaluate_point(Algorithm algorithm, const NoiseConfig &noise, const SweepOptions &options,
                          std::uint64_t point_index) {
    Circuit circuit = build_algorithm(algorithm, options.times);
    SweepPoint point;
    point.algorithm = algorithm;
    point.noise = noise;
    point.stats = aggregate(
        run_point(circuit, noise, resolve_trials(algorithm, options), options.seed, point_index, options.workers));
    if (noise.coherence) {
        point.analytic_zero_error = analytic_zero_error(timing_summary(circuit, options.times), *noise.coherence);
    }
    return point;
}

SweepResult sweep_fidelity(Algorithm algorithm, const std::vector<double> &f_values, DistributionKind kind,
                           const SweepOptions &options) {
    check_nonempty_grid(f_values.size());
    for (double f : f_values) {
        if (!(f > 0 && f <= 1)) {
            throw std::invalid_argument("fidelity grid values must lie in (0, 1]");
        }
    }
    SweepResult result;
    for (std::size_t i = 0; i < f_values.size(); i++) {
        NoiseConfig noise{FidelitySpec{f_values[i], kind}, std::nullopt};
        result.points.push_back(evaluate_point(algorithm, noise, options, i));
    }
    return result;
}

SweepResult sweep_coherence(Algorithm algorithm, const std::vector<double> &t1_values, const SweepOptions &options,
                            double t1_star_ratio) {
    check_nonempty_grid(t1_values.size());
    if (!(t1_star_ratio > 0)) {
        throw std::invalid_argument("T1* ratio must be positive");
    }
    SweepResult result;
    for (std::size_t i = 0; i < t1_values.size(); i++) {
        if (!(t1_values[i] > 0)) {
            throw std::invalid_argument("coherence grid values must be positive");
        }
        NoiseConfig noise{std::nullopt, CoherenceSpec{t1_values[i], t1_values[i] * t1_star_ratio}};
        result.points.push_back(evaluate_point(algorithm, noise, options, i));
    }
    return result;
}

std::vector<std::pair<double, double>> combined_grid(std::size_t points) {
    std::vector<std::pair<double, double>> grid;
    double f = 0.99, t1 = 20.0;
    for (std::size_t k = 0; k < points; k++) {
        grid.emplace_back(f, t1);
        f = 0.9 * f + 0.1;
        t1 = 1.05 * t1;
    }
    return grid;
}

SweepResult sweep_combined(Algorithm algorithm, std::size_t points, const SweepOptions &options,
                           DistributionKind kind) {
    check_nonempty_grid(points);
    SweepResult result;
    auto grid = combined_grid(points);
    for (std::size_t i = 0; i < grid.size(); i++) {
        NoiseConfig noise{FidelitySpec{grid[i].first, kind}, CoherenceSpec::from_t1(grid[i].second)};
        result.points.push_back(evaluate_point(algorithm, noise, options, i));
    }
    return result;
}

double threshold_crossing(const SweepResult &sweep, double threshold) {
    const auto &pts = sweep.points;
    for (std::size_t i = 0; i < pts.size(); i++) {
        if (!pts[i].noise.coherence) {
            throw std::invalid_argument("threshold_crossing needs a coherence sweep");
        }
        double m = pts[i].stats.mean_success;
        if (m < threshold) {
            continue;
        }
        double t_hi = pts[i].noise.coherence->t1;
        if (i == 0) {
            return t_hi;
        }
        double t_lo = pts[i - 1].noise.coherence->t1;
        double m_lo = pts[i - 1].stats.mean_success;
        double frac = (threshold - m_lo) / (m - m_lo);
        return std::exp(std::log(t_lo) + frac * (std::log(t_hi) - std::log(t_lo)));
    }
    return std::numeric_limits<double>::quiet_NaN();
}

double threshold_crossing_fit(const SweepResult &sweep, double threshold, double log_window) {
    double raw = threshold_crossing(sweep, threshold);
    if (std::isnan(raw) || !(log_window > 0)) {
        return raw;
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t n = 0;
    for (const auto &p : sweep.points) {
        double x = std::log(p.noise.coherence->t1);
        if (std::abs(x - std::log(raw)) > log_window) {
            continue;
        }
        double y = p.stats.mean_success;
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        n++;
    }
    if (n < 3) {
        return raw;
    }
    double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    if (!(slope > 0)) {
        return raw;
    }
    double intercept = (sy - slope * sx) / n;
    return std::exp((threshold - intercept) / slope);
}

InjectionResult inject_single_error(const Circuit &circuit, std::size_t moment, Node qubit, bool outcome) {
    if (moment >= circuit.moments().size()) {
        throw std::out_of_range("moment index " + std::to_string(moment) + " out of range");
    }
    if (qubit >= circuit.num_qubits()) {
        throw std::out_of_range("qubit index " + std::to_string(qubit) + " out of range");
    }
    StateVector state = circuit.initial_state();
    const auto &moments = circuit.moments();
    InjectionResult result{moment, qubit, outcome, 0, false};
    for (std::size_t i = 0; i < moments.size(); i++) {
        for (const auto &op : moments[i].ops) {
            apply_ideal(state, op);
        }
        if (i == moment) {
            if (state.status(qubit) == QubitStatus::Superposed) {
                state.collapse(qubit, outcome);
            } else {
                result.vacuous = true;
            }
        }
    }
    result.success = circuit.metric().evaluate(state);
    return result;
}

std::vector<InjectionResult> inject_study(const Circuit &circuit) {
    std::vector<InjectionResult> rows;
    for (std::size_t m = 0; m < circuit.moments().size(); m++) {
        for (Node q = 0; q < circuit.num_qubits(); q++) {
            for (bool outcome : {false, true}) {
                rows.push_back(inject_single_error(circuit, m, q, outcome));
            }
        }
    }
    return rows;
}

std::string injections_to_csv(const Circuit &circuit, const std::vector<InjectionResult> &rows) {
    std::ostringstream out;
    out << "moment,qubit,outcome,success,vacuous\n";
    for (const auto &r : rows) {
        out << r.moment << ',' << circuit.layout().name(r.qubit) << ',' << (r.outcome ? 1 : 0) << ','
            << fmt6(r.success) << ',' << (r.vacuous ? 1 : 0) << '\n';
    }
    return out.str();
}

}  // namespace noisim
