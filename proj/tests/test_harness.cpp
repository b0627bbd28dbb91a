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

#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "noisim/harness.hpp"

using namespace noisim;

TEST(Harness, trial_seeds_are_distinct) {
    std::set<std::uint64_t> seen;
    for (std::uint64_t p = 0; p < 20; p++) {
        for (std::uint64_t t = 0; t < 500; t++) {
            seen.insert(trial_seed(1, p, t));
        }
    }
    EXPECT_EQ(seen.size(), 20u * 500u);
    EXPECT_EQ(trial_seed(5, 2, 3), trial_seed(5, 2, 3));
    EXPECT_NE(trial_seed(5, 2, 3), trial_seed(6, 2, 3));
}

TEST(Harness, default_trials) {
    EXPECT_EQ(default_trials(Algorithm::BV), 10000u);
    EXPECT_EQ(default_trials(Algorithm::QFT), 10000u);
    EXPECT_EQ(default_trials(Algorithm::Grover1), 2000u);
    EXPECT_EQ(default_trials(Algorithm::Grover2), 1500u);
    EXPECT_EQ(default_trials(Algorithm::Grover3), 1000u);
}

TEST(Aggregate, examples) {
    auto s = aggregate(std::vector<TrialOutcome>(5, {1.0, 1.0, 0}));
    EXPECT_EQ(s.mean_success, 1.0);
    EXPECT_EQ(s.std_success, 0.0);
    EXPECT_EQ(s.zero_error_fraction, 1.0);

    s = aggregate(std::vector<TrialOutcome>{{0, 0, 0}, {1, 1, 2}, {0, 0, 2}, {1, 1, 0}});
    EXPECT_DOUBLE_EQ(s.mean_success, 0.5);
    EXPECT_DOUBLE_EQ(s.std_success, 0.5);
    EXPECT_EQ(s.error_histogram, (std::vector<std::size_t>{2, 0, 2}));
    EXPECT_DOUBLE_EQ(s.errcount_mean[0], 0.5);
    EXPECT_TRUE(std::isnan(s.errcount_mean[1]));
    EXPECT_DOUBLE_EQ(s.errcount_mean[2], 0.5);
    EXPECT_DOUBLE_EQ(s.zero_error_fraction, 0.5);

    EXPECT_THROW(aggregate(std::vector<TrialOutcome>{}), std::invalid_argument);
}

TEST(Harness, combined_grid_recurrence) {
    auto grid = combined_grid(40);
    ASSERT_EQ(grid.size(), 40u);
    EXPECT_EQ(grid[0].first, 0.99);
    EXPECT_EQ(grid[0].second, 20.0);
    EXPECT_NEAR(grid[1].first, 0.991, 1e-15);
    EXPECT_NEAR(grid[1].second, 21.0, 1e-12);
    EXPECT_NEAR(grid[2].first, 0.9919, 1e-15);
    EXPECT_NEAR(grid[2].second, 22.05, 1e-12);
    for (std::size_t k = 1; k < grid.size(); k++) {
        EXPECT_EQ(grid[k].first, 0.9 * grid[k - 1].first + 0.1);
        EXPECT_EQ(grid[k].second, 1.05 * grid[k - 1].second);
    }
}

TEST(Sweep, perfect_points) {
    SweepOptions opt;
    opt.trials = 50;
    auto r = sweep_fidelity(Algorithm::QFT, {1.0}, DistributionKind::P1, opt);
    EXPECT_NEAR(r.points[0].stats.mean_success, 1.0, 1e-12);
    EXPECT_NEAR(r.points[0].stats.std_success, 0.0, 1e-9);
    r = sweep_coherence(Algorithm::BV, {1e9}, opt);
    EXPECT_NEAR(r.points[0].stats.mean_success, 1.0, 1e-12);
    EXPECT_EQ(r.points[0].stats.zero_error_fraction, 1.0);
    EXPECT_THROW(sweep_fidelity(Algorithm::BV, {}, DistributionKind::P1, opt), std::invalid_argument);
    EXPECT_THROW(sweep_fidelity(Algorithm::BV, {1.5}, DistributionKind::P1, opt), std::invalid_argument);
    EXPECT_THROW(sweep_coherence(Algorithm::BV, {-1}, opt), std::invalid_argument);
}

TEST(Sweep, histogram_sums_to_trials) {
    SweepOptions opt;
    opt.trials = 300;
    auto r = sweep_coherence(Algorithm::BV, {10, 40}, opt);
    for (const auto &p : r.points) {
        std::size_t total = 0;
        for (auto c : p.stats.error_histogram) {
            total += c;
        }
        EXPECT_EQ(total, 300u);
        EXPECT_EQ(p.noise.coherence->t1_star, p.noise.coherence->t1 / 2);
    }
}

TEST(Sweep, csv_identical_across_worker_counts) {
    SweepOptions opt;
    opt.trials = 200;
    opt.seed = 77;
    opt.workers = 1;
    auto one = sweep_combined(Algorithm::CCNOT, 3, opt).to_csv();
    opt.workers = 3;
    auto three = sweep_combined(Algorithm::CCNOT, 3, opt).to_csv();
    EXPECT_EQ(one, three);
    opt.seed = 78;
    EXPECT_NE(one, sweep_combined(Algorithm::CCNOT, 3, opt).to_csv());
}

TEST(Sweep, csv_layout) {
    SweepOptions opt;
    opt.trials = 100;
    auto csv = sweep_fidelity(Algorithm::Grover1, {0.99}, DistributionKind::P2, opt).to_csv();
    std::istringstream in(csv);
    std::string comment, header, row, extra;
    std::getline(in, comment);
    std::getline(in, header);
    std::getline(in, row);
    EXPECT_EQ(comment.front(), '#');
    EXPECT_EQ(header.rfind("algorithm,dist,avg_fidelity,t1_us,t1_star_us,trials,mean_success,std_success,"
                           "zero_error_fraction,analytic_zero_error,errcount_0_mean",
                           0),
              0u);
    EXPECT_EQ(row.rfind("grover1,p2,0.99,inf,inf,100,", 0), 0u) << row;
    EXPECT_FALSE(std::getline(in, extra));

    auto coh = sweep_coherence(Algorithm::BV, {30}, opt).to_csv();
    EXPECT_NE(coh.find("\nbv,none,1,30,15,100,"), std::string::npos) << coh;
}

TEST(Sweep, threshold_crossing_interpolates_in_log) {
    SweepResult r;
    for (auto [t1, mean] : std::vector<std::pair<double, double>>{{10, 0.5}, {20, 0.8}, {40, 0.95}}) {
        SweepPoint p;
        p.noise.coherence = CoherenceSpec::from_t1(t1);
        p.stats.mean_success = mean;
        r.points.push_back(p);
    }
    double want = std::exp(std::log(20) + (0.9 - 0.8) / (0.95 - 0.8) * (std::log(40) - std::log(20)));
    EXPECT_NEAR(threshold_crossing(r, 0.9), want, 1e-12);
    EXPECT_EQ(threshold_crossing(r, 0.4), 10.0);
    EXPECT_TRUE(std::isnan(threshold_crossing(r, 0.99)));
}

TEST(Inject, examples) {
    auto bv = build_algorithm(Algorithm::BV);
    // Q2 stays |0> at the start: vacuous.
    auto v = inject_single_error(bv, 0, bv.layout().computational(2), true);
    EXPECT_TRUE(v.vacuous);
    EXPECT_NEAR(v.success, 1.0, 1e-12);

    // Last moment: every qubit is classical, so any collapse is vacuous or onto the answer.
    std::size_t last = bv.moments().size() - 1;
    for (Node q = 0; q < bv.num_qubits(); q++) {
        auto r = inject_single_error(bv, last, q, bv.metric().target.marginal_one(q) > 0.5);
        EXPECT_NEAR(r.success, 1.0, 1e-12);
    }

    // Right after the opening Hadamards Q1 is superposed.
    auto h = inject_single_error(bv, 1, bv.layout().computational(1), false);
    EXPECT_FALSE(h.vacuous);
    EXPECT_LT(h.success, 1.0);

    EXPECT_THROW(inject_single_error(bv, bv.moments().size(), 0, false), std::out_of_range);
    EXPECT_THROW(inject_single_error(bv, 0, 7, false), std::out_of_range);
}

TEST(Inject, study_covers_every_combination) {
    auto c = build_algorithm(Algorithm::CCNOT);
    auto rows = inject_study(c);
    EXPECT_EQ(rows.size(), c.moments().size() * c.num_qubits() * 2);
    auto csv = injections_to_csv(c, rows);
    EXPECT_EQ(csv.rfind("moment,qubit,outcome,success,vacuous\n0,Q1,0,", 0), 0u) << csv.substr(0, 80);
}

TEST(Sweep, fitted_crossing_on_linear_data) {
    SweepResult r;
    for (double t1 = 10; t1 < 400; t1 *= 1.3) {
        SweepPoint p;
        p.noise.coherence = CoherenceSpec::from_t1(t1);
        p.stats.mean_success = 0.2 + 0.15 * std::log(t1);
        r.points.push_back(p);
    }
    double want = std::exp((0.9 - 0.2) / 0.15);
    EXPECT_NEAR(threshold_crossing_fit(r, 0.9, 0.7), want, 1e-9 * want);
    EXPECT_NEAR(threshold_crossing_fit(r, 0.9, 0.01), threshold_crossing(r, 0.9), 1e-12);
    EXPECT_TRUE(std::isnan(threshold_crossing_fit(r, 1.5, 0.7)));
}
