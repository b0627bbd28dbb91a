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

#include "noisim/engine.hpp"
#include "test_util.hpp"

using namespace noisim;

namespace {

const Algorithm kAll[] = {Algorithm::BV, Algorithm::CCNOT, Algorithm::QFT,
                          Algorithm::Grover1, Algorithm::Grover2, Algorithm::Grover3};

}  // namespace

TEST(Engine, noiseless_anchors) {
    for (auto alg : kAll) {
        auto c = build_algorithm(alg);
        EXPECT_NEAR(evaluate_success(c.metric(), run_noiseless(c)), 1.0, 1e-9) << to_string(alg);
    }
    auto g1 = build_algorithm(Algorithm::Grover1);
    EXPECT_NEAR(g1.metric().overlap(run_noiseless(g1)), 0.4727, 5e-4);
}

TEST(Engine, perfect_noise_reduces_to_noiseless) {
    for (auto alg : kAll) {
        auto c = build_algorithm(alg);
        auto ideal = run_noiseless(c);
        auto f = run_fidelity(c, {1.0, DistributionKind::P1}, 42);
        EXPECT_EQ(f.final_state, ideal) << to_string(alg);
        EXPECT_TRUE(f.error_events.empty());
        auto d = run_decoherence(c, CoherenceSpec::from_t1(1e9), 42);
        EXPECT_EQ(d.final_state, ideal) << to_string(alg);
        EXPECT_TRUE(d.error_events.empty());
        auto both = run_combined(c, {1.0, DistributionKind::P2}, CoherenceSpec::from_t1(1e9), 7);
        EXPECT_EQ(both.final_state, ideal);
        EXPECT_EQ(run_trial(c, NoiseConfig{}, 3).final_state, ideal);
    }
}

TEST(Engine, deterministic_per_seed) {
    auto c = build_algorithm(Algorithm::QFT);
    FidelitySpec f{0.98, DistributionKind::P1};
    auto coh = CoherenceSpec::from_t1(20);
    auto a = run_combined(c, f, coh, 99);
    auto b = run_combined(c, f, coh, 99);
    EXPECT_EQ(a.final_state, b.final_state);
    EXPECT_EQ(a.error_events, b.error_events);
    EXPECT_EQ(a.epsilon_draw_count, b.epsilon_draw_count);
    EXPECT_EQ(a.success, b.success);
    auto other = run_combined(c, f, coh, 100);
    EXPECT_NE(a.final_state, other.final_state);
}

TEST(Engine, epsilon_draw_count) {
    auto c = build_algorithm(Algorithm::BV);
    std::uint64_t want = 0;
    for (const auto &op : c.flat_ops()) {
        want += op.arity();
    }
    EXPECT_EQ(run_fidelity(c, {0.99, DistributionKind::P1}, 1).epsilon_draw_count, want);
}

TEST(Engine, fidelity_noise_lowers_success) {
    auto c = build_algorithm(Algorithm::BV);
    double sum = 0;
    for (std::uint64_t s = 0; s < 200; s++) {
        auto r = run_fidelity(c, {0.9, DistributionKind::P1}, s);
        EXPECT_NEAR(r.final_state.norm_squared(), 1.0, 1e-10);
        EXPECT_GE(r.success, 0.0);
        EXPECT_LE(r.success, 1.0 + 1e-12);
        sum += r.success;
    }
    EXPECT_LT(sum / 200, 0.9);
}

TEST(Engine, decoherence_events_are_consistent) {
    for (auto alg : {Algorithm::BV, Algorithm::Grover1}) {
        auto c = build_algorithm(alg);
        for (std::uint64_t s = 0; s < 100; s++) {
            auto r = run_decoherence(c, CoherenceSpec::from_t1(5), s);
            EXPECT_NEAR(r.final_state.norm_squared(), 1.0, 1e-10);
            std::size_t last = 0;
            for (const auto &e : r.error_events) {
                EXPECT_GE(e.moment_index, last);
                last = e.moment_index;
                EXPECT_LT(e.moment_index, c.moments().size());
                if (e.kind == DecoherenceKind::T1) {
                    EXPECT_FALSE(e.outcome);
                }
            }
            // Replaying the logged collapses reproduces the state.
            auto replay = run_with_events(c, std::nullopt, r.error_events, s);
            noisim::testing::expect_amps_near(replay.final_state.amplitudes(), r.final_state.amplitudes(), 1e-12);
            EXPECT_DOUBLE_EQ(replay.success, r.success);
        }
    }
}

TEST(Engine, combined_replay_uses_gate_stream) {
    auto c = build_algorithm(Algorithm::CCNOT);
    FidelitySpec f{0.97, DistributionKind::P2};
    for (std::uint64_t s = 0; s < 30; s++) {
        auto r = run_combined(c, f, CoherenceSpec::from_t1(10), s);
        auto replay = run_with_events(c, f, r.error_events, s);
        noisim::testing::expect_amps_near(replay.final_state.amplitudes(), r.final_state.amplitudes(), 1e-12);
    }
}

TEST(Engine, metric_examples) {
    auto bv = build_algorithm(Algorithm::BV);
    std::vector<Amplitude> amps(128);
    for (std::size_t r = 0; r < 16; r++) {
        amps[(r << 3) | 0b100] = 0.25;
    }
    EXPECT_NEAR(evaluate_success(bv.metric(), StateVector::from_amplitudes(amps)), 1.0 / 16, 1e-15);
    EXPECT_THROW(evaluate_success(bv.metric(), init_basis(3, 0)), std::invalid_argument);

    auto g3 = build_algorithm(Algorithm::Grover3);
    EXPECT_NEAR(g3.metric().prefactor, 1 / grover_ideal_probability(3), 1e-15);
    EXPECT_NEAR(evaluate_success(g3.metric(), run_noiseless(g3)), 1.0, 1e-6);
}

TEST(Engine, analytic_zero_error) {
    auto c = build_algorithm(Algorithm::BV);
    auto timing = timing_summary(c, c.gate_times());
    CoherenceSpec spec{40, 20};
    double want = std::exp(-timing.total_excited_time() / 40 - timing.total_superposed_time() / 20);
    EXPECT_NEAR(analytic_zero_error(timing, spec), want, 1e-15);
    EXPECT_NEAR(analytic_zero_error(timing, {1e12, 1e12}), 1.0, 1e-9);
}

TEST(Engine, splitmix_is_injective_on_sample) {
    std::set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < 10000; i++) {
        seen.insert(splitmix64(i));
    }
    EXPECT_EQ(seen.size(), 10000u);
}
