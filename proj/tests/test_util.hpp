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

#ifndef NOISIM_TESTS_TEST_UTIL_HPP
#define NOISIM_TESTS_TEST_UTIL_HPP

#include <gtest/gtest.h>

#include <complex>
#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include "noisim/statevector.hpp"

namespace noisim::testing {

using Dense = std::vector<std::vector<Amplitude>>;

inline Dense identity_dense(std::size_t dim) {
    Dense m(dim, std::vector<Amplitude>(dim));
    for (std::size_t i = 0; i < dim; i++) {
        m[i][i] = 1;
    }
    return m;
}

inline Dense to_dense(const GateMatrix &g) {
    Dense m(g.dim(), std::vector<Amplitude>(g.dim()));
    for (std::size_t r = 0; r < g.dim(); r++) {
        for (std::size_t c = 0; c < g.dim(); c++) {
            m[r][c] = g(r, c);
        }
    }
    return m;
}

inline Dense kron(const Dense &a, const Dense &b) {
    std::size_t na = a.size(), nb = b.size();
    Dense m(na * nb, std::vector<Amplitude>(na * nb));
    for (std::size_t i = 0; i < na; i++) {
        for (std::size_t j = 0; j < na; j++) {
            for (std::size_t k = 0; k < nb; k++) {
                for (std::size_t l = 0; l < nb; l++) {
                    m[i * nb + k][j * nb + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    return m;
}

inline Dense matmul(const Dense &a, const Dense &b) {
    std::size_t n = a.size();
    Dense m(n, std::vector<Amplitude>(n));
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t k = 0; k < n; k++) {
            if (a[i][k] == Amplitude(0)) {
                continue;
            }
            for (std::size_t j = 0; j < n; j++) {
                m[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return m;
}

/// I (x) ... (x) U (x) ... (x) I with qubit 0 as the leftmost factor.
inline Dense lift_single(const GateMatrix &u, std::size_t q, std::size_t n) {
    Dense m = {{1}};
    for (std::size_t k = 0; k < n; k++) {
        m = kron(m, k == q ? to_dense(u) : identity_dense(2));
    }
    return m;
}

/// Full-register matrix of a 4x4 gate on (first, second), built entry by entry.
inline Dense lift_two(const GateMatrix &u, std::size_t first, std::size_t second, std::size_t n) {
    std::size_t dim = std::size_t{1} << n;
    auto bit = [n](std::size_t idx, std::size_t q) { return (idx >> (n - 1 - q)) & 1; };
    std::size_t mask = (std::size_t{1} << (n - 1 - first)) | (std::size_t{1} << (n - 1 - second));
    Dense m(dim, std::vector<Amplitude>(dim));
    for (std::size_t r = 0; r < dim; r++) {
        for (std::size_t c = 0; c < dim; c++) {
            if ((r & ~mask) != (c & ~mask)) {
                continue;
            }
            m[r][c] = u(bit(r, first) * 2 + bit(r, second), bit(c, first) * 2 + bit(c, second));
        }
    }
    return m;
}

inline std::vector<Amplitude> matvec(const Dense &m, std::span<const Amplitude> v) {
    std::vector<Amplitude> out(m.size());
    for (std::size_t i = 0; i < m.size(); i++) {
        for (std::size_t j = 0; j < v.size(); j++) {
            out[i] += m[i][j] * v[j];
        }
    }
    return out;
}

inline StateVector random_state(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    std::vector<Amplitude> amps(std::size_t{1} << n);
    double norm = 0;
    for (auto &a : amps) {
        a = Amplitude(normal(rng), normal(rng));
        norm += std::norm(a);
    }
    for (auto &a : amps) {
        a /= std::sqrt(norm);
    }
    return StateVector::from_amplitudes(std::move(amps));
}

inline GateMatrix random_unitary_2(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0, 2 * 3.141592653589793);
    double theta = u(rng) / 2, a = u(rng), b = u(rng), g = u(rng);
    Amplitude ph = std::polar(1.0, g);
    return GateMatrix(2, {ph * std::polar(std::cos(theta), a), -ph * std::polar(std::sin(theta), -b),
                          ph * std::polar(std::sin(theta), b), ph * std::polar(std::cos(theta), -a)});
}

inline void expect_amps_near(std::span<const Amplitude> got, std::span<const Amplitude> want, double tol) {
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t i = 0; i < got.size(); i++) {
        EXPECT_NEAR(got[i].real(), want[i].real(), tol) << "index " << i;
        EXPECT_NEAR(got[i].imag(), want[i].imag(), tol) << "index " << i;
    }
}

}  // namespace noisim::testing

#endif
