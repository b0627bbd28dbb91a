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

#include "noisim/statevector.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace noisim {

namespace {

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

}  // namespace

GateMatrix::GateMatrix(Unchecked, std::size_t dim, std::vector<Amplitude> entries)
    : dim_(dim), entries_(std::move(entries)) {
}

GateMatrix::GateMatrix(std::size_t dim, std::vector<Amplitude> entries) : dim_(dim), entries_(std::move(entries)) {
    if (dim_ != 2 && dim_ != 4) {
        throw std::invalid_argument("gate dimension must be 2 or 4, got " + std::to_string(dim_));
    }
    if (entries_.size() != dim_ * dim_) {
        throw std::invalid_argument("gate entry count does not match its dimension");
    }
    for (const auto &e : entries_) {
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) {
            throw std::invalid_argument("gate has a non-finite entry");
        }
    }
    if (unitarity_error() > kUnitaryTolerance) {
        throw std::invalid_argument("gate is not unitary");
    }
}

GateMatrix GateMatrix::identity(std::size_t dim) {
    std::vector<Amplitude> e(dim * dim);
    for (std::size_t i = 0; i < dim; i++) {
        e[i * dim + i] = 1.0;
    }
    return GateMatrix(dim, std::move(e));
}

GateMatrix GateMatrix::operator*(const GateMatrix &rhs) const {
    if (dim_ != rhs.dim_) {
        throw std::invalid_argument("gate dimension mismatch");
    }
    std::vector<Amplitude> e(dim_ * dim_);
    for (std::size_t r = 0; r < dim_; r++) {
        for (std::size_t c = 0; c < dim_; c++) {
            Amplitude acc = 0;
            for (std::size_t k = 0; k < dim_; k++) {
                acc += (*this)(r, k) * rhs(k, c);
            }
            e[r * dim_ + c] = acc;
        }
    }
    return GateMatrix(Unchecked{}, dim_, std::move(e));
}

GateMatrix GateMatrix::adjoint() const {
    std::vector<Amplitude> e(dim_ * dim_);
    for (std::size_t r = 0; r < dim_; r++) {
        for (std::size_t c = 0; c < dim_; c++) {
            e[c * dim_ + r] = std::conj((*this)(r, c));
        }
    }
    return GateMatrix(Unchecked{}, dim_, std::move(e));
}

GateMatrix GateMatrix::transpose() const {
    std::vector<Amplitude> e(dim_ * dim_);
    for (std::size_t r = 0; r < dim_; r++) {
        for (std::size_t c = 0; c < dim_; c++) {
            e[c * dim_ + r] = (*this)(r, c);
        }
    }
    return GateMatrix(Unchecked{}, dim_, std::move(e));
}

double GateMatrix::unitarity_error() const {
    double worst = 0;
    for (std::size_t r = 0; r < dim_; r++) {
        for (std::size_t c = 0; c < dim_; c++) {
            Amplitude acc = 0;
            for (std::size_t k = 0; k < dim_; k++) {
                acc += std::conj((*this)(k, r)) * (*this)(k, c);
            }
            if (r == c) {
                acc -= 1.0;
            }
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

GateMatrix GateMatrix::kron(const GateMatrix &a, const GateMatrix &b) {
    if (a.dim_ != 2 || b.dim_ != 2) {
        throw std::invalid_argument("kron expects two 2x2 gates");
    }
    std::vector<Amplitude> e(16);
    for (std::size_t r = 0; r < 4; r++) {
        for (std::size_t c = 0; c < 4; c++) {
            e[r * 4 + c] = a(r >> 1, c >> 1) * b(r & 1, c & 1);
        }
    }
    return GateMatrix(Unchecked{}, 4, std::move(e));
}

const char *to_string(QubitStatus status) {
    switch (status) {
        case QubitStatus::DefiniteZero:
            return "DefiniteZero";
        case QubitStatus::DefiniteOne:
            return "DefiniteOne";
        case QubitStatus::Superposed:
            return "Superposed";
    }
    return "?";
}

StateVector::StateVector(std::size_t n_qubits, std::vector<Amplitude> amps)
    : n_qubits_(n_qubits), amps_(std::move(amps)) {
}

StateVector StateVector::basis(std::size_t n_qubits, std::uint64_t basis_index) {
    if (n_qubits == 0 || n_qubits > 30) {
        throw std::out_of_range("qubit count must be in [1, 30]");
    }
    std::size_t size = std::size_t{1} << n_qubits;
    if (basis_index >= size) {
        throw std::out_of_range("basis index " + std::to_string(basis_index) + " out of range for " +
                                std::to_string(n_qubits) + " qubits");
    }
    std::vector<Amplitude> amps(size);
    amps[basis_index] = 1.0;
    return StateVector(n_qubits, std::move(amps));
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amps) {
    if (!is_power_of_two(amps.size()) || amps.size() < 2) {
        throw std::invalid_argument("amplitude count must be a power of two >= 2");
    }
    std::size_t n = 0;
    while ((std::size_t{1} << n) < amps.size()) {
        n++;
    }
    StateVector s(n, std::move(amps));
    for (const auto &a : s.amps_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::invalid_argument("non-finite amplitude");
        }
    }
    if (std::abs(s.norm_squared() - 1.0) > kNormTolerance) {
        throw std::invalid_argument("state is not normalized");
    }
    return s;
}

std::uint64_t StateVector::mask(std::size_t q) const {
    check_qubit(q);
    return std::uint64_t{1} << (n_qubits_ - 1 - q);
}

void StateVector::check_qubit(std::size_t q) const {
    if (q >= n_qubits_) {
        throw std::out_of_range("qubit " + std::to_string(q) + " out of range for " + std::to_string(n_qubits_) +
                                " qubits");
    }
}

void StateVector::apply_single(const GateMatrix &gate, std::size_t q) {
    if (gate.dim() != 2) {
        throw std::invalid_argument("apply_single needs a 2x2 gate");
    }
    std::uint64_t m = mask(q);
    Amplitude u00 = gate(0, 0), u01 = gate(0, 1), u10 = gate(1, 0), u11 = gate(1, 1);
    for (std::uint64_t i = 0; i < amps_.size(); i++) {
        if (i & m) {
            continue;
        }
        Amplitude a0 = amps_[i];
        Amplitude a1 = amps_[i | m];
        amps_[i] = u00 * a0 + u01 * a1;
        amps_[i | m] = u10 * a0 + u11 * a1;
    }
}

void StateVector::apply_two(const GateMatrix &gate, std::size_t q_control, std::size_t q_target) {
    if (gate.dim() != 4) {
        throw std::invalid_argument("apply_two needs a 4x4 gate");
    }
    if (q_control == q_target) {
        throw std::invalid_argument("apply_two needs two distinct qubits");
    }
    std::uint64_t mc = mask(q_control);
    std::uint64_t mt = mask(q_target);
    std::array<std::uint64_t, 4> offsets{0, mt, mc, mc | mt};
    for (std::uint64_t i = 0; i < amps_.size(); i++) {
        if (i & (mc | mt)) {
            continue;
        }
        std::array<Amplitude, 4> in;
        for (std::size_t k = 0; k < 4; k++) {
            in[k] = amps_[i | offsets[k]];
        }
        for (std::size_t r = 0; r < 4; r++) {
            Amplitude acc = 0;
            for (std::size_t c = 0; c < 4; c++) {
                acc += gate(r, c) * in[c];
            }
            amps_[i | offsets[r]] = acc;
        }
    }
}

double StateVector::marginal_one(std::size_t q) const {
    std::uint64_t m = mask(q);
    double p = 0;
    for (std::uint64_t i = 0; i < amps_.size(); i++) {
        if (i & m) {
            p += std::norm(amps_[i]);
        }
    }
    return std::min(1.0, std::max(0.0, p));
}

QubitStatus StateVector::status(std::size_t q) const {
    double p1 = marginal_one(q);
    if (p1 > 1.0 - kClassifyTolerance) {
        return QubitStatus::DefiniteOne;
    }
    if (p1 < kClassifyTolerance) {
        return QubitStatus::DefiniteZero;
    }
    return QubitStatus::Superposed;
}

void StateVector::collapse(std::size_t q, bool outcome) {
    std::uint64_t m = mask(q);
    double kept = 0;
    for (std::uint64_t i = 0; i < amps_.size(); i++) {
        if (((i & m) != 0) == outcome) {
            kept += std::norm(amps_[i]);
        }
    }
    if (kept <= 0) {
        throw std::domain_error("collapse onto a zero-probability outcome");
    }
    double scale = 1.0 / std::sqrt(kept);
    for (std::uint64_t i = 0; i < amps_.size(); i++) {
        if (((i & m) != 0) == outcome) {
            amps_[i] *= scale;
        } else {
            amps_[i] = 0;
        }
    }
}

void StateVector::relax(std::size_t q) {
    collapse(q, true);
    std::uint64_t m = mask(q);
    for (std::uint64_t i = 0; i < amps_.size(); i++) {
        if (i & m) {
            amps_[i & ~m] = amps_[i];
            amps_[i] = 0;
        }
    }
}

double StateVector::norm_squared() const {
    double total = 0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

StateVector init_basis(std::size_t n_qubits, std::uint64_t basis_index) {
    return StateVector::basis(n_qubits, basis_index);
}

StateVector apply_single(StateVector state, const GateMatrix &gate, std::size_t q) {
    state.apply_single(gate, q);
    return state;
}

StateVector apply_two(StateVector state, const GateMatrix &gate, std::size_t q_control, std::size_t q_target) {
    state.apply_two(gate, q_control, q_target);
    return state;
}

Amplitude inner_product(const StateVector &a, const StateVector &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("inner product of states with different qubit counts");
    }
    Amplitude acc = 0;
    for (std::size_t i = 0; i < a.size(); i++) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

double marginal_one(const StateVector &state, std::size_t q) { return state.marginal_one(q); }

QubitStatus qubit_status(const StateVector &state, std::size_t q) { return state.status(q); }

StateVector collapse(StateVector state, std::size_t q, bool outcome) {
    state.collapse(q, outcome);
    return state;
}

namespace gates {

GateMatrix x() { return GateMatrix(2, {0, 1, 1, 0}); }

GateMatrix h() {
    const double s = 1.0 / std::numbers::sqrt2;
    return GateMatrix(2, {s, s, s, -s});
}

GateMatrix t() { return phase(std::numbers::pi / 4); }

GateMatrix tdg() { return phase(-std::numbers::pi / 4); }

GateMatrix phase(double phi) { return GateMatrix(2, {1, 0, 0, std::polar(1.0, phi)}); }

GateMatrix cnot() {
    return GateMatrix(4, {1, 0, 0, 0,
                          0, 1, 0, 0,
                          0, 0, 0, 1,
                          0, 0, 1, 0});
}

}  // namespace gates

}  // namespace noisim
