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

#ifndef NOISIM_STATEVECTOR_HPP
#define NOISIM_STATEVECTOR_HPP

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace noisim {

using Amplitude = std::complex<double>;

/// Norm tolerance enforced on every state produced by a unitary step.
inline constexpr double kNormTolerance = 1e-10;

/// Unitarity tolerance (per entry of U^dagger U - I).
inline constexpr double kUnitaryTolerance = 1e-12;

/// Marginal probabilities within this distance of 0 or 1 count as definite.
inline constexpr double kClassifyTolerance = 1e-9;

/// A dense 2x2 or 4x4 unitary, stored row-major.
///
/// For 4x4 gates the row/column index is (first << 1) | second, where
/// "first" is the control qubit of apply_two.
class GateMatrix {
   public:
    /// Throws std::invalid_argument unless `dim` is 2 or 4, the entry count
    /// matches, and the matrix is unitary within kUnitaryTolerance.
    GateMatrix(std::size_t dim, std::vector<Amplitude> entries);

    static GateMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    const Amplitude &operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
    std::span<const Amplitude> entries() const { return entries_; }

    GateMatrix operator*(const GateMatrix &rhs) const;
    GateMatrix adjoint() const;
    GateMatrix transpose() const;

    /// Largest |(U^dagger U - I)_ij|.
    double unitarity_error() const;

    /// Kronecker product a (x) b of two 2x2 gates, `a` acting on the first qubit.
    static GateMatrix kron(const GateMatrix &a, const GateMatrix &b);

    bool operator==(const GateMatrix &other) const = default;

   private:
    struct Unchecked {};
    GateMatrix(Unchecked, std::size_t dim, std::vector<Amplitude> entries);

    std::size_t dim_;
    std::vector<Amplitude> entries_;
};

enum class QubitStatus { DefiniteZero, DefiniteOne, Superposed };

const char *to_string(QubitStatus status);

/// Pure state of n qubits. Qubit 0 is the most significant bit of the basis
/// index, so basis index 0b1010 on four qubits is the ket |1010>.
class StateVector {
   public:
    /// |basis_index> on n_qubits. Throws std::out_of_range for a bad index.
    static StateVector basis(std::size_t n_qubits, std::uint64_t basis_index);

    /// Wraps raw amplitudes. Throws std::invalid_argument unless the length is
    /// a power of two and the norm is 1 within kNormTolerance.
    static StateVector from_amplitudes(std::vector<Amplitude> amps);

    std::size_t num_qubits() const { return n_qubits_; }
    std::size_t size() const { return amps_.size(); }
    const Amplitude &operator[](std::size_t index) const { return amps_[index]; }
    std::span<const Amplitude> amplitudes() const { return amps_; }

    /// Bit mask selecting qubit q inside a basis index.
    std::uint64_t mask(std::size_t q) const;

    void apply_single(const GateMatrix &gate, std::size_t q);
    void apply_two(const GateMatrix &gate, std::size_t q_control, std::size_t q_target);

    /// Probability that qubit q reads 1.
    double marginal_one(std::size_t q) const;
    QubitStatus status(std::size_t q) const;

    /// Projects qubit q onto `outcome` and renormalizes. Throws
    /// std::domain_error if the outcome has zero probability.
    void collapse(std::size_t q, bool outcome);

    /// Energy relaxation of a qubit sitting in |1>: project onto 1, then map
    /// every amplitude to the matching bit-0 basis state.
    void relax(std::size_t q);

    double norm_squared() const;

    bool operator==(const StateVector &other) const = default;

   private:
    StateVector(std::size_t n_qubits, std::vector<Amplitude> amps);
    void check_qubit(std::size_t q) const;

    std::size_t n_qubits_;
    std::vector<Amplitude> amps_;
};

StateVector init_basis(std::size_t n_qubits, std::uint64_t basis_index);
StateVector apply_single(StateVector state, const GateMatrix &gate, std::size_t q);
StateVector apply_two(StateVector state, const GateMatrix &gate, std::size_t q_control, std::size_t q_target);

/// <a|b>, conjugating `a`. Throws std::invalid_argument on a size mismatch.
Amplitude inner_product(const StateVector &a, const StateVector &b);

double marginal_one(const StateVector &state, std::size_t q);
QubitStatus qubit_status(const StateVector &state, std::size_t q);
StateVector collapse(StateVector state, std::size_t q, bool outcome);

namespace gates {

GateMatrix x();
GateMatrix h();
GateMatrix t();
GateMatrix tdg();
/// diag(1, e^{i phi}).
GateMatrix phase(double phi);
/// Control is the first (most significant) qubit of the 4x4 index.
GateMatrix cnot();

}  // namespace gates

}  // namespace noisim

#endif
