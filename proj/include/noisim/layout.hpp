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

#ifndef NOISIM_LAYOUT_HPP
#define NOISIM_LAYOUT_HPP

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace noisim {

/// Index of a physical qubit inside a Layout. Computational qubits come
/// first (Q1 is node 0), then ancillas level by level, the root ancilla last.
/// The node index doubles as the qubit index in the simulated register.
using Node = std::size_t;

enum class GateKind { X, H, T, Tdg, Phase, CNOT };

const char *to_string(GateKind kind);

/// One gate application. For CNOT, qubits[0] is the control.
struct GateOp {
    GateKind kind = GateKind::X;
    std::array<Node, 2> qubits{};
    double angle = 0;  // Phase only

    static GateOp single(GateKind kind, Node q, double angle = 0);
    static GateOp cnot(Node control, Node target);

    std::size_t arity() const { return kind == GateKind::CNOT ? 2 : 1; }
    bool touches(Node q) const;

    bool operator==(const GateOp &) const = default;
};

/// The binary-tree qubit layout: 2^N computational qubits on top, 2^N - 1
/// ancillas below. Each computational pair shares an edge and hangs off one
/// level-1 ancilla; sibling ancillas share an edge and connect to a common
/// parent. Computational qubits have degree 2, ancillas degree 4 except the
/// root which has degree 2.
class Layout {
   public:
    /// Throws std::invalid_argument for level < 1 (or absurdly large levels).
    static Layout build(std::size_t level);

    std::size_t level() const { return level_; }
    std::size_t num_computational() const { return std::size_t{1} << level_; }
    std::size_t num_ancillas() const { return num_computational() - 1; }
    std::size_t num_qubits() const { return 2 * num_computational() - 1; }

    bool is_computational(Node n) const { return n < num_computational(); }
    Node computational(std::size_t i) const;  // 1-based, Q_i
    Node ancilla(std::size_t i) const;        // 1-based, a_i

    /// "Q3" / "a2".
    std::string name(Node n) const;
    /// Inverse of name(). Throws std::invalid_argument for unknown labels.
    Node parse(const std::string &label) const;

    const std::vector<Node> &neighbors(Node n) const;
    bool adjacent(Node a, Node b) const;
    std::size_t degree(Node n) const { return neighbors(n).size(); }

    /// Undirected edges with first < second, sorted.
    std::vector<std::pair<Node, Node>> edges() const;

    /// One edge per line: "Q1 a1".
    std::string edge_list() const;

   private:
    explicit Layout(std::size_t level);
    void connect(Node a, Node b);
    void check_node(Node n) const;

    std::size_t level_;
    std::vector<std::vector<Node>> adj_;
};

/// Hop count of a shortest path. Throws std::out_of_range for unknown nodes.
std::size_t distance(const Layout &layout, Node a, Node b);

/// A shortest path from a to b inclusive. Ties break toward the lower node
/// index at each step, so the result is deterministic.
std::vector<Node> shortest_path(const Layout &layout, Node a, Node b);

/// Long-range CNOT as nearest-neighbour CNOTs along a shortest path
/// m0..md: copy the control down the chain, hit the target, uncopy.
/// Uses 2d - 1 gates and leaves every intermediate node as it found it,
/// provided the intermediates start in |0>.
std::vector<GateOp> route_cnot(const Layout &layout, Node control, Node target);

struct Violation {
    std::size_t op_index;
    Node a;
    Node b;
    std::string message;
};

/// Lists every two-qubit op whose pair is not an edge (and any op naming a
/// node outside the layout). Empty means the sequence is valid.
std::vector<Violation> validate_circuit(const Layout &layout, const std::vector<GateOp> &ops);

}  // namespace noisim

#endif
