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

#include "noisim/layout.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace noisim {

const char *to_string(GateKind kind) {
    switch (kind) {
        case GateKind::X:
            return "X";
        case GateKind::H:
            return "H";
        case GateKind::T:
            return "T";
        case GateKind::Tdg:
            return "Tdg";
        case GateKind::Phase:
            return "R";
        case GateKind::CNOT:
            return "CNOT";
    }
    return "?";
}

GateOp GateOp::single(GateKind kind, Node q, double angle) {
    if (kind == GateKind::CNOT) {
        throw std::invalid_argument("CNOT needs two qubits");
    }
    return GateOp{kind, {q, q}, angle};
}

GateOp GateOp::cnot(Node control, Node target) {
    if (control == target) {
        throw std::invalid_argument("CNOT control and target must differ");
    }
    return GateOp{GateKind::CNOT, {control, target}, 0};
}

bool GateOp::touches(Node q) const { return qubits[0] == q || (arity() == 2 && qubits[1] == q); }

Layout::Layout(std::size_t level) : level_(level), adj_(2 * (std::size_t{1} << level) - 1) {}

Layout Layout::build(std::size_t level) {
    if (level < 1 || level > 14) {
        throw std::invalid_argument("layout level must be in [1, 14]");
    }
    Layout layout(level);
    std::size_t nc = layout.num_computational();

    // Each pass pairs up the current row and adds one parent ancilla per pair.
    std::vector<Node> below;
    for (std::size_t i = 0; i < nc; i++) {
        below.push_back(i);
    }
    Node next = nc;
    while (below.size() > 1) {
        std::vector<Node> parents;
        for (std::size_t i = 0; i + 1 < below.size(); i += 2) {
            Node p = next++;
            layout.connect(below[i], below[i + 1]);
            layout.connect(below[i], p);
            layout.connect(below[i + 1], p);
            parents.push_back(p);
        }
        below = std::move(parents);
    }
    for (auto &nbrs : layout.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
    }
    return layout;
}

void Layout::connect(Node a, Node b) {
    adj_[a].push_back(b);
    adj_[b].push_back(a);
}

void Layout::check_node(Node n) const {
    if (n >= adj_.size()) {
        throw std::out_of_range("node " + std::to_string(n) + " is not in the layout");
    }
}

Node Layout::computational(std::size_t i) const {
    if (i < 1 || i > num_computational()) {
        throw std::out_of_range("no computational qubit Q" + std::to_string(i));
    }
    return i - 1;
}

Node Layout::ancilla(std::size_t i) const {
    if (i < 1 || i > num_ancillas()) {
        throw std::out_of_range("no ancilla a" + std::to_string(i));
    }
    return num_computational() + i - 1;
}

std::string Layout::name(Node n) const {
    check_node(n);
    if (is_computational(n)) {
        return "Q" + std::to_string(n + 1);
    }
    return "a" + std::to_string(n - num_computational() + 1);
}

Node Layout::parse(const std::string &label) const {
    if (label.size() >= 2 && (label[0] == 'Q' || label[0] == 'q' || label[0] == 'a')) {
        std::size_t pos = 0;
        std::size_t index = 0;
        try {
            index = std::stoul(label.substr(1), &pos);
        } catch (const std::exception &) {
            pos = 0;
        }
        if (pos == label.size() - 1) {
            try {
                return label[0] == 'a' ? ancilla(index) : computational(index);
            } catch (const std::out_of_range &) {
            }
        }
    }
    throw std::invalid_argument("unknown qubit label '" + label + "'");
}

const std::vector<Node> &Layout::neighbors(Node n) const {
    check_node(n);
    return adj_[n];
}

bool Layout::adjacent(Node a, Node b) const {
    const auto &nbrs = neighbors(a);
    check_node(b);
    return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::vector<std::pair<Node, Node>> Layout::edges() const {
    std::vector<std::pair<Node, Node>> out;
    for (Node a = 0; a < adj_.size(); a++) {
        for (Node b : adj_[a]) {
            if (a < b) {
                out.emplace_back(a, b);
            }
        }
    }
    return out;
}

std::string Layout::edge_list() const {
    std::ostringstream out;
    for (const auto &[a, b] : edges()) {
        out << name(a) << ' ' << name(b) << '\n';
    }
    return out.str();
}

std::vector<Node> shortest_path(const Layout &layout, Node a, Node b) {
    layout.neighbors(a);
    layout.neighbors(b);
    constexpr std::size_t unseen = std::numeric_limits<std::size_t>::max();
    // BFS from the target so the walk from `a` can pick the lowest-index
    // neighbour that is one step closer.
    std::vector<std::size_t> dist(layout.num_qubits(), unseen);
    std::deque<Node> queue{b};
    dist[b] = 0;
    while (!queue.empty()) {
        Node cur = queue.front();
        queue.pop_front();
        for (Node n : layout.neighbors(cur)) {
            if (dist[n] == unseen) {
                dist[n] = dist[cur] + 1;
                queue.push_back(n);
            }
        }
    }
    if (dist[a] == unseen) {
        throw std::invalid_argument("nodes are disconnected");
    }
    std::vector<Node> path{a};
    while (path.back() != b) {
        for (Node n : layout.neighbors(path.back())) {
            if (dist[n] + 1 == dist[path.back()]) {
                path.push_back(n);
                break;
            }
        }
    }
    return path;
}

std::size_t distance(const Layout &layout, Node a, Node b) { return shortest_path(layout, a, b).size() - 1; }

std::vector<GateOp> route_cnot(const Layout &layout, Node control, Node target) {
    if (control == target) {
        throw std::invalid_argument("route_cnot needs distinct control and target");
    }
    auto path = shortest_path(layout, control, target);
    std::size_t d = path.size() - 1;
    std::vector<GateOp> ops;
    for (std::size_t i = 0; i + 2 <= d; i++) {
        ops.push_back(GateOp::cnot(path[i], path[i + 1]));
    }
    ops.push_back(GateOp::cnot(path[d - 1], path[d]));
    for (std::size_t i = d - 1; i-- > 0;) {
        ops.push_back(GateOp::cnot(path[i], path[i + 1]));
    }
    return ops;
}

std::vector<Violation> validate_circuit(const Layout &layout, const std::vector<GateOp> &ops) {
    std::vector<Violation> out;
    for (std::size_t i = 0; i < ops.size(); i++) {
        const auto &op = ops[i];
        Node a = op.qubits[0];
        Node b = op.arity() == 2 ? op.qubits[1] : a;
        if (a >= layout.num_qubits() || b >= layout.num_qubits()) {
            out.push_back({i, a, b, "op " + std::to_string(i) + " names a qubit outside the layout"});
            continue;
        }
        if (op.arity() == 2 && !layout.adjacent(a, b)) {
            out.push_back({i, a, b,
                           "op " + std::to_string(i) + ": " + layout.name(a) + "-" + layout.name(b) +
                               " is not an edge"});
        }
    }
    return out;
}

}  // namespace noisim
