#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qpm/gate.hpp"
#include "qpm/statevector.hpp"

namespace qpm {

// Ordered gate list over a fixed qubit count. Immutable once built; use
// CircuitBuilder to assemble one.
class Circuit {
public:
    Circuit(std::uint32_t num_qubits, std::vector<GateOp> ops, std::string name = "");

    std::uint32_t num_qubits() const { return num_qubits_; }
    const std::vector<GateOp>& ops() const { return ops_; }
    const std::string& name() const { return name_; }

    // Structural equality compares qubit count and ops. The name is a label
    // only: serialization writes it as a comment, which the parser (by
    // design) cannot tell apart from any other comment.
    bool operator==(const Circuit& other) const {
        return num_qubits_ == other.num_qubits_ && ops_ == other.ops_;
    }

private:
    std::uint32_t num_qubits_;
    std::vector<GateOp> ops_;
    std::string name_;
};

class CircuitBuilder {
public:
    explicit CircuitBuilder(std::uint32_t num_qubits, std::string name = "")
        : num_qubits_(num_qubits), name_(std::move(name)) {}

    CircuitBuilder& add(GateOp op);

    Circuit build() && { return Circuit(num_qubits_, std::move(ops_), std::move(name_)); }

private:
    std::uint32_t num_qubits_;
    std::string name_;
    std::vector<GateOp> ops_;
};

// Applies the circuit's ops in order to the given state.
StateVector execute(const Circuit& circuit, StateVector initial);

} // namespace qpm
