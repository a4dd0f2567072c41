#include "qpm/circuit.hpp"

namespace qpm {

namespace {

void check_op_fits(const GateOp& op, std::uint32_t num_qubits) {
    if (op.qubits.empty() || op.max_qubit() >= num_qubits)
        throw Error(Errc::InvalidQubitIndex,
                    std::string(gate_kind_name(op.kind)) + " op does not fit in " +
                        std::to_string(num_qubits) + " qubits");
}

} // namespace

Circuit::Circuit(std::uint32_t num_qubits, std::vector<GateOp> ops, std::string name)
    : num_qubits_(num_qubits), ops_(std::move(ops)), name_(std::move(name)) {
    for (const auto& op : ops_)
        check_op_fits(op, num_qubits_);
}

CircuitBuilder& CircuitBuilder::add(GateOp op) {
    check_op_fits(op, num_qubits_);
    ops_.push_back(std::move(op));
    return *this;
}

StateVector execute(const Circuit& circuit, StateVector initial) {
    if (initial.num_qubits() != circuit.num_qubits())
        throw Error(Errc::QubitCountMismatch,
                    "circuit has " + std::to_string(circuit.num_qubits()) + " qubits, state has " +
                        std::to_string(initial.num_qubits()));
    for (const auto& op : circuit.ops())
        initial.apply(op);
    return initial;
}

} // namespace qpm
