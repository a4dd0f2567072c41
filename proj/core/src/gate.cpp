#include "qpm/gate.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace qpm {

namespace {

void require_distinct(const std::vector<std::uint32_t>& qubits) {
    std::unordered_set<std::uint32_t> seen;
    for (auto q : qubits)
        if (!seen.insert(q).second)
            throw Error(Errc::DuplicateQubitIndex, "qubit " + std::to_string(q) + " listed twice");
}

} // namespace

const char* gate_kind_name(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::Ry: return "Ry";
    case GateKind::Rz: return "Rz";
    case GateKind::ControlledX: return "ControlledX";
    case GateKind::ControlledPhase: return "ControlledPhase";
    case GateKind::DenseUnitary: return "DenseUnitary";
    }
    return "?";
}

GateOp GateOp::h(std::uint32_t q) { return {GateKind::H, {q}, 0.0, {}}; }

GateOp GateOp::x(std::uint32_t q) { return {GateKind::X, {q}, 0.0, {}}; }

GateOp GateOp::ry(std::uint32_t q, double angle) { return {GateKind::Ry, {q}, angle, {}}; }

GateOp GateOp::rz(std::uint32_t q, double angle) { return {GateKind::Rz, {q}, angle, {}}; }

GateOp GateOp::controlled_x(std::vector<std::uint32_t> controls, std::uint32_t target) {
    if (controls.empty())
        return x(target); // canonical form, so parse(serialize(.)) is stable
    controls.push_back(target);
    require_distinct(controls);
    return {GateKind::ControlledX, std::move(controls), 0.0, {}};
}

GateOp GateOp::controlled_phase(std::vector<std::uint32_t> qubits, double angle) {
    if (qubits.empty())
        throw Error(Errc::InvalidQubitIndex, "controlled phase needs at least one qubit");
    require_distinct(qubits);
    return {GateKind::ControlledPhase, std::move(qubits), angle, {}};
}

GateOp GateOp::dense_unitary_unchecked(std::vector<std::uint32_t> qubits,
                                       std::vector<cdouble> matrix) {
    if (qubits.empty())
        throw Error(Errc::InvalidQubitIndex, "dense unitary needs at least one qubit");
    require_distinct(qubits);
    const std::uint64_t dim = std::uint64_t(1) << qubits.size();
    if (matrix.size() != dim * dim)
        throw Error(Errc::NonUnitaryMatrix,
                    "matrix has " + std::to_string(matrix.size()) + " entries, expected " +
                        std::to_string(dim * dim));
    return {GateKind::DenseUnitary, std::move(qubits), 0.0, std::move(matrix)};
}

GateOp GateOp::dense_unitary(std::vector<std::uint32_t> qubits, std::vector<cdouble> matrix) {
    GateOp op = dense_unitary_unchecked(std::move(qubits), std::move(matrix));
    const std::uint64_t dim = std::uint64_t(1) << op.qubits.size();
    // ||U+U - I||_max
    double worst = 0.0;
    for (std::uint64_t r = 0; r < dim; ++r) {
        for (std::uint64_t c = 0; c < dim; ++c) {
            cdouble acc = 0.0;
            for (std::uint64_t k = 0; k < dim; ++k)
                acc += std::conj(op.matrix[k * dim + r]) * op.matrix[k * dim + c];
            if (r == c)
                acc -= 1.0;
            worst = std::max(worst, std::abs(acc));
        }
    }
    if (worst > kUnitarityTolerance)
        throw Error(Errc::NonUnitaryMatrix,
                    "||U+U - I||_max = " + std::to_string(worst));
    return op;
}

std::uint32_t GateOp::max_qubit() const {
    return *std::max_element(qubits.begin(), qubits.end());
}

} // namespace qpm
