#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qpm/errors.hpp"

namespace qpm {

using cdouble = std::complex<double>;

enum class GateKind { H, X, Ry, Rz, ControlledX, ControlledPhase, DenseUnitary };

const char* gate_kind_name(GateKind kind) noexcept;

// One gate application. qubit indices are 0-based and qubit 0 is the least
// significant bit of the basis-state integer, everywhere in this library.
//
// Meaning of the qubits list per kind:
//   H, X, Ry, Rz        one target qubit
//   ControlledX         controls first, target last (empty-control form is
//                       canonicalized to a plain X by the factory)
//   ControlledPhase     the set of qubits that must all be 1 for the phase
//   DenseUnitary        k acted qubits; qubits[0] is the least significant
//                       bit of the 2^k sub-space index
//
// matrix (DenseUnitary only) is row-major, 2^k x 2^k, unitary within 1e-10.
struct GateOp {
    GateKind kind = GateKind::X;
    std::vector<std::uint32_t> qubits;
    double angle = 0.0;
    std::vector<cdouble> matrix;

    static GateOp h(std::uint32_t q);
    static GateOp x(std::uint32_t q);
    static GateOp ry(std::uint32_t q, double angle);
    static GateOp rz(std::uint32_t q, double angle);
    static GateOp controlled_x(std::vector<std::uint32_t> controls, std::uint32_t target);
    static GateOp controlled_phase(std::vector<std::uint32_t> qubits, double angle);
    // Validates ||U+U - I||_max <= 1e-10; O(8^k), intended for k <= 6.
    static GateOp dense_unitary(std::vector<std::uint32_t> qubits, std::vector<cdouble> matrix);
    // For matrices unitary by construction (reflections); skips validation.
    static GateOp dense_unitary_unchecked(std::vector<std::uint32_t> qubits,
                                          std::vector<cdouble> matrix);

    std::uint32_t max_qubit() const;

    // Structural equality: kind, qubits, angle, matrix all bit-identical.
    bool operator==(const GateOp&) const = default;
};

inline constexpr double kUnitarityTolerance = 1e-10;

} // namespace qpm
