#pragma once

#include <string>
#include <string_view>

#include "qpm/circuit.hpp"

namespace qpm {

// Text format: a cQASM-1.0 subset.
//
//   version 1.0
//   qubits <N>
//   h q[i] | x q[i] | ry q[i],<angle> | rz q[i],<angle>
//   cnot q[c],q[t] | toffoli q[c1],q[c2],q[t]
//   cX q[c1],...,q[cm],q[t]        extension, m >= 3 controls
//   cphase q[i1],...,q[ik],<angle> extension
//
// '#' starts a comment; blank lines are ignored; whitespace around tokens
// and commas is tolerated. Angles are decimal radians, emitted with 17
// significant digits so doubles round-trip losslessly.

// Throws UnsupportedOpForSerialization if the circuit contains a
// DenseUnitary (the distributed-query oracle stays a simulator-native
// object; it has no gate-level form here).
std::string serialize(const Circuit& circuit);

// Throws ParseError with a 1-based line number: MissingHeader, SyntaxError,
// UnknownGate, QubitOutOfRange.
Circuit parse(std::string_view text);

} // namespace qpm
