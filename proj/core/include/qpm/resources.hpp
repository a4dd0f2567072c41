#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace qpm {

using BigInt = boost::multiprecision::cpp_int;

// Gate tally for one pipeline stage: h Hadamards, c0x plain X gates (the
// dressing), cx multi-controlled X or phase gates with cx_controls controls.
struct GateBreakdown {
    BigInt h = 0;
    BigInt c0x = 0;
    BigInt cx = 0;
    std::uint32_t cx_controls = 0;
};

// Closed-form qubit and gate counts for aligning a length-m read against a
// length-n reference over an alphabet of the given size. Exact integers:
// the counts reach 4^99 at genome scale.
struct ResourceEstimate {
    std::uint32_t q_d = 0;     // data qubits, ceil(log2(alphabet)) * m
    std::uint32_t q_t = 0;     // tag qubits, ceil(log2(n - m))
    std::uint32_t q_total = 0; // q_d + q_t + 1 (one ancilla)
    GateBreakdown init_hamming;
    BigInt query_qsd = 0;      // Shannon-decomposition gate count of one
                               // dense data-register unitary
    GateBreakdown memory_mark;
    GateBreakdown grover_gate;
};

// Preconditions: alphabet >= 2, m >= 1, n > m. InvalidParameters otherwise.
// Terms that are averages over random patterns (half the pattern bits set)
// are rounded to the nearest integer.
ResourceEstimate estimate(std::uint64_t alphabet, std::uint64_t n, std::uint64_t m);

} // namespace qpm
