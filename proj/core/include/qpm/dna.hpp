#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qpm/circuit.hpp"

namespace qpm {

// Validated DNA string over {A, C, G, T}; lowercase input is normalized.
class Dna {
public:
    static Dna from_string(std::string_view s); // InvalidBase with offending position

    const std::string& str() const { return bases_; }
    std::uint32_t size() const { return static_cast<std::uint32_t>(bases_.size()); }
    char operator[](std::uint32_t i) const { return bases_[i]; }

    Dna window(std::uint32_t pos, std::uint32_t len) const;

    bool operator==(const Dna&) const = default;

private:
    explicit Dna(std::string bases) : bases_(std::move(bases)) {}
    std::string bases_;
};

// 2 bits per base, A=00 C=01 G=10 T=11, first base in the most significant
// bit pair. This is the one mapping under which the distance-1 neighbor set
// of "CA" is exactly {AA, TA, CG, CC}.
std::uint64_t encode_pattern(const Dna& p);

// popcount(encode(a) XOR encode(b)); distances are over the bit encoding,
// not over symbols, to match the quantum register semantics.
std::uint32_t hamming_distance(const Dna& a, const Dna& b);

// All N-M+1 length-M windows of the reference, with their start indices.
std::vector<std::pair<std::uint32_t, Dna>> substrings(const Dna& reference, std::uint32_t m);

// Register layout of the in-simulator database: tag qubits 0..q_t-1 hold the
// window index, data qubits q_t..q_t+q_d-1 hold the encoded window.
struct QuantumDatabase {
    std::uint32_t q_t = 0;
    std::uint32_t q_d = 0;
    std::vector<std::pair<std::uint32_t, std::uint64_t>> memories; // (tag, encoded bits)

    std::uint32_t num_qubits() const { return q_t + q_d; }
    std::uint64_t tag_space() const { return std::uint64_t(1) << q_t; }
};

// Builds the database for all windows of the reference, minus the window
// indices in exclusions. q_d = 2M; q_t is the smallest count addressing all
// N-M+1 windows (0 when M = N).
QuantumDatabase make_database(const Dna& reference, std::uint32_t m,
                              const std::vector<std::uint32_t>& exclusions = {});

// H on every tag qubit, then per memory a tag-controlled load of the
// pattern bits: each 1-bit gets a multi-controlled X onto its data qubit,
// with X dressing on the tag qubits whose bit of the tag value is 0.
// On |0...0> this prepares amplitude 2^{-q_t/2} on (tag=i, data=pattern_i)
// for stored i and on (tag=j, data=0) for each unstored tag j (the
// spurious memories that come with Hadamard tag initialization).
Circuit build_qpd_circuit(const QuantumDatabase& db);

// The query is classical, so evolving every stored pattern to its XOR with
// the query needs only an X on each data qubit where encode(query) has a 1.
// After this, popcount(data register of tag i) = hamming_distance(window_i,
// query).
Circuit build_hamming_evolution(const Dna& query, const QuantumDatabase& db);

} // namespace qpm
