#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "qpm/gate.hpp"

namespace qpm {

using Histogram = std::map<std::uint64_t, std::uint64_t>;

// Dense state vector over n qubits: 2^n complex amplitudes, qubit 0 = least
// significant bit of the basis index. Single logical writer; norm stays
// within 1e-10 of 1 after every gate.
class StateVector {
public:
    static constexpr std::uint32_t kMaxQubits = 26; // 2^26 amplitudes = 1 GiB

    // |0...0>
    explicit StateVector(std::uint32_t num_qubits);

    // Adopts an explicit amplitude vector; size must be a power of two
    // within the ceiling and the norm must be 1 within 1e-10.
    static StateVector from_amplitudes(std::vector<cdouble> amplitudes);

    std::uint32_t num_qubits() const { return num_qubits_; }
    std::uint64_t dim() const { return std::uint64_t(1) << num_qubits_; }
    const std::vector<cdouble>& amplitudes() const { return amp_; }
    cdouble amplitude(std::uint64_t basis) const { return amp_[basis]; }

    void apply(const GateOp& op);

    std::vector<double> probabilities() const;

    // Marginal distribution of the listed qubits; the first listed qubit is
    // the least significant bit of the outcome index.
    std::vector<double> marginal(const std::vector<std::uint32_t>& qubits) const;

    // Measurement histogram over the listed qubits. Deterministic: shot s
    // draws from SplitMix64(mix_seed(seed, s)), so the result is independent
    // of evaluation order. Only observed outcomes appear in the map.
    Histogram sample(const std::vector<std::uint32_t>& qubits, std::uint64_t shots,
                     std::uint64_t seed) const;

    double norm() const;

private:
    StateVector() = default;

    std::uint32_t num_qubits_ = 0;
    std::vector<cdouble> amp_;
};

} // namespace qpm
