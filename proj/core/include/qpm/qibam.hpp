#pragma once

#include <cstdint>
#include <map>
#include <variant>
#include <vector>

#include "qpm/classical.hpp"
#include "qpm/dna.hpp"
#include "qpm/statevector.hpp"

namespace qpm {

// Binomial query state over d data qubits: amplitude at basis x is
// sqrt(gamma^h * (1-gamma)^(d-h)) with h = popcount(x XOR center). Smaller
// gamma concentrates the state on the center; gamma = 0.5 is flat.
struct DistributedQuery {
    std::uint32_t d = 1;
    double gamma = 0.25;
    std::uint64_t center = 0;
};

// The 2^d amplitudes of the query state (all non-negative reals).
std::vector<double> query_state(const DistributedQuery& q);

// Reflection I - 2|b><b| about the query state, as a dense unitary acting
// on data qubits first_qubit .. first_qubit+d-1. d <= 12 (dense ceiling).
GateOp build_query_oracle(const DistributedQuery& q, std::uint32_t first_qubit = 0);

// Phase flip of exactly the stored memories at their post-evolution
// locations: for each stored (tag i, pattern), a controlled phase of pi on
// the joint basis state (tag = i, data = pattern XOR encode(query)), with X
// dressing on the zero bits. Applying the list twice is the identity.
std::vector<GateOp> build_memory_oracle(const QuantumDatabase& db, const Dna& query);

// Inversion about the mean, 2|s><s| - I over all num_qubits, as gates:
// H all, X all, controlled phase pi on all, X all, H all. The circuit
// realizes the negative of the operator; the global phase is unobservable.
std::vector<GateOp> build_diffusion(std::uint32_t num_qubits);

// floor(pi/4 * sqrt(space_size / num_solutions)), the optimal iteration
// count for amplifying num_solutions marked states out of space_size.
std::uint64_t grover_iterations(std::uint64_t space_size, std::uint64_t num_solutions);

enum class Schedule {
    SingleQuery,   // query-oracle reflection every iteration
    EzhovTwoPhase, // query-oracle reflection once, memory oracle thereafter
};

struct Fixed {
    std::uint64_t k = 1;
    bool operator==(const Fixed&) const = default;
};
struct AutoKnown {
    std::uint64_t num_solutions = 1;
    bool operator==(const AutoKnown&) const = default;
};
struct BoyerRandomized {
    std::uint32_t max_rounds = 30;
    std::uint64_t seed = 0;
    bool operator==(const BoyerRandomized&) const = default;
};
using IterationPolicy = std::variant<Fixed, AutoKnown, BoyerRandomized>;

struct QueryConfig {
    double gamma = 0.25;
    Schedule schedule = Schedule::EzhovTwoPhase;
    IterationPolicy iterations = Fixed{1};
    std::uint64_t shots = 1024;
    std::uint64_t seed = 0;
};

struct AlignmentResult {
    std::vector<double> tag_probabilities;            // exact, 2^{q_t} entries
    Histogram histogram;                              // sampled tag counts
    std::vector<std::uint32_t> ranking;               // all tags, by probability
                                                      // desc, ties by lower tag
    std::map<std::uint32_t, std::uint32_t> classical_distances; // stored tags only
    std::uint32_t best_index = 0;                     // argmax over stored tags
};

// Full alignment pipeline:
//
//   1. database init (tag Hadamards + pattern load) and Hamming evolution,
//      leaving each stored tag entangled with its mismatch bitmask;
//   2. k amplification iterations, each a query-oracle (or, from the second
//      EzhovTwoPhase iteration on, memory-oracle) reflection followed by a
//      reflection about the prepared initial state. Reflecting about the
//      memory state rather than the uniform state is what transfers
//      amplitude toward tags whose mismatch mask is close to zero; it is
//      circuit-equivalent to U_init (2|0><0| - I) U_init' and is applied
//      here in its algebraic form 2|psi0><psi0| - psi;
//   3. exact tag marginal, seeded shot sampling, ranking against classical
//      ground truth.
//
// k comes from cfg.iterations: Fixed(k) as given (k = 0 samples the bare
// initial state), AutoKnown(s) = grover_iterations(2^{q_t}, s). The
// randomized policy is driven by boyer_search, not align.
AlignmentResult align(const Dna& reference, const Dna& query, const QueryConfig& cfg,
                      const std::vector<std::uint32_t>& exclusions = {});

struct BoyerResult {
    std::uint64_t tag = 0;
    bool verified = false;
    std::uint32_t rounds = 0;
};

// Randomized iteration search for an unknown solution count: round r draws
// k uniformly from [0, ceil(m_r)) with m_1 = 1 and m_{r+1} = min(6/5 m_r,
// sqrt(2^{q_t})), runs align with Fixed(k), measures one tag and verifies
// it classically (its window distance must equal the classical minimum).
// Stops at the first verified tag; after max_rounds unverified rounds,
// returns the measured tag with the best classical distance, flagged
// unverified. Deterministic per cfg seed. max_rounds = 0 throws
// MaxRoundsExceeded.
BoyerResult boyer_search(const Dna& reference, const Dna& query, const QueryConfig& cfg);

} // namespace qpm
