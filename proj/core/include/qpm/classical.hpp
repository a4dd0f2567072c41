#pragma once

#include <cstdint>
#include <vector>

#include "qpm/dna.hpp"

namespace qpm {

struct ClassicalAlignment {
    std::vector<std::uint32_t> distances; // per window start index
    std::uint32_t min_distance = 0;
    std::vector<std::uint32_t> min_indices; // ascending argmin set
};

// Brute-force scan of all N-M+1 windows; ground truth for the quantum
// pipeline and for randomized-search verification.
ClassicalAlignment classical_align(const Dna& reference, const Dna& query);

} // namespace qpm
