#include "qpm/classical.hpp"

#include <algorithm>

namespace qpm {

ClassicalAlignment classical_align(const Dna& reference, const Dna& query) {
    const auto windows = substrings(reference, query.size());
    ClassicalAlignment result;
    result.distances.reserve(windows.size());
    for (const auto& [index, window] : windows)
        result.distances.push_back(hamming_distance(window, query));
    result.min_distance = *std::min_element(result.distances.begin(), result.distances.end());
    for (std::uint32_t i = 0; i < result.distances.size(); ++i)
        if (result.distances[i] == result.min_distance)
            result.min_indices.push_back(i);
    return result;
}

} // namespace qpm
