#include "qpm/resources.hpp"

#include <bit>

#include "qpm/errors.hpp"

namespace qpm {

namespace {

// ceil(log2(x)) for x >= 1 via the bit width of x-1
std::uint32_t ceil_log2(std::uint64_t x) {
    return x <= 1 ? 0 : static_cast<std::uint32_t>(std::bit_width(x - 1));
}

BigInt pow2(std::uint64_t e) { return BigInt(1) << e; }

} // namespace

ResourceEstimate estimate(std::uint64_t alphabet, std::uint64_t n, std::uint64_t m) {
    if (alphabet < 2 || m < 1 || n <= m)
        throw Error(Errc::InvalidParameters,
                    "need alphabet >= 2, m >= 1, n > m (got alphabet=" +
                        std::to_string(alphabet) + ", n=" + std::to_string(n) +
                        ", m=" + std::to_string(m) + ")");

    ResourceEstimate est;
    const std::uint64_t q_d64 = std::uint64_t(ceil_log2(alphabet)) * m;
    if (q_d64 > 100000)
        throw Error(Errc::InvalidParameters, "read length out of supported range");
    est.q_d = static_cast<std::uint32_t>(q_d64);
    est.q_t = ceil_log2(n - m);
    est.q_total = est.q_d + est.q_t + 1;

    // tag Hadamards, tag-controlled pattern loads (memory count x an average
    // of half the data bits set), with the X dressing counted per memory
    est.init_hamming.h = est.q_t;
    est.init_hamming.c0x = BigInt(est.q_t) * pow2(est.q_t);
    est.init_hamming.cx = (BigInt(est.q_t) * est.q_d + 1) / 2; // rounded to nearest
    est.init_hamming.cx_controls = est.q_t;

    // Shannon decomposition of one dense unitary on q_d qubits
    est.query_qsd = est.q_d == 0 ? BigInt(0)
                                 : 3 * (pow2(2 * (std::uint64_t(est.q_d) - 1)) -
                                        pow2(std::uint64_t(est.q_d) - 1));

    const std::uint32_t joint = est.q_d + est.q_t;
    est.memory_mark.h = 2 * pow2(est.q_t);
    est.memory_mark.c0x = BigInt(m + est.q_t) * pow2(est.q_t);
    est.memory_mark.cx = pow2(est.q_t);
    est.memory_mark.cx_controls = joint - 1;

    est.grover_gate.h = 2 * BigInt(joint) + 2;
    est.grover_gate.c0x = 2 * BigInt(joint);
    est.grover_gate.cx = 1;
    est.grover_gate.cx_controls = joint - 1;

    return est;
}

} // namespace qpm
