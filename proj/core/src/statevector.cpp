#include "qpm/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <unordered_set>

#include "qpm/rng.hpp"

namespace qpm {

namespace {

// One-qubit unitary [[u00 u01] [u10 u11]] on qubit q: pairs (i, i+stride)
// with stride = 2^q, walked in blocks so each pair is touched once.
void apply_one_qubit(std::vector<cdouble>& amp, std::uint32_t q, cdouble u00, cdouble u01,
                     cdouble u10, cdouble u11) {
    const std::uint64_t stride = std::uint64_t(1) << q;
    const std::uint64_t dim = amp.size();
    for (std::uint64_t base = 0; base < dim; base += 2 * stride) {
        for (std::uint64_t i = base; i < base + stride; ++i) {
            const cdouble a0 = amp[i];
            const cdouble a1 = amp[i + stride];
            amp[i] = u00 * a0 + u01 * a1;
            amp[i + stride] = u10 * a0 + u11 * a1;
        }
    }
}

void check_qubits(const std::vector<std::uint32_t>& qubits, std::uint32_t num_qubits) {
    std::unordered_set<std::uint32_t> seen;
    for (auto q : qubits) {
        if (q >= num_qubits)
            throw Error(Errc::InvalidQubitIndex,
                        "qubit " + std::to_string(q) + " out of range for " +
                            std::to_string(num_qubits) + " qubits");
        if (!seen.insert(q).second)
            throw Error(Errc::DuplicateQubitIndex, "qubit " + std::to_string(q) + " listed twice");
    }
}

} // namespace

StateVector::StateVector(std::uint32_t num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits)
        throw Error(Errc::QubitCountOutOfRange,
                    std::to_string(num_qubits) + " qubits (supported: 1.." +
                        std::to_string(kMaxQubits) + ")");
    num_qubits_ = num_qubits;
    amp_.assign(std::uint64_t(1) << num_qubits, cdouble(0.0));
    amp_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(std::vector<cdouble> amplitudes) {
    const std::uint64_t dim = amplitudes.size();
    if (dim < 2 || !std::has_single_bit(dim) ||
        std::bit_width(dim) - 1 > static_cast<int>(kMaxQubits))
        throw Error(Errc::QubitCountOutOfRange,
                    "amplitude vector of size " + std::to_string(dim));
    StateVector s;
    s.num_qubits_ = static_cast<std::uint32_t>(std::bit_width(dim) - 1);
    s.amp_ = std::move(amplitudes);
    if (std::abs(s.norm() - 1.0) > 1e-10)
        throw Error(Errc::NonUnitaryMatrix, "amplitude vector is not normalized");
    return s;
}

double StateVector::norm() const {
    double acc = 0.0;
    for (const auto& a : amp_)
        acc += std::norm(a);
    return std::sqrt(acc);
}

void StateVector::apply(const GateOp& op) {
    check_qubits(op.qubits, num_qubits_);
    const std::uint64_t dim = amp_.size();

    switch (op.kind) {
    case GateKind::H: {
        const double s = 1.0 / std::numbers::sqrt2;
        apply_one_qubit(amp_, op.qubits[0], s, s, s, -s);
        return;
    }
    case GateKind::X:
        apply_one_qubit(amp_, op.qubits[0], 0.0, 1.0, 1.0, 0.0);
        return;
    case GateKind::Ry: {
        const double c = std::cos(op.angle / 2);
        const double s = std::sin(op.angle / 2);
        apply_one_qubit(amp_, op.qubits[0], c, -s, s, c);
        return;
    }
    case GateKind::Rz: {
        const cdouble em = std::polar(1.0, -op.angle / 2);
        const cdouble ep = std::polar(1.0, op.angle / 2);
        apply_one_qubit(amp_, op.qubits[0], em, 0.0, 0.0, ep);
        return;
    }
    case GateKind::ControlledX: {
        const std::uint64_t target = std::uint64_t(1) << op.qubits.back();
        std::uint64_t cmask = 0;
        for (std::size_t i = 0; i + 1 < op.qubits.size(); ++i)
            cmask |= std::uint64_t(1) << op.qubits[i];
        for (std::uint64_t i = 0; i < dim; ++i)
            if ((i & cmask) == cmask && !(i & target))
                std::swap(amp_[i], amp_[i | target]);
        return;
    }
    case GateKind::ControlledPhase: {
        std::uint64_t mask = 0;
        for (auto q : op.qubits)
            mask |= std::uint64_t(1) << q;
        const cdouble phase = std::polar(1.0, op.angle);
        for (std::uint64_t i = 0; i < dim; ++i)
            if ((i & mask) == mask)
                amp_[i] *= phase;
        return;
    }
    case GateKind::DenseUnitary: {
        const std::uint32_t k = static_cast<std::uint32_t>(op.qubits.size());
        const std::uint64_t sub_dim = std::uint64_t(1) << k;
        std::uint64_t qmask = 0;
        for (auto q : op.qubits)
            qmask |= std::uint64_t(1) << q;
        // Gather each 2^k block (sub-index bit b lives on qubit op.qubits[b]),
        // multiply by the matrix, scatter back.
        std::vector<std::uint64_t> offset(sub_dim);
        for (std::uint64_t j = 0; j < sub_dim; ++j) {
            std::uint64_t off = 0;
            for (std::uint32_t b = 0; b < k; ++b)
                if (j & (std::uint64_t(1) << b))
                    off |= std::uint64_t(1) << op.qubits[b];
            offset[j] = off;
        }
        std::vector<cdouble> sub(sub_dim), out(sub_dim);
        for (std::uint64_t base = 0; base < dim; ++base) {
            if (base & qmask)
                continue;
            for (std::uint64_t j = 0; j < sub_dim; ++j)
                sub[j] = amp_[base | offset[j]];
            for (std::uint64_t r = 0; r < sub_dim; ++r) {
                cdouble acc = 0.0;
                const cdouble* row = &op.matrix[r * sub_dim];
                for (std::uint64_t c = 0; c < sub_dim; ++c)
                    acc += row[c] * sub[c];
                out[r] = acc;
            }
            for (std::uint64_t j = 0; j < sub_dim; ++j)
                amp_[base | offset[j]] = out[j];
        }
        return;
    }
    }
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(amp_.size());
    for (std::size_t i = 0; i < amp_.size(); ++i)
        p[i] = std::norm(amp_[i]);
    return p;
}

std::vector<double> StateVector::marginal(const std::vector<std::uint32_t>& qubits) const {
    check_qubits(qubits, num_qubits_);
    std::vector<double> m(std::uint64_t(1) << qubits.size(), 0.0);
    for (std::uint64_t i = 0; i < amp_.size(); ++i) {
        std::uint64_t outcome = 0;
        for (std::size_t b = 0; b < qubits.size(); ++b)
            outcome |= ((i >> qubits[b]) & 1u) << b;
        m[outcome] += std::norm(amp_[i]);
    }
    return m;
}

Histogram StateVector::sample(const std::vector<std::uint32_t>& qubits, std::uint64_t shots,
                              std::uint64_t seed) const {
    if (shots < 1)
        throw Error(Errc::ZeroShots, "shots must be >= 1");
    const std::vector<double> m = marginal(qubits);
    std::vector<double> cumulative(m.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        acc += m[i];
        cumulative[i] = acc;
    }
    cumulative.back() = 1.0; // guard against accumulated rounding

    Histogram hist;
    for (std::uint64_t s = 0; s < shots; ++s) {
        SplitMix64 rng(mix_seed(seed, s));
        const double u = rng.next_double();
        // First index with cumulative > u; zero-probability outcomes have
        // zero-width intervals and can never be chosen.
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        const auto outcome =
            static_cast<std::uint64_t>(std::distance(cumulative.begin(), it));
        ++hist[std::min<std::uint64_t>(outcome, m.size() - 1)];
    }
    return hist;
}

} // namespace qpm
